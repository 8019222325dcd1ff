#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "sifca/errors.hpp"
#include "sifca/routing_cost.hpp"

namespace sifca {
namespace {

constexpr int kMaxTerminals = 6;

std::vector<FullTopology> build_topologies(int k) {
  if (k == 2) return {FullTopology{2, {{0, 1}}}};
  // Start from the star on terminals 0..2 and insert terminal t by splitting
  // each existing edge with the new Steiner slot k + (t - 2).
  std::vector<FullTopology> current{FullTopology{k, {{0, k}, {1, k}, {2, k}}}};
  for (int t = 3; t < k; ++t) {
    const int steiner = k + (t - 2);
    std::vector<FullTopology> next;
    next.reserve(current.size() * current.front().edges.size());
    for (const FullTopology& topo : current) {
      for (std::size_t e = 0; e < topo.edges.size(); ++e) {
        FullTopology grown{k, {}};
        grown.edges.reserve(topo.edges.size() + 2);
        for (std::size_t j = 0; j < topo.edges.size(); ++j) {
          if (j != e) grown.edges.push_back(topo.edges[j]);
        }
        const auto [u, v] = topo.edges[e];
        grown.edges.emplace_back(u, steiner);
        grown.edges.emplace_back(v, steiner);
        grown.edges.emplace_back(t, steiner);
        next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  return current;
}

bool connected(const std::vector<std::uint32_t>& parts) {
  std::uint32_t reached = parts.front();
  std::vector<bool> used(parts.size(), false);
  used[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!used[i] && (parts[i] & reached) != 0) {
        used[i] = true;
        reached |= parts[i];
        grew = true;
      }
    }
  }
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

// Depth-first search over part masks in increasing order, spending a budget of
// sum(|part| - 1) = n - 1.
void extend_plans(std::uint32_t full, int budget, std::uint32_t next_mask,
                  std::vector<std::uint32_t>& parts, std::vector<ConcatenationPlan>& out) {
  if (budget == 0) {
    const std::uint32_t covered =
        std::accumulate(parts.begin(), parts.end(), 0u, std::bit_or<>());
    if (covered == full && connected(parts)) out.push_back({parts});
    return;
  }
  for (std::uint32_t mask = next_mask; mask <= full; ++mask) {
    if ((mask & ~full) != 0) continue;
    const int size = std::popcount(mask);
    if (size < 2 || size - 1 > budget) continue;
    const bool overlaps = std::any_of(parts.begin(), parts.end(), [mask](std::uint32_t p) {
      return std::popcount(p & mask) > 1;
    });
    if (overlaps) continue;
    parts.push_back(mask);
    extend_plans(full, budget - (size - 1), mask + 1, parts, out);
    parts.pop_back();
  }
}

std::vector<ConcatenationPlan> build_plans(int n) {
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<ConcatenationPlan> out;
  std::vector<std::uint32_t> parts;
  extend_plans(full, n - 1, 1u, parts, out);
  return out;
}

void check_range(int k, const char* what) {
  if (k < 2 || k > kMaxTerminals) {
    throw TopologySizeError(std::string(what) + ": terminal count " + std::to_string(k) +
                            " outside [2, 6]");
  }
}

}  // namespace

const std::vector<FullTopology>& enumerate_full_topologies(int k) {
  check_range(k, "enumerate_full_topologies");
  static const auto table = [] {
    std::array<std::vector<FullTopology>, kMaxTerminals + 1> t;
    for (int n = 2; n <= kMaxTerminals; ++n) t[n] = build_topologies(n);
    return t;
  }();
  return table[k];
}

const std::vector<ConcatenationPlan>& enumerate_concatenations(int n) {
  check_range(n, "enumerate_concatenations");
  static const auto table = [] {
    std::array<std::vector<ConcatenationPlan>, kMaxTerminals + 1> t;
    for (int m = 2; m <= kMaxTerminals; ++m) t[m] = build_plans(m);
    return t;
  }();
  return table[n];
}

}  // namespace sifca
