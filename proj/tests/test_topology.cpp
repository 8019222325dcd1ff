#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "sifca/errors.hpp"
#include "sifca/routing_cost.hpp"

using namespace sifca;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Canonical form under relabeling of the Steiner slots [k, 2k-2).
EdgeList canonical(const EdgeList& edges, int k) {
  const int s = k - 2;
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList e;
    for (auto [u, v] : edges) {
      const int a = u >= k ? k + perm[u - k] : u;
      const int b = v >= k ? k + perm[v - k] : v;
      e.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(e.begin(), e.end());
    if (first || e < best) best = e;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Prüfer decoding over nodes [0, n).
EdgeList decode(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  EdgeList edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int i = 0; i < n; ++i) {
    if (degree[i] == 1) {
      if (u < 0) {
        u = i;
      } else {
        edges.emplace_back(u, i);
      }
    }
  }
  return edges;
}

// Full topologies as trees whose Prüfer code uses each Steiner label exactly
// twice and no terminal label.
std::set<EdgeList> pruefer_topologies(int k) {
  std::set<EdgeList> out;
  if (k == 2) {
    out.insert({{0, 1}});
    return out;
  }
  std::vector<int> seq;
  for (int s = 0; s < k - 2; ++s) seq.insert(seq.end(), {k + s, k + s});
  std::sort(seq.begin(), seq.end());
  do {
    out.insert(canonical(decode(seq, 2 * k - 2), k));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

long double_factorial(int n) { return n <= 1 ? 1 : n * double_factorial(n - 2); }

// Plans by splitting at one shared terminal, deduplicated.
std::set<std::multiset<std::uint32_t>> split_plans(std::uint32_t set,
                                                  std::map<std::uint32_t, std::set<std::multiset<std::uint32_t>>>& memo) {
  if (auto it = memo.find(set); it != memo.end()) return it->second;
  std::set<std::multiset<std::uint32_t>> out{{set}};
  for (int v = 0; v < 32; ++v) {
    if (!(set >> v & 1u)) continue;
    const std::uint32_t rest = set & ~(1u << v);
    for (std::uint32_t a = (rest - 1) & rest; a > 0; a = (a - 1) & rest) {
      const std::uint32_t s1 = a | (1u << v);
      const std::uint32_t s2 = (rest & ~a) | (1u << v);
      for (const auto& p1 : split_plans(s1, memo)) {
        for (const auto& p2 : split_plans(s2, memo)) {
          auto merged = p1;
          merged.insert(p2.begin(), p2.end());
          out.insert(merged);
        }
      }
    }
  }
  memo[set] = out;
  return out;
}

long stirling2(int n, int k) {
  if (n == k) return 1;
  if (k == 0 || k > n) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

}  // namespace

TEST_CASE("full topology counts") {
  CHECK(enumerate_full_topologies(2).size() == 1);
  CHECK(enumerate_full_topologies(3).size() == 1);
  CHECK(enumerate_full_topologies(4).size() == 3);
  CHECK(enumerate_full_topologies(5).size() == 15);
  CHECK(enumerate_full_topologies(6).size() == 105);
  for (int k = 3; k <= 6; ++k) {
    CHECK(static_cast<long>(enumerate_full_topologies(k).size()) == double_factorial(2 * k - 5));
  }
  CHECK_THROWS_AS(enumerate_full_topologies(1), TopologySizeError);
  CHECK_THROWS_AS(enumerate_full_topologies(7), TopologySizeError);
}

TEST_CASE("full topologies are degree-exact trees") {
  for (int k = 2; k <= 6; ++k) {
    for (const auto& t : enumerate_full_topologies(k)) {
      const int n = k + t.steiner_count();
      CHECK(t.terminal_count == k);
      CHECK(static_cast<int>(t.edges.size()) == n - 1);
      std::vector<int> degree(n, 0);
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (auto [u, v] : t.edges) {
        ++degree[u];
        ++degree[v];
        parent[find(u)] = find(v);
      }
      for (int i = 0; i < n; ++i) {
        CHECK(degree[i] == (i < k ? 1 : 3));
        CHECK(find(i) == find(0));
      }
    }
  }
}

TEST_CASE("full topologies match the Prüfer-code generator exactly") {
  for (int k = 2; k <= 6; ++k) {
    std::set<EdgeList> mine;
    for (const auto& t : enumerate_full_topologies(k)) mine.insert(canonical(t.edges, k));
    CHECK(mine.size() == enumerate_full_topologies(k).size());  // no duplicates
    CHECK(mine == pruefer_topologies(k));
  }
}

TEST_CASE("concatenation plan counts") {
  CHECK(enumerate_concatenations(2).size() == 1);
  CHECK(enumerate_concatenations(3).size() == 4);
  CHECK(enumerate_concatenations(4).size() == 29);
  CHECK(enumerate_concatenations(5).size() == 311);
  CHECK(enumerate_concatenations(6).size() == 4447);
  for (int n = 2; n <= 6; ++n) {
    long expected = 0;
    long power = 1;
    for (int k = 1; k <= n - 1; ++k) {
      expected += stirling2(n - 1, k) * power;
      power *= n;
    }
    CHECK(static_cast<long>(enumerate_concatenations(n).size()) == expected);
  }
  CHECK_THROWS_AS(enumerate_concatenations(7), TopologySizeError);
}

TEST_CASE("concatenation plans match the split-recursion generator") {
  for (int n = 2; n <= 6; ++n) {
    std::map<std::uint32_t, std::set<std::multiset<std::uint32_t>>> memo;
    const auto expected = split_plans((1u << n) - 1, memo);
    std::set<std::multiset<std::uint32_t>> mine;
    for (const auto& p : enumerate_concatenations(n)) {
      mine.insert(std::multiset<std::uint32_t>(p.parts.begin(), p.parts.end()));
      int budget = 0;
      for (auto part : p.parts) {
        CHECK(std::popcount(part) >= 2);
        budget += std::popcount(part) - 1;
      }
      CHECK(budget == n - 1);
      for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (std::size_t j = i + 1; j < p.parts.size(); ++j)
          CHECK(std::popcount(p.parts[i] & p.parts[j]) <= 1);
    }
    CHECK(mine.size() == enumerate_concatenations(n).size());
    CHECK(mine == expected);
  }
}
