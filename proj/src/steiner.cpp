#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "sifca/errors.hpp"
#include "sifca/routing_cost.hpp"

namespace sifca {
namespace {

// Edges shorter than this are contracted when reporting a tree.
constexpr double kContractLength = 1e-9;
constexpr double kNearDuplicate = 1e-9;
constexpr double kMaxStretch = 1 << 20;
constexpr int kMedianIterations = 64;
constexpr double kMedianSlack = 1e-9;

std::vector<std::vector<int>> adjacency(const FullTopology& topo) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(topo.terminal_count + topo.steiner_count()));
  for (auto [u, v] : topo.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Start each Steiner slot at a mean of the terminals weighted by 2^-hops, so
// distinct slots start at distinct places.
std::vector<Point> initial_positions(std::span<const Point> terminals, const FullTopology& topo,
                                     const std::vector<std::vector<int>>& adj) {
  const int k = topo.terminal_count;
  const int nodes = k + topo.steiner_count();
  std::vector<Point> pos(static_cast<std::size_t>(nodes));
  std::copy(terminals.begin(), terminals.end(), pos.begin());
  std::vector<int> hops(static_cast<std::size_t>(nodes));
  for (int s = k; s < nodes; ++s) {
    std::fill(hops.begin(), hops.end(), -1);
    std::queue<int> frontier;
    hops[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : adj[u]) {
        if (hops[w] < 0) {
          hops[w] = hops[u] + 1;
          frontier.push(w);
        }
      }
    }
    Point acc{};
    double weight = 0.0;
    for (int t = 0; t < k; ++t) {
      const double w = std::ldexp(1.0, -hops[t]);
      acc = acc + terminals[t] * w;
      weight += w;
    }
    pos[s] = acc / weight;
  }
  return pos;
}

// Geometric median of a small point multiset. A data point is the median when
// the unit pulls toward the others sum to no more than its multiplicity. Four
// points in convex position meet at their diagonal crossing; other inputs fall
// back to Weiszfeld iteration from `start`.
Point geometric_median(std::span<const Point> pts, Point start) {
  for (const Point& p : pts) {
    Point pull{};
    int weight = 0;
    for (const Point& q : pts) {
      const Point d = q - p;
      const double n = d.norm();
      if (n > 0.0) {
        pull = pull + d / n;
      } else {
        ++weight;
      }
    }
    if (pull.norm() <= weight + kMedianSlack) return p;
  }
  if (pts.size() == 4) {
    static constexpr std::array<std::array<int, 4>, 3> kPairings{
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    for (const auto& q : kPairings) {
      const Point a = pts[q[0]];
      const Point ab = pts[q[1]] - a;
      const Point c = pts[q[2]];
      const Point cd = pts[q[3]] - c;
      const double denom = ab.cross(cd);
      if (denom == 0.0) continue;
      const double s = (c - a).cross(cd) / denom;
      const double t = (c - a).cross(ab) / denom;
      if (s >= 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0) return a + ab * s;
    }
  }
  Point x = start;
  for (int iter = 0; iter < kMedianIterations; ++iter) {
    Point num{};
    double den = 0.0;
    for (const Point& p : pts) {
      const double n = distance(x, p);
      if (n == 0.0) return x;
      num = num + p / n;
      den += 1.0 / n;
    }
    const Point next = num / den;
    const double step = distance(next, x);
    x = next;
    if (step <= 1e-13 * (1.0 + x.norm())) break;
  }
  return x;
}

// A connected group of Steiner slots and the outside nodes attached to it.
struct Cluster {
  std::vector<int> members;
  std::vector<std::pair<int, int>> inner;  // edges inside the group
  std::vector<std::pair<int, int>> outer;  // (member, outside neighbour)
};

std::vector<Cluster> steiner_clusters(const FullTopology& topo,
                                      const std::vector<std::vector<int>>& adj) {
  const int k = topo.terminal_count;
  const int ns = topo.steiner_count();
  std::vector<Cluster> out;
  for (std::uint32_t mask = 1; mask < (1u << ns); ++mask) {
    if (std::popcount(mask) < 2) continue;
    auto inside = [&](int node) { return node >= k && (mask & (1u << (node - k))); };
    Cluster c;
    for (int i = 0; i < ns; ++i) {
      if (mask & (1u << i)) c.members.push_back(k + i);
    }
    for (auto [u, v] : topo.edges) {
      if (inside(u) && inside(v)) c.inner.emplace_back(u, v);
    }
    // A subtree of the Steiner slots has exactly |members| - 1 inner edges.
    if (c.inner.size() + 1 != c.members.size()) continue;
    for (int m : c.members) {
      for (int w : adj[m]) {
        if (!inside(w)) c.outer.emplace_back(m, w);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

// Merges nodes joined by (near) zero-length edges. A merged group keeps its
// terminal if it has one, otherwise its lowest Steiner index.
SteinerTree contract(const SteinerTree& raw) {
  const int nt = static_cast<int>(raw.terminals.size());
  DisjointSet sets(raw.node_count());
  for (const TreeEdge& e : raw.edges) {
    if (e.length > kContractLength) continue;
    const int a = sets.find(e.u);
    const int b = sets.find(e.v);
    if (a == b || (a < nt && b < nt)) continue;
    sets.parent[std::max(a, b)] = std::min(a, b);
  }
  SteinerTree out;
  out.terminals = raw.terminals;
  out.components = raw.components;
  std::vector<int> remap(static_cast<std::size_t>(raw.node_count()), -1);
  for (int i = 0; i < nt; ++i) remap[i] = i;
  for (int i = nt; i < raw.node_count(); ++i) {
    if (sets.find(i) == i) {
      remap[i] = nt + static_cast<int>(out.steiner_points.size());
      out.steiner_points.push_back(raw.node(i));
    }
  }
  for (const TreeEdge& e : raw.edges) {
    const int a = remap[sets.find(e.u)];
    const int b = remap[sets.find(e.v)];
    if (a == b) continue;
    const double len = distance(out.node(a), out.node(b));
    out.edges.push_back({std::min(a, b), std::max(a, b), len});
    out.total_cost += len;
  }
  return out;
}

void check_points(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  if (n < 2 || n > 6) {
    throw TopologySizeError("esmt_oracle: " + std::to_string(n) + " points, need 2..6");
  }
  for (int i = 0; i < n; ++i) {
    if (!points[i].finite()) throw Error("esmt_oracle: non-finite coordinate");
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(points[i], points[j]);
      if (d == 0.0) {
        throw DuplicatePointError("esmt_oracle: points " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");
      }
      if (d < kNearDuplicate) {
        throw NearDuplicatePointError("esmt_oracle: points " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are closer than 1e-9");
      }
    }
  }
}

}  // namespace

Point SteinerTree::node(int i) const {
  const int nt = static_cast<int>(terminals.size());
  return i < nt ? terminals[i] : steiner_points[i - nt];
}

SteinerTree optimize_fst(std::span<const Point> terminals, const FullTopology& topology,
                         const RelaxationOptions& options) {
  const int k = topology.terminal_count;
  if (static_cast<int>(terminals.size()) != k) {
    throw TopologySizeError("optimize_fst: terminal count does not match topology");
  }
  if (!(options.tolerance > 0.0)) throw Error("optimize_fst: tolerance must be positive");

  const auto adj = adjacency(topology);
  std::vector<Point> pos = initial_positions(terminals, topology, adj);
  const int nodes = static_cast<int>(pos.size());

  if (k > 2) {
    const std::vector<Cluster> clusters = steiner_clusters(topology, adj);
    auto total = [&](const std::vector<Point>& p) {
      double sum = 0.0;
      for (auto [u, v] : topology.edges) sum += distance(p[u], p[v]);
      return sum;
    };
    std::vector<Point> previous;
    std::vector<Point> trial;
    std::vector<Point> around;

    bool converged = false;
    double current = total(pos);
    for (long pass = 0; pass < options.max_passes; ++pass) {
      previous = pos;
      double largest = 0.0;
      for (int s = k; s < nodes; ++s) {
        const auto& nb = adj[s];
        const Point next = fermat_point(pos[nb[0]], pos[nb[1]], pos[nb[2]]).point;
        largest = std::max(largest, distance(next, pos[s]));
        pos[s] = next;
      }

      // Coincident Steiner slots stop responding to single-slot steps, so a
      // merged group is moved as a whole onto the median of its outside
      // neighbours.
      for (const Cluster& c : clusters) {
        const Point at = pos[c.members.front()];
        const bool merged = std::all_of(c.members.begin(), c.members.end(),
                                        [&](int m) { return pos[m] == at; });
        if (!merged) continue;
        around.clear();
        double before = 0.0;
        for (auto [m, w] : c.outer) {
          before += distance(at, pos[w]);
          around.push_back(pos[w]);
        }
        const Point target = geometric_median(around, at);
        double after = 0.0;
        for (const Point& q : around) after += distance(target, q);
        if (after < before) {
          largest = std::max(largest, distance(target, at));
          for (int m : c.members) pos[m] = target;
        }
      }

      // Every step above is non-increasing, so a pass that fails to shorten
      // the tree has reached a fixed point up to rounding.
      const double after = total(pos);
      if (largest < options.tolerance || !(after < current)) {
        converged = true;
        break;
      }

      // Slots drifting toward a merge advance by tiny steps in a steady
      // direction; extend the pass along that direction while it pays.
      double best = after;
      double chosen = 0.0;
      for (double stretch = 1.0; stretch <= kMaxStretch; stretch *= 2.0) {
        trial = pos;
        for (int s = k; s < nodes; ++s) trial[s] = pos[s] + (pos[s] - previous[s]) * stretch;
        const double cost = total(trial);
        if (!(cost < best)) break;
        best = cost;
        chosen = stretch;
      }
      if (chosen > 0.0) {
        for (int s = k; s < nodes; ++s) pos[s] = pos[s] + (pos[s] - previous[s]) * chosen;
      }
      current = best;
    }
    if (!converged) {
      throw ConvergenceError("optimize_fst: no convergence after " +
                             std::to_string(options.max_passes) + " passes");
    }
  }

  SteinerTree tree;
  tree.terminals.assign(terminals.begin(), terminals.end());
  tree.steiner_points.assign(pos.begin() + k, pos.end());
  tree.components = {(1u << k) - 1u};
  for (auto [u, v] : topology.edges) {
    const double len = distance(pos[u], pos[v]);
    tree.edges.push_back({u, v, len});
    tree.total_cost += len;
  }
  return tree;
}

SteinerTree esmt_oracle(std::span<const Point> points, const RelaxationOptions& options) {
  check_points(points);
  const int n = static_cast<int>(points.size());
  const std::uint32_t full = (1u << n) - 1u;

  // Best full Steiner tree for every subset of at least two terminals.
  std::vector<double> best_cost(full + 1, std::numeric_limits<double>::infinity());
  std::vector<SteinerTree> best_tree(full + 1);
  std::vector<Point> subset;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    if (size < 2) continue;
    subset.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(points[i]);
    }
    for (const FullTopology& topo : enumerate_full_topologies(size)) {
      SteinerTree t = optimize_fst(subset, topo, options);
      if (t.total_cost < best_cost[mask]) {
        best_cost[mask] = t.total_cost;
        best_tree[mask] = std::move(t);
      }
    }
  }

  const auto& plans = enumerate_concatenations(n);
  std::size_t winner = 0;
  double winner_cost = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < plans.size(); ++p) {
    double cost = 0.0;
    for (std::uint32_t part : plans[p].parts) cost += best_cost[part];
    if (cost < winner_cost) {
      winner_cost = cost;
      winner = p;
    }
  }

  SteinerTree raw;
  raw.terminals.assign(points.begin(), points.end());
  raw.components = plans[winner].parts;
  std::vector<std::pair<int, int>> local_edges;
  for (std::uint32_t part : plans[winner].parts) {
    const SteinerTree& t = best_tree[part];
    std::vector<int> global;
    for (int i = 0; i < n; ++i) {
      if (part & (1u << i)) global.push_back(i);
    }
    const int offset = n + static_cast<int>(raw.steiner_points.size());
    const int local_terminals = static_cast<int>(t.terminals.size());
    auto to_global = [&](int local) {
      return local < local_terminals ? global[local] : offset + (local - local_terminals);
    };
    raw.steiner_points.insert(raw.steiner_points.end(), t.steiner_points.begin(),
                              t.steiner_points.end());
    for (const TreeEdge& e : t.edges) {
      raw.edges.push_back({to_global(e.u), to_global(e.v), e.length});
    }
  }
  return contract(raw);
}

double esmt_class_ii(const NodeClassIIConfig& cfg) {
  const auto pts = terminals_class_ii(cfg).points();
  return esmt_oracle(pts).total_cost;
}

double mst(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 2) throw Error("mst: need at least two points");
  std::vector<double> link(n, std::numeric_limits<double>::infinity());
  std::vector<bool> in_tree(n, false);
  link[0] = 0.0;
  double total = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_tree[i] && (best == n || link[i] < link[best])) best = i;
    }
    in_tree[best] = true;
    total += link[best];
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_tree[i]) link[i] = std::min(link[i], distance(points[best], points[i]));
    }
  }
  return total;
}

}  // namespace sifca
