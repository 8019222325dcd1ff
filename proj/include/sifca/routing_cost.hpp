#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sifca/geometry.hpp"
#include "sifca/model.hpp"

namespace sifca {

/// Full Steiner topology over k terminal slots [0, k) and k-2 Steiner slots
/// [k, 2k-2). Terminal slots have degree 1, Steiner slots degree 3.
struct FullTopology {
  int terminal_count = 0;
  std::vector<std::pair<int, int>> edges;

  int steiner_count() const { return terminal_count > 2 ? terminal_count - 2 : 0; }
};

/// All full topologies on k labeled terminals, 2 <= k <= 6; (2k-5)!! of them.
const std::vector<FullTopology>& enumerate_full_topologies(int k);

/// Edge endpoints index terminals first, then Steiner points:
/// node i < terminals.size() is terminals[i], otherwise
/// steiner_points[i - terminals.size()].
struct TreeEdge {
  int u = 0;
  int v = 0;
  double length = 0.0;
};

struct SteinerTree {
  std::vector<Point> terminals;
  std::vector<Point> steiner_points;
  std::vector<TreeEdge> edges;
  double total_cost = 0.0;
  /// Terminal-index bitmasks of the full components this tree was assembled
  /// from (one entry for a full Steiner tree).
  std::vector<std::uint32_t> components;

  Point node(int i) const;
  int node_count() const { return static_cast<int>(terminals.size() + steiner_points.size()); }
};

struct RelaxationOptions {
  double tolerance = 1e-10;
  long max_passes = 100000;
};

/// Minimizes total length over Steiner slot positions for a fixed topology by
/// moving each slot to the Fermat point of its neighbors until the largest
/// per-pass displacement drops below the tolerance. Collapsed slots show up as
/// zero-length edges. Throws ConvergenceError when the pass cap is reached.
SteinerTree optimize_fst(std::span<const Point> terminals, const FullTopology& topology,
                         const RelaxationOptions& options = {});

/// A tree of full components: each part is a bitmask over terminal labels
/// [0, n), parts share at most one terminal pairwise, sum(|part| - 1) = n - 1,
/// and the parts are connected.
struct ConcatenationPlan {
  std::vector<std::uint32_t> parts;
};

/// Every concatenation plan over n labeled terminals, 2 <= n <= 6, including
/// the single-part plan.
const std::vector<ConcatenationPlan>& enumerate_concatenations(int n);

/// Exact Euclidean Steiner minimal tree for 2..6 distinct terminals: the best
/// concatenation plan, each part costed by its best relaxed full topology.
/// Zero-length edges are contracted in the returned tree.
SteinerTree esmt_oracle(std::span<const Point> points, const RelaxationOptions& options = {});

/// Routing cost for Node Class II, from the oracle.
double esmt_class_ii(const NodeClassIIConfig& cfg);

/// Euclidean minimum spanning tree length.
double mst(std::span<const Point> points);

// ---------------------------------------------------------------------------
// Closed-form Node Class I routing costs.

enum class Case4Subcase { Nondegenerate, BelowBE, AboveBE };
enum class Case5Subcase { Nondegenerate, RightOfAC, LeftOfAC };

const char* to_string(Case4Subcase s);
const char* to_string(Case5Subcase s);

/// How the case-4 and case-5 formulas are read.
///
/// Literal: every formula exactly as published. L_I-4-3 then has a negative
/// radicand ("+4 sin66° cos168°") and evaluates to NaN, and L_I-5-2 repeats
/// L_I-5-1.
/// Repaired: as Literal, except L_I-4-3 subtracts 4 sin66° cos168° like its
/// siblings, which makes it coincide with L_I-4-2.
enum class FormulaReading { Repaired, Literal };

struct ClosedFormOptions {
  FormulaReading reading = FormulaReading::Repaired;
  /// Added to L_I-1; a fault-injection hook for the validation harness.
  double case1_offset = 0.0;
};

struct CaseCostsClassI {
  /// L_I-1 .. L_I-5, cases 4 and 5 at their selected subcase.
  std::array<double, 5> costs{};
  Case4Subcase case4 = Case4Subcase::Nondegenerate;
  Case5Subcase case5 = Case5Subcase::Nondegenerate;
  /// Every subcase formula, regardless of selection.
  std::array<double, 3> case4_forms{};
  std::array<double, 3> case5_forms{};
  double minimum = 0.0;
  /// 1-based case number of the minimum; lowest wins ties.
  int argmin = 1;
};

/// Evaluates the five concatenation cases for a canonical configuration
/// (theta in [0°, 36°]). Throws NonCanonicalAngleError otherwise.
CaseCostsClassI closed_form_class_i(const NodeClassIConfig& cfg,
                                    const ClosedFormOptions& options = {});

/// cos∠BOF as used by the case-4 subcase selection, with the published
/// "8 x" denominator.
double case4_cos_bof(const NodeClassIConfig& cfg);

}  // namespace sifca
