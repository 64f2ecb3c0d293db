#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fewlen/geometry.hpp"

namespace fewlen {

/// Edge -> class assignment with target lengths, classes sorted ascending.
struct LengthAssignment {
  std::vector<int> class_of;    // per edge id, values in 0..k-1
  std::vector<double> lengths;  // size k, strictly increasing, positive

  int k() const { return static_cast<int>(lengths.size()); }
  void validate(const Graph& g) const;
};

struct SolveOptions {
  int restarts = 40;
  int descent_iterations = 250;
  int polish_iterations = 60;
  bool optimize_lengths = false;  // the shortest class stays pinned as gauge
  bool require_strict = true;
  bool unit_exclusion = false;    // reject non-adjacent pairs near distance 1
  double unit_band = 1e-3;
  double feasibility_tol = 1e-7;  // residual <= tol * diameter
  uint64_t seed = 0;
  int jobs = 1;
};

struct SearchResult {
  std::optional<Drawing> best_drawing;
  std::optional<int> k_achieved;
  double residual = 0.0;  // max | |p_u - p_v| - length(class(uv)) |
  long long iterations = 0;
  uint64_t seed = 0;
  bool success = false;
  std::string note;
};

/// Minimizes sum_e (|p_u - p_v|^2 - l_{c(e)}^2)^2 by gradient descent with
/// seeded random restarts plus a Levenberg-Marquardt polish. Failure is a
/// result state (success == false), not an error.
SearchResult solve_fixed_assignment(const Graph& g, const LengthAssignment& a,
                                    const SolveOptions& opt);

/// Max residual of a candidate layout under an assignment.
double assignment_max_residual(const Graph& g, const LengthAssignment& a,
                               const std::vector<Point>& pos);

/// Max relative discrepancy between the analytic gradient of the solver
/// objective (positions and lengths) and central finite differences.
double gradient_check(const Graph& g, const LengthAssignment& a,
                      const std::vector<Point>& pos);

struct SearchOptions {
  int k_max = 4;
  long long budget = 300;  // inner-solver invocations across all k
  uint64_t seed = 0;
  int jobs = 1;
  bool unit_exclusion = false;
  bool allow_degenerate = false;
};

/// Upper-bound search: construction-derived drawings first (trees, cycles,
/// blocks of cycles, complete and complete bipartite graphs, vertex-ordering
/// drawings), then simulated annealing over the class assignment with
/// solve_fixed_assignment as the inner solver. Deterministic per
/// (graph, seed, budget).
SearchResult search_min_k(const Graph& g, const SearchOptions& opt);

}  // namespace fewlen
