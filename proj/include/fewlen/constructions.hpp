#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "fewlen/geometry.hpp"
#include "fewlen/structure.hpp"

namespace fewlen {

/// Retry-budget exhaustion or an internal layout failure.
class construction_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ConstructionResult {
  Drawing drawing;
  int claimed_bound = 0;       // guaranteed number of distinct edge lengths
  std::string lemma_tag;       // strategy identifier, e.g. "ngon"
  int measured_classes = 0;    // classify_lengths at the default tolerance
  std::map<std::string, double> metrics;
};

/// K_n on a regular n-gon; exactly floor(n/2) lengths. Requires n >= 3.
ConstructionResult draw_complete_ngon(int n);

/// K_{m,n} (m <= n) on a regular 2n-gon alternating between the colour
/// classes, surplus slots of the small class left empty; ceil(n/2) lengths.
ConstructionResult draw_complete_bipartite_ngon(int m, int n);

/// K_{2,n} on circle intersections around (-1,0) and (1,0) with
/// d = ceil(sqrt(n/2)) seeded radii in (1,2) re-sampled until the point set
/// is in general position; exactly d lengths, strict.
ConstructionResult draw_k2n(int n, uint64_t seed = 0);

/// K_{3,n} with centres (-1,0),(0,0),(1,0) and fixed radii
/// sqrt(1 + i/(d+1)); at most 3d-1 lengths, degenerate-allowed kind.
ConstructionResult draw_k3n(int n);

/// Crossing-free drawing of a tree with all edges unit and no non-adjacent
/// pair at unit distance. Deterministic.
ConstructionResult draw_tree_unit(const Graph& t);

/// Glue d2 onto d1 by identifying d2's vertex v2 with d1's v1, rotating d2
/// about the shared point until the union is a strict drawing (and, when
/// unit_faithful, no cross pair sits at unit distance). Vertices of d2 other
/// than v2 are relabelled to n1, n1+1, ... in increasing original order.
/// Edge lengths of both inputs are preserved.
Drawing paste_drawings(const Drawing& d1, int v1, const Drawing& d2, int v2,
                       bool unit_faithful, std::mt19937_64& rng);

/// Every block drawn as a unit edge or a unit-sided regular polygon, blocks
/// glued at cut vertices; one length, adjacency-faithful. Requires a
/// connected graph with no K4-minus-an-edge minor.
ConstructionResult draw_k4minus_free(const Graph& g, uint64_t seed = 0);

/// Vertices on the unit circle in the order sigma; at most
/// cyclic-width(sigma) lengths, always strict.
ConstructionResult draw_from_ordering(const Graph& g, const VertexOrdering& ord);

/// Replace each quotient vertex by a scaled, globally rotated regular w-gon
/// carrying its part; at most s*l*w*(w-1) + floor(w/2) + l lengths where s, l
/// are the measured slope/length class counts of h_drawing.
ConstructionResult draw_h_partition(const Graph& g, const HPartition& part,
                                    const Drawing& h_drawing, uint64_t seed = 0);

/// Tree drawing with few slopes and few lengths: recursive long-path
/// decomposition, one horizontal path per component, subtrees hung below on
/// a fixed slope palette, two lengths per recursion level. Targets at most
/// max(maxdeg-1, 1) slopes and 2p-1 lengths for the achieved recursion
/// depth p (reported as the pathwidth estimate in metrics).
ConstructionResult draw_tree_bounded(const Graph& t);

/// tree_partition -> draw_tree_bounded on the quotient -> draw_h_partition.
ConstructionResult draw_treewidth_pipeline(const Graph& g, uint64_t seed = 0);

/// Cartesian product drawing: dh is rescaled so its largest length class
/// matches dg's, then rotated; vertex (v,w) sits at pos_g(v) + R(pos_h(w)).
/// At most classes(dg) + classes(dh) - 1 lengths.
ConstructionResult draw_cartesian_product(const Drawing& dg, const Drawing& dh,
                                          uint64_t seed = 0);

}  // namespace fewlen
