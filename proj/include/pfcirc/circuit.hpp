#pragma once

#include "pfcirc/skew.hpp"
#include "pfcirc/tensor.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pfcirc {

enum class Side : uint8_t { Gate, Cogate };

// Per-vertex data.  `rotation` is the planar cyclic order of incident
// edges; `legs` fixes which edge each tensor/matrix position refers to
// (defaults to the rotation order).  Keeping the two separate lets the
// matrix positions follow the curve labels while the embedding stays put.
struct CircuitVertex {
  Side side = Side::Gate;
  std::vector<int> rotation;
  std::optional<std::vector<int>> legs_override;
  std::optional<SkewMatrix> elem;
  std::optional<QubitTensor> general;

  int degree() const { return static_cast<int>(rotation.size()); }
  const std::vector<int>& legs() const { return legs_override ? *legs_override : rotation; }
  bool elementary() const { return elem.has_value(); }
};

// Bijection edges -> 1..|E|, the crossing order of the evaluation curve.
struct EdgeOrder {
  std::vector<int> label_of_edge;  // 1-based labels

  int label(int edge) const { return label_of_edge.at(edge); }
};

class Circuit {
 public:
  int add_vertex(Side side);
  int add_edge(int u, int v);
  void set_rotation(int v, std::vector<int> edges);
  void set_legs(int v, std::vector<int> edges);
  void assign(int v, SkewMatrix m);
  void assign(int v, QubitTensor t);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const CircuitVertex& vertex(int v) const { return vertices_.at(v); }
  const std::pair<int, int>& edge(int e) const { return edges_.at(e); }

  bool connected() const;
  bool all_elementary() const;

  // Structural checks: bipartite across sides, rotations and legs list
  // incident edges exactly once, assignment arities and variances match.
  void validate() const;

 private:
  std::vector<CircuitVertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// The tensor a vertex contributes, leg k bound to legs()[k].
QubitTensor vertex_tensor(const CircuitVertex& vx);

// Derives the edge crossing order of a closed planar curve that separates
// the two vertex classes and crosses every edge once (the Eulerian curve of
// the dual graph).  Requires a connected planar embedding; throws otherwise.
EdgeOrder edge_order_from_embedding(const Circuit& c);

// True when per-side vertex label sets are pairwise non-crossing in the
// cyclic order, the condition under which compiled evaluation matches the
// tensor contraction.
bool order_is_curve_realizable(const Circuit& c, const EdgeOrder& o);

// Rebinds every vertex's legs to increasing label order under o.  Done
// before assigning matrices, it makes the circuit elementary with respect
// to that labeling.
void tie_legs_to_order(Circuit& c, const EdgeOrder& o);

// tie_legs_to_order with the canonical embedding-derived order, returned.
EdgeOrder canonicalize_legs(Circuit& c);

// Folds each side into a single labeled skew matrix via the interleaved
// direct sum.  All assignments must be elementary; where a vertex's leg
// order differs from its label order, the block is rebuilt from the
// vertex tensor and verified exactly (throws if the reordered tensor is
// not elementary).
std::pair<SkewMatrix, SkewMatrix> compile(const Circuit& c, const EdgeOrder& o);

// Pfaffian-kernel evaluation, polynomial in |E|.  Disconnected circuits
// evaluate as the product over components.
Scalar evaluate(const Circuit& c);

// Evaluation against a caller-supplied order; with verify set, cross-checks
// against the brute-force value and throws on mismatch.
Scalar evaluate_with_order(const Circuit& c, const EdgeOrder& o, bool verify = false);

// Full tensor-network contraction (the 2^n pairing); accepts general
// assignments.  Guarded to at most 16 edges per component.
Scalar evaluate_bruteforce(const Circuit& c);

// Returns a copy with vertex v reassigned; arity and variance must match.
Circuit substitute(const Circuit& c, int v, QubitTensor t);

// Number of faces of the embedding (all components combined).
int face_count(const Circuit& c);

}  // namespace pfcirc
