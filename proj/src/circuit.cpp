#include "pfcirc/circuit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace pfcirc {

int Circuit::add_vertex(Side side) {
  vertices_.push_back(CircuitVertex{side, {}, std::nullopt, std::nullopt, std::nullopt});
  return vertex_count() - 1;
}

int Circuit::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("Circuit: bad endpoint");
  if (vertices_[u].side == vertices_[v].side)
    throw std::invalid_argument("Circuit: edge must join a gate to a cogate");
  edges_.emplace_back(u, v);
  int e = edge_count() - 1;
  for (int w : {u, v}) {
    vertices_[w].rotation.push_back(e);
    if (vertices_[w].legs_override) vertices_[w].legs_override->push_back(e);
  }
  return e;
}

void Circuit::set_rotation(int v, std::vector<int> edges) {
  vertices_.at(v).rotation = std::move(edges);
}

void Circuit::set_legs(int v, std::vector<int> edges) {
  vertices_.at(v).legs_override = std::move(edges);
}

void Circuit::assign(int v, SkewMatrix m) {
  vertices_.at(v).elem = std::move(m);
  vertices_.at(v).general.reset();
}

void Circuit::assign(int v, QubitTensor t) {
  vertices_.at(v).general = std::move(t);
  vertices_.at(v).elem.reset();
}

bool Circuit::connected() const {
  if (vertex_count() == 0) return true;
  std::vector<bool> seen(vertex_count(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : vertices_[v].rotation) {
      int w = edges_[e].first == v ? edges_[e].second : edges_[e].first;
      if (!seen[w]) {
        seen[w] = true;
        reached++;
        q.push(w);
      }
    }
  }
  return reached == vertex_count();
}

bool Circuit::all_elementary() const {
  for (const CircuitVertex& v : vertices_)
    if (!v.elementary()) return false;
  return true;
}

void Circuit::validate() const {
  std::vector<int> degree(vertex_count(), 0);
  for (int e = 0; e < edge_count(); e++) {
    auto [u, v] = edges_[e];
    if (vertices_[u].side == vertices_[v].side)
      throw std::invalid_argument("Circuit: not bipartite across sides");
    degree[u]++;
    degree[v]++;
  }
  for (int v = 0; v < vertex_count(); v++) {
    const CircuitVertex& vx = vertices_[v];
    for (const std::vector<int>* lst : {&vx.rotation, &vx.legs()}) {
      if (static_cast<int>(lst->size()) != degree[v])
        throw std::invalid_argument("Circuit: edge list size differs from degree");
      std::set<int> seen;
      for (int e : *lst) {
        if (e < 0 || e >= edge_count() || (edges_[e].first != v && edges_[e].second != v))
          throw std::invalid_argument("Circuit: non-incident edge listed");
        if (!seen.insert(e).second) throw std::invalid_argument("Circuit: repeated edge listed");
      }
    }
    if (vx.elem && vx.elem->size() != vx.degree())
      throw std::invalid_argument("Circuit: matrix size differs from degree");
    if (vx.general) {
      if (vx.general->arity() != vx.degree())
        throw std::invalid_argument("Circuit: tensor arity differs from degree");
      bool ok = vx.side == Side::Gate ? vx.general->all_ket() : vx.general->all_bra();
      if (!ok) throw std::invalid_argument("Circuit: tensor variance does not match side");
    }
  }
}

QubitTensor vertex_tensor(const CircuitVertex& vx) {
  if (vx.general) return *vx.general;
  if (!vx.elem) throw std::invalid_argument("Circuit: vertex has no assignment");
  return vx.side == Side::Gate ? sub_pfaffian_gate(*vx.elem) : sub_pfaffian_cogate(*vx.elem);
}

namespace {

// Dart 2e leaves edge(e).first, dart 2e+1 leaves edge(e).second.
struct Embedding {
  std::vector<int> vertex_of;  // dart -> tail vertex
  std::vector<int> rot_next;   // dart -> next out-dart around the tail
  std::vector<int> face_of;    // dart -> face orbit id
  int faces = 0;
};

int out_dart(const Circuit& c, int v, int e) {
  if (c.edge(e).first == v) return 2 * e;
  if (c.edge(e).second == v) return 2 * e + 1;
  throw std::invalid_argument("Circuit: edge not incident to vertex");
}

Embedding build_embedding(const Circuit& c) {
  c.validate();
  const int ndarts = 2 * c.edge_count();
  Embedding emb;
  emb.vertex_of.assign(ndarts, -1);
  emb.rot_next.assign(ndarts, -1);
  for (int v = 0; v < c.vertex_count(); v++) {
    const std::vector<int>& rot = c.vertex(v).rotation;
    for (size_t k = 0; k < rot.size(); k++) {
      int d = out_dart(c, v, rot[k]);
      emb.vertex_of[d] = v;
      emb.rot_next[d] = out_dart(c, v, rot[(k + 1) % rot.size()]);
    }
  }
  emb.face_of.assign(ndarts, -1);
  for (int d0 = 0; d0 < ndarts; d0++) {
    if (emb.face_of[d0] != -1) continue;
    int f = emb.faces++;
    int d = d0;
    do {
      emb.face_of[d] = f;
      d = emb.rot_next[d ^ 1];
    } while (d != d0);
  }
  return emb;
}

// Boundary walk of a thickened spanning tree over the gate/face incidence
// structure: a closed curve around every gate, through faces, crossing each
// edge exactly once.  Emits edge ids in crossing order.
struct CurveWalk {
  const Circuit& c;
  const Embedding& emb;
  std::vector<std::map<int, int>> gate_children;  // gate -> corner dart -> face
  std::vector<std::set<int>> face_children;       // face -> corner darts
  std::vector<int> emission;

  // The corner after out-dart d (between d and rot_next[d]) lies on the
  // face whose boundary turns there, i.e. face_of[twin(d)].
  int corner_face(int d) const { return emb.face_of[d ^ 1]; }

  // Out-darts of v in rotation order, starting from its smallest edge id
  // so the traversal does not depend on where the stored list begins.
  std::vector<int> darts_of(int v) const {
    const std::vector<int>& rot = c.vertex(v).rotation;
    size_t start = std::min_element(rot.begin(), rot.end()) - rot.begin();
    std::vector<int> out;
    for (size_t k = 0; k < rot.size(); k++)
      out.push_back(out_dart(c, v, rot[(start + k) % rot.size()]));
    return out;
  }

  void build_tree(int root_gate) {
    std::vector<bool> gate_seen(c.vertex_count(), false);
    std::vector<bool> face_seen(emb.faces, false);
    gate_children.assign(c.vertex_count(), {});
    face_children.assign(emb.faces, {});
    std::queue<std::pair<bool, int>> q;  // (is_face, id)
    gate_seen[root_gate] = true;
    q.emplace(false, root_gate);
    while (!q.empty()) {
      auto [is_face, id] = q.front();
      q.pop();
      if (!is_face) {
        for (int d : darts_of(id)) {
          int f = corner_face(d);
          if (!face_seen[f]) {
            face_seen[f] = true;
            gate_children[id][d] = f;
            q.emplace(true, f);
          }
        }
      } else {
        int start = -1;
        for (int d = 0; d < 2 * c.edge_count(); d++)
          if (emb.face_of[d] == id) {
            start = d;
            break;
          }
        int x = start;
        do {
          int corner = x ^ 1;
          int v = emb.vertex_of[corner];
          if (c.vertex(v).side == Side::Gate && !gate_seen[v]) {
            gate_seen[v] = true;
            face_children[id].insert(corner);
            q.emplace(false, v);
          }
          x = emb.rot_next[x ^ 1];
        } while (x != start);
      }
    }
  }

  void walk_gate(int g, int first_dart) {
    int d = first_dart;
    for (int step = 0; step < c.vertex(g).degree(); step++) {
      emission.push_back(d / 2);
      auto it = gate_children[g].find(d);
      if (it != gate_children[g].end()) walk_face(it->second, d);
      d = emb.rot_next[d];
    }
  }

  // The junction disk is traversed against the face-orbit direction: with
  // counterclockwise vertex rotations the orbit runs clockwise around the
  // face interior, while the ribbon boundary keeps the tree on its left.
  void walk_face(int f, int enter_corner) {
    int x0 = enter_corner ^ 1;
    std::vector<int> orbit;
    int x = x0;
    do {
      orbit.push_back(x);
      x = emb.rot_next[x ^ 1];
    } while (x != x0);
    for (size_t k = orbit.size() - 1; k >= 1; k--) {
      int corner = orbit[k] ^ 1;
      if (face_children[f].count(corner))
        walk_gate(emb.vertex_of[corner], emb.rot_next[corner]);
    }
  }
};

std::vector<Circuit> components_of(const Circuit& c) {
  std::vector<int> comp(c.vertex_count(), -1);
  int ncomp = 0;
  for (int s = 0; s < c.vertex_count(); s++) {
    if (comp[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : c.vertex(v).rotation) {
        int w = c.edge(e).first == v ? c.edge(e).second : c.edge(e).first;
        if (comp[w] == -1) {
          comp[w] = ncomp;
          q.push(w);
        }
      }
    }
    ncomp++;
  }
  std::vector<Circuit> parts(ncomp);
  std::vector<int> new_vid(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); v++)
    new_vid[v] = parts[comp[v]].add_vertex(c.vertex(v).side);
  std::vector<int> new_eid(c.edge_count());
  for (int e = 0; e < c.edge_count(); e++)
    new_eid[e] = parts[comp[c.edge(e).first]].add_edge(new_vid[c.edge(e).first],
                                                       new_vid[c.edge(e).second]);
  for (int v = 0; v < c.vertex_count(); v++) {
    const CircuitVertex& vx = c.vertex(v);
    Circuit& part = parts[comp[v]];
    std::vector<int> rot;
    for (int e : vx.rotation) rot.push_back(new_eid[e]);
    part.set_rotation(new_vid[v], std::move(rot));
    if (vx.legs_override) {
      std::vector<int> legs;
      for (int e : *vx.legs_override) legs.push_back(new_eid[e]);
      part.set_legs(new_vid[v], std::move(legs));
    }
    if (vx.elem) part.assign(new_vid[v], *vx.elem);
    if (vx.general) part.assign(new_vid[v], *vx.general);
  }
  return parts;
}

}  // namespace

int face_count(const Circuit& c) { return build_embedding(c).faces; }

EdgeOrder edge_order_from_embedding(const Circuit& c) {
  if (!c.connected()) throw std::invalid_argument("edge_order_from_embedding: disconnected circuit");
  EdgeOrder order;
  order.label_of_edge.assign(c.edge_count(), 0);
  if (c.edge_count() == 0) return order;

  Embedding emb = build_embedding(c);
  // a rotation system is planar iff V - E + F = 2
  int euler = c.vertex_count() - c.edge_count() + emb.faces;
  if (euler != 2) throw std::invalid_argument("edge_order_from_embedding: embedding is not planar");

  int root_gate = c.vertex(c.edge(0).first).side == Side::Gate ? c.edge(0).first : c.edge(0).second;
  CurveWalk walk{c, emb, {}, {}, {}};
  walk.build_tree(root_gate);
  walk.walk_gate(root_gate, out_dart(c, root_gate, 0));
  if (static_cast<int>(walk.emission.size()) != c.edge_count())
    throw std::logic_error("edge_order_from_embedding: curve missed edges");
  for (int pos = 0; pos < c.edge_count(); pos++) {
    if (order.label_of_edge[walk.emission[pos]] != 0)
      throw std::logic_error("edge_order_from_embedding: curve crossed an edge twice");
    order.label_of_edge[walk.emission[pos]] = pos + 1;
  }
  if (!order_is_curve_realizable(c, order))
    throw std::logic_error("edge_order_from_embedding: produced a crossing label order");
  return order;
}

bool order_is_curve_realizable(const Circuit& c, const EdgeOrder& o) {
  if (static_cast<int>(o.label_of_edge.size()) != c.edge_count()) return false;
  std::vector<bool> used(c.edge_count() + 1, false);
  for (int e = 0; e < c.edge_count(); e++) {
    int l = o.label_of_edge[e];
    if (l < 1 || l > c.edge_count() || used[l]) return false;
    used[l] = true;
  }
  for (Side side : {Side::Gate, Side::Cogate}) {
    std::vector<std::vector<int>> sets;
    for (int v = 0; v < c.vertex_count(); v++) {
      if (c.vertex(v).side != side) continue;
      std::vector<int> labels;
      for (int e : c.vertex(v).rotation) labels.push_back(o.label(e));
      std::sort(labels.begin(), labels.end());
      if (labels.size() >= 2) sets.push_back(std::move(labels));
    }
    // pairwise cyclic non-crossing: each B must sit inside one cyclic arc
    // between consecutive A elements
    for (size_t i = 0; i < sets.size(); i++)
      for (size_t j = i + 1; j < sets.size(); j++) {
        const std::vector<int>& a = sets[i];
        const std::vector<int>& b = sets[j];
        int first_arc = -2;
        for (int label : b) {
          int arc = static_cast<int>(std::upper_bound(a.begin(), a.end(), label) - a.begin()) %
                    static_cast<int>(a.size());
          if (first_arc == -2)
            first_arc = arc;
          else if (arc != first_arc)
            return false;
        }
      }
  }
  return true;
}

void tie_legs_to_order(Circuit& c, const EdgeOrder& o) {
  for (int v = 0; v < c.vertex_count(); v++) {
    std::vector<int> legs = c.vertex(v).rotation;
    std::sort(legs.begin(), legs.end(),
              [&](int a, int b) { return o.label(a) < o.label(b); });
    c.set_legs(v, std::move(legs));
  }
}

EdgeOrder canonicalize_legs(Circuit& c) {
  EdgeOrder o = edge_order_from_embedding(c);
  tie_legs_to_order(c, o);
  return o;
}

std::pair<SkewMatrix, SkewMatrix> compile(const Circuit& c, const EdgeOrder& o) {
  c.validate();
  SkewMatrix gate_sum, cogate_sum;
  for (int v = 0; v < c.vertex_count(); v++) {
    const CircuitVertex& vx = c.vertex(v);
    if (!vx.elem) throw std::invalid_argument("compile: non-elementary assignment present");
    const int d = vx.degree();
    const std::vector<int>& legs = vx.legs();
    std::vector<int> order(d);  // leg indices sorted by label
    for (int k = 0; k < d; k++) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return o.label(legs[a]) < o.label(legs[b]); });
    std::vector<int> labels(d);
    for (int k = 0; k < d; k++) labels[k] = o.label(legs[order[k]]);

    SkewMatrix block(labels);
    bool identity = true;
    for (int k = 0; k < d; k++) identity = identity && order[k] == k;
    if (identity) {
      for (int a = 0; a < d; a++)
        for (int b = a + 1; b < d; b++) block.set(a, b, vx.elem->at(a, b));
    } else {
      // Rebuild the block from the reordered vertex tensor and insist the
      // result represents it exactly; a leg order incompatible with the
      // labeling has no elementary representative.
      QubitTensor reordered = permute_legs(vertex_tensor(vx), order);
      const uint32_t full = (uint32_t{1} << d) - 1;
      for (int a = 0; a < d; a++)
        for (int b = a + 1; b < d; b++) {
          uint32_t pair = (uint32_t{1} << a) | (uint32_t{1} << b);
          block.set(a, b, reordered.coeff(vx.side == Side::Gate ? pair : full ^ pair));
        }
      QubitTensor check =
          vx.side == Side::Gate ? sub_pfaffian_gate(block) : sub_pfaffian_cogate(block);
      if (!(check == reordered))
        throw std::invalid_argument("compile: leg order incompatible with the labeling");
    }
    (vx.side == Side::Gate ? gate_sum : cogate_sum) =
        interleaved_direct_sum(vx.side == Side::Gate ? gate_sum : cogate_sum, block);
  }
  return {std::move(gate_sum), std::move(cogate_sum)};
}

namespace {

Scalar zero_edge_value(const Circuit& c) {
  Scalar value(1);
  for (int v = 0; v < c.vertex_count(); v++) {
    const CircuitVertex& vx = c.vertex(v);
    if (vx.general) value *= vx.general->coeff(0);
  }
  return value;
}

Scalar evaluate_bruteforce_connected(const Circuit& c) {
  if (c.edge_count() > 16) throw std::invalid_argument("evaluate_bruteforce: more than 16 edges");
  if (c.edge_count() == 0) return zero_edge_value(c);
  std::vector<QubitTensor> tensors;
  tensors.reserve(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); v++) tensors.push_back(vertex_tensor(c.vertex(v)));
  Scalar total;
  const uint32_t nmasks = uint32_t{1} << c.edge_count();
  for (uint32_t live = 0; live < nmasks; live++) {
    Scalar term(1);
    for (int v = 0; v < c.vertex_count() && !term.is_zero(); v++) {
      uint32_t vmask = 0;
      const std::vector<int>& legs = c.vertex(v).legs();
      for (size_t k = 0; k < legs.size(); k++)
        if (live & (uint32_t{1} << legs[k])) vmask |= uint32_t{1} << k;
      term *= tensors[v].coeff(vmask);
    }
    total += term;
  }
  return total;
}

Scalar evaluate_connected(const Circuit& c) {
  if (c.edge_count() == 0) return zero_edge_value(c);
  auto [x, t] = compile(c, edge_order_from_embedding(c));
  return pair_value(x, t);
}

}  // namespace

Scalar evaluate(const Circuit& c) {
  c.validate();
  Scalar value(1);
  for (const Circuit& part : components_of(c)) value *= evaluate_connected(part);
  return value;
}

Scalar evaluate_with_order(const Circuit& c, const EdgeOrder& o, bool verify) {
  auto [x, t] = compile(c, o);
  Scalar value = pair_value(x, t);
  if (verify && value != evaluate_bruteforce(c))
    throw std::runtime_error("evaluate_with_order: order disagrees with the oracle");
  return value;
}

Scalar evaluate_bruteforce(const Circuit& c) {
  c.validate();
  Scalar value(1);
  for (const Circuit& part : components_of(c)) value *= evaluate_bruteforce_connected(part);
  return value;
}

Circuit substitute(const Circuit& c, int v, QubitTensor t) {
  if (t.arity() != c.vertex(v).degree())
    throw std::invalid_argument("substitute: arity differs from degree");
  bool ok = c.vertex(v).side == Side::Gate ? t.all_ket() : t.all_bra();
  if (!ok) throw std::invalid_argument("substitute: variance does not match side");
  Circuit out = c;
  out.assign(v, std::move(t));
  return out;
}

}  // namespace pfcirc
