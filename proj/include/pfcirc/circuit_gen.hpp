#pragma once

#include "pfcirc/circuit.hpp"
#include "pfcirc/random.hpp"

#include <stdexcept>

namespace pfcirc {

// Planar host-circuit families used by randomized oracle tests.  All
// rotations are planar by construction (trees and unicyclic graphs are
// planar under every rotation; theta chains use mirrored rotations).

// Random matrices against the current leg order.
inline void assign_random_elementary_tied(Circuit& c, Rng& rng, bool full_field = false) {
  for (int v = 0; v < c.vertex_count(); v++)
    c.assign(v, random_skew(rng, SkewMatrix::zero(c.vertex(v).degree()).labels(), full_field, 4));
}

// Ties legs to the canonical curve order first, so the data is elementary
// with respect to the labeling the evaluator uses.
inline void assign_random_elementary(Circuit& c, Rng& rng, bool full_field = false) {
  if (c.connected() && c.edge_count() > 0) canonicalize_legs(c);
  assign_random_elementary_tied(c, rng, full_field);
}

// Alternating path with the given number of edges.
inline Circuit make_path(int edges) {
  Circuit c;
  c.add_vertex(Side::Gate);
  for (int k = 0; k < edges; k++) {
    int v = c.add_vertex(k % 2 == 0 ? Side::Cogate : Side::Gate);
    c.add_edge(v - 1, v);
  }
  return c;
}

inline Circuit make_star(int leaves, Side center_side) {
  Circuit c;
  int center = c.add_vertex(center_side);
  for (int k = 0; k < leaves; k++) {
    int leaf = c.add_vertex(center_side == Side::Gate ? Side::Cogate : Side::Gate);
    c.add_edge(center, leaf);
  }
  return c;
}

inline Circuit make_cycle(int edges) {
  if (edges < 2 || edges % 2) throw std::invalid_argument("make_cycle: need an even cycle");
  Circuit c;
  for (int k = 0; k < edges; k++) c.add_vertex(k % 2 == 0 ? Side::Gate : Side::Cogate);
  for (int k = 0; k < edges; k++) c.add_edge(k, (k + 1) % edges);
  return c;
}

// Two vertices joined by `edges` parallel strands; the far rotation is the
// mirror image of the near one.
inline Circuit make_theta(int edges) {
  Circuit c;
  int u = c.add_vertex(Side::Gate);
  int w = c.add_vertex(Side::Cogate);
  std::vector<int> ids;
  for (int k = 0; k < edges; k++) ids.push_back(c.add_edge(u, w));
  c.set_rotation(w, std::vector<int>(ids.rbegin(), ids.rend()));
  return c;
}

inline Circuit make_random_tree(Rng& rng, int edges) {
  Circuit c;
  c.add_vertex(Side::Gate);
  for (int k = 0; k < edges; k++) {
    int parent = static_cast<int>(rng() % c.vertex_count());
    int v = c.add_vertex(c.vertex(parent).side == Side::Gate ? Side::Cogate : Side::Gate);
    c.add_edge(parent, v);
  }
  return c;
}

// Even cycle with pendant edges attached at random cycle vertices.
inline Circuit make_cycle_with_pendants(Rng& rng, int cycle_edges, int pendants) {
  Circuit c = make_cycle(cycle_edges);
  for (int k = 0; k < pendants; k++) {
    int host = static_cast<int>(rng() % cycle_edges);
    int leaf = c.add_vertex(c.vertex(host).side == Side::Gate ? Side::Cogate : Side::Gate);
    c.add_edge(host, leaf);
  }
  return c;
}

// Random circuit from one of the planar families, with random elementary
// assignments; at most max_edges edges.
inline Circuit make_random_circuit(Rng& rng, int family, int max_edges, bool full_field = false) {
  int budget = std::max(2, max_edges);
  Circuit c;
  switch (family % 6) {
    case 0: c = make_path(2 + static_cast<int>(rng() % (budget - 1))); break;
    case 1: c = make_star(2 + static_cast<int>(rng() % (budget - 1)),
                          rng() % 2 ? Side::Gate : Side::Cogate); break;
    case 2: c = make_cycle(2 * (1 + static_cast<int>(rng() % (budget / 2)))); break;
    case 3: c = make_theta(2 + static_cast<int>(rng() % (budget - 1))); break;
    case 4: c = make_random_tree(rng, 2 + static_cast<int>(rng() % (budget - 1))); break;
    default: {
      int cyc = 2 * (1 + static_cast<int>(rng() % 3));
      cyc = std::min(cyc, budget);
      c = make_cycle_with_pendants(rng, cyc, static_cast<int>(rng() % (budget - cyc + 1)));
      break;
    }
  }
  assign_random_elementary(c, rng, full_field);
  return c;
}

}  // namespace pfcirc
