#include "pfcirc/certs.hpp"

#include "pfcirc/invariant_formulas.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pfcirc {

bool verify_certificate(const Certificate& cert, const std::vector<PolyQ>& gens) {
  PolyQ sum(cert.target.nvars());
  for (const auto& [index, mult] : cert.multipliers) sum = sum + mult * gens.at(index);
  return sum == cert.target;
}

namespace {

using Exponents = PolyQ::Exponents;

void enumerate_monomials(int nvars, int max_degree, const std::vector<int>& vars, bool even_only,
                         std::vector<Exponents>& out) {
  Exponents cur(nvars, 0);
  // depth-first over the allowed variables
  auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
    if (pos == vars.size()) {
      int deg = std::accumulate(cur.begin(), cur.end(), 0);
      if (!even_only || deg % 2 == 0) out.push_back(cur);
      return;
    }
    for (int d = 0; d <= remaining; d++) {
      cur[vars[pos]] = static_cast<uint16_t>(d);
      self(self, pos + 1, remaining - d);
    }
    cur[vars[pos]] = 0;
  };
  rec(rec, 0, max_degree);
}

std::vector<int> variables_used(const std::vector<PolyQ>& polys, const PolyQ& target) {
  std::set<int> used;
  auto scan = [&](const PolyQ& p) {
    for (const auto& [e, c] : p.terms())
      for (int k = 0; k < p.nvars(); k++)
        if (e[k]) used.insert(k);
  };
  for (const PolyQ& p : polys) scan(p);
  scan(target);
  return {used.begin(), used.end()};
}

// Sparse exact Gaussian elimination for A x = b, equations indexed by
// monomials.  Returns any solution.
struct SparseSolver {
  struct Row {
    std::map<int, Rational> lhs;
    Rational rhs = 0;
  };
  std::vector<Row> rows;

  std::optional<std::vector<Rational>> solve(int ncols) {
    std::vector<int> pivot_row_of(ncols, -1);
    std::vector<bool> row_used(rows.size(), false);
    for (int col = 0; col < ncols; col++) {
      int best = -1;
      size_t best_nnz = 0;
      for (size_t r = 0; r < rows.size(); r++) {
        if (row_used[r]) continue;
        auto it = rows[r].lhs.find(col);
        if (it == rows[r].lhs.end() || it->second == 0) continue;
        if (best < 0 || rows[r].lhs.size() < best_nnz) {
          best = static_cast<int>(r);
          best_nnz = rows[r].lhs.size();
        }
      }
      if (best < 0) continue;
      row_used[best] = true;
      pivot_row_of[col] = best;
      Row& prow = rows[best];
      Rational inv = 1 / prow.lhs[col];
      for (auto& [c, v] : prow.lhs) v *= inv;
      prow.rhs *= inv;
      for (size_t r = 0; r < rows.size(); r++) {
        if (static_cast<int>(r) == best) continue;
        auto it = rows[r].lhs.find(col);
        if (it == rows[r].lhs.end()) continue;
        Rational factor = it->second;
        if (factor == 0) {
          rows[r].lhs.erase(it);
          continue;
        }
        for (const auto& [c, v] : prow.lhs) {
          auto jt = rows[r].lhs.emplace(c, 0).first;
          jt->second -= factor * v;
          if (jt->second == 0) rows[r].lhs.erase(jt);
        }
        rows[r].rhs -= factor * prow.rhs;
      }
    }
    for (const Row& r : rows)
      if (r.lhs.empty() && r.rhs != 0) return std::nullopt;  // inconsistent
    std::vector<Rational> x(ncols, 0);
    for (int col = 0; col < ncols; col++)
      if (pivot_row_of[col] >= 0) x[col] = rows[pivot_row_of[col]].rhs;
    return x;
  }
};

}  // namespace

std::optional<Certificate> membership_certificate(const PolyQ& target,
                                                  const std::vector<PolyQ>& gens,
                                                  int degree_bound) {
  if (gens.empty()) return std::nullopt;
  const int nvars = target.nvars();
  for (const PolyQ& g : gens)
    if (g.nvars() != nvars) throw std::invalid_argument("membership_certificate: nvars mismatch");

  bool even_only = target.even_graded();
  for (const PolyQ& g : gens) even_only = even_only && g.even_graded();
  std::vector<int> vars = variables_used(gens, target);

  // columns: (generator, multiplier monomial) pairs
  struct Column {
    int gen;
    Exponents mono;
  };
  std::vector<Column> columns;
  for (size_t i = 0; i < gens.size(); i++) {
    if (gens[i].is_zero()) continue;
    int room = degree_bound - gens[i].total_degree();
    if (room < 0) continue;
    std::vector<Exponents> monos;
    enumerate_monomials(nvars, room, vars, even_only, monos);
    for (Exponents& m : monos) columns.push_back({static_cast<int>(i), std::move(m)});
  }
  if (columns.empty()) return std::nullopt;

  // rows: monomials of the products and of the target
  std::map<Exponents, int, PolyQ::GrlexLess> row_of;
  auto row_index = [&](const Exponents& e) {
    auto [it, inserted] = row_of.emplace(e, static_cast<int>(row_of.size()));
    return it->second;
  };
  std::vector<std::vector<std::pair<int, Rational>>> col_entries(columns.size());
  Exponents prod(nvars);
  for (size_t c = 0; c < columns.size(); c++) {
    const PolyQ& g = gens[columns[c].gen];
    for (const auto& [e, coef] : g.terms()) {
      for (int k = 0; k < nvars; k++) prod[k] = static_cast<uint16_t>(e[k] + columns[c].mono[k]);
      col_entries[c].emplace_back(row_index(prod), coef);
    }
  }

  for (const auto& [e, coef] : target.terms()) row_index(e);
  SparseSolver solver;
  solver.rows.resize(row_of.size());
  for (size_t c = 0; c < columns.size(); c++)
    for (const auto& [r, coef] : col_entries[c]) {
      auto it = solver.rows[r].lhs.emplace(static_cast<int>(c), 0).first;
      it->second += coef;
      if (it->second == 0) solver.rows[r].lhs.erase(it);
    }
  for (const auto& [e, coef] : target.terms()) solver.rows[row_of.at(e)].rhs = coef;

  auto solution = solver.solve(static_cast<int>(columns.size()));
  if (!solution) return std::nullopt;

  std::map<int, PolyQ> mult;
  for (size_t c = 0; c < columns.size(); c++) {
    if ((*solution)[c] == 0) continue;
    auto [it, inserted] = mult.emplace(columns[c].gen, PolyQ(nvars));
    it->second.add_term(columns[c].mono, (*solution)[c]);
  }
  Certificate cert;
  cert.target = target;
  cert.degree_bound = degree_bound;
  for (auto& [gen, p] : mult) cert.multipliers.emplace_back(gen, std::move(p));
  if (!verify_certificate(cert, gens))
    throw std::logic_error("membership_certificate: solver produced an invalid certificate");
  return cert;
}

LinearElimination eliminate_linears(const std::vector<PolyQ>& gens) {
  LinearElimination out;
  std::vector<int> killed;
  for (size_t i = 0; i < gens.size(); i++) {
    const PolyQ& g = gens[i];
    if (g.terms().size() == 1 && g.total_degree() == 1) {
      const auto& e = g.terms().begin()->first;
      int var = -1;
      for (int k = 0; k < g.nvars(); k++)
        if (e[k] == 1) var = k;
      out.eliminated.emplace_back(static_cast<int>(i), var);
      killed.push_back(var);
    }
  }
  for (size_t i = 0; i < gens.size(); i++) {
    bool is_linear = false;
    for (const auto& [gi, var] : out.eliminated) is_linear = is_linear || gi == static_cast<int>(i);
    if (is_linear) continue;
    PolyQ reduced = gens[i];
    for (int var : killed) reduced = reduced.substitute_zero(var);
    out.reduced.push_back(std::move(reduced));
    out.reduced_index.push_back(static_cast<int>(i));
  }
  return out;
}

std::optional<Certificate> membership_certificate_with_elimination(const PolyQ& target,
                                                                   const std::vector<PolyQ>& gens,
                                                                   int degree_bound) {
  LinearElimination elim = eliminate_linears(gens);
  PolyQ reduced_target = target;
  for (const auto& [gi, var] : elim.eliminated) reduced_target = reduced_target.substitute_zero(var);
  auto reduced_cert = membership_certificate(reduced_target, elim.reduced, degree_bound);
  if (!reduced_cert) return std::nullopt;

  Certificate cert;
  cert.target = target;
  cert.degree_bound = degree_bound;
  PolyQ excess(target.nvars());
  for (const auto& [ri, mult] : reduced_cert->multipliers) {
    int gi = elim.reduced_index.at(ri);
    cert.multipliers.emplace_back(gi, mult);
    excess = excess + mult * gens[gi];
  }
  excess = excess - target;
  // what remains is divisible by the eliminated variables; peel them off
  for (const auto& [gi, var] : elim.eliminated) {
    auto [quotient, rest] = excess.split_by_variable(var);
    if (!quotient.is_zero()) {
      const Rational& coef = gens[gi].terms().begin()->second;
      cert.multipliers.emplace_back(gi, quotient.scaled(-1 / coef));
      excess = rest;
    }
  }
  if (!excess.is_zero())
    throw std::logic_error("membership_certificate_with_elimination: lift failed");
  if (!verify_certificate(cert, gens))
    throw std::logic_error("membership_certificate_with_elimination: invalid certificate");
  return cert;
}

namespace {

struct PolyVar {
  int nvars;
  PolyQ operator()(int k) const { return PolyQ::variable(nvars, k - 1); }
};

}  // namespace

std::vector<PolyQ> swap_cogate_generators() {
  const int n = 16;
  PolyVar x{n};
  std::vector<PolyQ> gens;
  gens.push_back(hyperdeterminant_formula<PolyQ>(x) - PolyQ::constant(n, 2));
  gens.push_back(det_l_formula<PolyQ>(x) - PolyQ::constant(n, 1));
  gens.push_back(det_m_formula<PolyQ>(x));
  gens.push_back(det_b_formula<PolyQ>(x));
  // odd-support coordinates: x_{1+mask} for odd-popcount masks
  for (int mask = 0; mask < 16; mask++)
    if (std::popcount(static_cast<unsigned>(mask)) % 2) gens.push_back(x(1 + mask));
  // the quadric difference a0 a1234 - (a12 a34 - a13 a24 + a23 a14)
  gens.push_back(x(1) * x(16) - x(4) * x(13) + x(6) * x(11) - x(7) * x(10));
  return gens;
}

CertSearchResult swap_cogate_certificate(std::vector<int> ladder) {
  CertSearchResult result;
  result.ladder = ladder;
  std::vector<PolyQ> gens = swap_cogate_generators();
  PolyQ one = PolyQ::constant(16, 1);
  for (int d : ladder) {
    auto cert = membership_certificate_with_elimination(one, gens, d);
    if (cert) {
      result.cert = std::move(cert);
      result.degree_used = d;
      return result;
    }
  }
  return result;
}

}  // namespace pfcirc
