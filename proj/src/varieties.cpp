#include "pfcirc/varieties.hpp"

#include <algorithm>
#include <bit>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace pfcirc {

namespace {

// #{(x in a, y in b) : y < x} mod 2 -- the sign of merging two sorted index
// sets into one.
int cross_parity(uint32_t a, uint32_t b) {
  int parity = 0;
  for (uint32_t am = a; am; am &= am - 1) {
    int x = std::countr_zero(am);
    parity ^= std::popcount(b & ((uint32_t{1} << x) - 1)) & 1;
  }
  return parity;
}

int insert_parity(uint32_t set, int s) {
  return std::popcount(set & ((uint32_t{1} << s) - 1)) & 1;
}

std::vector<int> mask_to_labels(uint32_t mask) {
  std::vector<int> out;
  for (uint32_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

// Collects like summands (unordered products), divides by the gcd and makes
// the lexicographically first summand positive.
std::optional<GPRelation> finish(uint32_t smask, uint32_t pool,
                                 std::map<std::pair<uint32_t, uint32_t>, long long> acc) {
  GPRelation rel;
  long long g = 0;
  for (auto& [key, c] : acc) g = std::gcd(g, c < 0 ? -c : c);
  if (g == 0) return std::nullopt;  // everything cancelled
  bool flip = false;
  bool first = true;
  for (auto& [key, c] : acc) {
    if (c == 0) continue;
    if (first) {
      flip = c < 0;
      first = false;
    }
    long long v = c / g;
    rel.summands.push_back({key.first, key.second, static_cast<int>(flip ? -v : v)});
  }
  if (rel.summands.empty()) return std::nullopt;
  rel.S = mask_to_labels(smask);
  // |T| = |R| + 4k bookkeeping: pools of size 0 mod 4 take R empty, pools of
  // size 2 mod 4 move their smallest element into R.
  if (std::popcount(pool) % 4 == 0) {
    rel.T = mask_to_labels(pool);
  } else {
    uint32_t low = pool & -pool;
    rel.R = mask_to_labels(low);
    rel.T = mask_to_labels(pool & ~low);
  }
  return rel;
}

// Partition family: ordered partitions of the pool with shuffle signs,
// normalized by 2^{|pool|/2} a_empty a_pool.
std::optional<GPRelation> partition_relation(uint32_t pool) {
  std::map<std::pair<uint32_t, uint32_t>, long long> acc;
  uint32_t a = pool;
  while (true) {
    uint32_t b = pool & ~a;
    long long sign = cross_parity(a, b) ? -1 : 1;
    acc[a <= b ? std::make_pair(a, b) : std::make_pair(b, a)] += sign;
    if (a == 0) break;
    a = (a - 1) & pool;
  }
  acc[{0u, pool}] -= 1LL << (std::popcount(pool) / 2);
  return finish(0, pool, std::move(acc));
}

// Common-spectator family: partitions of the pool, spectator s joining both
// factors, shuffle and insertion signs.
std::optional<GPRelation> spectator_relation(int s, uint32_t pool) {
  std::map<std::pair<uint32_t, uint32_t>, long long> acc;
  const uint32_t sbit = uint32_t{1} << s;
  uint32_t a = pool;
  while (true) {
    uint32_t b = pool & ~a;
    int parity = cross_parity(a, b) ^ insert_parity(a, s) ^ insert_parity(b, s);
    uint32_t ka = a | sbit, kb = b | sbit;
    acc[ka <= kb ? std::make_pair(ka, kb) : std::make_pair(kb, ka)] += parity ? -1 : 1;
    if (a == 0) break;
    a = (a - 1) & pool;
  }
  return finish(sbit, pool, std::move(acc));
}

// Single-exchange family: odd disjoint P, Q; one element moves across.
std::optional<GPRelation> exchange_relation(uint32_t pmask, uint32_t qmask) {
  std::map<std::pair<uint32_t, uint32_t>, long long> acc;
  auto side = [&](uint32_t from, uint32_t to) {
    int pos = 0;
    for (uint32_t m = from; m; m &= m - 1) {
      pos++;
      int x = std::countr_zero(m);
      int parity = (pos + insert_parity(to, x)) & 1;
      uint32_t ka = from & ~(uint32_t{1} << x), kb = to | (uint32_t{1} << x);
      acc[ka <= kb ? std::make_pair(ka, kb) : std::make_pair(kb, ka)] += parity ? -1 : 1;
    }
  };
  side(pmask, qmask);
  side(qmask, pmask);
  return finish(0, pmask | qmask, std::move(acc));
}

using SummandKey = std::vector<std::tuple<uint32_t, uint32_t, int>>;

void append(std::vector<GPRelation>& out, std::set<SummandKey>& seen,
            std::optional<GPRelation> rel) {
  if (!rel) return;
  SummandKey key;
  for (const auto& s : rel->summands) key.emplace_back(s.mask_a, s.mask_b, s.coef);
  if (seen.insert(std::move(key)).second) out.push_back(std::move(*rel));
}

int pool_k(int size) { return size % 4 == 0 ? size / 4 : (size - 2) / 4; }

}  // namespace

Scalar GPRelation::evaluate(std::span<const Scalar> coeffs) const {
  Scalar sum;
  for (const Summand& s : summands) {
    if (coeffs[s.mask_a].is_zero() || coeffs[s.mask_b].is_zero()) continue;
    sum += Scalar(s.coef) * (coeffs[s.mask_a] * coeffs[s.mask_b]);
  }
  return sum;
}

std::string GPRelation::describe() const {
  auto set = [](const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < v.size(); k++) os << (k ? "," : "") << v[k];
    os << "}";
    return os.str();
  };
  std::ostringstream os;
  os << "S=" << set(S) << " R=" << set(R) << " T=" << set(T) << ", " << summands.size()
     << " summands";
  return os.str();
}

std::vector<GPRelation> enumerate_relations(int n, int max_k) {
  if (n > 8) throw std::invalid_argument("enumerate_relations: n > 8 unsupported");
  std::vector<GPRelation> out;
  if (n < 4) return out;
  std::set<SummandKey> seen;
  const uint32_t full = (uint32_t{1} << n) - 1;

  std::vector<std::vector<uint32_t>> pools_by_size(n + 1);
  for (uint32_t pool = 0; pool <= full; pool++) {
    int size = std::popcount(pool);
    if (size >= 4 && size % 2 == 0 && pool_k(size) <= max_k) pools_by_size[size].push_back(pool);
  }

  for (int size = 4; size <= n; size += 2)
    for (uint32_t pool : pools_by_size[size]) append(out, seen, partition_relation(pool));

  for (int size = 4; size + 1 <= n; size += 2)
    if (pool_k(size) <= max_k)
      for (uint32_t pool = 0; pool <= full; pool++) {
        if (std::popcount(pool) != size) continue;
        for (int s = 0; s < n; s++)
          if (!(pool & (uint32_t{1} << s))) append(out, seen, spectator_relation(s, pool));
      }

  for (uint32_t p = 1; p <= full; p++) {
    int psize = std::popcount(p);
    if (!(psize & 1)) continue;
    for (uint32_t q = 1; q <= full; q++) {
      if (p & q) continue;
      int qsize = std::popcount(q);
      if (!(qsize & 1)) continue;
      if (psize < qsize || (psize == qsize && p >= q)) continue;  // dedupe unordered pairs
      int size = psize + qsize;
      if (size < 4 || pool_k(size) > max_k) continue;
      append(out, seen, exchange_relation(p, q));
    }
  }
  return out;
}

namespace {

const std::vector<GPRelation>& relations_for(int n) {
  static std::array<std::vector<GPRelation>, 9> cache;
  static std::array<bool, 9> ready{};
  if (!ready[n]) {
    cache[n] = enumerate_relations(n);
    ready[n] = true;
  }
  return cache[n];
}

MembershipReport check_coeffs(std::vector<Scalar> coeffs, int n, bool cone) {
  MembershipReport rep;
  for (uint32_t mask = 0; mask < coeffs.size(); mask++) {
    if ((std::popcount(mask) & 1) && !coeffs[mask].is_zero()) {
      rep.reason = "nonzero odd-support coefficient";
      return rep;
    }
  }
  if (!cone && !coeffs[0].is_one()) {
    rep.reason = "normalization coefficient is not 1";
    return rep;
  }
  for (const GPRelation& rel : relations_for(n)) {
    Scalar value = rel.evaluate(coeffs);
    if (!value.is_zero()) {
      rep.reason = "violated relation " + rel.describe();
      rep.violated = rel;
      rep.violation_value = std::move(value);
      return rep;
    }
  }
  rep.member = true;
  return rep;
}

}  // namespace

MembershipReport check_gate_membership(const QubitTensor& t, bool cone) {
  if (!t.all_ket()) throw std::invalid_argument("gate membership: expected an all-ket tensor");
  if (t.arity() > 8) throw std::invalid_argument("gate membership: arity > 8 unsupported");
  std::vector<Scalar> coeffs(t.coeff_count());
  for (uint32_t mask = 0; mask < t.coeff_count(); mask++) coeffs[mask] = t.coeff(mask);
  return check_coeffs(std::move(coeffs), t.arity(), cone);
}

MembershipReport check_cogate_membership(const QubitTensor& t, bool cone) {
  if (!t.all_bra()) throw std::invalid_argument("cogate membership: expected an all-bra tensor");
  if (t.arity() > 8) throw std::invalid_argument("cogate membership: arity > 8 unsupported");
  const uint32_t full = static_cast<uint32_t>(t.coeff_count() - 1);
  std::vector<Scalar> coeffs(t.coeff_count());
  for (uint32_t mask = 0; mask < t.coeff_count(); mask++) coeffs[mask] = t.coeff(full ^ mask);
  return check_coeffs(std::move(coeffs), t.arity(), cone);
}

bool is_pfaffian_gate_point(const QubitTensor& t) { return check_gate_membership(t).member; }

bool is_pfaffian_cogate_point(const QubitTensor& t) { return check_cogate_membership(t).member; }

bool is_cone_point(const QubitTensor& t, Side side) {
  return side == Side::Gate ? check_gate_membership(t, true).member
                            : check_cogate_membership(t, true).member;
}

}  // namespace pfcirc
