#include "nefwall/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nefwall {

const char* to_string(Conditionality c) {
  switch (c) {
    case Conditionality::unconditional: return "unconditional";
    case Conditionality::requires_nagata: return "requires_nagata";
    case Conditionality::requires_shgh: return "requires_shgh";
  }
  return "?";
}

Rat chi_strict_bound(const Surface& s) { return Rat(Int(s.n()) - 1, 8); }

Int max_steps_from_equal(const Surface& s, const Int& chi_D) {
  if (chi_D < 1) throw std::invalid_argument("max_steps_from_equal needs chi >= 1");
  const Int n(s.n());
  auto admissible = [&](const Int& l) {
    Int rhs = n - 2 * l;
    return rhs > 0 && (8 * chi_D + 1) * n < rhs * rhs;
  };
  if (!admissible(0))
    throw std::invalid_argument("no balanced divisor bound for this chi: bound is empty");
  Int l = 0;
  while (admissible(l + 1)) ++l;
  return l;
}

namespace {

bool supported_n(int n) { return (n >= 10 && n <= 17) || n == 25; }

// Shape dH - mE' - (m-1)E'' with |E''| = k: canonical sorted multiplicities.
Divisor divisor_from_shape(int n, const Int& k, const Int& d, const Int& m) {
  check(k >= 0 && k < n, "shape count out of range");
  std::vector<Int> mult;
  mult.reserve(n);
  for (Int i = 0; i < Int(n) - k; ++i) mult.push_back(m);
  for (Int i = 0; i < k; ++i) mult.push_back(m - 1);
  return Divisor(d, std::move(mult));
}

bool relevant(const Divisor& D) { return D.d() >= 0 && below_nef_wall(D); }

std::optional<std::string> n13_family_label(const Int& k, const std::pair<Int, Int>& fund) {
  auto is = [&](long d, long m) { return fund.first == d && fund.second == m; };
  if (k == 0) {
    if (is(0, 0)) return "I";
    if (is(-3, 0)) return "II";
  } else if (k == 1) {
    if (is(-3, 0)) return "III";
    if (is(0, 0)) return "IV";
  } else if (k == 12) {
    if (is(0, 0)) return "V";
    if (is(-3, 0)) return "VI";
  }
  return std::nullopt;
}

// Chain elements giving effective classes below the nef wall, smallest degree
// first, at most `depth` of them.  Relevant elements recur along the chain
// with period <= 2, so a window of 2*depth + 8 steps each way is exhaustive
// for the first `depth`.
std::vector<std::pair<Int, Int>> relevant_members(const SolutionChain& chain, int n,
                                                  const Int& k, int depth) {
  int window = chain.step.is_identity() ? 0 : 2 * depth + 8;
  std::vector<std::pair<Int, Int>> found;
  for (const auto& [d, m] : chain.expand(window)) {
    Divisor D = divisor_from_shape(n, k, d, m);
    if (relevant(D)) found.push_back({d, m});
  }
  std::sort(found.begin(), found.end());
  for (size_t i = 1; i < found.size(); ++i)
    check(found[i - 1].first < found[i].first, "relevant chain degrees must be distinct");
  if (static_cast<int>(found.size()) > depth) found.resize(depth);
  return found;
}

struct OrbitKey {
  Int d;
  std::vector<Int> m;
  bool operator<(const OrbitKey& o) const { return d != o.d ? d < o.d : m < o.m; }
};

void insert_orbit(std::map<OrbitKey, TypeOrbit>& orbits, TypeOrbit orbit) {
  OrbitKey key{orbit.rep.d(), orbit.rep.m()};
  auto [it, inserted] = orbits.emplace(std::move(key), std::move(orbit));
  check(inserted, "duplicate type orbit produced");
}

// Divisors one anti-rebalancing step from `base`: raise one multiplicity and
// lower another, grouped by value class.
std::vector<Divisor> one_step_unbalancings(const Divisor& base) {
  std::vector<Int> values;
  std::map<Int, int> counts;
  for (const Int& v : base.m())
    if (counts[v]++ == 0) values.push_back(v);

  std::vector<Divisor> out;
  std::set<std::vector<Int>> seen;
  for (const Int& up : values) {
    for (const Int& down : values) {
      if (up == down && counts[up] < 2) continue;
      std::vector<Int> m = base.m();
      size_t ri = m.size(), li = m.size();
      for (size_t i = 0; i < m.size(); ++i) {
        if (ri == m.size() && m[i] == up) {
          ri = i;
          continue;
        }
        if (li == m.size() && m[i] == down) li = i;
      }
      check(ri < m.size() && li < m.size(), "value class disappeared");
      m[ri] += 1;
      m[li] -= 1;
      Divisor cand = Divisor(base.d(), std::move(m)).sorted();
      if (is_balanced(cand)) continue;
      if (seen.insert(cand.m()).second) out.push_back(cand);
    }
  }
  return out;
}

// All orbits with chi(D) exactly chi_val.  Balanced shapes come from the
// quadratic (2d+3)^2 - n(2m+1)^2 + 8km = 8 chi - 8 + (9-n); when chi sits
// below the maximum, divisors one rebalancing step away from a (chi+1)-orbit
// are admitted as well.
std::vector<TypeOrbit> enumerate_chi_exact(const Surface& s, const Int& chi_val, int depth) {
  const int n = s.n();
  const Int C = 8 * chi_val - 8 + 9 - Int(n);
  const Int lmax = max_steps_from_equal(s, chi_val);

  std::set<Int> ks{0};
  for (Int l = 1; l <= lmax; ++l) {
    ks.insert(l);
    ks.insert(Int(n) - l);
  }

  std::map<OrbitKey, TypeOrbit> orbits;
  for (const Int& k : ks) {
    for (const SolutionChain& chain : quad_with_linear(n, k, C, depth)) {
      auto members = relevant_members(chain, n, k, depth);
      if (members.empty()) continue;
      std::optional<std::string> label;
      if (n == 13) {
        label = n13_family_label(k, chain.fundamental);
        check(label.has_value(), "unlabelled n=13 family");
      }
      for (const auto& [d, m] : members) {
        Divisor rep = divisor_from_shape(n, k, d, m);
        check(chi(rep) == chi_val, "enumerated divisor has wrong chi");
        TypeOrbit orbit{rep,   permutation_count(rep),        label, chain,
                        Conditionality::unconditional, wall_t(rep), chi_val};
        insert_orbit(orbits, std::move(orbit));
      }
    }
  }

  // Unbalanced admissions (n = 25, chi = 1: the H - E_i - E_j + E_k family).
  Int chi_max = chi_val;
  while (8 * (chi_max + 1) < Int(n) - 1) ++chi_max;
  Int anti_steps = chi_max - chi_val;
  if (anti_steps > 0) {
    check(anti_steps == 1, "only one unbalancing step is supported (enough for n <= 25)");
    for (const TypeOrbit& base : enumerate_chi_exact(s, chi_val + 1, depth)) {
      for (const Divisor& cand : one_step_unbalancings(base.rep)) {
        if (chi(cand) != chi_val || !relevant(cand)) continue;
        Rebalanced rb = rebalance(cand);
        check(rb.steps == 1 && rb.balanced == base.rep.sorted(),
              "unbalancing must invert one rebalancing step");
        TypeOrbit orbit{cand,         permutation_count(cand),
                        std::nullopt, std::nullopt,
                        Conditionality::unconditional, wall_t(cand),
                        chi_val};
        insert_orbit(orbits, std::move(orbit));
      }
    }
  }

  std::vector<TypeOrbit> out;
  out.reserve(orbits.size());
  for (auto& [key, orbit] : orbits) out.push_back(std::move(orbit));
  return out;
}

void sort_orbits(std::vector<TypeOrbit>& orbits) {
  std::sort(orbits.begin(), orbits.end(), [](const TypeOrbit& a, const TypeOrbit& b) {
    if (a.t != b.t) return b.t < a.t;  // decreasing wall value
    if (a.rep.d() != b.rep.d()) return b.rep.d() < a.rep.d();
    return b.rep.m() < a.rep.m();
  });
}

}  // namespace

std::vector<TypeOrbit> enumerate_types(const Surface& s, const Int& chi_target,
                                       int chain_depth) {
  const int n = s.n();
  if (!supported_n(n))
    throw unsupported_n_error("type classification covers 10 <= n <= 17 and n = 25");
  if (chain_depth < 1) throw std::invalid_argument("chain_depth must be >= 1");
  if (chi_target < 1) throw std::invalid_argument("chi_target must be >= 1");

  Conditionality cond =
      (n == 16 || n == 25) ? Conditionality::unconditional : Conditionality::requires_nagata;

  std::vector<TypeOrbit> all;
  for (Int c = chi_target; 8 * c < Int(n) - 1; ++c) {
    for (TypeOrbit& orbit : enumerate_chi_exact(s, c, chain_depth)) {
      orbit.cond = cond;
      all.push_back(std::move(orbit));
    }
  }
  sort_orbits(all);
  return all;
}

std::vector<TypeOrbit> classify_n13(int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  return enumerate_types(Surface(13), 1, depth);
}

std::vector<TypeOrbit> n25_chi1_table() {
  std::vector<TypeOrbit> rows = enumerate_types(Surface(25), 1, 1);
  check(rows.size() == 9, "n=25 chi>=1 table must have nine orbit rows");
  for (const TypeOrbit& row : rows) {
    check(row.chi_value == chi(row.rep), "table chi column mismatch");
    check(row.t == wall_t(row.rep), "table t column mismatch");
    check(below_nef_wall(row.rep), "table row above the nef wall");
  }
  return rows;
}

bool verify_sufficient(const Divisor& D, const Int& chi_D) {
  if (!is_balanced(D)) throw std::invalid_argument("verify_sufficient needs balanced D");
  for (const Int& v : D.m())
    if (v < 0) throw std::invalid_argument("verify_sufficient needs multiplicities >= 0");
  if (chi(D) != chi_D) throw std::invalid_argument("chi_D does not match chi(D)");
  if (chi_D < 1) throw std::invalid_argument("verify_sufficient needs chi >= 1");

  const Int n(D.n());
  if (!(8 * chi_D < n - 1)) return false;
  Int l = steps_from_equal(D);
  Int rhs = n - 2 * l;
  bool ok = rhs > 0 && (8 * chi_D + 1) * n < rhs * rhs;
  if (ok) check(below_nef_wall(D), "sufficient conditions must force 2B.D < B.K");
  return ok;
}

Int two_b_dot_d(const Divisor& D) {
  Int n(D.n());
  check(is_square(n), "2B.D is integral only for square n");
  return 2 * (isqrt(n) * D.d() - mult_sum(D));
}

}  // namespace nefwall
