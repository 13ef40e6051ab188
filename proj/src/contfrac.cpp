#include "nefwall/contfrac.hpp"

#include <map>
#include <utility>

namespace nefwall {

CFExpansion sqrt_cf(const Int& n) {
  if (n <= 0) throw std::invalid_argument("sqrt_cf needs n >= 1");
  Int a0 = isqrt(n);
  if (a0 * a0 == n) throw square_input_error("sqrt_cf of a perfect square");

  // Surd state: (m, d) with value (sqrt(n) + m) / d.
  CFExpansion cf;
  cf.a0 = a0;
  Int m = 0, d = 1, a = a0;
  std::map<std::pair<Int, Int>, size_t> seen;
  while (true) {
    m = d * a - m;
    d = exact_div(n - m * m, d);
    a = (a0 + m) / d;
    auto state = std::make_pair(m, d);
    auto it = seen.find(state);
    if (it != seen.end()) {
      check(it->second == 0, "sqrt(n) expansion must be purely periodic after a0");
      break;
    }
    seen.emplace(state, cf.period.size());
    cf.period.push_back(a);
  }
  check(cf.period.back() == 2 * a0, "period of sqrt(n) must end in 2*a0");
  return cf;
}

std::vector<Convergent> convergents(const Int& n, int count) {
  if (count < 1) throw std::invalid_argument("convergents needs count >= 1");
  CFExpansion cf = sqrt_cf(n);

  std::vector<Convergent> out;
  out.reserve(count);
  Int p_prev = 1, q_prev = 0;  // formally p_0/q_0 = 1/0
  Int p = cf.a0, q = 1;
  out.push_back({1, p, q});
  for (int k = 2; k <= count; ++k) {
    const Int& a = cf.period[(k - 2) % cf.period.size()];
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({k, p, q});
  }
  return out;
}

Divisor divisor_from_convergent(int n, int k) {
  if (n < 10 || n > 12)
    throw unsupported_n_error("convergent divisors are defined for 10 <= n <= 12");
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("convergent index must be odd");

  Convergent c = convergents(Int(n), k).back();
  if (c.p % 2 == 0 || c.q % 2 == 0)
    throw internal_error("odd convergent with even p or q: divisor not integral");
  Divisor D = Divisor::homogeneous(n, exact_div(c.p - 3, 2), exact_div(c.q - 1, 2));
  check(chi(D) == 1, "convergent divisor must have chi = 1");
  return D;
}

}  // namespace nefwall
