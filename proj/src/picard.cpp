#include "nefwall/picard.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nefwall {

Divisor::Divisor(Int d, std::vector<Int> m) : d_(std::move(d)), m_(std::move(m)) {
  if (m_.empty()) throw std::invalid_argument("divisor needs n >= 1 multiplicities");
}

Divisor Divisor::exceptional(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("exceptional index out of range");
  std::vector<Int> m(n, 0);
  m[i - 1] = -1;
  return Divisor(0, std::move(m));
}

bool Divisor::is_zero() const {
  if (d_ != 0) return false;
  return std::all_of(m_.begin(), m_.end(), [](const Int& v) { return v == 0; });
}

bool Divisor::is_exceptional() const {
  if (d_ != 0) return false;
  int minus_ones = 0;
  for (const Int& v : m_) {
    if (v == -1)
      ++minus_ones;
    else if (v != 0)
      return false;
  }
  return minus_ones == 1;
}

bool Divisor::has_equal_multiplicities() const {
  return std::all_of(m_.begin(), m_.end(), [&](const Int& v) { return v == m_.front(); });
}

Divisor Divisor::sorted() const {
  std::vector<Int> m = m_;
  std::sort(m.begin(), m.end(), [](const Int& a, const Int& b) { return a > b; });
  return Divisor(d_, std::move(m));
}

Divisor Divisor::operator+(const Divisor& o) const {
  if (n() != o.n()) throw dimension_error("divisor addition across different surfaces");
  std::vector<Int> m(m_.size());
  for (size_t i = 0; i < m_.size(); ++i) m[i] = m_[i] + o.m_[i];
  return Divisor(d_ + o.d_, std::move(m));
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::operator-() const {
  std::vector<Int> m(m_.size());
  for (size_t i = 0; i < m_.size(); ++i) m[i] = -m_[i];
  return Divisor(-d_, std::move(m));
}

Divisor operator*(const Int& c, const Divisor& D) {
  std::vector<Int> m(D.m_.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = c * D.m_[i];
  return Divisor(c * D.d_, std::move(m));
}

namespace {

// Display groups: nonzero multiplicity values get consecutive E indices in
// descending value order; zero entries stay unnamed.  This matches the
// customary forms "15H-5E_1-4E_{2..13}", "H-E_{1..2}+E_3", "E_1".
struct Group {
  Int value;
  int count;
};

std::string index_range(int lo, int hi, int n) {
  if (lo == 1 && hi == n) return "E";
  if (lo == hi) return "E_" + std::to_string(lo);
  return "E_{" + std::to_string(lo) + ".." + std::to_string(hi) + "}";
}

}  // namespace

std::string Divisor::str() const {
  std::map<Int, int, std::greater<Int>> by_value;
  for (const Int& v : m_)
    if (v != 0) ++by_value[v];

  std::ostringstream out;
  bool wrote = false;
  if (d_ != 0) {
    if (d_ == -1)
      out << "-H";
    else if (d_ == 1)
      out << "H";
    else
      out << d_.get_str() << "H";
    wrote = true;
  }
  int next_index = 1;
  for (const auto& [value, count] : by_value) {
    std::string idx = index_range(next_index, next_index + count - 1, n());
    next_index += count;
    Int coeff = -value;  // the class is dH - sum m_i E_i
    std::string mag = Int(abs(coeff)).get_str();
    if (coeff < 0)
      out << "-";
    else if (wrote)
      out << "+";
    if (mag != "1") out << mag;
    out << idx;
    wrote = true;
  }
  if (!wrote) return "O";
  return out.str();
}

bool lex_less(const Divisor& a, const Divisor& b) {
  if (a.d() != b.d()) return a.d() < b.d();
  return a.m() < b.m();
}

Int intersect(const Divisor& a, const Divisor& b) {
  if (a.n() != b.n()) throw dimension_error("intersection across different surfaces");
  Int r = a.d() * b.d();
  for (int i = 0; i < a.n(); ++i) r -= a.m()[i] * b.m()[i];
  return r;
}

Divisor canonical_class(const Surface& s) {
  return Divisor(-3, std::vector<Int>(s.n(), -1));
}

Int chi(const Divisor& D) {
  Divisor k = canonical_class(Surface(D.n()));
  Int pairing = intersect(D, D - k);
  check(pairing % 2 == 0, "D.(D-K) must be even");
  Int via_rr = 1 + pairing / 2;

  Int via_terms = exact_div((D.d() + 1) * (D.d() + 2), 2);
  for (const Int& mi : D.m()) via_terms -= exact_div(mi * (mi + 1), 2);
  check(via_rr == via_terms, "Riemann-Roch evaluations disagree");
  return via_rr;
}

Divisor serre_dual(const Divisor& D) {
  return canonical_class(Surface(D.n())) - D;
}

Int mult_sum(const Divisor& D) {
  Int s = 0;
  for (const Int& v : D.m()) s += v;
  return s;
}

bool is_balanced(const Divisor& D) {
  auto [lo, hi] = std::minmax_element(D.m().begin(), D.m().end());
  return *hi - *lo <= 1;
}

Rebalanced rebalance(const Divisor& D) {
  const int n = D.n();
  Int total = mult_sum(D);
  Int lo = total / n;
  if (total < 0 && total % n != 0) lo -= 1;  // floor division
  Int r = total - lo * n;
  check(r >= 0 && r < n, "floor division out of range");

  // Balanced target with the same sum: r entries of lo+1, n-r of lo.
  std::vector<Int> target(static_cast<size_t>(n), lo);
  for (size_t i = 0; i < r.get_ui(); ++i) target[i] = lo + 1;

  std::vector<Int> src = D.sorted().m();
  Int steps = 0;
  for (int i = 0; i < n; ++i)
    if (src[i] > target[i]) steps += src[i] - target[i];
  return Rebalanced{steps, Divisor(D.d(), std::move(target))};
}

Int steps_from_equal(const Divisor& D) {
  if (!is_balanced(D)) throw std::invalid_argument("steps_from_equal needs balanced input");
  auto [lo, hi] = std::minmax_element(D.m().begin(), D.m().end());
  if (*lo == *hi) return 0;
  Int k = std::count(D.m().begin(), D.m().end(), *hi);
  Int other = D.n() - k;
  return std::min(k, other);
}

bool below_nef_wall(const Divisor& D) {
  Int q = 2 * D.d() + 3;
  Int rhs = Int(D.n()) + 2 * mult_sum(D);
  check(q != 0, "2d+3 is odd, cannot vanish");
  if (q < 0) {
    if (rhs >= 0) return true;
    return Int(D.n()) * q * q > rhs * rhs;
  }
  if (rhs <= 0) return false;
  return Int(D.n()) * q * q < rhs * rhs;
}

Rat wall_t(const Divisor& D) {
  Int q = 2 * D.d() + 3;
  if (q == 0) throw degenerate_wall_error("no finite wall: 2d+3 = 0");
  return Rat(Int(D.n()) + 2 * mult_sum(D), q);
}

Int permutation_count(const Divisor& D) {
  std::map<Int, unsigned long> counts;
  for (const Int& v : D.m()) ++counts[v];
  Int r = factorial(static_cast<unsigned long>(D.n()));
  for (const auto& [value, count] : counts) r = exact_div(r, factorial(count));
  return r;
}

Rat wall_form(const Polarization& a, const Divisor& D) {
  Rat q(2 * D.d() + 3);
  Rat rhs(Int(D.n()) + 2 * mult_sum(D));
  return a.t * q - rhs;
}

Ampleness ampleness(const Polarization& a, const Surface& s) {
  int c = cmp_sqrt(a.t, Int(s.n()));
  if (c <= 0) return Ampleness::not_ample;
  if (is_square(Int(s.n()))) return Ampleness::ample;
  return s.nagata() ? Ampleness::ample : Ampleness::ample_if_nagata;
}

}  // namespace nefwall
