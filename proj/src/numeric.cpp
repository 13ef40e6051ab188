#include "nefwall/numeric.hpp"

#include <cctype>

namespace nefwall {

Int isqrt(const Int& x) {
  check(x >= 0, "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_square(const Int& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

Int binomial(const Int& n, const Int& k) {
  check(n >= 0 && k >= 0 && k <= n, "binomial out of range");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int exact_div(const Int& a, const Int& b) {
  check(b != 0, "exact_div by zero");
  check(a % b == 0, "exact_div is not exact");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.q_ == 0) throw std::invalid_argument("rational division by zero");
  return Rat::wrap(mpq_class(a.q_ / b.q_));
}

std::string Rat::str() const {
  std::string s = q_.get_num().get_str();
  if (q_.get_den() != 1) {
    s += "/";
    s += q_.get_den().get_str();
  }
  return s;
}

std::optional<Rat> Rat::parse(std::string_view s) {
  auto digits = [](std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string_view::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  if (!digits(num) || !digits(den)) return std::nullopt;
  Int n{std::string(num)};
  Int d{std::string(den)};
  if (d == 0) return std::nullopt;
  if (neg) n = -n;
  return Rat(n, d);
}

int cmp_sqrt(const Rat& t, const Int& n) {
  check(n >= 0, "cmp_sqrt with negative n");
  if (n == 0) {
    if (t.num() < 0) return -1;
    return t.num() == 0 ? 0 : 1;
  }
  if (t.num() <= 0) return -1;  // sqrt(n) > 0
  Int lhs = t.num() * t.num();
  Int rhs = n * t.den() * t.den();
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

}  // namespace nefwall
