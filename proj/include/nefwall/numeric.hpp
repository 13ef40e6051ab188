#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nefwall {

// Arbitrary-precision integer.  Chain values exceed 10^10 within a couple of
// transform applications, so fixed-width arithmetic is never used in any
// decision path.
using Int = mpz_class;

// floor(sqrt(x)); requires x >= 0.
Int isqrt(const Int& x);
bool is_square(const Int& x);

Int binomial(const Int& n, const Int& k);
Int factorial(unsigned long n);

// Thrown when an internal invariant fails (bad classification state, parity
// violation, non-exact division).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check(bool cond, const char* msg) {
  if (!cond) throw internal_error(msg);
}

// Exact quotient; throws internal_error if b does not divide a.
Int exact_div(const Int& a, const Int& b);

// Exact rational number, always reduced, denominator > 0.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  explicit Rat(const Int& n) : q_(n) {}
  Rat(const Int& num, const Int& den);

  Int num() const { return Int(q_.get_num()); }
  Int den() const { return Int(q_.get_den()); }
  bool is_integer() const { return q_.get_den() == 1; }

  // "num/den", or just "num" when den == 1.
  std::string str() const;

  // Exact parse of "a" or "a/b" (optional leading '-').  Decimal notation is
  // rejected: wall membership is decided by exact comparison.
  static std::optional<Rat> parse(std::string_view s);

  friend Rat operator+(const Rat& a, const Rat& b) { return wrap(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return wrap(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return wrap(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return wrap(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

 private:
  static Rat wrap(mpq_class q) {
    Rat r;
    r.q_ = std::move(q);
    return r;
  }
  mpq_class q_;
};

// Sign of (t - sqrt(n)) for n >= 0, decided by squaring; sqrt(n) is never
// materialized as a float.
int cmp_sqrt(const Rat& t, const Int& n);

}  // namespace nefwall
