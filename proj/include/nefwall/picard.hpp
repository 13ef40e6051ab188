#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nefwall/numeric.hpp"

namespace nefwall {

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct unsupported_n_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct wall_boundary_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct degenerate_wall_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A statement was requested whose validity rests on a conjecture the caller
// has not opted into.
struct missing_assumption_error : std::runtime_error {
  explicit missing_assumption_error(std::string flag_name)
      : std::runtime_error("result is conditional; pass " + flag_name),
        flag(std::move(flag_name)) {}
  std::string flag;
};

// The blowup of P^2 at n very general points, together with the conjecture
// flags the caller is willing to assume.  SHGH implies Nagata, so setting
// assume_shgh raises assume_nagata as well.
class Surface {
 public:
  explicit Surface(int n, bool assume_shgh = false, bool assume_nagata = false)
      : n_(n), shgh_(assume_shgh), nagata_(assume_nagata || assume_shgh) {
    if (n < 1) throw std::invalid_argument("surface needs n >= 1");
  }
  int n() const { return n_; }
  bool shgh() const { return shgh_; }
  bool nagata() const { return nagata_; }

 private:
  int n_;
  bool shgh_;
  bool nagata_;
};

// Divisor class dH - sum_i m_i E_i on the n-point blowup.  Note the sign
// convention: the exceptional curve E_1 itself is stored with m_1 = -1.
class Divisor {
 public:
  Divisor(Int d, std::vector<Int> m);

  static Divisor zero(int n) { return Divisor(0, std::vector<Int>(n, 0)); }
  // E_i (1-based i).
  static Divisor exceptional(int n, int i);
  // dH - mE, every multiplicity equal to m.
  static Divisor homogeneous(int n, const Int& d, const Int& m) {
    return Divisor(d, std::vector<Int>(n, m));
  }

  int n() const { return static_cast<int>(m_.size()); }
  const Int& d() const { return d_; }
  const std::vector<Int>& m() const { return m_; }

  bool is_zero() const;
  // Some E_i, i.e. exactly one multiplicity equal to -1, rest 0, d = 0.
  bool is_exceptional() const;
  bool has_equal_multiplicities() const;

  // Canonical orbit representative: multiplicities sorted non-increasing.
  Divisor sorted() const;

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator-() const;
  friend Divisor operator*(const Int& c, const Divisor& D);
  bool operator==(const Divisor& o) const { return d_ == o.d_ && m_ == o.m_; }
  bool operator!=(const Divisor& o) const { return !(*this == o); }

  std::string str() const;  // display form, e.g. "15H-5E_1-4E_{2..13}"

 private:
  Int d_;
  std::vector<Int> m_;
};

// Total order on divisors of equal n (degree, then multiplicity vector).
bool lex_less(const Divisor& a, const Divisor& b);

// Intersection pairing for the signature-(1,n) form H^2 = 1, E_i^2 = -1.
Int intersect(const Divisor& a, const Divisor& b);

// K = -3H + E.
Divisor canonical_class(const Surface& s);

// Riemann-Roch Euler characteristic 1 + D.(D-K)/2; evaluated both ways and
// cross-checked.
Int chi(const Divisor& D);

// K - D.
Divisor serre_dual(const Divisor& D);

Int mult_sum(const Divisor& D);

// max(m) - min(m) <= 1.
bool is_balanced(const Divisor& D);

struct Rebalanced {
  Int steps;
  Divisor balanced;  // sorted canonical form
};

// Repeatedly raise a minimal multiplicity and lower a maximal one until the
// divisor is balanced.  The step count does not depend on the choices made.
Rebalanced rebalance(const Divisor& D);

// For balanced D with k entries of value m+1 (k = 0 if all equal): min(k, n-k).
// Throws std::invalid_argument on unbalanced input.
Int steps_from_equal(const Divisor& D);

// Decides 2B.D < B.K for B = sqrt(n)H - E, i.e. sqrt(n)(2d+3) < n + 2*sum(m),
// by sign analysis and integer squaring.
bool below_nef_wall(const Divisor& D);

// t_D = (n + 2*sum(m)) / (2d+3), the unique t with 2A_t.D = A_t.K.
Rat wall_t(const Divisor& D);

// Number of distinct multiplicity vectors in the symmetric-group orbit of m.
Int permutation_count(const Divisor& D);

// Polarization A_t = tH - E.
struct Polarization {
  Rat t;
};

// 2A_t.D - A_t.K = t(2d+3) - (n + 2*sum(m)); vanishes exactly at t = t_D.
Rat wall_form(const Polarization& a, const Divisor& D);

enum class Ampleness { not_ample, ample_if_nagata, ample };

// Ampleness of A_t is recorded conditionally: t <= sqrt(n) is never ample,
// t > sqrt(n) is ample unconditionally for square n and under Nagata
// otherwise.
Ampleness ampleness(const Polarization& a, const Surface& s);

}  // namespace nefwall
