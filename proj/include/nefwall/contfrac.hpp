#pragma once

#include <vector>

#include "nefwall/picard.hpp"

namespace nefwall {

struct square_input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Periodic continued fraction of sqrt(n), n not a perfect square:
// sqrt(n) = [a0; period repeating].  The last period entry is always 2*a0.
struct CFExpansion {
  Int a0;
  std::vector<Int> period;
};

// Convergent p_k/q_k.  Indexing is 1-based throughout this module, matching
// the convention that the odd convergents of sqrt(n) lie below sqrt(n) and
// the even ones above.  (Most references are 0-based; k here = their k+1.)
struct Convergent {
  int k;
  Int p;
  Int q;
};

// Expansion via the (m, d, a) quadratic-surd recurrence; the period is closed
// on the first repetition of the full surd state, not by the 2*a0 heuristic.
CFExpansion sqrt_cf(const Int& n);

std::vector<Convergent> convergents(const Int& n, int count);

// D_k = ((p_k-3)/2) H - ((q_k-1)/2) E for 10 <= n <= 12 and odd k; asserts
// p_k, q_k odd and chi(D_k) = 1.
Divisor divisor_from_convergent(int n, int k);

}  // namespace nefwall
