#pragma once

#include <utility>
#include <vector>

#include "nefwall/contfrac.hpp"

namespace nefwall {

// Solution of x^2 - n y^2 = N.
struct PellSolution {
  Int x;
  Int y;
};

// Least positive solution of x^2 - n y^2 = 1, read off the continued
// fraction of sqrt(n).
PellSolution pell_fundamental(int n);

// The first `limit` solutions with x, y > 0 of x^2 - n y^2 = N, ascending in
// y, complete.  Seeds are found below the classical fundamental-solution
// bound and closed under the Pell automorphism.
std::vector<PellSolution> gen_pell_positive_solutions(int n, const Int& N, int limit);

// (d, m) |-> (a d + b m + c, e d + f m + g), determinant a f - b e = 1.
struct AffineMap {
  Int a, b, c, e, f, g;

  std::pair<Int, Int> operator()(const std::pair<Int, Int>& p) const {
    return {a * p.first + b * p.second + c, e * p.first + f * p.second + g};
  }
  AffineMap inverse() const;
  bool is_identity() const {
    return a == 1 && b == 0 && c == 0 && e == 0 && f == 1 && g == 0;
  }
};

// The classifying quadratic (2d+3)^2 - n (2m+1)^2 + 8 k m = C in unknowns
// (d, m); k counts the entries carrying the smaller multiplicity m-1 in the
// shape dH - mE' - (m-1)E''.
struct QuadEq {
  int n;
  Int k;
  Int C;

  Int evaluate(const Int& d, const Int& m) const {
    Int u = 2 * d + 3, v = 2 * m + 1;
    return u * u - Int(n) * v * v + 8 * k * m;
  }
  bool satisfied(const std::pair<Int, Int>& dm) const {
    return evaluate(dm.first, dm.second) == C;
  }
};

// One orbit of integer solutions: a fundamental element plus the affine
// transform generating the rest.  Orbits are never materialized; elements are
// produced on demand.  For square n the solution set is finite and each
// solution is its own chain with the identity transform.
struct SolutionChain {
  QuadEq eq;
  std::pair<Int, Int> fundamental;
  AffineMap step;

  std::pair<Int, Int> element(long j) const;
  // Elements j in [-depth, depth]; just the fundamental when step is the
  // identity.
  std::vector<std::pair<Int, Int>> expand(int depth) const;
};

// All solution chains of (2d+3)^2 - n(2m+1)^2 + 8km = C.  Reduction:
// u = 2d+3, v = 2m+1, w = n v - 2k turns the equation into
// w^2 - n u^2 = 4k^2 - 4kn - nC with w = -2k (mod n) and u, v odd.  For
// nonsquare n the reduced Pell form is solved classically; for square n it
// factors as a difference of squares.  `depth` bounds later expansion
// requests and must be >= 1.
std::vector<SolutionChain> quad_with_linear(int n, const Int& k, const Int& C, int depth);

// Applies the chain transform `times` times (negative = inverse); verifies
// the element lies on the chain's quadratic.
std::pair<Int, Int> chain_apply(const SolutionChain& chain, std::pair<Int, Int> element,
                                long times);

}  // namespace nefwall
