#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nefwall/picard.hpp"
#include "oracle.hpp"

using namespace nefwall;
using namespace nefwall::testing;

namespace {

// 2(sqrt(n) d - M) - (n - 3 sqrt(n)) in 128-bit floating point; the sign must
// agree with the exact decision whenever it is bounded away from zero.
__float128 nef_margin_f128(const Divisor& D) {
  auto sqrt128 = [](__float128 x) {
    __float128 r = __builtin_sqrt(static_cast<double>(x));
    for (int i = 0; i < 4; ++i) r = (r + x / r) / 2;
    return r;
  };
  __float128 rt = sqrt128(static_cast<__float128>(D.n()));
  __float128 d = static_cast<__float128>(D.d().get_d());
  __float128 M = static_cast<__float128>(mult_sum(D).get_d());
  return 2 * (rt * d - M) - (static_cast<__float128>(D.n()) - 3 * rt);
}

}  // namespace

TEST_CASE("intersection pairing") {
  Surface s(10);
  Divisor H = dv(1, std::vector<long>(10, 0));
  CHECK(intersect(H, H) == 1);
  CHECK(intersect(Divisor::exceptional(10, 1), Divisor::exceptional(10, 2)) == 0);
  CHECK(intersect(Divisor::exceptional(10, 1), Divisor::exceptional(10, 1)) == -1);
  CHECK(intersect(H, Divisor::exceptional(10, 1)) == 0);
  Divisor K = canonical_class(s);
  CHECK(intersect(K, K) == -1);  // K^2 = 9 - n
  CHECK_THROWS_AS(intersect(H, Divisor::zero(9)), dimension_error);
}

TEST_CASE("canonical class") {
  CHECK(canonical_class(Surface(10)) == hom(10, -3, -1));
  CHECK(intersect(canonical_class(Surface(25)), canonical_class(Surface(25))) == 9 - 25);
  CHECK(canonical_class(Surface(1)) == dv(-3, {-1}));
}

TEST_CASE("surface invariants") {
  CHECK_THROWS_AS(Surface(0), std::invalid_argument);
  Surface s(12, /*assume_shgh=*/true);
  CHECK(s.shgh());
  CHECK(s.nagata());  // SHGH implies Nagata
  CHECK(!Surface(12).nagata());
}

TEST_CASE("chi on pinned classes") {
  CHECK(chi(Divisor::zero(7)) == 1);
  CHECK(chi(hom(10, 57, 18)) == 1);
  Divisor h_minus_e1 = Divisor(1, [] {
    std::vector<Int> m(25, 0);
    m[0] = 1;
    return m;
  }());
  CHECK(chi(h_minus_e1) == 2);
}

TEST_CASE("serre duality") {
  CHECK(serre_dual(Divisor::zero(10)) == hom(10, -3, -1));
  Divisor D = hom(10, 57, 18);
  CHECK(serre_dual(serre_dual(D)) == D);
  CHECK(chi(serre_dual(D)) == chi(D));
  CHECK(chi(D) == 1);

  RandomDivisors rd;
  for (int i = 0; i < 10000; ++i) {
    Divisor X = rd.divisor(rd.n());
    CHECK(chi(X) == chi(serre_dual(X)));
  }
}

TEST_CASE("bilinearity and symmetry of the pairing") {
  RandomDivisors rd(7);
  for (int i = 0; i < 10000; ++i) {
    int n = rd.n();
    Divisor a = rd.divisor(n), b = rd.divisor(n), c = rd.divisor(n);
    CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
    CHECK(intersect(a, b) == intersect(b, a));
  }
}

TEST_CASE("Riemann-Roch consistency") {
  // chi() itself cross-checks 1 + D.(D-K)/2 against the termwise formula.
  RandomDivisors rd(11);
  for (int i = 0; i < 10000; ++i) {
    Divisor D = rd.divisor(rd.n());
    Divisor K = canonical_class(Surface(D.n()));
    CHECK(2 * (chi(D) - 1) == intersect(D, D - K));
  }
}

TEST_CASE("balanced multiplicities") {
  CHECK(is_balanced(hom(8, 5, 2)));
  CHECK(is_balanced(dv(15, {5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4})));
  CHECK(!is_balanced(dv(4, {3, 1, 1, 1})));
}

TEST_CASE("rebalance") {
  Divisor balanced = dv(15, {5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4});
  auto r0 = rebalance(balanced);
  CHECK(r0.steps == 0);
  CHECK(r0.balanced == balanced.sorted());

  std::vector<long> m{3, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  auto r1 = rebalance(dv(6, m));
  CHECK(r1.steps == 1);
  CHECK(r1.balanced == dv(6, {2, 2, 1, 1, 1, 1, 1, 1, 1, 1}));

  RandomDivisors rd(3);
  for (int i = 0; i < 1000; ++i) {
    Divisor D = rd.divisor(rd.n(2, 20), -10, 10, 12);
    auto r = rebalance(D);
    auto [steps, result] = simulate_rebalance(D);
    CHECK(r.steps == steps);
    CHECK(r.balanced == result);
    CHECK(chi(r.balanced) >= chi(D) + r.steps);  // each step gains at least 1
    CHECK(is_balanced(r.balanced));
    CHECK(mult_sum(r.balanced) == mult_sum(D));
  }
}

TEST_CASE("steps from equal multiplicities") {
  CHECK(steps_from_equal(hom(13, 15, 5)) == 0);
  CHECK(steps_from_equal(dv(15, {5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4})) == 1);
  Divisor h_minus_e1 = Divisor(1, [] {
    std::vector<Int> m(25, 0);
    m[0] = 1;
    return m;
  }());
  CHECK(steps_from_equal(h_minus_e1) == 1);
  CHECK_THROWS_AS(steps_from_equal(dv(4, {3, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("below_nef_wall on pinned classes") {
  CHECK(below_nef_wall(Divisor::zero(10)));
  CHECK(!below_nef_wall(Divisor::exceptional(11, 1)));
  CHECK(!below_nef_wall(Divisor::exceptional(12, 1)));
  CHECK(below_nef_wall(Divisor::exceptional(13, 1)));
  CHECK(below_nef_wall(Divisor::exceptional(16, 1)));
  CHECK(!below_nef_wall(hom(10, 1, 0)));  // H: 2B.H = 2 sqrt(10) > 10 - 3 sqrt(10)
}

TEST_CASE("below_nef_wall agrees with the wall form and 128-bit floats") {
  RandomDivisors rd(17);
  for (int i = 0; i < 10000; ++i) {
    Divisor D = rd.divisor(rd.n(10, 30), -40, 120, 20);
    bool exact = below_nef_wall(D);

    // Exact route: sign of 2A_t.D - A_t.K slightly above the wall flips with
    // membership, and at t slightly above sqrt(n) the form is negative iff
    // the divisor sits below the nef wall.
    if (2 * D.d() + 3 > 0) {
      Rat t = wall_t(D);
      CHECK(wall_form(Polarization{t}, D) == Rat(0));
      bool via_wall = cmp_sqrt(t, Int(D.n())) > 0;
      CHECK(exact == via_wall);
    }

    __float128 margin = nef_margin_f128(D);
    double as_double = static_cast<double>(margin);
    if (as_double > 1e-6) CHECK(!exact);
    if (as_double < -1e-6) CHECK(exact);
  }
}

TEST_CASE("wall values") {
  CHECK(wall_t(Divisor::zero(10)) == Rat(Int(10), Int(3)));
  CHECK(wall_t(Divisor::zero(13)) == Rat(Int(13), Int(3)));
  CHECK(wall_t(hom(10, 57, 18)) == Rat(Int(370), Int(117)));
  Divisor fam5 = dv(15, {5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4});
  CHECK(wall_t(fam5) == Rat(Int(119), Int(33)));
  CHECK(wall_t(hom(12, 4365, 1260)) == Rat(Int(10084), Int(2911)));  // reduced form
}

TEST_CASE("wall consistency under exact rational evaluation") {
  RandomDivisors rd(23);
  int done = 0;
  while (done < 1000) {
    Divisor D = rd.divisor(rd.n(1, 30));
    if (2 * D.d() + 3 <= 0) continue;
    Rat t = wall_t(D);
    CHECK(wall_form(Polarization{t}, D) == Rat(0));
    ++done;
  }
}

TEST_CASE("permutation counts") {
  CHECK(permutation_count(hom(13, 2142, 594)) == 1);
  CHECK(permutation_count(dv(15, {5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4})) == 13);
  Divisor h_minus_e1 = Divisor(1, [] {
    std::vector<Int> m(25, 0);
    m[0] = 1;
    return m;
  }());
  CHECK(permutation_count(h_minus_e1) == 25);
  Divisor unbal = Divisor(1, [] {
    std::vector<Int> m(25, 0);
    m[0] = 1;
    m[1] = 1;
    m[24] = -1;
    return m;
  }());
  CHECK(permutation_count(unbal) == 6900);  // 25!/(2! 22! 1!)
}

TEST_CASE("ampleness is recorded conditionally") {
  Surface plain(13), nag(13, false, true);
  CHECK(ampleness(Polarization{Rat(Int(18), Int(5))}, plain) == Ampleness::not_ample);
  CHECK(ampleness(Polarization{Rat(Int(11), Int(3))}, plain) == Ampleness::ample_if_nagata);
  CHECK(ampleness(Polarization{Rat(Int(11), Int(3))}, nag) == Ampleness::ample);
  CHECK(ampleness(Polarization{Rat(5)}, Surface(16)) == Ampleness::ample);
  CHECK(ampleness(Polarization{Rat(4)}, Surface(16)) == Ampleness::not_ample);
}

TEST_CASE("divisor display forms") {
  CHECK(Divisor::zero(10).str() == "O");
  CHECK(Divisor::exceptional(13, 5).str() == "E_1");  // orbit representative
  CHECK(hom(10, 57, 18).str() == "57H-18E");
  CHECK(dv(15, {5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4}).str() == "15H-5E_1-4E_{2..13}");
  CHECK(hom(14, 4, 1).str() == "4H-E");
  CHECK(canonical_class(Surface(10)).str() == "-3H+E");
  Divisor unbal = Divisor(1, [] {
    std::vector<Int> m(25, 0);
    m[0] = 1;
    m[1] = 1;
    m[2] = -1;
    return m;
  }());
  CHECK(unbal.str() == "H-E_{1..2}+E_3");
}

TEST_CASE("orbit operations are permutation invariant") {
  RandomDivisors rd(31);
  std::mt19937_64 shuffler(5);
  for (int i = 0; i < 2000; ++i) {
    Divisor D = rd.divisor(rd.n(2, 25));
    std::vector<Int> m = D.m();
    std::shuffle(m.begin(), m.end(), shuffler);
    Divisor P(D.d(), std::move(m));
    CHECK(chi(P) == chi(D));
    CHECK(below_nef_wall(P) == below_nef_wall(D));
    CHECK(wall_t(P) == wall_t(D));
    CHECK(permutation_count(P) == permutation_count(D));
    CHECK(is_balanced(P) == is_balanced(D));
    CHECK(rebalance(P).steps == rebalance(D).steps);
    CHECK(P.sorted() == D.sorted());
  }
}
