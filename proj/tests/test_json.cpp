#include <doctest.h>

#include "helpers.hpp"
#include "nefwall/json_io.hpp"

using namespace nefwall;
using namespace nefwall::testing;

TEST_CASE("integers round-trip through JSON, large values as strings") {
  CHECK(int_to_json(Int(42)).is_number_integer());
  CHECK(int_from_json(int_to_json(Int(-17))) == -17);
  Int big("123456789012345678901234567890123456789");
  Json j = int_to_json(big);
  CHECK(j.is_string());
  CHECK(int_from_json(j) == big);
}

TEST_CASE("rationals round-trip") {
  Rat t(Int(533530), Int(168717));
  Json j = to_json(t);
  CHECK(j.at("num") == "533530");
  CHECK(j.at("den") == "168717");
  CHECK(rat_from_json(j) == t);
}

TEST_CASE("divisors round-trip, including huge chain members") {
  Divisor D = dv(21417, {5940, 5940, 5940, 5940, 5940, 5940, 5940, 5940, 5940, 5940, 5940,
                         5940, 5939});
  Json j = to_json(D);
  CHECK(divisor_from_json(j) == D);

  Divisor huge = Divisor::homogeneous(10, Int("4293922600440123456789012345"),
                                      Int("1190919854520123456789012345"));
  Json jh = to_json(huge);
  CHECK(jh.at("d").is_string());
  CHECK(divisor_from_json(jh) == huge);
}

TEST_CASE("convergents and pell solutions round-trip") {
  Convergent c{7, Int(168717), Int(53353)};
  Json j = to_json(c);
  Convergent back = convergent_from_json(j);
  CHECK(back.k == 7);
  CHECK(back.p == c.p);
  CHECK(back.q == c.q);

  PellSolution s{Int(649), Int(180)};
  PellSolution sb = pell_from_json(to_json(s));
  CHECK(sb.x == 649);
  CHECK(sb.y == 180);
}

TEST_CASE("chains round-trip in the documented wire format") {
  auto chains = quad_with_linear(13, Int(0), Int(-4), 2);
  for (const SolutionChain& c : chains) {
    Json j = to_json(c);
    auto [fund, step] = chain_from_json(j);
    CHECK(fund == c.fundamental);
    CHECK(step.a == c.step.a);
    CHECK(step.b == c.step.b);
    CHECK(step.c == c.step.c);
    CHECK(step.e == c.step.e);
    CHECK(step.f == c.step.f);
    CHECK(step.g == c.step.g);
    // re-serialized form is byte-identical
    SolutionChain rebuilt{c.eq, fund, step};
    CHECK(to_json(rebuilt) == j);
  }
}

TEST_CASE("orbit and event JSON carry the documented fields") {
  auto orbits = enumerate_types(Surface(13), 1, 2);
  Json j = to_json(orbits.front());
  CHECK(j.contains("divisor"));
  CHECK(j.contains("copies"));
  CHECK(j.contains("family"));
  CHECK(j.contains("conditionality"));
  CHECK(j.contains("t_wall"));
  CHECK(j.at("conditionality") == "requires_nagata");
  // family null for unlabelled orbits
  Json j25 = to_json(enumerate_types(Surface(25), 2, 1).front());
  CHECK(j25.at("family").is_null());

  Timeline tl = wall_events_first(Surface(16), 2, 2);
  Json je = to_json(tl.events[1]);
  CHECK(je.at("kind") == "blowup_modification");
  CHECK(je.at("t") == to_json(Rat(Int(14), Int(3))));
  CHECK(int_from_json(je.at("dim")) == 5);
  CHECK(int_from_json(je.at("copies")) == 16);
  CHECK(divisor_from_json(je.at("divisor")) == Divisor::exceptional(16, 16).sorted());
}
