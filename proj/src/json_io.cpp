#include "nefwall/json_io.hpp"

#include <limits>

namespace nefwall {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  throw std::invalid_argument("expected integer or decimal string");
}

Json to_json(const Rat& r) {
  return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Rat rat_from_json(const Json& j) {
  return Rat(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
}

Json to_json(const Divisor& d) {
  Json m = Json::array();
  for (const Int& v : d.m()) m.push_back(int_to_json(v));
  return Json{{"d", int_to_json(d.d())}, {"m", std::move(m)}};
}

Divisor divisor_from_json(const Json& j) {
  std::vector<Int> m;
  for (const Json& v : j.at("m")) m.push_back(int_from_json(v));
  return Divisor(int_from_json(j.at("d")), std::move(m));
}

Json to_json(const Convergent& c) {
  return Json{{"k", c.k}, {"p", c.p.get_str()}, {"q", c.q.get_str()}};
}

Convergent convergent_from_json(const Json& j) {
  return Convergent{j.at("k").get<int>(), Int(j.at("p").get<std::string>()),
                    Int(j.at("q").get<std::string>())};
}

Json to_json(const PellSolution& s) {
  return Json{{"x", s.x.get_str()}, {"y", s.y.get_str()}};
}

PellSolution pell_from_json(const Json& j) {
  return PellSolution{Int(j.at("x").get<std::string>()), Int(j.at("y").get<std::string>())};
}

Json to_json(const SolutionChain& c) {
  return Json{{"fundamental",
               {{"d", c.fundamental.first.get_str()}, {"m", c.fundamental.second.get_str()}}},
              {"transform",
               {{"a", c.step.a.get_str()},
                {"b", c.step.b.get_str()},
                {"c", c.step.c.get_str()},
                {"e", c.step.e.get_str()},
                {"f", c.step.f.get_str()},
                {"g", c.step.g.get_str()}}}};
}

std::pair<std::pair<Int, Int>, AffineMap> chain_from_json(const Json& j) {
  const Json& f = j.at("fundamental");
  const Json& t = j.at("transform");
  auto field = [&](const char* name) { return Int(t.at(name).get<std::string>()); };
  return {{Int(f.at("d").get<std::string>()), Int(f.at("m").get<std::string>())},
          AffineMap{field("a"), field("b"), field("c"), field("e"), field("f"), field("g")}};
}

Json to_json(const TypeOrbit& o) {
  return Json{{"divisor", to_json(o.rep)},
              {"copies", int_to_json(o.copies)},
              {"family", o.family ? Json(*o.family) : Json(nullptr)},
              {"conditionality", to_string(o.cond)},
              {"t_wall", to_json(o.t)}};
}

Json to_json(const WallEvent& e) {
  return Json{{"t", to_json(e.t)},
              {"kind", to_string(e.kind)},
              {"divisor", to_json(e.orbit.rep)},
              {"dim", int_to_json(e.dim)},
              {"copies", int_to_json(e.copies)},
              {"conditionality", to_string(e.cond)}};
}

Json to_json(const Component& c) {
  return Json{{"type", to_json(c.type)},
              {"dim", int_to_json(c.dim)},
              {"copies", int_to_json(c.copies)},
              {"shape", c.shape == ComponentShape::projective_space
                            ? "projective_space"
                            : "blowup_of_projective_space"}};
}

}  // namespace nefwall
