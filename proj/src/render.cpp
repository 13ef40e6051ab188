#include "nefwall/render.hpp"

#include <sstream>

namespace nefwall {

namespace {

std::string assumption_line(Conditionality c) {
  switch (c) {
    case Conditionality::unconditional: return "Unconditional.";
    case Conditionality::requires_nagata: return "Assumes: Nagata.";
    case Conditionality::requires_shgh: return "Assumes: SHGH.";
  }
  return "";
}

Conditionality surface_conditionality(int n, bool moduli) {
  if (n == 16 || n == 25) return Conditionality::unconditional;
  return moduli ? Conditionality::requires_shgh : Conditionality::requires_nagata;
}

constexpr const char* kEmptyMessage =
    "empty for every ample divisor";

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (size_t r = 0; r < rows.size(); ++r) {
    out << "|";
    for (const std::string& cell : rows[r]) out << " " << cell << " |";
    out << "\n";
    if (r == 0) {
      out << "|";
      for (size_t c = 0; c < rows[0].size(); ++c) out << " --- |";
      out << "\n";
    }
  }
  return out.str();
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
  return out.str();
}

std::string event_cell(const WallEvent& e) {
  if (e.kind == EventKind::blowup_modification) {
    std::ostringstream out;
    out << "none; P^" << e.dim.get_str() << " blown up at " << e.copies.get_str()
        << " points";
    return out.str();
  }
  return component_label(e.dim, e.copies, ComponentShape::projective_space, 0);
}

}  // namespace

std::string component_label(const Int& dim, const Int& copies, ComponentShape shape,
                            int n_points) {
  std::ostringstream out;
  if (copies != 1) out << copies.get_str() << " copies of ";
  if (shape == ComponentShape::blowup_of_projective_space)
    out << "Bl_" << n_points << " ";
  out << "P^" << dim.get_str();
  return out.str();
}

OutputFormat parse_format(const std::string& s) {
  if (s == "markdown") return OutputFormat::markdown;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format: " + s);
}

std::string render_walls(const Surface& s, const Int& chi, const Timeline& tl,
                         OutputFormat f) {
  const int n = s.n();
  Conditionality cond = surface_conditionality(n, /*moduli=*/true);

  if (f == OutputFormat::json) {
    Json j{{"command", "walls"},
           {"n", n},
           {"chi", int_to_json(chi)},
           {"assumes", tl.empty_for_all_ample ? "unconditional" : to_string(cond)},
           {"empty_for_all_ample", tl.empty_for_all_ample}};
    Json events = Json::array();
    for (const WallEvent& e : tl.events) events.push_back(to_json(e));
    j["events"] = std::move(events);
    return j.dump(2) + "\n";
  }

  bool typed = false;
  for (const WallEvent& e : tl.events)
    if (e.orbit.family) typed = true;

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"D"};
  if (typed) head.push_back("Type");
  head.push_back("t_D");
  head.push_back("New component");
  rows.push_back(head);
  for (const WallEvent& e : tl.events) {
    if (e.kind == EventKind::emptiness_boundary) continue;
    std::vector<std::string> row{e.orbit.rep.str()};
    if (typed) row.push_back(e.orbit.family.value_or(""));
    row.push_back(e.t.str());
    row.push_back(event_cell(e));
    rows.push_back(std::move(row));
  }

  if (f == OutputFormat::csv) {
    if (tl.empty_for_all_ample) return std::string(kEmptyMessage) + "\n";
    return csv(rows);
  }

  std::ostringstream out;
  out << "# Wall crossings of M_{A_t}(2, K, " << chi.get_str() << "), n = " << n << "\n\n";
  if (tl.empty_for_all_ample) {
    out << "The moduli space is " << kEmptyMessage << " when n <= 9.\n";
    return out.str();
  }
  out << assumption_line(cond) << "\n";
  out << "Empty for t > " << Rat(Int(n), 3).str() << ".\n\n";
  out << table(rows);
  return out.str();
}

std::string render_classify(const Surface& s, const Int& chi_target,
                            const std::vector<TypeOrbit>& orbits, OutputFormat f) {
  const int n = s.n();
  Conditionality cond = surface_conditionality(n, /*moduli=*/false);

  if (f == OutputFormat::json) {
    Json j{{"command", "classify"},
           {"n", n},
           {"chi_target", int_to_json(chi_target)},
           {"assumes", to_string(cond)}};
    Json arr = Json::array();
    for (const TypeOrbit& o : orbits) arr.push_back(to_json(o));
    j["orbits"] = std::move(arr);
    return j.dump(2) + "\n";
  }

  bool square = is_square(Int(n));
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"D"};
  if (n == 13) head.push_back("family");
  if (square) head.push_back("2B.D");
  head.insert(head.end(), {"chi(D)", "t_D", "copies"});
  rows.push_back(head);
  for (const TypeOrbit& o : orbits) {
    std::vector<std::string> row{o.rep.str()};
    if (n == 13) row.push_back(o.family.value_or(""));
    if (square) row.push_back(two_b_dot_d(o.rep).get_str());
    row.push_back(o.chi_value.get_str());
    row.push_back(o.t.str());
    row.push_back(o.copies.get_str());
    rows.push_back(std::move(row));
  }

  if (f == OutputFormat::csv) return csv(rows);

  std::ostringstream out;
  out << "# Divisor types with chi(D) >= " << chi_target.get_str() << ", n = " << n
      << "\n\n";
  out << assumption_line(cond) << "\n\n";
  out << table(rows);
  return out.str();
}

std::string render_snapshot(const Surface& s, const Int& chi, const Rat& t,
                            const std::vector<Component>& components, OutputFormat f) {
  const int n = s.n();
  Conditionality cond = surface_conditionality(n, /*moduli=*/true);

  if (f == OutputFormat::json) {
    Json j{{"command", "snapshot"},
           {"n", n},
           {"chi", int_to_json(chi)},
           {"t", to_json(t)},
           {"assumes", n <= 9 ? "unconditional" : to_string(cond)}};
    Json arr = Json::array();
    for (const Component& c : components) arr.push_back(to_json(c));
    j["components"] = std::move(arr);
    return j.dump(2) + "\n";
  }

  std::vector<std::vector<std::string>> rows{{"component", "type D", "dim", "copies"}};
  for (const Component& c : components)
    rows.push_back({component_label(c.dim, c.copies, c.shape, n), c.type.str(),
                    c.dim.get_str(), c.copies.get_str()});

  if (f == OutputFormat::csv) return csv(rows);

  std::ostringstream out;
  out << "# M_{A_t}(2, K, " << chi.get_str() << ") at t = " << t.str() << ", n = " << n
      << "\n\n";
  if (n <= 9) {
    out << "The moduli space is " << kEmptyMessage << " when n <= 9.\n";
    return out.str();
  }
  out << assumption_line(cond) << "\n\n";
  if (components.empty()) {
    out << "Empty.\n";
    return out.str();
  }
  out << table(rows);
  return out.str();
}

std::string render_convergents(int n, const std::vector<Convergent>& cs, OutputFormat f) {
  if (f == OutputFormat::json) {
    Json j{{"command", "convergents"}, {"n", n}};
    Json arr = Json::array();
    for (const Convergent& c : cs) arr.push_back(to_json(c));
    j["convergents"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows{{"k", "p_k/q_k"}};
  for (const Convergent& c : cs)
    rows.push_back({std::to_string(c.k), c.p.get_str() + "/" + c.q.get_str()});
  if (f == OutputFormat::csv) return csv(rows);
  std::ostringstream out;
  out << "# Convergents of sqrt(" << n << ")\n\n" << table(rows);
  return out.str();
}

std::string render_pell(int n, const Int& N, const std::vector<PellSolution>& sols,
                        OutputFormat f) {
  if (f == OutputFormat::json) {
    Json j{{"command", "pell"}, {"n", n}, {"N", N.get_str()}};
    Json arr = Json::array();
    for (const PellSolution& s : sols) arr.push_back(to_json(s));
    j["solutions"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows{{"x", "y"}};
  for (const PellSolution& s : sols) rows.push_back({s.x.get_str(), s.y.get_str()});
  if (f == OutputFormat::csv) return csv(rows);
  std::ostringstream out;
  out << "# Positive solutions of x^2 - " << n << " y^2 = " << N.get_str() << "\n\n"
      << table(rows);
  return out.str();
}

std::string render_cohomology(const Surface& s, const Divisor& D,
                              const CohomologyReport& r, OutputFormat f) {
  if (f == OutputFormat::json) {
    Json j{{"command", "cohomology"},
           {"n", s.n()},
           {"divisor", to_json(D)},
           {"assumes", "requires_shgh"}};
    auto triple = [](const std::array<Int, 3>& h) {
      return Json{int_to_json(h[0]), int_to_json(h[1]), int_to_json(h[2])};
    };
    j["h"] = Json{{"D", triple(r.of_D)},
                  {"2D", triple(r.of_2D)},
                  {"2D_minus_K", triple(r.of_2D_minus_K)}};
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows{{"sheaf", "h^0", "h^1", "h^2"}};
  auto add = [&](const std::string& name, const std::array<Int, 3>& h) {
    rows.push_back({name, h[0].get_str(), h[1].get_str(), h[2].get_str()});
  };
  add("O(D)", r.of_D);
  add("O(2D)", r.of_2D);
  add("O(2D-K)", r.of_2D_minus_K);
  if (f == OutputFormat::csv) return csv(rows);
  std::ostringstream out;
  out << "# Cohomology under SHGH, n = " << s.n() << ", D = " << D.str() << "\n\n"
      << table(rows);
  return out.str();
}

}  // namespace nefwall
