#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "nefwall/render.hpp"

namespace {

using namespace nefwall;

constexpr int kExitOk = 0;
constexpr int kExitArgs = 2;
constexpr int kExitUnsupportedN = 3;
constexpr int kExitWallBoundary = 4;
constexpr int kExitMissingFlag = 5;

int max_depth_cap() {
  if (const char* env = std::getenv("NEFWALL_MAX_DEPTH")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 16;
}

Rat parse_rat_arg(const std::string& s, const char* what) {
  auto r = Rat::parse(s);
  if (!r)
    throw std::invalid_argument(std::string(what) +
                                " must be an exact rational like 27/5 (no decimals)");
  return *r;
}

Int parse_int_arg(const std::string& s, const char* what) {
  auto r = Rat::parse(s);
  if (!r || !r->is_integer())
    throw std::invalid_argument(std::string(what) + " must be an integer");
  return r->num();
}

// Conditional outputs need the matching flag unless n is 16 or 25, where the
// results are unconditional.
void require_flag_for(const Surface& s, Conditionality needed) {
  if (s.n() == 16 || s.n() == 25) return;
  if (needed == Conditionality::requires_shgh && !s.shgh())
    throw missing_assumption_error("--assume-shgh");
  if (needed == Conditionality::requires_nagata && !s.nagata())
    throw missing_assumption_error("--assume-nagata or --assume-shgh");
}

struct CommonArgs {
  int n = 0;
  bool assume_shgh = false;
  bool assume_nagata = false;
  std::string format = "markdown";

  Surface surface() const { return Surface(n, assume_shgh, assume_nagata); }
  OutputFormat fmt() const { return parse_format(format); }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_flags = true) {
  cmd->add_option("--n", args.n, "number of blown-up points")->required();
  cmd->add_option("--format", args.format, "markdown|json|csv")
      ->check(CLI::IsMember({"markdown", "json", "csv"}));
  if (with_flags) {
    cmd->add_flag("--assume-shgh", args.assume_shgh, "assume the SHGH conjecture");
    cmd->add_flag("--assume-nagata", args.assume_nagata, "assume the Nagata conjecture");
  }
}

Divisor divisor_from_args(int n, const std::string& divisor_json, const std::string& d_s,
                          const std::string& m_list, const std::string& m_equal) {
  if (!divisor_json.empty()) {
    Divisor D = divisor_from_json(Json::parse(divisor_json));
    if (D.n() != n) throw std::invalid_argument("divisor length does not match --n");
    return D;
  }
  if (d_s.empty()) throw std::invalid_argument("need --divisor or --d with --m/--m-equal");
  Int d = parse_int_arg(d_s, "--d");
  if (!m_equal.empty())
    return Divisor::homogeneous(n, d, parse_int_arg(m_equal, "--m-equal"));
  if (m_list.empty()) throw std::invalid_argument("need --m or --m-equal");
  std::vector<Int> m;
  std::string cur;
  for (char c : m_list + ",") {
    if (c == ',') {
      if (!cur.empty()) m.push_back(parse_int_arg(cur, "--m entry"));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("--m must list exactly n multiplicities");
  return Divisor(d, std::move(m));
}

int run(int argc, char** argv) {
  CLI::App app{"nefwall: exact wall-and-chamber structure of the moduli spaces "
               "M_{A_t}(2, K, chi) on very general blowups of the plane"};
  app.require_subcommand(1);
  std::string output;

  // walls
  CommonArgs walls_args;
  std::string t_min_s, first_s;
  auto* walls = app.add_subcommand("walls", "wall-crossing timeline");
  add_common(walls, walls_args);
  std::string walls_chi;
  walls->add_option("--chi", walls_chi, "Euler characteristic (default: maximal)");
  auto* tmin_opt = walls->add_option("--t-min", t_min_s,
                                     "exact rational lower bound, or auto:K for first K walls");
  walls->add_option("--first", first_s, "emit the first K walls")->excludes(tmin_opt);
  walls->callback([&] {
    Surface s = walls_args.surface();
    Int chi = walls_chi.empty() ? Int(s.n() == 25 ? 4 : 2) : parse_int_arg(walls_chi, "--chi");
    if (s.n() >= 10) require_flag_for(s, Conditionality::requires_shgh);
    Timeline tl;
    if (!first_s.empty() || t_min_s.rfind("auto:", 0) == 0) {
      std::string k_s = !first_s.empty() ? first_s : t_min_s.substr(5);
      Int k = parse_int_arg(k_s, "--first");
      if (k < 1 || !k.fits_sint_p()) throw std::invalid_argument("--first must be >= 1");
      tl = wall_events_first(s, chi, static_cast<int>(k.get_si()));
    } else if (!t_min_s.empty()) {
      tl = wall_events(s, chi, parse_rat_arg(t_min_s, "--t-min"));
    } else {
      tl = wall_events_first(s, chi, 4);
    }
    output = render_walls(s, chi, tl, walls_args.fmt());
  });

  // classify
  CommonArgs cls_args;
  std::string cls_chi;
  int cls_depth = 4;
  auto* cls = app.add_subcommand("classify", "destabilizing divisor types");
  add_common(cls, cls_args);
  cls->add_option("--chi", cls_chi, "minimal chi(D) (default 1)");
  cls->add_option("--depth", cls_depth, "members per infinite family (default 4)");
  cls->callback([&] {
    Surface s = cls_args.surface();
    Int chi_target = cls_chi.empty() ? Int(1) : parse_int_arg(cls_chi, "--chi");
    int depth = std::min(cls_depth, max_depth_cap());
    if (depth < 1) throw std::invalid_argument("--depth must be >= 1");
    require_flag_for(s, Conditionality::requires_nagata);
    auto orbits = enumerate_types(s, chi_target, depth);
    output = render_classify(s, chi_target, orbits, cls_args.fmt());
  });

  // snapshot
  CommonArgs snap_args;
  std::string snap_chi, snap_t;
  auto* snap = app.add_subcommand("snapshot", "component inventory at a polarization");
  add_common(snap, snap_args);
  snap->add_option("--chi", snap_chi, "Euler characteristic (default: maximal)");
  snap->add_option("--t", snap_t, "exact rational polarization parameter")->required();
  snap->callback([&] {
    Surface s = snap_args.surface();
    Int chi = snap_chi.empty() ? Int(s.n() == 25 ? 4 : 2) : parse_int_arg(snap_chi, "--chi");
    Rat t = parse_rat_arg(snap_t, "--t");
    if (s.n() >= 10) require_flag_for(s, Conditionality::requires_shgh);
    auto components = snapshot(s, chi, t);
    output = render_snapshot(s, chi, t, components, snap_args.fmt());
  });

  // convergents
  CommonArgs conv_args;
  int conv_count = 7;
  auto* conv = app.add_subcommand("convergents", "continued fraction convergents of sqrt(n)");
  add_common(conv, conv_args, /*with_flags=*/false);
  conv->add_option("--count", conv_count, "how many convergents (default 7)");
  conv->callback([&] {
    if (conv_count < 1) throw std::invalid_argument("--count must be >= 1");
    if (conv_args.n < 1) throw std::invalid_argument("--n must be >= 1");
    if (is_square(Int(conv_args.n)))
      throw square_input_error("sqrt(n) is an integer for perfect square n");
    auto cs = convergents(Int(conv_args.n), conv_count);
    output = render_convergents(conv_args.n, cs, conv_args.fmt());
  });

  // pell
  CommonArgs pell_args;
  std::string pell_N = "1";
  int pell_limit = 3;
  auto* pell = app.add_subcommand("pell", "positive solutions of x^2 - n y^2 = N");
  add_common(pell, pell_args, /*with_flags=*/false);
  pell->add_option("--N", pell_N, "right-hand side (default 1)");
  pell->add_option("--limit", pell_limit, "how many solutions (default 3)");
  pell->callback([&] {
    Int N = parse_int_arg(pell_N, "--N");
    auto sols = gen_pell_positive_solutions(pell_args.n, N, pell_limit);
    output = render_pell(pell_args.n, N, sols, pell_args.fmt());
  });

  // cohomology
  CommonArgs coh_args;
  std::string coh_divisor, coh_d, coh_m, coh_m_equal;
  auto* coh = app.add_subcommand("cohomology", "h^i of O(D), O(2D), O(2D-K) under SHGH");
  add_common(coh, coh_args);
  coh->add_option("--divisor", coh_divisor, "divisor as JSON {\"d\": int, \"m\": [int,...]}");
  coh->add_option("--d", coh_d, "degree (with --m or --m-equal)");
  coh->add_option("--m", coh_m, "comma-separated multiplicities");
  coh->add_option("--m-equal", coh_m_equal, "homogeneous multiplicity");
  coh->callback([&] {
    Surface s = coh_args.surface();
    Divisor D = divisor_from_args(s.n(), coh_divisor, coh_d, coh_m, coh_m_equal);
    auto report = shgh_cohomology_report(D, s);
    output = render_cohomology(s, D, report, coh_args.fmt());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgs;
  }
  std::cout << output;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nefwall::missing_assumption_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMissingFlag;
  } catch (const nefwall::wall_boundary_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWallBoundary;
  } catch (const nefwall::unsupported_n_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupportedN;
  } catch (const nefwall::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  }
}
