#include "nefwall/moduli.hpp"

#include <algorithm>

namespace nefwall {

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::emptiness_boundary: return "emptiness_boundary";
    case EventKind::new_component: return "new_component";
    case EventKind::blowup_modification: return "blowup_modification";
  }
  return "?";
}

namespace {

bool moduli_supported(int n) { return (n >= 10 && n <= 16) || n == 25; }

Int type_chi(int n) { return n == 25 ? 2 : 1; }
Int max_bundle_chi(int n) { return n == 25 ? 4 : 2; }

void validate_moduli_args(const Surface& s, const Int& chi) {
  if (!moduli_supported(s.n()))
    throw unsupported_n_error("moduli descriptions cover 10 <= n <= 16 and n = 25");
  if (chi != max_bundle_chi(s.n()))
    throw std::invalid_argument("chi must be the maximal Euler characteristic (2; 4 for n = 25)");
}

Conditionality moduli_conditionality(int n) {
  return (n == 16 || n == 25) ? Conditionality::unconditional : Conditionality::requires_shgh;
}

// Orbits with wall value > t (or >= t when allow_equal), complete: the depth
// is grown until the filtered set stabilizes, which happens because each
// family's walls decrease strictly toward sqrt(n) < t.
std::vector<TypeOrbit> orbits_with_wall_above(const Surface& s, const Rat& t,
                                              bool allow_equal) {
  auto filter = [&](std::vector<TypeOrbit> v) {
    std::vector<TypeOrbit> out;
    for (TypeOrbit& o : v)
      if (o.t > t || (allow_equal && o.t == t)) out.push_back(std::move(o));
    return out;
  };
  int depth = 4;
  auto cur = filter(enumerate_types(s, type_chi(s.n()), depth));
  while (true) {
    depth *= 2;
    check(depth <= 4096, "wall enumeration failed to stabilize");
    auto next = filter(enumerate_types(s, type_chi(s.n()), depth));
    if (next.size() == cur.size()) return next;
    cur = std::move(next);
  }
}

TypeOrbit trivial_orbit(const Surface& s) {
  Divisor o = Divisor::zero(s.n());
  return TypeOrbit{o, 1, std::nullopt, std::nullopt, moduli_conditionality(s.n()),
                   wall_t(o), chi(o)};
}

Timeline assemble_timeline(const Surface& s, std::vector<TypeOrbit> orbits) {
  const int n = s.n();
  const Conditionality cond = moduli_conditionality(n);
  Timeline tl;
  bool have_event_at_boundary = false;
  for (TypeOrbit& orbit : orbits) {
    const Divisor& D = orbit.rep;
    if (D.is_zero()) {
      check(orbit.t == Rat(Int(n), 3), "type-O wall must be n/3");
      if (n >= 11) {
        tl.events.push_back(WallEvent{orbit.t, orbit, EventKind::new_component,
                                      Int(n) - 11, 1, cond});
        have_event_at_boundary = true;
      }
      // n = 10: chi(O) = 1 but Ext^1(K, O) = 0, so no component appears.
      continue;
    }
    if (D.is_exceptional()) {
      check(n >= 13 && n <= 16, "exceptional types occur only for 13 <= n <= 16");
      check(orbit.t == Rat(Int(n) - 2, 3), "type-E_i wall must be (n-2)/3");
      tl.events.push_back(WallEvent{orbit.t, orbit, EventKind::blowup_modification,
                                    Int(n) - 11, Int(n), cond});
      continue;
    }
    Int dim = component_dim(D);
    tl.events.push_back(
        WallEvent{orbit.t, orbit, EventKind::new_component, dim, orbit.copies, cond});
  }
  if (!have_event_at_boundary)
    tl.events.push_back(WallEvent{Rat(Int(n), 3), trivial_orbit(s),
                                  EventKind::emptiness_boundary, 0, 1, cond});

  std::sort(tl.events.begin(), tl.events.end(),
            [](const WallEvent& a, const WallEvent& b) { return b.t < a.t; });
  for (size_t i = 0; i + 1 < tl.events.size(); ++i)
    check(tl.events[i + 1].t < tl.events[i].t, "wall events must strictly decrease");
  for (const WallEvent& e : tl.events) {
    check(cmp_sqrt(e.t, Int(n)) > 0, "event below the nef boundary");
    check(e.t <= Rat(Int(n), 3), "event above the emptiness boundary");
  }
  return tl;
}

}  // namespace

Int component_dim(const Divisor& D) {
  const int n = D.n();
  if (D.is_zero() || D.is_exceptional()) {
    if (n <= 10)
      throw std::domain_error("no type-O component: Ext^1(K, O) = 0 when n <= 10");
    Int special(n - 11);
    if (D.is_zero()) {
      // For the trivial type the generic formula agrees; the exceptional one
      // picks up the h^1(2E_i) = 1 correction instead.
      Int generic = -chi(2 * D - canonical_class(Surface(n))) - 1;
      check(generic == special, "type-O dimension must match -chi(-K)-1");
    }
    return special;
  }
  Int dim = -chi(2 * D - canonical_class(Surface(n))) - 1;
  if (dim < 0)
    throw std::domain_error("classification inconsistency: negative component dimension");
  return dim;
}

ExtDims ext_dims(const Divisor& D, const Surface& s) {
  if (D.n() != s.n()) throw dimension_error("divisor does not live on this surface");
  const int n = s.n();
  if (n >= 10 && n <= 15 && !s.shgh()) throw missing_assumption_error("--assume-shgh");

  ExtDims dims{1, 0, 0};
  if (D.is_zero()) {
    if (n <= 10)
      throw std::domain_error("Ext^1(K, O) = 0 for n <= 10: no nonsplit type-O bundle");
    dims.ext1 = n - 11;
    dims.ext2 = 1;
  } else if (D.is_exceptional()) {
    if (n < 13) throw std::domain_error("exceptional types occur only for n >= 13");
    dims.ext1 = n - 11;
    dims.ext2 = 1;
  } else {
    Divisor K = canonical_class(s);
    dims.ext1 = -chi(2 * D - K) - 1;
    dims.ext2 = chi(2 * D);
    if (dims.ext1 < 0 || dims.ext2 < 0)
      throw std::domain_error("ext dimensions undefined for this divisor class");
    check(dims.hom - dims.ext1 + dims.ext2 == 8 * chi(D) + 5 - Int(n),
          "Euler pairing identity");
  }
  return dims;
}

CohomologyReport shgh_cohomology_report(const Divisor& D, const Surface& s) {
  if (D.n() != s.n()) throw dimension_error("divisor does not live on this surface");
  const int n = s.n();
  if (n < 10 || n > 16)
    throw unsupported_n_error("cohomology statements cover 10 <= n <= 16");
  if (!below_nef_wall(D)) throw std::invalid_argument("divisor is not below the nef wall");
  if (!s.shgh()) throw missing_assumption_error("--assume-shgh");

  CohomologyReport r{{1, 0, 0}, {}, {}};
  if (D.is_exceptional()) {
    r.of_2D = {1, 1, 0};
  } else {
    Int c = chi(2 * D);
    check(c >= 1, "h0(2D) must be positive for nonexceptional types");
    r.of_2D = {c, 0, 0};
  }
  Int c2 = chi(2 * D - canonical_class(s));
  check(c2 <= 0, "2D-K must have nonpositive Euler characteristic");
  if (!(D.is_zero() && n == 10)) check(c2 < 0, "h1(2D-K) vanishes only for O on n = 10");
  r.of_2D_minus_K = {0, -c2, 0};
  return r;
}

Int growth_formula(int n, int k) {
  if (n < 10 || n > 12) throw unsupported_n_error("growth formula covers 10 <= n <= 12");
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("growth formula needs odd k >= 3");

  Convergent c = convergents(Int(n), k).back();
  Int floored = isqrt(9 * c.q * c.q * Int(n)) - Int(n) * c.q;  // floor(q_k (3 sqrt n - n))
  Int num = 11 - Int(n) + floored;
  check(num % 2 == 0, "growth formula parity");
  Int result = num / 2;

  Divisor Dk = divisor_from_convergent(n, k);
  Int direct = chi(2 * Dk - canonical_class(Surface(n)));
  check(result == direct, "growth formula must equal chi(2 D_k - K)");
  return result;
}

Timeline wall_events(const Surface& s, const Int& chi, const Rat& t_min) {
  const int n = s.n();
  if (n <= 9) return Timeline{true, {}};
  validate_moduli_args(s, chi);
  if (!is_square(Int(n)) && cmp_sqrt(t_min, Int(n)) <= 0)
    throw std::invalid_argument("t_min must exceed sqrt(n): walls accumulate there");

  auto orbits = orbits_with_wall_above(s, t_min, /*allow_equal=*/false);
  Timeline tl = assemble_timeline(s, std::move(orbits));
  std::vector<WallEvent> kept;
  for (WallEvent& e : tl.events)
    if (e.t > t_min) kept.push_back(std::move(e));
  tl.events = std::move(kept);
  return tl;
}

Timeline wall_events_first(const Surface& s, const Int& chi, int count) {
  const int n = s.n();
  if (n <= 9) return Timeline{true, {}};
  validate_moduli_args(s, chi);
  if (count < 1) throw std::invalid_argument("need count >= 1");

  // Each family's walls strictly decrease, so depth count+2 already contains
  // the top `count` events.
  std::vector<TypeOrbit> orbits = enumerate_types(s, type_chi(n), count + 2);
  Timeline tl = assemble_timeline(s, std::move(orbits));
  std::vector<WallEvent> kept;
  int component_events = 0;
  for (WallEvent& e : tl.events) {
    if (e.kind != EventKind::emptiness_boundary) {
      if (component_events == count) break;
      ++component_events;
    }
    kept.push_back(std::move(e));
  }
  tl.events = std::move(kept);
  return tl;
}

std::vector<Component> snapshot(const Surface& s, const Int& chi, const Rat& t) {
  const int n = s.n();
  if (n <= 9) return {};
  validate_moduli_args(s, chi);
  if (cmp_sqrt(t, Int(n)) <= 0)
    throw std::invalid_argument("t must exceed sqrt(n)");
  if (t > Rat(Int(n), 3))
    throw std::invalid_argument("moduli space is empty for t > n/3: t out of range");

  const Rat closed_right(27, 5);
  auto orbits = orbits_with_wall_above(s, t, /*allow_equal=*/true);
  for (const TypeOrbit& o : orbits) {
    if (o.t != t) continue;
    if (n == 25 && t == closed_right) continue;  // chamber closed at its right end
    throw wall_boundary_error("t lies on a wall (t_D of " + o.rep.str() + "); perturb t");
  }

  bool blown_up = false;
  for (const TypeOrbit& o : orbits)
    if (o.rep.is_exceptional() && o.t > t) blown_up = true;

  std::vector<Component> out;
  for (const TypeOrbit& o : orbits) {
    bool include = o.t > t || (n == 25 && o.t == t && t == closed_right);
    if (!include) continue;
    const Divisor& D = o.rep;
    if (D.is_zero()) {
      if (n >= 11)
        out.push_back(Component{D, Int(n) - 11, 1,
                                blown_up ? ComponentShape::blowup_of_projective_space
                                         : ComponentShape::projective_space});
      continue;
    }
    if (D.is_exceptional()) continue;  // lives inside the type-O component
    out.push_back(Component{D, component_dim(D), o.copies, ComponentShape::projective_space});
  }
  return out;
}

std::pair<Int, Int> elem_mod_dim_bounds(const Int& base_dim, const Int& steps) {
  if (base_dim < 0 || steps < 0)
    throw std::invalid_argument("elem_mod_dim_bounds needs nonnegative arguments");
  return {base_dim + 3 * steps, base_dim + 4 * steps};
}

DimCertificate components_at_least(const Surface& s, const Int& chi, int k, const Int& r) {
  const int n = s.n();
  if (n < 10 || n > 12)
    throw unsupported_n_error("component certificates cover 10 <= n <= 12");
  if (!s.shgh()) throw missing_assumption_error("--assume-shgh");
  if (chi > 2) throw std::invalid_argument("chi must be <= 2");
  if (k < 1 || r < 1) throw std::invalid_argument("need k >= 1 and r >= 1");

  const Int steps = 2 - chi;
  for (int depth = k + 2;; depth *= 2) {
    check(depth <= 4096, "certificate search failed to terminate");
    DimCertificate cert;
    for (const TypeOrbit& orbit : enumerate_types(s, 1, depth)) {
      if (orbit.rep.is_zero() && n == 10) continue;  // no type-O component on n = 10
      Int dim = component_dim(orbit.rep);
      auto [lo, hi] = elem_mod_dim_bounds(dim, steps);
      if (lo < r) continue;
      bool clashes = std::any_of(cert.orbits.begin(), cert.orbits.end(),
                                 [&](const DimCertificate::Entry& e) {
                                   return abs(e.dim - dim) <= steps;
                                 });
      if (clashes) continue;  // need pairwise dimension gaps > 2 - chi
      cert.orbits.push_back(DimCertificate::Entry{orbit, dim, lo, hi});
      if (static_cast<int>(cert.orbits.size()) == k) {
        cert.t_star = orbit.t;
        return cert;
      }
    }
  }
}

}  // namespace nefwall
