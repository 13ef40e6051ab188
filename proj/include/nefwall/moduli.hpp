#pragma once

#include <array>
#include <utility>

#include "nefwall/classify.hpp"

namespace nefwall {

enum class EventKind { emptiness_boundary, new_component, blowup_modification };

const char* to_string(EventKind k);

// One entry of the wall-crossing timeline: at t, sorted strictly decreasing,
// either the moduli space stops being empty, a new component (or a batch of
// permuted copies) appears, or the type-O component gets blown up at n points.
struct WallEvent {
  Rat t;
  TypeOrbit orbit;
  EventKind kind;
  Int dim;  // component dimension; for blowups, the modified component's
  Int copies;
  Conditionality cond = Conditionality::unconditional;
};

struct Timeline {
  bool empty_for_all_ample = false;  // n <= 9: empty for every ample divisor
  std::vector<WallEvent> events;
};

// dim P Ext^1(K(-D), O(D)) = -chi(2D-K) - 1 for nontrivial nonexceptional D;
// n - 11 for the trivial and exceptional types.  Throws when no component
// exists (type O with n <= 10) or on a negative result.
Int component_dim(const Divisor& D);

struct ExtDims {
  Int hom, ext1, ext2;
};

// Ext dimensions of a nonsplit bundle of type D against itself.  SHGH is a
// required assumption for 10 <= n <= 15.
ExtDims ext_dims(const Divisor& D, const Surface& s);

// h^0/h^1/h^2 of O(D), O(2D) and O(2D-K) for a type divisor, assuming SHGH.
struct CohomologyReport {
  std::array<Int, 3> of_D;
  std::array<Int, 3> of_2D;
  std::array<Int, 3> of_2D_minus_K;
};

CohomologyReport shgh_cohomology_report(const Divisor& D, const Surface& s);

// (11 - n + floor(q_k (3 sqrt(n) - n))) / 2 for n in 10..12 and odd k >= 3,
// with the floor taken by integer square comparison; equals chi(2 D_k - K).
Int growth_formula(int n, int k);

// All wall events with t > t_min, strictly decreasing in t.  chi must be the
// maximal Euler characteristic (2, or 4 when n = 25).  For nonsquare n,
// t_min must exceed sqrt(n) or the timeline would be infinite.
Timeline wall_events(const Surface& s, const Int& chi, const Rat& t_min);

// The first `count` component/blowup events (the emptiness boundary, when it
// is a separate event, is prepended and not counted).
Timeline wall_events_first(const Surface& s, const Int& chi, int count);

enum class ComponentShape { projective_space, blowup_of_projective_space };

struct Component {
  Divisor type;
  Int dim;
  Int copies;
  ComponentShape shape = ComponentShape::projective_space;
};

// Component inventory of M_{A_t}(2, K, chi) at an off-wall t.  The n = 25
// chamber is closed on the right at t = 27/5, as that moduli description
// includes its right endpoint; every other wall value is rejected.
std::vector<Component> snapshot(const Surface& s, const Int& chi, const Rat& t);

// Dimension bounds base + 3*steps <= dim <= base + 4*steps for `steps`
// elementary modifications.
std::pair<Int, Int> elem_mod_dim_bounds(const Int& base_dim, const Int& steps);

// Certificate that for sqrt(n) < t < t_star the moduli space with Euler
// characteristic chi <= 2 has at least k components of dimension >= r.
struct DimCertificate {
  struct Entry {
    TypeOrbit orbit;
    Int dim;  // component dimension at chi = 2
    Int lo, hi;
  };
  Rat t_star;
  std::vector<Entry> orbits;
};

DimCertificate components_at_least(const Surface& s, const Int& chi, int k, const Int& r);

}  // namespace nefwall
