#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nefwall/diophantine.hpp"

namespace nefwall {

// Which conjecture, if any, the statement rests on.  Square n (16, 25) gives
// unconditional classifications; for the rest the converse direction needs
// Nagata, and the moduli descriptions need SHGH.
enum class Conditionality { unconditional, requires_nagata, requires_shgh };

const char* to_string(Conditionality c);

// One symmetric-group orbit of destabilizing divisor classes: a canonical
// sorted representative plus the orbit size.  Orbits are never expanded into
// their permutations.
struct TypeOrbit {
  Divisor rep;
  Int copies;
  std::optional<std::string> family;     // the I..VI labels for n = 13
  std::optional<SolutionChain> chain;
  Conditionality cond = Conditionality::unconditional;
  Rat t;          // wall value t_D
  Int chi_value;  // chi(rep)
};

// chi(D) < (n-1)/8 for every admissible type.
Rat chi_strict_bound(const Surface& s);

// Largest l with l < (n - sqrt((8 chi + 1) n)) / 2, computed by integer
// square comparison.
Int max_steps_from_equal(const Surface& s, const Int& chi_D);

// All type orbits with chi(D) >= chi_target and 2B.D < B.K, each infinite
// family expanded to chain_depth members.  Supported surfaces: 10 <= n <= 17
// and n = 25; everything else is rejected rather than extrapolated.  Output
// is sorted by strictly decreasing wall value (ties broken by larger divisor).
std::vector<TypeOrbit> enumerate_types(const Surface& s, const Int& chi_target,
                                       int chain_depth);

// The six labelled families for n = 13, `depth` members each.
std::vector<TypeOrbit> classify_n13(int depth);

// The nine orbit rows with chi(D) >= 1 for n = 25, in decreasing t_D order.
std::vector<TypeOrbit> n25_chi1_table();

// Sufficiency test for a balanced divisor with nonnegative multiplicities:
// 1 <= chi < (n-1)/8 and steps_from_equal below the bound force
// 2B.D < B.K (asserted when true).
bool verify_sufficient(const Divisor& D, const Int& chi_D);

// 2B.D as an integer; defined only when n is a perfect square.
Int two_b_dot_d(const Divisor& D);

}  // namespace nefwall
