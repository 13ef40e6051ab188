#pragma once

#include <string>

#include "nefwall/json_io.hpp"

namespace nefwall {

enum class OutputFormat { markdown, json, csv };

OutputFormat parse_format(const std::string& s);  // "markdown" | "json" | "csv"

std::string render_walls(const Surface& s, const Int& chi, const Timeline& tl,
                         OutputFormat f);
std::string render_classify(const Surface& s, const Int& chi_target,
                            const std::vector<TypeOrbit>& orbits, OutputFormat f);
std::string render_snapshot(const Surface& s, const Int& chi, const Rat& t,
                            const std::vector<Component>& components, OutputFormat f);
std::string render_convergents(int n, const std::vector<Convergent>& cs, OutputFormat f);
std::string render_pell(int n, const Int& N, const std::vector<PellSolution>& sols,
                        OutputFormat f);
std::string render_cohomology(const Surface& s, const Divisor& D,
                              const CohomologyReport& r, OutputFormat f);

// "P^8", "13 copies of P^10", "Bl_16 P^5", ...
std::string component_label(const Int& dim, const Int& copies, ComponentShape shape,
                            int n_points);

}  // namespace nefwall
