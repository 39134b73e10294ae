#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "linecon/congruence.hpp"
#include "linecon/oracle.hpp"

namespace linecon {

/// "id" | "total" | "k" | "k;r1,r2,...", validated against L_n. Throws
/// ParseError with the validation report on bad input.
Congruence parse_congruence(int n, std::string_view text);

/// {"n", "kind", "k"?, "rests"?, "step", "frequency"?}; absent fields omitted.
nlohmann::ordered_json to_json(const Congruence& c);

/// Inverse of to_json. Throws ParseError on schema or consistency errors.
Congruence congruence_from_json(const nlohmann::ordered_json& j);

/// Fixed-width listing: form, step, frequency, rests, extremes.
std::string format_table(const std::vector<Congruence>& cs);

/// Hasse diagram, bottom to top, nodes named by canonical text form.
std::string lattice_to_dot(const oracle::CongruenceLattice& lat);

/// Elements, covers and meet/join tables by element index.
nlohmann::ordered_json lattice_to_json(const oracle::CongruenceLattice& lat);

}  // namespace linecon
