#ifndef ORDHOMEO_TEXT_FORMAT_HPP
#define ORDHOMEO_TEXT_FORMAT_HPP

#include <string>
#include <string_view>

#include "ordhomeo/homeo.hpp"
#include "ordhomeo/sieve.hpp"

namespace ordhomeo
{

// Homeo files hold one piece per line, "[0, X] -> (A, B]"; constraint files
// hold one constraint per line, "X : {A, B}". Blank lines and lines whose
// first non-blank character is '#' are skipped.

PwHomeo parse_homeo(std::string_view text);
std::string format_homeo(PwHomeo const &g, FormatOptions const &opts = {});

ConstraintSystem parse_constraints(std::string_view text);
std::string format_constraints(ConstraintSystem const &cs, FormatOptions const &opts = {});

/// "1 -> 2" per pair, one per line.
std::string format_injection(PartialInjection const &h, FormatOptions const &opts = {});

/// Cycle notation "(1, 2, 3)(w, w + 1)"; "()" for the identity.
std::string format_permutation(FinitePermutation const &p, FormatOptions const &opts = {});

} // namespace ordhomeo

#endif // ORDHOMEO_TEXT_FORMAT_HPP
