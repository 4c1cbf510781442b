#ifndef VSPREAD_CAPS_HPP
#define VSPREAD_CAPS_HPP

#include <cstddef>

namespace vspread {

/* Resource caps guarding the combinatorial blowups.  Defaults are desk
 * scale; the VSPREAD_CAP environment variable overrides them, either as a
 * bare integer (sets intersection_gens) or as comma-separated key=value
 * pairs: gens=N, oracle-vars=N, linquot=N. */
struct Caps {
    std::size_t intersection_gens = 200000; // pairwise products per intersect/power step
    int oracle_vars = 16;                   // facet oracle subset scan: 2^n masks
    std::size_t linquot_gens = 5000;        // backtracking linear-quotient search
};

const Caps& caps();

/* Parses an override string; throws InvalidInput on malformed input.
 * Exposed for tests; caps() applies it to VSPREAD_CAP once. */
Caps parse_caps(const char* spec);

} // namespace vspread

#endif
