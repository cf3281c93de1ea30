#pragma once

#include <cstdint>

namespace scffd {

/** Guard rails for the exponential searches.
 *
 * `max_tuples` bounds the candidate-tuple product of a divisor
 * enumeration; the remaining fields bound the fraction-field
 * irreducibility test of the fringe ring.  Exceeding a cap raises
 * ErrorKind::cap_exceeded rather than silently truncating.
 */
struct SearchCaps {
    std::uint64_t max_tuples = 1'000'000;
    int max_degree = 4;       // y-degree admitted by the fraction-field test
    int max_stage_vars = 2;   // stage variables admitted by the fraction-field test
    long max_coeff_height = 50;  // integer-coefficient height admitted by the same test
};

}  // namespace scffd
