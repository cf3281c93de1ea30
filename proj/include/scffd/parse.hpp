#pragma once

#include <functional>
#include <string>
#include <vector>

#include "scffd/ring.hpp"
#include "scffd/schedule.hpp"

namespace scffd {

/** Outcome of parsing a ring descriptor.
 *
 * Staged descriptors (Staged, StagedIrred, IrredDestroy, and Fringe over
 * a staged base) additionally carry their schedule and a stage-ring
 * builder so queries can be answered at a finite stage instead of at the
 * limit of the schedule.
 */
struct ParsedRing {
    RingPtr ring;

    enum class Staging { none, primes, irreducibles };
    Staging staging = Staging::none;
    EnumerationSchedule schedule;
    std::vector<std::string> stage_vars;
    std::function<RingPtr(std::size_t)> stage_ring;  // k -> the stage-k ring

    bool staged() const { return staging != Staging::none; }
    /** The ring after k stages; ValidationError when not staged. */
    RingPtr at_stage(std::size_t k) const;
};

/** Descriptor grammar:
 *   Z | Quad(d) | Poly(R,var) | Destroy(R,q,var)
 *     | Staged(primes=[i,...],vars=[v,...])
 *     | IrredDestroy(R,p,var) | StagedIrred(primes=[i,...],vars=[v,...])
 *     | Fringe(R,var)
 * Construction invariants (primality of q, schedule injectivity, fresh
 * variables) are validated; IrredDestroy normalizes to StagedIrred. */
ParsedRing parse_ring(const std::string& text);

/** Evaluate an element expression in the fraction field of the ring's
 * cover, then apply the membership test.  Errors: SyntaxError (with
 * position), NotInRing, DivisionByZero, ValidationError (negative
 * exponent outside a staged variable). */
Elem parse_element(const RingPtr& ring, const std::string& text);

}  // namespace scffd
