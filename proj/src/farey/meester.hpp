#pragma once

#include "cf.hpp"

namespace farey {

// Full record of a subtractive run: states[m] is the remainder after m elements,
// states[0] the input.
struct MeesterTrace {
    std::vector<RatVec> states;
    FareyCF cf;

    const RatVec& remainder(std::size_t i) const {
        if (i >= states.size()) throw Error("remainder index out of range");
        return states[i];
    }
};

// Cyclic subtractive algorithm on a non-negative tuple. Each turn subtracts the
// current coordinate from all other non-zero ones as often as possible; dead
// coordinates are skipped. Stops at one non-zero coordinate or after max_steps
// elements (then cf.terminated is false).
MeesterTrace meester(const RatVec& v, std::size_t max_steps = 100000);
MeesterTrace meester(const IntVec& v, std::size_t max_steps = 100000);

// Pennant of the fraction truncated after i elements (the i-th convergent).
IntVec convergent(const FareyCF& cf, std::size_t i);

} // namespace farey
