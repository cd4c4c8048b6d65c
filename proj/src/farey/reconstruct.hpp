#pragma once

#include "cf.hpp"
#include "linalg.hpp"

namespace farey {

// One displayed state of the nose-stretching chain; columns are the current
// vectors, erased slots are zero columns.
struct NoseChainEntry {
    MatZ state;
    std::string label; // "start", "1", "2", "|_2", ...
};

struct NoseStretch {
    std::vector<NoseChainEntry> chain;
    // Non-zero columns after each element and its erasures: the yard T_s.
    std::vector<std::vector<IntVec>> yards;
    std::vector<int> element_cols; // 1-based column changed by each element
    IntVec pennant;
};

// Reconstructs the Farey simplices of a continued fraction by repeated Farey
// additions with erasure events (the nose stretching algorithm).
NoseStretch nose_stretch(const FareyCF& cf, int n);

// Stage-1 generators A_1, A_2, A_3 and stage-2 generators B_ij = id + E_ij.
MatZ generator_a(int i);
MatZ generator_b(int i, int j);

struct CFMatrix {
    MatZ m;                      // full product
    std::vector<MatZ> factors;   // per-element generator powers, in order
    std::vector<MatZ> partials;  // partials[i] = product of the first i factors
};

// Continued fraction matrix M = A1^a1 A2^a2 A3^a3 ... Bst^b1 Bts^b2 ...,
// multiplied left to right; columns of the i-th partial are the i-th yard.
CFMatrix cf_matrix(const FareyCF& cf);
CFMatrix cf_matrix(const FareyForm& form);

// Generator power with the off-diagonal entries replaced by an arbitrary
// non-negative rational exponent (the analytic continuation of the algorithm).
std::vector<std::vector<Rat>> real_power_a(int i, const Rat& t);
std::vector<std::vector<Rat>> real_power_b(int i, int j, const Rat& t);

} // namespace farey
