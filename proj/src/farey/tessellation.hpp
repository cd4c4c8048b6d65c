#pragma once

#include "cf.hpp"

#include <set>

namespace farey {

// Componentwise vector addition (the Farey sum).
IntVec farey_sum(const std::vector<IntVec>& vs);

// A vertex of a run together with the basis slot (1-based column) it occupies.
struct LabeledVert {
    int col = 0;
    IntVec v;
    bool operator==(const LabeledVert& o) const { return col == o.col && v == o.v; }
    bool operator<(const LabeledVert& o) const { return col != o.col ? col < o.col : v < o.v; }
};

struct RunStep {
    int changed_col = 0;            // column taken by the new vertex
    std::vector<int> dropped_cols;  // columns removed besides the inherited one
    IntVec apex;                    // the new vertex W = Farey sum of the base yard
    std::vector<LabeledVert> yard;  // yard after the step
};

// Farey summation run: deck, one entry per pyramid, extracted continued
// fraction, principal structure. Yard i is steps[i-1].yard; yard 0 the deck.
struct SummationRun {
    int n = 3;
    std::vector<LabeledVert> deck;
    std::vector<RunStep> steps;
    bool terminated = false;
    IntVec pennant;
    FareyCF cf;

    std::vector<LabeledVert> yard(std::size_t i) const { return i == 0 ? deck : steps[i - 1].yard; }
    std::size_t yard_count() const { return steps.size() + 1; }
    // Pyramid S_i = yard_{i-1} together with the i-th apex, i = 1..steps.
    std::vector<IntVec> pyramid(std::size_t i) const;

    // True for yards that are principal (deck, nest and pennant included).
    std::vector<bool> principal;
    std::vector<std::size_t> principal_indices;
    std::size_t nest_index = 0;

    struct Division {
        std::size_t from = 0, to = 0; // principal yard indices
        std::vector<LabeledVert> verts;
    };
    std::vector<Division> divisions;
};

// Runs the geometric algorithm for a ray. Rational input is reduced to its
// primitive integer direction. Stops after max_steps pyramids if the ray is
// irrationally placed (cf.terminated false).
SummationRun farey_summation_run(const IntVec& v, std::size_t max_steps = 5000000);
SummationRun farey_summation_run(const RatVec& v, std::size_t max_steps = 5000000);

// Expands a continued fraction into the same structure, one step per unit
// Farey addition; works for any formally valid fraction.
SummationRun run_from_cf(const FareyCF& cf, int n = 3);

// Farey-summation tabulation of the run (3d).
FareyForm cf_of_run(const SummationRun& run);

struct Tessellation {
    int n = 2;
    // Faces of all dimensions present in the construction set, keyed by their
    // sorted vertex lists.
    std::set<std::vector<IntVec>> faces;
    // All Farey pyramids built so far (tessellation simplices, all dimensions).
    std::set<std::vector<IntVec>> simplices;
    std::vector<std::vector<IntVec>> maximal() const; // full-dimensional ones
};

// Breadth-first growth of the Farey tessellation to the given depth.
Tessellation tessellate(int n, int depth);

} // namespace farey
