#pragma once

#include "linalg.hpp"

namespace farey {

// gcd of the coordinates; content(v) == 1 iff v lies on the unit integer sphere.
Int content(const IntVec& v);

// Number of interior lattice points of the segment [p, q] plus one.
Int integer_length(const IntVec& p, const IntVec& q);

// Index of the sublattice generated by vs inside the full lattice of their span,
// i.e. the product of the invariant factors of the coordinate matrix.
Int integer_volume(const std::vector<IntVec>& vs);

// Integer sine from spanning data: W spans the intersection of the two planes,
// u_extra and v_extra complete it to bases of each plane.
//   isin = iv(V,U,W) / (iv(V) iv(U) iv(W))
Rat integer_sine(const std::vector<IntVec>& v_extra, const std::vector<IntVec>& u_extra,
                 const std::vector<IntVec>& w_shared);

// Integer sine of the angle between the affine spans of two faces (vertex lists).
// Picks honest lattice-basis completions internally; equal spans give 0.
Rat integer_sine_of_faces(const std::vector<IntVec>& face1, const std::vector<IntVec>& face2);

// Rational cone in Z^3 spanned by three independent rays from the origin.
struct Cone3 {
    IntVec e1, e2, e3; // content-1 directions
    Cone3(IntVec a, IntVec b, IntVec c);
};

struct Arctangent {
    MatZ h;            // [[1,a1,b1],[0,a2,b2],[0,0,b3]]
    Int icos12() const { return h.at(0, 1); }
    Int icos13() const { return h.at(0, 2); }
    Int icos23() const { return h.at(1, 2); }
    Int isin1() const { return h.at(1, 1); }
    Int isin2() const { return h.at(2, 2); }
};

// Hermite-style normal form of the cone's edge matrix, unique over the edge
// permutations that satisfy the normalization; fully degenerate cones (the
// identity form) are rejected.
Arctangent integer_arctangent(const Cone3& cone);

// True iff the closed convex hull of verts contains no lattice point other than
// the vertices. Enumerates the integer bounding box; throws past the budget.
bool is_empty_polytope(const std::vector<IntVec>& verts, unsigned long budget = 10000000UL);

} // namespace farey
