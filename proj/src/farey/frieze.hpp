#pragma once

#include "linalg.hpp"
#include "prismatic.hpp"

#include <array>
#include <map>

namespace farey {

// Farey continuant: K0 = 1, K1(x) = x, K2(x1,x2) = (x1+1)x2, then
// Kn = xn (Kn-1 + Kn-2) + Kn-3.
Int continuant(const std::vector<Int>& xs);

// Same value through the anti-recursion Kn = x1 Kn-1(x2..) + x2 Kn-2(x3..) + Kn-3(x4..).
Int continuant_anti(const std::vector<Int>& xs);

// S(a) = A1^a composed with the cyclic basis shift.
MatZ continuant_generator(const Int& a);
// M_n(a_1..a_n) = S(a_1) ... S(a_n).
MatZ continuant_matrix(const std::vector<Int>& as);
// v_n(a_1..a_n) = M_n * e_1, written out with continuants.
IntVec continuant_vector(const std::vector<Int>& as);

// Lambda-length of two diagram vertices: the continuant of the geodesic slice
// between them, anchored at the earlier vertex's slot. Identical vertices give
// 0, vertices sharing a simplex give 1.
Int lambda_length(const PrismaticDiagram& d, const DiagVert& v, const DiagVert& w);
Int lambda_length(const PrismaticDiagram& d, const SlotLabel& v, const SlotLabel& w);

enum class Chirality { Left, Right };

struct NiceTriangle {
    std::array<DiagVert, 3> verts; // some cyclic order
    int edge_mast = 0;
    Chirality chirality = Chirality::Left;
    std::size_t simplex = 0; // the unique simplex carrying the face
};

// All nice boundary triangles (faces touching neither the deck face nor any
// nest vertex), in their canonical clockwise (for V use) orientation.
std::vector<NiceTriangle> nice_triangles(const PrismaticDiagram& d);

// Reverses orientation to the counter-clockwise convention used for W.
std::array<DiagVert, 3> ccw(const NiceTriangle& t);

struct PtolemyResult {
    std::vector<std::vector<Int>> matrix; // rows follow the V argument order
    Int det;
    Chirality v_chirality;
};

// Ptolemy constant of an ordered pair of nice triangles: determinant of the
// lambda-length matrix over the slice between them. V must be clockwise and
// precede W (counter-clockwise); every V-W vertex pair must be separated by at
// least one simplex.
PtolemyResult ptolemy_constant(const PrismaticDiagram& d, const std::array<DiagVert, 3>& v_tri,
                               const std::array<DiagVert, 3>& w_tri);

struct FriezePattern {
    PrismaticDiagram diagram;
    std::map<std::pair<DiagVert, DiagVert>, Int> table;
};

// Lambda table over all vertex pairs of an all-positive diagram.
FriezePattern frieze_pattern(const PrismaticDiagram& d);

} // namespace farey
