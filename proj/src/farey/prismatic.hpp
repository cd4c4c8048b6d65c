#pragma once

#include "cf.hpp"

namespace farey {

// Vertex of a prismatic diagram, identified by its mast and height on it.
struct DiagVert {
    int mast = 0; // 1-based
    Int height = 0;
    bool operator==(const DiagVert& o) const { return mast == o.mast && height == o.height; }
    bool operator<(const DiagVert& o) const {
        return mast != o.mast ? mast < o.mast : height < o.height;
    }
    std::string str() const;
};

struct DiagSimplex {
    int mast = 0;                // mast extended by this simplex
    std::vector<DiagVert> verts; // tops of all masts before the step plus the new vertex
};

struct LRSequence {
    std::vector<int> raw;                         // mast built at each step
    std::vector<std::pair<int, Int>> exponential; // maximal runs as (mast, multiplicity)
};

// Slot/vertex label in the v_{i,j} scheme: slot is the 1-based exponential LR
// position, index runs 1..mult(slot)+1 along the slot's mast segment.
struct SlotLabel {
    std::size_t slot = 0;
    Int index = 0;
};

// Canonical prismatic diagram of dimension k: base simplex on the coordinate
// endpoints, translation vector (1,...,1,0,...,0), one simplex per mast edge.
class PrismaticDiagram {
public:
    // Slots follow the cyclic mast order 1,2,...,k,1,...; zero multiplicities are
    // allowed and contribute no simplices.
    static PrismaticDiagram from_slots(int k, std::vector<Int> slot_mults);
    // Arbitrary raw LR sequence, fitted to the slot cycle with zero slots.
    static PrismaticDiagram from_lr(int k, const std::vector<int>& raw);

    int masts() const { return k_; }
    std::size_t length() const { return simplices_.size(); } // number of simplices
    const std::vector<Int>& slots() const { return slot_mults_; }
    const std::vector<Int>& heights() const { return heights_; }
    const std::vector<DiagSimplex>& simplices() const { return simplices_; }

    std::vector<DiagVert> deck() const;
    std::vector<DiagVert> nest() const;
    DiagVert pennant() const;

    LRSequence lr() const;

    // Canonical embedding: E_mast + height * (1,...,1,0,...,0).
    IntVec embed(const DiagVert& v) const;

    // v_{slot,index} -> vertex; index may be mult+1 (the segment's top).
    DiagVert vertex_at(const SlotLabel& l) const;
    // Earliest slot label of a vertex.
    SlotLabel label_of(const DiagVert& v) const;

    // Simplices containing the vertex form a contiguous range [first, last],
    // 1-based; deck vertices start at 1, nest vertices end at length().
    std::pair<std::size_t, std::size_t> membership(const DiagVert& v) const;

    // Yards are indexed 1..length()+1: yard y is the front after y-1 simplices,
    // so yard 1 is the deck and yard length()+1 the nest.
    std::vector<DiagVert> yard(std::size_t y) const;

    // Simplices i..j-1 between yards i and j as a standalone diagram; i < j.
    PrismaticDiagram slice(std::size_t i, std::size_t j) const;
    // Yard range (i, j) of the smallest slice containing both vertices.
    std::pair<std::size_t, std::size_t> geodesic_range(const DiagVert& v, const DiagVert& w) const;
    PrismaticDiagram geodesic(const DiagVert& v, const DiagVert& w) const;

    // Slot index (1-based) of a simplex, and per-slot simplex ranges.
    std::size_t slot_of_simplex(std::size_t t) const;
    std::pair<std::size_t, std::size_t> simplex_range_of_slot(std::size_t slot) const;

    bool operator==(const PrismaticDiagram& o) const {
        return k_ == o.k_ && slot_mults_ == o.slot_mults_;
    }

private:
    int k_ = 0;
    std::vector<Int> slot_mults_;
    std::vector<Int> heights_;
    std::vector<DiagSimplex> simplices_;
    std::vector<std::size_t> simplex_slot_; // slot per simplex

    void build();
};

// Flag of decreasing-dimension parts; part-local mast i corresponds to the
// global mast global_masts[i-1].
struct FlagPart {
    PrismaticDiagram diagram;
    std::vector<int> global_masts;
};

struct FlagDiagram {
    std::vector<FlagPart> parts;
    // Index sets S_1 > S_2 > ...: S_i lists the global masts of part i.
    std::vector<std::vector<int>> index_sets() const;
};

// Canonical prismatic flag diagram of a finite admissible 3d fraction.
FlagDiagram diagram_of_cf(const FareyCF& cf);

// The inverse of diagram_of_cf (the complete-invariant direction).
FareyCF cf_of_diagram(const FlagDiagram& d);

LRSequence lr_sequence(const PrismaticDiagram& d);

// A path-triangulation given combinatorially: simplices as vertex-id lists, the
// marked deck face (ordered) and nest face.
struct AbstractTriangulation {
    std::vector<std::vector<int>> simplices;
    std::vector<int> deck;
    std::vector<int> nest;
};

// Orders the triangulation along its dual path and returns the canonical
// prismatic diagram; throws if the dual graph is not a path.
PrismaticDiagram canonicalize(const AbstractTriangulation& t);

AbstractTriangulation to_abstract(const PrismaticDiagram& d);

} // namespace farey
