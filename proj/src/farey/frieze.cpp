#include "frieze.hpp"

#include <algorithm>

namespace farey {

Int continuant(const std::vector<Int>& xs) {
    const std::size_t n = xs.size();
    if (n == 0) return 1;
    if (n == 1) return xs[0];
    if (n == 2) return (xs[0] + 1) * xs[1];
    Int k0 = 1;                    // K_0
    Int k1 = xs[0];                // K_1
    Int k2 = (xs[0] + 1) * xs[1];  // K_2
    for (std::size_t i = 2; i < n; ++i) {
        Int k3 = xs[i] * (k2 + k1) + k0;
        k0 = k1;
        k1 = k2;
        k2 = k3;
    }
    return k2;
}

Int continuant_anti(const std::vector<Int>& xs) {
    const std::size_t n = xs.size();
    if (n <= 2) return continuant(xs);
    auto tail = [&](std::size_t from) {
        return std::vector<Int>(xs.begin() + static_cast<long>(from), xs.end());
    };
    return xs[0] * continuant_anti(tail(1)) + xs[1] * continuant_anti(tail(2)) +
           continuant_anti(tail(3));
}

MatZ continuant_generator(const Int& a) {
    MatZ s(3, 3);
    s.at(0, 0) = a;
    s.at(0, 1) = 1;
    s.at(1, 0) = a;
    s.at(1, 2) = 1;
    s.at(2, 0) = 1;
    return s;
}

MatZ continuant_matrix(const std::vector<Int>& as) {
    MatZ m = MatZ::identity(3);
    for (const auto& a : as) m = m * continuant_generator(a);
    return m;
}

IntVec continuant_vector(const std::vector<Int>& as) {
    IntVec v(3);
    if (as.empty()) { // M_0 e_1
        v[0] = 1;
        return v;
    }
    // components: K_n(a_1..), a_1 K_{n-1}(a_2..) + K_{n-2}(a_3..), K_{n-1}(a_2..);
    // continuants of negative order read as 0.
    std::vector<Int> from2(as.begin() + 1, as.end());
    std::vector<Int> from3;
    if (as.size() >= 2) from3.assign(as.begin() + 2, as.end());
    v[0] = continuant(as);
    v[1] = as[0] * continuant(from2) + (as.size() >= 2 ? continuant(from3) : Int(0));
    v[2] = continuant(from2);
    return v;
}

namespace {

void require_all_positive(const PrismaticDiagram& d) {
    for (const auto& m : d.slots())
        if (m == 0)
            throw Error("lambda lengths are defined for fractions without zero elements");
}

// Per-slot simplex counts of the slice [lo, hi] (inclusive simplex range),
// anchored at the slot of lo. counts[t] is the slice's share of slot anchor+t.
struct SliceCounts {
    std::size_t anchor_slot = 0;
    std::vector<Int> counts;
    // height of the bottom of each slot's slice portion, per slot offset
    std::vector<Int> bottom_height;
};

SliceCounts slice_counts(const PrismaticDiagram& d, std::size_t lo, std::size_t hi) {
    SliceCounts sc;
    sc.anchor_slot = d.slot_of_simplex(lo);
    std::size_t last_slot = d.slot_of_simplex(hi);
    sc.counts.assign(last_slot - sc.anchor_slot + 1, Int(0));
    sc.bottom_height.assign(last_slot - sc.anchor_slot + 1, Int(-1));
    for (std::size_t t = lo; t <= hi; ++t) {
        std::size_t s = d.slot_of_simplex(t);
        sc.counts[s - sc.anchor_slot] += 1;
        const auto& sim = d.simplices()[t - 1];
        Int new_height = sim.verts.back().height;
        Int bottom = new_height - 1;
        auto& bh = sc.bottom_height[s - sc.anchor_slot];
        if (bh < 0 || bottom < bh) bh = bottom;
    }
    return sc;
}

} // namespace

Int lambda_length(const PrismaticDiagram& d, const SlotLabel& v, const SlotLabel& w) {
    require_all_positive(d);
    SlotLabel a = v, b = w;
    if (a.slot > b.slot || (a.slot == b.slot && a.index > b.index)) std::swap(a, b);
    if (a.slot == b.slot) return b.index - a.index; // along one mast segment
    const auto& slots = d.slots();
    Int head = slots[a.slot - 1] + 1 - a.index;
    Int tail = b.index - 1;
    std::vector<Int> seq;
    seq.push_back(head);
    for (std::size_t s = a.slot + 1; s < b.slot; ++s) seq.push_back(slots[s - 1]);
    seq.push_back(tail);
    return continuant(seq);
}

Int lambda_length(const PrismaticDiagram& d, const DiagVert& v, const DiagVert& w) {
    require_all_positive(d);
    if (v == w) return 0;
    auto mv = d.membership(v);
    auto mw = d.membership(w);
    if (mv.first <= mw.second && mw.first <= mv.second) return 1; // share a simplex
    return lambda_length(d, d.label_of(v), d.label_of(w));
}

std::vector<NiceTriangle> nice_triangles(const PrismaticDiagram& d) {
    std::vector<NiceTriangle> out;
    auto nest = d.nest();
    auto on_nest = [&](const DiagVert& v) {
        return std::find(nest.begin(), nest.end(), v) != nest.end();
    };
    const auto& sims = d.simplices();
    for (std::size_t t = 1; t <= sims.size(); ++t) {
        const auto& sim = sims[t - 1];
        DiagVert high = sim.verts.back();
        DiagVert low{high.mast, high.height - 1};
        for (const auto& apex : sim.verts) {
            if (apex.mast == high.mast) continue;
            NiceTriangle tri;
            tri.simplex = t;
            tri.edge_mast = high.mast;
            tri.chirality = (apex.mast == cyclic_coord(static_cast<std::size_t>(high.mast) + 1, 3))
                                ? Chirality::Left
                                : Chirality::Right;
            if (on_nest(low) || on_nest(high) || on_nest(apex)) continue;
            if (tri.chirality == Chirality::Right)
                tri.verts = {apex, low, high};
            else
                tri.verts = {low, apex, high};
            out.push_back(tri);
        }
    }
    return out;
}

std::array<DiagVert, 3> ccw(const NiceTriangle& t) {
    // reversing a cyclic order flips the orientation
    return {t.verts[2], t.verts[1], t.verts[0]};
}

namespace {

struct TriangleShape {
    DiagVert low, high, apex;
    Chirality chirality;
    std::size_t simplex;
};

TriangleShape classify(const PrismaticDiagram& d, const std::array<DiagVert, 3>& tri,
                       bool clockwise) {
    // find the mast edge
    TriangleShape s{};
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            if (tri[static_cast<std::size_t>(i)].mast == tri[static_cast<std::size_t>(j)].mast &&
                tri[static_cast<std::size_t>(j)].height ==
                    tri[static_cast<std::size_t>(i)].height + 1) {
                s.low = tri[static_cast<std::size_t>(i)];
                s.high = tri[static_cast<std::size_t>(j)];
                s.apex = tri[static_cast<std::size_t>(3 - i - j)];
                found = true;
                break;
            }
        }
    if (!found) throw Error("not a boundary triangle: no unit mast edge");
    if (s.apex.mast == s.low.mast) throw Error("not a boundary triangle: three vertices on a mast");
    s.chirality = (s.apex.mast == cyclic_coord(static_cast<std::size_t>(s.low.mast) + 1, 3))
                      ? Chirality::Left
                      : Chirality::Right;
    // the unique simplex carrying the edge
    auto mh = d.membership(s.high);
    s.simplex = mh.first;
    const auto& sim = d.simplices()[s.simplex - 1];
    bool apex_in = false;
    for (const auto& v : sim.verts)
        if (v == s.apex) apex_in = true;
    if (!apex_in) throw Error("not a face: the apex does not meet the edge's simplex");
    // orientation check: the argument order must be a cyclic rotation of the
    // canonical one
    std::array<DiagVert, 3> canon;
    if (clockwise)
        canon = (s.chirality == Chirality::Right) ? std::array<DiagVert, 3>{s.apex, s.low, s.high}
                                                  : std::array<DiagVert, 3>{s.low, s.apex, s.high};
    else
        canon = (s.chirality == Chirality::Right) ? std::array<DiagVert, 3>{s.high, s.low, s.apex}
                                                  : std::array<DiagVert, 3>{s.high, s.apex, s.low};
    bool rotation = false;
    for (int r = 0; r < 3; ++r)
        if (tri[static_cast<std::size_t>(r)] == canon[0] &&
            tri[static_cast<std::size_t>((r + 1) % 3)] == canon[1] &&
            tri[static_cast<std::size_t>((r + 2) % 3)] == canon[2])
            rotation = true;
    if (!rotation)
        throw Error(clockwise ? "V must be ordered clockwise" : "W must be ordered counter-clockwise");
    return s;
}

} // namespace

PtolemyResult ptolemy_constant(const PrismaticDiagram& d, const std::array<DiagVert, 3>& v_tri,
                               const std::array<DiagVert, 3>& w_tri) {
    require_all_positive(d);
    auto nest = d.nest();
    for (const auto& x : v_tri)
        for (const auto& nv : nest)
            if (x == nv) throw Error("V is not nice: it touches the nest");
    for (const auto& x : w_tri)
        for (const auto& nv : nest)
            if (x == nv) throw Error("W is not nice: it touches the nest");

    TriangleShape V = classify(d, v_tri, true);
    TriangleShape W = classify(d, w_tri, false);
    if (V.simplex >= W.simplex) throw Error("V must precede W along the diagram");
    for (const auto& x : v_tri)
        for (const auto& y : w_tri) {
            auto mx = d.membership(x);
            auto my = d.membership(y);
            if (mx.second >= my.first)
                throw Error("hypothesis violated: a V-W vertex pair shares a simplex");
        }

    SliceCounts sc = slice_counts(d, V.simplex, W.simplex);
    auto head_of = [&](const DiagVert& x) {
        // first in-slice slot on x's mast
        for (std::size_t off = 0; off < sc.counts.size(); ++off) {
            std::size_t slot = sc.anchor_slot + off;
            if (cyclic_coord(slot, d.masts()) != x.mast) continue;
            if (sc.counts[off] == 0) continue;
            Int top = sc.bottom_height[off] + sc.counts[off];
            Int head = top - x.height;
            if (head < 0 || head > sc.counts[off])
                throw Error("hypothesis violated: vertex outside its slice slot");
            return std::pair<std::size_t, Int>(slot, head);
        }
        throw Error("hypothesis violated: vertex mast absent from the slice");
    };
    auto tail_of = [&](const DiagVert& y) {
        for (std::size_t off = sc.counts.size(); off-- > 0;) {
            std::size_t slot = sc.anchor_slot + off;
            if (cyclic_coord(slot, d.masts()) != y.mast) continue;
            if (sc.counts[off] == 0) continue;
            Int tail = y.height - sc.bottom_height[off];
            if (tail < 0 || tail > sc.counts[off])
                throw Error("hypothesis violated: vertex outside its slice slot");
            return std::pair<std::size_t, Int>(slot, tail);
        }
        throw Error("hypothesis violated: vertex mast absent from the slice");
    };

    // column order: canonical counter-clockwise starting from the high vertex
    std::array<DiagVert, 3> cols = (W.chirality == Chirality::Right)
                                       ? std::array<DiagVert, 3>{W.high, W.low, W.apex}
                                       : std::array<DiagVert, 3>{W.high, W.apex, W.low};
    PtolemyResult res;
    res.v_chirality = V.chirality;
    for (const auto& x : v_tri) {
        auto [hs, head] = head_of(x);
        std::vector<Int> row;
        for (const auto& y : cols) {
            auto [ts, tail] = tail_of(y);
            if (hs >= ts) throw Error("hypothesis violated: degenerate slice between vertices");
            std::vector<Int> seq;
            seq.push_back(head);
            for (std::size_t s = hs + 1; s < ts; ++s) seq.push_back(sc.counts[s - sc.anchor_slot]);
            seq.push_back(tail);
            row.push_back(continuant(seq));
        }
        res.matrix.push_back(std::move(row));
    }
    MatZ m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            res.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    res.det = m.determinant();
    return res;
}

FriezePattern frieze_pattern(const PrismaticDiagram& d) {
    require_all_positive(d);
    FriezePattern fp;
    fp.diagram = d;
    std::vector<DiagVert> verts;
    for (int m = 1; m <= d.masts(); ++m)
        for (Int h = 0; h <= d.heights()[static_cast<std::size_t>(m - 1)]; ++h)
            verts.push_back({m, h});
    for (const auto& v : verts)
        for (const auto& w : verts) fp.table[{v, w}] = lambda_length(d, v, w);
    return fp;
}

} // namespace farey
