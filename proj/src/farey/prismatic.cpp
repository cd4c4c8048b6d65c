#include "prismatic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace farey {

namespace {
constexpr unsigned long kSimplexBudget = 1000000UL;
}

std::string DiagVert::str() const {
    std::ostringstream os;
    os << 'm' << mast << '@' << height;
    return os.str();
}

PrismaticDiagram PrismaticDiagram::from_slots(int k, std::vector<Int> slot_mults) {
    if (k < 2) throw Error("diagram needs at least two masts");
    for (const auto& m : slot_mults)
        if (m < 0) throw Error("negative multiplicity");
    PrismaticDiagram d;
    d.k_ = k;
    d.slot_mults_ = std::move(slot_mults);
    d.build();
    return d;
}

PrismaticDiagram PrismaticDiagram::from_lr(int k, const std::vector<int>& raw) {
    std::vector<Int> slots;
    std::size_t cursor = 0; // slots consumed so far
    std::size_t i = 0;
    while (i < raw.size()) {
        int mast = raw[i];
        if (mast < 1 || mast > k) throw Error("mast index out of range");
        std::size_t j = i;
        while (j < raw.size() && raw[j] == mast) ++j;
        while (cyclic_coord(cursor + 1, k) != mast) {
            slots.push_back(0);
            ++cursor;
        }
        slots.push_back(Int(static_cast<unsigned long>(j - i)));
        ++cursor;
        i = j;
    }
    return from_slots(k, std::move(slots));
}

void PrismaticDiagram::build() {
    heights_.assign(static_cast<std::size_t>(k_), Int(0));
    simplices_.clear();
    simplex_slot_.clear();
    Int total = 0;
    for (const auto& m : slot_mults_) total += m;
    if (total > Int(kSimplexBudget)) throw Error("diagram too large to materialize");
    std::vector<DiagVert> tops;
    for (int m = 1; m <= k_; ++m) tops.push_back({m, Int(0)});
    for (std::size_t s = 0; s < slot_mults_.size(); ++s) {
        int mast = cyclic_coord(s + 1, k_);
        unsigned long mult = mpz_get_ui(slot_mults_[s].get_mpz_t());
        for (unsigned long t = 0; t < mult; ++t) {
            DiagSimplex sim;
            sim.mast = mast;
            sim.verts = tops;
            DiagVert grown{mast, tops[static_cast<std::size_t>(mast - 1)].height + 1};
            sim.verts.push_back(grown);
            tops[static_cast<std::size_t>(mast - 1)] = grown;
            simplices_.push_back(std::move(sim));
            simplex_slot_.push_back(s + 1);
        }
        heights_[static_cast<std::size_t>(mast - 1)] += slot_mults_[s];
    }
}

std::vector<DiagVert> PrismaticDiagram::deck() const {
    std::vector<DiagVert> d;
    for (int m = 1; m <= k_; ++m) d.push_back({m, Int(0)});
    return d;
}

std::vector<DiagVert> PrismaticDiagram::nest() const {
    std::vector<DiagVert> d;
    for (int m = 1; m <= k_; ++m) d.push_back({m, heights_[static_cast<std::size_t>(m - 1)]});
    return d;
}

DiagVert PrismaticDiagram::pennant() const {
    if (simplices_.empty()) throw Error("empty diagram has no pennant");
    return simplices_.back().verts.back();
}

LRSequence PrismaticDiagram::lr() const {
    LRSequence out;
    for (const auto& s : simplices_) out.raw.push_back(s.mast);
    for (std::size_t i = 0; i < out.raw.size();) {
        std::size_t j = i;
        while (j < out.raw.size() && out.raw[j] == out.raw[i]) ++j;
        out.exponential.emplace_back(out.raw[i], Int(static_cast<unsigned long>(j - i)));
        i = j;
    }
    return out;
}

IntVec PrismaticDiagram::embed(const DiagVert& v) const {
    IntVec x(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) x[static_cast<std::size_t>(i)] = v.height;
    x[static_cast<std::size_t>(v.mast - 1)] += 1;
    return x;
}

DiagVert PrismaticDiagram::vertex_at(const SlotLabel& l) const {
    if (l.slot == 0 || l.slot > slot_mults_.size()) throw Error("slot out of range");
    const Int& mult = slot_mults_[l.slot - 1];
    if (l.index < 1 || l.index > mult + 1) throw Error("slot index out of range");
    int mast = cyclic_coord(l.slot, k_);
    Int base = 0;
    for (std::size_t s = 0; s + 1 < l.slot; ++s)
        if (cyclic_coord(s + 1, k_) == mast) base += slot_mults_[s];
    return {mast, base + l.index - 1};
}

SlotLabel PrismaticDiagram::label_of(const DiagVert& v) const {
    Int base = 0;
    for (std::size_t s = 0; s < slot_mults_.size(); ++s) {
        if (cyclic_coord(s + 1, k_) != v.mast) continue;
        if (slot_mults_[s] > 0 && v.height >= base && v.height <= base + slot_mults_[s])
            return {s + 1, v.height - base + 1};
        base += slot_mults_[s];
    }
    if (v.height == 0) {
        for (std::size_t s = 0; s < slot_mults_.size(); ++s)
            if (cyclic_coord(s + 1, k_) == v.mast) return {s + 1, Int(1)};
    }
    throw Error("vertex is not on the diagram");
}

std::pair<std::size_t, std::size_t> PrismaticDiagram::membership(const DiagVert& v) const {
    if (v.mast < 1 || v.mast > k_ || v.height < 0 ||
        v.height > heights_[static_cast<std::size_t>(v.mast - 1)])
        throw Error("vertex is not on the diagram");
    std::size_t created = 0; // 0 = on the deck
    std::size_t replaced = 0;
    Int h = 0;
    for (std::size_t t = 0; t < simplices_.size(); ++t) {
        if (simplices_[t].mast != v.mast) continue;
        h += 1;
        if (h == v.height) created = t + 1;
        if (h == v.height + 1) {
            replaced = t + 1;
            break;
        }
    }
    if (v.height > 0 && created == 0) throw Error("vertex is not on the diagram");
    std::size_t first = (v.height == 0) ? 1 : created;
    std::size_t last = (replaced == 0) ? simplices_.size() : replaced;
    return {first, last};
}

std::vector<DiagVert> PrismaticDiagram::yard(std::size_t y) const {
    if (y == 0 || y > simplices_.size() + 1) throw Error("yard index out of range");
    std::vector<Int> h(static_cast<std::size_t>(k_), Int(0));
    for (std::size_t t = 0; t + 1 < y; ++t) h[static_cast<std::size_t>(simplices_[t].mast - 1)] += 1;
    std::vector<DiagVert> out;
    for (int m = 1; m <= k_; ++m) out.push_back({m, h[static_cast<std::size_t>(m - 1)]});
    return out;
}

std::size_t PrismaticDiagram::slot_of_simplex(std::size_t t) const {
    if (t == 0 || t > simplex_slot_.size()) throw Error("simplex index out of range");
    return simplex_slot_[t - 1];
}

std::pair<std::size_t, std::size_t> PrismaticDiagram::simplex_range_of_slot(std::size_t slot) const {
    std::size_t first = 0, last = 0;
    for (std::size_t t = 0; t < simplex_slot_.size(); ++t)
        if (simplex_slot_[t] == slot) {
            if (!first) first = t + 1;
            last = t + 1;
        }
    if (!first) throw Error("slot has no simplices");
    return {first, last};
}

PrismaticDiagram PrismaticDiagram::slice(std::size_t i, std::size_t j) const {
    if (i < 1 || j > simplices_.size() + 1 || i > j) throw Error("slice out of range");
    if (i == j) throw Error("degenerate slice");
    std::vector<int> raw;
    for (std::size_t t = i; t < j; ++t) raw.push_back(simplices_[t - 1].mast);
    // Relabel masts cyclically so the slice's first simplex builds mast 1.
    int first_mast = raw[0];
    std::vector<int> relabeled;
    for (int m : raw) relabeled.push_back(((m - first_mast) % k_ + k_) % k_ + 1);
    return from_lr(k_, relabeled);
}

std::pair<std::size_t, std::size_t> PrismaticDiagram::geodesic_range(const DiagVert& v,
                                                                     const DiagVert& w) const {
    if (v == w) throw Error("geodesic of a vertex with itself is empty");
    auto mv = membership(v);
    auto mw = membership(w);
    std::size_t lo, hi;
    if (mv.second < mw.first) {
        lo = mv.second;
        hi = mw.first;
    } else if (mw.second < mv.first) {
        lo = mw.second;
        hi = mv.first;
    } else {
        lo = std::max(mv.first, mw.first);
        hi = lo;
    }
    return {lo, hi + 1}; // yard indices
}

PrismaticDiagram PrismaticDiagram::geodesic(const DiagVert& v, const DiagVert& w) const {
    if (v == w) return from_slots(k_, {}); // empty slice
    auto [i, j] = geodesic_range(v, w);
    return slice(i, j);
}

std::vector<std::vector<int>> FlagDiagram::index_sets() const {
    std::vector<std::vector<int>> out;
    for (const auto& p : parts) {
        auto s = p.global_masts;
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    return out;
}

FlagDiagram diagram_of_cf(const FareyCF& cf) {
    if (cf.dimension != 3) throw Error("flag diagrams are built for dimension 3");
    if (!cf.terminated) throw Error("flag diagrams need a finite fraction");
    FareyForm f = to_farey_form(cf);
    std::string why;
    if (!is_admissible_3d(f, &why)) throw Error("inadmissible fraction: " + why);
    FlagDiagram out;
    FlagPart part1;
    part1.diagram = PrismaticDiagram::from_slots(3, f.a);
    part1.global_masts = {1, 2, 3};
    out.parts.push_back(std::move(part1));
    if (!f.b.empty()) {
        FlagPart part2;
        part2.diagram = PrismaticDiagram::from_slots(2, f.b);
        part2.global_masts = {f.t, f.s}; // part-local mast 1 is the first to change
        out.parts.push_back(std::move(part2));
    }
    return out;
}

FareyCF cf_of_diagram(const FlagDiagram& d) {
    if (d.parts.empty()) throw Error("empty flag diagram");
    std::vector<Int> a = d.parts[0].diagram.slots();
    std::vector<Int> b;
    if (d.parts.size() > 1) b = d.parts[1].diagram.slots();
    return from_farey_form(a, b);
}

LRSequence lr_sequence(const PrismaticDiagram& d) {
    return d.lr();
}

AbstractTriangulation to_abstract(const PrismaticDiagram& d) {
    AbstractTriangulation t;
    std::map<DiagVert, int> ids;
    auto id_of = [&](const DiagVert& v) {
        auto it = ids.find(v);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(ids.size());
        ids.emplace(v, id);
        return id;
    };
    for (const auto& v : d.deck()) t.deck.push_back(id_of(v));
    for (const auto& s : d.simplices()) {
        std::vector<int> verts;
        for (const auto& v : s.verts) verts.push_back(id_of(v));
        t.simplices.push_back(std::move(verts));
    }
    for (const auto& v : d.nest()) t.nest.push_back(id_of(v));
    return t;
}

PrismaticDiagram canonicalize(const AbstractTriangulation& t) {
    const std::size_t n = t.simplices.size();
    if (n == 0) throw Error("empty triangulation");
    const std::size_t k = t.deck.size();
    for (const auto& s : t.simplices)
        if (s.size() != k + 1) throw Error("simplex size does not match the deck dimension");

    auto shared = [&](std::size_t a, std::size_t b) {
        std::set<int> sa(t.simplices[a].begin(), t.simplices[a].end());
        std::size_t c = 0;
        for (int v : t.simplices[b])
            if (sa.count(v)) ++c;
        return c;
    };
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (shared(a, b) == k) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
    std::vector<std::size_t> ends;
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].size() > 2) throw Error("dual graph is not a path");
        if (adj[i].size() <= 1) ends.push_back(i);
    }
    if ((n == 1 && ends.size() != 1) || (n > 1 && ends.size() != 2))
        throw Error("dual graph is not a path");

    auto contains_face = [&](std::size_t s, const std::vector<int>& face) {
        std::set<int> sv(t.simplices[s].begin(), t.simplices[s].end());
        for (int v : face)
            if (!sv.count(v)) return false;
        return true;
    };
    std::size_t start = n;
    for (std::size_t e : ends)
        if (contains_face(e, t.deck)) start = e;
    if (start == n) throw Error("deck is not a face of an end simplex");

    std::vector<std::size_t> order = {start};
    std::vector<bool> used(n, false);
    used[start] = true;
    while (order.size() < n) {
        std::size_t cur = order.back();
        bool advanced = false;
        for (std::size_t nb : adj[cur])
            if (!used[nb]) {
                order.push_back(nb);
                used[nb] = true;
                advanced = true;
                break;
            }
        if (!advanced) throw Error("dual graph is not connected");
    }

    std::vector<int> tops = t.deck; // vertex id per mast, numbered by the deck order
    std::vector<int> raw;
    for (std::size_t step = 0; step < n; ++step) {
        const auto& sim = t.simplices[order[step]];
        std::set<int> sv(sim.begin(), sim.end());
        int new_vertex = -1;
        for (int v : sim) {
            bool is_top = false;
            for (int u : tops)
                if (u == v) is_top = true;
            if (!is_top) {
                if (new_vertex != -1) throw Error("simplex introduces two vertices");
                new_vertex = v;
            }
        }
        if (new_vertex == -1) throw Error("simplex introduces no vertex");
        std::set<int> next_set;
        if (step + 1 < n) {
            const auto& nxt = t.simplices[order[step + 1]];
            next_set.insert(nxt.begin(), nxt.end());
        } else {
            next_set.insert(t.nest.begin(), t.nest.end());
        }
        int replaced_mast = 0;
        for (std::size_t m = 0; m < k; ++m) {
            if (!sv.count(tops[m])) throw Error("top is missing from its simplex");
            if (!next_set.count(tops[m])) {
                if (replaced_mast) throw Error("two tops replaced at one step");
                replaced_mast = static_cast<int>(m) + 1;
            }
        }
        if (!replaced_mast) throw Error("no top replaced at a step");
        tops[static_cast<std::size_t>(replaced_mast - 1)] = new_vertex;
        raw.push_back(replaced_mast);
    }
    return PrismaticDiagram::from_lr(static_cast<int>(k), raw);
}

} // namespace farey
