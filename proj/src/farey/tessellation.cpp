#include "tessellation.hpp"

#include "lattice.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <map>

namespace farey {

IntVec farey_sum(const std::vector<IntVec>& vs) {
    if (vs.empty()) throw Error("farey sum of nothing");
    IntVec acc = vs[0];
    for (std::size_t i = 1; i < vs.size(); ++i) acc = acc + vs[i];
    return acc;
}

std::vector<IntVec> SummationRun::pyramid(std::size_t i) const {
    if (i == 0 || i > steps.size()) throw Error("pyramid index out of range");
    std::vector<IntVec> verts;
    for (const auto& lv : yard(i - 1)) verts.push_back(lv.v);
    verts.push_back(steps[i - 1].apex);
    return verts;
}

namespace {

// Builds run steps while extracting the continued fraction through the shared
// cyclic slot rule.
class RunBuilder {
public:
    RunBuilder(int n, const std::vector<int>& initial_dead) : walker_(n) {
        run_.n = n;
        run_.cf.dimension = n;
        for (int c : initial_dead) {
            run_.cf.drops.push_back({0, c});
            walker_.kill(c);
        }
        std::sort(run_.cf.drops.begin(), run_.cf.drops.end());
    }

    // removed: columns leaving the yard at this step (the new vertex inherits one).
    // Returns the column assigned to the new vertex.
    int step(const std::vector<int>& removed, const IntVec& apex,
             std::vector<LabeledVert> yard_after_without_new) {
        int changed = 0;
        // An element that already recorded a drop is exhausted: the subtraction
        // count was capped by the coordinate that died.
        if (open_ && !open_had_drop_ &&
            std::find(removed.begin(), removed.end(), cur_col_) != removed.end()) {
            changed = cur_col_;
            cur_count_ += 1;
        } else {
            close_element();
            for (int tries = 0; tries <= run_.n; ++tries) {
                int j = walker_.next();
                if (std::find(removed.begin(), removed.end(), j) != removed.end()) {
                    changed = j;
                    break;
                }
                run_.cf.elements.push_back(0); // slot skipped with zero multiplicity
            }
            if (changed == 0) throw Error("internal: step does not fit the slot cycle");
            open_ = true;
            cur_col_ = changed;
            cur_count_ = 1;
        }
        RunStep s;
        s.changed_col = changed;
        s.apex = apex;
        for (int c : removed)
            if (c != changed) {
                s.dropped_cols.push_back(c);
                run_.cf.drops.push_back({run_.cf.elements.size() + 1, c});
                walker_.kill(c);
                open_had_drop_ = true;
            }
        std::sort(run_.cf.drops.begin(), run_.cf.drops.end());
        s.yard = std::move(yard_after_without_new);
        s.yard.push_back({changed, apex});
        std::sort(s.yard.begin(), s.yard.end(),
                  [](const LabeledVert& a, const LabeledVert& b) { return a.col < b.col; });
        run_.steps.push_back(std::move(s));
        return changed;
    }

    SummationRun finish(bool terminated, IntVec pennant) {
        close_element();
        run_.terminated = terminated;
        run_.cf.terminated = terminated;
        run_.pennant = std::move(pennant);
        return std::move(run_);
    }

private:
    SummationRun run_;
    SlotWalker walker_;
    bool open_ = false;
    bool open_had_drop_ = false;
    int cur_col_ = 0;
    Int cur_count_ = 0;

    void close_element() {
        if (open_) {
            run_.cf.elements.push_back(cur_count_);
            // Drops recorded against the open element already carry the right index.
            open_ = false;
            open_had_drop_ = false;
            cur_count_ = 0;
        }
    }
};

void finalize_principal_structure(SummationRun& run) {
    const std::size_t s = run.steps.size();
    run.principal.assign(s + 1, false);
    run.principal[0] = true;
    for (std::size_t i = 1; i <= s; ++i) {
        if (i == s) {
            run.principal[i] = true;
            continue;
        }
        if (!run.steps[i - 1].dropped_cols.empty() ||
            run.steps[i].changed_col != run.steps[i - 1].changed_col)
            run.principal[i] = true;
    }
    if (run.terminated && s >= 1)
        run.nest_index = s - 1; // the yard the terminal pyramid is built on
    else
        run.nest_index = s;
    if (run.terminated && s >= 1) run.principal[s - 1] = true;
    run.principal_indices.clear();
    for (std::size_t i = 0; i <= s; ++i)
        if (run.principal[i]) run.principal_indices.push_back(i);
    run.divisions.clear();
    for (std::size_t t = 0; t + 1 < run.principal_indices.size(); ++t) {
        SummationRun::Division d;
        d.from = run.principal_indices[t];
        d.to = run.principal_indices[t + 1];
        std::vector<LabeledVert> verts = run.yard(d.from);
        for (const auto& lv : run.yard(d.to))
            if (std::find(verts.begin(), verts.end(), lv) == verts.end()) verts.push_back(lv);
        std::sort(verts.begin(), verts.end());
        d.verts = std::move(verts);
        run.divisions.push_back(std::move(d));
    }
}

} // namespace

SummationRun farey_summation_run(const IntVec& v, std::size_t max_steps) {
    const std::size_t n = v.size();
    if (n < 2) throw Error("dimension must be at least 2");
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] < 0) throw Error("ray must be in the non-negative orthant");
    if (v.is_zero()) throw Error("zero ray");
    IntVec dir = v;
    {
        Int g = content(dir);
        if (g != 1)
            for (std::size_t i = 0; i < n; ++i) dir[i] /= g;
    }

    std::vector<int> dead;
    std::vector<LabeledVert> yard;
    for (std::size_t i = 0; i < n; ++i) {
        if (dir[i] == 0)
            dead.push_back(static_cast<int>(i) + 1);
        else
            yard.push_back({static_cast<int>(i) + 1, basis_vector(n, i)});
    }
    RunBuilder builder(static_cast<int>(n), dead);
    std::vector<LabeledVert> deck = yard;

    // Barycentric coordinates of the ray in the current yard basis, kept exact:
    // initially v itself; replacing the argmin set T (value m) by the apex gives
    // the apex weight m and decrements the retained weights by m.
    std::vector<Int> mu;
    for (const auto& lv : yard) mu.push_back(dir[static_cast<std::size_t>(lv.col - 1)]);

    std::size_t steps = 0;
    bool terminated = false;
    IntVec pennant;
    while (true) {
        if (yard.size() == 1) {
            terminated = true;
            pennant = yard[0].v;
            break;
        }
        if (steps >= max_steps) break;
        std::vector<IntVec> base;
        for (const auto& lv : yard) base.push_back(lv.v);
        IntVec apex = farey_sum(base);
        Int m = mu[0];
        for (const auto& q : mu) {
            if (q <= 0) throw Error("internal: ray left the relative interior");
            if (q < m) m = q;
        }
        std::vector<int> removed;
        std::vector<LabeledVert> retained;
        std::vector<Int> mu_retained;
        for (std::size_t i = 0; i < yard.size(); ++i) {
            if (mu[i] == m) {
                removed.push_back(yard[i].col);
            } else {
                retained.push_back(yard[i]);
                mu_retained.push_back(mu[i] - m);
            }
        }
        int new_col = builder.step(removed, apex, retained);
        ++steps;
        if (retained.empty()) {
            terminated = true;
            pennant = apex;
            if (!(pennant == dir)) throw Error("internal: pennant is not the primitive ray");
            break;
        }
        yard = retained;
        yard.push_back({new_col, apex});
        mu = std::move(mu_retained);
        mu.push_back(m);
        // keep yard and mu sorted by column together
        for (std::size_t i = yard.size(); i-- > 1;) {
            if (yard[i - 1].col <= yard[i].col) break;
            std::swap(yard[i - 1], yard[i]);
            std::swap(mu[i - 1], mu[i]);
        }
    }
    SummationRun run = builder.finish(terminated, terminated ? pennant : IntVec(n));
    run.deck = deck;
    run.cf.infer_terminal_drops();
    finalize_principal_structure(run);
    return run;
}

SummationRun farey_summation_run(const RatVec& v, std::size_t max_steps) {
    return farey_summation_run(v.primitive_direction(), max_steps);
}

SummationRun run_from_cf(const FareyCF& cf, int n) {
    std::vector<int> dead;
    std::map<std::size_t, std::vector<int>> groups;
    for (const auto& d : cf.drops) {
        if (d.step == 0)
            dead.push_back(d.coord);
        else
            groups[d.step].push_back(d.coord);
    }
    RunBuilder builder(n, dead);
    std::vector<LabeledVert> yard;
    for (int c = 1; c <= n; ++c)
        if (std::find(dead.begin(), dead.end(), c) == dead.end())
            yard.push_back({c, basis_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(c - 1))});
    std::vector<LabeledVert> deck = yard;

    SlotWalker w(n);
    for (int c : dead) w.kill(c);

    int last_col = 0;
    for (std::size_t m = 1; m <= cf.length(); ++m) {
        const Int& a = cf.elements[m - 1];
        int j = w.next();
        last_col = j;
        bool has_drop = groups.count(m) > 0;
        Int unit = 0;
        while (unit < a) {
            ++unit;
            std::vector<IntVec> base;
            for (const auto& lv : yard) base.push_back(lv.v);
            IntVec apex = farey_sum(base);
            std::vector<int> removed = {j};
            std::vector<LabeledVert> retained;
            for (const auto& lv : yard)
                if (lv.col != j) retained.push_back(lv);
            if (unit == a && has_drop)
                for (int c : groups[m]) {
                    removed.push_back(c);
                    std::erase_if(retained, [&](const LabeledVert& lv) { return lv.col == c; });
                }
            builder.step(removed, apex, retained);
            retained.push_back({j, apex});
            std::sort(retained.begin(), retained.end(),
                      [](const LabeledVert& x, const LabeledVert& y) { return x.col < y.col; });
            yard = retained;
        }
        if (a == 0 && has_drop) throw Error("malformed cf: drop at a zero element");
        if (has_drop)
            for (int c : groups[m]) w.kill(c);
    }
    IntVec pennant;
    if (cf.terminated) {
        int pcol = last_col ? last_col : w.peek();
        for (const auto& lv : yard)
            if (lv.col == pcol) pennant = lv.v;
        if (pennant.size() == 0) throw Error("malformed cf: pennant erased");
    } else {
        pennant = IntVec(static_cast<std::size_t>(n));
    }
    SummationRun run = builder.finish(cf.terminated, pennant);
    run.deck = deck;
    finalize_principal_structure(run);
    run.cf.infer_terminal_drops();
    return run;
}

FareyForm cf_of_run(const SummationRun& run) {
    return to_farey_form(run.cf);
}

std::vector<std::vector<IntVec>> Tessellation::maximal() const {
    std::vector<std::vector<IntVec>> out;
    for (const auto& s : simplices)
        if (s.size() == static_cast<std::size_t>(n) + 1) out.push_back(s);
    return out;
}

Tessellation tessellate(int n, int depth) {
    if (n < 2) throw Error("dimension must be at least 2");
    if (depth < 0) throw Error("depth must be non-negative");
    Tessellation t;
    t.n = n;
    // Base: all faces of the basis simplex E_1...E_n.
    std::vector<IntVec> basis;
    for (int i = 0; i < n; ++i) basis.push_back(basis_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
    const std::size_t subsets = (static_cast<std::size_t>(1) << n);
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        std::vector<IntVec> face;
        for (int i = 0; i < n; ++i)
            if (mask & (static_cast<std::size_t>(1) << i)) face.push_back(basis[static_cast<std::size_t>(i)]);
        std::sort(face.begin(), face.end());
        t.faces.insert(face);
    }
    {
        std::vector<IntVec> base_simplex = basis;
        std::sort(base_simplex.begin(), base_simplex.end());
        t.simplices.insert(base_simplex);
    }
    for (int step = 0; step < depth; ++step) {
        std::set<std::vector<IntVec>> next = t.faces;
        for (const auto& face : t.faces) {
            if (face.size() < 2) continue; // a vertex pyramid has no side faces
            IntVec apex = farey_sum(face);
            std::vector<IntVec> pyramid = face;
            pyramid.push_back(apex);
            std::sort(pyramid.begin(), pyramid.end());
            t.simplices.insert(pyramid);
            // side faces: subsets containing the apex, of dimension < pyramid's
            const std::size_t k = face.size();
            const std::size_t m = (static_cast<std::size_t>(1) << k);
            for (std::size_t mask = 0; mask < m; ++mask) {
                std::vector<IntVec> side = {apex};
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (static_cast<std::size_t>(1) << i)) side.push_back(face[i]);
                if (side.size() > k) continue; // the full pyramid is not a side face
                std::sort(side.begin(), side.end());
                next.insert(side);
            }
        }
        t.faces = std::move(next);
    }
    return t;
}

} // namespace farey
