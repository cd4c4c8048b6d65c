#include <doctest.h>

#include "farey/lattice.hpp"
#include "farey/meester.hpp"
#include "farey/reconstruct.hpp"
#include "farey/tessellation.hpp"

#include <random>

using namespace farey;

TEST_CASE("farey sum") {
    CHECK(farey_sum({IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{0, 0, 1}}) == IntVec{1, 1, 1});
    CHECK(farey_sum({IntVec{1, 1, 1}, IntVec{4, 6, 7}}) == IntVec{5, 7, 8});
    CHECK(farey_sum({IntVec{3, 4, 5}, IntVec{0, 0, 0}}) == IntVec{3, 4, 5});
    CHECK_THROWS_AS(farey_sum({}), Error);
    CHECK_THROWS_AS(farey_sum({IntVec{1, 0}, IntVec{1, 0, 0}}), Error);
}

TEST_CASE("the (5,7,8) run reproduces the worked example") {
    auto run = farey_summation_run(IntVec{5, 7, 8});
    REQUIRE(run.steps.size() == 5);
    CHECK(run.steps[0].apex == IntVec{1, 1, 1});
    CHECK(run.steps[1].apex == IntVec{1, 2, 2});
    CHECK(run.steps[2].apex == IntVec{2, 3, 4});
    CHECK(run.steps[3].apex == IntVec{4, 6, 7});
    CHECK(run.steps[4].apex == IntVec{5, 7, 8});
    CHECK(run.terminated);
    CHECK(run.pennant == IntVec{5, 7, 8});

    // changed vertex indices 1,2,3,3,1; the coordinate drop happens at step 4
    CHECK(run.steps[0].changed_col == 1);
    CHECK(run.steps[1].changed_col == 2);
    CHECK(run.steps[2].changed_col == 3);
    CHECK(run.steps[3].changed_col == 3);
    CHECK(run.steps[4].changed_col == 1);
    CHECK(run.steps[3].dropped_cols == std::vector<int>{2});

    // principal structure: all yards except T3 are principal; T4 is the nest
    REQUIRE(run.principal.size() == 6);
    CHECK(run.principal[0]);
    CHECK(run.principal[1]);
    CHECK(run.principal[2]);
    CHECK_FALSE(run.principal[3]);
    CHECK(run.principal[4]);
    CHECK(run.nest_index == 4);

    // extracted continued fraction matches meester
    CHECK(run.cf == meester(IntVec{5, 7, 8}).cf);
    CHECK(farey_str(cf_of_run(run)) == "[1;1:2:0:0 | 1]");
}

TEST_CASE("trivial runs") {
    auto e1 = farey_summation_run(IntVec{1, 0, 0});
    CHECK(e1.steps.empty());
    CHECK(e1.terminated);
    CHECK(e1.pennant == IntVec{1, 0, 0});
    CHECK(e1.cf.elements.empty());

    auto ones = farey_summation_run(IntVec{1, 1, 1});
    REQUIRE(ones.steps.size() == 1);
    CHECK(ones.pennant == IntVec{1, 1, 1});
    CHECK(farey_str(cf_of_run(ones)) == "[1 | ]");
    CHECK(ones.cf == meester(IntVec{1, 1, 1}).cf);
}

TEST_CASE("runs reduce rational input to the primitive direction") {
    auto a = farey_summation_run(IntVec{10, 14, 16});
    CHECK(a.pennant == IntVec{5, 7, 8});
    std::vector<Rat> xs = {Rat(5, 3), Rat(7, 3), Rat(8, 3)};
    auto b = farey_summation_run(RatVec(xs));
    CHECK(b.pennant == IntVec{5, 7, 8});
}

TEST_CASE("oracle equivalence of the run, meester, and nose stretching") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> d(0, 100000);
    int done = 0;
    while (done < 100) {
        IntVec v{d(rng), d(rng), d(rng)};
        if (v.is_zero()) continue;
        if (content(v) != 1) continue;
        ++done;
        auto run = farey_summation_run(v);
        auto tr = meester(v);
        CHECK(run.cf == tr.cf);
        CHECK(run.pennant == v);
        // element sum equals the pyramid count
        Int total = 0;
        for (const auto& e : tr.cf.elements) total += e;
        CHECK(total == Int(static_cast<unsigned long>(run.steps.size())));
        // nose-stretch yards match run yards after each element
        auto ns = nose_stretch(tr.cf, 3);
        REQUIRE(ns.yards.size() == tr.cf.length());
        std::size_t step_cursor = 0;
        for (std::size_t m = 0; m < tr.cf.length(); ++m) {
            step_cursor += mpz_get_ui(tr.cf.elements[m].get_mpz_t());
            std::vector<IntVec> run_yard;
            for (const auto& lv : run.yard(step_cursor)) run_yard.push_back(lv.v);
            std::sort(run_yard.begin(), run_yard.end());
            auto nsy = ns.yards[m];
            std::sort(nsy.begin(), nsy.end());
            CHECK(run_yard == nsy);
        }
    }
}

TEST_CASE("run_from_cf agrees with the geometric run") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> d(0, 100000);
    int done = 0;
    while (done < 100) {
        IntVec v{d(rng), d(rng), d(rng)};
        if (v.is_zero() || content(v) != 1) continue;
        ++done;
        auto run = farey_summation_run(v);
        auto replay = run_from_cf(run.cf, 3);
        REQUIRE(replay.steps.size() == run.steps.size());
        for (std::size_t i = 0; i < run.steps.size(); ++i) {
            CHECK(replay.steps[i].apex == run.steps[i].apex);
            CHECK(replay.steps[i].changed_col == run.steps[i].changed_col);
            CHECK(replay.steps[i].yard == run.steps[i].yard);
        }
        CHECK(replay.cf == run.cf);
        CHECK(replay.pennant == run.pennant);
    }
}

TEST_CASE("division simplices alternate principal yards and add up in volume") {
    auto run = farey_summation_run(IntVec{5, 7, 8});
    REQUIRE(run.divisions.size() == 4);
    // conv(T2 union T4) covers pyramids S3 and S4
    const auto& div = run.divisions[2];
    CHECK(div.from == 2);
    CHECK(div.to == 4);
    std::vector<IntVec> verts;
    for (const auto& lv : div.verts) verts.push_back(lv.v);
    REQUIRE(verts.size() == 4);
    Int vol = 0;
    {
        std::vector<IntVec> dirs;
        for (std::size_t i = 1; i < verts.size(); ++i) dirs.push_back(verts[i] - verts[0]);
        vol = integer_volume(dirs);
    }
    Int sum = 0;
    for (std::size_t i = div.from + 1; i <= div.to; ++i) {
        auto pyr = run.pyramid(i);
        std::vector<IntVec> dirs;
        for (std::size_t t = 1; t < pyr.size(); ++t) dirs.push_back(pyr[t] - pyr[0]);
        sum += integer_volume(dirs);
    }
    CHECK(vol == sum);

    SUBCASE("on random runs") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> d(1, 3000);
        int done = 0;
        while (done < 30) {
            IntVec v{d(rng), d(rng), d(rng)};
            if (content(v) != 1) continue;
            ++done;
            auto r = farey_summation_run(v);
            for (const auto& dv : r.divisions) {
                std::vector<IntVec> vs;
                for (const auto& lv : dv.verts) vs.push_back(lv.v);
                std::vector<IntVec> dirs;
                for (std::size_t i = 1; i < vs.size(); ++i) dirs.push_back(vs[i] - vs[0]);
                if (dirs.empty()) continue;
                Int dvol = integer_volume(dirs);
                Int psum = 0;
                for (std::size_t i = dv.from + 1; i <= dv.to; ++i) {
                    auto pyr = r.pyramid(i);
                    std::vector<IntVec> pd;
                    for (std::size_t t = 1; t < pyr.size(); ++t) pd.push_back(pyr[t] - pyr[0]);
                    // skip degenerate (lower-dimensional) terminal pyramids
                    std::size_t rank = rank_of(MatZ::from_rows(pd));
                    if (rank != pd.size()) continue;
                    psum += integer_volume(pd);
                }
                CHECK(dvol == psum);
            }
        }
    }
}

TEST_CASE("tessellation at depth zero") {
    auto t = tessellate(3, 0);
    CHECK(t.maximal().empty());
    CHECK(t.simplices.size() == 1); // the basis simplex
    CHECK(t.faces.size() == 7);     // all faces of the triangle E1E2E3
}

TEST_CASE("tessellation properties at small depth") {
    auto t = tessellate(3, 3);
    auto maximal = t.maximal();
    CHECK(maximal.size() > 10);
    for (const auto& s : maximal) {
        REQUIRE(s.size() == 4);
        for (const auto& v : s) CHECK(content(v) == 1); // vertices on the unit sphere
        std::vector<IntVec> dirs;
        for (std::size_t i = 1; i < s.size(); ++i) dirs.push_back(s[i] - s[0]);
        CHECK(integer_volume(dirs) == 2); // edge volume k-1
        // every facet spans a unimodular pyramid with the origin
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::vector<IntVec> facet;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != skip) facet.push_back(s[i]);
            CHECK(integer_volume(facet) == 1);
        }
        CHECK(is_empty_polytope(s));
    }
}

TEST_CASE("run simplices appear in the tessellation") {
    auto t = tessellate(3, 5);
    auto run = farey_summation_run(IntVec{5, 7, 8});
    for (std::size_t i = 1; i <= run.steps.size(); ++i) {
        auto pyr = run.pyramid(i);
        std::sort(pyr.begin(), pyr.end());
        CHECK(t.simplices.count(pyr) == 1);
    }
}

TEST_CASE("projected interiors of maximal simplices are pairwise disjoint") {
    // exact rational separation test on the projection to x+y+z = 1
    auto t = tessellate(3, 3);
    auto maximal = t.maximal();
    auto project = [](const IntVec& v) {
        Rat s = Rat(v[0]) + Rat(v[1]) + Rat(v[2]);
        return std::pair<Rat, Rat>(Rat(v[0]) / s, Rat(v[1]) / s);
    };
    struct Tri {
        std::array<std::pair<Rat, Rat>, 3> p;
    };
    std::vector<Tri> tris;
    for (const auto& s : maximal) {
        // the three non-apex projections can coincide with the apex projection;
        // project all four and keep the distinct extreme ones: the projection of a
        // tessellation simplex is the triangle of its base
        std::vector<std::pair<Rat, Rat>> pts;
        for (const auto& v : s) pts.push_back(project(v));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() != 3) continue; // apex projects into the base triangle
        tris.push_back({{pts[0], pts[1], pts[2]}});
    }
    auto side = [](const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b,
                   const std::pair<Rat, Rat>& c) {
        return (b.first - a.first) * (c.second - a.second) -
               (b.second - a.second) * (c.first - a.first);
    };
    auto separated = [&](const Tri& x, const Tri& y) {
        for (int pass = 0; pass < 2; ++pass) {
            const Tri& p = pass ? y : x;
            const Tri& q = pass ? x : y;
            for (int i = 0; i < 3; ++i) {
                auto a = p.p[i], b = p.p[(i + 1) % 3];
                Rat self = side(a, b, p.p[(i + 2) % 3]);
                if (self == 0) continue;
                bool all_out = true;
                for (int j = 0; j < 3; ++j) {
                    Rat s = side(a, b, q.p[j]);
                    if (self > 0 ? s > 0 : s < 0) all_out = false;
                }
                if (all_out) return true;
            }
        }
        return false;
    };
    std::size_t overlaps = 0;
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j)
            if (!separated(tris[i], tris[j])) ++overlaps;
    CHECK(overlaps == 0);
}

TEST_CASE("two-dimensional tessellation is the stern-brocot refinement") {
    auto t = tessellate(2, 4);
    for (const auto& s : t.maximal()) {
        REQUIRE(s.size() == 3);
        std::vector<IntVec> dirs = {s[1] - s[0], s[2] - s[0]};
        CHECK(integer_volume(dirs) == 1);
    }
}
