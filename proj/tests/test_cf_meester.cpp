#include <doctest.h>

#include "farey/lattice.hpp"
#include "farey/meester.hpp"
#include "farey/reconstruct.hpp"

#include <numeric>
#include <random>

using namespace farey;

namespace {

std::vector<long> longs(const std::vector<Int>& xs) {
    std::vector<long> out;
    for (const auto& x : xs) out.push_back(x.get_si());
    return out;
}

} // namespace

TEST_CASE("meester on (55,10,67)") {
    auto tr = meester(IntVec{55, 10, 67});
    CHECK(longs(tr.cf.elements) == std::vector<long>{0, 5, 0, 2, 0, 1, 2, 2});
    REQUIRE(tr.cf.drops.size() == 2);
    CHECK(tr.cf.drops[0] == Drop{4, 2});
    CHECK(tr.cf.drops[1] == Drop{8, 3});
    CHECK(tr.cf.terminated);
    CHECK(meester_str(tr.cf) == "[0;5:0:2 |_2 0:1:2:2]");

    // the distinguished intermediate states of the worked example
    CHECK(tr.remainder(2) == RatVec(IntVec{5, 10, 17}));
    CHECK(tr.remainder(4) == RatVec(IntVec{5, 0, 7}));
    CHECK(tr.remainder(6) == RatVec(IntVec{5, 0, 2}));
    CHECK(tr.remainder(7) == RatVec(IntVec{1, 0, 2}));
    CHECK(tr.remainder(8) == RatVec(IntVec{1, 0, 0}));
    CHECK(tr.remainder(0) == RatVec(IntVec{55, 10, 67}));
}

TEST_CASE("meester on (5,7,8)") {
    auto tr = meester(IntVec{5, 7, 8});
    CHECK(longs(tr.cf.elements) == std::vector<long>{1, 1, 2, 1});
    CHECK(tr.remainder(1) == RatVec(IntVec{5, 2, 3}));
    CHECK(tr.remainder(2) == RatVec(IntVec{3, 2, 1}));
    CHECK(tr.remainder(3) == RatVec(IntVec{1, 0, 1}));
    CHECK(tr.remainder(4) == RatVec(IntVec{1, 0, 0}));
    CHECK(meester_str(tr.cf) == "[1;1:2 |_2 1]");
    CHECK(farey_str(tr.cf) == "[1;1:2:0:0 | 1]");
}

TEST_CASE("meester trivial and error cases") {
    auto tr = meester(IntVec{1, 0, 0});
    CHECK(tr.cf.elements.empty());
    CHECK(tr.cf.terminated);

    CHECK_THROWS_AS(meester(IntVec{1, -1, 0}), Error);
    CHECK_THROWS_AS(meester(IntVec{0, 0, 0}), Error);

    // last value is the gcd of the inputs
    auto tr2 = meester(IntVec{12, 18, 30});
    const RatVec& last = tr2.states.back();
    Rat g(0);
    for (std::size_t i = 0; i < 3; ++i)
        if (last[i] != 0) g = last[i];
    CHECK(g == 6);
}

TEST_CASE("meester scaling invariance") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(1, 400);
    for (int it = 0; it < 50; ++it) {
        IntVec v{d(rng), d(rng), d(rng)};
        auto a = meester(v);
        auto b = meester(v * Int(7));
        CHECK(a.cf == b.cf);
    }
}

TEST_CASE("meester determinism") {
    IntVec v{123, 456, 789};
    auto a = meester(v), b = meester(v);
    CHECK(a.cf == b.cf);
    CHECK(a.states.size() == b.states.size());
}

TEST_CASE("farey form of (6,14,15) and (16,39,42)") {
    auto tr = meester(IntVec{6, 14, 15});
    CHECK(longs(tr.cf.elements) == std::vector<long>{2, 1, 2, 0, 2});
    CHECK(meester_str(tr.cf) == "[2;1:2 |_2 0:2]");
    CHECK(farey_str(tr.cf) == "[2;1:2:0:0 | 0:2]");

    auto w = meester(IntVec{16, 39, 42});
    CHECK(longs(w.cf.elements) == std::vector<long>{2, 1, 2, 0, 3});
    REQUIRE(w.cf.drops.size() == 2);
    CHECK(w.cf.drops[0] == Drop{5, 1});
    CHECK(w.cf.drops[1] == Drop{5, 3});
    CHECK(meester_str(w.cf) == "[2;1:2:0:3 |_{1,3}]");
    CHECK(farey_str(w.cf) == "[2;1:2:0:3 | ]");
}

TEST_CASE("cf text round-trips bit-exactly") {
    std::vector<IntVec> samples = {IntVec{55, 10, 67}, IntVec{5, 7, 8},    IntVec{6, 14, 15},
                                   IntVec{16, 39, 42}, IntVec{1, 0, 0},    IntVec{1, 1, 1},
                                   IntVec{5, 0, 2},    IntVec{99, 70, 29}, IntVec{2, 4, 6}};
    for (const auto& v : samples) {
        auto cf = meester(v).cf;
        CHECK(parse_cf(meester_str(cf)) == cf);
        CHECK(parse_cf(farey_str(cf)) == cf);
    }
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(0, 5000);
    for (int it = 0; it < 200; ++it) {
        IntVec v{d(rng), d(rng), d(rng)};
        if (v.is_zero()) continue;
        auto cf = meester(v).cf;
        CHECK(parse_cf(meester_str(cf)) == cf);
        CHECK(parse_cf(farey_str(cf)) == cf);
    }
}

TEST_CASE("farey form zero padding cases") {
    // no cyclic gap: drop right before the slot it excludes
    // (55,10,67): drop of coordinate 2 at element 4 needs one padding zero
    auto tr = meester(IntVec{55, 10, 67});
    auto f = to_farey_form(tr.cf);
    CHECK(longs(f.a) == std::vector<long>{0, 5, 0, 2, 0});
    CHECK(longs(f.b) == std::vector<long>{1, 2, 2});
    CHECK(f.dropped == 2);
    CHECK(f.s == 3);
    CHECK(f.t == 1);

    // two zeros for (5,7,8)
    auto f2 = to_farey_form(meester(IntVec{5, 7, 8}).cf);
    CHECK(longs(f2.a) == std::vector<long>{1, 1, 2, 0, 0});
    CHECK(longs(f2.b) == std::vector<long>{1});

    // dimension restriction
    FareyCF cf4;
    cf4.dimension = 4;
    cf4.elements = {Int(1)};
    CHECK_THROWS_AS(to_farey_form(cf4), Error);
}

TEST_CASE("admissibility of canonical farey forms") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> d(0, 2000);
    for (int it = 0; it < 300; ++it) {
        IntVec v{d(rng), d(rng), d(rng)};
        if (v.is_zero()) continue;
        auto f = to_farey_form(meester(v).cf);
        std::string why;
        CHECK_MESSAGE(is_admissible_3d(f, &why), farey_str(f), " -> ", why);
    }
}

TEST_CASE("extended forms") {
    auto cf = meester(IntVec{5, 7, 8}).cf; // [1;1:2 |_2 1]
    auto forms = extended_forms(cf);
    REQUIRE(forms.size() == 1);
    CHECK(meester_str(forms[0]) == "[1;1:2 |_2 0:1]");
    CHECK(nose_stretch(forms[0], 3).pennant == IntVec{5, 7, 8});

    // a pure first-stage fraction has two extended forms
    auto pure = meester(IntVec{16, 39, 42}).cf;
    auto pf = extended_forms(pure);
    REQUIRE(pf.size() == 2);
    CHECK(farey_str(pf[0]) == "[2;1:2:0:2:1 | ]");
    CHECK(farey_str(pf[1]) == "[2;1:2:0:2:0:1 | ]");
    for (const auto& g : pf) CHECK(nose_stretch(g, 3).pennant == IntVec{16, 39, 42});

    // boundary rejections
    FareyCF one;
    one.elements = {Int(1)};
    one.terminated = true;
    one.infer_terminal_drops();
    CHECK_THROWS_AS(extended_forms(one), Error);
    FareyCF zero_end = cf;
    zero_end.elements.back() = 0;
    CHECK_THROWS_AS(extended_forms(zero_end), Error);
}

TEST_CASE("convergents and remainders") {
    auto tr = meester(IntVec{55, 10, 67});
    CHECK(tr.remainder(6) == RatVec(IntVec{5, 0, 2}));
    CHECK(tr.remainder(0) == RatVec(IntVec{55, 10, 67}));
    // final remainder has a single nonzero equal to the gcd
    const RatVec& fin = tr.remainder(tr.cf.length());
    int nz = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (fin[i] != 0) ++nz;
    CHECK(nz == 1);
    CHECK_THROWS_AS((void)tr.remainder(99), Error);

    // remainders are generated by the zero-padded tails: re-run meester on one
    auto mid = meester(IntVec{5, 0, 2});
    CHECK(longs(mid.cf.elements) == std::vector<long>{0, 2, 2});

    // convergents reconstruct prefix pennants
    auto cf = tr.cf;
    for (std::size_t i = 1; i <= cf.length(); ++i) {
        IntVec c = convergent(cf, i);
        CHECK(content(c) == 1);
    }
    CHECK(convergent(cf, cf.length()) == IntVec{55, 10, 67});
}

TEST_CASE("two-dimensional meester matches the euclidean algorithm") {
    auto euclid = [](long p, long q) {
        std::vector<long> cf;
        while (q != 0) {
            cf.push_back(p / q);
            long r = p % q;
            p = q;
            q = r;
        }
        return cf;
    };
    for (long p = 1; p <= 200; ++p)
        for (long q = 1; q <= 200; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto tr = meester(IntVec{p, q});
            REQUIRE(tr.cf.terminated);
            auto elems = longs(tr.cf.elements);
            if (!elems.empty() && elems.front() == 0) elems.erase(elems.begin());
            auto reference = euclid(std::max(p, q), std::min(p, q));
            bool same = elems == reference;
            if (!same && !elems.empty() && elems.back() == 1 && elems.size() >= 2) {
                // allow [.., a, 1] = [.., a+1]
                auto folded = elems;
                folded.pop_back();
                folded.back() += 1;
                same = folded == reference;
            }
            CHECK_MESSAGE(same, "p=", p, " q=", q);
        }
}
