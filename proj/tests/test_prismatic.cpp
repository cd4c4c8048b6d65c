#include <doctest.h>

#include "farey/meester.hpp"
#include "farey/prismatic.hpp"
#include "farey/reconstruct.hpp"

#include <set>

using namespace farey;

TEST_CASE("flag diagrams of the two (5,7,8) fractions") {
    auto cf1 = parse_cf("[1;1:2 |_2 1]");
    auto d1 = diagram_of_cf(cf1);
    REQUIRE(d1.parts.size() == 2);
    const auto& p1 = d1.parts[0].diagram;
    CHECK(p1.length() == 4);
    CHECK(p1.lr().raw == std::vector<int>{1, 2, 3, 3});
    auto verts_of = [&](std::size_t t) {
        std::set<std::string> s;
        for (const auto& v : p1.simplices()[t].verts) s.insert(p1.embed(v).str());
        return s;
    };
    CHECK(verts_of(0) == std::set<std::string>{"(1,0,0)", "(0,1,0)", "(0,0,1)", "(2,1,1)"});
    CHECK(verts_of(1) == std::set<std::string>{"(2,1,1)", "(0,1,0)", "(0,0,1)", "(1,2,1)"});
    CHECK(verts_of(2) == std::set<std::string>{"(2,1,1)", "(1,2,1)", "(0,0,1)", "(1,1,2)"});
    CHECK(verts_of(3) == std::set<std::string>{"(2,1,1)", "(1,2,1)", "(1,1,2)", "(2,2,3)"});
    const auto& p2 = d1.parts[1];
    CHECK(p2.diagram.masts() == 2);
    CHECK(p2.diagram.length() == 1);
    CHECK(p2.diagram.lr().raw == std::vector<int>{1});
    CHECK(p2.global_masts == std::vector<int>{1, 3});

    auto cf2 = parse_cf("[1;1:2 |_2 0:1]");
    auto d2 = diagram_of_cf(cf2);
    REQUIRE(d2.parts.size() == 2);
    CHECK(d2.parts[0].diagram.lr().raw == std::vector<int>{1, 2, 3, 3});
    CHECK(d2.parts[1].diagram.lr().raw == std::vector<int>{2});
    CHECK(d2.parts[1].global_masts == std::vector<int>{1, 3});

    auto s1 = d1.index_sets();
    CHECK(s1[0] == std::vector<int>{1, 2, 3});
    CHECK(s1[1] == std::vector<int>{1, 3});
}

TEST_CASE("single-element fraction gives one simplex") {
    auto d = diagram_of_cf(parse_cf("[1 | ]"));
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].diagram.length() == 1);
}

TEST_CASE("inadmissible fractions are rejected") {
    FareyCF cf;
    cf.elements = {Int(1), Int(0), Int(0), Int(0), Int(2)};
    cf.terminated = true;
    cf.infer_terminal_drops();
    CHECK_THROWS_AS(diagram_of_cf(cf), Error);
}

TEST_CASE("cf extraction inverts diagram construction") {
    for (const char* text : {"[1;1:2 |_2 1]", "[1;1:2 |_2 0:1]", "[2;1:2:0:3 | ]",
                             "[0;5:0:2:0 | 1:2:2]", "[3;1:2:1:2:3:3:1 | ]"}) {
        auto cf = parse_cf(text);
        CHECK(cf_of_diagram(diagram_of_cf(cf)) == cf);
    }
}

TEST_CASE("lr sequences and canonical diagrams") {
    auto d = PrismaticDiagram::from_lr(2, {1, 2, 2, 2});
    CHECK(d.heights() == std::vector<Int>{Int(1), Int(3)});
    CHECK(d.lr().exponential == std::vector<std::pair<int, Int>>{{1, Int(1)}, {2, Int(3)}});
    CHECK(d.pennant() == DiagVert{2, Int(3)});

    auto d2 = PrismaticDiagram::from_lr(2, {1, 2, 1, 1});
    CHECK(d2.heights() == std::vector<Int>{Int(3), Int(1)});
    auto d3 = PrismaticDiagram::from_lr(2, {1, 1, 1, 2});
    CHECK(d3.heights() == std::vector<Int>{Int(3), Int(1)});
    CHECK_FALSE(d2 == d3);

    auto one = PrismaticDiagram::from_lr(3, {1});
    CHECK(lr_sequence(one).raw == std::vector<int>{1});
}

TEST_CASE("canonicalize round-trips and validates") {
    for (const char* text : {"[1;1:2 |_2 1]", "[3;1:2:1:2:3:3:1 | ]", "[2;1:2:0:3 | ]"}) {
        auto d = diagram_of_cf(parse_cf(text)).parts[0].diagram;
        auto round = canonicalize(to_abstract(d));
        CHECK(round == d);
    }

    AbstractTriangulation fork;
    fork.simplices = {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}};
    fork.deck = {0, 1, 2};
    fork.nest = {0, 1, 5};
    CHECK_THROWS_AS(canonicalize(fork), Error);
}

TEST_CASE("canonical diagram count is k^d") {
    for (std::size_t dlen = 1; dlen <= 5; ++dlen) {
        std::set<std::string> seen;
        std::size_t total = 1;
        for (std::size_t i = 0; i < dlen; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            std::vector<int> raw;
            for (std::size_t i = 0; i < dlen; ++i) {
                raw.push_back(static_cast<int>(c % 3) + 1);
                c /= 3;
            }
            auto d = PrismaticDiagram::from_lr(3, raw);
            CHECK(d.lr().raw == raw);
            std::string key;
            for (const auto& m : d.slots()) key += m.get_str() + ",";
            CHECK(seen.insert(key).second);
            if (dlen <= 3) CHECK(canonicalize(to_abstract(d)) == d);
        }
        CHECK(seen.size() == total);
    }
}

TEST_CASE("masts run from deck to nest") {
    auto d = diagram_of_cf(parse_cf("[3;1:2:1:2:3:3:1 | ]")).parts[0].diagram;
    for (int m = 1; m <= 3; ++m) {
        CHECK(d.membership({m, Int(0)}).first == 1);
        CHECK(d.membership({m, d.heights()[static_cast<std::size_t>(m - 1)]}).second == d.length());
    }
    for (const auto& s : d.simplices()) {
        int count = 0;
        for (const auto& a : s.verts)
            for (const auto& b : s.verts)
                if (a.mast == b.mast && b.height == a.height + 1) ++count;
        CHECK(count == 1);
    }
}

TEST_CASE("vertex labels and double labeling") {
    auto d = PrismaticDiagram::from_slots(
        3, {Int(3), Int(1), Int(2), Int(1), Int(2), Int(3), Int(3), Int(1)});
    CHECK(d.vertex_at({1, Int(4)}) == d.vertex_at({4, Int(1)}));
    CHECK(d.vertex_at({1, Int(4)}) == DiagVert{1, Int(3)});
    auto l = d.label_of(DiagVert{1, Int(3)});
    CHECK(l.slot == 1);
    CHECK(l.index == 4);
    CHECK(d.vertex_at({5, Int(3)}) == DiagVert{2, Int(3)});
    CHECK_THROWS_AS(d.vertex_at({2, Int(5)}), Error);
}

TEST_CASE("slices and geodesics") {
    auto d = PrismaticDiagram::from_slots(
        3, {Int(3), Int(1), Int(2), Int(1), Int(2), Int(3), Int(3), Int(1)});
    REQUIRE(d.length() == 16);
    auto whole = d.slice(1, d.length() + 1);
    CHECK(whole == d);
    CHECK_THROWS_AS(d.slice(4, 4), Error);
    CHECK_THROWS_AS(d.slice(0, 2), Error);

    DiagVert v21 = d.vertex_at({2, Int(1)});
    DiagVert w73 = d.vertex_at({7, Int(3)});
    auto g = d.geodesic(v21, w73);
    CHECK(g.lr().exponential ==
          std::vector<std::pair<int, Int>>{
              {1, Int(1)}, {2, Int(2)}, {3, Int(1)}, {1, Int(2)}, {2, Int(3)}, {3, Int(2)}});

    DiagVert a{1, Int(0)}, b{2, Int(0)};
    auto range = d.geodesic_range(a, b);
    CHECK(range.second == range.first + 1);

    CHECK(d.geodesic(a, a).length() == 0);
}

TEST_CASE("diagram size matches the run") {
    auto cf = meester(IntVec{5, 7, 8}).cf;
    auto flag = diagram_of_cf(cf);
    Int steps = 0;
    for (const auto& e : to_farey_form(cf).a) steps += e;
    CHECK(Int(static_cast<unsigned long>(flag.parts[0].diagram.length())) == steps);
}
