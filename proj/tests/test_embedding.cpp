#include <doctest.h>

#include <functional>
#include <random>

#include "cubecycle/embedding.hpp"
#include "cubecycle/oracle.hpp"

using namespace cubecycle;

namespace {

Label L(const CubeGraph& g, const char* text) { return parse_label(g.dim(), text); }

Errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const CubeError& e) {
        return e.code();
    }
    return Errc::bad_argument;
}

std::vector<std::string> texts(const CubeGraph& g, const Walk& w) { return walk_texts(g.dim(), w); }

}  // namespace

TEST_CASE("splice joins two cycles through their shared edge") {
    CubeGraph b = bsq(6);
    SUBCASE("4 + 4 - 2 = 6") {
        // two Q_2 squares of BSQ_6 sharing exactly the edge (000000, 000001)
        Walk c1{{L(b, "000000"), L(b, "000001"), L(b, "000011"), L(b, "000010")}, true};
        Walk c2{{L(b, "000000"), L(b, "000001"), L(b, "010101"), L(b, "010100")}, true};
        REQUIRE(verify_cycle(b, c2).ok);
        Walk big = splice(c1, c2, Edge{L(b, "000000"), L(b, "000001")});
        CHECK(big.vertices.size() == 6);
        CHECK(verify_cycle(b, big, L(b, "000000"), 6).ok);
        CHECK_FALSE(big.contains_edge(L(b, "000000"), L(b, "000001")));
    }
    SUBCASE("table row + 16-cycle gives an 18-cycle") {
        CubeGraph g = ssq(6);
        Walk c4 = ssq6_base_cycle(4);
        Walk ring = ssq_edge_cycle16(g.dim(), Edge{Label{0}, Label{1}});
        Walk big = splice(c4, ring, Edge{Label{0}, Label{1}});
        CHECK(big.vertices.size() == 18);
        CHECK(verify_cycle(g, big, Label{0}, 18).ok);
    }
    SUBCASE("errors") {
        Walk c1{{L(b, "000000"), L(b, "000001"), L(b, "000011"), L(b, "000010")}, true};
        Walk c2{{L(b, "010000"), L(b, "010001"), L(b, "010011"), L(b, "010010")}, true};
        CHECK(thrown_code([&] { splice(c1, c2, Edge{L(b, "000000"), L(b, "000001")}); }) ==
              Errc::edge_not_shared);
        // shares the edge and one extra vertex
        Walk c3{{L(b, "000000"), L(b, "000001"), L(b, "000011"), L(b, "010111"),
                 L(b, "010110"), L(b, "000010")}, true};
        CHECK(thrown_code([&] { splice(c1, c3, Edge{L(b, "000000"), L(b, "000001")}); }) ==
              Errc::overlap_beyond_edge);
    }
}

TEST_CASE("base cycle rows of the order-6 graphs") {
    CubeGraph g = ssq(6), b = bsq(6);
    CHECK(texts(g, ssq6_base_cycle(3)) == std::vector<std::string>{"000000", "001000", "000100"});
    CHECK(texts(g, ssq6_base_cycle(4)) ==
          std::vector<std::string>{"000000", "000001", "000011", "000010"});
    CHECK(thrown_code([] { ssq6_base_cycle(33); }) == Errc::length_out_of_range);
    CHECK(thrown_code([] { ssq6_base_cycle(2); }) == Errc::length_out_of_range);

    CHECK(texts(b, bsq6_base_cycle(4)) ==
          std::vector<std::string>{"000000", "000001", "000011", "000010"});
    CHECK(texts(b, bsq6_base_cycle(6)) ==
          std::vector<std::string>{"000000", "000001", "000011", "010111", "010110", "000010"});
    CHECK(thrown_code([] { bsq6_base_cycle(5); }) == Errc::odd_length);
    CHECK(thrown_code([] { bsq6_base_cycle(66); }) == Errc::length_out_of_range);
    CHECK(verify_cycle(b, bsq6_base_cycle(48), Label{0}, 48).ok);

    for (int l = 3; l <= 32; ++l) CHECK(verify_cycle(g, ssq6_base_cycle(l), Label{0}, (std::uint64_t)l).ok);
    for (int l = 4; l <= 64; l += 2)
        CHECK(verify_cycle(b, bsq6_base_cycle(l), Label{0}, (std::uint64_t)l).ok);
}

TEST_CASE("ssq_edge_cycle16 reproduces the fixed suffix pattern at n = 6") {
    CubeGraph g = ssq(6);
    Walk w = ssq_edge_cycle16(g.dim(), Edge{Label{0}, Label{1}});
    CHECK(texts(g, w) == std::vector<std::string>{
                             "000000", "000001", "000101", "000100", "001000", "001001", "001101",
                             "001100", "110000", "110001", "110101", "110100", "111000", "111001",
                             "111101", "111100"});
    CHECK(verify_cycle(g, w, Label{0}, 16, 1).ok);
}

TEST_CASE("ssq_edge_cycle16 covers every edge of SSQ_6") {
    CubeGraph g = ssq(6);
    for (const Edge& e : materialize(g)) {
        Walk w = ssq_edge_cycle16(g.dim(), e);
        VerificationReport rep = verify_cycle(g, w, e.u, 16, 1);
        CHECK(rep.ok);
        CHECK(w.contains_edge(e.u, e.v));
        CHECK(w.vertices[0] == e.u);
        CHECK(w.vertices[1] == e.v);
    }
    CHECK(thrown_code([&] { ssq_edge_cycle16(g.dim(), Edge{Label{0}, L(g, "000011")}); }) ==
          Errc::not_an_edge);
}

TEST_CASE("ssq_edge_cycle16 at n = 10 walks the expected subcube run") {
    CubeGraph g = ssq(10);
    Walk w = ssq_edge_cycle16(g.dim(), Edge{Label{0}, L(g, "0000000100")});
    REQUIRE(verify_cycle(g, w, Label{0}, 16, 1).ok);
    std::vector<unsigned> run;
    for (std::size_t i = 0; i < w.vertices.size(); i += 2) run.push_back(prefix4(g.dim(), w.vertices[i]));
    CHECK(run == std::vector<unsigned>{0b0000, 0b1111, 0b1110, 0b1101, 0b1100, 0b0011, 0b0010, 0b0001});
    for (Label v : w.vertices) {
        unsigned g1 = group_value(v, 1);
        CHECK((g1 == 0 || g1 == 0b0001));
    }
}

TEST_CASE("edge cycles through prefix edges keep one edge per subcube") {
    CubeGraph g10 = ssq(10);
    for (unsigned d : kV00) {
        Edge e{Label{0}, with_group(Label{0}, 2, d)};
        Walk w = ssq_edge_cycle16(g10.dim(), e);
        CHECK(verify_cycle(g10, w, Label{0}, 16, 1).ok);
        CHECK(w.contains_edge(e.u, e.v));
    }
    CubeGraph b10 = bsq(10);
    for (unsigned d : {0b0100u, 0b0101u, 0b1100u, 0b1101u}) {
        Edge e{Label{0}, with_group(Label{0}, 2, d)};
        Walk w = bsq_edge_cycle32(b10.dim(), e);
        CHECK(verify_cycle(b10, w, Label{0}, 32, 1).ok);
        CHECK(w.contains_edge(e.u, e.v));
    }
    // translated: prefix edges away from the all-zero vertex
    CubeGraph g6 = ssq(6);
    Edge far{L(g6, "001101"), L(g6, "110001")};
    REQUIRE(adjacent(g6, far.u, far.v));
    Walk w = ssq_edge_cycle16(g6.dim(), far);
    CHECK(verify_cycle(g6, w, far.u, 16, 1).ok);
    CHECK(w.contains_edge(far.u, far.v));
}

TEST_CASE("bsq_edge_cycle32 reproduces the fixed suffix pattern at n = 6") {
    CubeGraph b = bsq(6);
    Walk w = bsq_edge_cycle32(b.dim(), Edge{Label{0}, Label{1}});
    REQUIRE(w.vertices.size() == 32);
    std::vector<std::pair<unsigned, unsigned>> expect = {
        {0b0000, 0}, {0b0000, 1}, {0b0100, 1}, {0b0100, 0}, {0b1000, 0}, {0b1000, 1},
        {0b1100, 1}, {0b1100, 0}, {0b0011, 0}, {0b0011, 1}, {0b0111, 1}, {0b0111, 0},
        {0b1011, 0}, {0b1011, 1}, {0b1111, 1}, {0b1111, 0}, {0b0010, 0}, {0b0010, 1},
        {0b0110, 1}, {0b0110, 0}, {0b1010, 0}, {0b1010, 1}, {0b1110, 1}, {0b1110, 0},
        {0b0001, 0}, {0b0001, 1}, {0b0101, 1}, {0b0101, 0}, {0b1001, 0}, {0b1001, 1},
        {0b1101, 1}, {0b1101, 0}};
    for (std::size_t i = 0; i < 32; ++i) {
        CHECK(prefix4(b.dim(), w.vertices[i]) == expect[i].first);
        CHECK(group_value(w.vertices[i], 0) == expect[i].second);
    }
    CHECK(verify_cycle(b, w, Label{0}, 32, 1).ok);
}

TEST_CASE("bsq_edge_cycle32 covers every edge of BSQ_6") {
    CubeGraph b = bsq(6);
    for (const Edge& e : materialize(b)) {
        Walk w = bsq_edge_cycle32(b.dim(), e);
        CHECK(verify_cycle(b, w, e.u, 32, 1).ok);
        CHECK(w.contains_edge(e.u, e.v));
    }
}

TEST_CASE("bsq_edge_cycle32 case 1 at n = 10") {
    CubeGraph b = bsq(10);
    Walk w = bsq_edge_cycle32(b.dim(), Edge{Label{0}, L(b, "0000010000")});
    CHECK(verify_cycle(b, w, Label{0}, 32, 1).ok);
    for (Label v : w.vertices) {
        unsigned g1 = group_value(v, 1);
        CHECK((g1 == 0 || g1 == 0b0100));
    }
}

TEST_CASE("Hamiltonian cycles through an edge") {
    SUBCASE("BSQ_2 is its own answer") {
        Walk w = bsq_ham_cycle_edge(Dimension(2), Edge{Label{0}, Label{1}});
        CHECK(w.vertices.size() == 4);
        CHECK(verify_cycle(bsq(2), w, Label{0}, 4).ok);
        CHECK(w.contains_edge(Label{0}, Label{1}));
    }
    SUBCASE("every edge of SSQ_6") {
        CubeGraph g = ssq(6);
        for (const Edge& e : materialize(g)) {
            Walk w = ssq_ham_cycle_edge(g.dim(), e);
            CHECK(verify_cycle(g, w, e.u, 32).ok);
            CHECK(w.contains_edge(e.u, e.v));
        }
    }
    SUBCASE("every edge of BSQ_6") {
        CubeGraph b = bsq(6);
        for (const Edge& e : materialize(b)) {
            Walk w = bsq_ham_cycle_edge(b.dim(), e);
            CHECK(verify_cycle(b, w, e.u, 64).ok);
            CHECK(w.contains_edge(e.u, e.v));
        }
    }
    SUBCASE("n = 10, both families, inner and cross edges") {
        CubeGraph g = ssq(10);
        for (Edge e : {Edge{Label{0}, Label{1}}, Edge{Label{0}, with_group(Label{0}, 2, 0b0011u)},
                       Edge{Label{0}, with_group(Label{0}, 1, 0b1111u)}}) {
            Walk w = ssq_ham_cycle_edge(g.dim(), e);
            CHECK(verify_cycle(g, w, e.u, 256).ok);
            CHECK(w.contains_edge(e.u, e.v));
        }
        CubeGraph b = bsq(10);
        for (Edge e : {Edge{Label{0}, Label{1}}, Edge{Label{0}, with_group(Label{0}, 2, 0b1101u)},
                       Edge{Label{0}, with_group(Label{0}, 1, 0b0100u)}}) {
            Walk w = bsq_ham_cycle_edge(b.dim(), e);
            CHECK(verify_cycle(b, w, e.u, 1024).ok);
            CHECK(w.contains_edge(e.u, e.v));
        }
    }
    SUBCASE("errors") {
        CHECK(thrown_code([] { ssq_ham_cycle_edge(Dimension(2), Edge{Label{0}, Label{1}}); }) ==
              Errc::dimension_too_small);
        CHECK(thrown_code([] {
                  bsq_ham_cycle_edge(Dimension(6), Edge{Label{0}, Label{3}});
              }) == Errc::not_an_edge);
    }
}

TEST_CASE("ssq_pancycle spans every length") {
    CubeGraph g = ssq(6);
    SUBCASE("the base triangle comes back verbatim") {
        Walk w = ssq_pancycle(g.dim(), Label{0}, 3);
        CHECK(texts(g, w) == std::vector<std::string>{"000000", "001000", "000100"});
    }
    SUBCASE("translated lengths at n = 6") {
        Label u = L(g, "110101");
        for (std::uint64_t l = 3; l <= 32; ++l) {
            Walk w = ssq_pancycle(g.dim(), u, l);
            CHECK(verify_cycle(g, w, u, l).ok);
            CHECK(w.vertices.front() == u);
        }
    }
    SUBCASE("n = 10 highlights") {
        CubeGraph g10 = ssq(10);
        Walk ham = ssq_pancycle(g10.dim(), Label{0}, 256);
        CHECK(verify_cycle(g10, ham, Label{0}, 256).ok);
        Label far = L(g10, "0011000011");
        Walk tri = ssq_pancycle(g10.dim(), far, 3);
        CHECK(verify_cycle(g10, tri, far, 3).ok);
        for (std::uint64_t l : {32ull, 33ull, 46ull, 47ull, 200ull, 255ull}) {
            Walk w = ssq_pancycle(g10.dim(), far, l);
            CHECK(verify_cycle(g10, w, far, l).ok);
        }
    }
    SUBCASE("errors") {
        CHECK(thrown_code([&] { ssq_pancycle(g.dim(), Label{0}, 2); }) == Errc::length_out_of_range);
        CHECK(thrown_code([&] { ssq_pancycle(g.dim(), Label{0}, 33); }) == Errc::length_out_of_range);
        CHECK(thrown_code([] { ssq_pancycle(Dimension(2), Label{0}, 3); }) ==
              Errc::dimension_too_small);
    }
}

TEST_CASE("bsq_bipancycle spans every even length") {
    CubeGraph b = bsq(6);
    SUBCASE("base squares") {
        CHECK(texts(b, bsq_bipancycle(b.dim(), Label{0}, 4)) ==
              std::vector<std::string>{"000000", "000001", "000011", "000010"});
        Walk q2 = bsq_bipancycle(Dimension(2), Label{0}, 4);
        CHECK(verify_cycle(bsq(2), q2, Label{0}, 4).ok);
        Walk q2b = bsq_bipancycle(Dimension(2), Label{2}, 4);
        CHECK(q2b.vertices.front() == Label{2});
        CHECK(verify_cycle(bsq(2), q2b, Label{2}, 4).ok);
    }
    SUBCASE("translated lengths at n = 6") {
        Label u = L(b, "101001");
        for (std::uint64_t l = 4; l <= 64; l += 2) {
            Walk w = bsq_bipancycle(b.dim(), u, l);
            CHECK(verify_cycle(b, w, u, l).ok);
            CHECK(w.vertices.front() == u);
        }
    }
    SUBCASE("n = 10 highlights") {
        CubeGraph b10 = bsq(10);
        Walk ham = bsq_bipancycle(b10.dim(), Label{0}, 1024);
        CHECK(verify_cycle(b10, ham, Label{0}, 1024).ok);
        Label far = L(b10, "1001110010");
        for (std::uint64_t l : {4ull, 64ull, 66ull, 94ull, 96ull, 500ull, 1022ull}) {
            Walk w = bsq_bipancycle(b10.dim(), far, l);
            CHECK(verify_cycle(b10, w, far, l).ok);
        }
    }
    SUBCASE("errors") {
        CHECK(thrown_code([&] { bsq_bipancycle(b.dim(), L(b, "010101"), 7); }) == Errc::odd_length);
        CHECK(thrown_code([&] { bsq_bipancycle(b.dim(), Label{0}, 2); }) == Errc::length_out_of_range);
        CHECK(thrown_code([&] { bsq_bipancycle(b.dim(), Label{0}, 66); }) == Errc::length_out_of_range);
        CHECK(thrown_code([] { bsq_bipancycle(Dimension(2), Label{0}, 6); }) ==
              Errc::length_out_of_range);
    }
}

TEST_CASE("constructions are deterministic across calls") {
    CubeGraph g = ssq(10);
    Walk a = ssq_pancycle(g.dim(), L(g, "1100000001"), 100);
    Walk b = ssq_pancycle(g.dim(), L(g, "1100000001"), 100);
    CHECK(a.vertices == b.vertices);
    Walk c = ssq_ham_cycle_edge(g.dim(), Edge{Label{0}, Label{2}});
    Walk d = ssq_ham_cycle_edge(g.dim(), Edge{Label{0}, Label{2}});
    CHECK(c.vertices == d.vertices);
}

TEST_CASE("splice length arithmetic holds along a pancycle expansion") {
    // l = 4 + 30 + m(M-2): exercise each expansion count m at n = 10
    CubeGraph b = bsq(10);
    for (std::uint64_t m = 0; m <= 15; ++m) {
        std::uint64_t l = 4 + 30 + m * 62;
        Walk w = bsq_bipancycle(b.dim(), Label{0}, l);
        CHECK(verify_cycle(b, w, Label{0}, l).ok);
    }
}

TEST_CASE("constructions survive a third recursion level (n = 14)") {
    CubeGraph g = ssq(14), b = bsq(14);

    Walk h = ssq_ham_cycle_edge(g.dim(), Edge{Label{0}, Label{1}});
    CHECK(verify_cycle(g, h, Label{0}, 2048).ok);
    Walk hb = bsq_ham_cycle_edge(b.dim(), Edge{Label{0}, parse_label(b.dim(), "01000000000000")});
    CHECK(verify_cycle(b, hb, Label{0}, 16384).ok);

    Label u = parse_label(g.dim(), "11001101000110");
    for (std::uint64_t l : {3ull, 17ull, 256ull, 257ull, 271ull, 2048ull}) {
        Walk w = ssq_pancycle(g.dim(), u, l);
        CHECK(verify_cycle(g, w, u, l).ok);
    }
    Label v = parse_label(b.dim(), "10110010010011");
    for (std::uint64_t l : {4ull, 1024ull, 1026ull, 1056ull, 16384ull}) {
        Walk w = bsq_bipancycle(b.dim(), v, l);
        CHECK(verify_cycle(b, w, v, l).ok);
    }
    for (int j = 1; j <= 3; ++j) {
        Edge e{Label{0}, with_group(Label{0}, j, 0b0011u)};
        CHECK(verify_cycle(g, ssq_edge_cycle16(g.dim(), e), Label{0}, 16, 1).ok);
        Edge f{Label{0}, with_group(Label{0}, j, 0b1101u)};
        CHECK(verify_cycle(b, bsq_edge_cycle32(b.dim(), f), Label{0}, 32, 1).ok);
    }
}
