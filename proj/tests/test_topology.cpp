#include <doctest.h>

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cubecycle/oracle.hpp"
#include "cubecycle/topology.hpp"

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

}  // namespace

TEST_CASE("label text form round-trips") {
    CubeGraph g = ssq(6);
    CHECK(to_text(g.dim(), Label{0}) == "000000");
    CHECK(parse_label(g.dim(), "010000").bits == 16);
    for (Label u : vertices(g)) CHECK(parse_label(g.dim(), to_text(g.dim(), u)) == u);
    CHECK_THROWS_AS(parse_label(g.dim(), "0000"), CubeError);
    CHECK_THROWS_AS(parse_label(g.dim(), "00002x"), CubeError);
}

TEST_CASE("dimension invariants") {
    CHECK_THROWS_AS(Dimension(7), CubeError);
    CHECK_THROWS_AS(Dimension(4), CubeError);
    CHECK_THROWS_AS(Dimension(0), CubeError);
    CHECK(Dimension(2).groups() == 0);
    CHECK(Dimension(6).groups() == 1);
    CHECK(Dimension(10).groups() == 2);
}

TEST_CASE("validate_label accepts and rejects per family") {
    CHECK(validate_label(CubeFamily::ssq, Dimension(6), std::string_view("000000")).bits == 0);
    CHECK(thrown_code([] { validate_label(CubeFamily::ssq, Dimension(6), std::string_view("010000")); }) ==
          Errc::invalid_ssq_group);
    CHECK(validate_label(CubeFamily::bsq, Dimension(6), std::string_view("010000")).bits == 16);
    // out-of-range bits
    CHECK(thrown_code([] { validate_label(CubeFamily::bsq, Dimension(6), std::uint64_t{1} << 7); }) ==
          Errc::wrong_length);
}

TEST_CASE("vertex enumeration is lexicographic with the right counts") {
    CHECK(vertices(ssq(6)).size() == 32);
    CHECK(vertices(bsq(6)).size() == 64);
    CHECK(ssq(10).vertex_count() == 256);
    CHECK(bsq(10).vertex_count() == 1024);

    std::vector<Label> q2 = vertices(ssq(2));
    REQUIRE(q2.size() == 4);
    CHECK(to_text(Dimension(2), q2[0]) == "00");
    CHECK(to_text(Dimension(2), q2[3]) == "11");

    std::vector<Label> v6 = vertices(ssq(6));
    for (std::size_t i = 1; i < v6.size(); ++i) CHECK(v6[i - 1] < v6[i]);
    for (Label u : v6) CHECK(ssq(6).valid(u));
}

TEST_CASE("adjacency examples") {
    CubeGraph g = ssq(6), b = bsq(6);
    CHECK(adjacent(g, L(g, "000000"), L(g, "001000")));
    CHECK_FALSE(adjacent(g, L(g, "000000"), L(g, "000011")));
    CHECK(adjacent(b, L(b, "000011"), L(b, "010111")));
    CHECK_FALSE(adjacent(b, L(b, "000000"), L(b, "100000")));
    CHECK(thrown_code([&] { adjacent(g, L(g, "000000"), Label{16}); }) == Errc::invalid_label);
}

TEST_CASE("adjacency is symmetric and irreflexive (exhaustive at n = 6)") {
    for (CubeGraph g : {ssq(6), bsq(6)}) {
        std::vector<Label> verts = vertices(g);
        for (Label u : verts) {
            CHECK_FALSE(adjacent(g, u, u));
            for (Label v : verts)
                CHECK(adjacent(g, u, v) == adjacent(g, v, u));
        }
    }
}

TEST_CASE("unrolled and recursive adjacency agree") {
    SUBCASE("exhaustively at n = 6") {
        for (CubeGraph g : {ssq(6), bsq(6)}) {
            std::vector<Label> verts = vertices(g);
            for (Label u : verts)
                for (Label v : verts)
                    CHECK(adjacent(g, u, v) == recursive_adjacent(g, u, v));
        }
    }
    SUBCASE("recursive examples") {
        CubeGraph g = ssq(6), b = bsq(6);
        CHECK(recursive_adjacent(g, L(g, "001100"), L(g, "110000")));
        CHECK(adjacent(g, L(g, "001100"), L(g, "110000")));
        CHECK(recursive_adjacent(b, L(b, "000000"), L(b, "000001")));
        CHECK_FALSE(recursive_adjacent(b, L(b, "000001"), L(b, "000001")));
    }
    SUBCASE("sampled pairs at n = 10") {
        std::mt19937_64 rng(7);
        for (CubeGraph g : {ssq(10), bsq(10)}) {
            std::vector<Label> verts = vertices(g);
            for (int i = 0; i < 100000; ++i) {
                Label u = verts[rng() % verts.size()];
                Label v = verts[rng() % verts.size()];
                CHECK(adjacent(g, u, v) == recursive_adjacent(g, u, v));
            }
        }
    }
}

TEST_CASE("neighbors come in the documented order") {
    CubeGraph g = ssq(6), b = bsq(6);
    std::vector<std::string> got;
    for (Label v : neighbors(g, Label{0})) got.push_back(to_text(g.dim(), v));
    CHECK(got == std::vector<std::string>{"111100", "000100", "001000", "001100", "000001", "000010"});
    got.clear();
    for (Label v : neighbors(b, Label{0})) got.push_back(to_text(b.dim(), v));
    CHECK(got == std::vector<std::string>{"010000", "010100", "110000", "110100", "000001", "000010"});
    got.clear();
    for (Label v : neighbors(bsq(2), Label{0})) got.push_back(to_text(Dimension(2), v));
    CHECK(got == std::vector<std::string>{"01", "10"});
}

TEST_CASE("neighbor lists match brute-force adjacency scans") {
    for (CubeGraph g : {ssq(6), bsq(6)}) {
        std::vector<Label> verts = vertices(g);
        for (Label u : verts) {
            std::set<std::uint64_t> from_neighbors;
            for (Label v : neighbors(g, u)) from_neighbors.insert(v.bits);
            CHECK(from_neighbors.size() == static_cast<std::size_t>(g.n()));
            std::set<std::uint64_t> from_scan;
            for (Label v : verts)
                if (adjacent(g, u, v)) from_scan.insert(v.bits);
            CHECK(from_neighbors == from_scan);
        }
    }
}

TEST_CASE("degree is n (sampled at n = 10)") {
    std::mt19937_64 rng(11);
    for (CubeGraph g : {ssq(10), bsq(10)}) {
        std::vector<Label> verts = vertices(g);
        for (int i = 0; i < 1000; ++i) {
            Label u = verts[rng() % verts.size()];
            std::set<std::uint64_t> nb;
            for (Label v : neighbors(g, u)) {
                CHECK(adjacent(g, u, v));
                nb.insert(v.bits);
            }
            CHECK(nb.size() == 10);
        }
    }
}

TEST_CASE("classify_edge examples and round-trip") {
    CubeGraph g = ssq(6);
    EdgeClass c = classify_edge(g, L(g, "000000"), L(g, "000001"));
    CHECK(c.is_suffix);
    CHECK(c.delta == 0b01);

    CubeGraph g10 = ssq(10);
    EdgeClass c10 = classify_edge(g10, L(g10, "0000000000"), L(g10, "0011000000"));
    CHECK_FALSE(c10.is_suffix);
    CHECK(c10.group == 2);
    CHECK(c10.delta == 0b0011);

    CubeGraph b = bsq(6);
    EdgeClass cb = classify_edge(b, L(b, "000000"), L(b, "110100"));
    CHECK_FALSE(cb.is_suffix);
    CHECK(cb.group == 1);
    CHECK((cb.delta >> 2) == 3);  // a moved down by one
    CHECK((cb.delta & 3) == 1);   // b moved up by one

    CHECK(thrown_code([&] { classify_edge(b, L(b, "000000"), L(b, "100000")); }) == Errc::not_an_edge);

    for (CubeGraph host : {ssq(6), bsq(6)}) {
        for (const Edge& e : materialize(host)) {
            EdgeClass cls = classify_edge(host, e.u, e.v);
            CHECK(apply_edge_class(host, e.u, cls) == e.v);
        }
    }
}

TEST_CASE("subcube_of returns the prefix nibble") {
    CHECK(subcube_of(Dimension(6), parse_label(Dimension(6), "110100")) == 0b1101);
    CHECK(subcube_of(Dimension(10), parse_label(Dimension(10), "0011010101")) == 0b0011);
    CHECK(thrown_code([] { subcube_of(Dimension(2), Label{1}); }) == Errc::dimension_too_small);
}

TEST_CASE("materialize counts and edge list format") {
    CHECK(materialize(ssq(6)).size() == 96);
    CHECK(materialize(bsq(6)).size() == 192);
    CHECK(materialize(bsq(2)).size() == 4);
    CHECK(materialize(ssq(10)).size() == 256 * 10 / 2);

    std::ostringstream out;
    CubeGraph q2 = bsq(2);
    write_edge_list(out, q2, materialize(q2));
    CHECK(out.str() == "00 01\n00 10\n01 11\n10 11\n");

    CHECK(thrown_code([] { materialize(bsq(26)); }) == Errc::too_large);
}

TEST_CASE("dot export shape") {
    std::ostringstream out;
    CubeGraph q2 = bsq(2);
    write_dot(out, q2, materialize(q2));
    std::string dot = out.str();
    CHECK(dot.find("graph bsq2 {") == 0);
    CHECK(dot.find("\"00\" -- \"01\";") != std::string::npos);
    CHECK(dot.rfind("}\n") == dot.size() - 2);
}
