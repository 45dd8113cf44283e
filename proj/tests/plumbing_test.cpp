#include "rbd/plumbing.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace rbd;
using namespace rbd::plumbing;

TEST_SUITE_BEGIN("plumbing");

namespace {

LinearChain listed_chain(std::vector<long> w, long p, long q) {
    return LinearChain(std::vector<Int>(w.begin(), w.end()), std::make_pair(Int(p), Int(q)));
}

}  // namespace

TEST_CASE("cf_expand reproduces the four listed chains up to reversal") {
    CHECK(cf_expand(2, 1).weights == std::vector<Int>{-4});
    CHECK(cf_expand(28, 9).equal_up_to_reversal(
        make_chain({-2, -2, -12, -2, -2, -2, -2, -2, -2, -2, -4})));
    CHECK(cf_expand(46, 9).equal_up_to_reversal(
        make_chain({-2, -2, -2, -2, -12, -2, -2, -2, -2, -2, -2, -2, -6})));
    CHECK(cf_expand(64, 9).equal_up_to_reversal(
        make_chain({-2, -2, -2, -2, -2, -2, -12, -2, -2, -2, -2, -2, -2, -2, -8})));
    CHECK(cf_expand(32, 15).equal_up_to_reversal(
        make_chain({-2, -9, -5, -2, -2, -2, -2, -2, -2, -3})));
}

TEST_CASE("cf_expand validates input") {
    CHECK_THROWS_AS(cf_expand(9, 9), std::invalid_argument);
    CHECK_THROWS_AS(cf_expand(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(cf_expand(1, 2), std::invalid_argument);
}

TEST_CASE("cf_eval") {
    CHECK(cf_eval(make_chain({-4})) == Rat(-4));
    CHECK(cf_eval(make_chain({-2, -2})) == Rat(-3, 2));
    CHECK(cf_eval(cf_expand(46, 9)) == Rat(-2116, 413));
}

TEST_CASE("cf_eval inverts cf_expand and reversal swaps q with p - q") {
    for (long p = 2; p <= 200; ++p)
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto c = cf_expand(p, q);
            Rat v = cf_eval(c);
            CHECK(v == Rat(-p * p, p * q - 1));
            CHECK(c.weights == cf_expand(p, p - q).reversed().weights);
        }
}

TEST_CASE("chain weights above -2 are rejected") {
    CHECK_THROWS_AS(make_chain({-2, -1}), std::invalid_argument);
}

TEST_CASE("reversal equality and the canonical representative") {
    auto a = make_chain({-2, -2, -4});
    auto b = make_chain({-4, -2, -2});
    CHECK(a.equal_up_to_reversal(b));
    CHECK(a.canonical().weights == b.canonical().weights);
    CHECK(a.canonical().weights == std::vector<Int>{-4, -2, -2});
    CHECK_FALSE(a.equal_up_to_reversal(make_chain({-2, -4, -2})));
}

TEST_CASE("wahl_generate matches the (p,q) sweep") {
    auto one = wahl_generate(1);
    CHECK(one == std::set<std::vector<Int>>{{Int(-4)}});

    auto two = wahl_generate(2);
    CHECK(two.size() == 3);
    CHECK(two.count({Int(-5), Int(-2)}) == 1);
    CHECK(two.count({Int(-2), Int(-5)}) == 1);

    // Every Wahl chain of length <= 8 has digit sum 3k + 1 <= 25, so its
    // continued-fraction numerator p^2 is at most prod(a_i) <= 3^7 * 4 and
    // the sweep p <= 200 is exhaustive.
    std::set<std::vector<Int>> oracle;
    for (long p = 2; p <= 200; ++p)
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto c = cf_expand(p, q);
            if (c.length() <= 8) {
                oracle.insert(c.weights);
                oracle.insert(c.reversed().weights);
            }
        }
    CHECK(wahl_generate(8) == oracle);
}

TEST_CASE("chain Gram cokernels are cyclic of order p^2") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{
             {28, 9}, {46, 9}, {64, 9}, {32, 15}, {5, 2}, {7, 3}, {12, 5}, {30, 13}}) {
        auto chain = cf_expand(p, q);
        auto inv = rbd::lattice::smith_invariants(chain.gram());
        Int prod = 1;
        for (const auto& d : inv) prod *= d;
        CHECK(prod == Int(p) * Int(p));
        for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i] == 1);
        CHECK(inv.back() == Int(p) * Int(p));
    }
}

TEST_CASE("meridian residues") {
    auto chain = fixtures::x1_chain();
    std::size_t last = chain.length() - 1;
    CHECK(meridian_class(chain, last, last).residue == 1);

    // Some vertex realizes +-13 x generator, coprime to 784.
    bool found = false;
    for (std::size_t j = 0; j < chain.length(); ++j) {
        auto b = meridian_class(chain, j, last);
        if (b.residue == 13 || b.residue == 784 - 13) found = true;
    }
    CHECK(found);
    CHECK(gcd(Int(13), Int(784)) == 1);

    auto y_chain = listed_chain({-2, -9, -5, -2, -2, -2, -2, -2, -2, -3}, 32, 15);
    bool found9 = false;
    for (std::size_t j = 0; j < y_chain.length(); ++j) {
        auto b = meridian_class(y_chain, j, y_chain.length() - 1);
        if (b.residue == 9 || b.residue == 1024 - 9) found9 = true;
    }
    CHECK(found9);
    CHECK(gcd(Int(9), Int(1024)) == 1);
}

TEST_CASE("a non-generating meridian is rejected as generator") {
    // In C_{28,9} the second meridian is twice the first, so it generates an
    // index-2 subgroup of Z/784 only.
    auto chain = fixtures::x1_chain();
    CHECK_THROWS_AS(meridian_class(chain, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(k_restriction(chain, 1), std::invalid_argument);
    CHECK_THROWS_AS(meridian_class(chain, 0, 99), std::invalid_argument);
}

TEST_CASE("framed graph validation") {
    FramedGraph g;
    g.framings = {Int(-2), Int(-2)};
    CHECK_THROWS_AS(g.add_edge(0, 0, Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1, Int(0)), std::invalid_argument);
    g.add_edge(1, 0, Int(2));  // stored with i < j
    CHECK(g.edges.count({0, 1}) == 1);
    CHECK(g.gram()(0, 1) == 2);
}

TEST_CASE("k restriction and the rational-ball extension") {
    auto chain = fixtures::x1_chain();
    auto kr = k_restriction(chain, 0);
    CHECK(kr.residue == 532);
    CHECK(kr.order == 784);
    CHECK(extends_over_ball(chain, kr));
    CHECK(kr.residue == 19 * 28);

    // Chain (-4): K evaluates -2, whose class in Z/4 is 2 (1x1 cokernel).
    auto c4 = cf_expand(2, 1);
    auto kr4 = k_restriction(c4, 0);
    CHECK(kr4.residue == 2);
    CHECK(kr4.order == 4);

    CHECK(restriction_class(c4, {Int(0)}, 0).residue == 0);

    CHECK(extends_over_ball(chain, BoundaryClass{Int(0), Int(784), 0}));
    CHECK_FALSE(extends_over_ball(c4, BoundaryClass{Int(1), Int(4), 0}));
}

TEST_CASE("k restriction extends for all four listed chains") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{28, 9}, {46, 9}, {64, 9}, {32, 15}}) {
        auto chain = cf_expand(p, q).reversed();
        auto kr = k_restriction(chain, 0);
        CHECK(extends_over_ball(chain, kr));
    }
}

TEST_CASE("blow_down_reduce") {
    FramedGraph lone;
    lone.framings = {Int(-1)};
    auto r1 = blow_down_reduce(lone);
    CHECK(r1.count == 1);
    CHECK(r1.reduced.vertex_count() == 0);

    FramedGraph two;
    two.framings = {Int(-4), Int(-1)};
    two.add_edge(0, 1, Int(2));
    auto r2 = blow_down_reduce(two);
    CHECK(r2.count == 1);
    REQUIRE(r2.reduced.vertex_count() == 1);
    CHECK(r2.reduced.framings[0] == 0);

    auto chain = fixtures::x1_chain();
    auto cert = embedding_certificate(chain, 3);
    REQUIRE(cert.has_value());
    auto r3 = blow_down_reduce(attach_unknot(chain, *cert));
    CHECK(r3.count == 11);
    REQUIRE(r3.reduced.vertex_count() == 1);
    CHECK(r3.reduced.framings[0] == 0);
}

TEST_CASE("blow-down preserves |det| and drops rank by the deletion count") {
    std::vector<FramedGraph> graphs;
    {
        FramedGraph g;
        g.framings = {Int(-1)};
        graphs.push_back(g);
    }
    {
        FramedGraph g;
        g.framings = {Int(-4), Int(-1)};
        g.add_edge(0, 1, Int(2));
        graphs.push_back(g);
    }
    {
        FramedGraph g;
        g.framings = {Int(-3), Int(-1), Int(-5)};
        g.add_edge(0, 1, Int(1));
        g.add_edge(1, 2, Int(2));
        graphs.push_back(g);
    }
    for (auto [p, q] : std::vector<std::pair<long, long>>{{28, 9}, {32, 15}}) {
        auto chain = cf_expand(p, q).reversed();
        auto cert = embedding_certificate(chain, 3);
        REQUIRE(cert.has_value());
        graphs.push_back(attach_unknot(chain, *cert));
    }
    for (const auto& g : graphs) {
        auto before = g.gram();
        auto res = blow_down_reduce(g);
        auto after = res.reduced.gram();
        CHECK(abs(det(before)) == abs(det(after)));
        CHECK(rank(before) == rank(after) + res.count);
    }
}

TEST_CASE("embedding certificates") {
    auto c4 = cf_expand(2, 1);
    auto cert4 = embedding_certificate(c4, 3);
    REQUIRE(cert4.has_value());
    CHECK(*cert4 == Attachment{Int(2)});

    auto chain = fixtures::x1_chain();
    CHECK(embedding_certificate(chain, 3).has_value());

    // L(3,2) bounds no rational ball; no attachment can reduce (-2,-2).
    CHECK_FALSE(embedding_certificate(make_chain({-2, -2}), 3).has_value());
}

TEST_SUITE_END();
