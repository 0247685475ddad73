#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cgadget/gadget.hpp"

using namespace cgadget;

namespace {

std::vector<std::uint32_t> random_word(std::size_t n, std::uint64_t q, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = pick(rng);
    return v;
}

std::size_t symbol_distance(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

} // namespace

TEST_CASE("simplex embedding basics") {
    // (0,1) over F_2 -> e_0 . e_1 = 1001
    std::vector<std::uint32_t> v = {0, 1};
    CHECK(simplex_embed(v, 2).to_string() == "1001");

    std::vector<std::uint32_t> a = {0, 0}, b = {1, 2};
    CHECK(hamming(simplex_embed(a, 3), simplex_embed(b, 3)) == 4);

    const BitVec ea = simplex_embed(a, 3);
    CHECK(hamming(ea, ea) == 0);
    CHECK(inner_product(ea, ea) == 2);
}

TEST_CASE("simplex embedding identities on random pairs") {
    std::mt19937_64 rng(2024);
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 8}, {5, 5}, {13, 13}}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const auto v1 = random_word(n, q, rng);
            const auto v2 = random_word(n, q, rng);
            const BitVec e1 = simplex_embed(v1, q);
            const BitVec e2 = simplex_embed(v2, q);
            const std::size_t dist = symbol_distance(v1, v2);
            REQUIRE(hamming(e1, e2) == 2 * dist);
            REQUIRE(inner_product(e1, e2) == n - dist);
        }
    }
}

TEST_CASE("contact-dimension gadget at q=5, K1=1 is complete bipartite") {
    const BipartiteGadget g = build_cd_gadget(5, 1);
    CHECK(g.n == 5);
    CHECK(g.dim == 25);
    CHECK(g.beta == 8);
    CHECK(g.edge_count() == 25);
    const auto report = verify_gadget(g);
    CHECK(report.ok());
    CHECK(report.edge_min == 8);
    CHECK(report.edge_max == 8);
    CHECK_FALSE(report.cross_nonedge_extreme.has_value()); // no non-edges
    CHECK(report.same_side_extreme == 10); // 2*dist(C1) = 2*5
}

TEST_CASE("contact-dimension gadget at q=7, K1=2") {
    const BipartiteGadget g = build_cd_gadget(7, 2);
    CHECK(g.n == 49);
    CHECK(g.dim == 49);
    CHECK(g.beta == 10);
    const auto report = verify_gadget(g);
    CHECK(report.ok());
    // density floor n^2 * (q-1)/q * K1^-K1
    CHECK(report.density_floor == Rational(49 * 49) * Rational(6, 7 * 4));
    CHECK(Rational(static_cast<long long>(g.edge_count())) >= report.density_floor);
    // non-edges sit at >= beta + 2 because embedded distances are even
    if (report.cross_nonedge_extreme) CHECK(*report.cross_nonedge_extreme >= g.beta + 2);
    CHECK(*report.same_side_extreme >= 2 * (7 - 2 + 1));
}

TEST_CASE("cd gadget parameter bound") {
    CHECK_THROWS_AS(build_cd_gadget(5, 5), BadParametersError);
    CHECK_THROWS_AS(build_cd_gadget(4, 1), CompositeModulusError);
}

TEST_CASE("inner-product gadget at q=7, K1=1") {
    const BipartiteGadget g = build_ip_gadget(7, 1);
    CHECK(g.kind == GadgetKind::GapInnerProduct);
    CHECK(g.beta == 3);
    CHECK(g.n == 7);
    const auto report = verify_gadget(g);
    CHECK(report.ok());
    CHECK(report.edge_min == 3);
    CHECK(report.edge_max == 3);
    if (report.same_side_extreme) CHECK(*report.same_side_extreme == 0); // <= K1 - 1
    if (report.cross_nonedge_extreme) CHECK(*report.cross_nonedge_extreme < 3);
}

TEST_CASE("inner-product gadget at q=11, K1=2") {
    const BipartiteGadget g = build_ip_gadget(11, 2, std::uint64_t(1) << 26);
    CHECK(g.beta == 6);
    const auto report = verify_gadget(g);
    CHECK(report.ok());
    if (report.same_side_extreme) CHECK(*report.same_side_extreme <= 1);
    if (report.cross_nonedge_extreme) CHECK(*report.cross_nonedge_extreme < 6);
}

TEST_CASE("ip gadget parameter bound") {
    CHECK_THROWS_AS(build_ip_gadget(5, 2), BadParametersError); // 3*2+1 > 5
}

TEST_CASE("gap gadget at q=11, K1=1, K2=4") {
    const BipartiteGadget g = build_gap_cd_gadget(11, 1, 4);
    CHECK(g.beta == 16);
    CHECK(g.mu == Rational(1, 4));
    const auto report = verify_gadget(g);
    CHECK(report.ok());
    // same-side distances are 2*dist(C1) = 22 > 1.25 * 16 = 20
    CHECK(*report.same_side_extreme == 22);
}

TEST_CASE("gap gadget with K2 = K1+1 degenerates to mu = 0 but still realizes the graph") {
    const BipartiteGadget g = build_gap_cd_gadget(7, 1, 2);
    CHECK(g.mu == Rational(0));
    const auto report = verify_gadget(g);
    CHECK(report.ok());
}

TEST_CASE("gap gadget rejects K2 <= K1") {
    CHECK_THROWS_AS(build_gap_cd_gadget(7, 3, 2), GapNonpositiveError);
    CHECK_THROWS_AS(build_gap_cd_gadget(7, 3, 3), GapNonpositiveError);
}

TEST_CASE("verification catches a flipped adjacency bit") {
    BipartiteGadget g = build_cd_gadget(7, 2);
    // (7,2) is not complete: find a non-edge and flip it on
    bool flipped = false;
    for (std::size_t i = 0; i < g.n && !flipped; ++i)
        for (std::size_t j = 0; j < g.n && !flipped; ++j)
            if (!g.adjacency[i].get(j)) {
                g.adjacency[i].set(j);
                flipped = true;
            }
    REQUIRE(flipped);
    const auto report = verify_gadget(g);
    CHECK_FALSE(report.ok());
    CHECK(report.violation_total == 1);
    CHECK(report.violations.front().find("edge") != std::string::npos);
}

TEST_CASE("verification catches a wrong beta") {
    BipartiteGadget g = build_cd_gadget(5, 1);
    g.beta += 1;
    const auto report = verify_gadget(g);
    CHECK_FALSE(report.ok());
    CHECK(report.violation_total >= g.edge_count()); // every edge misses the new beta
}

TEST_CASE("verification is identical across thread counts") {
    const BipartiteGadget g = build_cd_gadget(13, 2, std::uint64_t(1) << 26);
    const auto r1 = verify_gadget(g, kDefaultVerificationBudget, 1);
    const auto r4 = verify_gadget(g, kDefaultVerificationBudget, 4);
    CHECK(r1.ok());
    CHECK(r1.edge_count == r4.edge_count);
    CHECK(r1.violations == r4.violations);
    CHECK(r1.same_side_extreme == r4.same_side_extreme);
    CHECK(r1.cross_nonedge_extreme == r4.cross_nonedge_extreme);
}

TEST_CASE("verification budget") {
    const BipartiteGadget g = build_cd_gadget(5, 1);
    CHECK_THROWS_AS(verify_gadget(g, 10), BudgetExceededError);
}

TEST_CASE("log-dense parameter sequence at delta = 1/2") {
    const auto seq = log_dense_params(Rational(1, 2), 1000000);
    REQUIRE(seq.entries.size() >= 6);
    auto expect = [&](std::size_t idx, std::uint64_t q, std::size_t k1, std::uint64_t n) {
        CHECK(seq.entries[idx].q == q);
        CHECK(seq.entries[idx].k1 == k1);
        CHECK(seq.entries[idx].n == n);
    };
    expect(0, 2, 1, 2);
    expect(1, 3, 1, 3);
    expect(2, 5, 2, 25);
    expect(3, 7, 2, 49);
    expect(4, 11, 3, 1331);
    expect(5, 13, 3, 2197);
    CHECK(seq.log_density_constant > 1.0);

    CHECK(log_dense_params(Rational(1, 2), 1).entries.empty());
    CHECK_THROWS_AS(log_dense_params(Rational(0), 100), BadParametersError);
    CHECK_THROWS_AS(log_dense_params(Rational(1), 100), BadParametersError);
}

TEST_CASE("log-dense members satisfy n = q^floor(q^delta) at delta = 3/4") {
    const auto seq = log_dense_params(Rational(3, 4), 10000);
    for (const auto& e : seq.entries) {
        // exact recomputation: k1 is the largest k with k^4 <= q^3
        std::uint64_t k = 1;
        while ((k + 1) * (k + 1) * (k + 1) * (k + 1) <= e.q * e.q * e.q) ++k;
        CHECK(e.k1 == k);
        __uint128_t n = 1;
        for (std::size_t i = 0; i < e.k1; ++i) n *= e.q;
        CHECK(e.n == static_cast<std::uint64_t>(n));
        CHECK(e.n <= 10000);
    }
}
