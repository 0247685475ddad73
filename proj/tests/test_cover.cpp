#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cgadget/cover.hpp"
#include "cgadget/gadget.hpp"

using namespace cgadget;

namespace {

std::vector<BitVec> square(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<BitVec> rows(n, BitVec(n));
    for (auto [a, b] : edges) rows[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    return rows;
}

std::vector<BitVec> complete(std::size_t n) {
    std::vector<BitVec> rows(n, BitVec(n));
    for (auto& r : rows)
        for (std::size_t j = 0; j < n; ++j) r.set(j);
    return rows;
}

std::uint64_t edges_of(const std::vector<BitVec>& rows) {
    std::uint64_t c = 0;
    for (const auto& r : rows) c += r.popcount();
    return c;
}

std::uint64_t intersection(const std::vector<BitVec>& g, const SidePreservingPermutation& perm,
                           const std::vector<BitVec>& h) {
    const auto hit = permuted_edges(g, perm);
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < g.size(); ++i) c += and_popcount(hit[i], h[i]);
    return c;
}

/// Exhaustive oracle over all (n!)^2 side-preserving permutations.
std::uint64_t best_intersection_bruteforce(const std::vector<BitVec>& g, const std::vector<BitVec>& h) {
    const std::size_t n = g.size();
    std::vector<std::uint32_t> pa(n), pb(n);
    std::iota(pa.begin(), pa.end(), 0);
    std::uint64_t best = 0;
    do {
        std::iota(pb.begin(), pb.end(), 0);
        do {
            best = std::max(best, intersection(g, SidePreservingPermutation{pa, pb}, h));
        } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));
    return best;
}

std::vector<BitVec> random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<BitVec> rows(n, BitVec(n));
    for (auto& r : rows)
        for (std::size_t j = 0; j < n; ++j)
            if (coin(rng)) r.set(j);
    return rows;
}

} // namespace

TEST_CASE("complete graphs cover themselves") {
    const auto g = complete(4);
    const auto perm = best_permutation(g, g);
    CHECK(intersection(g, perm, g) == 16);
}

TEST_CASE("single-edge example from first principles") {
    const auto g = square(2, {{0, 0}});
    const auto h = square(2, {{1, 1}});
    const auto perm = best_permutation(g, h);
    CHECK(perm.a_img[0] == 1);
    CHECK(perm.b_img[0] == 1);
    CHECK(intersection(g, perm, h) == 1);
    CHECK(best_intersection_bruteforce(g, h) == 1);
}

TEST_CASE("empty source graph") {
    const auto g = square(3, {});
    CHECK_THROWS_AS(best_permutation(g, complete(3)), EmptyGraphError);
    CHECK_THROWS_AS(cover_biclique(g), EmptyGraphError);
}

TEST_CASE("derandomized bound holds and matches the exhaustive optimum on small graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 3; // 2..4
        auto g = random_graph(n, 0.4, rng);
        auto h = random_graph(n, 0.5, rng);
        if (edges_of(g) == 0) g[0].set(0);
        const auto perm = best_permutation(g, h);
        const std::uint64_t got = intersection(g, perm, h);
        // derandomized guarantee |E_G| |E_H| / n^2, exact comparison
        CHECK(static_cast<__int128>(got) * n * n >= static_cast<__int128>(edges_of(g)) * edges_of(h));
        CHECK(got <= best_intersection_bruteforce(g, h));
    }
}

TEST_CASE("cover of K_{n,n} by itself has k = 1") {
    const auto cover = cover_biclique(complete(6));
    CHECK(cover.k() == 1);
    CHECK(verify_cover(cover, complete(6)).ok());
}

TEST_CASE("perfect matching on 2+2 vertices tiles the biclique with k = 2") {
    const auto g = square(2, {{0, 0}, {1, 1}});
    const auto cover = cover_biclique(g);
    CHECK(cover.k() == 2);
    CHECK(verify_cover(cover, g).ok());
}

TEST_CASE("the complete q=5 K1=1 gadget covers in one round") {
    const BipartiteGadget g = build_cd_gadget(5, 1);
    const auto cover = cover_biclique(g.adjacency);
    CHECK(cover.k() == 1);
    CHECK(verify_cover(cover, g.adjacency).ok());
}

TEST_CASE("cover bound on gadget graphs") {
    for (auto [q, k1] : std::vector<std::pair<std::uint64_t, std::size_t>>{{5, 1}, {5, 2}, {7, 2}}) {
        const BipartiteGadget g = build_cd_gadget(q, k1);
        const auto cover = cover_biclique(g.adjacency);
        const auto report = verify_cover(cover, g.adjacency);
        CHECK(report.ok());
        CHECK(report.uncovered_total == 0);
        CHECK(static_cast<double>(cover.k()) <= report.k_bound);
    }
}

TEST_CASE("per-round guarantee observed directly") {
    const BipartiteGadget g = build_cd_gadget(7, 1);
    const std::size_t n = g.n;
    const std::uint64_t eg = g.edge_count();
    std::vector<BitVec> uncovered = complete(n);
    std::uint64_t remaining = static_cast<std::uint64_t>(n) * n;
    while (remaining > 0) {
        const auto perm = best_permutation(g.adjacency, uncovered);
        const auto hit = permuted_edges(g.adjacency, perm);
        std::uint64_t covered = 0;
        for (std::size_t i = 0; i < n; ++i) covered += and_popcount(hit[i], uncovered[i]);
        REQUIRE(static_cast<__int128>(covered) * n * n >= static_cast<__int128>(eg) * remaining);
        for (std::size_t i = 0; i < n; ++i) uncovered[i].and_not_assign(hit[i]);
        remaining -= covered;
    }
}

TEST_CASE("verify_cover flags a truncated cover") {
    const auto g = square(2, {{0, 0}, {1, 1}});
    auto cover = cover_biclique(g);
    REQUIRE(cover.k() == 2);
    cover.perms.pop_back();
    const auto report = verify_cover(cover, g);
    CHECK_FALSE(report.ok());
    CHECK(report.uncovered_total == 2);
}

TEST_CASE("slack for a complete source graph is 2 ln n") {
    const std::size_t n = 6;
    const auto cover = cover_biclique(complete(n));
    const auto report = verify_cover(cover, complete(n));
    CHECK(report.slack == doctest::Approx(2.0 * std::log(static_cast<double>(n))));
}

TEST_CASE("deterministic cover") {
    const BipartiteGadget g = build_cd_gadget(7, 1);
    const auto c1 = cover_biclique(g.adjacency);
    const auto c2 = cover_biclique(g.adjacency);
    REQUIRE(c1.k() == c2.k());
    for (std::size_t t = 0; t < c1.k(); ++t) {
        CHECK(c1.perms[t].a_img == c2.perms[t].a_img);
        CHECK(c1.perms[t].b_img == c2.perms[t].b_img);
    }
}
