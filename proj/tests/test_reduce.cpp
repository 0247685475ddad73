#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cgadget/instancegen.hpp"
#include "cgadget/io.hpp"
#include "cgadget/reduce.hpp"

using namespace cgadget;

namespace {

PointSet points(std::initializer_list<const char*> rows) {
    PointSet set;
    bool first = true;
    for (const char* r : rows) {
        BitVec v = BitVec::from_string(r);
        if (first) {
            set.dim = v.size();
            first = false;
        }
        set.push(std::move(v));
    }
    return set;
}

/// All point sets of size n over {0,1}^d, enumerated by an index.
PointSet nth_point_set(std::size_t n, std::size_t d, std::uint64_t idx) {
    PointSet set;
    set.dim = d;
    for (std::size_t p = 0; p < n; ++p) {
        BitVec v(d);
        for (std::size_t b = 0; b < d; ++b)
            if ((idx >> (p * d + b)) & 1) v.set(b);
        set.points.push_back(std::move(v));
    }
    return set;
}

} // namespace

TEST_CASE("OV to BCP substitution tables") {
    // d = 1, single points: the Claim-T values
    Instance inst = ov_to_bcp(points({"1"}), points({"0"}));
    CHECK(inst.a.points[0].to_string() == "00110");
    CHECK(inst.b.points[0].to_string() == "10100");
    CHECK(hamming(inst.a.points[0], inst.b.points[0]) == 2);
    CHECK(inst.alpha == 2);

    inst = ov_to_bcp(points({"1"}), points({"1"}));
    CHECK(inst.b.points[0].to_string() == "01001");
    CHECK(hamming(inst.a.points[0], inst.b.points[0]) == 4);

    inst = ov_to_bcp(points({"10"}), points({"01"}));
    CHECK(inst.a.dim == 10);
    CHECK(solve_bcp(inst.a, inst.b).value == 4); // 2d with d=2
}

TEST_CASE("OV to BCP is exact on every tiny instance") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t n = 1; n <= 2; ++n) {
            const std::uint64_t sets = std::uint64_t(1) << (n * d);
            for (std::uint64_t ia = 0; ia < sets; ++ia) {
                for (std::uint64_t ib = 0; ib < sets; ++ib) {
                    const PointSet a = nth_point_set(n, d, ia);
                    const PointSet b = nth_point_set(n, d, ib);
                    const bool has_orth = solve_ov(a, b).has_value();
                    const Instance bcp = ov_to_bcp(a, b);
                    const auto w = solve_bcp(bcp.a, bcp.b);
                    if (has_orth) {
                        REQUIRE(w.value == 2 * d);
                    } else {
                        REQUIRE(w.value >= 2 * d + 2);
                    }
                }
            }
        }
    }
}

TEST_CASE("OV to BCP on random instances") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        auto [a, b] = random_bichromatic(40, 12, rng);
        const bool has_orth = solve_ov(a, b).has_value();
        const Instance bcp = ov_to_bcp(a, b);
        const auto w = solve_bcp(bcp.a, bcp.b);
        CHECK((has_orth ? w.value == 24 : w.value >= 26));
    }
}

TEST_CASE("BCP to CP stream accounting") {
    const BipartiteGadget g = build_cd_gadget(5, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(1);
    auto [a, b] = random_bichromatic(20, 10, rng);
    SubInstanceStream stream = bcp_to_cp_stream(a, b, 3, g, cover);
    CHECK(stream.total() == 16); // (20/5)^2 * 1
    CHECK(stream.dim_out() == 10 + 11 * 25);
    CHECK(stream.alpha_out() == 3 + 11 * 8);
    std::size_t count = 0;
    Instance sub;
    while (stream.next(sub)) {
        ++count;
        CHECK(sub.kind == InstanceKind::CP);
        CHECK(sub.a.size() == 10);
        CHECK(sub.a.dim == stream.dim_out());
        CHECK(sub.alpha == stream.alpha_out());
    }
    CHECK(count == 16);
}

TEST_CASE("BCP to CP: YES pair on a covered edge hits alpha' exactly") {
    const BipartiteGadget g = build_cd_gadget(5, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(5);
    const std::int64_t alpha = 3;
    const std::size_t d = 16;
    auto [a, b] = bcp_no_promise(10, d, alpha, rng); // all cross > alpha
    const auto [pi, pj] = plant_cross_pair_at_distance(a, b, alpha, rng);

    const std::size_t nprime = g.n;
    const std::size_t bi = pi / nprime, bj = pj / nprime;
    const std::size_t u = pi % nprime, v = pj % nprime;
    // find a permutation that covers slot (u, v); the gadget is complete, so t=0 works
    std::size_t t_cover = cover.k();
    for (std::size_t t = 0; t < cover.k(); ++t) {
        const auto rows = permuted_edges(g.adjacency, cover.perms[t]);
        if (rows[u].get(v)) { t_cover = t; break; }
    }
    REQUIRE(t_cover < cover.k());

    SubInstanceStream stream = bcp_to_cp_stream(a, b, alpha, g, cover);
    Instance sub;
    bool found = false;
    while (stream.next(sub)) {
        if (stream.cur_block_i() == bi && stream.cur_block_j() == bj && stream.cur_perm() == t_cover) {
            found = true;
            break;
        }
    }
    REQUIRE(found);
    CHECK(solve_cp(sub.a).value == static_cast<std::uint64_t>(stream.alpha_out()));
}

TEST_CASE("BCP to CP: NO instances stay above alpha' in every sub-instance") {
    const BipartiteGadget g = build_cd_gadget(5, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(6);
    const std::int64_t alpha = 3;
    auto [a, b] = bcp_no_promise(10, 16, alpha, rng);
    SubInstanceStream stream = bcp_to_cp_stream(a, b, alpha, g, cover);
    Instance sub;
    while (stream.next(sub))
        REQUIRE(solve_cp(sub.a).value > static_cast<std::uint64_t>(stream.alpha_out()));
}

TEST_CASE("stream shape errors") {
    const BipartiteGadget g = build_cd_gadget(5, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(2);
    auto [a, b] = random_bichromatic(12, 8, rng); // 12 not divisible by 5
    CHECK_THROWS_AS(bcp_to_cp_stream(a, b, 3, g, cover), ShapeMismatchError);
    auto [c, e] = random_bichromatic(10, 8, rng);
    CHECK_THROWS_AS(bcp_to_cp_stream(c, e, 9, g, cover), ShapeMismatchError); // alpha > d
    BipartiteGadget bad = g;
    bad.adjacency[0].set(0, !bad.adjacency[0].get(0));
    CHECK_THROWS_AS(bcp_to_cp_stream(c, e, 3, bad, cover), GadgetUnverifiedError);
}

TEST_CASE("driver equals the brute-force BCP decision, including remainders") {
    const BipartiteGadget g = build_cd_gadget(5, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(99);
    int yes_seen = 0, no_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 48 + static_cast<std::size_t>(trial % 9); // includes non-multiples of 5
        auto [a, b] = random_bichromatic(n, 16, rng);
        const std::int64_t alpha = 1 + trial % 8;
        const bool expect = static_cast<std::int64_t>(solve_bcp(a, b).value) <= alpha;
        const DriveResult got = run_bcp_via_cp(a, b, alpha, g, cover);
        REQUIRE(got.yes == expect);
        (expect ? yes_seen : no_seen) += 1;
        if (n % 5 == 0) CHECK(got.trace.sub_instances == (n / 5) * (n / 5) * cover.k());
    }
    CHECK(yes_seen > 0);
    CHECK(no_seen > 0);
}

TEST_CASE("driver with an instance smaller than the gadget brute-forces everything") {
    const BipartiteGadget g = build_cd_gadget(5, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(123);
    auto [a, b] = random_bichromatic(3, 16, rng);
    const std::int64_t alpha = 4;
    const bool expect = static_cast<std::int64_t>(solve_bcp(a, b).value) <= alpha;
    const DriveResult got = run_bcp_via_cp(a, b, alpha, g, cover);
    CHECK(got.yes == expect);
    CHECK(got.trace.sub_instances == 0);
}

TEST_CASE("BMIP to MIP: planted pair on a covered edge reaches beta*alpha + 3d*beta") {
    const BipartiteGadget g = build_ip_gadget(7, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(11);
    const std::size_t d = 10;
    const std::int64_t alpha = 4;
    auto [a, b] = bmip_no_promise(7, d, alpha + 1, rng); // all cross IP <= alpha
    const auto [pi, pj] = plant_cross_pair_at_ip(a, b, alpha, rng);

    SubInstanceStream stream = bmip_to_mip_stream(a, b, alpha, g, cover);
    CHECK(stream.alpha_out() == static_cast<std::int64_t>(g.beta) * alpha + 3 * d * g.beta);
    CHECK(stream.dim_out() == g.beta * d + 3 * d * g.dim);

    const std::size_t u = pi % g.n, v = pj % g.n;
    bool reached = false;
    Instance sub;
    while (stream.next(sub)) {
        const auto rows = permuted_edges(g.adjacency, cover.perms[stream.cur_perm()]);
        const auto value = solve_mip(sub.a).value;
        REQUIRE(value <= static_cast<std::uint64_t>(stream.alpha_out()));
        if (rows[u].get(v)) reached |= value == static_cast<std::uint64_t>(stream.alpha_out());
    }
    CHECK(reached);
}

TEST_CASE("BMIP to MIP: same-side inner products stay below (2/3) alpha'") {
    const BipartiteGadget g = build_ip_gadget(7, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(17);
    auto [a, b] = random_bichromatic(14, 9, rng);
    SubInstanceStream stream = bmip_to_mip_stream(a, b, 5, g, cover);
    Instance sub;
    while (stream.next(sub)) {
        const std::size_t nprime = g.n;
        for (std::size_t side = 0; side < 2; ++side) {
            const std::size_t off = side * nprime;
            for (std::size_t i = 0; i < nprime; ++i)
                for (std::size_t j = i + 1; j < nprime; ++j) {
                    const auto ip = inner_product(sub.a.points[off + i], sub.a.points[off + j]);
                    REQUIRE(3 * ip < 2 * static_cast<std::uint64_t>(stream.alpha_out()));
                }
        }
    }
}

TEST_CASE("BMIP to MIP: additive NO promise pushes sub-instances below alpha' - beta*gamma") {
    const BipartiteGadget g = build_ip_gadget(7, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(23);
    const std::size_t d = 12;
    const std::int64_t alpha = 6, gamma = 3;
    auto [a, b] = bmip_no_promise(7, d, alpha - gamma, rng); // all cross IP < alpha - gamma
    SubInstanceStream stream = bmip_to_mip_stream(a, b, alpha, g, cover);
    Instance sub;
    while (stream.next(sub)) {
        const auto value = solve_mip(sub.a).value;
        REQUIRE(static_cast<std::int64_t>(value) <
                stream.alpha_out() - static_cast<std::int64_t>(g.beta) * gamma);
    }
}

TEST_CASE("tensor amplification") {
    const PointSet p = points({"110", "101"});
    Instance out = tensor_amplify(p, 1, 2);
    CHECK(out.a.dim == 9);
    CHECK(solve_mip(out.a).value == 1); // <x,y> = 1, squared
    CHECK(out.alpha == 1);

    out = tensor_amplify(p, 2, 1);
    CHECK(out.a == p);
    CHECK(out.alpha == 2);

    const PointSet two = points({"11", "11"});
    out = tensor_amplify(two, 2, 3);
    CHECK(out.a.dim == 8);
    CHECK(solve_mip(out.a).value == 8);
    CHECK(out.alpha == 8);

    CHECK_THROWS_AS(tensor_amplify(p, 1, 0), BadParametersError);
    CHECK_THROWS_AS(tensor_amplify(points({"1111111111"}), 1, 20), BudgetExceededError);
}

TEST_CASE("tensor identity on random pairs") {
    std::mt19937_64 rng(55);
    for (unsigned t = 1; t <= 3; ++t) {
        for (int trial = 0; trial < 300; ++trial) {
            PointSet p = random_points(2, 10, rng);
            const std::uint64_t ip = inner_product(p.points[0], p.points[1]);
            const Instance out = tensor_amplify(p, 1, t);
            std::uint64_t expect = 1;
            for (unsigned i = 0; i < t; ++i) expect *= ip;
            REQUIRE(inner_product(out.a.points[0], out.a.points[1]) == expect);
        }
    }
}

TEST_CASE("repetition window") {
    // alpha = beta: window [1/9, 4/21], smallest denominator hit at r2 = 6
    const auto [r1, r2] = pick_repetitions(3, 3, Rational(1, 2), Rational(1, 4), Rational(1, 20));
    CHECK(r1 == 1);
    CHECK(r2 == 6);
    // the boundary 1/9 itself is inside the closed window
    CHECK(Rational(1, 9) >= Rational(1, 20) / (Rational(1, 2) - Rational(1, 20)));

    CHECK_THROWS_AS(pick_repetitions(3, 3, Rational(1, 2), Rational(1, 4), Rational(1, 2)),
                    EmptyWindowError); // theta >= kappa
    CHECK_THROWS_AS(pick_repetitions(3, 3, Rational(1, 2), Rational(0), Rational(1, 20)),
                    EmptyWindowError); // mu = 0
    CHECK_THROWS_AS(pick_repetitions(3, 3, Rational(1, 2), Rational(1, 4), Rational(0)),
                    BadParametersError); // theta must be positive
}

TEST_CASE("gap-CP stream: soundness and completeness at q=11 K1=1 K2=4") {
    const BipartiteGadget g = build_gap_cd_gadget(11, 1, 4);
    const PermutationCover cover = cover_biclique(g.adjacency);
    const Rational kappa(1, 2), theta(1, 20);
    const std::int64_t alpha = 4;
    const std::size_t d = 32;

    std::mt19937_64 rng(31);
    // NO promise: all cross distances > (1+kappa)*alpha = 6
    auto [a, b] = bcp_no_promise(22, d, 6, rng);
    SubInstanceStream stream = bcp_to_gapcp_stream(a, b, alpha, g, cover, kappa, theta);
    CHECK(stream.repetitions() == std::make_pair(std::uint64_t(1), std::uint64_t(2)));
    CHECK(stream.alpha_out() == 36);
    Instance sub;
    while (stream.next(sub)) {
        const auto value = solve_cp(sub.a).value;
        // min distance > (1+theta) * alpha' exactly: 20*value > 21*36
        REQUIRE(static_cast<__int128>(value) * theta.den() >
                static_cast<__int128>(theta.den() + theta.num()) * stream.alpha_out());
    }

    // planted YES reaches alpha' exactly on a covered edge
    const auto [pi, pj] = plant_cross_pair_at_distance(a, b, alpha, rng);
    const std::size_t u = pi % g.n, v = pj % g.n, bi = pi / g.n, bj = pj / g.n;
    SubInstanceStream stream2 = bcp_to_gapcp_stream(a, b, alpha, g, cover, kappa, theta);
    bool reached = false;
    while (stream2.next(sub)) {
        if (stream2.cur_block_i() != bi || stream2.cur_block_j() != bj) continue;
        const auto rows = permuted_edges(g.adjacency, cover.perms[stream2.cur_perm()]);
        if (!rows[u].get(v)) continue;
        CHECK(solve_cp(sub.a).value == static_cast<std::uint64_t>(stream2.alpha_out()));
        reached = true;
    }
    CHECK(reached);
}

TEST_CASE("gap-CP stream rejects a mu = 0 gadget") {
    const BipartiteGadget g = build_gap_cd_gadget(7, 1, 2); // mu = 0
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::mt19937_64 rng(3);
    auto [a, b] = random_bichromatic(7, 16, rng);
    CHECK_THROWS_AS(bcp_to_gapcp_stream(a, b, 4, g, cover, Rational(1, 2), Rational(1, 20)),
                    EmptyWindowError);
}

TEST_CASE("edit reduction keeps identical points at distance zero") {
    const auto code = gen_substitution_code(16, 9);
    PointSet p = points({"1010101010101010", "1010101010101010"});
    const EditReduction red = hamming_cp_to_edit_cp(p, 1, code, 120, 4);
    CHECK(solve_cp(red.instance.a, Metric::Edit).value == 0);
    CHECK(red.lambda_hat > Rational(0));
}

TEST_CASE("edit reduction preserves a planted closest pair") {
    const auto code = gen_substitution_code(64, 77);
    std::mt19937_64 rng(8);
    // points pairwise far apart, then a planted pair at Hamming distance 1
    PointSet p;
    p.dim = 64;
    while (p.size() < 6) {
        PointSet cand = random_points(1, 64, rng);
        bool ok = true;
        for (const auto& q : p.points)
            if (hamming(q, cand.points[0]) < 10) { ok = false; break; }
        if (ok) p.push(cand.points[0]);
    }
    BitVec close = p.points[0];
    close.set(0, !close.get(0));
    p.push(close); // index 6, paired with index 0 at distance 1

    const EditReduction red = hamming_cp_to_edit_cp(p, 1, code, 150, 5);
    const auto w = solve_cp(red.instance.a, Metric::Edit);
    CHECK(w.i == 0);
    CHECK(w.j == 6);
    CHECK(red.instance.alpha == (red.slope * Rational(1)).round());
}

TEST_CASE("mip NO threshold uses the integer log-log surrogate") {
    // n' = 49: log2(49) -> 5, log2(5) -> 2, threshold = alpha' * 2/3
    CHECK(mip_no_threshold(90, 49) == Rational(60));
    // n' = 7: log2(7) -> 2, log2(2) -> 1, threshold = alpha' / 2
    CHECK(mip_no_threshold(90, 7) == Rational(45));
}
