#include "cgadget/gadget.hpp"

#include <algorithm>
#include <cmath>

#include "cgadget/parallel.hpp"

namespace cgadget {

BitVec simplex_embed(std::span<const std::uint32_t> symbols, std::uint64_t q) {
    BitVec out(symbols.size() * q);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] >= q) throw BadParametersError("symbol out of range for simplex embedding");
        out.set(i * q + symbols[i]);
    }
    return out;
}

std::string gadget_kind_name(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::ContactDim: return "cd";
        case GadgetKind::GapContactDim: return "gapcd";
        case GadgetKind::GapInnerProduct: return "ip";
    }
    throw BadParametersError("unknown gadget kind");
}

GadgetKind parse_gadget_kind(const std::string& name) {
    if (name == "cd") return GadgetKind::ContactDim;
    if (name == "gapcd") return GadgetKind::GapContactDim;
    if (name == "ip") return GadgetKind::GapInnerProduct;
    throw ParseError("unknown gadget kind: " + name);
}

std::uint64_t BipartiteGadget::edge_count() const {
    std::uint64_t c = 0;
    for (const auto& row : adjacency) c += row.popcount();
    return c;
}

Rational BipartiteGadget::density_floor() const {
    const std::uint64_t q = provenance.q;
    const std::size_t k2 = provenance.k2;
    if (q == 0 || k2 < 2) return Rational(0);
    long long pow_term = 1;
    for (std::size_t i = 0; i + 1 < k2; ++i) pow_term *= static_cast<long long>(k2 - 1);
    const long long nn = static_cast<long long>(n) * static_cast<long long>(n);
    return Rational(nn, 1) * Rational(static_cast<long long>(q - 1), static_cast<long long>(q) * pow_term);
}

namespace {

BipartiteGadget build_from_rs_pair(std::uint64_t q, std::size_t k1, std::size_t k2, GadgetKind kind,
                                   std::uint64_t budget) {
    const PrimeField field(q);
    const LinearCode inner = LinearCode::reed_solomon(field, q, k1);
    const LinearCode outer = LinearCode::reed_solomon(field, q, k2);
    const CenterCertificate cert = find_center(inner, outer, budget);
    const std::size_t d2 = outer.distance();

    BipartiteGadget g;
    g.kind = kind;
    g.n = static_cast<std::size_t>(inner.codeword_count());
    g.dim = static_cast<std::size_t>(q * q);
    g.provenance = GadgetProvenance{q, k1, k2, cert.center};

    g.side_a.reserve(g.n);
    g.side_b.reserve(g.n);
    CodewordEnumerator e(inner, budget);
    std::vector<std::uint32_t> shifted(q);
    while (e.next()) {
        const auto& c = e.codeword();
        g.side_a.push_back(simplex_embed(c, q));
        for (std::size_t i = 0; i < shifted.size(); ++i)
            shifted[i] = static_cast<std::uint32_t>(field.add(c[i], cert.center[i]));
        g.side_b.push_back(simplex_embed(shifted, q));
    }

    // Edges are pairs at code distance exactly dist(C2); after the simplex
    // embedding that is Hamming distance exactly 2*dist(C2).
    const std::size_t edge_dist = 2 * d2;
    g.adjacency.assign(g.n, BitVec(g.n));
    std::uint64_t edges = 0;
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = 0; j < g.n; ++j) {
            if (hamming(g.side_a[i], g.side_b[j]) == edge_dist) {
                g.adjacency[i].set(j);
                ++edges;
            }
        }
    }
    if (edges != g.n * cert.ball_count)
        throw Error("internal: edge count disagrees with the center's ball count");

    switch (kind) {
        case GadgetKind::ContactDim:
        case GadgetKind::GapContactDim:
            g.beta = edge_dist;
            break;
        case GadgetKind::GapInnerProduct:
            g.beta = static_cast<std::uint64_t>(k2 - 1); // q - dist(C2)
            break;
    }
    if (kind == GadgetKind::GapContactDim)
        g.mu = Rational(static_cast<long long>(k2 - k1) - 1, static_cast<long long>(q - k2 + 1));
    return g;
}

} // namespace

BipartiteGadget build_cd_gadget(std::uint64_t q, std::size_t k1, std::uint64_t budget) {
    return build_from_rs_pair(q, k1, k1 + 1, GadgetKind::ContactDim, budget);
}

BipartiteGadget build_ip_gadget(std::uint64_t q, std::size_t k1, std::uint64_t budget) {
    return build_from_rs_pair(q, k1, 3 * k1 + 1, GadgetKind::GapInnerProduct, budget);
}

BipartiteGadget build_gap_cd_gadget(std::uint64_t q, std::size_t k1, std::size_t k2, std::uint64_t budget) {
    if (k2 <= k1)
        throw GapNonpositiveError("gap gadget requires K2 > K1");
    return build_from_rs_pair(q, k1, k2, GadgetKind::GapContactDim, budget);
}

namespace {

constexpr std::size_t kMaxStoredViolations = 100;

struct ChunkStats {
    std::vector<std::string> violations;
    std::size_t violation_total = 0;
    std::uint64_t edges = 0;
    std::uint64_t edge_min = UINT64_MAX, edge_max = 0;
    std::uint64_t cross_min = UINT64_MAX, cross_max = 0;
    std::uint64_t side_min = UINT64_MAX, side_max = 0;
    bool has_cross = false, has_side = false;

    void violation(std::string msg) {
        ++violation_total;
        if (violations.size() < kMaxStoredViolations) violations.push_back(std::move(msg));
    }
};

} // namespace

GadgetReport verify_gadget(const BipartiteGadget& g, std::uint64_t budget, unsigned threads) {
    if (g.side_a.size() != g.n || g.side_b.size() != g.n || g.adjacency.size() != g.n)
        throw ShapeMismatchError("gadget sides/adjacency have inconsistent sizes");
    for (const auto& p : g.side_a)
        if (p.size() != g.dim) throw ShapeMismatchError("side-A point dimension mismatch");
    for (const auto& p : g.side_b)
        if (p.size() != g.dim) throw ShapeMismatchError("side-B point dimension mismatch");
    const std::uint64_t work = static_cast<std::uint64_t>(g.n) * g.n * g.dim;
    if (work > budget)
        throw BudgetExceededError("gadget verification needs " + std::to_string(work) +
                                  " bit ops, budget " + std::to_string(budget));

    const bool ip_kind = g.kind == GadgetKind::GapInnerProduct;
    const bool gap_kind = g.kind == GadgetKind::GapContactDim;

    const unsigned nthreads = threads == 0 ? 1 : threads;
    std::vector<ChunkStats> stats(nthreads <= 1 || g.n < 2048 ? 1 : nthreads);

    parallel_chunks(g.n, nthreads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        ChunkStats& s = stats[chunk];
        for (std::size_t i = begin; i < end; ++i) {
            // cross pairs (A_i, B_j)
            for (std::size_t j = 0; j < g.n; ++j) {
                const std::uint64_t v = ip_kind ? inner_product(g.side_a[i], g.side_b[j])
                                                : hamming(g.side_a[i], g.side_b[j]);
                if (g.adjacency[i].get(j)) {
                    ++s.edges;
                    s.edge_min = std::min(s.edge_min, v);
                    s.edge_max = std::max(s.edge_max, v);
                    if (v != g.beta)
                        s.violation("edge (" + std::to_string(i) + "," + std::to_string(j) + ") at " +
                                    std::to_string(v) + " != beta " + std::to_string(g.beta));
                } else {
                    s.has_cross = true;
                    s.cross_min = std::min(s.cross_min, v);
                    s.cross_max = std::max(s.cross_max, v);
                    const bool bad = ip_kind ? v >= g.beta : v <= g.beta;
                    if (bad)
                        s.violation("non-edge (" + std::to_string(i) + "," + std::to_string(j) + ") at " +
                                    std::to_string(v) + " violates beta " + std::to_string(g.beta));
                }
            }
            // same-side pairs, i < j, both sides
            for (std::size_t j = i + 1; j < g.n; ++j) {
                for (int side = 0; side < 2; ++side) {
                    const auto& pts = side == 0 ? g.side_a : g.side_b;
                    const std::uint64_t v = ip_kind ? inner_product(pts[i], pts[j]) : hamming(pts[i], pts[j]);
                    s.has_side = true;
                    s.side_min = std::min(s.side_min, v);
                    s.side_max = std::max(s.side_max, v);
                    bool bad;
                    if (ip_kind) {
                        bad = 3 * v >= g.beta; // require v < beta/3
                    } else if (gap_kind) {
                        // require v > (1+mu)*beta, exactly: v*den > (num+den)*beta
                        const auto num = static_cast<__int128>(g.mu.num());
                        const auto den = static_cast<__int128>(g.mu.den());
                        bad = static_cast<__int128>(v) * den <= (num + den) * static_cast<__int128>(g.beta);
                    } else {
                        bad = v <= g.beta;
                    }
                    if (bad)
                        s.violation(std::string(side == 0 ? "A" : "B") + "-side pair (" + std::to_string(i) +
                                    "," + std::to_string(j) + ") at " + std::to_string(v) +
                                    " violates the same-side bound");
                }
            }
        }
    });

    GadgetReport report;
    std::uint64_t edge_min = UINT64_MAX, edge_max = 0, cross_min = UINT64_MAX, cross_max = 0;
    std::uint64_t side_min = UINT64_MAX, side_max = 0;
    bool has_edge = false, has_cross = false, has_side = false;
    for (const auto& s : stats) {
        report.violation_total += s.violation_total;
        for (const auto& v : s.violations) {
            if (report.violations.size() < kMaxStoredViolations) report.violations.push_back(v);
        }
        report.edge_count += s.edges;
        if (s.edges) { has_edge = true; edge_min = std::min(edge_min, s.edge_min); edge_max = std::max(edge_max, s.edge_max); }
        if (s.has_cross) { has_cross = true; cross_min = std::min(cross_min, s.cross_min); cross_max = std::max(cross_max, s.cross_max); }
        if (s.has_side) { has_side = true; side_min = std::min(side_min, s.side_min); side_max = std::max(side_max, s.side_max); }
    }
    if (has_edge) { report.edge_min = edge_min; report.edge_max = edge_max; }
    if (has_cross) report.cross_nonedge_extreme = ip_kind ? cross_max : cross_min;
    if (has_side) report.same_side_extreme = ip_kind ? side_max : side_min;

    report.density_floor = g.density_floor();
    report.density_ok = Rational(static_cast<long long>(report.edge_count)) >= report.density_floor;
    return report;
}

LogDenseSequence log_dense_params(const Rational& delta, std::uint64_t max_n) {
    if (!(Rational(0) < delta && delta < Rational(1)))
        throw BadParametersError("delta must lie strictly between 0 and 1");

    // floor(q^delta) for delta = a/b: the largest k with k^b <= q^a.
    const auto a = static_cast<unsigned>(delta.num());
    const auto b = static_cast<unsigned>(delta.den());
    auto pow_le = [](std::uint64_t base, unsigned exp, __uint128_t bound) {
        __uint128_t r = 1;
        for (unsigned i = 0; i < exp; ++i) {
            r *= base;
            if (r > bound) return false;
        }
        return true;
    };

    LogDenseSequence seq;
    std::uint64_t q = 1;
    for (std::size_t index = 1;; ++index) {
        q = nth_prime(index);
        __uint128_t qa = 1;
        bool qa_huge = false;
        for (unsigned i = 0; i < a; ++i) {
            qa *= q;
            if (qa > (__uint128_t(1) << 100)) { qa_huge = true; break; }
        }
        std::size_t k1 = 1;
        if (!qa_huge) {
            while (pow_le(k1 + 1, b, qa)) ++k1;
        } else {
            k1 = static_cast<std::size_t>(std::pow(static_cast<long double>(q), delta.to_double()));
            if (k1 < 1) k1 = 1;
        }
        __uint128_t n = 1;
        bool overflow = false;
        for (std::size_t i = 0; i < k1; ++i) {
            n *= q;
            if (n > max_n) { overflow = true; break; }
        }
        if (overflow) break;
        seq.entries.push_back(LogDenseEntry{index, q, k1, static_cast<std::uint64_t>(n)});
    }

    for (std::size_t i = 0; i + 1 < seq.entries.size(); ++i) {
        const double ratio = std::log(static_cast<double>(seq.entries[i + 1].n)) /
                             std::log(static_cast<double>(seq.entries[i].n));
        seq.log_density_constant = std::max(seq.log_density_constant, ratio);
    }
    return seq;
}

} // namespace cgadget
