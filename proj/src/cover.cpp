#include "cgadget/cover.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "cgadget/errors.hpp"

namespace cgadget {

namespace {

std::uint64_t edge_total(const std::vector<BitVec>& rows) {
    std::uint64_t c = 0;
    for (const auto& r : rows) c += r.popcount();
    return c;
}

void check_square(const std::vector<BitVec>& rows, std::size_t n) {
    for (const auto& r : rows)
        if (r.size() != n) throw ShapeMismatchError("adjacency rows must be n x n");
}

/// Exact nondecreasing check for the running conditional expectation.
void assert_monotone(Rational& prev, const Rational& next) {
    if (next < prev)
        throw Error("internal: conditional expectation decreased from " + prev.str() + " to " + next.str());
    prev = next;
}

} // namespace

std::vector<BitVec> permuted_edges(const std::vector<BitVec>& g_rows, const SidePreservingPermutation& perm) {
    const std::size_t n = g_rows.size();
    std::vector<BitVec> out(n, BitVec(n));
    for (std::size_t a = 0; a < n; ++a) {
        BitVec& target = out[perm.a_img[a]];
        g_rows[a].for_each_set([&](std::size_t b) { target.set(perm.b_img[b]); });
    }
    return out;
}

SidePreservingPermutation best_permutation(const std::vector<BitVec>& g_rows, const std::vector<BitVec>& h_rows) {
    const std::size_t n = g_rows.size();
    if (h_rows.size() != n) throw ShapeMismatchError("G and H must have the same vertex count");
    check_square(g_rows, n);
    check_square(h_rows, n);

    std::vector<std::int64_t> deg_g(n), deg_h(n);
    std::int64_t eg = 0, eh = 0;
    for (std::size_t i = 0; i < n; ++i) {
        deg_g[i] = static_cast<std::int64_t>(g_rows[i].popcount());
        deg_h[i] = static_cast<std::int64_t>(h_rows[i].popcount());
        eg += deg_g[i];
        eh += deg_h[i];
    }
    if (eg == 0) throw EmptyGraphError("source graph has no edges");

    SidePreservingPermutation perm;
    perm.a_img.assign(n, 0);
    perm.b_img.assign(n, 0);

    const std::int64_t nn = static_cast<std::int64_t>(n);
    Rational expectation(eg * eh, nn * nn); // E with nothing assigned
    Rational running = expectation;

    // Phase 1: fix A-side images. With no B image fixed, the expectation
    // depends only on degree sums:
    //   E = S/n + RG*RH/(u*n),
    // S summing deg_g(a)*deg_h(img(a)) over assigned a, RG/RH the unassigned
    // degree remainders, u the number of unassigned sources.
    {
        std::vector<bool> image_used(n, false);
        std::int64_t S = 0, RG = eg, RH = eh;
        for (std::size_t src = 0; src < n; ++src) {
            const std::int64_t u = static_cast<std::int64_t>(n - src);
            std::int64_t best_score = INT64_MIN;
            std::size_t best_img = 0;
            for (std::size_t img = 0; img < n; ++img) {
                if (image_used[img]) continue;
                const std::int64_t s_new = S + deg_g[src] * deg_h[img];
                std::int64_t score;
                if (u > 1)
                    score = s_new * (u - 1) + (RG - deg_g[src]) * (RH - deg_h[img]);
                else
                    score = s_new;
                if (score > best_score) {
                    best_score = score;
                    best_img = img;
                }
            }
            perm.a_img[src] = static_cast<std::uint32_t>(best_img);
            image_used[best_img] = true;
            S += deg_g[src] * deg_h[best_img];
            RG -= deg_g[src];
            RH -= deg_h[best_img];
            assert_monotone(running, u > 1 ? Rational(best_score, nn * (u - 1)) : Rational(best_score, nn));
        }
    }

    // Phase 2: fix B-side images. Every A source is assigned, so each G edge
    // (a,b) contributes either an exact hit H[img(a)][img(b)] or, for
    // unassigned b, cnt[a]/u where cnt[a] counts surviving candidate images.
    {
        std::vector<BitVec> hm(n); // hm[a] = H row of a's image
        for (std::size_t a = 0; a < n; ++a) hm[a] = h_rows[perm.a_img[a]];
        std::vector<BitVec> gt(n, BitVec(n)); // transposed G
        for (std::size_t a = 0; a < n; ++a)
            g_rows[a].for_each_set([&](std::size_t b) { gt[b].set(a); });

        BitVec unassigned_images(n), unassigned_sources(n);
        for (std::size_t i = 0; i < n; ++i) {
            unassigned_images.set(i);
            unassigned_sources.set(i);
        }
        std::vector<std::int64_t> cnt(n);
        std::int64_t T = 0;
        for (std::size_t a = 0; a < n; ++a) {
            cnt[a] = static_cast<std::int64_t>(hm[a].popcount());
            T += deg_g[a] * cnt[a];
        }
        std::int64_t fixed_cov = 0;

        std::vector<std::int64_t> d_of(n), colcnt(n);
        for (std::size_t src = 0; src < n; ++src) {
            const std::int64_t u = static_cast<std::int64_t>(n - src);
            std::fill(d_of.begin(), d_of.end(), 0);
            std::fill(colcnt.begin(), colcnt.end(), 0);
            std::int64_t colw = 0;
            gt[src].for_each_set([&](std::size_t a) {
                colw += cnt[a];
                hm[a].for_each_set([&](std::size_t y) { ++d_of[y]; });
            });
            for (std::size_t a = 0; a < n; ++a) {
                const std::int64_t m = static_cast<std::int64_t>(and_popcount(g_rows[a], unassigned_sources));
                if (m == 0) continue;
                hm[a].for_each_set([&](std::size_t y) { colcnt[y] += m; });
            }

            std::int64_t best_score = INT64_MIN;
            std::size_t best_img = n;
            unassigned_images.for_each_set([&](std::size_t y) {
                std::int64_t score;
                if (u > 1)
                    score = (fixed_cov + d_of[y]) * (u - 1) + T - colw - colcnt[y] + d_of[y];
                else
                    score = fixed_cov + d_of[y];
                if (best_img == n || score > best_score) {
                    best_score = score;
                    best_img = y;
                }
            });

            perm.b_img[src] = static_cast<std::uint32_t>(best_img);
            fixed_cov += d_of[best_img];
            T += d_of[best_img] - colw - colcnt[best_img];
            unassigned_images.set(best_img, false);
            unassigned_sources.set(src, false);
            for (std::size_t a = 0; a < n; ++a)
                if (hm[a].get(best_img)) --cnt[a];
            assert_monotone(running, u > 1 ? Rational(best_score, u - 1) : Rational(best_score));
        }

        // The fully fixed expectation is the realized intersection; the
        // starting expectation is the |E_G||E_H|/n^2 guarantee.
        if (Rational(fixed_cov) < expectation)
            throw Error("internal: permutation misses the derandomized bound");
    }
    return perm;
}

PermutationCover cover_biclique(const std::vector<BitVec>& g_rows) {
    const std::size_t n = g_rows.size();
    check_square(g_rows, n);
    const std::uint64_t eg = edge_total(g_rows);
    if (eg == 0) throw EmptyGraphError("source graph has no edges");

    PermutationCover cover;
    cover.n = n;

    std::vector<BitVec> uncovered(n, BitVec(n));
    for (auto& row : uncovered)
        for (std::size_t j = 0; j < n; ++j) row.set(j);

    std::uint64_t remaining = static_cast<std::uint64_t>(n) * n;
    while (remaining > 0) {
        const SidePreservingPermutation perm = best_permutation(g_rows, uncovered);
        const std::vector<BitVec> hit = permuted_edges(g_rows, perm);
        std::uint64_t covered = 0;
        for (std::size_t i = 0; i < n; ++i) covered += and_popcount(hit[i], uncovered[i]);
        // per-round guarantee: covered/remaining >= |E_G|/n^2
        if (static_cast<__int128>(covered) * n * n < static_cast<__int128>(eg) * remaining)
            throw Error("internal: greedy round below the covering guarantee");
        for (std::size_t i = 0; i < n; ++i) uncovered[i].and_not_assign(hit[i]);
        remaining -= covered;
        cover.perms.push_back(perm);
    }
    return cover;
}

CoverReport verify_cover(const PermutationCover& cover, const std::vector<BitVec>& g_rows) {
    const std::size_t n = cover.n;
    if (g_rows.size() != n) throw ShapeMismatchError("cover and graph disagree on n");
    check_square(g_rows, n);

    std::vector<BitVec> covered(n, BitVec(n));
    for (const auto& perm : cover.perms) {
        if (perm.a_img.size() != n || perm.b_img.size() != n)
            throw ShapeMismatchError("permutation size mismatch");
        const std::vector<BitVec> hit = permuted_edges(g_rows, perm);
        for (std::size_t i = 0; i < n; ++i) covered[i].or_assign(hit[i]);
    }

    CoverReport report;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (covered[i].get(j)) continue;
            ++report.uncovered_total;
            if (report.uncovered.size() < 100)
                report.uncovered.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
    }
    const double eg = static_cast<double>(edge_total(g_rows));
    if (eg > 0) {
        report.k_bound = 2.0 * n * n * std::log(static_cast<double>(n)) / eg + 1.0;
        report.slack = report.k_bound - static_cast<double>(cover.k());
        report.k_ok = static_cast<double>(cover.k()) <= report.k_bound;
    } else {
        report.k_ok = false;
    }
    return report;
}

} // namespace cgadget
