#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cgadget/bitvec.hpp"
#include "cgadget/rational.hpp"

namespace cgadget {

/// A permutation of the 2n vertices of a balanced bipartite graph that fixes
/// each side setwise; stored as source -> image maps per side.
struct SidePreservingPermutation {
    std::vector<std::uint32_t> a_img;
    std::vector<std::uint32_t> b_img;
};

/// Permutations whose permuted copies of the source graph jointly cover
/// K_{n,n}.
struct PermutationCover {
    std::size_t n = 0;
    std::vector<SidePreservingPermutation> perms;

    std::size_t k() const { return perms.size(); }
};

/// Edge rows of the permuted graph: edge (a,b) of g maps to
/// (perm.a_img[a], perm.b_img[b]).
std::vector<BitVec> permuted_edges(const std::vector<BitVec>& g_rows, const SidePreservingPermutation& perm);

/// Finds a side-preserving permutation with
/// |E_H ∩ E_{G_pi}| >= |E_G| * |E_H| / n^2 by the method of conditional
/// expectations: images are fixed for A-side sources 0..n-1 then B-side
/// sources 0..n-1, each step maximizing the expected intersection under
/// uniform random completion, ties broken by smallest image index. All
/// expectation comparisons are exact.
SidePreservingPermutation best_permutation(const std::vector<BitVec>& g_rows, const std::vector<BitVec>& h_rows);

/// Greedy loop: while uncovered edges of K_{n,n} remain, append
/// best_permutation(G, uncovered). Each step is checked against the
/// per-round guarantee (covers at least an |E_G|/n^2 fraction of what
/// remains), which caps k at 2 n^2 ln(n)/|E_G| + 1.
PermutationCover cover_biclique(const std::vector<BitVec>& g_rows);

struct CoverReport {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> uncovered; // first <= 100
    std::size_t uncovered_total = 0;
    double k_bound = 0.0;
    double slack = 0.0;
    bool k_ok = true;

    bool ok() const { return uncovered_total == 0 && k_ok; }
};

/// Recomputes the union and the k bound for a cover of K_{n,n} by copies of
/// the graph with the given edge rows.
CoverReport verify_cover(const PermutationCover& cover, const std::vector<BitVec>& g_rows);

} // namespace cgadget
