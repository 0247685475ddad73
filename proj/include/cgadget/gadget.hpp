#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgadget/bitvec.hpp"
#include "cgadget/center.hpp"
#include "cgadget/code.hpp"
#include "cgadget/rational.hpp"

namespace cgadget {

/// Default cap on n^2 * dim bit operations for exhaustive gadget checks.
inline constexpr std::uint64_t kDefaultVerificationBudget = std::uint64_t(1) << 36;

/// Replaces each symbol v_i in [0, q) by the v_i-th standard basis vector of
/// dimension q. Doubles Hamming distances and complements inner products:
/// ||psi(u) - psi(v)||_0 = 2 * dist(u, v), <psi(u), psi(v)> = N - dist(u, v).
BitVec simplex_embed(std::span<const std::uint32_t> symbols, std::uint64_t q);

enum class GadgetKind { ContactDim, GapContactDim, GapInnerProduct };

std::string gadget_kind_name(GadgetKind kind);
GadgetKind parse_gadget_kind(const std::string& name);

struct GadgetProvenance {
    std::uint64_t q = 0;
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::vector<std::uint32_t> center; // empty when loaded from a file
};

/// A bipartite graph on n+n vertices realized by {0,1}^dim points:
///   ContactDim       edges at Hamming distance exactly beta, everything else
///                    strictly farther;
///   GapContactDim    additionally same-side pairs beyond (1+mu)*beta;
///   GapInnerProduct  edges at inner product exactly beta, cross non-edges
///                    below beta, same-side pairs below beta/3.
struct BipartiteGadget {
    GadgetKind kind = GadgetKind::ContactDim;
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<BitVec> side_a;
    std::vector<BitVec> side_b;
    std::vector<BitVec> adjacency; // n rows, n columns
    std::uint64_t beta = 0;
    Rational mu;                   // 0 for ContactDim / GapInnerProduct
    GadgetProvenance provenance;

    std::uint64_t edge_count() const;

    /// n^2 * (q-1) / (q * (K2-1)^(K2-1)): the density guarantee inherited
    /// from the center's ball-count bound.
    Rational density_floor() const;
};

/// Realization of the nested Reed-Solomon pair (RS_q[q,K1], RS_q[q,K1+1]):
/// side A embeds C1, side B embeds s + C1, edges are the pairs at code
/// distance exactly q - K1. beta = 2(q - K1), dim = q^2, n = q^K1.
BipartiteGadget build_cd_gadget(std::uint64_t q, std::size_t k1,
                                std::uint64_t budget = kDefaultEnumerationBudget);

/// Inner-product variant with K2 = 3*K1 + 1: edges at inner product exactly
/// 3*K1, same-side pairs at most K1 - 1 < beta/3.
BipartiteGadget build_ip_gadget(std::uint64_t q, std::size_t k1,
                                std::uint64_t budget = kDefaultEnumerationBudget);

/// Gap variant over (RS_q[q,K1], RS_q[q,K2]) with
/// mu = (dist(C1)-1)/dist(C2) - 1 = (K2-K1-1)/(q-K2+1).
BipartiteGadget build_gap_cd_gadget(std::uint64_t q, std::size_t k1, std::size_t k2,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

struct GadgetReport {
    std::vector<std::string> violations; // first <= 100, canonical scan order
    std::size_t violation_total = 0;
    std::uint64_t edge_count = 0;
    std::optional<std::uint64_t> edge_min;            // distance (or IP) over edges
    std::optional<std::uint64_t> edge_max;
    std::optional<std::uint64_t> cross_nonedge_extreme; // min distance / max IP
    std::optional<std::uint64_t> same_side_extreme;     // min distance / max IP
    Rational density_floor;
    bool density_ok = true;

    bool ok() const { return violations.empty() && density_ok; }
};

/// Exhaustively checks every vertex pair against the gadget kind's
/// invariants. The scan may be split across threads; the report is identical
/// for any thread count.
GadgetReport verify_gadget(const BipartiteGadget& gadget,
                           std::uint64_t budget = kDefaultVerificationBudget,
                           unsigned threads = 1);

struct LogDenseEntry {
    std::size_t index = 0;   // position in the prime sequence, 1-based
    std::uint64_t q = 0;
    std::size_t k1 = 0;      // floor(q^delta)
    std::uint64_t n = 0;     // q^k1
};

struct LogDenseSequence {
    std::vector<LogDenseEntry> entries;
    double log_density_constant = 0.0; // max log n_{i+1} / log n_i over the prefix
};

/// All members n_i = q_i^{floor(q_i^delta)} with n_i <= max_n, where q_i runs
/// over the primes. K1 is computed exactly from the rational delta.
LogDenseSequence log_dense_params(const Rational& delta, std::uint64_t max_n);

} // namespace cgadget
