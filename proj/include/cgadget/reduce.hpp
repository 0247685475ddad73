#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cgadget/cover.hpp"
#include "cgadget/editembed.hpp"
#include "cgadget/gadget.hpp"
#include "cgadget/solver.hpp"

namespace cgadget {

inline constexpr std::uint64_t kDefaultTensorBudget = std::uint64_t(1) << 24;

/// Accounting for a grid reduction: (n/n')^2 * k sub-instances of dimension
/// dim_out at threshold alpha_out.
struct ReductionTrace {
    std::size_t n = 0;
    std::size_t n_prime = 0;
    std::size_t cover_k = 0;
    std::size_t sub_instances = 0;
    std::size_t dim_out = 0;
    std::int64_t alpha_out = 0;
    std::uint64_t millis = 0;
};

/// Coordinate-wise substitution by the fixed 5-bit tables; orthogonal pairs
/// land at Hamming distance exactly 2d, everything else at >= 2d+2. The
/// output carries alpha = 2d.
Instance ov_to_bcp(const PointSet& a, const PointSet& b);

/// Lazily emits the (n/n')^2 * k sub-instances of a grid reduction in
/// canonical (block_i, block_j, t) order. Each input point p paired with its
/// gadget realization tau becomes (1_rp ⊗ p) ∘ (1_rt ⊗ tau); the per-pipeline
/// repetition counts fix alpha_out = rp*alpha + rt*beta.
class SubInstanceStream {
public:
    /// Advances to the next sub-instance; false when the grid is exhausted.
    bool next(Instance& out);
    void reset();

    std::size_t total() const { return blocks_ * blocks_ * cover_.k(); }
    std::size_t blocks() const { return blocks_; }
    std::size_t n_prime() const { return gadget_.n; }
    std::size_t k() const { return cover_.k(); }
    std::int64_t alpha_out() const { return alpha_out_; }
    std::size_t dim_out() const { return dim_out_; }

    std::size_t cur_block_i() const { return i_; }
    std::size_t cur_block_j() const { return j_; }
    std::size_t cur_perm() const { return t_; }

    const std::pair<std::uint64_t, std::uint64_t>& repetitions() const { return reps_; }

private:
    friend SubInstanceStream bcp_to_cp_stream(const PointSet&, const PointSet&, std::int64_t,
                                              const BipartiteGadget&, const PermutationCover&);
    friend SubInstanceStream bmip_to_mip_stream(const PointSet&, const PointSet&, std::int64_t,
                                                const BipartiteGadget&, const PermutationCover&);
    friend SubInstanceStream bcp_to_gapcp_stream(const PointSet&, const PointSet&, std::int64_t,
                                                 const BipartiteGadget&, const PermutationCover&,
                                                 const Rational&, const Rational&);

    SubInstanceStream(InstanceKind out_kind, PointSet a, PointSet b, std::int64_t alpha,
                      BipartiteGadget gadget, PermutationCover cover,
                      std::uint64_t rep_point, std::uint64_t rep_tau);

    InstanceKind out_kind_;
    PointSet a_, b_;
    std::int64_t alpha_ = 0;
    BipartiteGadget gadget_;
    PermutationCover cover_;
    std::vector<std::vector<std::uint32_t>> inv_a_, inv_b_; // per perm: image -> source
    std::pair<std::uint64_t, std::uint64_t> reps_;
    std::int64_t alpha_out_ = 0;
    std::size_t dim_out_ = 0;
    std::size_t blocks_ = 0;
    std::size_t i_ = 0, j_ = 0, t_ = 0;
    bool started_ = false;
};

/// Grid reduction from BCP to CP: rp = 1, rt = d+1, requires a verified
/// ContactDim gadget and n divisible by the gadget size.
SubInstanceStream bcp_to_cp_stream(const PointSet& a, const PointSet& b, std::int64_t alpha,
                                   const BipartiteGadget& gadget, const PermutationCover& cover);

/// Grid reduction from additive-gap BMIP to MIP: rp = beta, rt = 3d, requires
/// a verified GapInnerProduct gadget.
SubInstanceStream bmip_to_mip_stream(const PointSet& a, const PointSet& b, std::int64_t alpha,
                                     const BipartiteGadget& gadget, const PermutationCover& cover);

/// Grid reduction from (1+kappa)-BCP to (1+theta)-CP: (rp, rt) = (r1, r2)
/// from pick_repetitions over the gadget's gap mu.
SubInstanceStream bcp_to_gapcp_stream(const PointSet& a, const PointSet& b, std::int64_t alpha,
                                      const BipartiteGadget& gadget, const PermutationCover& cover,
                                      const Rational& kappa, const Rational& theta);

/// Positive integers with
///   theta/(kappa-theta) * beta/alpha <= r1/r2 <= (mu-theta)/(1+theta) * beta/alpha,
/// minimal r2 then minimal r1; exact rational window arithmetic throughout.
std::pair<std::uint64_t, std::uint64_t> pick_repetitions(std::int64_t alpha, std::uint64_t beta,
                                                         const Rational& kappa, const Rational& mu,
                                                         const Rational& theta,
                                                         std::uint64_t max_r2 = std::uint64_t(1) << 20);

/// Decides one emitted sub-instance; the default compares the brute-force
/// optimum against the sub-instance threshold.
using SubInstanceOracle = std::function<bool(const Instance&)>;

struct DriveResult {
    bool yes = false;
    ReductionTrace trace;
};

/// Runs the full grid through the oracle in canonical order, short-circuiting
/// on the first YES. When the gadget size does not divide n, the leftover
/// points are brute-forced against both whole sets at the input threshold.
DriveResult run_bcp_via_cp(const PointSet& a, const PointSet& b, std::int64_t alpha,
                           const BipartiteGadget& gadget, const PermutationCover& cover,
                           const SubInstanceOracle& oracle = {});
DriveResult run_bmip_via_mip(const PointSet& a, const PointSet& b, std::int64_t alpha,
                             const BipartiteGadget& gadget, const PermutationCover& cover,
                             const SubInstanceOracle& oracle = {});
DriveResult run_bcp_via_gapcp(const PointSet& a, const PointSet& b, std::int64_t alpha,
                              const BipartiteGadget& gadget, const PermutationCover& cover,
                              const Rational& kappa, const Rational& theta,
                              const SubInstanceOracle& oracle = {});

/// Replaces every point by its t-fold tensor power; all pairwise inner
/// products are raised to the t-th power exactly.
Instance tensor_amplify(const PointSet& p, std::int64_t alpha, unsigned t,
                        std::uint64_t budget = kDefaultTensorBudget);

struct EditReduction {
    Instance instance;     // EditCP over the embedded strings
    Rational lambda_hat;
    Rational max_residual;
    Rational slope;        // fitted edit distance per unit Hamming distance
};

/// Embeds a Hamming CP instance into the edit metric via the substitution
/// code; alpha_out = round(lambda_hat * log2(d) * alpha), which reduces to
/// round(slope * alpha) exactly.
EditReduction hamming_cp_to_edit_cp(const PointSet& p, std::int64_t alpha, const SubstitutionCode& code,
                                    std::size_t samples = 1000, std::uint64_t seed = 1);

/// NO threshold alpha' / (1 + 1/floor(log2 log2 n')) used when judging MIP
/// sub-instances; the inner logs are integer bit widths.
Rational mip_no_threshold(std::int64_t alpha_prime, std::size_t n_prime);

} // namespace cgadget
