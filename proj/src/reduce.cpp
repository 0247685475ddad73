#include "cgadget/reduce.hpp"

#include <bit>
#include <chrono>

#include "cgadget/editembed.hpp"

namespace cgadget {

namespace {

// Claim-T substitution tables, one 5-bit block per input coordinate.
constexpr const char* kTableA[2] = {"11000", "00110"};
constexpr const char* kTableB[2] = {"10100", "01001"};

std::uint64_t now_millis() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

} // namespace

Instance ov_to_bcp(const PointSet& a, const PointSet& b) {
    if (a.dim != b.dim) throw DimensionMismatchError("OV sets have different dimensions");
    const std::size_t d = a.dim;
    auto substitute = [&](const PointSet& src, const char* const table[2]) {
        PointSet out;
        out.dim = 5 * d;
        out.points.reserve(src.size());
        for (const auto& p : src.points) {
            BitVec v(5 * d);
            for (std::size_t i = 0; i < d; ++i) {
                const char* block = table[p.get(i) ? 1 : 0];
                for (std::size_t bpos = 0; bpos < 5; ++bpos)
                    if (block[bpos] == '1') v.set(5 * i + bpos);
            }
            out.points.push_back(std::move(v));
        }
        return out;
    };
    Instance out;
    out.kind = InstanceKind::BCP;
    out.a = substitute(a, kTableA);
    out.b = substitute(b, kTableB);
    out.alpha = static_cast<std::int64_t>(2 * d);
    return out;
}

SubInstanceStream::SubInstanceStream(InstanceKind out_kind, PointSet a, PointSet b, std::int64_t alpha,
                                     BipartiteGadget gadget, PermutationCover cover,
                                     std::uint64_t rep_point, std::uint64_t rep_tau)
    : out_kind_(out_kind), a_(std::move(a)), b_(std::move(b)), alpha_(alpha),
      gadget_(std::move(gadget)), cover_(std::move(cover)), reps_(rep_point, rep_tau) {
    if (a_.dim != b_.dim) throw DimensionMismatchError("input sets have different dimensions");
    if (a_.size() != b_.size()) throw ShapeMismatchError("input sets must have equal cardinality");
    const std::size_t nprime = gadget_.n;
    if (nprime == 0 || a_.size() % nprime != 0)
        throw ShapeMismatchError("gadget size must divide the instance size");
    if (cover_.n != nprime) throw ShapeMismatchError("cover and gadget disagree on n");
    blocks_ = a_.size() / nprime;
    alpha_out_ = static_cast<std::int64_t>(rep_point) * alpha_ +
                 static_cast<std::int64_t>(rep_tau) * static_cast<std::int64_t>(gadget_.beta);
    dim_out_ = static_cast<std::size_t>(rep_point) * a_.dim + static_cast<std::size_t>(rep_tau) * gadget_.dim;

    inv_a_.reserve(cover_.k());
    inv_b_.reserve(cover_.k());
    for (const auto& perm : cover_.perms) {
        if (perm.a_img.size() != nprime || perm.b_img.size() != nprime)
            throw ShapeMismatchError("cover permutation size mismatch");
        std::vector<std::uint32_t> ia(nprime), ib(nprime);
        for (std::size_t s = 0; s < nprime; ++s) {
            ia[perm.a_img[s]] = static_cast<std::uint32_t>(s);
            ib[perm.b_img[s]] = static_cast<std::uint32_t>(s);
        }
        inv_a_.push_back(std::move(ia));
        inv_b_.push_back(std::move(ib));
    }
}

void SubInstanceStream::reset() {
    i_ = j_ = t_ = 0;
    started_ = false;
}

bool SubInstanceStream::next(Instance& out) {
    if (blocks_ == 0 || cover_.k() == 0) return false;
    if (started_) {
        if (++t_ >= cover_.k()) {
            t_ = 0;
            if (++j_ >= blocks_) {
                j_ = 0;
                if (++i_ >= blocks_) {
                    i_ = blocks_; // exhausted
                    return false;
                }
            }
        }
    } else {
        started_ = true;
    }
    if (i_ >= blocks_) return false;

    const std::size_t nprime = gadget_.n;
    out = Instance{};
    out.kind = out_kind_;
    out.alpha = alpha_out_;
    out.a.dim = dim_out_;
    out.a.points.reserve(2 * nprime);
    const auto [rp, rt] = reps_;
    for (std::size_t u = 0; u < nprime; ++u) {
        const BitVec& p = a_.points[i_ * nprime + u];
        const BitVec& tau = gadget_.side_a[inv_a_[t_][u]];
        out.a.points.push_back(p.repeat(rp).concat(tau.repeat(rt)));
    }
    for (std::size_t v = 0; v < nprime; ++v) {
        const BitVec& p = b_.points[j_ * nprime + v];
        const BitVec& tau = gadget_.side_b[inv_b_[t_][v]];
        out.a.points.push_back(p.repeat(rp).concat(tau.repeat(rt)));
    }
    return true;
}

namespace {

void require_verified(const BipartiteGadget& gadget, GadgetKind kind) {
    if (gadget.kind != kind) throw ShapeMismatchError("gadget kind does not match the pipeline");
    const GadgetReport report = verify_gadget(gadget);
    if (!report.ok())
        throw GadgetUnverifiedError("gadget fails verification: " +
                                    (report.violations.empty() ? std::string("density floor missed")
                                                               : report.violations.front()));
}

void require_alpha_in_dim(std::int64_t alpha, std::size_t d) {
    if (alpha < 0 || static_cast<std::uint64_t>(alpha) > d)
        throw ShapeMismatchError("threshold must satisfy 0 <= alpha <= d");
}

} // namespace

SubInstanceStream bcp_to_cp_stream(const PointSet& a, const PointSet& b, std::int64_t alpha,
                                   const BipartiteGadget& gadget, const PermutationCover& cover) {
    require_verified(gadget, GadgetKind::ContactDim);
    require_alpha_in_dim(alpha, a.dim);
    return SubInstanceStream(InstanceKind::CP, a, b, alpha, gadget, cover, 1, a.dim + 1);
}

SubInstanceStream bmip_to_mip_stream(const PointSet& a, const PointSet& b, std::int64_t alpha,
                                     const BipartiteGadget& gadget, const PermutationCover& cover) {
    require_verified(gadget, GadgetKind::GapInnerProduct);
    require_alpha_in_dim(alpha, a.dim);
    return SubInstanceStream(InstanceKind::MIP, a, b, alpha, gadget, cover, gadget.beta, 3 * a.dim);
}

SubInstanceStream bcp_to_gapcp_stream(const PointSet& a, const PointSet& b, std::int64_t alpha,
                                      const BipartiteGadget& gadget, const PermutationCover& cover,
                                      const Rational& kappa, const Rational& theta) {
    require_verified(gadget, GadgetKind::GapContactDim);
    const auto [r1, r2] = pick_repetitions(alpha, gadget.beta, kappa, gadget.mu, theta);
    return SubInstanceStream(InstanceKind::CP, a, b, alpha, gadget, cover, r1, r2);
}

std::pair<std::uint64_t, std::uint64_t> pick_repetitions(std::int64_t alpha, std::uint64_t beta,
                                                         const Rational& kappa, const Rational& mu,
                                                         const Rational& theta, std::uint64_t max_r2) {
    if (alpha < 1 || beta < 1) throw BadParametersError("pick_repetitions needs alpha, beta >= 1");
    if (theta <= Rational(0)) throw BadParametersError("theta must be positive");
    if (theta >= kappa) throw EmptyWindowError("theta >= kappa leaves no window");
    if (mu <= theta) throw EmptyWindowError("mu <= theta leaves no window");

    const Rational ratio(static_cast<long long>(beta), static_cast<long long>(alpha));
    const Rational lo = theta / (kappa - theta) * ratio;
    const Rational hi = (mu - theta) / (Rational(1) + theta) * ratio;
    if (hi < lo) throw EmptyWindowError("selection window is empty");

    for (std::uint64_t r2 = 1; r2 <= max_r2; ++r2) {
        const long long r1_lo = std::max<long long>(1, (lo * Rational(static_cast<long long>(r2))).ceil());
        const long long r1_hi = (hi * Rational(static_cast<long long>(r2))).floor();
        if (r1_lo <= r1_hi)
            return {static_cast<std::uint64_t>(r1_lo), r2};
    }
    throw EmptyWindowError("no repetition pair with denominator <= " + std::to_string(max_r2));
}

namespace {

SubInstanceOracle default_oracle(InstanceKind kind) {
    if (kind == InstanceKind::MIP)
        return [](const Instance& inst) { return static_cast<std::int64_t>(solve_mip(inst.a).value) >= *inst.alpha; };
    return [](const Instance& inst) { return static_cast<std::int64_t>(solve_cp(inst.a).value) <= *inst.alpha; };
}

enum class RemainderRule { DistanceAtMost, InnerProductAtLeast };

DriveResult drive(const PointSet& a, const PointSet& b, std::int64_t alpha, std::size_t nprime,
                  RemainderRule rule, const SubInstanceOracle& oracle,
                  const std::function<SubInstanceStream(const PointSet&, const PointSet&)>& make_stream) {
    if (a.dim != b.dim) throw DimensionMismatchError("input sets have different dimensions");
    if (a.size() != b.size()) throw ShapeMismatchError("input sets must have equal cardinality");
    const std::uint64_t start = now_millis();
    const std::size_t n = a.size();
    const std::size_t blocks = nprime == 0 ? 0 : n / nprime;
    const std::size_t full = blocks * nprime;

    DriveResult result;
    result.trace.n = n;
    result.trace.n_prime = nprime;

    auto hit = [&](const BitVec& x, const BitVec& y) {
        if (rule == RemainderRule::DistanceAtMost)
            return static_cast<std::int64_t>(hamming(x, y)) <= alpha;
        return static_cast<std::int64_t>(inner_product(x, y)) >= alpha;
    };
    // leftover rows of A against all of B, and all of A against leftover B
    for (std::size_t i = full; i < n && !result.yes; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (hit(a.points[i], b.points[j])) { result.yes = true; break; }
    for (std::size_t j = full; j < n && !result.yes; ++j)
        for (std::size_t i = 0; i < full; ++i)
            if (hit(a.points[i], b.points[j])) { result.yes = true; break; }

    if (full > 0) {
        PointSet at{a.dim, {a.points.begin(), a.points.begin() + static_cast<std::ptrdiff_t>(full)}};
        PointSet bt{b.dim, {b.points.begin(), b.points.begin() + static_cast<std::ptrdiff_t>(full)}};
        SubInstanceStream stream = make_stream(at, bt);
        result.trace.cover_k = stream.k();
        result.trace.sub_instances = stream.total();
        result.trace.dim_out = stream.dim_out();
        result.trace.alpha_out = stream.alpha_out();
        if (!result.yes) {
            Instance sub;
            while (stream.next(sub)) {
                if (oracle(sub)) { result.yes = true; break; }
            }
        }
    }
    result.trace.millis = now_millis() - start;
    return result;
}

} // namespace

DriveResult run_bcp_via_cp(const PointSet& a, const PointSet& b, std::int64_t alpha,
                           const BipartiteGadget& gadget, const PermutationCover& cover,
                           const SubInstanceOracle& oracle) {
    const SubInstanceOracle& use = oracle ? oracle : default_oracle(InstanceKind::CP);
    return drive(a, b, alpha, gadget.n, RemainderRule::DistanceAtMost, use,
                 [&](const PointSet& at, const PointSet& bt) { return bcp_to_cp_stream(at, bt, alpha, gadget, cover); });
}

DriveResult run_bmip_via_mip(const PointSet& a, const PointSet& b, std::int64_t alpha,
                             const BipartiteGadget& gadget, const PermutationCover& cover,
                             const SubInstanceOracle& oracle) {
    const SubInstanceOracle& use = oracle ? oracle : default_oracle(InstanceKind::MIP);
    return drive(a, b, alpha, gadget.n, RemainderRule::InnerProductAtLeast, use,
                 [&](const PointSet& at, const PointSet& bt) { return bmip_to_mip_stream(at, bt, alpha, gadget, cover); });
}

DriveResult run_bcp_via_gapcp(const PointSet& a, const PointSet& b, std::int64_t alpha,
                              const BipartiteGadget& gadget, const PermutationCover& cover,
                              const Rational& kappa, const Rational& theta,
                              const SubInstanceOracle& oracle) {
    const SubInstanceOracle& use = oracle ? oracle : default_oracle(InstanceKind::CP);
    return drive(a, b, alpha, gadget.n, RemainderRule::DistanceAtMost, use,
                 [&](const PointSet& at, const PointSet& bt) {
                     return bcp_to_gapcp_stream(at, bt, alpha, gadget, cover, kappa, theta);
                 });
}

Instance tensor_amplify(const PointSet& p, std::int64_t alpha, unsigned t, std::uint64_t budget) {
    if (t < 1) throw BadParametersError("tensor power needs t >= 1");
    __uint128_t dims = 1;
    for (unsigned i = 0; i < t; ++i) {
        dims *= p.dim;
        if (dims > budget)
            throw BudgetExceededError("tensor dimension d^t exceeds budget " + std::to_string(budget));
    }
    __int128 alpha_out = 1;
    for (unsigned i = 0; i < t; ++i) alpha_out *= alpha;
    if (alpha_out > INT64_MAX || alpha_out < INT64_MIN)
        throw BudgetExceededError("alpha^t overflows");

    Instance out;
    out.kind = InstanceKind::MIP;
    out.alpha = static_cast<std::int64_t>(alpha_out);
    out.a.dim = static_cast<std::size_t>(dims);
    out.a.points.reserve(p.size());
    for (const auto& x : p.points) {
        BitVec cur = x;
        for (unsigned step = 1; step < t; ++step) {
            BitVec next(cur.size() * p.dim);
            cur.for_each_set([&](std::size_t i) {
                x.for_each_set([&](std::size_t j) { next.set(i * p.dim + j); });
            });
            cur = std::move(next);
        }
        out.a.points.push_back(std::move(cur));
    }
    return out;
}

EditReduction hamming_cp_to_edit_cp(const PointSet& p, std::int64_t alpha, const SubstitutionCode& code,
                                    std::size_t samples, std::uint64_t seed) {
    if (p.dim != code.d) throw DimensionMismatchError("substitution code built for a different dimension");
    EditReduction out;
    const LambdaFit fit = estimate_lambda(code, samples, seed);
    out.lambda_hat = fit.lambda_hat;
    out.max_residual = fit.max_residual;
    out.slope = fit.slope;
    out.instance.kind = InstanceKind::EditCP;
    out.instance.alpha = (fit.slope * Rational(alpha)).round();
    out.instance.a.dim = code.embedded_length();
    out.instance.a.points.reserve(p.size());
    for (const auto& x : p.points) out.instance.a.points.push_back(zeta(code, x));
    return out;
}

Rational mip_no_threshold(std::int64_t alpha_prime, std::size_t n_prime) {
    auto ilog2 = [](std::uint64_t x) -> std::uint64_t {
        return x < 2 ? 0 : std::bit_width(x) - 1;
    };
    const std::uint64_t inner = ilog2(n_prime);
    const std::uint64_t L = std::max<std::uint64_t>(1, ilog2(inner));
    return Rational(alpha_prime) * Rational(static_cast<long long>(L), static_cast<long long>(L + 1));
}

} // namespace cgadget
