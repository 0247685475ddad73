#include "cgadget/editembed.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cgadget {

namespace {

/// Smallest L >= 1 with 2^(L*b) >= d^a for c = a/b, i.e. L = ceil(c*log2 d),
/// computed exactly in integers.
std::size_t symbol_length(std::size_t d, const Rational& c) {
    if (c.num() <= 0) throw BadParametersError("substitution code needs c > 0");
    const auto a = static_cast<unsigned>(c.num());
    const auto b = static_cast<unsigned>(c.den());
    __uint128_t da = 1;
    for (unsigned i = 0; i < a; ++i) {
        da *= d;
        if (da > (__uint128_t(1) << 120))
            throw BadParametersError("dimension too large for exact symbol length");
    }
    std::size_t len = 1;
    auto pow2_ge = [&](std::size_t l) {
        const std::size_t bits = l * b;
        if (bits >= 120) return true;
        return (__uint128_t(1) << bits) >= da;
    };
    while (!pow2_ge(len)) ++len;
    return len;
}

} // namespace

SubstitutionCode gen_substitution_code(std::size_t d, std::uint64_t seed, const Rational& c) {
    if (d < 2) throw BadParametersError("substitution code needs d >= 2");
    SubstitutionCode code;
    code.d = d;
    code.seed = seed;
    code.c = c;
    code.bits_per_symbol = symbol_length(d, c);
    code.table.reserve(2 * d);
    std::mt19937_64 rng(seed);
    for (std::size_t entry = 0; entry < 2 * d; ++entry) {
        BitVec s(code.bits_per_symbol);
        std::uint64_t word = 0;
        unsigned left = 0;
        for (std::size_t bit = 0; bit < code.bits_per_symbol; ++bit) {
            if (left == 0) {
                word = rng();
                left = 64;
            }
            if (word & 1) s.set(bit);
            word >>= 1;
            --left;
        }
        code.table.push_back(std::move(s));
    }
    return code;
}

BitVec zeta(const SubstitutionCode& code, const BitVec& point) {
    if (point.size() != code.d) throw DimensionMismatchError("zeta: point dimension mismatch");
    const std::size_t L = code.bits_per_symbol;
    BitVec out(code.d * L);
    for (std::size_t i = 0; i < code.d; ++i) {
        const BitVec& sym = code.table[2 * i + (point.get(i) ? 1 : 0)];
        for (std::size_t b = 0; b < L; ++b)
            if (sym.get(b)) out.set(i * L + b);
    }
    return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    const std::size_t la = a.size(), lb = b.size();
    if (la == 0) return lb;
    if (lb == 0) return la;
    std::vector<std::uint32_t> prev(lb + 1), cur(lb + 1);
    for (std::size_t j = 0; j <= lb; ++j) prev[j] = static_cast<std::uint32_t>(j);
    for (std::size_t i = 0; i < la; ++i) {
        cur[0] = static_cast<std::uint32_t>(i + 1);
        for (std::size_t j = 0; j < lb; ++j) {
            const std::uint32_t sub = prev[j] + (a[i] != b[j]);
            const std::uint32_t ins = cur[j] + 1;
            const std::uint32_t del = prev[j + 1] + 1;
            cur[j + 1] = std::min(sub, std::min(ins, del));
        }
        std::swap(prev, cur);
    }
    return prev[lb];
}

std::size_t edit_distance(const BitVec& a, const BitVec& b) {
    const std::string sa = a.to_string();
    const std::string sb = b.to_string();
    return edit_distance(sa, sb);
}

LambdaFit estimate_lambda(const SubstitutionCode& code, std::size_t samples, std::uint64_t seed) {
    if (samples < 100) throw BadParametersError("estimate_lambda needs at least 100 samples");
    std::mt19937_64 rng(seed);
    auto random_point = [&] {
        BitVec p(code.d);
        std::uint64_t word = 0;
        unsigned left = 0;
        for (std::size_t i = 0; i < code.d; ++i) {
            if (left == 0) {
                word = rng();
                left = 64;
            }
            if (word & 1) p.set(i);
            word >>= 1;
            --left;
        }
        return p;
    };

    long long sum_he = 0, sum_hh = 0;
    std::vector<std::pair<long long, long long>> obs; // (hamming, edit)
    obs.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        const BitVec a = random_point();
        const BitVec b = random_point();
        const auto h = static_cast<long long>(hamming(a, b));
        const auto e = static_cast<long long>(edit_distance(zeta(code, a), zeta(code, b)));
        sum_he += h * e;
        sum_hh += h * h;
        obs.emplace_back(h, e);
    }

    LambdaFit fit;
    fit.slope = sum_hh == 0 ? Rational(0) : Rational(sum_he, sum_hh);

    // log2(d) as a dyadic rational with 2^20 denominator; exact for powers of
    // two, a documented fixed convention otherwise.
    const long long scale = 1 << 20;
    const long long lg = std::llround(std::log2(static_cast<double>(code.d)) * scale);
    fit.lambda_hat = fit.slope / Rational(lg, scale);

    const auto dprime = static_cast<long long>(code.embedded_length());
    Rational max_res(0);
    for (const auto& [h, e] : obs) {
        Rational res = Rational(e) - fit.slope * Rational(h);
        if (res.is_negative()) res = -res;
        res = res / Rational(dprime);
        if (res > max_res) max_res = res;
    }
    fit.max_residual = max_res;
    return fit;
}

} // namespace cgadget
