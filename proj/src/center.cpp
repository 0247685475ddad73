#include "cgadget/center.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace cgadget {

namespace {

std::size_t weight_of(const std::vector<std::uint32_t>& v) {
    std::size_t w = 0;
    for (std::uint32_t x : v) w += (x != 0);
    return w;
}

bool lex_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// True when inner's generator is literally the first K1 rows of outer's, as
/// with nested Reed-Solomon codes. The coset of a codeword is then read off
/// the high digits of its message index.
bool rows_are_prefix(const LinearCode& inner, const LinearCode& outer) {
    if (inner.message_length() > outer.message_length()) return false;
    for (std::size_t r = 0; r < inner.message_length(); ++r)
        if (inner.generator()[r] != outer.generator()[r]) return false;
    return true;
}

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

CenterCertificate find_center(const LinearCode& inner, const LinearCode& outer, std::uint64_t budget) {
    if (inner.field() != outer.field() || inner.block_length() != outer.block_length())
        throw ShapeMismatchError("center search requires same field and block length");
    if (!is_subcode(inner, outer))
        throw BadParametersError("inner code is not a subcode of outer code");

    RowEchelon inner_ech(inner.field(), inner.generator());
    RowEchelon outer_ech(outer.field(), outer.generator());
    if (inner_ech.rank() == outer_ech.rank())
        throw NoCandidateError("outer \\ inner is empty");

    const std::size_t d_inner = inner.distance(budget);
    const std::size_t d_outer = outer.distance(budget);
    if (d_outer >= d_inner)
        throw DistanceOrderViolatedError("outer distance must be strictly below inner distance");

    const std::size_t radius = d_outer;
    const bool fast = rows_are_prefix(inner, outer);
    const std::uint64_t inner_count = inner.codeword_count();

    // Pass 1: per-coset counts of weight-radius codewords. Nonzero codewords
    // of the outer code all have weight >= radius, so "within the ball" and
    // "on the sphere" coincide outside the trivial coset.
    std::vector<std::uint64_t> coset_count;
    std::unordered_map<std::vector<std::uint32_t>, std::size_t, VecHash> coset_ids;
    std::uint64_t weight_r_total = 0;
    auto coset_of = [&](const std::vector<std::uint32_t>& word, std::uint64_t index) -> std::size_t {
        if (fast) return static_cast<std::size_t>(index / inner_count);
        auto res = inner_ech.residual(word);
        auto [it, inserted] = coset_ids.try_emplace(std::move(res), coset_ids.size());
        return it->second;
    };
    {
        CodewordEnumerator e(outer, budget);
        if (fast) coset_count.resize(static_cast<std::size_t>(outer.codeword_count() / inner_count), 0);
        while (e.next()) {
            const std::size_t w = weight_of(e.codeword());
            if (w != radius) {
                if (!fast) coset_of(e.codeword(), e.index()); // register the coset id
                continue;
            }
            ++weight_r_total;
            const std::size_t id = coset_of(e.codeword(), e.index());
            if (!fast && id >= coset_count.size()) coset_count.resize(id + 1, 0);
            ++coset_count[id];
        }
    }

    std::size_t trivial_id;
    if (fast) {
        trivial_id = 0;
    } else {
        coset_count.resize(coset_ids.size(), 0);
        std::vector<std::uint32_t> zero(outer.block_length(), 0);
        trivial_id = coset_ids.at(zero);
    }

    std::uint64_t best = 0;
    for (std::size_t id = 0; id < coset_count.size(); ++id)
        if (id != trivial_id) best = std::max(best, coset_count[id]);

    // Pass 2: lexicographically smallest codeword among the argmax cosets.
    std::vector<std::uint32_t> center;
    {
        CodewordEnumerator e(outer, budget);
        while (e.next()) {
            std::size_t id;
            if (fast) {
                id = static_cast<std::size_t>(e.index() / inner_count);
            } else {
                id = coset_ids.at(inner_ech.residual(e.codeword()));
            }
            if (id == trivial_id || coset_count[id] != best) continue;
            if (center.empty() || lex_less(e.codeword(), center)) center = e.codeword();
        }
    }

    CenterCertificate cert;
    cert.q = outer.field().modulus();
    cert.block_length = outer.block_length();
    cert.center = std::move(center);
    cert.radius = radius;
    cert.ball_count = best;
    cert.total_inner = inner_count;
    cert.lower_bound = Rational(static_cast<long long>(weight_r_total),
                                static_cast<long long>(outer.codeword_count()));
    return cert;
}

CenterReport verify_certificate(const CenterCertificate& cert, const LinearCode& inner, std::uint64_t budget) {
    CenterReport report;
    if (cert.center.size() != inner.block_length()) {
        report.violations.push_back("center length differs from block length");
        return report;
    }
    std::uint64_t recount = 0;
    CodewordEnumerator e(inner, budget);
    while (e.next()) {
        std::size_t dist = 0;
        const auto& c = e.codeword();
        for (std::size_t i = 0; i < c.size(); ++i) dist += (c[i] != cert.center[i]);
        if (dist == 0)
            report.violations.push_back("center lies in the inner code (index " + std::to_string(e.index()) + ")");
        if (dist < cert.radius)
            report.violations.push_back("codeword " + std::to_string(e.index()) + " at distance " +
                                        std::to_string(dist) + " < radius " + std::to_string(cert.radius));
        if (dist <= cert.radius) ++recount;
    }
    report.recount = recount;
    if (recount != cert.ball_count)
        report.violations.push_back("recount mismatch: ball has " + std::to_string(recount) +
                                    " codewords, certificate claims " + std::to_string(cert.ball_count));
    const std::uint64_t total = inner.codeword_count();
    if (cert.total_inner != 0 && cert.total_inner != total)
        report.violations.push_back("certificate |C1| differs from the inner code");
    const Rational ratio(static_cast<long long>(recount), static_cast<long long>(total));
    if (ratio < cert.lower_bound)
        report.violations.push_back("ball ratio " + ratio.str() + " below bound " + cert.lower_bound.str());
    return report;
}

std::string certificate_to_string(const CenterCertificate& cert) {
    std::ostringstream os;
    os << cert.q << ' ' << cert.block_length << ' ' << cert.radius << ' ' << cert.ball_count << '\n';
    for (std::size_t i = 0; i < cert.center.size(); ++i) {
        if (i) os << ' ';
        os << cert.center[i];
    }
    os << '\n';
    return os.str();
}

CenterCertificate certificate_from_string(const std::string& text) {
    std::istringstream is(text);
    CenterCertificate cert;
    if (!(is >> cert.q >> cert.block_length >> cert.radius >> cert.ball_count))
        throw ParseError("bad certificate header");
    cert.center.resize(cert.block_length);
    for (auto& x : cert.center)
        if (!(is >> x)) throw ParseError("bad certificate center vector");
    return cert;
}

} // namespace cgadget
