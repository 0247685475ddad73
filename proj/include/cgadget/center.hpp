#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgadget/code.hpp"
#include "cgadget/rational.hpp"

namespace cgadget {

/// A center s in C2 \ C1 together with its verified guarantees: no C1
/// codeword lies strictly inside the ball B(s, radius), and the ball holds at
/// least a A_radius(C2)/|C2| fraction of C1.
struct CenterCertificate {
    std::uint64_t q = 0;
    std::size_t block_length = 0;
    std::vector<std::uint32_t> center;
    std::size_t radius = 0;          // = distance of the outer code
    std::uint64_t ball_count = 0;    // |B(center, radius) ∩ C1|
    std::uint64_t total_inner = 0;   // |C1|
    Rational lower_bound;            // A_radius(C2) / |C2|

    Rational ratio() const { return Rational(static_cast<long long>(ball_count), static_cast<long long>(total_inner)); }
};

/// Searches all of outer \ inner for the center maximizing the ball count,
/// ties broken by lexicographically smallest center vector. The scan walks
/// outer once and aggregates per coset of inner: the ball count of s equals
/// the number of weight-radius words in s's coset, so the argmax over centers
/// is the argmax over nontrivial cosets.
CenterCertificate find_center(const LinearCode& inner, const LinearCode& outer,
                              std::uint64_t budget = kDefaultEnumerationBudget);

struct CenterReport {
    std::vector<std::string> violations;
    std::uint64_t recount = 0;
    bool ok() const { return violations.empty(); }
};

/// Recomputes both certificate conditions by full enumeration of the inner
/// code and lists every violation found.
CenterReport verify_certificate(const CenterCertificate& cert, const LinearCode& inner,
                                std::uint64_t budget = kDefaultEnumerationBudget);

std::string certificate_to_string(const CenterCertificate& cert);
CenterCertificate certificate_from_string(const std::string& text);

} // namespace cgadget
