#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cgadget/bitvec.hpp"
#include "cgadget/rational.hpp"

namespace cgadget {

/// Per-coordinate substitution table: coordinate i with bit x is replaced by
/// the fixed pseudorandom string table[2i+x] of length bits_per_symbol. The
/// table is a pure function of (d, seed, c).
struct SubstitutionCode {
    std::size_t d = 0;
    std::size_t bits_per_symbol = 0; // L = ceil(c * log2 d)
    std::uint64_t seed = 0;
    Rational c;
    std::vector<BitVec> table; // 2d entries of length L

    std::size_t embedded_length() const { return d * bits_per_symbol; }
};

SubstitutionCode gen_substitution_code(std::size_t d, std::uint64_t seed, const Rational& c = Rational(4));

/// Concatenates the table entries selected by the point's bits.
BitVec zeta(const SubstitutionCode& code, const BitVec& point);

/// Exact Levenshtein distance (substitutions/insertions/deletions), O(|a||b|).
std::size_t edit_distance(std::string_view a, std::string_view b);
std::size_t edit_distance(const BitVec& a, const BitVec& b);

/// Through-origin least-squares fit of ed(zeta(a), zeta(b)) against
/// log2(d) * hamming(a, b) over seeded random pairs. `slope` is the exact
/// fitted edit distance per unit Hamming distance; lambda_hat divides out
/// log2(d) (represented by a fixed dyadic rational, exact whenever d is a
/// power of two). max_residual is the largest |ed - slope*hamming|
/// normalized by the embedded length.
struct LambdaFit {
    Rational lambda_hat;
    Rational max_residual;
    Rational slope;
};

LambdaFit estimate_lambda(const SubstitutionCode& code, std::size_t samples, std::uint64_t seed);

} // namespace cgadget
