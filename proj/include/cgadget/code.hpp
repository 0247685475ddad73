#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgadget/field.hpp"

namespace cgadget {

/// Default cap on q^K for any operation that enumerates a full code.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t(1) << 24;

enum class CodeFamily { ReedSolomon, Generic };

/// Linear [N, K, D]_q code given by a K x N generator matrix. Reed-Solomon
/// codes evaluate x^k at points 0..N-1 in field order, so RS_q[N, K1] is a
/// literal row-prefix of RS_q[N, K2] for K1 < K2.
class LinearCode {
public:
    static LinearCode reed_solomon(const PrimeField& field, std::size_t n, std::size_t k);
    static LinearCode generic(const PrimeField& field, std::vector<std::vector<std::uint32_t>> generator);

    const PrimeField& field() const { return field_; }
    std::size_t block_length() const { return n_; }
    std::size_t message_length() const { return k_; }
    CodeFamily family() const { return family_; }
    std::optional<std::size_t> claimed_distance() const { return claimed_distance_; }
    const std::vector<std::vector<std::uint32_t>>& generator() const { return rows_; }

    /// q^K; throws BadParametersError if it does not fit in 64 bits.
    std::uint64_t codeword_count() const;

    /// Claimed distance when available (always set for Reed-Solomon), else
    /// measured by brute force within the budget.
    std::size_t distance(std::uint64_t budget = kDefaultEnumerationBudget) const;

    std::vector<std::uint32_t> encode(std::span<const std::uint32_t> message) const;

    std::size_t min_distance_bruteforce(std::uint64_t budget = kDefaultEnumerationBudget) const;
    std::map<std::size_t, std::uint64_t> weight_distribution_bruteforce(std::uint64_t budget = kDefaultEnumerationBudget) const;

    /// binom(N, K-1) * (q-1), valid only when the code is MDS.
    std::uint64_t mds_min_weight_count(std::uint64_t budget = kDefaultEnumerationBudget) const;

    /// Flat text descriptor "rs q N K"; only Reed-Solomon codes are
    /// reconstructible, generic generators are not serialized.
    std::string descriptor() const;
    static LinearCode from_descriptor(const std::string& text);

private:
    LinearCode(PrimeField field, std::size_t n, std::size_t k) : field_(field), n_(n), k_(k) {}

    PrimeField field_;
    std::size_t n_;
    std::size_t k_;
    CodeFamily family_ = CodeFamily::Generic;
    std::optional<std::size_t> claimed_distance_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

/// True iff every generator row of `inner` lies in the row space of `outer`.
bool is_subcode(const LinearCode& inner, const LinearCode& outer);

/// Streams all q^K codewords in lexicographic message order, least
/// significant message coordinate first. Message index m has digits
/// m_j = (m / q^j) % q and the codeword is sum_j m_j * row_j.
class CodewordEnumerator {
public:
    explicit CodewordEnumerator(const LinearCode& code, std::uint64_t budget = kDefaultEnumerationBudget);

    /// Advances to the next codeword; false once all q^K have been produced.
    bool next();

    const std::vector<std::uint32_t>& codeword() const { return current_; }
    std::uint64_t index() const { return index_; }

private:
    const LinearCode& code_;
    std::uint64_t q_;
    std::uint64_t total_;
    std::uint64_t index_ = 0;
    bool started_ = false;
    std::vector<std::uint32_t> digits_;
    std::vector<std::uint32_t> current_;
};

/// Row-reduced echelon form over F_q used for membership and coset tests.
class RowEchelon {
public:
    RowEchelon(const PrimeField& field, const std::vector<std::vector<std::uint32_t>>& rows);

    std::size_t rank() const { return rows_.size(); }
    bool contains(std::span<const std::uint32_t> v) const;

    /// v with all pivot coordinates eliminated: a canonical representative of
    /// v's coset modulo the row space.
    std::vector<std::uint32_t> residual(std::span<const std::uint32_t> v) const;

private:
    PrimeField field_;
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace cgadget
