#include "cgadget/code.hpp"

#include <algorithm>
#include <sstream>

namespace cgadget {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
    __uint128_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > UINT64_MAX)
            throw BadParametersError("q^K does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    __uint128_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) throw BadParametersError("binomial overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::size_t weight(const std::vector<std::uint32_t>& v) {
    std::size_t w = 0;
    for (std::uint32_t x : v) w += (x != 0);
    return w;
}

} // namespace

LinearCode LinearCode::reed_solomon(const PrimeField& field, std::size_t n, std::size_t k) {
    const std::uint64_t q = field.modulus();
    if (k < 1 || k > n || n > q)
        throw BadParametersError("Reed-Solomon requires 1 <= K <= N <= q");
    LinearCode code(field, n, k);
    code.family_ = CodeFamily::ReedSolomon;
    code.claimed_distance_ = n - k + 1;
    code.rows_.resize(k, std::vector<std::uint32_t>(n));
    for (std::size_t col = 0; col < n; ++col) {
        std::uint64_t p = 1; // col^0
        for (std::size_t row = 0; row < k; ++row) {
            code.rows_[row][col] = static_cast<std::uint32_t>(p);
            p = field.mul(p, col);
        }
    }
    return code;
}

LinearCode LinearCode::generic(const PrimeField& field, std::vector<std::vector<std::uint32_t>> generator) {
    if (generator.empty()) throw BadParametersError("generator must have at least one row");
    const std::size_t n = generator[0].size();
    for (auto& row : generator) {
        if (row.size() != n) throw BadParametersError("ragged generator matrix");
        for (auto& x : row) x = static_cast<std::uint32_t>(field.reduce(x));
    }
    RowEchelon ech(field, generator);
    if (ech.rank() != generator.size())
        throw BadParametersError("generator rows are linearly dependent");
    LinearCode code(field, n, generator.size());
    code.family_ = CodeFamily::Generic;
    code.rows_ = std::move(generator);
    return code;
}

std::uint64_t LinearCode::codeword_count() const {
    return checked_pow(field_.modulus(), k_);
}

std::size_t LinearCode::distance(std::uint64_t budget) const {
    if (claimed_distance_) return *claimed_distance_;
    return min_distance_bruteforce(budget);
}

std::vector<std::uint32_t> LinearCode::encode(std::span<const std::uint32_t> message) const {
    if (message.size() != k_)
        throw LengthMismatchError("message length must equal K");
    std::vector<std::uint32_t> out(n_, 0);
    for (std::size_t row = 0; row < k_; ++row) {
        const std::uint64_t m = field_.reduce(message[row]);
        if (m == 0) continue;
        for (std::size_t col = 0; col < n_; ++col)
            out[col] = static_cast<std::uint32_t>(field_.add(out[col], field_.mul(m, rows_[row][col])));
    }
    return out;
}

std::size_t LinearCode::min_distance_bruteforce(std::uint64_t budget) const {
    CodewordEnumerator e(*this, budget);
    std::size_t best = n_ + 1;
    while (e.next()) {
        if (e.index() == 0) continue; // zero codeword
        best = std::min(best, weight(e.codeword()));
    }
    return best;
}

std::map<std::size_t, std::uint64_t> LinearCode::weight_distribution_bruteforce(std::uint64_t budget) const {
    CodewordEnumerator e(*this, budget);
    std::map<std::size_t, std::uint64_t> dist;
    while (e.next()) ++dist[weight(e.codeword())];
    return dist;
}

std::uint64_t LinearCode::mds_min_weight_count(std::uint64_t budget) const {
    const std::size_t d = distance(budget);
    if (d + k_ != n_ + 1)
        throw NotMdsError("code does not meet the Singleton bound");
    return binomial(n_, k_ - 1) * (field_.modulus() - 1);
}

std::string LinearCode::descriptor() const {
    if (family_ != CodeFamily::ReedSolomon)
        throw BadParametersError("only Reed-Solomon codes have a flat descriptor");
    std::ostringstream os;
    os << "rs " << field_.modulus() << ' ' << n_ << ' ' << k_;
    return os.str();
}

LinearCode LinearCode::from_descriptor(const std::string& text) {
    std::istringstream is(text);
    std::string family;
    std::uint64_t q = 0;
    std::size_t n = 0, k = 0;
    if (!(is >> family >> q >> n >> k) || family != "rs")
        throw ParseError("bad code descriptor: " + text);
    return reed_solomon(PrimeField(q), n, k);
}

bool is_subcode(const LinearCode& inner, const LinearCode& outer) {
    if (inner.field() != outer.field() || inner.block_length() != outer.block_length())
        throw ShapeMismatchError("subcode test requires same field and block length");
    RowEchelon ech(outer.field(), outer.generator());
    for (const auto& row : inner.generator())
        if (!ech.contains(row)) return false;
    return true;
}

CodewordEnumerator::CodewordEnumerator(const LinearCode& code, std::uint64_t budget)
    : code_(code), q_(code.field().modulus()), total_(code.codeword_count()),
      digits_(code.message_length(), 0), current_(code.block_length(), 0) {
    if (total_ > budget)
        throw BudgetExceededError("enumeration of " + std::to_string(total_) +
                                  " codewords exceeds budget " + std::to_string(budget));
}

bool CodewordEnumerator::next() {
    if (!started_) {
        started_ = true;
        index_ = 0;
        return true;
    }
    if (index_ + 1 >= total_) return false;
    ++index_;
    // Odometer step: every digit that changes (wrap q-1 -> 0 contributes
    // -(q-1) == +1, the carried increment contributes +1), so each changed
    // digit adds its generator row once.
    const auto& gen = code_.generator();
    const PrimeField& f = code_.field();
    for (std::size_t j = 0; j < digits_.size(); ++j) {
        const auto& row = gen[j];
        for (std::size_t col = 0; col < current_.size(); ++col)
            current_[col] = static_cast<std::uint32_t>(f.add(current_[col], row[col]));
        if (digits_[j] + 1 < q_) {
            ++digits_[j];
            break;
        }
        digits_[j] = 0;
    }
    return true;
}

RowEchelon::RowEchelon(const PrimeField& field, const std::vector<std::vector<std::uint32_t>>& rows)
    : field_(field), n_(rows.empty() ? 0 : rows[0].size()) {
    for (const auto& src : rows) {
        if (src.size() != n_) throw ShapeMismatchError("ragged rows in echelon");
        std::vector<std::uint32_t> v(src);
        for (auto& x : v) x = static_cast<std::uint32_t>(field_.reduce(x));
        // eliminate against existing pivot rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::uint64_t c = v[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t col = 0; col < n_; ++col)
                v[col] = static_cast<std::uint32_t>(field_.sub(v[col], field_.mul(c, rows_[r][col])));
        }
        std::size_t pivot = n_;
        for (std::size_t col = 0; col < n_; ++col)
            if (v[col] != 0) { pivot = col; break; }
        if (pivot == n_) continue; // dependent row
        const std::uint64_t scale = field_.inv(v[pivot]);
        for (std::size_t col = 0; col < n_; ++col)
            v[col] = static_cast<std::uint32_t>(field_.mul(v[col], scale));
        // back-substitute into earlier rows to keep the form reduced
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::uint64_t c = rows_[r][pivot];
            if (c == 0) continue;
            for (std::size_t col = 0; col < n_; ++col)
                rows_[r][col] = static_cast<std::uint32_t>(field_.sub(rows_[r][col], field_.mul(c, v[col])));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
    }
}

bool RowEchelon::contains(std::span<const std::uint32_t> v) const {
    auto res = residual(v);
    return std::all_of(res.begin(), res.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::uint32_t> RowEchelon::residual(std::span<const std::uint32_t> v) const {
    if (v.size() != n_) throw ShapeMismatchError("residual: wrong length");
    std::vector<std::uint32_t> out(v.begin(), v.end());
    for (auto& x : out) x = static_cast<std::uint32_t>(field_.reduce(x));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::uint64_t c = out[pivots_[r]];
        if (c == 0) continue;
        for (std::size_t col = 0; col < n_; ++col)
            out[col] = static_cast<std::uint32_t>(field_.sub(out[col], field_.mul(c, rows_[r][col])));
    }
    return out;
}

} // namespace cgadget
