#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgadget/errors.hpp"

namespace cgadget {

/// Bit-packed vector in {0,1}^d. All point sets, gadget realizations and
/// adjacency rows use this type; Hamming distances and inner products are
/// word-parallel XOR/AND + popcount.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    static BitVec from_string(std::string_view s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') v.set(i);
            else if (s[i] != '0') throw ParseError("bit row must contain only 0/1");
        }
        return v;
    }

    std::size_t size() const { return bits_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) {
        if (value) w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    friend std::size_t hamming(const BitVec& a, const BitVec& b) {
        if (a.bits_ != b.bits_) throw DimensionMismatchError("hamming: dimensions differ");
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] ^ b.w_[i]);
        return c;
    }

    friend std::size_t inner_product(const BitVec& a, const BitVec& b) {
        if (a.bits_ != b.bits_) throw DimensionMismatchError("inner_product: dimensions differ");
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }

    /// popcount(a & b) with no dimension check; used for adjacency rows.
    friend std::size_t and_popcount(const BitVec& a, const BitVec& b) {
        std::size_t n = a.w_.size() < b.w_.size() ? a.w_.size() : b.w_.size();
        std::size_t c = 0;
        for (std::size_t i = 0; i < n; ++i) c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }

    BitVec concat(const BitVec& other) const {
        BitVec r(bits_ + other.bits_);
        for (std::size_t i = 0; i < bits_; ++i)
            if (get(i)) r.set(i);
        for (std::size_t i = 0; i < other.bits_; ++i)
            if (other.get(i)) r.set(bits_ + i);
        return r;
    }

    /// Concatenation of `times` copies of this vector (the 1_times ⊗ v block).
    BitVec repeat(std::size_t times) const {
        BitVec r(bits_ * times);
        for (std::size_t t = 0; t < times; ++t)
            for (std::size_t i = 0; i < bits_; ++i)
                if (get(i)) r.set(t * bits_ + i);
        return r;
    }

    void or_assign(const BitVec& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
    }
    void and_not_assign(const BitVec& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~other.w_[i];
    }

    /// Calls fn(index) for every set bit, in increasing index order.
    template <class F>
    void for_each_set(F&& fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = std::countr_zero(w);
                fn(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    bool operator==(const BitVec& other) const { return bits_ == other.bits_ && w_ == other.w_; }
    bool operator!=(const BitVec& other) const { return !(*this == other); }

    std::string to_string() const {
        std::string s(bits_, '0');
        for (std::size_t i = 0; i < bits_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace cgadget
