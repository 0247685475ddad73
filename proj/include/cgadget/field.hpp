#pragma once

#include <cstdint>

#include "cgadget/errors.hpp"

namespace cgadget {

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// The i-th prime, 1-indexed: nth_prime(1) == 2.
std::uint64_t nth_prime(std::size_t i);

/// Prime field F_q with canonical representatives in [0, q). All operations
/// normalize eagerly so equality on values is structural.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + q_ - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % q_);
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce(std::uint64_t a) const { return a % q_; }

    bool operator==(const PrimeField& other) const { return q_ == other.q_; }
    bool operator!=(const PrimeField& other) const { return q_ != other.q_; }

private:
    std::uint64_t q_;
};

/// A field element paired with its modulus; cross-field arithmetic throws.
class FieldElement {
public:
    FieldElement(const PrimeField& field, std::uint64_t value)
        : q_(field.modulus()), v_(value % field.modulus()) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return q_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        std::uint64_t s = a.v_ + b.v_;
        return FieldElement(a.q_, s >= a.q_ ? s - a.q_ : s);
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return FieldElement(a.q_, a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.q_ - b.v_);
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return FieldElement(a.q_, static_cast<std::uint64_t>((static_cast<__uint128_t>(a.v_) * b.v_) % a.q_));
    }
    FieldElement inv() const;

    bool operator==(const FieldElement& other) const { return q_ == other.q_ && v_ == other.v_; }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

private:
    FieldElement(std::uint64_t q, std::uint64_t v) : q_(q), v_(v) {}
    void check(const FieldElement& other) const {
        if (q_ != other.q_) throw FieldMismatchError("elements belong to different fields");
    }

    std::uint64_t q_;
    std::uint64_t v_;
};

} // namespace cgadget
