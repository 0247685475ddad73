#include "cgadget/field.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace cgadget {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is known to decide primality for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t nth_prime(std::size_t i) {
    if (i == 0) throw BadParametersError("nth_prime is 1-indexed");
    static std::mutex mutex;
    static std::vector<std::uint64_t> cache;
    std::lock_guard<std::mutex> lock(mutex);
    std::uint64_t candidate = cache.empty() ? 1 : cache.back();
    while (cache.size() < i) {
        ++candidate;
        if (is_prime(candidate)) cache.push_back(candidate);
    }
    return cache[i - 1];
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (q < 2 || !is_prime(q))
        throw CompositeModulusError("modulus " + std::to_string(q) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    return powmod(a % q_, e, q_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= q_;
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    return powmod(a, q_ - 2, q_);
}

FieldElement FieldElement::inv() const {
    if (v_ == 0) throw DivisionByZeroError("inverse of zero");
    return FieldElement(q_, powmod(v_, q_ - 2, q_));
}

} // namespace cgadget
