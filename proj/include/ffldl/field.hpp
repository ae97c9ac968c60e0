#pragma once

#include <cstdint>
#include <limits>
#include <utility>

#include "ffldl/errors.hpp"

namespace ffldl {

/// Residue in [0, p).  Arithmetic goes through the owning PrimeField.
struct FieldElement {
    std::uint64_t value = 0;

    friend bool operator==(FieldElement, FieldElement) = default;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

/* Deterministic Miller-Rabin; the base set below is proven sufficient for
 * every 64-bit integer. */
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace detail

/* Arithmetic handle for Z/pZ with a saturating multiplication counter.
 *
 * The handle itself is immutable apart from the counter, so it can be copied
 * freely (one copy per thread if counts must stay separate).  Matrices keep a
 * pointer to the handle they were built with; every kernel multiplication is
 * counted on that shared handle, additions and subtractions are not.
 */
class PrimeField {
public:
    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 62) - 1;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p > max_modulus || !detail::is_prime_u64(p))
            throw NotPrime("modulus " + std::to_string(p) + " is not a prime below 2^62");
    }

    std::uint64_t modulus() const { return p_; }
    bool is_char_two() const { return p_ == 2; }

    FieldElement element(std::uint64_t v) const { return {v % p_}; }
    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1 % p_}; }

    FieldElement add(FieldElement a, FieldElement b) const {
        std::uint64_t s = a.value + b.value; // no overflow: p < 2^62
        if (s >= p_) s -= p_;
        return {s};
    }

    FieldElement sub(FieldElement a, FieldElement b) const {
        return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }

    FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (mul_count_ != std::numeric_limits<std::uint64_t>::max()) ++mul_count_;
        return {detail::mulmod_u64(a.value, b.value, p_)};
    }

    /// Multiplicative inverse via extended Euclid; not counted as a multiplication.
    FieldElement inv(FieldElement a) const {
        if (a.value == 0) throw ZeroInverse("inverse of zero");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a.value);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return {static_cast<std::uint64_t>(t)};
    }

    /// a/2; defined for odd characteristic only.
    FieldElement halve(FieldElement a) const {
        if (p_ == 2) throw CharTwoDivision("halving is undefined in characteristic 2");
        return {(a.value & 1) ? (a.value + p_) / 2 : a.value / 2};
    }

    bool is_zero(FieldElement a) const { return a.value == 0; }

    std::uint64_t mul_count() const { return mul_count_; }
    void reset_mul_count() const { mul_count_ = 0; }

private:
    std::uint64_t p_;
    mutable std::uint64_t mul_count_ = 0; // saturating
};

} // namespace ffldl
