#pragma once

#include <cstdint>

#include "quif5/errors.hpp"

namespace quif5 {

/// Arithmetic in the prime field F_p, 2 <= p < 2^31.
/// Elements are canonical residues in [0, p), passed around as int64_t.
class Field {
public:
    explicit Field(std::int64_t p) : p_(p) {
        if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
            throw SemanticError("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
    }

    std::int64_t p() const { return p_; }

    std::int64_t reduce(std::int64_t a) const {
        std::int64_t r = a % p_;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t r = a + b;
        return r >= p_ ? r - p_ : r;
    }

    std::int64_t sub(std::int64_t a, std::int64_t b) const {
        std::int64_t r = a - b;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }

    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }

    // Extended Euclid; uniform cost at any p.
    std::int64_t inv(std::int64_t a) const {
        if (a == 0) throw DivisionByZero();
        std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            std::int64_t t2 = t0 - q * t1;
            r0 = r1; r1 = r2;
            t0 = t1; t1 = t2;
        }
        return reduce(t0);
    }

    std::int64_t div(std::int64_t a, std::int64_t b) const { return mul(a, inv(b)); }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::int64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::int64_t p_;
};

}  // namespace quif5
