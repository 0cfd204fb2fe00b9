#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbidouble {

/// Arithmetic in the prime field F_p for a word-sized prime p.
/// Entries are kept reduced to [0, p); p < 2^31 so products fit in 64 bits.
class Fp {
public:
    explicit Fp(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 31) || !is_prime(p))
            throw std::invalid_argument("Fp: modulus " + std::to_string(p) +
                                        " is not a prime below 2^31");
    }

    std::uint64_t modulus() const { return p_; }

    std::uint64_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p_;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a % p_ == 0) throw std::invalid_argument("Fp::inv: zero is not invertible");
        return pow(a, p_ - 2);
    }

    bool operator==(const Fp& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
};

} // namespace orbidouble
