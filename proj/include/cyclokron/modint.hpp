#pragma once

// Residue arithmetic with a runtime modulus m >= 2. The residue is kept
// canonical in [0, m); mixing moduli throws.

#include <cstdint>
#include <stdexcept>

#include "cyclokron/exact.hpp"

namespace cyclokron {

class ModInt {
public:
    ModInt(std::int64_t value, std::int64_t modulus)
        : m_(checked_modulus(modulus)), r_(((value % m_) + m_) % m_) {}

    ModInt(const ExactInt& value, std::int64_t modulus) : m_(checked_modulus(modulus)) {
        r_ = static_cast<std::int64_t>(mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(m_)));
    }

    std::int64_t residue() const { return r_; }
    std::int64_t modulus() const { return m_; }

    bool operator==(const ModInt&) const = default;

    ModInt operator+(const ModInt& o) const {
        check_same(o);
        return ModInt(r_ + o.r_, m_);
    }
    ModInt operator-(const ModInt& o) const {
        check_same(o);
        return ModInt(r_ - o.r_, m_);
    }
    ModInt operator-() const { return ModInt(-r_, m_); }
    ModInt operator*(const ModInt& o) const {
        check_same(o);
        return ModInt(mul_mod(r_, o.r_, m_), m_);
    }

    ModInt pow(std::uint64_t e) const {
        std::int64_t base = r_, acc = 1 % m_;
        while (e > 0) {
            if (e & 1) acc = mul_mod(acc, base, m_);
            base = mul_mod(base, base, m_);
            e >>= 1;
        }
        return ModInt(acc, m_);
    }

    // Requires gcd(residue, modulus) = 1.
    ModInt inverse() const {
        std::int64_t g, x;
        ext_gcd(r_, m_, g, x);
        if (g != 1) throw std::domain_error("ModInt: residue not invertible");
        return ModInt(x, m_);
    }

    static std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
    }

private:
    static std::int64_t checked_modulus(std::int64_t m) {
        if (m < 2) throw std::invalid_argument("ModInt: modulus must be >= 2");
        return m;
    }
    void check_same(const ModInt& o) const {
        if (m_ != o.m_) throw std::invalid_argument("ModInt: mismatched moduli");
    }
    // g = gcd(a, m), x with a*x = g (mod m).
    static void ext_gcd(std::int64_t a, std::int64_t m, std::int64_t& g, std::int64_t& x) {
        std::int64_t r0 = m, r1 = a % m, x0 = 0, x1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            std::int64_t x2 = x0 - q * x1;
            r0 = r1; r1 = r2;
            x0 = x1; x1 = x2;
        }
        g = r0;
        x = ((x0 % m) + m) % m;
    }

    std::int64_t m_;
    std::int64_t r_;
};

}  // namespace cyclokron
