#pragma once

// Deterministic primality by trial division, and the PrimeModulus strong
// type that refuses to hold a composite.

#include <cstdint>

namespace cyclokron {

// Exact for every machine-word n; negatives are not prime.
bool is_prime(std::int64_t n);

// Smallest prime strictly greater than n.
std::int64_t next_prime_above(std::int64_t n);

// A prime p >= 2, verified at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::int64_t p);

    std::int64_t value() const { return p_; }

    bool operator==(const PrimeModulus&) const = default;

private:
    std::int64_t p_;
};

}  // namespace cyclokron
