#pragma once

// Dense integer polynomials, little-endian: coeffs[j] is the coefficient
// of t^j. No trailing zero is ever stored; the zero polynomial is the
// empty sequence and its degree is std::nullopt.

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cyclokron/exact.hpp"

namespace cyclokron {

class IntPoly {
public:
    IntPoly() = default;  // zero polynomial
    explicit IntPoly(std::vector<ExactInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    // c * t^degree
    static IntPoly monomial(int degree, ExactInt c = ExactInt(1));

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    const std::vector<ExactInt>& coeffs() const { return coeffs_; }

    // Coefficient of t^j; zero beyond the stored range.
    const ExactInt& coeff(int j) const;
    const ExactInt& leading() const;  // requires nonzero
    bool is_monic() const { return !is_zero() && leading() == 1; }

    bool operator==(const IntPoly&) const = default;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;

    ExactInt operator()(const ExactInt& x) const;  // Horner

    // f(g(t)), exact composition.
    IntPoly substitute(const IntPoly& g) const;

    // Ascending powers, e.g. "1 + t + t^2", "-1 + t^3".
    std::string to_string() const;

private:
    void trim();

    std::vector<ExactInt> coeffs_;
};

struct DivModResult {
    IntPoly quotient;
    IntPoly remainder;
};

// Division with remainder by a monic divisor; quotient and remainder stay
// integral. Throws on zero or non-monic g.
DivModResult divmod(const IntPoly& f, const IntPoly& g);

// Quotient f/g when g divides f exactly over Z[t]; nullopt otherwise.
// g need not be monic.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g);

struct ContentPrimitive {
    ExactInt content;   // sign matches f's leading coefficient
    IntPoly primitive;  // positive leading coefficient, content 1
};

// f = content * primitive. For f = 0 returns (0, 0).
ContentPrimitive content_and_primitive(const IntPoly& f);

}  // namespace cyclokron
