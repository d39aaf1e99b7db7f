#pragma once

#include <string>
#include <vector>

#include "schrome/bigint.hpp"

namespace schrome {

// Exact integer polynomial in one variable r, power basis.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);  // coeffs[i] * r^i

    static IntPolynomial monomial(int degree, BigInt coeff = 1);
    static IntPolynomial falling_factorial(int i);  // [r]_i = r(r-1)...(r-i+1)

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt evaluate(const BigInt& r) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial operator*(const IntPolynomial& o) const;
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // Exact division by r; InvalidInput if the constant term is nonzero.
    IntPolynomial divided_by_r() const;

    // "r^5 - 5r^3 + 5r^2 - r", descending powers, zero terms omitted.
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// A polynomial in the falling-factorial basis: coeff[i] multiplies [r]_i.
// For chromatic polynomials coeff[i] = S(K,i,s).
struct FallingFactorialForm {
    std::vector<BigInt> coeff;  // index 0..m

    // Smallest i with coeff[i] != 0, or -1 when all zero.
    int min_support() const;
    IntPolynomial to_power_basis() const;
    BigInt evaluate(const BigInt& r) const;
};

}  // namespace schrome
