#include "schrome/polynomial.hpp"

#include <sstream>

#include "schrome/error.hpp"

namespace schrome {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
    if (coeff == 0) return IntPolynomial();
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::falling_factorial(int i) {
    IntPolynomial out = monomial(0, 1);
    for (int k = 0; k < i; ++k) {
        // multiply by (r - k)
        IntPolynomial factor(std::vector<BigInt>{BigInt(-k), BigInt(1)});
        out = out * factor;
    }
    return out;
}

const BigInt& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

BigInt IntPolynomial::evaluate(const BigInt& r) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divided_by_r() const {
    if (is_zero()) return IntPolynomial();
    require(coeffs_[0] == 0, "polynomial not divisible by r");
    return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + 1, coeffs_.end()));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << mag.get_str();
        if (i == 1)
            out << "r";
        else if (i > 1)
            out << "r^" << i;
    }
    return out.str();
}

int FallingFactorialForm::min_support() const {
    for (std::size_t i = 0; i < coeff.size(); ++i)
        if (coeff[i] != 0) return static_cast<int>(i);
    return -1;
}

IntPolynomial FallingFactorialForm::to_power_basis() const {
    IntPolynomial out;
    IntPolynomial ff = IntPolynomial::monomial(0, 1);  // [r]_0 = 1
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (i > 0) {
            IntPolynomial factor(std::vector<BigInt>{BigInt(-(static_cast<long>(i) - 1)), BigInt(1)});
            ff = ff * factor;
        }
        if (coeff[i] != 0) out += ff * IntPolynomial::monomial(0, coeff[i]);
    }
    return out;
}

BigInt FallingFactorialForm::evaluate(const BigInt& r) const {
    BigInt acc = 0;
    BigInt ff = 1;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (i > 0) ff *= r - static_cast<long>(i - 1);
        if (coeff[i] != 0) acc += coeff[i] * ff;
    }
    return acc;
}

}  // namespace schrome
