#pragma once

#include "bintrans/exact.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace bintrans {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree. Always canonical: no trailing zero coefficient except for the
/// zero polynomial, which is stored as the single coefficient 0.
class RationalPolynomial {
public:
    RationalPolynomial() : coeffs_{Rational{}} {}
    RationalPolynomial(const Rational& c) : coeffs_{c} {}
    RationalPolynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { normalize(); }
    explicit RationalPolynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { normalize(); }

    /// The monomial c * x^k.
    static RationalPolynomial monomial(long k, const Rational& c = Rational{1});
    static RationalPolynomial x() { return monomial(1); }

    /// Degree of the polynomial; 0 for constants including zero.
    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    /// Coefficient of x^i, zero past the degree.
    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Horner evaluation at x0.
    Rational eval(const Rational& x0) const;

    /// Array text form, e.g. [1, -2, 1/2].
    std::string to_string() const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& s);
    RationalPolynomial& operator*=(const RationalPolynomial& o);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
    friend RationalPolynomial operator-(RationalPolynomial a) { return a *= Rational{-1}; }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

inline std::string to_string(const RationalPolynomial& p) { return p.to_string(); }

/// p^e with p^0 = 1. Throws std::invalid_argument for e < 0.
RationalPolynomial pow(const RationalPolynomial& p, long e);

}  // namespace bintrans
