#include "bintrans/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace bintrans {

RationalPolynomial RationalPolynomial::monomial(long k, const Rational& c) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Rational> cs(static_cast<std::size_t>(k) + 1);
    cs.back() = c;
    return RationalPolynomial(std::move(cs));
}

void RationalPolynomial::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back();
}

Rational RationalPolynomial::eval(const Rational& x0) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

std::string RationalPolynomial::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].to_string();
    }
    return out + "]";
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.assign(1, Rational{});
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.assign(1, Rational{});
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) { return os << p.to_string(); }

RationalPolynomial pow(const RationalPolynomial& p, long e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    RationalPolynomial result{Rational{1}};
    RationalPolynomial base = p;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

}  // namespace bintrans
