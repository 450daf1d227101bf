#pragma once

// Exact integer and rational arithmetic plus the elementary combinatorial
// coefficients used throughout the library.
//
// Integer is GMP's mpz_class. Rational wraps mpq_class and keeps it in
// canonical form: positive denominator, gcd(|num|, den) = 1. Two rationals
// are equal iff their canonical forms are identical.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bintrans {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(static_cast<long>(v)) {}
    Rational(unsigned long v) : value_(v) {}
    Rational(const Integer& v) : value_(v) {}

    /// num/den reduced to canonical form. Throws std::domain_error on den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "-p", "p/q" (q != 0). Unreduced input is canonicalized.
    /// Throws std::invalid_argument on malformed text and std::domain_error
    /// on a zero denominator.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", or bare "p" when q == 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

/// C(n, k). Zero when k < 0 or k > n. Throws std::invalid_argument for n < 0.
Integer binomial(long n, long k);

/// n!. Throws std::invalid_argument for n < 0.
Integer factorial(long n);

/// k(k-1)...(k-m+1): 1 for m == 0, 0 for m > k.
Integer falling_factorial(long k, long m);

/// base^exp with 0^0 = 1. Throws std::invalid_argument for exp < 0.
Rational int_pow(const Rational& base, long exp);

/// (-1)^k as an int.
constexpr int alt_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace bintrans
