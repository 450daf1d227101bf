#include "bintrans/transform.hpp"

namespace bintrans {

namespace {

// (c0 + c1 x)^0..limit.
std::vector<RationalPolynomial> linear_powers(const Rational& c0, const Rational& c1, long limit) {
    std::vector<RationalPolynomial> out;
    out.reserve(static_cast<std::size_t>(limit) + 1);
    out.emplace_back(Rational{1});
    const RationalPolynomial base{c0, c1};
    for (long e = 1; e <= limit; ++e) out.push_back(out.back() * base);
    return out;
}

}  // namespace

Sequence<RationalPolynomial> binomial_polynomial_direct(const Sequence<Rational>& a) {
    detail::require_nonempty(a, "binomial_polynomial_direct");
    Sequence<RationalPolynomial> out;
    out.reserve(a.size());
    for (long n = 0; n < static_cast<long>(a.size()); ++n) {
        std::vector<Rational> cs(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) cs[k] = Rational(binomial(n, k)) * a[k];
        out.emplace_back(std::move(cs));
    }
    return out;
}

Sequence<RationalPolynomial> binomial_polynomial_via_b(const Sequence<Rational>& b) {
    detail::require_nonempty(b, "binomial_polynomial_via_b");
    const long last = detail::last_index(b.size());
    const auto one_minus_x = linear_powers(Rational{1}, Rational{-1}, last);
    Sequence<RationalPolynomial> out;
    out.reserve(b.size());
    for (long n = 0; n <= last; ++n) {
        RationalPolynomial p;
        for (long j = 0; j <= n; ++j) {
            p += RationalPolynomial::monomial(j, Rational(binomial(n, j)) * b[j]) * one_minus_x[n - j];
        }
        out.push_back(std::move(p));
    }
    return out;
}

Sequence<RationalPolynomial> binomial_polynomial_taylor(const Sequence<Rational>& b) {
    const DifferenceTable<Rational> table(b);
    const long last = table.size_index();
    const auto x_minus_one = linear_powers(Rational{-1}, Rational{1}, last);
    Sequence<RationalPolynomial> out;
    out.reserve(b.size());
    for (long n = 0; n <= last; ++n) {
        RationalPolynomial p;
        for (long m = 0; m <= n; ++m) p += x_minus_one[m] * (Rational(binomial(n, m)) * table.at(m, n));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace bintrans
