#pragma once

// Binomial transforms, backward-difference tables and the product formula.
//
// Everything here is generic over a ring element type R (Rational or
// RationalPolynomial). R{} must be the additive identity and R must support
// + - and scaling by a Rational.
//
// Conventions, for a sequence x_0..x_N:
//   forward   b_n = sum_k C(n,k) a_k
//   inverse   a_n = sum_k C(n,k) (-1)^(n-k) b_k
//   signed    d_n = sum_k C(n,k) (-1)^k c_k          (self-inverse)
//   nabla     x_n - x_{n-1}, defined for n >= 1
// The product formula
//   sum_k C(n,k) a_k c_k = sum_m C(n,m) d_m nabla^m b_n
// holds whenever b = forward(a) and d = inverse(c).

#include "bintrans/exact.hpp"
#include "bintrans/poly.hpp"
#include "bintrans/sequences.hpp"

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bintrans {

template <class R>
concept RingElement = std::regular<R> && requires(R a, R b, Rational s) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * s } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
};

namespace detail {

template <class R>
void require_nonempty(const Sequence<R>& s, const char* op) {
    if (s.empty()) throw std::invalid_argument(std::string(op) + ": empty sequence");
}

inline long last_index(std::size_t size) { return static_cast<long>(size) - 1; }

inline void require_index_pair(long m, long n, std::size_t size, const char* op) {
    if (m < 0 || m > n) throw std::invalid_argument(std::string(op) + ": requires 0 <= m <= n");
    if (n > last_index(size)) throw std::out_of_range(std::string(op) + ": n past end of sequence");
}

}  // namespace detail

template <RingElement R>
Sequence<R> forward_transform(const Sequence<R>& a) {
    detail::require_nonempty(a, "forward_transform");
    Sequence<R> b(a.size());
    for (long n = 0; n < static_cast<long>(a.size()); ++n) {
        R acc{};
        for (long k = 0; k <= n; ++k) acc = acc + a[k] * Rational(binomial(n, k));
        b[n] = std::move(acc);
    }
    return b;
}

template <RingElement R>
Sequence<R> inverse_transform(const Sequence<R>& b) {
    detail::require_nonempty(b, "inverse_transform");
    Sequence<R> a(b.size());
    for (long n = 0; n < static_cast<long>(b.size()); ++n) {
        R acc{};
        for (long k = 0; k <= n; ++k) {
            const Integer c = binomial(n, k);
            acc = acc + b[k] * Rational(alt_sign(n - k) > 0 ? c : Integer(-c));
        }
        a[n] = std::move(acc);
    }
    return a;
}

template <RingElement R>
Sequence<R> signed_involution(const Sequence<R>& c) {
    detail::require_nonempty(c, "signed_involution");
    Sequence<R> d(c.size());
    for (long n = 0; n < static_cast<long>(c.size()); ++n) {
        R acc{};
        for (long k = 0; k <= n; ++k) {
            const Integer w = binomial(n, k);
            acc = acc + c[k] * Rational(alt_sign(k) > 0 ? w : Integer(-w));
        }
        d[n] = std::move(acc);
    }
    return d;
}

/// Triangular table of iterated backward differences nabla^m b_n for
/// 0 <= m <= n <= N. Entries with m > n do not exist.
template <RingElement R>
class DifferenceTable {
public:
    explicit DifferenceTable(const Sequence<R>& b) {
        detail::require_nonempty(b, "difference_table");
        rows_.push_back(b);
        for (std::size_t m = 1; m < b.size(); ++m) {
            const auto& prev = rows_.back();
            // Row m stores nabla^m b_n for n = m..N at position n - m.
            Sequence<R> row;
            row.reserve(prev.size() - 1);
            for (std::size_t i = 1; i < prev.size(); ++i) row.push_back(prev[i] - prev[i - 1]);
            rows_.push_back(std::move(row));
        }
    }

    /// Largest index N.
    long size_index() const { return detail::last_index(rows_.front().size()); }

    /// nabla^m b_n. Throws std::invalid_argument unless 0 <= m <= n and
    /// std::out_of_range for n > N.
    const R& at(long m, long n) const {
        detail::require_index_pair(m, n, rows_.front().size(), "DifferenceTable::at");
        return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n - m)];
    }

    /// nabla^m b_n for n = m..N.
    const Sequence<R>& row(long m) const { return rows_.at(static_cast<std::size_t>(m)); }

private:
    std::vector<Sequence<R>> rows_;
};

template <RingElement R>
DifferenceTable<R> difference_table(const Sequence<R>& b) {
    return DifferenceTable<R>(b);
}

/// (n nabla)^p applied to b: each application maps x_n to n (x_n - x_{n-1}),
/// with the n = 0 entry sent to zero.
template <RingElement R>
Sequence<R> n_nabla_power(Sequence<R> b, long p) {
    if (p < 0) throw std::invalid_argument("n_nabla_power: negative power");
    for (long step = 0; step < p; ++step) {
        Sequence<R> next(b.size());
        for (std::size_t n = 1; n < b.size(); ++n) {
            next[n] = (b[n] - b[n - 1]) * Rational(static_cast<long>(n));
        }
        b = std::move(next);
    }
    return b;
}

/// nabla^m b_n as sum_j C(n,j) C(j,n-m) (-1)^(n-j) b_j divided by C(n,m).
template <RingElement R>
R diff_via_alternating_sum(const Sequence<R>& b, long m, long n) {
    detail::require_index_pair(m, n, b.size(), "diff_via_alternating_sum");
    R acc{};
    for (long j = n - m; j <= n; ++j) {
        Integer w = binomial(n, j) * binomial(j, n - m);
        if (alt_sign(n - j) < 0) w = -w;
        acc = acc + b[j] * Rational(w);
    }
    return acc * Rational(Integer(1), binomial(n, m));
}

/// C(n,m) nabla^m b_n computed as (1/m!) sum_j s(m,j) ((n nabla)^j b)_n.
template <RingElement R>
R coeff_via_stirling(const Sequence<R>& b, long m, long n) {
    detail::require_index_pair(m, n, b.size(), "coeff_via_stirling");
    Sequence<R> prefix(b.begin(), b.begin() + n + 1);
    R acc{};
    for (long j = 0; j <= m; ++j) {
        if (j > 0) prefix = n_nabla_power(std::move(prefix), 1);
        const Integer s = stirling1_signed(m, j);
        if (s != 0) acc = acc + prefix[n] * Rational(s);
    }
    return acc * Rational(Integer(1), factorial(m));
}

/// sum_m C(n,m) d_m nabla^m b_n for every n. b and d must have equal length.
template <RingElement R>
Sequence<R> product_formula_rhs(const Sequence<R>& b, const Sequence<R>& d) {
    if (b.size() != d.size()) throw std::invalid_argument("product_formula_rhs: length mismatch");
    const DifferenceTable<R> table(b);
    Sequence<R> out(b.size());
    for (long n = 0; n < static_cast<long>(b.size()); ++n) {
        R acc{};
        for (long m = 0; m <= n; ++m) acc = acc + table.at(m, n) * (d[m] * Rational(binomial(n, m)));
        out[n] = std::move(acc);
    }
    return out;
}

/// sum_k C(n,k) a_k c_k evaluated through the product formula, with
/// b = forward(a) and d = inverse(c).
template <RingElement R>
Sequence<R> product_transform(const Sequence<R>& a, const Sequence<R>& c) {
    if (a.size() != c.size()) throw std::invalid_argument("product_transform: length mismatch");
    return product_formula_rhs(forward_transform(a), inverse_transform(c));
}

// Binomial polynomials p_n(x) = sum_k C(n,k) a_k x^k, three ways.

Sequence<RationalPolynomial> binomial_polynomial_direct(const Sequence<Rational>& a);

/// p_n = sum_j C(n,j) b_j x^j (1-x)^(n-j).
Sequence<RationalPolynomial> binomial_polynomial_via_b(const Sequence<Rational>& b);

/// p_n = sum_m C(n,m) nabla^m b_n (x-1)^m, the Taylor expansion about x = 1.
Sequence<RationalPolynomial> binomial_polynomial_taylor(const Sequence<Rational>& b);

}  // namespace bintrans
