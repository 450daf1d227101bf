#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bintrans/random_corpus.hpp"
#include "bintrans/transform.hpp"

using namespace bintrans;
using Poly = RationalPolynomial;
using Seq = Sequence<Rational>;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

Seq random_seq(std::uint64_t trial, long length, std::uint64_t stream = 0) {
    return random_rational_sequence(99, trial, stream, length);
}

Rational signed_binom(long n, long k) {
    const Rational c(binomial(n, k));
    return (n - k) % 2 ? -c : c;
}

}  // namespace

TEST_CASE("forward and inverse on small sequences") {
    CHECK(forward_transform(Seq{1, 1, 1, 1}) == Seq{1, 2, 4, 8});
    CHECK(inverse_transform(Seq{1, 2, 4, 8}) == Seq{1, 1, 1, 1});
    CHECK(forward_transform(Seq{0, 1, 1, 2, 3, 5}) == Seq{0, 1, 3, 8, 21, 55});
    CHECK(inverse_transform(Seq{0, 1, 3, 8, 21, 55}) == Seq{0, 1, 1, 2, 3, 5});
    CHECK(forward_transform(Seq{5}) == Seq{5});
}

TEST_CASE("signed involution") {
    CHECK(signed_involution(Seq{1, 0, 0}) == Seq{1, 1, 1});
    CHECK(signed_involution(Seq{1, 1, 1}) == Seq{1, 0, 0});
}

TEST_CASE("empty sequences are rejected") {
    CHECK_THROWS_AS(forward_transform(Seq{}), std::invalid_argument);
    CHECK_THROWS_AS(inverse_transform(Seq{}), std::invalid_argument);
    CHECK_THROWS_AS(signed_involution(Seq{}), std::invalid_argument);
    CHECK_THROWS_AS(difference_table(Seq{}), std::invalid_argument);
    CHECK_THROWS_AS(binomial_polynomial_direct(Seq{}), std::invalid_argument);
}

TEST_CASE("round trips and involution on random sequences") {
    for (std::uint64_t t = 0; t < 40; ++t) {
        const Seq a = random_seq(t, 1 + static_cast<long>(t % 22));
        CHECK(inverse_transform(forward_transform(a)) == a);
        CHECK(forward_transform(inverse_transform(a)) == a);
        CHECK(signed_involution(signed_involution(a)) == a);
    }
}

TEST_CASE("transforms over polynomial sequences") {
    const Sequence<Poly> a{Poly{1}, Poly{0, 1}, Poly{1, 0, q(1, 2)}};
    CHECK(forward_transform(a) == Sequence<Poly>{Poly{1}, Poly{1, 1}, Poly{2, 2, q(1, 2)}});
    CHECK(inverse_transform(forward_transform(a)) == a);
    CHECK(signed_involution(signed_involution(a)) == a);
}

TEST_CASE("difference table") {
    const Seq b{1, 2, 4, 8};
    const auto table = difference_table(b);
    CHECK(table.size_index() == 3);
    CHECK(table.at(0, 3) == Rational{8});
    CHECK(table.at(1, 3) == Rational{4});
    CHECK(table.at(3, 3) == Rational{1});
    CHECK(table.row(2) == Seq{1, 2});
    CHECK_THROWS_AS(table.at(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(table.at(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(table.at(1, 4), std::out_of_range);

    Seq h;
    for (long n = 0; n <= 4; ++n) h.push_back(harmonic(n));
    const auto ht = difference_table(h);
    CHECK(ht.at(2, 4) == q(-1, 12));
    CHECK(ht.at(2, 3) == q(-1, 6));
}

TEST_CASE("nabla^m 2^n = 2^(n-m)") {
    Seq b;
    for (long n = 0; n <= 20; ++n) b.push_back(int_pow(Rational{2}, n));
    const auto table = difference_table(b);
    for (long n = 0; n <= 20; ++n) {
        for (long m = 0; m <= n; ++m) CHECK(table.at(m, n) == int_pow(Rational{2}, n - m));
    }
}

TEST_CASE("n nabla powers") {
    CHECK(n_nabla_power(Seq{1, 2, 4, 8}, 0) == Seq{1, 2, 4, 8});
    CHECK(n_nabla_power(Seq{1, 2, 4, 8}, 1) == Seq{0, 1, 4, 12});
    // sum_k C(n,k) k^2 = n(n+1) 2^(n-2): 0, 1, 6, 24.
    CHECK(n_nabla_power(Seq{1, 2, 4, 8}, 2) == Seq{0, 1, 6, 24});
    CHECK_THROWS_AS(n_nabla_power(Seq{1}, -1), std::invalid_argument);

    // sum_k C(n,k) k^p a_k = ((n nabla)^p b)_n on random a.
    for (std::uint64_t t = 0; t < 10; ++t) {
        const Seq a = random_seq(t, 14);
        const Seq b = forward_transform(a);
        for (long p = 0; p <= 6; ++p) {
            const Seq rhs = n_nabla_power(b, p);
            for (long n = 0; n < 14; ++n) {
                Rational lhs;
                for (long k = 0; k <= n; ++k) lhs += Rational(binomial(n, k)) * int_pow(Rational{k}, p) * a[k];
                CHECK(lhs == rhs[n]);
            }
        }
    }
}

TEST_CASE("iterated differences of b from sums over a") {
    for (std::uint64_t t = 0; t < 15; ++t) {
        const Seq a = random_seq(t, 16);
        const Seq b = forward_transform(a);
        const auto table = difference_table(b);
        for (long n = 0; n < 16; ++n) {
            for (long m = 0; m <= n; ++m) {
                Rational lhs;
                Rational falling_sum;
                for (long k = 0; k <= n; ++k) {
                    lhs += Rational(Integer(binomial(n, k) * binomial(k, m))) * a[k];
                    falling_sum += Rational(Integer(binomial(n, k) * falling_factorial(k, m))) * a[k];
                }
                CHECK(lhs == Rational(binomial(n, m)) * table.at(m, n));
                CHECK(falling_sum == Rational(Integer(factorial(m) * binomial(n, m))) * table.at(m, n));
            }
        }
    }
}

TEST_CASE("alternating-sum and Stirling routes match the table") {
    const Seq b{1, 2, 4, 8};
    CHECK(diff_via_alternating_sum(b, 1, 3) == Rational{4});
    CHECK(coeff_via_stirling(b, 2, 3) == Rational{6});
    CHECK_THROWS_AS(diff_via_alternating_sum(b, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(coeff_via_stirling(b, 0, 4), std::out_of_range);

    for (std::uint64_t t = 0; t < 10; ++t) {
        const Seq bt = random_seq(t, 14, 3);
        const auto table = difference_table(bt);
        for (long n = 0; n < 14; ++n) {
            for (long m = 0; m <= n; ++m) {
                CHECK(diff_via_alternating_sum(bt, m, n) == table.at(m, n));
                CHECK(coeff_via_stirling(bt, m, n) == Rational(binomial(n, m)) * table.at(m, n));
            }
        }
    }
}

TEST_CASE("product formula") {
    CHECK(product_transform(Seq{1, -1, 1}, Seq{1, 2, 4}) == Seq{1, -1, 1});
    CHECK_THROWS_AS(product_transform(Seq{1, 2}, Seq{1}), std::invalid_argument);

    for (std::uint64_t t = 0; t < 30; ++t) {
        const long len = 1 + static_cast<long>(t % 21);
        const Seq a = random_seq(t, len, 0);
        const Seq c = random_seq(t, len, 1);
        const Seq got = product_transform(a, c);

        // Symmetric form: d from the involution, with (-1)^m in the sum.
        const Seq b = forward_transform(a);
        const Seq d_sym = signed_involution(c);
        const auto table = difference_table(b);
        for (long n = 0; n < len; ++n) {
            Rational direct;
            for (long k = 0; k <= n; ++k) direct += Rational(binomial(n, k)) * a[k] * c[k];
            CHECK(got[n] == direct);

            Rational sym;
            for (long m = 0; m <= n; ++m) {
                const Rational term = Rational(binomial(n, m)) * d_sym[m] * table.at(m, n);
                sym += m % 2 ? -term : term;
            }
            CHECK(sym == direct);
        }
    }
}

TEST_CASE("sum_m C(n,m) nabla^m b_n = sum_j C(n,j) (-1)^(n-j) 2^j b_j") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        const Seq b = random_seq(t, 18, 5);
        const auto table = difference_table(b);
        for (long n = 0; n < 18; ++n) {
            Rational lhs, rhs;
            for (long m = 0; m <= n; ++m) lhs += Rational(binomial(n, m)) * table.at(m, n);
            for (long j = 0; j <= n; ++j) rhs += signed_binom(n, j) * int_pow(Rational{2}, j) * b[j];
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("binomial polynomials three ways") {
    CHECK(binomial_polynomial_via_b(Seq{1, 2, 4})[2] == Poly{1, 2, 1});

    Seq alt{0};
    for (long k = 1; k <= 3; ++k) alt.push_back(Rational(k % 2 ? -1 : 1) * q(1, k));
    CHECK(binomial_polynomial_direct(alt)[3].eval(Rational{1}) == q(-11, 6));

    for (std::uint64_t t = 0; t < 12; ++t) {
        const Seq a = random_seq(t, 14, 2);
        const Seq b = forward_transform(a);
        const auto direct = binomial_polynomial_direct(a);
        CHECK(binomial_polynomial_via_b(b) == direct);
        CHECK(binomial_polynomial_taylor(b) == direct);
        for (long n = 0; n < 14; ++n) CHECK(direct[n].eval(Rational{1}) == b[n]);
    }
}
