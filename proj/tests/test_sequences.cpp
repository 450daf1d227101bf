#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bintrans/sequences.hpp"

#include <thread>

using namespace bintrans;
using Poly = RationalPolynomial;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

}  // namespace

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == Rational{});
    CHECK(harmonic(3) == q(11, 6));
    CHECK(harmonic(4) == q(25, 12));
    CHECK(harmonic2(0) == Rational{});
    CHECK(harmonic2(2) == q(5, 4));
    CHECK(harmonic2(3) == q(49, 36));
    CHECK_THROWS(harmonic(-1));
}

TEST_CASE("alternating reciprocal sum gives H_n") {
    for (long n = 1; n <= 30; ++n) {
        Rational sum;
        for (long k = 1; k <= n; ++k) {
            const Rational t = Rational(binomial(n, k)) * q(1, k);
            sum += (k % 2) ? t : -t;
        }
        CHECK(sum == harmonic(n));
    }
}

TEST_CASE("Bernoulli numbers") {
    // Frozen from the series of t/(e^t - 1).
    const Rational expected[] = {1, q(-1, 2), q(1, 6), 0, q(-1, 30), 0, q(1, 42), 0, q(-1, 30), 0, q(5, 66)};
    for (long n = 0; n <= 10; ++n) CHECK(bernoulli(n) == expected[n]);
}

TEST_CASE("Bernoulli reflection sum") {
    for (long n = 0; n <= 30; ++n) {
        Rational sum;
        for (long k = 0; k <= n; ++k) sum += Rational(binomial(n, k)) * bernoulli(k);
        CHECK(sum == (n % 2 ? -bernoulli(n) : bernoulli(n)));
    }
}

TEST_CASE("Fibonacci and Lucas") {
    CHECK(fibonacci(6) == 8);
    CHECK(fibonacci(-2) == -1);
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(-1) == 1);
    CHECK(lucas(4) == 7);
    CHECK(lucas(0) == 2);
    CHECK(lucas(-2) == 3);
    CHECK(lucas(-1) == -1);
    for (long n = -20; n <= 40; ++n) {
        CHECK(fibonacci(n) - fibonacci(n - 1) - fibonacci(n - 2) == 0);
        CHECK(lucas(n) - lucas(n - 1) - lucas(n - 2) == 0);
    }
    for (long n = 0; n <= 30; ++n) {
        const Integer sign = (n % 2) ? 1 : -1;  // -(-1)^n
        CHECK(fibonacci(-n) == sign * fibonacci(n));  // (-1)^(n+1) F_n
        CHECK(lucas(-n) == -sign * lucas(n));          // (-1)^n L_n
    }
}

TEST_CASE("Stirling numbers of the second kind") {
    CHECK(stirling2(0, 0) == Rational{1});
    CHECK(stirling2(3, 2) == Rational{3});
    CHECK(stirling2(4, 2) == Rational{7});
    CHECK(stirling2(0, 3) == Rational{});
    CHECK(stirling2(2, 5) == Rational{});
    for (long alpha = 0; alpha <= 12; ++alpha) {
        for (long n = 0; n <= 12; ++n) {
            Integer power_sum = 0;
            for (long k = 0; k <= n; ++k) {
                Integer p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(alpha));
                power_sum += (k % 2 ? -1 : 1) * binomial(n, k) * p;
            }
            const Rational s = stirling2(alpha, n);
            CHECK(s.is_integer());
            CHECK(s * Rational(factorial(n)) * Rational(n % 2 ? -1 : 1) == Rational(power_sum));
        }
    }
}

TEST_CASE("signed Stirling numbers of the first kind") {
    CHECK(stirling1_signed(2, 1) == -1);
    CHECK(stirling1_signed(3, 2) == -3);
    CHECK(stirling1_signed(3, 3) == 1);
    CHECK(stirling1_signed(0, 0) == 1);
    CHECK(stirling1_signed(3, 4) == 0);
    CHECK(stirling1_signed(3, -1) == 0);
    for (long m = 0; m <= 10; ++m) {
        for (long k = 0; k <= 20; ++k) {
            Integer sum = 0;
            Integer kj = 1;
            for (long j = 0; j <= m; ++j) {
                sum += stirling1_signed(m, j) * kj;
                kj *= k;
            }
            CHECK(sum == factorial(m) * binomial(k, m));
        }
    }
}

TEST_CASE("Laguerre polynomials") {
    CHECK(laguerre(0) == Poly{1});
    CHECK(laguerre(1) == Poly{1, -1});
    CHECK(laguerre(2) == Poly{1, -2, q(1, 2)});
    // (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}
    for (long n = 1; n <= 15; ++n) {
        const Poly lhs = laguerre(n + 1) * Rational(n + 1);
        const Poly rhs = Poly{Rational(2 * n + 1), -1} * laguerre(n) - laguerre(n - 1) * Rational(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("builtin registry") {
    CHECK(builtin_names().size() == 8);
    CHECK(builtin_sequence("ones", 3) == Sequence<Rational>{1, 1, 1});
    CHECK(builtin_sequence("reciprocal", 4) == Sequence<Rational>{0, 1, q(1, 2), q(1, 3)});
    CHECK(builtin_sequence("alt-harmonic", 4) == Sequence<Rational>{0, 1, q(-3, 2), q(11, 6)});
    CHECK(builtin_sequence("fibonacci", 6) == Sequence<Rational>{0, 1, 1, 2, 3, 5});
    CHECK(builtin_sequence("lucas", 4) == Sequence<Rational>{2, 1, 3, 4});
    for (const auto& name : builtin_names()) {
        const auto seq = builtin_sequence(name, 12);
        for (long k = 0; k < 12; ++k) CHECK(seq[k] == builtin_term(name, k));
    }
    CHECK_THROWS_AS(builtin_term("nope", 0), std::invalid_argument);
    CHECK_THROWS(builtin_sequence("ones", 0));
}

TEST_CASE("memoized generators agree under concurrent first use") {
    std::vector<std::thread> threads;
    std::vector<Rational> results(8);
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([t, &results] { results[t] = bernoulli(40 + t % 2) + harmonic(60); });
    }
    for (auto& th : threads) th.join();
    for (int t = 2; t < 8; ++t) CHECK(results[t] == results[t % 2]);
}
