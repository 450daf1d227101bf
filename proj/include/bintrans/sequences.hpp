#pragma once

// Generators for the special-number families: harmonic numbers of order
// one and two, Bernoulli numbers (B_1 = -1/2), Fibonacci and Lucas numbers
// over all integer indices, Stirling numbers of both kinds and Laguerre
// polynomials. All results are exact.
//
// Harmonic and Bernoulli values are memoized in process-wide prefix caches
// guarded by a mutex; the cache is never observable in results.

#include "bintrans/exact.hpp"
#include "bintrans/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bintrans {

template <class R>
using Sequence = std::vector<R>;

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
Rational harmonic(long n);

/// H_n^(2) = 1 + 1/4 + ... + 1/n^2, H_0^(2) = 0.
Rational harmonic2(long n);

/// Bernoulli numbers of t/(e^t - 1); B_0 = 1, B_1 = -1/2.
Rational bernoulli(long n);

/// F_0 = 0, F_1 = 1, extended to negative n by F_{-n} = (-1)^{n+1} F_n.
Integer fibonacci(long n);

/// L_0 = 2, L_1 = 1, extended to negative n by L_{-n} = (-1)^n L_n.
Integer lucas(long n);

/// S(alpha, n) from the alternating power sum
///   sum_k C(n,k) (-1)^k k^alpha = (-1)^n n! S(alpha, n), with 0^0 = 1.
/// Integer alpha >= 0 only.
Rational stirling2(long alpha, long n);

/// Signed Stirling numbers of the first kind: C(k,m) m! = sum_j s(m,j) k^j.
/// Zero outside 0 <= j <= m.
Integer stirling1_signed(long m, long j);

/// L_n(x) = sum_k C(n,k) (-x)^k / k!.
RationalPolynomial laguerre(long n);

/// Names accepted by builtin_term / builtin_sequence.
const std::vector<std::string>& builtin_names();

bool is_builtin(std::string_view name);

/// k-th term of a named builtin sequence:
///   ones         1, 1, 1, ...
///   harmonic     H_k
///   harmonic2    H_k^(2)
///   bernoulli    B_k
///   fibonacci    F_k
///   lucas        L_k
///   alt-harmonic (-1)^(k-1) H_k
///   reciprocal   0, 1, 1/2, 1/3, ...
/// Throws std::invalid_argument for an unknown name.
Rational builtin_term(std::string_view name, long k);

/// Terms 0..count-1 of a builtin.
Sequence<Rational> builtin_sequence(std::string_view name, long count);

}  // namespace bintrans
