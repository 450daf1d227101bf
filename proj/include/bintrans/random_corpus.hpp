#pragma once

#include "bintrans/exact.hpp"
#include "bintrans/sequences.hpp"

#include <cstdint>
#include <random>

namespace bintrans {

/// Deterministic source of small random rationals: numerators in [-9, 9],
/// denominators in [1, 9]. The stream is fixed by (seed, trial, stream)
/// through std::seed_seq and std::mt19937_64, both of which are fully
/// specified, so output is identical across platforms.
class RationalSource {
public:
    RationalSource(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream);

    Rational next();
    /// Uniform-ish integer in [lo, hi]; modulo reduction keeps it portable.
    long next_int(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

/// x_0..x_{length-1}. Prefixes agree for every length, so a check at index
/// n does not depend on how long a sequence was requested.
Sequence<Rational> random_rational_sequence(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream,
                                            long length);

}  // namespace bintrans
