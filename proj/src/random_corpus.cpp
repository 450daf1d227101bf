#include "bintrans/random_corpus.hpp"

#include <stdexcept>

namespace bintrans {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

}  // namespace

RationalSource::RationalSource(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream)
    : engine_(make_engine(seed, trial, stream)) {}

long RationalSource::next_int(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("next_int: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rational RationalSource::next() {
    const long num = next_int(-9, 9);
    const long den = next_int(1, 9);
    return Rational(Integer(num), Integer(den));
}

Sequence<Rational> random_rational_sequence(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream,
                                            long length) {
    if (length < 0) throw std::invalid_argument("random_rational_sequence: negative length");
    RationalSource source(seed, trial, stream);
    Sequence<Rational> out;
    out.reserve(static_cast<std::size_t>(length));
    for (long i = 0; i < length; ++i) out.push_back(source.next());
    return out;
}

}  // namespace bintrans
