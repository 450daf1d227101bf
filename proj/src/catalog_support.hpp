#pragma once

// Shared machinery for the identity catalog definitions.

#include "bintrans/exact.hpp"
#include "bintrans/identities.hpp"
#include "bintrans/poly.hpp"
#include "bintrans/random_corpus.hpp"
#include "bintrans/sequences.hpp"
#include "bintrans/transform.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bintrans::catalog_detail {

/// Inputs for one verification run. Not shared between threads.
class CheckContext {
public:
    CheckContext(std::uint64_t seed, long n_min, long n_max, std::optional<Perturbation> perturbation)
        : seed_(seed), n_min_(n_min), n_max_(n_max), perturbation_(std::move(perturbation)) {}

    long n_min() const { return n_min_; }
    long n_max() const { return n_max_; }
    /// Sequence length covering indices 0..n_max.
    long length() const { return n_max_ + 1; }

    /// Random rational sequence of length(); stream separates a from c.
    const Sequence<Rational>& random(int trial, int stream);

    /// Builtin term with the perturbation applied.
    Rational term(const std::string& name, long k) const;
    Sequence<Rational> builtin(const std::string& name) const;

    /// forward_transform(a) with the "b" perturbation applied.
    template <RingElement R>
    Sequence<R> forward(const Sequence<R>& a) const {
        auto b = forward_transform(a);
        if (perturbation_ && perturbation_->target == "b" && perturbation_->index >= 0 &&
            perturbation_->index < static_cast<long>(b.size())) {
            auto& slot = b[static_cast<std::size_t>(perturbation_->index)];
            slot = slot + R(Rational{1});
        }
        return b;
    }

    Rational H(long k) const { return term("harmonic", k); }
    Rational H2(long k) const { return term("harmonic2", k); }
    Rational B(long k) const { return term("bernoulli", k); }
    Rational F(long k) const { return term("fibonacci", k); }
    Rational L(long k) const { return term("lucas", k); }

private:
    std::uint64_t seed_;
    long n_min_;
    long n_max_;
    std::optional<Perturbation> perturbation_;
    std::map<std::pair<int, int>, Sequence<Rational>> random_;
};

class Recorder {
public:
    template <class R>
    void expect(long n, const std::string& label, const R& lhs, const R& rhs) {
        ++checks_;
        if (lhs == rhs) return;
        ++failed_;
        if (!failures_.count(n)) failures_.emplace(n, IdentityFailure{n, label, to_string(lhs), to_string(rhs)});
    }

    std::size_t checks() const { return checks_; }
    std::size_t failed() const { return failed_; }
    std::vector<IdentityFailure> failures() const;

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::map<long, IdentityFailure> failures_;
};

using CheckFn = std::function<void(CheckContext&, Recorder&)>;

struct CaseDefinition {
    IdentityCase meta;
    CheckFn check;
};

void add_engine_cases(std::vector<CaseDefinition>& out);
void add_special_cases(std::vector<CaseDefinition>& out);

// Small helpers shared by the definitions.

inline Rational C(long n, long k) { return Rational(binomial(n, k)); }
inline Rational sign(long k) { return Rational(alt_sign(k)); }
inline Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }
inline Rational fact(long n) { return Rational(factorial(n)); }

inline std::string trial_label(int trial) { return "trial " + std::to_string(trial); }

/// (c0 + c1 x)^e
inline RationalPolynomial linear_pow(const Rational& c0, const Rational& c1, long e) {
    return pow(RationalPolynomial{c0, c1}, e);
}

inline IdentityCase rational_case(std::string id, std::string description, std::string eq, long min_n = 0) {
    return IdentityCase{std::move(id), std::move(description), std::move(eq), IdentityRing::rational, min_n,
                        kDefaultRationalMaxN};
}

inline IdentityCase polynomial_case(std::string id, std::string description, std::string eq, long min_n = 0) {
    return IdentityCase{std::move(id), std::move(description), std::move(eq), IdentityRing::polynomial, min_n,
                        kDefaultPolynomialMaxN};
}

}  // namespace bintrans::catalog_detail
