#pragma once

// Catalog of binomial-transform identities, each checked with exact
// equality over a range of n.
//
// Identities quantified over free sequences are checked against
// kRandomTrials seeded random rational sequences (see random_corpus.hpp)
// together with concrete special-number instances. Polynomial identities
// compare canonical coefficient vectors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bintrans {

inline constexpr int kRandomTrials = 25;
inline constexpr long kDefaultRationalMaxN = 25;
inline constexpr long kDefaultPolynomialMaxN = 15;

enum class IdentityRing { rational, polynomial };

std::string_view to_string(IdentityRing ring);

struct IdentityCase {
    std::string id;
    std::string description;
    std::string paper_eq;  ///< equation label, e.g. "(3.10)"
    IdentityRing ring = IdentityRing::rational;
    long min_n = 0;  ///< smallest n for which every term is defined
    long max_default_n = kDefaultRationalMaxN;
};

struct IdentityFailure {
    long n = 0;
    std::string label;  ///< which instance failed, e.g. "trial 3, m=2"
    std::string lhs;
    std::string rhs;
};

/// Outcome of one identity. failures holds the first failing check for
/// every failing n, in increasing n.
struct IdentityReport {
    std::string id;
    std::string paper_eq;
    long n_min = 0;
    long n_max = 0;
    std::size_t checks = 0;
    std::size_t failed_checks = 0;
    std::vector<IdentityFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Adds 1 to one term of a sequence consumed by the catalog, to show the
/// checks can fail. target is a builtin sequence name, or "b" for every
/// binomial transform b = forward(a) the catalog computes.
struct Perturbation {
    std::string target;
    long index = 0;

    /// Parses "NAME:INDEX". Throws std::invalid_argument.
    static Perturbation parse(std::string_view text);
};

struct VerifyOptions {
    std::optional<Perturbation> perturbation;
    unsigned jobs = 1;  ///< worker threads for verify_all
};

const std::vector<IdentityCase>& catalog();

/// nullptr when id is unknown.
const IdentityCase* find_identity(std::string_view id);

/// Checks identity id for every n in [min_n, n_max].
/// Throws std::invalid_argument for an unknown id or n_max < min_n.
IdentityReport verify(std::string_view id, long n_max, std::uint64_t seed,
                      const std::optional<Perturbation>& perturbation = std::nullopt);

/// Runs every catalog entry up to min(n_max, max_default_n). An entry whose
/// min_n exceeds that bound is reported as a pass with zero checks.
/// Reports come back in catalog order whatever the number of jobs.
std::vector<IdentityReport> verify_all(long n_max, std::uint64_t seed, const VerifyOptions& options = {});

/// Human-readable report, one line per identity plus failure details.
std::string render_text(const std::vector<IdentityReport>& reports);

/// JSON array of {id, paper_eq, range, status, checks, failures[]}.
std::string render_structured(const std::vector<IdentityReport>& reports);

}  // namespace bintrans
