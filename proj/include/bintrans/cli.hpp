#pragma once

// Command-line front end and the sequence file format.
//
// A sequence file is a JSON array. Each element is an integer, a string
// holding "p" or "p/q", or (polynomial ring) an array of such giving the
// coefficients in ascending degree:
//
//   [1, "3/2", "-1/6"]
//   [[1], [1, -1], [1, -2, "1/2"]]
//
// Printing emits integers that fit in a machine long as bare numbers and
// everything else as strings, so printing a parsed canonical file gives
// back the same text.

#include "bintrans/exact.hpp"
#include "bintrans/poly.hpp"
#include "bintrans/sequences.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bintrans::cli {

/// Malformed sequence file. what() names the offending index.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using SequenceData = std::variant<Sequence<Rational>, Sequence<RationalPolynomial>>;

/// Throws ParseError on malformed syntax, a zero denominator or an empty
/// entry list. Unreduced rationals are accepted and canonicalized.
SequenceData parse_sequence(std::string_view text);

std::string format_sequence(const Sequence<Rational>& s);
std::string format_sequence(const Sequence<RationalPolynomial>& s);
std::string format_sequence(const SequenceData& s);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bintrans::cli
