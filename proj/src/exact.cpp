#include "bintrans/exact.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bintrans {

namespace {

bool is_digit_run(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (!is_digit_run(digits)) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    Integer v;
    // mpz_set_str rejects a leading '+'.
    if (v.set_str(std::string(s.front() == '+' ? s.substr(1) : s), 10) != 0) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));

    const auto num_text = text.substr(0, slash);
    const auto den_text = text.substr(slash + 1);
    if (!is_digit_run(den_text)) {
        throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(num_text), parse_integer(den_text));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative n");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer falling_factorial(long k, long m) {
    if (k < 0 || m < 0) throw std::invalid_argument("falling_factorial: negative argument");
    if (m > k) return 0;
    Integer r = 1;
    for (long i = 0; i < m; ++i) r *= (k - i);
    return r;
}

Rational int_pow(const Rational& base, long exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(num, den);
}

}  // namespace bintrans
