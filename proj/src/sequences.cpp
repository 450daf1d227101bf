#include "bintrans/sequences.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace bintrans {

namespace {

// Grows a shared prefix x_0..x_N on demand; next(prefix) yields x_{N+1}.
class PrefixCache {
public:
    using Step = std::function<Rational(const std::vector<Rational>&)>;

    explicit PrefixCache(Step next) : next_(std::move(next)) {}

    Rational at(long n) {
        std::lock_guard lock(mutex_);
        while (static_cast<long>(values_.size()) <= n) values_.push_back(next_(values_));
        return values_[static_cast<std::size_t>(n)];
    }

private:
    Step next_;
    std::mutex mutex_;
    std::vector<Rational> values_;
};

void require_nonnegative(long n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

}  // namespace

Rational harmonic(long n) {
    require_nonnegative(n, "harmonic");
    static PrefixCache cache([](const std::vector<Rational>& h) {
        if (h.empty()) return Rational{};
        const long k = static_cast<long>(h.size());
        return h.back() + Rational(Integer(1), Integer(k));
    });
    return cache.at(n);
}

Rational harmonic2(long n) {
    require_nonnegative(n, "harmonic2");
    static PrefixCache cache([](const std::vector<Rational>& h) {
        if (h.empty()) return Rational{};
        const long k = static_cast<long>(h.size());
        return h.back() + Rational(Integer(1), Integer(k) * k);
    });
    return cache.at(n);
}

Rational bernoulli(long n) {
    require_nonnegative(n, "bernoulli");
    // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1 solved for B_m.
    static PrefixCache cache([](const std::vector<Rational>& b) {
        if (b.empty()) return Rational{1};
        const long m = static_cast<long>(b.size());
        Rational acc;
        for (long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
        return -acc / Rational(Integer(m + 1));
    });
    return cache.at(n);
}

Integer fibonacci(long n) {
    Integer r;
    const unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
    mpz_fib_ui(r.get_mpz_t(), m);
    if (n < 0 && m % 2 == 0) r = -r;
    return r;
}

Integer lucas(long n) {
    Integer r;
    const unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
    mpz_lucnum_ui(r.get_mpz_t(), m);
    if (n < 0 && m % 2 == 1) r = -r;
    return r;
}

Rational stirling2(long alpha, long n) {
    if (alpha < 0 || n < 0) throw std::invalid_argument("stirling2: negative argument");
    Rational sum;
    for (long k = 0; k <= n; ++k) {
        Rational term = Rational(binomial(n, k)) * int_pow(Rational(k), alpha);
        if (k % 2) sum -= term;
        else sum += term;
    }
    Rational r = sum / Rational(factorial(n));
    return n % 2 ? -r : r;
}

Integer stirling1_signed(long m, long j) {
    if (m < 0) throw std::invalid_argument("stirling1_signed: negative m");
    if (j < 0 || j > m) return 0;
    // Rows grow by s(r+1, i) = s(r, i-1) - r s(r, i).
    static std::mutex mutex;
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    std::lock_guard lock(mutex);
    while (static_cast<long>(rows.size()) <= m) {
        const auto& row = rows.back();
        const long r = static_cast<long>(rows.size()) - 1;
        std::vector<Integer> next(row.size() + 1, Integer(0));
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (i > 0) next[i] += row[i - 1];
            if (i < row.size()) next[i] -= row[i] * r;
        }
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
}

RationalPolynomial laguerre(long n) {
    require_nonnegative(n, "laguerre");
    std::vector<Rational> cs;
    cs.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        Rational c(binomial(n, k), factorial(k));
        cs.push_back(k % 2 ? -c : c);
    }
    return RationalPolynomial(std::move(cs));
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{
        "ones", "harmonic", "harmonic2", "bernoulli", "fibonacci", "lucas", "alt-harmonic", "reciprocal"};
    return names;
}

bool is_builtin(std::string_view name) {
    const auto& names = builtin_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Rational builtin_term(std::string_view name, long k) {
    if (name == "fibonacci") return Rational(fibonacci(k));
    if (name == "lucas") return Rational(lucas(k));
    if (!is_builtin(name)) throw std::invalid_argument("unknown builtin sequence '" + std::string(name) + "'");
    require_nonnegative(k, std::string(name).c_str());
    if (name == "ones") return Rational{1};
    if (name == "harmonic") return harmonic(k);
    if (name == "harmonic2") return harmonic2(k);
    if (name == "bernoulli") return bernoulli(k);
    if (name == "alt-harmonic") return k % 2 ? harmonic(k) : -harmonic(k);
    // reciprocal
    return k == 0 ? Rational{} : Rational(Integer(1), Integer(k));
}

Sequence<Rational> builtin_sequence(std::string_view name, long count) {
    if (count < 1) throw std::invalid_argument("builtin_sequence: count must be at least 1");
    Sequence<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) out.push_back(builtin_term(name, k));
    return out;
}

}  // namespace bintrans
