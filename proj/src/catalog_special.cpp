// Catalog entries built on special numbers: harmonic, Bernoulli,
// Fibonacci, Lucas, Stirling and Laguerre.

#include "catalog_support.hpp"

namespace bintrans::catalog_detail {

namespace {

using Poly = RationalPolynomial;

struct Input {
    std::string label;
    Sequence<Rational> values;
};

Sequence<Rational> tabulate(long length, const std::function<Rational(long)>& f) {
    Sequence<Rational> out;
    out.reserve(static_cast<std::size_t>(length));
    for (long k = 0; k < length; ++k) out.push_back(f(k));
    return out;
}

std::vector<Input> random_c(CheckContext& ctx) {
    std::vector<Input> out;
    for (int t = 0; t < kRandomTrials; ++t) out.push_back({trial_label(t), ctx.random(t, 1)});
    return out;
}

std::string at_m(long m) { return "m=" + std::to_string(m); }

// Takes k = 0 to 0 for sequences with a 1/k factor.
Rational reciprocal(long k) { return k == 0 ? Rational{} : frac(1, k); }

void check_lemma3(CheckContext& ctx, Recorder& rec) {
    const auto a = tabulate(ctx.length(), [&](long k) { return sign(k) * ctx.term("reciprocal", k); });
    const auto table = difference_table(ctx.forward(a));
    for (long n = std::max(1L, ctx.n_min()); n <= ctx.n_max(); ++n) {
        for (long m = 1; m <= n; ++m) {
            Rational lhs;
            for (long k = m; k <= n; ++k) lhs += C(n, k) * C(k, m) * sign(k) / Rational(k);
            rec.expect(n, at_m(m), lhs, sign(m) / Rational(m));
            rec.expect(n, at_m(m) + " difference", C(n, m) * table.at(m, n), sign(m) / Rational(m));
        }
    }
}

// The identity concerns sequences indexed from k = 1, so c_0 = d_0 = 0 (and
// a_0 = b_0 = 0 in the plain version). For general c_0 the product formula
// adds the m = 0 term -H_n d_0, which is checked separately.
void check_recip_prop(CheckContext& ctx, Recorder& rec) {
    auto cs = random_c(ctx);
    cs.push_back({"harmonic", ctx.builtin("harmonic")});
    for (const auto& c : cs) {
        const auto d_general = signed_involution(c.values);
        auto from_one = c.values;
        from_one[0] = Rational{};
        const auto d = signed_involution(from_one);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            Rational lhs, rhs, rhs_general;
            for (long k = 1; k <= n; ++k) lhs += C(n, k) * sign(k) * c.values[k] / Rational(k);
            for (long m = 1; m <= n; ++m) {
                rhs += d[m] / Rational(m);
                rhs_general += d_general[m] / Rational(m);
            }
            rhs_general -= ctx.H(n) * d_general[0];
            rec.expect(n, c.label, lhs, rhs);
            rec.expect(n, c.label + " with c_0", lhs, rhs_general);
        }
    }
    // With c = H the pairing gives d_m = -1/m, so the sum is -H_n^(2).
    const auto h = ctx.builtin("harmonic");
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational lhs;
        for (long k = 1; k <= n; ++k) lhs += C(n, k) * sign(k) * h[k] / Rational(k);
        rec.expect(n, "harmonic closed form", lhs, -ctx.H2(n));
    }
    // Plain transform version: sum C(n,k) a_k / k = sum b_m / m.
    for (int t = 0; t < kRandomTrials; ++t) {
        auto a = ctx.random(t, 0);
        a[0] = Rational{};
        const auto b = ctx.forward(a);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            Rational lhs, rhs;
            for (long k = 1; k <= n; ++k) lhs += C(n, k) * a[k] / Rational(k);
            for (long m = 1; m <= n; ++m) rhs += b[m] / Rational(m);
            rec.expect(n, trial_label(t) + " forward", lhs, rhs);
        }
    }
}

void check_harm_def(CheckContext& ctx, Recorder& rec) {
    const auto a = tabulate(ctx.length(), [](long k) { return -sign(k) * reciprocal(k); });
    const auto b = ctx.forward(a);
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational lhs;
        for (long k = 1; k <= n; ++k) lhs += C(n, k) * sign(k - 1) / Rational(k);
        rec.expect(n, "sum", lhs, ctx.H(n));
        rec.expect(n, "transform", b[n], ctx.H(n));
    }
}

void check_harm_diff(CheckContext& ctx, Recorder& rec) {
    const auto h = ctx.builtin("harmonic");
    const auto table = difference_table(h);
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        rec.expect(n, at_m(0), table.at(0, n), ctx.H(n));
        for (long m = 1; m <= n; ++m) {
            const Rational coeff = C(n, m) * table.at(m, n);
            rec.expect(n, at_m(m), coeff, sign(m - 1) / Rational(m));
            Rational sum;
            for (long k = m; k <= n; ++k) sum += C(n, k) * C(k, m) * sign(k - 1) / Rational(k);
            rec.expect(n, at_m(m) + " sum", sum, coeff);
        }
    }
}

void check_harm_x(CheckContext& ctx, Recorder& rec) {
    const auto a = tabulate(ctx.length(), [](long k) { return -sign(k) * reciprocal(k); });
    const auto direct = binomial_polynomial_direct(a);
    const auto taylor = binomial_polynomial_taylor(ctx.builtin("harmonic"));
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Poly rhs(ctx.H(n));
        for (long k = 1; k <= n; ++k) rhs -= linear_pow(1, -1, k) * frac(1, k);
        rec.expect(n, "closed form", direct[n], rhs);
        rec.expect(n, "taylor", direct[n], taylor[n]);
    }
}

void check_harm_inv(CheckContext& ctx, Recorder& rec) {
    const auto b = ctx.forward(ctx.builtin("alt-harmonic"));
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational lhs;
        for (long k = 0; k <= n; ++k) lhs += C(n, k) * sign(k - 1) * ctx.H(k);
        rec.expect(n, "sum", lhs, ctx.term("reciprocal", n));
        rec.expect(n, "transform", b[n], ctx.term("reciprocal", n));
    }
}

void check_recip_diff(CheckContext& ctx, Recorder& rec) {
    const auto table = difference_table(ctx.builtin("reciprocal"));
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        for (long m = 0; m < n; ++m) rec.expect(n, at_m(m), C(n, m) * table.at(m, n), sign(m) / Rational(n - m));
        rec.expect(n, "m=n", table.at(n, n), sign(n - 1) * ctx.H(n));
    }
}

void check_harm_x_full(CheckContext& ctx, Recorder& rec) {
    const auto direct = binomial_polynomial_direct(ctx.builtin("alt-harmonic"));
    const auto taylor = binomial_polynomial_taylor(ctx.builtin("reciprocal"));
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Poly rhs = -(linear_pow(1, -1, n) * ctx.H(n));
        for (long j = 0; j < n; ++j) rhs += linear_pow(1, -1, j) * frac(1, n - j);
        rec.expect(n, "closed form", direct[n], rhs);
        rec.expect(n, "taylor", direct[n], taylor[n]);
    }
}

// Generic harmonic product identity:
//   sum C(n,k) (-1)^(k-1) H_k c_k = (-1)^(n-1) H_n d_n + sum_{m<n} (-1)^m d_m / (n-m)
Rational harmonic_product_rhs(const CheckContext& ctx, const Sequence<Rational>& d, long n) {
    Rational rhs = sign(n - 1) * ctx.H(n) * d[n];
    for (long m = 0; m < n; ++m) rhs += sign(m) * d[m] / Rational(n - m);
    return rhs;
}

void check_cor3(CheckContext& ctx, Recorder& rec) {
    auto cs = random_c(ctx);
    const long len = ctx.length();
    cs.push_back({"H_k/k", tabulate(len, [&](long k) { return ctx.H(k) * reciprocal(k); })});
    cs.push_back({"H_k/(k+1)", tabulate(len, [&](long k) { return ctx.H(k) / Rational(k + 1); })});
    for (long alpha = 0; alpha <= 3; ++alpha) {
        cs.push_back({"k^" + std::to_string(alpha), tabulate(len, [alpha](long k) { return int_pow(Rational(k), alpha); })});
    }
    cs.push_back({"F_k", ctx.builtin("fibonacci")});
    cs.push_back({"F_2k", tabulate(len, [&](long k) { return ctx.F(2 * k); })});
    cs.push_back({"(-1)^k B_k", tabulate(len, [&](long k) { return sign(k) * ctx.B(k); })});

    const auto alt_h = ctx.builtin("alt-harmonic");
    const auto b = ctx.forward(alt_h);
    for (const auto& c : cs) {
        const auto d = inverse_transform(c.values);
        const auto via_product = product_formula_rhs(b, d);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            Rational lhs;
            for (long k = 0; k <= n; ++k) lhs += C(n, k) * alt_h[k] * c.values[k];
            rec.expect(n, c.label, lhs, harmonic_product_rhs(ctx, d, n));
            rec.expect(n, c.label + " product formula", lhs, via_product[n]);
        }
    }
}

void check_harm2_pair(CheckContext& ctx, Recorder& rec) {
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational first, second;
        for (long k = 1; k <= n; ++k) first += C(n, k) * sign(k - 1) * ctx.H(k) / Rational(k);
        for (long k = 0; k <= n; ++k) second += C(n, k) * sign(k - 1) * ctx.H2(k);
        rec.expect(n, "H_k/k transform", first, ctx.H2(n));
        rec.expect(n, "inversion", ctx.H(n) / Rational(n), second);
    }
}

void check_h2_over_k(CheckContext& ctx, Recorder& rec) {
    const auto c = tabulate(ctx.length(), [&](long k) { return ctx.H(k) * reciprocal(k); });
    const auto d = inverse_transform(c);
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational lhs;
        for (long k = 1; k <= n; ++k) lhs += C(n, k) * sign(k - 1) * ctx.H(k) * ctx.H(k) / Rational(k);
        Rational rhs = ctx.H(n) * ctx.H2(n);
        for (long m = 0; m < n; ++m) rhs -= ctx.H2(m) / Rational(n - m);
        rec.expect(n, "identity", lhs, rhs);
        rec.expect(n, "pairing d_n", d[n], sign(n - 1) * ctx.H2(n));
    }
}

void check_h_over_k1(CheckContext& ctx, Recorder& rec) {
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational premise, lhs;
        for (long k = 0; k <= n; ++k) {
            premise += C(n, k) * sign(k - 1) * ctx.H(k) / Rational(k + 1);
            lhs += C(n, k) * sign(k - 1) * ctx.H(k) * ctx.H(k) / Rational(k + 1);
        }
        Rational rhs = ctx.H(n) * ctx.H(n) / Rational(n + 1);
        for (long m = 0; m < n; ++m) rhs -= ctx.H(m) / Rational((n - m) * (m + 1));
        rec.expect(n, "premise", ctx.H(n) / Rational(n + 1), premise);
        rec.expect(n, "identity", lhs, rhs);
    }
}

void check_stirling_harm(CheckContext& ctx, Recorder& rec) {
    for (long alpha = 0; alpha <= 6; ++alpha) {
        const std::string label = "alpha=" + std::to_string(alpha);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            Rational premise, lhs;
            for (long k = 0; k <= n; ++k) {
                premise += C(n, k) * fact(k) * stirling2(alpha, k);
                lhs += C(n, k) * sign(k - 1) * ctx.H(k) * int_pow(Rational(k), alpha);
            }
            Rational rhs = sign(n - 1) * fact(n) * ctx.H(n) * stirling2(alpha, n);
            for (long m = 0; m < n; ++m) rhs += sign(m) * fact(m) * stirling2(alpha, m) / Rational(n - m);
            rec.expect(n, label + " inversion", int_pow(Rational(n), alpha), premise);
            rec.expect(n, label, lhs, rhs);
        }
    }
}

void check_fib_pair(CheckContext& ctx, Recorder& rec) {
    const auto fib = ctx.builtin("fibonacci");
    const auto alt_fib = tabulate(ctx.length(), [&](long k) { return sign(k - 1) * fib[k]; });
    const auto doubled = ctx.forward(fib);
    const auto same = ctx.forward(alt_fib);
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational alt, plain;
        for (long k = 0; k <= n; ++k) {
            alt += C(n, k) * sign(k - 1) * ctx.F(k);
            plain += C(n, k) * ctx.F(k);
        }
        rec.expect(n, "alternating", alt, ctx.F(n));
        rec.expect(n, "F_2n", plain, ctx.F(2 * n));
        rec.expect(n, "alternating transform", same[n], ctx.F(n));
        rec.expect(n, "F_2n transform", doubled[n], ctx.F(2 * n));
    }
}

void check_hf(CheckContext& ctx, Recorder& rec) {
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational lhs;
        for (long k = 0; k <= n; ++k) lhs += C(n, k) * sign(k - 1) * ctx.H(k) * ctx.F(k);
        Rational rhs = ctx.H(n) * ctx.F(n);
        for (long m = 0; m < n; ++m) rhs -= ctx.F(m) / Rational(n - m);
        rec.expect(n, "identity", lhs, rhs);
    }
}

void check_hf2(CheckContext& ctx, Recorder& rec) {
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational lhs;
        for (long k = 0; k <= n; ++k) lhs += C(n, k) * sign(k - 1) * ctx.H(k) * ctx.F(2 * k);
        Rational rhs = sign(n - 1) * ctx.H(n) * ctx.F(n);
        for (long m = 0; m < n; ++m) rhs += sign(m) * ctx.F(m) / Rational(n - m);
        rec.expect(n, "identity", lhs, rhs);
    }
}

void check_bern_reflect(CheckContext& ctx, Recorder& rec) {
    const auto b = ctx.forward(ctx.builtin("bernoulli"));
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational sum;
        for (long k = 0; k <= n; ++k) sum += C(n, k) * ctx.B(k);
        rec.expect(n, "sum", sum, sign(n) * ctx.B(n));
        rec.expect(n, "transform", b[n], sign(n) * ctx.B(n));
    }
}

void check_hb(CheckContext& ctx, Recorder& rec) {
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational lhs;
        for (long k = 0; k <= n; ++k) lhs += C(n, k) * ctx.H(k) * ctx.B(k);
        Rational rhs = sign(n) * ctx.H(n) * ctx.B(n);
        for (long m = 0; m < n; ++m) rhs -= sign(m) * ctx.B(m) / Rational(n - m);
        rec.expect(n, "identity", lhs, rhs);
    }
}

void check_lag_h(CheckContext& ctx, Recorder& rec) {
    std::vector<Poly> lag;
    for (long k = 0; k < ctx.length(); ++k) lag.push_back(laguerre(k));
    const auto d = inverse_transform(lag);
    Sequence<Poly> alt_h;
    for (long k = 0; k < ctx.length(); ++k) alt_h.emplace_back(ctx.term("alt-harmonic", k));
    const auto via_product = product_formula_rhs(ctx.forward(alt_h), d);
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Poly lhs;
        for (long k = 0; k <= n; ++k) lhs += lag[k] * (C(n, k) * sign(k) * ctx.H(k));
        Poly rhs = Poly::monomial(n, ctx.H(n) / fact(n));
        for (long m = 0; m < n; ++m) rhs -= Poly::monomial(m, Rational{1} / (fact(m) * Rational(n - m)));
        rec.expect(n, "identity", lhs, rhs);
        rec.expect(n, "pairing d_n", d[n], Poly::monomial(n, sign(n) / fact(n)));
        // The product formula computes sum C(n,k) (-1)^(k-1) H_k L_k = -lhs.
        rec.expect(n, "product formula", -lhs, via_product[n]);
    }
}

// nabla^m x_n for a sequence defined at every integer index.
Rational bi_infinite_difference(const std::function<Rational(long)>& x, long m, long n) {
    Rational acc;
    for (long i = 0; i <= m; ++i) acc += C(m, i) * sign(i) * x(n - i);
    return acc;
}

void check_fib_diff(CheckContext& ctx, Recorder& rec) {
    for (const std::string name : {"fibonacci", "lucas"}) {
        const auto table = difference_table(ctx.builtin(name));
        const auto x = [&](long k) { return ctx.term(name, k); };
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            for (long m = 0; m <= n; ++m) rec.expect(n, name + " " + at_m(m), table.at(m, n), x(n - 2 * m));
            for (long m = 0; m <= n + 3; ++m) {
                rec.expect(n, name + " extended " + at_m(m), bi_infinite_difference(x, m, n), x(n - 2 * m));
            }
        }
    }
}

// sum C(n,k) (-1)^(k-1) X_k c_k = sign * sum C(n,m) d_m X_{n-2m}
// for X = F (sign +1) or X = L (sign -1).
void check_fibonacci_like_product(CheckContext& ctx, Recorder& rec, const std::string& name, int rhs_sign,
                                  const std::vector<Input>& cs) {
    const auto x = [&](long k) { return ctx.term(name, k); };
    const auto a = tabulate(ctx.length(), [&](long k) { return sign(k - 1) * x(k); });
    const auto b = ctx.forward(a);
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        rec.expect(n, "b_n", b[n], Rational(rhs_sign) * x(n));
    }
    for (const auto& c : cs) {
        const auto d = inverse_transform(c.values);
        const auto via_product = product_formula_rhs(b, d);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            Rational lhs, rhs;
            for (long k = 0; k <= n; ++k) lhs += C(n, k) * a[k] * c.values[k];
            for (long m = 0; m <= n; ++m) rhs += C(n, m) * d[m] * x(n - 2 * m);
            rhs *= Rational(rhs_sign);
            rec.expect(n, c.label, lhs, rhs);
            rec.expect(n, c.label + " product formula", lhs, via_product[n]);
        }
    }
}

void check_cor4(CheckContext& ctx, Recorder& rec) {
    auto cs = random_c(ctx);
    cs.push_back({"(-1)^k B_k", tabulate(ctx.length(), [&](long k) { return sign(k) * ctx.B(k); })});
    cs.push_back({"harmonic", ctx.builtin("harmonic")});
    check_fibonacci_like_product(ctx, rec, "fibonacci", 1, cs);
}

void check_bf(CheckContext& ctx, Recorder& rec) {
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational lhs, rhs, folded;
        for (long k = 0; k <= n; ++k) {
            lhs += C(n, k) * ctx.B(k) * ctx.F(k);
            rhs -= C(n, k) * ctx.B(k) * ctx.F(n - 2 * k);
            folded += C(n, k) * ctx.B(k) * (ctx.F(k) + ctx.F(n - 2 * k));
        }
        rec.expect(n, "identity", lhs, rhs);
        rec.expect(n, "rearranged", folded, Rational{});
    }
}

void check_lucas_analogue(CheckContext& ctx, Recorder& rec) {
    auto cs = random_c(ctx);
    cs.push_back({"(-1)^k B_k", tabulate(ctx.length(), [&](long k) { return sign(k) * ctx.B(k); })});
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        Rational premise;
        for (long k = 0; k <= n; ++k) premise += C(n, k) * sign(k - 1) * ctx.L(k);
        rec.expect(n, "premise", premise, -ctx.L(n));
    }
    check_fibonacci_like_product(ctx, rec, "lucas", -1, cs);
}

}  // namespace

void add_special_cases(std::vector<CaseDefinition>& out) {
    out.push_back({rational_case("lemma3", "sum_k C(n,k) C(k,m) (-1)^k / k = (-1)^m / m, 1 <= m <= n", "(3.1)/(3.2)", 1),
                   check_lemma3});
    out.push_back({rational_case("recip-prop", "sum C(n,k) (-1)^k c_k / k = sum d_m / m, d = signed(c)", "(3.3)", 1),
                   check_recip_prop});
    out.push_back({rational_case("harm-def", "sum_{k>=1} C(n,k) (-1)^(k-1) / k = H_n", "(3.4)"), check_harm_def});
    out.push_back({rational_case("harm-diff", "C(n,m) nabla^m H_n = (-1)^(m-1) / m for m >= 1", "(3.5)/(3.6)"),
                   check_harm_diff});
    out.push_back({polynomial_case("harm-x", "sum C(n,k) (-1)^(k-1) x^k / k = H_n - sum (1-x)^k / k", "(3.7)"),
                   check_harm_x});
    out.push_back({rational_case("harm-inv", "sum C(n,k) (-1)^(k-1) H_k = 1/n (0 at n = 0)", "(3.8)"), check_harm_inv});
    out.push_back({rational_case("recip-diff", "C(n,m) nabla^m (1/n) = (-1)^m/(n-m), nabla^n (1/n) = (-1)^(n-1) H_n",
                                 "(3.9)"),
                   check_recip_diff});
    out.push_back({polynomial_case("harm-x-full",
                                   "sum C(n,k) (-1)^(k-1) x^k H_k = sum_{j<n} (1-x)^j/(n-j) - (1-x)^n H_n", "Example 9"),
                   check_harm_x_full});
    out.push_back({rational_case("cor3", "sum C(n,k) (-1)^(k-1) H_k c_k = (-1)^(n-1) H_n d_n + sum (-1)^m d_m/(n-m)",
                                 "(3.10)"),
                   check_cor3});
    out.push_back({rational_case("harm2-pair", "sum C(n,k) (-1)^(k-1) H_k/k = H_n^(2) and its inversion H_n/n",
                                 "Example 10", 1),
                   check_harm2_pair});
    out.push_back({rational_case("h2-over-k", "sum C(n,k) (-1)^(k-1) H_k^2/k = H_n H_n^(2) - sum H_m^(2)/(n-m)",
                                 "(3.11)"),
                   check_h2_over_k});
    out.push_back({rational_case("h-over-k1", "sum C(n,k) (-1)^(k-1) H_k^2/(k+1) = H_n^2/(n+1) - sum H_m/((n-m)(m+1))",
                                 "(3.12)"),
                   check_h_over_k1});
    out.push_back({rational_case("stirling-harm",
                                 "sum C(n,k) (-1)^(k-1) H_k k^alpha via S(alpha,m), integer alpha 0..6", "(3.13)"),
                   check_stirling_harm});
    out.push_back({rational_case("fib-pair", "F_n = sum C(n,k) (-1)^(k-1) F_k and F_2n = sum C(n,k) F_k", "(3.14)"),
                   check_fib_pair});
    out.push_back({rational_case("hf", "sum C(n,k) (-1)^(k-1) H_k F_k = H_n F_n - sum F_m/(n-m)", "(3.15)"), check_hf});
    out.push_back({rational_case("hf2", "sum C(n,k) (-1)^(k-1) H_k F_2k = (-1)^(n-1) H_n F_n + sum (-1)^m F_m/(n-m)",
                                 "(3.16)"),
                   check_hf2});
    out.push_back({rational_case("bern-reflect", "(-1)^n B_n = sum C(n,k) B_k", "(3.17)"), check_bern_reflect});
    out.push_back({rational_case("hb", "sum C(n,k) H_k B_k = (-1)^n H_n B_n - sum (-1)^m B_m/(n-m)", "(3.18)"),
                   check_hb});
    out.push_back({polynomial_case("lag-h", "sum C(n,k) (-1)^k H_k L_k(x) = x^n H_n/n! - sum x^m/(m!(n-m))", "(3.19)"),
                   check_lag_h});
    out.push_back({rational_case("fib-diff", "nabla^m F_n = F_(n-2m) and nabla^m L_n = L_(n-2m), any m >= 0",
                                 "Section 3 (Fibonacci differences)"),
                   check_fib_diff});
    out.push_back({rational_case("cor4", "sum C(n,k) (-1)^(k-1) F_k c_k = sum C(n,m) d_m F_(n-2m)", "(3.20)"),
                   check_cor4});
    out.push_back({rational_case("bf", "sum C(n,k) B_k F_k = -sum C(n,m) B_m F_(n-2m)", "(3.21)"), check_bf});
    out.push_back({rational_case("lucas-analogue",
                                 "derived: sum C(n,k) (-1)^(k-1) L_k c_k = -sum C(n,m) d_m L_(n-2m)",
                                 "Section 3 (Lucas remark)"),
                   check_lucas_analogue});
}

}  // namespace bintrans::catalog_detail
