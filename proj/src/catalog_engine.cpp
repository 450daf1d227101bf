// Catalog entries for the transform engine: the power-sum and falling
// factorial lemmas, the product formula, and the polynomial identities.

#include "catalog_support.hpp"

namespace bintrans::catalog_detail {

namespace {

struct Input {
    std::string label;
    Sequence<Rational> values;
};

std::vector<Input> random_inputs(CheckContext& ctx, int stream) {
    std::vector<Input> out;
    for (int t = 0; t < kRandomTrials; ++t) out.push_back({trial_label(t), ctx.random(t, stream)});
    return out;
}

Sequence<Rational> tabulate(long length, const std::function<Rational(long)>& f) {
    Sequence<Rational> out;
    out.reserve(static_cast<std::size_t>(length));
    for (long k = 0; k < length; ++k) out.push_back(f(k));
    return out;
}

std::string at_m(const std::string& label, long m) { return label + ", m=" + std::to_string(m); }

// sum_k C(n,k) w(k) a_k
Rational weighted_binomial_sum(long n, const Sequence<Rational>& a, const std::function<Rational(long)>& w) {
    Rational acc;
    for (long k = 0; k <= n; ++k) acc += C(n, k) * w(k) * a[k];
    return acc;
}

void check_pow_sum(CheckContext& ctx, Recorder& rec) {
    auto inputs = random_inputs(ctx, 0);
    inputs.push_back({"ones", ctx.builtin("ones")});
    for (const auto& in : inputs) {
        auto op = ctx.forward(in.values);  // (n nabla)^p b, advanced one power per pass
        for (long p = 0; p <= ctx.n_max(); ++p) {
            for (long n = std::max(ctx.n_min(), p); n <= ctx.n_max(); ++n) {
                const Rational lhs = weighted_binomial_sum(n, in.values, [p](long k) { return int_pow(Rational(k), p); });
                rec.expect(n, in.label + ", p=" + std::to_string(p), lhs, op[n]);
            }
            op = n_nabla_power(std::move(op), 1);
        }
    }
}

void check_lemma1(CheckContext& ctx, Recorder& rec) {
    auto inputs = random_inputs(ctx, 0);
    inputs.push_back({"ones", ctx.builtin("ones")});
    for (const auto& in : inputs) {
        const auto table = difference_table(ctx.forward(in.values));
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            for (long m = 0; m <= n; ++m) {
                const Rational rhs = C(n, m) * table.at(m, n);
                const Rational binom_form = weighted_binomial_sum(n, in.values, [m](long k) { return Rational(binomial(k, m)); });
                const Rational falling_form =
                    weighted_binomial_sum(n, in.values, [m](long k) { return Rational(falling_factorial(k, m)); });
                rec.expect(n, at_m(in.label, m), binom_form, rhs);
                rec.expect(n, at_m(in.label, m) + " falling", falling_form, fact(m) * rhs);
            }
        }
    }
}

void check_lemma2(CheckContext& ctx, Recorder& rec) {
    for (const auto& in : random_inputs(ctx, 0)) {
        const auto b = ctx.forward(in.values);
        const auto table = difference_table(b);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            for (long m = 0; m <= n; ++m) {
                Rational alt;
                Rational factorial_form;
                for (long j = 0; j <= n; ++j) {
                    alt += C(n, j) * C(j, n - m) * sign(n - j) * b[j];
                    if (j >= n - m) factorial_form += sign(n - j) * b[j] / (fact(n - j) * fact(j - n + m));
                }
                const std::string label = at_m(in.label, m);
                rec.expect(n, label, C(n, m) * table.at(m, n), alt);
                rec.expect(n, label + " routine", diff_via_alternating_sum(b, m, n), table.at(m, n));
                rec.expect(n, label + " factorial form", fact(m) * factorial_form, table.at(m, n));
            }
        }
    }
}

void check_falling_2n(CheckContext& ctx, Recorder& rec) {
    const auto ones = ctx.builtin("ones");
    const auto table = difference_table(ctx.forward(ones));
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        for (long m = 0; m <= n; ++m) {
            const Rational lhs = weighted_binomial_sum(n, ones, [m](long k) { return Rational(falling_factorial(k, m)); });
            const Rational power = int_pow(Rational{2}, n - m);
            rec.expect(n, "m=" + std::to_string(m), lhs, fact(m) * C(n, m) * power);
            rec.expect(n, "nabla^m 2^n, m=" + std::to_string(m), table.at(m, n), power);
        }
    }
}

// Pairs (a, c) for the product formula: random ones plus the Fibonacci
// instance a = 1, c = F.
std::vector<std::pair<Input, Input>> product_inputs(CheckContext& ctx) {
    std::vector<std::pair<Input, Input>> out;
    for (int t = 0; t < kRandomTrials; ++t) {
        out.push_back({{trial_label(t), ctx.random(t, 0)}, {trial_label(t), ctx.random(t, 1)}});
    }
    out.push_back({{"ones", ctx.builtin("ones")}, {"fibonacci", ctx.builtin("fibonacci")}});
    out.push_back({{"trial 0", ctx.random(0, 0)}, {"ones", ctx.builtin("ones")}});
    return out;
}

void check_thm1(CheckContext& ctx, Recorder& rec) {
    for (const auto& [a, c] : product_inputs(ctx)) {
        const auto rhs = product_formula_rhs(ctx.forward(a.values), inverse_transform(c.values));
        const std::string label = a.label + " x " + c.label;
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            Rational lhs;
            for (long k = 0; k <= n; ++k) lhs += C(n, k) * a.values[k] * c.values[k];
            rec.expect(n, label, lhs, rhs[n]);
        }
    }
    // a = 1, c = F gives F_{2n}.
    const auto fib_rhs = product_formula_rhs(ctx.forward(ctx.builtin("ones")), inverse_transform(ctx.builtin("fibonacci")));
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) rec.expect(n, "F_2n", fib_rhs[n], ctx.F(2 * n));
}

void check_thm1_sym(CheckContext& ctx, Recorder& rec) {
    for (const auto& [a, c] : product_inputs(ctx)) {
        const auto d = signed_involution(c.values);
        const auto b = ctx.forward(a.values);
        const auto table = difference_table(b);
        const std::string label = a.label + " x " + c.label;
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            Rational lhs;
            Rational rhs;
            for (long k = 0; k <= n; ++k) lhs += C(n, k) * a.values[k] * c.values[k];
            for (long m = 0; m <= n; ++m) rhs += C(n, m) * sign(m) * d[m] * table.at(m, n);
            rec.expect(n, label, lhs, rhs);
            // c_n = sum_k C(n,k) (-1)^k d_k
            Rational back;
            for (long k = 0; k <= n; ++k) back += C(n, k) * sign(k) * d[k];
            rec.expect(n, label + " pairing", back, c.values[n]);
        }
    }
}

Sequence<Rational> alternating_minus_ones(long length) {
    return tabulate(length, [](long k) { return -sign(k); });  // (-1)^(k-1)
}

void check_cor1(CheckContext& ctx, Recorder& rec) {
    auto inputs = random_inputs(ctx, 0);
    inputs.push_back({"(-1)^(k-1)", alternating_minus_ones(ctx.length())});
    const auto x = RationalPolynomial::x();
    for (const auto& in : inputs) {
        const auto direct = binomial_polynomial_direct(in.values);
        const auto b = ctx.forward(in.values);
        const auto via_b = binomial_polynomial_via_b(b);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            rec.expect(n, in.label, direct[n], via_b[n]);
            // Evaluation at x = 1 recovers b_n.
            rec.expect(n, in.label + " at x=1", direct[n].eval(Rational{1}), b[n]);
        }
    }
}

void check_conv_xk(CheckContext& ctx, Recorder& rec) {
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        for (long j = 0; j <= n; ++j) {
            RationalPolynomial lhs;
            for (long k = j; k <= n; ++k) lhs += RationalPolynomial::monomial(k, C(n, k) * C(k, j) * sign(k));
            const auto rhs = RationalPolynomial::monomial(j, sign(j) * C(n, j)) * linear_pow(1, -1, n - j);
            const std::string label = "j=" + std::to_string(j);
            rec.expect(n, label, lhs, rhs);
            // Via the b-based form: a_k = C(k,j)(-1)^k has b_n = (-1)^n delta_{nj}.
            const auto a = tabulate(n + 1, [j](long k) { return C(k, j) * sign(k); });
            rec.expect(n, label + " via b", binomial_polynomial_via_b(ctx.forward(a))[n], rhs);
        }
    }
}

// Second-kind Stirling numbers by the triangular recurrence, independent of
// the alternating-sum definition.
Rational stirling2_by_recurrence(long alpha, long n) {
    std::vector<Rational> row{Rational{1}};  // alpha = 0: delta_{n0}
    for (long a = 1; a <= alpha; ++a) {
        std::vector<Rational> next(static_cast<std::size_t>(a) + 1);
        for (long k = 1; k <= a; ++k) {
            const Rational same = k < static_cast<long>(row.size()) ? row[k] : Rational{};
            next[k] = Rational(k) * same + row[k - 1];
        }
        row = std::move(next);
    }
    return n < static_cast<long>(row.size()) ? row[n] : Rational{};
}

constexpr long kMaxAlpha = 6;

void check_stirling2_def(CheckContext& ctx, Recorder& rec) {
    for (long alpha = 0; alpha <= kMaxAlpha; ++alpha) {
        const std::string label = "alpha=" + std::to_string(alpha);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            Rational lhs;
            for (long k = 0; k <= n; ++k) lhs += C(n, k) * sign(k) * int_pow(Rational(k), alpha);
            rec.expect(n, label, lhs, sign(n) * fact(n) * stirling2(alpha, n));
            rec.expect(n, label + " recurrence", stirling2(alpha, n), stirling2_by_recurrence(alpha, n));
            Rational inverted;
            for (long k = 0; k <= n; ++k) inverted += C(n, k) * fact(k) * stirling2(alpha, k);
            rec.expect(n, label + " inversion", int_pow(Rational(n), alpha), inverted);
        }
    }
}

void check_stirling2_x(CheckContext& ctx, Recorder& rec) {
    for (long alpha = 0; alpha <= kMaxAlpha; ++alpha) {
        const std::string label = "alpha=" + std::to_string(alpha);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            RationalPolynomial lhs_plus, lhs_minus, rhs_plus, rhs_minus;
            for (long k = 0; k <= n; ++k) {
                const Rational w = C(n, k) * int_pow(Rational(k), alpha);
                lhs_plus += RationalPolynomial::monomial(k, w);
                lhs_minus += RationalPolynomial::monomial(k, w * sign(k));
            }
            for (long j = 0; j <= n; ++j) {
                const Rational w = C(n, j) * fact(j) * stirling2(alpha, j);
                rhs_plus += RationalPolynomial::monomial(j, w) * linear_pow(1, 1, n - j);
                rhs_minus += RationalPolynomial::monomial(j, w * sign(j)) * linear_pow(1, -1, n - j);
            }
            rec.expect(n, label, lhs_plus, rhs_plus);
            rec.expect(n, label + " (1-x) form", lhs_minus, rhs_minus);
        }
    }
}

void check_x2_curious(CheckContext& ctx, Recorder& rec) {
    for (const auto& in : random_inputs(ctx, 0)) {
        const auto b = ctx.forward(in.values);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            const Rational lhs = weighted_binomial_sum(n, in.values, [](long k) { return int_pow(Rational{2}, k); });
            Rational rhs;
            for (long j = 0; j <= n; ++j) rhs += C(n, j) * sign(n - j) * int_pow(Rational{2}, j) * b[j];
            rec.expect(n, in.label, lhs, rhs);
        }
    }
}

void check_half_x(CheckContext& ctx, Recorder& rec) {
    for (const auto& in : random_inputs(ctx, 0)) {
        const auto b = ctx.forward(in.values);
        const auto bb = forward_transform(b);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            const Rational lhs = weighted_binomial_sum(n, in.values, [n](long k) { return int_pow(Rational{2}, n - k); });
            Rational rhs;
            for (long j = 0; j <= n; ++j) rhs += C(n, j) * b[j];
            rec.expect(n, in.label, lhs, rhs);
            rec.expect(n, in.label + " iterated", lhs, bb[n]);
        }
    }
}

void check_diffsum_eq(CheckContext& ctx, Recorder& rec) {
    for (const auto& in : random_inputs(ctx, 0)) {
        const auto b = ctx.forward(in.values);
        const auto table = difference_table(b);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            Rational diff_sum;
            for (long m = 0; m <= n; ++m) diff_sum += C(n, m) * table.at(m, n);
            Rational alt;
            for (long j = 0; j <= n; ++j) alt += C(n, j) * sign(n - j) * int_pow(Rational{2}, j) * b[j];
            const Rational at_two = weighted_binomial_sum(n, in.values, [](long k) { return int_pow(Rational{2}, k); });
            rec.expect(n, in.label, diff_sum, alt);
            rec.expect(n, in.label + " at x=2", at_two, diff_sum);
        }
    }
}

void check_cor2(CheckContext& ctx, Recorder& rec) {
    auto inputs = random_inputs(ctx, 0);
    inputs.push_back({"ones", ctx.builtin("ones")});
    for (const auto& in : inputs) {
        const auto direct = binomial_polynomial_direct(in.values);
        const auto taylor = binomial_polynomial_taylor(ctx.forward(in.values));
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) rec.expect(n, in.label, direct[n], taylor[n]);
    }
}

void check_neg_geom(CheckContext& ctx, Recorder& rec) {
    const auto a = alternating_minus_ones(ctx.length());
    const auto direct = binomial_polynomial_direct(a);
    const auto b = ctx.forward(a);
    const auto table = difference_table(b);
    const auto taylor = binomial_polynomial_taylor(b);
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        const auto closed = -linear_pow(1, -1, n);
        rec.expect(n, "direct", direct[n], closed);
        rec.expect(n, "taylor", taylor[n], closed);
        rec.expect(n, "b_n", b[n], n == 0 ? Rational{-1} : Rational{});
        for (long m = 0; m <= n; ++m) {
            rec.expect(n, "nabla^m b_n, m=" + std::to_string(m), table.at(m, n), m == n ? -sign(n) : Rational{});
        }
    }
}

void check_remark2(CheckContext& ctx, Recorder& rec) {
    for (const auto& in : random_inputs(ctx, 0)) {
        const auto b = signed_involution(in.values);
        const auto table = difference_table(b);
        const auto flipped = tabulate(ctx.length(), [&](long k) { return sign(k) * in.values[k]; });
        const auto lhs_minus_x = binomial_polynomial_direct(flipped);
        const auto lhs_x = binomial_polynomial_direct(in.values);
        const auto taylor = binomial_polynomial_taylor(b);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            rec.expect(n, in.label + " (-x)", lhs_minus_x[n], taylor[n]);
            RationalPolynomial rhs;
            for (long m = 0; m <= n; ++m) rhs += linear_pow(1, 1, m) * (C(n, m) * sign(m) * table.at(m, n));
            rec.expect(n, in.label + " (x+1)", lhs_x[n], rhs);
        }
    }
}

void check_remark3(CheckContext& ctx, Recorder& rec) {
    for (const auto& in : random_inputs(ctx, 0)) {
        const auto b = ctx.forward(in.values);
        const auto table = difference_table(b);
        for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
            for (long m = 0; m <= n; ++m) {
                const Rational direct = weighted_binomial_sum(n, in.values, [m](long k) { return Rational(binomial(k, m)); });
                rec.expect(n, at_m(in.label, m), coeff_via_stirling(b, m, n), C(n, m) * table.at(m, n));
                rec.expect(n, at_m(in.label, m) + " direct", coeff_via_stirling(b, m, n), direct);
            }
        }
    }
}

void check_triple_binom(CheckContext& ctx, Recorder& rec) {
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        for (long m = 0; m <= n; ++m) {
            for (long j = 0; j <= n; ++j) {
                Integer lhs = 0;
                for (long k = 0; k <= n; ++k) {
                    Integer t = binomial(n, k) * binomial(k, m) * binomial(k, j);
                    if (k % 2) lhs -= t;
                    else lhs += t;
                }
                Integer rhs = binomial(n, j) * binomial(j, n - m);
                if (n % 2) rhs = -rhs;
                rec.expect(n, "m=" + std::to_string(m) + ", j=" + std::to_string(j), Rational(lhs), Rational(rhs));
            }
        }
    }
}

void check_conv_delta(CheckContext& ctx, Recorder& rec) {
    for (long n = ctx.n_min(); n <= ctx.n_max(); ++n) {
        for (long j = 0; j <= n; ++j) {
            Rational lhs;
            for (long k = j; k <= n; ++k) lhs += C(n, k) * C(k, j) * sign(k);
            rec.expect(n, "j=" + std::to_string(j), lhs, j == n ? sign(n) : Rational{});
        }
    }
}

}  // namespace

void add_engine_cases(std::vector<CaseDefinition>& out) {
    out.push_back({rational_case("pow-sum", "sum C(n,k) k^p a_k = (n nabla)^p b_n, 0 <= p <= n", "(1.3)"),
                   check_pow_sum});
    out.push_back({rational_case("lemma1", "sum C(n,k) C(k,m) a_k = C(n,m) nabla^m b_n (falling-factorial form too)",
                                 "(1.6)/(1.7)"),
                   check_lemma1});
    out.push_back({rational_case("lemma2", "C(n,m) nabla^m b_n = sum C(n,j) C(j,n-m) (-1)^(n-j) b_j", "(1.8)"),
                   check_lemma2});
    out.push_back({rational_case("falling-2n", "sum C(n,k) k(k-1)..(k-m+1) = m! C(n,m) 2^(n-m)", "(1.9)"),
                   check_falling_2n});
    out.push_back({rational_case("thm1", "sum C(n,k) a_k c_k = sum C(n,m) d_m nabla^m b_n, d = inverse(c)",
                                 "(1.4)"),
                   check_thm1});
    out.push_back({rational_case("thm1-sym", "symmetric pairing: sum C(n,k) a_k c_k = sum C(n,m) (-1)^m d_m nabla^m b_n",
                                 "(1.5)"),
                   check_thm1_sym});
    out.push_back({polynomial_case("cor1", "p_n(x) = sum C(n,j) b_j x^j (1-x)^(n-j)", "(2.1)"), check_cor1});
    out.push_back({polynomial_case("conv-xk", "sum_k C(n,k) C(k,j) (-1)^k x^k = (-1)^j C(n,j) x^j (1-x)^(n-j)",
                                   "(2.2)"),
                   check_conv_xk});
    out.push_back({rational_case("stirling2-def",
                                 "sum C(n,k) (-1)^k k^alpha = (-1)^n n! S(alpha,n), integer alpha 0..6", "(2.3)"),
                   check_stirling2_def});
    out.push_back({polynomial_case("stirling2-x", "sum C(n,k) k^alpha x^k = sum C(n,j) j! S(alpha,j) x^j (1+x)^(n-j)",
                                   "(2.4)"),
                   check_stirling2_x});
    out.push_back({rational_case("x2-curious", "sum C(n,k) 2^k a_k = sum C(n,j) (-1)^(n-j) 2^j b_j", "Example 3"),
                   check_x2_curious});
    out.push_back({rational_case("half-x", "sum C(n,k) 2^(n-k) a_k = sum C(n,j) b_j", "Example 4"), check_half_x});
    out.push_back({rational_case("diffsum-eq", "sum C(n,m) nabla^m b_n = sum C(n,j) (-1)^(n-j) 2^j b_j", "(2.6)"),
                   check_diffsum_eq});
    out.push_back({polynomial_case("cor2", "p_n(x) = sum C(n,m) nabla^m b_n (x-1)^m", "(2.5)"), check_cor2});
    out.push_back({polynomial_case("neg-geom", "sum C(n,k) (-1)^(k-1) x^k = -(1-x)^n", "(2.7)"), check_neg_geom});
    out.push_back({polynomial_case("remark2", "signed transform b: sum C(n,k) a_k (-x)^k = sum C(n,m) nabla^m b_n (x-1)^m",
                                   "(4.1)"),
                   check_remark2});
    out.push_back({rational_case("remark3", "C(n,m) nabla^m b_n = (1/m!) sum_j s(m,j) (n nabla)^j b_n", "(4.2)"),
                   check_remark3});
    out.push_back({rational_case("triple-binom", "sum C(n,k) C(k,m) C(k,j) (-1)^k = (-1)^n C(n,j) C(j,n-m)",
                                 "Lemma 2 proof"),
                   check_triple_binom});
    out.push_back({rational_case("conv-delta", "sum_k C(n,k) C(k,j) (-1)^k = (-1)^n delta_nj", "Remark 1"),
                   check_conv_delta});
}

}  // namespace bintrans::catalog_detail
