#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bintrans/poly.hpp"
#include "bintrans/random_corpus.hpp"

using namespace bintrans;
using Poly = RationalPolynomial;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

Poly random_poly(RationalSource& src) {
    const long degree = src.next_int(0, 12);
    std::vector<Rational> cs;
    for (long i = 0; i <= degree; ++i) cs.push_back(src.next());
    return Poly(std::move(cs));
}

}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
    CHECK(Poly{1, 0, 0}.degree() == 0);
    CHECK(Poly{0, 0}.is_zero());
    CHECK(Poly{}.coefficients().size() == 1);
    CHECK(Poly{1, 2} == Poly{1, 2, 0});
}

TEST_CASE("addition") {
    CHECK(Poly{1, 1} + Poly{1, -1} == Poly{2});
    CHECK(Poly{0, 0, 1} + Poly{} == Poly{0, 0, 1});
    CHECK(Poly{1, -2, q(1, 2)} + Poly{0, 2} == Poly{1, 0, q(1, 2)});
}

TEST_CASE("multiplication") {
    CHECK(Poly{1, -1} * Poly{1, 1} == Poly{1, 0, -1});
    const Poly p{3, q(-2, 7), 5};
    CHECK(p * Poly{1} == p);
    CHECK(pow(Poly{1, -1}, 2) * Poly::x() == Poly{0, 1, -2, 1});
    CHECK((p * Poly{}).is_zero());
}

TEST_CASE("powers") {
    CHECK(pow(Poly{1, -1}, 2) == Poly{1, -2, 1});
    CHECK(pow(Poly::x(), 0) == Poly{1});
    CHECK(pow(Poly{-1, 1}, 1) == Poly{-1, 1});
    CHECK_THROWS(pow(Poly::x(), -1));
}

TEST_CASE("evaluation") {
    CHECK(Poly{1, 0, -1}.eval(Rational{1}) == Rational{});
    CHECK(Poly{1, 2}.eval(q(1, 2)) == Rational{2});
    CHECK((-pow(Poly{1, -1}, 2)).eval(Rational{2}) == Rational{-1});
}

TEST_CASE("text form") {
    CHECK(Poly{1, -2, q(1, 2)}.to_string() == "[1, -2, 1/2]");
    CHECK(Poly{}.to_string() == "[0]");
}

TEST_CASE("ring axioms and evaluation homomorphism on random polynomials") {
    RationalSource src(11, 0, 0);
    for (int i = 0; i < 60; ++i) {
        const Poly a = random_poly(src), b = random_poly(src), c = random_poly(src);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        const Rational x0 = src.next();
        CHECK((a * b).eval(x0) == a.eval(x0) * b.eval(x0));
        CHECK((a + b).eval(x0) == a.eval(x0) + b.eval(x0));
    }
}

TEST_CASE("C(n,k) C(k,j) (-1)^k x^k summed over k equals (-1)^j C(n,j) x^j (1-x)^(n-j)") {
    for (long n = 0; n <= 12; ++n) {
        for (long j = 0; j <= n; ++j) {
            Poly lhs;
            for (long k = j; k <= n; ++k) {
                Rational c(Integer(binomial(n, k) * binomial(k, j)));
                if (k % 2) c = -c;
                lhs += Poly::monomial(k, c);
            }
            Rational lead(binomial(n, j));
            if (j % 2) lead = -lead;
            CHECK(lhs == Poly::monomial(j, lead) * pow(Poly{1, -1}, n - j));
        }
    }
}
