#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bintrans/identities.hpp"
#include "bintrans/sequences.hpp"

#include <set>

using namespace bintrans;

namespace {

const IdentityReport& report_for(const std::vector<IdentityReport>& reports, std::string_view id) {
    for (const auto& r : reports) {
        if (r.id == id) return r;
    }
    FAIL("missing report " << id);
    return reports.front();
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& cat = catalog();
    CHECK(cat.size() >= 38);
    std::set<std::string> ids;
    for (const auto& c : cat) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.paper_eq.empty());
        CHECK_FALSE(c.description.empty());
        CHECK(c.min_n >= 0);
        CHECK(c.min_n <= c.max_default_n);
        if (c.ring == IdentityRing::polynomial) {
            CHECK(c.max_default_n == kDefaultPolynomialMaxN);
        } else {
            CHECK(c.max_default_n == kDefaultRationalMaxN);
        }
    }
    for (const char* id : {"thm1", "thm1-sym", "lemma1", "lemma2", "cor1", "cor2", "cor3", "cor4", "hb", "lag-h"}) {
        CHECK(ids.count(id) == 1);
    }
    CHECK(find_identity("thm1") != nullptr);
    CHECK(find_identity("no-such-id") == nullptr);
}

TEST_CASE("single identities pass") {
    const auto r = verify("thm1", 12, 42);
    CHECK(r.passed());
    CHECK(r.n_min == 0);
    CHECK(r.n_max == 12);
    CHECK(r.checks > 0);
    CHECK(r.failed_checks == 0);

    const auto lag = verify("lag-h", 6, 42);
    CHECK(lag.passed());
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(verify("no-such-id", 5, 42), std::invalid_argument);
    CHECK_THROWS_AS(verify("lemma3", 0, 42), std::invalid_argument);
    CHECK_THROWS_AS(verify("thm1", -1, 42), std::invalid_argument);
    CHECK_THROWS_AS(Perturbation::parse("b"), std::invalid_argument);
    CHECK_THROWS_AS(Perturbation::parse("b:x"), std::invalid_argument);
    CHECK_THROWS_AS(Perturbation::parse(":3"), std::invalid_argument);
    CHECK_THROWS_AS(Perturbation::parse("b:-1"), std::invalid_argument);
    const auto p = Perturbation::parse("harmonic:4");
    CHECK(p.target == "harmonic");
    CHECK(p.index == 4);
}

TEST_CASE("verify_all passes and small bounds give vacuous passes") {
    const auto reports = verify_all(8, 42);
    CHECK(reports.size() == catalog().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].id == catalog()[i].id);
        CHECK_MESSAGE(reports[i].passed(), reports[i].id);
    }

    const auto zero = verify_all(0, 42);
    const auto& lemma3 = report_for(zero, "lemma3");
    CHECK(lemma3.passed());
    CHECK(lemma3.checks == 0);
    CHECK(report_for(zero, "thm1").checks > 0);
}

TEST_CASE("verify_all is deterministic across runs and job counts") {
    const auto a = render_structured(verify_all(10, 7));
    const auto b = render_structured(verify_all(10, 7));
    VerifyOptions par;
    par.jobs = 4;
    const auto c = render_structured(verify_all(10, 7, par));
    CHECK(a == b);
    CHECK(a == c);
    CHECK(render_text(verify_all(10, 7)) == render_text(verify_all(10, 7, par)));
}

TEST_CASE("perturbing b is detected at the perturbed index") {
    for (long n : {0L, 3L, 11L}) {
        VerifyOptions opt;
        opt.perturbation = Perturbation{"b", n};
        const auto r = verify("thm1", 11, 42, opt.perturbation);
        REQUIRE_FALSE(r.passed());
        CHECK(r.failures.front().n == n);
    }
}

TEST_CASE("perturbing a builtin breaks an identity that uses it") {
    const auto r = verify("harm-def", 10, 42, Perturbation{"harmonic", 3});
    CHECK_FALSE(r.passed());
    CHECK(verify("harm-def", 10, 42).passed());
}

TEST_CASE("reading the Bernoulli factor as B_n breaks the harmonic-Bernoulli identity") {
    // The checked form pairs H_k with B_k. With a constant factor B_n the two
    // sides differ already at n = 2: 7/12 against -3/4.
    auto literal = [](long n) {
        Rational lhs, rhs = Rational(n % 2 ? -1 : 1) * harmonic(n) * bernoulli(n);
        for (long k = 0; k <= n; ++k) lhs += Rational(binomial(n, k)) * harmonic(k) * bernoulli(n);
        for (long m = 0; m < n; ++m) rhs -= Rational(m % 2 ? -1 : 1) * bernoulli(m) / Rational(n - m);
        return std::pair{lhs, rhs};
    };
    const auto [lhs, rhs] = literal(2);
    CHECK(lhs == Rational(Integer(7), Integer(12)));
    CHECK(rhs == Rational(Integer(-3), Integer(4)));
    CHECK(verify("hb", 20, 42).passed());
}

TEST_CASE("text and structured rendering") {
    IdentityReport pass{"x", "(1.1)", 0, 3, 10, 0, {}};
    IdentityReport fail{"y", "(2.2)", 1, 4, 8, 1, {{2, "trial 0", "1", "2"}}};
    const std::string text = render_text({pass, fail});
    CHECK(text.find("PASS x") != std::string::npos);
    CHECK(text.find("FAIL y") != std::string::npos);
    CHECK(text.find("1/2 identities passed") != std::string::npos);

    const std::string js = render_structured({fail});
    CHECK(js.find("\"status\": \"fail\"") != std::string::npos);
    CHECK(js.find("\"failed_checks\": 1") != std::string::npos);
    CHECK(js.find("\"case\": \"trial 0\"") != std::string::npos);
}
