#include "bintrans/identities.hpp"

#include "catalog_support.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bintrans {

namespace catalog_detail {

const Sequence<Rational>& CheckContext::random(int trial, int stream) {
    const auto key = std::make_pair(trial, stream);
    auto it = random_.find(key);
    if (it == random_.end()) {
        it = random_.emplace(key, random_rational_sequence(seed_, static_cast<std::uint64_t>(trial),
                                                           static_cast<std::uint64_t>(stream), length()))
                 .first;
    }
    return it->second;
}

Rational CheckContext::term(const std::string& name, long k) const {
    Rational v = builtin_term(name, k);
    if (perturbation_ && perturbation_->target == name && perturbation_->index == k) v += Rational{1};
    return v;
}

Sequence<Rational> CheckContext::builtin(const std::string& name) const {
    Sequence<Rational> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (long k = 0; k < length(); ++k) out.push_back(term(name, k));
    return out;
}

std::vector<IdentityFailure> Recorder::failures() const {
    std::vector<IdentityFailure> out;
    out.reserve(failures_.size());
    for (const auto& [n, f] : failures_) out.push_back(f);
    return out;
}

}  // namespace catalog_detail

namespace {

using catalog_detail::CaseDefinition;

const std::vector<CaseDefinition>& definitions() {
    static const std::vector<CaseDefinition> defs = [] {
        std::vector<CaseDefinition> out;
        catalog_detail::add_engine_cases(out);
        catalog_detail::add_special_cases(out);
        return out;
    }();
    return defs;
}

const CaseDefinition& definition(std::string_view id) {
    for (const auto& d : definitions()) {
        if (d.meta.id == id) return d;
    }
    throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

IdentityReport run_case(const CaseDefinition& def, long n_max, std::uint64_t seed,
                        const std::optional<Perturbation>& perturbation) {
    IdentityReport report;
    report.id = def.meta.id;
    report.paper_eq = def.meta.paper_eq;
    report.n_min = def.meta.min_n;
    report.n_max = n_max;
    if (n_max < def.meta.min_n) return report;

    catalog_detail::CheckContext ctx(seed, def.meta.min_n, n_max, perturbation);
    catalog_detail::Recorder rec;
    def.check(ctx, rec);
    report.checks = rec.checks();
    report.failed_checks = rec.failed();
    report.failures = rec.failures();
    return report;
}

}  // namespace

std::string_view to_string(IdentityRing ring) {
    return ring == IdentityRing::rational ? "rational" : "polynomial";
}

Perturbation Perturbation::parse(std::string_view text) {
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
        throw std::invalid_argument("perturbation must look like NAME:INDEX");
    }
    Perturbation p;
    p.target = std::string(text.substr(0, colon));
    const auto digits = text.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p.index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("perturbation index '" + std::string(digits) + "' is not an integer");
    }
    if (p.index < 0) throw std::invalid_argument("perturbation index must be non-negative");
    if (p.target != "b" && !is_builtin(p.target)) {
        throw std::invalid_argument("perturbation target '" + p.target + "' is neither 'b' nor a builtin");
    }
    return p;
}

const std::vector<IdentityCase>& catalog() {
    static const std::vector<IdentityCase> cases = [] {
        std::vector<IdentityCase> out;
        for (const auto& d : definitions()) out.push_back(d.meta);
        return out;
    }();
    return cases;
}

const IdentityCase* find_identity(std::string_view id) {
    for (const auto& c : catalog()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

IdentityReport verify(std::string_view id, long n_max, std::uint64_t seed,
                      const std::optional<Perturbation>& perturbation) {
    const auto& def = definition(id);
    if (n_max < def.meta.min_n) {
        throw std::invalid_argument("identity '" + def.meta.id + "' needs n_max >= " +
                                    std::to_string(def.meta.min_n));
    }
    return run_case(def, n_max, seed, perturbation);
}

std::vector<IdentityReport> verify_all(long n_max, std::uint64_t seed, const VerifyOptions& options) {
    if (n_max < 0) throw std::invalid_argument("verify_all: n_max must be non-negative");
    const auto& defs = definitions();
    std::vector<IdentityReport> reports(defs.size());

    auto run_one = [&](std::size_t i) {
        const auto& def = defs[i];
        reports[i] = run_case(def, std::min(n_max, def.meta.max_default_n), seed, options.perturbation);
    };

    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(defs.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < defs.size(); ++i) run_one(i);
        return reports;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < defs.size(); i = next++) run_one(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return reports;
}

std::string render_text(const std::vector<IdentityReport>& reports) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.id << ' ' << r.paper_eq << " n=" << r.n_min << ".." << r.n_max
           << " checks=" << r.checks;
        if (!r.passed()) os << " failed=" << r.failed_checks;
        os << '\n';
        for (const auto& f : r.failures) {
            os << "    n=" << f.n << " [" << f.label << "] lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
        }
        if (!r.passed()) ++failed;
    }
    os << reports.size() - failed << '/' << reports.size() << " identities passed\n";
    return os.str();
}

std::string render_structured(const std::vector<IdentityReport>& reports) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json failures = nlohmann::ordered_json::array();
        for (const auto& f : r.failures) {
            failures.push_back({{"n", f.n}, {"case", f.label}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        }
        out.push_back({{"id", r.id},
                       {"paper_eq", r.paper_eq},
                       {"range", {r.n_min, r.n_max}},
                       {"status", r.passed() ? "pass" : "fail"},
                       {"checks", r.checks},
                       {"failed_checks", r.failed_checks},
                       {"failures", std::move(failures)}});
    }
    return out.dump(2) + "\n";
}

}  // namespace bintrans
