#include "bintrans/cli.hpp"

#include "bintrans/identities.hpp"
#include "bintrans/transform.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace bintrans::cli {

namespace {

using json = nlohmann::json;

Rational parse_scalar(const json& v, const std::string& where) {
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Rational(v.get<unsigned long>()) : Rational(v.get<long>());
    }
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const std::domain_error&) {
            throw ParseError("zero denominator at " + where);
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed rational '" + v.get<std::string>() + "' at " + where);
        }
    }
    if (v.is_number()) throw ParseError("non-integer number at " + where + "; write rationals as \"p/q\"");
    throw ParseError("expected an integer or \"p/q\" string at " + where);
}

json scalar_to_json(const Rational& r) {
    if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
    return r.to_string();
}

json poly_to_json(const RationalPolynomial& p) {
    json cs = json::array();
    for (const auto& c : p.coefficients()) cs.push_back(scalar_to_json(c));
    return cs;
}

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
    file << text;
}

// Where a subcommand gets its sequence from.
struct SourceOptions {
    std::string in_path;
    std::string builtin;
    long count = 0;

    void attach(CLI::App* cmd) {
        auto* in = cmd->add_option("--in", in_path, "Sequence file ('-' for stdin)");
        auto* b = cmd->add_option("--builtin", builtin, "Builtin sequence name");
        cmd->add_option("--count", count, "Number of builtin terms")->check(CLI::PositiveNumber);
        in->excludes(b);
        b->excludes(in);
    }

    SequenceData load() const {
        if (!in_path.empty()) return parse_sequence(read_file(in_path));
        if (builtin.empty()) throw CLI::ValidationError("one of --in or --builtin is required");
        if (!is_builtin(builtin)) throw CLI::ValidationError("unknown builtin '" + builtin + "'");
        if (count < 1) throw CLI::ValidationError("--builtin needs --count N");
        return builtin_sequence(builtin, count);
    }
};

template <class R>
std::string format_table(const Sequence<R>& b) {
    const auto table = difference_table(b);
    std::string out = "[\n";
    for (long m = 0; m <= table.size_index(); ++m) {
        out += "  " + format_sequence(table.row(m));
        if (m < table.size_index()) out += ",";
        out += "\n";
    }
    return out + "]\n";
}

Sequence<Rational> require_rational(const SequenceData& data, const char* what) {
    if (const auto* r = std::get_if<Sequence<Rational>>(&data)) return *r;
    throw CLI::ValidationError(std::string(what) + " needs a rational sequence");
}

}  // namespace

SequenceData parse_sequence(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed sequence file: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("sequence file must be a JSON array");
    if (doc.empty()) throw ParseError("empty entry list");

    if (doc.front().is_array()) {
        Sequence<RationalPolynomial> seq;
        for (std::size_t i = 0; i < doc.size(); ++i) {
            const auto& entry = doc[i];
            const std::string where = "index " + std::to_string(i);
            if (!entry.is_array()) throw ParseError("expected a coefficient array at " + where);
            if (entry.empty()) throw ParseError("empty coefficient array at " + where);
            std::vector<Rational> cs;
            for (std::size_t j = 0; j < entry.size(); ++j) {
                cs.push_back(parse_scalar(entry[j], where + ", coefficient " + std::to_string(j)));
            }
            seq.emplace_back(std::move(cs));
        }
        return seq;
    }

    Sequence<Rational> seq;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (doc[i].is_array()) throw ParseError("mixed scalar and polynomial entries at index " + std::to_string(i));
        seq.push_back(parse_scalar(doc[i], "index " + std::to_string(i)));
    }
    return seq;
}

std::string format_sequence(const Sequence<Rational>& s) {
    json out = json::array();
    for (const auto& r : s) out.push_back(scalar_to_json(r));
    return out.dump();
}

std::string format_sequence(const Sequence<RationalPolynomial>& s) {
    json out = json::array();
    for (const auto& p : s) out.push_back(poly_to_json(p));
    return out.dump();
}

std::string format_sequence(const SequenceData& s) {
    return std::visit([](const auto& seq) { return format_sequence(seq); }, s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact binomial transforms, difference tables and identity verification", "bintrans"};
    app.require_subcommand(1);

    // transform
    auto* transform_cmd = app.add_subcommand("transform", "Apply a binomial transform to a sequence");
    std::string op;
    std::string out_path;
    SourceOptions transform_src;
    transform_cmd->add_option("--op", op, "forward | inverse | signed")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse", "signed"}));
    transform_src.attach(transform_cmd);
    transform_cmd->add_option("--out", out_path, "Write the result here instead of stdout");

    // diff
    auto* diff_cmd = app.add_subcommand("diff", "Backward-difference table, or one entry with --m/--n");
    SourceOptions diff_src;
    std::optional<long> diff_m;
    std::optional<long> diff_n;
    diff_src.attach(diff_cmd);
    auto* m_opt = diff_cmd->add_option("--m", diff_m, "Difference order");
    auto* n_opt = diff_cmd->add_option("--n", diff_n, "Sequence index");
    m_opt->needs(n_opt);
    n_opt->needs(m_opt);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "Binomial polynomials p_n(x) = sum C(n,k) a_k x^k");
    std::string rep = "direct";
    std::string given = "a";
    SourceOptions poly_src;
    poly_cmd->add_option("--rep", rep, "direct | cor1 | cor2")->check(CLI::IsMember({"direct", "cor1", "cor2"}));
    poly_cmd->add_option("--given", given, "Whether the input is a_k or its transform b_n")
        ->check(CLI::IsMember({"a", "b"}));
    poly_src.attach(poly_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check catalog identities exactly");
    std::vector<std::string> ids;
    std::optional<long> max_n;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string verify_out;
    std::string perturb;
    unsigned jobs = 1;
    verify_cmd->add_option("--id", ids, "Identity ids (comma separated)")->delimiter(',');
    verify_cmd->add_option("--max-n", max_n, "Largest n to check")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", seed, "Seed for the random sequence corpus");
    verify_cmd->add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    verify_cmd->add_option("--out", verify_out, "Write the report here instead of stdout");
    verify_cmd->add_option("--perturb", perturb, "Add 1 to one term: NAME:INDEX, NAME a builtin or 'b'");
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "List the identity catalog");

    std::vector<std::string> argv_storage{"bintrans"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (transform_cmd->parsed()) {
            const auto data = transform_src.load();
            const auto result = std::visit(
                [&](const auto& seq) -> SequenceData {
                    if (op == "forward") return forward_transform(seq);
                    if (op == "inverse") return inverse_transform(seq);
                    return signed_involution(seq);
                },
                data);
            emit(format_sequence(result) + "\n", out_path, out);
            return kExitOk;
        }

        if (diff_cmd->parsed()) {
            const auto data = diff_src.load();
            std::visit(
                [&](const auto& seq) {
                    if (diff_m) {
                        out << to_string(difference_table(seq).at(*diff_m, *diff_n)) << '\n';
                    } else {
                        out << format_table(seq);
                    }
                },
                data);
            return kExitOk;
        }

        if (poly_cmd->parsed()) {
            const auto input = require_rational(poly_src.load(), "poly");
            const auto a = given == "a" ? input : inverse_transform(input);
            const auto b = given == "b" ? input : forward_transform(input);
            Sequence<RationalPolynomial> ps;
            if (rep == "direct") ps = binomial_polynomial_direct(a);
            else if (rep == "cor1") ps = binomial_polynomial_via_b(b);
            else ps = binomial_polynomial_taylor(b);
            out << format_sequence(ps) << '\n';
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            VerifyOptions options;
            options.jobs = jobs;
            if (!perturb.empty()) options.perturbation = Perturbation::parse(perturb);

            std::vector<IdentityReport> reports;
            if (ids.empty()) {
                reports = verify_all(max_n.value_or(kDefaultRationalMaxN), seed, options);
            } else {
                for (const auto& id : ids) {
                    const auto* entry = find_identity(id);
                    if (!entry) throw CLI::ValidationError("unknown identity '" + id + "'");
                    reports.push_back(verify(id, max_n.value_or(entry->max_default_n), seed, options.perturbation));
                }
            }
            emit(format == "structured" ? render_structured(reports) : render_text(reports), verify_out, out);
            for (const auto& r : reports) {
                if (!r.passed()) return kExitIdentityFailure;
            }
            return kExitOk;
        }

        if (catalog_cmd->parsed()) {
            for (const auto& c : catalog()) {
                out << c.id << '\t' << to_string(c.ring) << '\t' << c.paper_eq << '\t' << c.description << '\n';
            }
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bintrans::cli
