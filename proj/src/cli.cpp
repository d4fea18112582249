#include "polycoh/cli.hpp"

#include <chrono>
#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycoh/combinatorics.hpp"
#include "polycoh/duality.hpp"
#include "polycoh/error.hpp"
#include "polycoh/relations.hpp"

namespace polycoh::cli {

using Json = nlohmann::ordered_json;

namespace {

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string lengths;
    std::string a;
    std::string subscripts;
    Format format = Format::Text;
    bool explain = false;
    int max_n = kDefaultMaxSides;
    std::size_t max_basis = kDefaultMaxBasis;
    int search_bound = kDefaultRealizeBound;
};

std::int64_t parse_integer(std::string_view token) {
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
        throw Error(ErrorKind::InvalidLength, "malformed number '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text) {
    std::vector<std::string_view> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

// Genes and gees are printed largest element first.
Json descending(const IndexSet& set) {
    return Json(std::vector<int>(set.elements().rbegin(), set.elements().rend()));
}

std::string spaced(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
    return out.str();
}

std::string descending_str(const IndexSet& set) {
    std::ostringstream out;
    out << '{';
    for (auto it = set.elements().rbegin(); it != set.elements().rend(); ++it)
        out << (it == set.elements().rbegin() ? "" : ",") << *it;
    out << '}';
    return out.str();
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

LengthVector lengths_from(const RunConfig& config) {
    return LengthVector::normalize(parse_rationals(config.lengths));
}

// The gee from --a, or from the genetic code of --lengths; n is reported when
// lengths were given.
struct GeeSource {
    GeeParams a;
    std::optional<int> n;
};

GeeSource gee_from(const RunConfig& config, bool has_lengths, bool has_a) {
    if (has_lengths == has_a)
        throw Error(ErrorKind::ContractViolation, "give exactly one of --lengths and --a");
    if (has_a) return {parse_gee(config.a), std::nullopt};
    LengthVector lengths = lengths_from(config);
    GeneticCode code = genetic_code(lengths, config.max_n);
    return {monogenic_gee(code), lengths.n()};
}

int cmd_gene(const RunConfig& config, std::ostream& out) {
    LengthVector lengths = lengths_from(config);
    GeneticCode code = genetic_code(lengths, config.max_n);
    std::optional<GeeParams> a;
    if (code.monogenic()) a = monogenic_gee(code);

    switch (config.format) {
        case Format::Json: {
            Json doc;
            doc["n"] = code.n;
            doc["generic"] = 1;
            Json genes = Json::array();
            for (const auto& g : code.genes) genes.push_back(descending(g));
            doc["code"] = genes;
            doc["monogenic"] = code.monogenic() ? 1 : 0;
            doc["a"] = a ? Json(a->increments()) : Json(nullptr);
            emit_json(out, doc);
            break;
        }
        case Format::Csv:
            out << "n,monogenic,gene\n";
            for (const auto& g : code.genes)
                out << code.n << ',' << (code.monogenic() ? 1 : 0) << ','
                    << spaced(std::vector<int>(g.elements().rbegin(), g.elements().rend())) << '\n';
            break;
        case Format::Text:
            out << "n: " << code.n << '\n' << "generic: yes\n" << "code:";
            for (const auto& g : code.genes) out << ' ' << descending_str(g);
            out << '\n' << "monogenic: " << yes_no(code.monogenic()) << '\n';
            if (a) out << "a: " << a->str() << '\n';
            break;
    }
    return kOk;
}

int cmd_phi(const RunConfig& config, bool has_lengths, bool has_a, std::ostream& out) {
    GeeSource source = gee_from(config, has_lengths, has_a);
    const GeeParams& a = source.a;
    IndexSet j = parse_index_set(config.subscripts);
    int n = source.n.value_or(std::max({a.top() + 1, j.max() + 1, static_cast<int>(j.size()) + 3, 3}));
    TopMonomial monomial(j, n);

    const bool value = phi(a, monomial);
    const bool in_range = j.max() <= a.top();
    std::optional<ThetaVector> profile;
    if (in_range) profile = theta(j, a);
    const bool subgee = profile && in_staircase(*profile);
    std::vector<DualityTerm> terms;
    if (config.explain && profile && monomial.r() <= static_cast<int>(a.k()))
        terms = duality_terms(a, *profile);

    switch (config.format) {
        case Format::Json: {
            Json doc;
            doc["a"] = a.increments();
            doc["n"] = n;
            doc["J"] = j.elements();
            doc["theta"] = profile ? Json(profile->entries()) : Json(nullptr);
            doc["subgee"] = subgee ? 1 : 0;
            doc["phi"] = value ? 1 : 0;
            if (config.explain) {
                Json list = Json::array();
                for (const auto& t : terms) list.push_back(Json{{"B", t.b.entries()}, {"term", t.value ? 1 : 0}});
                doc["terms"] = list;
            }
            emit_json(out, doc);
            break;
        }
        case Format::Csv:
            out << "a,n,J,theta,subgee,phi\n"
                << spaced(a.increments()) << ',' << n << ',' << spaced(j.elements()) << ','
                << (profile ? spaced(profile->entries()) : "") << ',' << (subgee ? 1 : 0) << ','
                << (value ? 1 : 0) << '\n';
            break;
        case Format::Text:
            out << "phi: " << (value ? 1 : 0) << '\n'
                << "theta: " << (profile ? profile->str() : "undefined") << '\n'
                << "subgee: " << yes_no(subgee) << '\n';
            if (config.explain) {
                out << "B:";
                for (const auto& t : terms) out << ' ' << t.b.str() << "->" << (t.value ? 1 : 0);
                out << '\n';
            }
            break;
    }
    return kOk;
}

int cmd_table(const RunConfig& config, std::ostream& out) {
    GeeParams a = parse_gee(config.a);
    struct Row {
        ThetaVector t;
        bool value;
    };
    std::vector<Row> rows;
    for (int total = 0; total <= static_cast<int>(a.k()); ++total)
        for_each_composition(total, a.k(), [&](const ThetaVector& t) {
            for (std::size_t i = 0; i < a.k(); ++i)
                if (t[i] > a[i]) return;
            if (!in_staircase(t)) return;
            if (rows.size() >= config.max_basis)
                throw Error(ErrorKind::SizeLimit, "table exceeds " + std::to_string(config.max_basis) + " rows");
            rows.push_back({t, phi_by_theta(a, t)});
        });

    switch (config.format) {
        case Format::Json: {
            Json list = Json::array();
            for (const auto& r : rows) list.push_back(Json{{"T", r.t.entries()}, {"phi", r.value ? 1 : 0}});
            emit_json(out, Json{{"a", a.increments()}, {"rows", list}});
            break;
        }
        case Format::Csv:
            out << "T,phi\n";
            for (const auto& r : rows) out << spaced(r.t.entries()) << ',' << (r.value ? 1 : 0) << '\n';
            break;
        case Format::Text:
            for (const auto& r : rows) out << "phi(Y" << r.t.str() << ") = " << (r.value ? 1 : 0) << '\n';
            break;
    }
    return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    GeeParams a = parse_gee(config.a);
    VerifyResult result = verify_relations(a, config.max_basis);
    const bool passed = !result.offending;
    switch (config.format) {
        case Format::Json:
            emit_json(out, Json{{"a", a.increments()},
                                {"relations", result.relations},
                                {"passed", passed ? 1 : 0},
                                {"offending", passed ? Json(nullptr) : Json(result.offending->elements())}});
            break;
        case Format::Csv:
            out << "a,relations,passed,offending\n"
                << spaced(a.increments()) << ',' << result.relations << ',' << (passed ? 1 : 0) << ','
                << (passed ? "" : spaced(result.offending->elements())) << '\n';
            break;
        case Format::Text:
            if (passed)
                out << "all " << result.relations << " relations annihilated\n";
            else
                out << "relation R_I not annihilated for I = " << result.offending->str() << '\n';
            break;
    }
    return passed ? kOk : kCheckFailed;
}

int cmd_oracle(const RunConfig& config, std::ostream& out) {
    GeeParams a = parse_gee(config.a);
    const auto start = std::chrono::steady_clock::now();
    DualityReport report = cross_validate(a, config.max_basis);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    const bool have_oracle = report.oracle_phi.size() == report.basis.size();

    switch (config.format) {
        case Format::Json: {
            Json values = Json::array();
            for (std::size_t i = 0; i < report.basis.size(); ++i)
                values.push_back(Json{{"J", report.basis[i].elements()},
                                      {"oracle", have_oracle ? Json(report.oracle_phi[i] ? 1 : 0) : Json(nullptr)},
                                      {"formula", report.formula_phi[i] ? 1 : 0}});
            emit_json(out, Json{{"a", a.increments()},
                                {"basis", report.basis.size()},
                                {"rank", report.rank},
                                {"nullity", report.nullity},
                                {"agree", report.agree ? 1 : 0},
                                {"elapsed_ms", elapsed},
                                {"values", values}});
            break;
        }
        case Format::Csv:
            out << "J,oracle,formula\n";
            for (std::size_t i = 0; i < report.basis.size(); ++i)
                out << spaced(report.basis[i].elements()) << ','
                    << (have_oracle ? (report.oracle_phi[i] ? "1" : "0") : "") << ','
                    << (report.formula_phi[i] ? 1 : 0) << '\n';
            break;
        case Format::Text:
            out << "a: " << a.str() << '\n'
                << "basis: " << report.basis.size() << '\n'
                << "rank: " << report.rank << '\n'
                << "nullity: " << report.nullity << '\n'
                << "agree: " << (report.agree ? "true" : "false") << '\n'
                << "elapsed_ms: " << elapsed << '\n';
            break;
    }
    return report.agree ? kOk : kCheckFailed;
}

int cmd_realize(const RunConfig& config, std::ostream& out) {
    GeeParams a = parse_gee(config.a);
    LengthVector lengths = realize_gee(a, config.search_bound, config.max_n);
    std::vector<std::int64_t> values;
    for (const auto& l : lengths.lengths()) values.push_back(l.numerator());
    const IndexSet gene = a.gee().with(lengths.n());

    switch (config.format) {
        case Format::Json:
            emit_json(out, Json{{"a", a.increments()}, {"n", lengths.n()}, {"lengths", values}, {"gene", descending(gene)}});
            break;
        case Format::Csv: {
            out << "n,lengths,gene\n" << lengths.n() << ',';
            for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
            out << ',' << spaced(std::vector<int>(gene.elements().rbegin(), gene.elements().rend())) << '\n';
            break;
        }
        case Format::Text:
            out << "lengths: ";
            for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
            out << '\n' << "n: " << lengths.n() << '\n' << "gene: " << descending_str(gene) << '\n';
            break;
    }
    return kOk;
}

}  // namespace

std::vector<Rational> parse_rationals(std::string_view text) {
    std::vector<Rational> out;
    for (auto token : split(text)) {
        auto slash = token.find('/');
        std::int64_t numerator = parse_integer(token.substr(0, slash));
        std::int64_t denominator = 1;
        if (slash != std::string_view::npos) denominator = parse_integer(token.substr(slash + 1));
        if (denominator <= 0)
            throw Error(ErrorKind::InvalidLength, "denominator must be positive in '" + std::string(token) + "'");
        out.emplace_back(numerator, denominator);
    }
    return out;
}

std::vector<int> parse_ints(std::string_view text) {
    std::vector<int> out;
    for (auto token : split(text)) {
        std::int64_t value = 0;
        try {
            value = parse_integer(token);
        } catch (const Error&) {
            throw Error(ErrorKind::ContractViolation, "malformed integer '" + std::string(token) + "'");
        }
        if (value < 1 || value > 1'000'000)
            throw Error(ErrorKind::ContractViolation, "expected a positive integer, got '" + std::string(token) + "'");
        out.push_back(static_cast<int>(value));
    }
    return out;
}

GeeParams parse_gee(std::string_view text) { return GeeParams(parse_ints(text)); }

IndexSet parse_index_set(std::string_view text) { return IndexSet(parse_ints(text)); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mod-2 Poincare duality data for monogenic planar polygon spaces", "polycoh"};
    app.require_subcommand(1, 1);
    RunConfig config;

    std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--max-n", config.max_n, "Refuse subset enumeration above this many sides");
        sub->add_option("--max-basis", config.max_basis, "Refuse bases with more subgees than this");
    };

    auto* gene = app.add_subcommand("gene", "Genetic code of a length vector");
    gene->add_option("--lengths", config.lengths, "Side lengths, p or p/q, comma separated")->required();
    add_common(gene);

    auto* phi_cmd = app.add_subcommand("phi", "Evaluate phi on one top monomial");
    auto* phi_lengths = phi_cmd->add_option("--lengths", config.lengths, "Side lengths");
    auto* phi_a = phi_cmd->add_option("--a", config.a, "Gee increments a_1,...,a_k");
    phi_cmd->add_option("--J", config.subscripts, "V-subscripts, comma separated; empty for none")->required();
    phi_cmd->add_flag("--explain", config.explain, "List the admissible B tuples");
    add_common(phi_cmd);

    std::vector<CLI::App*> by_a;
    for (auto [name, help] : {std::pair{"table", "phi on every feasible theta class"},
                              std::pair{"verify", "Check every relation with the formula alone"},
                              std::pair{"oracle", "Cross-validate the formula against the GF(2) nullspace"},
                              std::pair{"realize", "Search for a length vector with the given single gee"}}) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--a", config.a, "Gee increments a_1,...,a_k")->required();
        add_common(sub);
        by_a.push_back(sub);
    }
    by_a.back()->add_option("--search-bound", config.search_bound, "Largest total length tried");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (gene->parsed()) return cmd_gene(config, out);
        if (phi_cmd->parsed()) return cmd_phi(config, phi_lengths->count() > 0, phi_a->count() > 0, out);
        if (by_a[0]->parsed()) return cmd_table(config, out);
        if (by_a[1]->parsed()) return cmd_verify(config, out);
        if (by_a[2]->parsed()) return cmd_oracle(config, out);
        return cmd_realize(config, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace polycoh::cli
