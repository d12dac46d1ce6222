#include "podpart/cli.hpp"

#include "podpart/bijections.hpp"
#include "podpart/congruences.hpp"
#include "podpart/counting.hpp"
#include "podpart/identities.hpp"
#include "podpart/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace podpart::cli {

namespace {

using nlohmann::json;

// Thrown for anything that should end the run with exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Artifact {
    std::string text;
    int exit_code = kExitPass;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + '"';
}

// ---------------------------------------------------------------------------
// reports

Artifact render_reports(const std::vector<VerificationReport>& reports, Format f)
{
    bool all_ok = true;
    for (const auto& r : reports)
        all_ok = all_ok && r.ok();
    std::ostringstream os;
    switch (f) {
    case Format::json: {
        auto arr = json::array();
        for (const auto& r : reports)
            arr.push_back(r.to_json());
        os << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "statement_id,status,n_max,k_max,failure_count,n,k,lhs,rhs\n";
        for (const auto& r : reports) {
            const std::string head = csv_field(r.statement_id) + ',' +
                                     std::string(status_name(r.status())) + ',' +
                                     std::to_string(r.n_max) + ',' + std::to_string(r.k_max) +
                                     ',' + std::to_string(r.failures.size());
            if (r.failures.empty())
                os << head << ",,,,\n";
            for (const auto& w : r.failures)
                os << head << ',' << w.n << ',' << w.k << ',' << to_decimal(w.lhs) << ','
                   << to_decimal(w.rhs) << '\n';
        }
        break;
    case Format::plain:
        for (const auto& r : reports)
            os << r.to_plain();
        os << "overall " << (all_ok ? "pass" : "fail") << '\n';
        break;
    }
    return {os.str(), all_ok ? kExitPass : kExitFailure};
}

// ---------------------------------------------------------------------------
// table

Artifact do_table(const RunConfig& c)
{
    auto id = counting::SequenceId::parse(c.sequence, c.sequence_k);
    if (!id)
        throw UsageError("unknown sequence: " + c.sequence);
    if (id->takes_k() && id->k < 1)
        throw UsageError(c.sequence + " needs --k >= 1");
    auto route = counting::parse_route(c.route);
    if (!route)
        throw UsageError("unknown route: " + c.route);
    if (*route == counting::Route::enumeration && c.n_max > c.ceiling)
        throw UsageError("n_max " + std::to_string(c.n_max) + " exceeds the enumeration ceiling " +
                         std::to_string(c.ceiling));
    const auto t = counting::table(*id, c.n_max, *route, c.ceiling);
    std::ostringstream os;
    switch (c.format) {
    case Format::json:
        os << t.to_json().dump(2) << '\n';
        break;
    case Format::csv:
        os << t.to_csv();
        break;
    case Format::plain:
        for (long n = 0; n <= t.n_max(); ++n)
            os << n << ' ' << to_decimal(t.at(n)) << '\n';
        break;
    }
    return {os.str()};
}

// ---------------------------------------------------------------------------
// bijection

using Fields = std::vector<std::pair<std::string, json>>;

std::string plain_value(const json& v)
{
    if (v.is_array()) {
        std::string s;
        bool sep = false;
        for (const auto& e : v) {
            s += sep ? "," : "";
            sep = true;
            if (e.is_object())
                s += std::to_string(e["value"].get<int>()) + (e["overlined"].get<bool>() ? "'" : "");
            else
                s += plain_value(e);
        }
        return s;
    }
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

Partition parts_arg(const std::string& text, const char* flag)
{
    try {
        return parse_partition(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad ") + flag + ": " + e.what());
    }
}

Fields bijection_fields(const RunConfig& c)
{
    namespace bj = bijections;
    const auto& m = c.map;
    auto input = [&] { return parts_arg(c.parts, "--parts"); };
    if (m == "zigzag") {
        const auto t = bj::zigzag_to_triple(input(), c.k);
        return {{"odd_part", to_json(t.odd_part)}, {"alpha", to_json(t.alpha)},
                {"beta", to_json(t.beta)}};
    }
    if (m == "zigzag-inverse") {
        const bj::TripleA t{parts_arg(c.odd, "--odd"), parts_arg(c.alpha, "--alpha"),
                            parts_arg(c.beta, "--beta")};
        return {{"image", to_json(bj::triple_to_zigzag(t, c.k))}};
    }
    if (m == "glaisher-split")
        return {{"image", to_json(bj::glaisher_split(input()))}};
    if (m == "glaisher-merge")
        return {{"image", to_json(bj::glaisher_merge(input()))}};
    if (m == "glaisher-variant")
        return {{"image", to_json(bj::glaisher_variant(input()))}};
    if (m == "glaisher-variant-inverse")
        return {{"image", to_json(bj::glaisher_variant_inverse(input()))}};
    if (m == "phi") {
        const auto p = input();
        return {{"case", bj::phi_case(p)}, {"image", to_json(bj::phi(p))}};
    }
    if (m == "epsilon") {
        const auto p = input();
        return {{"case", bj::epsilon_case(p)}, {"image", to_json(bj::epsilon(p))}};
    }
    if (m == "two-core") {
        const auto d = bj::two_core_quotient(input());
        return {{"core", to_json(d.core)}, {"alpha", to_json(d.alpha)}, {"beta", to_json(d.beta)}};
    }
    if (m == "two-core-inverse") {
        if (c.k < 0)
            throw UsageError("--k must be nonnegative");
        std::vector<int> core;
        for (int i = c.k; i >= 1; --i)
            core.push_back(i);
        const bj::TwoQuotientDecomposition d{Partition(core), parts_arg(c.alpha, "--alpha"),
                                             parts_arg(c.beta, "--beta")};
        return {{"image", to_json(bj::from_two_core_quotient(d))}};
    }
    if (m == "xi") {
        const auto r = bj::xi_map(input());
        return {{"image", to_json(r.image)}, {"k", r.k}};
    }
    if (m == "psi") {
        const auto r = bj::psi(input());
        return {{"image", to_json(r.image)}, {"k", r.k}};
    }
    if (m == "rho") {
        const auto r = bj::rho(input());
        return {{"image", to_json(r.image)}, {"k", r.k}};
    }
    throw UsageError("unknown map: " + m);
}

Artifact do_bijection(const RunConfig& c)
{
    Fields fields;
    try {
        fields = bijection_fields(c);
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::ostringstream os;
    switch (c.format) {
    case Format::json: {
        json j = {{"map", c.map}};
        for (const auto& [k, v] : fields)
            j[k] = v;
        os << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "field,value\n";
        for (const auto& [k, v] : fields)
            os << k << ',' << csv_field(plain_value(v)) << '\n';
        break;
    case Format::plain:
        for (const auto& [k, v] : fields)
            os << k << " = " << plain_value(v) << '\n';
        break;
    }
    return {os.str()};
}

// ---------------------------------------------------------------------------
// congruences

BigInt modulus_arg(const std::string& text)
{
    BigInt u;
    try {
        u = from_decimal(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("bad --mod: " + text);
    }
    if (u < 1)
        throw UsageError("--mod must be positive");
    return u;
}

Artifact do_congruence_scan(const RunConfig& c)
{
    auto id = counting::SequenceId::parse(c.sequence, c.sequence_k);
    if (!id)
        throw UsageError("unknown sequence: " + c.sequence);
    if (id->takes_k() && id->k < 1)
        throw UsageError(c.sequence + " needs --k >= 1");
    if (c.m < 1)
        throw UsageError("--m must be positive");
    const BigInt u = modulus_arg(c.modulus);
    if (c.t) {
        if (*c.t < 0 || *c.t >= c.m)
            throw UsageError("--t must satisfy 0 <= t < m");
        const congruences::ProgressionSpec spec{c.m, *c.t, u, *id};
        return render_reports({congruences::check_progression_congruence(spec, c.n_max)}, c.format);
    }
    const auto hits = congruences::scan_residues(*id, c.m, u, c.n_max);
    std::ostringstream os;
    switch (c.format) {
    case Format::json:
        os << json{{"sequence", id->name()}, {"m", c.m}, {"u", to_decimal(u)}, {"n_max", c.n_max},
                   {"residues", hits}}
                  .dump(2)
           << '\n';
        break;
    case Format::csv:
        os << "t\n";
        for (long t : hits)
            os << t << '\n';
        break;
    case Format::plain:
        os << id->name() << '(' << c.m << "n+t) = 0 (mod " << to_decimal(u) << ") for n <= "
           << c.n_max << " at t in {";
        for (std::size_t i = 0; i < hits.size(); ++i)
            os << (i ? "," : "") << hits[i];
        os << "}\n";
        break;
    }
    return {os.str()};
}

std::vector<long> residues_arg(const std::string& text)
{
    std::vector<long> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad --residues entry: " + item);
        }
    }
    if (out.empty())
        throw UsageError("--residues is empty");
    return out;
}

Artifact do_congruence_product(const RunConfig& c)
{
    const auto residues = residues_arg(c.residues);
    const BigInt u = modulus_arg(c.modulus);
    if (c.m < 1)
        throw UsageError("--m must be positive");
    for (long t : residues)
        if (t < 0 || t >= c.m)
            throw UsageError("residues must satisfy 0 <= t < m");
    if (c.order < 0)
        throw UsageError("--order must be nonnegative");
    return render_reports({congruences::check_product_congruence(residues, c.m, u, c.order)},
                          c.format);
}

Artifact dispatch(const RunConfig& c)
{
    if (c.n_max < 0)
        throw UsageError("--n-max must be nonnegative");
    if (c.k_max < 1)
        throw UsageError("--k-max must be at least 1");
    if (c.ceiling < 0)
        throw UsageError("enumeration ceiling must be nonnegative");
    if (c.command == "table")
        return do_table(c);
    if (c.command == "verify") {
        std::vector<std::string> ids;
        try {
            ids = suite::resolve(c.statements);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        suite::Bounds b{c.n_max, c.k_max};
        b.routes_n_max = std::min<long>(b.routes_n_max, c.ceiling);
        return render_reports(suite::run(ids, b), c.format);
    }
    if (c.command == "bijection")
        return do_bijection(c);
    if (c.command == "congruence-scan")
        return do_congruence_scan(c);
    if (c.command == "congruence-product")
        return do_congruence_product(c);
    if (c.command == "conjecture-scan")
        return render_reports(identities::check_conjectures(c.n_max, c.k_max), c.format);
    throw UsageError("unknown command: " + c.command);
}

std::optional<int> ceiling_from_environment()
{
    const char* v = std::getenv(kCeilingVariable);
    if (!v || !*v)
        return std::nullopt;
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(v).size() || n < 0)
        throw UsageError(std::string(kCeilingVariable) + " must be a nonnegative integer");
    return n;
}

}  // namespace

ParseOutcome parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Exact partition counts, identity sweeps, bijections and congruence checks."};
    app.name("podpart");
    app.require_subcommand(1, 1);
    app.footer("Statement ids for verify --statements:\n" + suite::help_listing() +
               "\nExit status: 0 pass, 1 verification failure, 2 usage error.\n"
               "Environment: " + std::string(kCeilingVariable) +
               " overrides the enumeration ceiling (default " +
               std::to_string(kDefaultEnumerationCeiling) + ").");

    const std::map<std::string, Format> formats = {
        {"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
    auto common = [&](CLI::App* sub, long n_default, int k_default) {
        sub->add_option("--n-max", c.n_max, "upper bound on n")->default_val(n_default);
        if (k_default > 0)
            sub->add_option("--k-max", c.k_max, "upper bound on k")->default_val(k_default);
        sub->add_option("--format", c.format, "json, csv or plain")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
            ->default_str("plain");
        sub->add_option("--output,-o", c.output, "write to this file instead of standard output");
    };

    auto* table = app.add_subcommand("table", "values f(0..n_max) of one counting function");
    table->add_option("--seq", c.sequence, "sequence name, e.g. pod, b4_e, q2, mp_k")->required();
    table->add_option("--k", c.sequence_k, "k for mp_k and mbar_k");
    table->add_option("--route", c.route, "gf or enumeration")->default_val("gf");
    common(table, 20, 0);

    auto* verify = app.add_subcommand("verify", "run verifiers for the listed statements");
    verify->add_option("--statements", c.statements, "'all' or a comma-separated id list")
        ->default_val("all");
    common(verify, 200, 3);
    verify->footer("Statement ids:\n" + suite::help_listing());

    auto* bij = app.add_subcommand("bijection", "apply one map to an explicit input");
    bij->add_option("map", c.map,
                    "zigzag, zigzag-inverse, glaisher-split, glaisher-merge, glaisher-variant, "
                    "glaisher-variant-inverse, phi, epsilon, two-core, two-core-inverse, xi, psi, "
                    "rho")
        ->required();
    bij->add_option("--parts", c.parts, "input partition, e.g. 14,14,12,12,8,4");
    bij->add_option("--k", c.k, "k for zigzag maps; staircase index for two-core-inverse");
    bij->add_option("--odd", c.odd, "odd part of a triple");
    bij->add_option("--alpha", c.alpha, "alpha of a triple or 2-quotient");
    bij->add_option("--beta", c.beta, "beta of a triple or 2-quotient");
    common(bij, 0, 0);

    auto* scan = app.add_subcommand("congruence-scan",
                                    "check seq(mn+t) = 0 (mod u); without --t, list every such t");
    scan->add_option("--seq", c.sequence, "sequence name")->default_val("b4");
    scan->add_option("--k", c.sequence_k, "k for mp_k and mbar_k");
    scan->add_option("--m", c.m, "modulus of the progression")->required();
    scan->add_option("--t", c.t, "residue, 0 <= t < m");
    scan->add_option("--mod", c.modulus, "divisor u")->required();
    common(scan, 40, 0);

    auto* prod = app.add_subcommand("congruence-product",
                                    "product of b4 progression series, coefficientwise mod u");
    prod->add_option("--residues", c.residues, "comma-separated residues")->required();
    prod->add_option("--m", c.m, "modulus of the progressions")->required();
    prod->add_option("--mod", c.modulus, "divisor u")->required();
    prod->add_option("--order", c.order, "truncation order")->default_val(30);
    common(prod, 0, 0);

    auto* conj = app.add_subcommand("conjecture-scan",
                                    "sweep the two conjectured inequality families");
    common(conj, 500, 5);

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return {std::nullopt, kExitPass};
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return {std::nullopt, kExitPass};
    } catch (const CLI::ParseError& e) {
        err << "podpart: " << e.what() << '\n';
        return {std::nullopt, kExitUsage};
    }
    c.command = app.get_subcommands().front()->get_name();
    try {
        if (auto ceiling = ceiling_from_environment())
            c.ceiling = *ceiling;
    } catch (const UsageError& e) {
        err << "podpart: " << e.what() << '\n';
        return {std::nullopt, kExitUsage};
    }
    return {c, kExitPass};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    Artifact a;
    try {
        a = dispatch(config);
    } catch (const UsageError& e) {
        err << "podpart: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EnumerationCeilingExceeded& e) {
        err << "podpart: " << e.what() << '\n';
        return kExitUsage;
    }
    if (config.output.empty()) {
        out << a.text;
    } else {
        std::ofstream f(config.output, std::ios::binary);
        if (!(f << a.text)) {
            err << "podpart: cannot write " << config.output << '\n';
            return kExitUsage;
        }
    }
    return a.exit_code;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    auto parsed = parse(argc, argv, out, err);
    if (!parsed.config)
        return parsed.exit_code;
    return run(*parsed.config, out, err);
}

}  // namespace podpart::cli
