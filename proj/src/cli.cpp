#include "mnc/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mnc/hilbert.hpp"
#include "mnc/pairs.hpp"
#include "mnc/partitions.hpp"
#include "mnc/quasipoly.hpp"
#include "mnc/signatures.hpp"
#include "mnc/table.hpp"

namespace mnc::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string parts;
    int n = -1;
    int min_n = 0;
    int max_n = -1;
    int step = -1;
    int k = -1;
    int order = 100;
    std::string emit = "text";
    long budget = -1;
    bool count_only = false;
    std::string columns;
    std::string partition;
};

Format parse_format(const std::string& s)
{
    if (s == "text")
        return Format::Text;
    if (s == "csv")
        return Format::Csv;
    if (s == "json")
        return Format::Json;
    throw ParseError("unknown --emit format '" + s + "'", 0);
}

std::vector<int> finite_parts(const std::string& text)
{
    PartSet s = PartSet::parse(text);
    if (!s.is_finite())
        throw ParseError("this command needs a finite part set, got '" + text + "'", 0);
    return s.members();
}

std::size_t pair_budget(const Options& o)
{
    return o.budget > 0 ? static_cast<std::size_t>(o.budget) : 2'000'000;
}

json big_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

std::string rat_str(const Rational& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

int cmd_count(const Options& o, std::ostream& out)
{
    if (o.n < 0)
        throw ParseError("count needs --n >= 0", 0);
    PartSet s = PartSet::parse(o.parts.empty() ? "all" : o.parts);
    std::optional<int> k;
    if (o.k >= 0)
        k = o.k;
    const auto m = count_distinct(o.n, s, k);
    const BigInt p = count_partitions(o.n, s, k);
    Format f = parse_format(o.emit);
    if (f == Format::Json) {
        json j{{"schema", 1}, {"n", o.n}, {"parts", s.to_string()}, {"M", m}, {"p", big_json(p)}};
        if (k)
            j["max_parts"] = *k;
        out << j.dump(2) << '\n';
    } else if (f == Format::Csv) {
        out << "n,parts,M,p\n" << o.n << ',' << s.to_string() << ',' << m << ',' << p << '\n';
    } else {
        out << m << '\n';
    }
    return kOk;
}

int cmd_gf(const Options& o, std::ostream& out)
{
    const auto parts = finite_parts(o.parts);
    const RationalGF g = pipeline_M(parts, pair_budget(o));
    Format f = parse_format(o.emit);
    if (f == Format::Json) {
        json num = json::array();
        for (std::size_t e = 0; e < g.numerator.size(); ++e)
            if (g.numerator[e] != 0)
                num.push_back(json::array({e, big_json(g.numerator[e])}));
        out << json{{"schema", 1}, {"parts", parts}, {"numerator", num}, {"denominator", g.denom_exponents},
                    {"text", g.to_string()}}
                   .dump(2)
            << '\n';
    } else if (f == Format::Csv) {
        const PowerSeries s = g.expand(static_cast<std::size_t>(o.order));
        out << "n,M_S\n";
        for (std::size_t n = 0; n <= s.order(); ++n)
            out << n << ',' << s[n] << '\n';
    } else {
        out << g.to_string() << '\n';
    }
    return kOk;
}

int cmd_closed_form(const Options& o, std::ostream& out)
{
    const auto parts = finite_parts(o.parts);
    const RationalGF g = pipeline_M(parts, pair_budget(o));
    const Quasipolynomial qp = to_quasipolynomial(g);
    json table = json::array();
    for (const auto& row : qp.table()) {
        json r = json::array();
        for (int k = 0; k <= qp.degree(); ++k)
            r.push_back(rat_str(k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k)] : Rational(0)));
        table.push_back(std::move(r));
    }
    json j{{"schema", 1},         {"parts", parts},           {"period", qp.period()},
           {"degree", qp.degree()}, {"valid_from", qp.valid_from()}, {"formula", qp.to_string()},
           {"residue_table", table}};
    if (parse_format(o.emit) == Format::Json) {
        json pf = json::array();
        for (const auto& t : partial_fractions(g).terms) {
            json c = json::array();
            for (const auto& x : t.numerator.coeffs())
                c.push_back(rat_str(x));
            pf.push_back(json{{"cyclotomic", t.index}, {"power", t.power}, {"numerator", c}});
        }
        j["partial_fractions"] = pf;
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "M_S(n) = " << qp.to_string() << "   for n >= " << qp.valid_from() << ", period " << qp.period() << '\n';
    out << j["residue_table"].dump() << '\n';
    return kOk;
}

int cmd_gb(const Options& o, std::ostream& out)
{
    const auto parts = finite_parts(o.parts);
    const PipelineResult r = run_pipeline(parts, pair_budget(o));
    if (parse_format(o.emit) == Format::Json) {
        json vars = json::array();
        for (std::size_t i = 0; i < r.universe.size(); ++i)
            vars.push_back(r.universe.name(i));
        auto encode = [](const std::vector<toric::Binomial>& bs) {
            json a = json::array();
            for (const auto& b : bs)
                a.push_back(json{{"lead", b.lead.exps()}, {"trail", b.trail.exps()}});
            return a;
        };
        out << json{{"schema", 1},
                    {"parts", parts},
                    {"variables", vars},
                    {"basis", encode(r.groebner)},
                    {"elimination", encode(r.elimination)}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "F (" << r.groebner.size() << " elements):\n";
    for (const auto& b : r.groebner)
        out << "  " << toric::to_string(b, r.universe) << '\n';
    out << "G = F n k[S] (" << r.elimination.size() << " elements):\n";
    for (const auto& b : r.elimination)
        out << "  " << toric::to_string(b, r.universe) << '\n';
    out << "L = {";
    for (std::size_t i = 0; i < r.leads.size(); ++i)
        out << (i ? ", " : " ") << toric::to_string(r.leads[i], r.universe);
    out << (r.leads.empty() ? "}" : " }") << '\n';
    return kOk;
}

int cmd_pairs(const Options& o, std::ostream& out)
{
    Format f = parse_format(o.emit);
    if (o.n < 0 && o.max_n < 0)
        throw ParseError("pairs needs --n or --max-n", 0);
    if (o.max_n >= 0) {
        const int step = o.step > 0 ? o.step : 1;
        json rows = json::array();
        if (f == Format::Csv)
            out << "n,i,diophantine_lower_bound\n";
        for (int n = o.min_n; n <= o.max_n; n += step) {
            const auto i = count_irreducible_pairs(n);
            const auto d = diophantine_lower_bound(n);
            if (f == Format::Json)
                rows.push_back(json{{"n", n}, {"i", i}, {"diophantine_lower_bound", d}});
            else if (f == Format::Csv)
                out << n << ',' << i << ',' << d << '\n';
            else
                out << n << ' ' << i << '\n';
        }
        if (f == Format::Json)
            out << json{{"schema", 1}, {"rows", rows}}.dump(2) << '\n';
        return kOk;
    }
    if (o.count_only) {
        const auto i = count_irreducible_pairs(o.n);
        if (f == Format::Json)
            out << json{{"schema", 1}, {"n", o.n}, {"i", i}}.dump(2) << '\n';
        else
            out << i << '\n';
        return kOk;
    }
    const auto pairs = irreducible_pairs(o.n);
    if (f == Format::Json) {
        json a = json::array();
        for (const auto& p : pairs)
            a.push_back(json{{"left", p.left().parts()}, {"right", p.right().parts()}});
        out << json{{"schema", 1}, {"n", o.n}, {"i", pairs.size()}, {"pairs", a}}.dump(2) << '\n';
    } else if (f == Format::Csv) {
        out << "left,right\n";
        for (const auto& p : pairs)
            out << '"' << p.left().to_string() << "\",\"" << p.right().to_string() << "\"\n";
    } else {
        for (const auto& p : pairs)
            out << p.to_string() << '\n';
    }
    return kOk;
}

int run_table(TableSpec spec, std::ostream& out, std::ostream& err)
{
    if (std::find(spec.columns.begin(), spec.columns.end(), Column::M) != spec.columns.end())
        err << "computing M(n) by enumerating partitions up to n = " << spec.stop << "...\n";
    auto rows = compute_table(spec);
    out << render_table(spec, rows);
    return kOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err)
{
    TableSpec spec;
    spec.start = o.min_n;
    if (o.max_n >= 0)
        spec.stop = o.max_n;
    if (o.step > 0)
        spec.step = o.step;
    spec.format = parse_format(o.emit);
    if (o.budget > 0)
        spec.m_budget = static_cast<int>(o.budget);
    if (!o.parts.empty())
        spec.bound_parts = finite_parts(o.parts);
    if (!o.columns.empty()) {
        spec.columns.clear();
        std::stringstream ss(o.columns);
        std::string item;
        while (std::getline(ss, item, ','))
            spec.columns.push_back(parse_column(item));
    }
    return run_table(std::move(spec), out, err);
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream& err)
{
    TableSpec spec;
    spec.columns = {Column::PrimeParts, Column::LowerBound, Column::UpperBound, Column::P};
    spec.start = o.min_n;
    spec.stop = o.max_n >= 0 ? o.max_n : (o.n >= 0 ? o.n : 70);
    if (o.n >= 0 && o.max_n < 0)
        spec.start = o.n;
    spec.step = o.step > 0 ? o.step : 1;
    spec.format = parse_format(o.emit);
    if (!o.parts.empty())
        spec.bound_parts = finite_parts(o.parts);
    return run_table(std::move(spec), out, err);
}

int cmd_show(const Options& o, std::ostream& out)
{
    std::vector<int> parts;
    std::stringstream ss(o.partition);
    std::string item;
    std::size_t pos = 0;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("expected a comma separated list of positive parts", pos);
        }
        pos += item.size() + 1;
    }
    Partition p(parts);
    const Signature sig = signature_of(p);
    if (parse_format(o.emit) == Format::Json) {
        json e = json::array();
        for (auto [prime, exp] : sig.entries())
            e.push_back(json::array({prime, exp}));
        out << json{{"schema", 1}, {"n", p.n()}, {"partition", p.parts()}, {"signature", e},
                    {"value", coefficient_value(p).str()}}
                   .dump(2)
            << '\n';
    } else {
        out << "partition  " << p.to_string() << " of " << p.n() << '\n';
        out << "signature  " << sig.to_string() << '\n';
        out << "value      " << coefficient_value(p) << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Distinct multinomial coefficients: counts, generating functions, bounds, irreducible pairs", "mnc"};
    app.require_subcommand(1);
    Options o;

    auto add_emit = [&](CLI::App* c) {
        c->add_option("--emit", o.emit, "Output format: text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    };

    auto* table = app.add_subcommand("table", "Reference table p_P, L_S, p*, M, p#, U, p");
    table->add_option("--min-n", o.min_n, "First n")->check(CLI::NonNegativeNumber);
    table->add_option("--max-n", o.max_n, "Last n (default 70)");
    table->add_option("--step", o.step, "Row spacing (default 10)");
    table->add_option("--columns", o.columns, "Comma separated subset of p_P,L_S,p_star,M,p_hash,U,p");
    table->add_option("--parts", o.parts, "Finite S for the L_S and U columns (default 1..4)");
    table->add_option("--budget", o.budget, "Largest n allowed for the M column (default 70)");
    add_emit(table);

    auto* count = app.add_subcommand("count", "M_S(n) by enumeration of prime signatures");
    count->add_option("--n", o.n, "Upper entry n")->required();
    count->add_option("--parts", o.parts, "Part set: all, primes, 1+primes, lo..hi, {a,b}, star, hash");
    count->add_option("--k", o.k, "At most k lower entries");
    add_emit(count);

    auto* gf = app.add_subcommand("gf", "Generating function M_S(q) via Groebner elimination");
    gf->add_option("--parts", o.parts, "Finite part set")->required();
    gf->add_option("--order", o.order, "Series truncation for csv output")->check(CLI::NonNegativeNumber);
    gf->add_option("--budget", o.budget, "Buchberger pair budget");
    add_emit(gf);

    auto* cf = app.add_subcommand("closed-form", "Quasipolynomial closed form of M_S(n)");
    cf->add_option("--parts", o.parts, "Finite part set")->required();
    cf->add_option("--budget", o.budget, "Buchberger pair budget");
    add_emit(cf);

    auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of the toric ideal");
    gb->add_option("--parts", o.parts, "Finite part set")->required();
    gb->add_option("--budget", o.budget, "Buchberger pair budget");
    add_emit(gb);

    auto* pairs = app.add_subcommand("pairs", "Irreducible pairs of partitions");
    pairs->add_option("--n", o.n, "Single n");
    pairs->add_option("--min-n", o.min_n, "Range start (with --max-n)");
    pairs->add_option("--max-n", o.max_n, "Range end: prints i(n) per n");
    pairs->add_option("--step", o.step, "Range step");
    pairs->add_flag("--count-only", o.count_only, "Print i(n) only");
    add_emit(pairs);

    auto* bounds = app.add_subcommand("bounds", "p_P(n) <= L_S(n) <= M(n) <= U(n) <= p(n) bound sequences");
    bounds->add_option("--n", o.n, "Single n");
    bounds->add_option("--min-n", o.min_n, "Range start");
    bounds->add_option("--max-n", o.max_n, "Range end");
    bounds->add_option("--step", o.step, "Range step (default 1)");
    bounds->add_option("--parts", o.parts, "Finite S' giving the numerator f_S' (default 1..4)");
    add_emit(bounds);

    auto* show = app.add_subcommand("show", "Signature and value of one multinomial coefficient");
    show->add_option("--partition", o.partition, "Lower entries, e.g. 3,2,2")->required();
    add_emit(show);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (table->parsed())
            return cmd_table(o, out, err);
        if (count->parsed())
            return cmd_count(o, out);
        if (gf->parsed())
            return cmd_gf(o, out);
        if (cf->parsed())
            return cmd_closed_form(o, out);
        if (gb->parsed())
            return cmd_gb(o, out);
        if (pairs->parsed())
            return cmd_pairs(o, out);
        if (bounds->parsed())
            return cmd_bounds(o, out, err);
        if (show->parsed())
            return cmd_show(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetError;
    } catch (const InvariantViolation& e) {
        err << "internal invariant failure: " << e.what() << '\n';
        return kInternalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kModuleError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kModuleError;
}

} // namespace mnc::cli
