#include "mnc/table.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mnc/hilbert.hpp"
#include "mnc/partitions.hpp"
#include "mnc/series.hpp"
#include "mnc/signatures.hpp"

namespace mnc {

std::string column_name(Column c)
{
    switch (c) {
    case Column::PrimeParts:
        return "p_P";
    case Column::LowerBound:
        return "L_S";
    case Column::PStar:
        return "p_star";
    case Column::M:
        return "M";
    case Column::PHash:
        return "p_hash";
    case Column::UpperBound:
        return "U";
    case Column::P:
        return "p";
    }
    return "?";
}

Column parse_column(std::string_view s)
{
    static const std::map<std::string, Column, std::less<>> names{
        {"p_P", Column::PrimeParts},   {"pP", Column::PrimeParts}, {"L_S", Column::LowerBound},
        {"L", Column::LowerBound},     {"p_star", Column::PStar},  {"pstar", Column::PStar},
        {"p*", Column::PStar},         {"M", Column::M},           {"p_hash", Column::PHash},
        {"phash", Column::PHash},      {"p#", Column::PHash},      {"U", Column::UpperBound},
        {"p", Column::P}};
    auto it = names.find(s);
    if (it == names.end())
        throw ParseError("unknown table column '" + std::string(s) + "'", 0);
    return it->second;
}

std::vector<TableRow> compute_table(TableSpec& spec)
{
    if (spec.start < 0 || spec.stop < spec.start || spec.step < 1)
        throw DomainError("invalid n range");
    std::sort(spec.columns.begin(), spec.columns.end());
    spec.columns.erase(std::unique(spec.columns.begin(), spec.columns.end()), spec.columns.end());

    std::vector<int> ns;
    for (int n = spec.start; n <= spec.stop; n += spec.step)
        ns.push_back(n);
    const bool want_m = std::find(spec.columns.begin(), spec.columns.end(), Column::M) != spec.columns.end();
    if (want_m && ns.back() > spec.m_budget)
        throw BudgetExceeded("M(n) requested up to n = " + std::to_string(ns.back()) + " but the budget is n <= " +
                             std::to_string(spec.m_budget) + "; raise --budget to allow it (p(n) partitions are enumerated)");

    const auto N = static_cast<std::size_t>(ns.back());
    std::map<Column, PowerSeries> series;
    for (Column c : spec.columns) {
        switch (c) {
        case Column::PrimeParts:
            series.emplace(c, partition_series(PartSet::primes(), N));
            break;
        case Column::PStar:
            series.emplace(c, partition_series(PartSet::star(), N));
            break;
        case Column::PHash:
            series.emplace(c, partition_series(PartSet::hash(), N));
            break;
        case Column::P:
            series.emplace(c, partition_series(PartSet::all(), N));
            break;
        case Column::LowerBound:
        case Column::UpperBound:
        case Column::M:
            break;
        }
    }
    IntPolynomial f_s;
    const bool want_bounds = std::any_of(spec.columns.begin(), spec.columns.end(), [](Column c) {
        return c == Column::LowerBound || c == Column::UpperBound;
    });
    if (want_bounds)
        f_s = pipeline_M(spec.bound_parts).numerator;

    std::vector<std::future<std::uint64_t>> m_cells;
    if (want_m)
        for (int n : ns)
            m_cells.push_back(std::async(std::launch::async, [n] { return count_distinct(n, PartSet::all()); }));

    std::vector<TableRow> rows;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const int n = ns[i];
        TableRow row{n, {}};
        for (Column c : spec.columns) {
            switch (c) {
            case Column::LowerBound:
                row.cells.push_back(lower_bound(n, spec.bound_parts, f_s));
                break;
            case Column::UpperBound:
                row.cells.push_back(upper_bound(n, spec.bound_parts, f_s));
                break;
            case Column::M:
                row.cells.emplace_back(m_cells[i].get());
                break;
            default:
                row.cells.push_back(series.at(c)[static_cast<std::size_t>(n)]);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

nlohmann::json big_to_json(const BigInt& v)
{
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        return static_cast<std::uint64_t>(v);
    return v.str();
}

} // namespace

std::string render_table(const TableSpec& spec, const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    switch (spec.format) {
    case Format::Text: {
        std::vector<std::string> header{"n"};
        for (Column c : spec.columns)
            header.push_back(column_name(c));
        std::vector<std::vector<std::string>> cells;
        for (const auto& r : rows) {
            std::vector<std::string> line{std::to_string(r.n)};
            for (const auto& v : r.cells)
                line.push_back(v.str());
            cells.push_back(std::move(line));
        }
        std::vector<std::size_t> width(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) {
            width[i] = header[i].size();
            for (const auto& line : cells)
                width[i] = std::max(width[i], line[i].size());
        }
        auto emit = [&](const std::vector<std::string>& line) {
            for (std::size_t i = 0; i < line.size(); ++i)
                os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << line[i];
            os << '\n';
        };
        emit(header);
        for (const auto& line : cells)
            emit(line);
        break;
    }
    case Format::Csv:
        os << 'n';
        for (Column c : spec.columns)
            os << ',' << column_name(c);
        os << '\n';
        for (const auto& r : rows) {
            os << r.n;
            for (const auto& v : r.cells)
                os << ',' << v;
            os << '\n';
        }
        break;
    case Format::Json: {
        nlohmann::json j;
        j["schema"] = 1;
        j["bound_parts"] = spec.bound_parts;
        auto& cols = j["columns"] = nlohmann::json::array();
        for (Column c : spec.columns)
            cols.push_back(column_name(c));
        auto& out = j["rows"] = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row;
            row["n"] = r.n;
            for (std::size_t i = 0; i < spec.columns.size(); ++i)
                row[column_name(spec.columns[i])] = big_to_json(r.cells[i]);
            out.push_back(std::move(row));
        }
        os << j.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

} // namespace mnc
