#ifndef MNC_TABLE_HPP
#define MNC_TABLE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mnc/polynomial.hpp"

namespace mnc {

// Left-to-right order of the reference table.
enum class Column { PrimeParts, LowerBound, PStar, M, PHash, UpperBound, P };

enum class Format { Text, Csv, Json };

std::string column_name(Column c);
// Accepts the names produced by column_name plus short aliases (pP, L, pstar, M, phash, U, p).
Column parse_column(std::string_view s);

struct TableSpec {
    std::vector<Column> columns{Column::PrimeParts, Column::LowerBound, Column::PStar, Column::M,
                                Column::PHash,      Column::UpperBound, Column::P};
    int start = 0;
    int stop = 70;
    int step = 10;
    Format format = Format::Text;
    // Largest n for which the (enumeration-heavy) M column may be computed.
    int m_budget = 70;
    // Finite set S whose numerator f_S drives the L_S and U_{N+,S} columns.
    std::vector<int> bound_parts{1, 2, 3, 4};
};

struct TableRow {
    int n;
    std::vector<BigInt> cells; // one per spec column
};

/// Computes every cell; columns are reordered to the canonical order.
/// Throws BudgetExceeded when M is requested beyond m_budget.
std::vector<TableRow> compute_table(TableSpec& spec);

std::string render_table(const TableSpec& spec, const std::vector<TableRow>& rows);

} // namespace mnc

#endif
