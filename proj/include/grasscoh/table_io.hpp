#pragma once

#include <string>
#include <vector>

#include "grasscoh/catalog.hpp"

namespace grasscoh {

enum class OutputFormat { Text, Json, Csv, Latex };

OutputFormat parse_format(const std::string& name);

/// A fully evaluated multiplication table over the distinguished basis.
/// Cell (i, j) holds the normal form of basis_i * basis_j both as exact
/// coordinates over the basis and as a canonical string.
struct TableModel {
    std::string descriptor_json;  ///< presentation data, serialized
    std::vector<std::string> basis;
    std::vector<std::vector<std::vector<std::string>>> coords;  ///< [i][j] -> dim strings
    std::vector<std::vector<std::string>> entries;              ///< [i][j] -> element string

    /// Compares the payload (descriptor, basis, coordinates); the derived
    /// entry strings are ignored so parsed tables compare equal.
    bool same_data(const TableModel& o) const {
        return descriptor_json == o.descriptor_json && basis == o.basis && coords == o.coords;
    }
};

/// Number of worker threads honoring the GRASSCOH_THREADS cap.
unsigned worker_threads(size_t tasks);

/// Builds the full table; rows are generated in parallel (pure functions on
/// immutable descriptors), honoring GRASSCOH_THREADS.
TableModel multiplication_table(const BuiltRing& ring);

std::string descriptor_json(const BuiltRing& ring);

/// Compact grid with the unit row and column omitted, aligned columns.
std::string emit_text(const TableModel& t);
/// Machine-readable form: descriptor, basis, and the full coordinate table.
std::string emit_json(const TableModel& t);
/// Full grid with header row/column, one cell per product, exact strings.
std::string emit_csv(const TableModel& t);
/// LaTeX tabular: header row and column, upper triangle filled, blanks
/// below the diagonal (products are determined by symmetry).
std::string emit_latex(const TableModel& t);

std::string emit(const TableModel& t, OutputFormat f);

/// Exact inverse of emit_json.
TableModel table_from_json(const std::string& text);

}  // namespace grasscoh
