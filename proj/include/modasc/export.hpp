#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "modasc/counting.hpp"
#include "modasc/patterns.hpp"

namespace modasc {

/// "312-modasc", "212,213-prim".
std::string table_label(std::span<const CayleyPattern> ys, SequenceClass c);

/// Counts for n = 1..n_max by enumeration.
CountTable oracle_table(std::span<const CayleyPattern> ys, SequenceClass c, std::size_t n_max);
/// Counts for n = 1..n_max from the closed formula. Throws NoClosedForm.
CountTable formula_table(const CayleyPattern& y, SequenceClass c, std::size_t n_max);
/// Coefficients 0..order.
CountTable series_table(SpecialSeries s, std::size_t order);

enum class ExportFormat { bfile, json, csv };

ExportFormat parse_export_format(std::string_view s);

/// bfile: "n a(n)" lines. csv: header "n,count". json: {label, offset, values}
/// with values as exact JSON integers.
std::string format_table(const CountTable& t, ExportFormat f);

/// Writes format_table to `path`; failures are thrown as std::runtime_error
/// carrying the system message.
void export_table(const CountTable& t, ExportFormat f, const std::filesystem::path& path);

}  // namespace modasc
