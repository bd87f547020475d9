#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "modasc/report.hpp"
#include "modasc/sequences.hpp"

namespace modasc {

enum class TableId { table1, table2 };
enum class SuiteId { bijections, transport, equivalences, identities, all };

TableId parse_table_id(std::string_view s);
SuiteId parse_suite_id(std::string_view s);
const char* to_string(SuiteId s);

struct RunOptions {
    std::size_t n = 0;
    Caps caps;
    unsigned jobs = 1;
};

/// Patterns of the single-pattern enumeration table, grouped rows flattened.
const std::vector<std::string>& table1_patterns();

/// Printed data for patterns without a known formula; values start at n = 1.
struct GoldenRow {
    std::string pattern;
    SequenceClass cls;
    std::vector<long long> values;
};

const std::vector<GoldenRow>& table2_golden();

/// Throws CapExceeded when the run would enumerate past its cap.
void require_within_caps(TableId t, const RunOptions& o);
void require_within_caps(SuiteId s, const RunOptions& o);

std::vector<Check> table_checks(TableId t, const RunOptions& o);
std::vector<Check> suite_checks(SuiteId s, const RunOptions& o);

const std::vector<std::string>& experiment_names();
/// Data-only comparisons; every result is INFO unless the computation itself fails.
std::vector<Check> experiment_checks(std::string_view name, std::size_t order, const RunOptions& o);

}  // namespace modasc
