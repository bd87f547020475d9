#include "modasc/export.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "modasc/error.hpp"

namespace modasc {

std::string table_label(std::span<const CayleyPattern> ys, SequenceClass c) {
    return (ys.empty() ? std::string("all") : format_pattern_set(ys)) + "-" + to_string(c);
}

CountTable oracle_table(std::span<const CayleyPattern> ys, SequenceClass c, std::size_t n_max) {
    CountTable t{table_label(ys, c), 1, {}, Provenance::oracle};
    for (std::size_t n = 1; n <= n_max; ++n) t.values.push_back(oracle_count(ys, c, n));
    return t;
}

CountTable formula_table(const CayleyPattern& y, SequenceClass c, std::size_t n_max) {
    CountTable t{y.str() + "-" + to_string(c), 1, {}, Provenance::formula};
    for (std::size_t n = 1; n <= n_max; ++n) t.values.push_back(closed_count(y, c, n));
    return t;
}

CountTable series_table(SpecialSeries s, std::size_t order) {
    const IntSeries f = special_series(s, order);
    return {to_string(s), 0, f.coefficients(), Provenance::series};
}

ExportFormat parse_export_format(std::string_view s) {
    if (s == "bfile") return ExportFormat::bfile;
    if (s == "json") return ExportFormat::json;
    if (s == "csv") return ExportFormat::csv;
    throw InvalidInput("unknown export format \"" + std::string(s) + "\"");
}

std::string format_table(const CountTable& t, ExportFormat f) {
    std::ostringstream os;
    switch (f) {
        case ExportFormat::bfile:
            for (std::size_t i = 0; i < t.values.size(); ++i) os << t.offset + i << ' ' << t.values[i] << '\n';
            break;
        case ExportFormat::csv:
            os << "n,count\n";
            for (std::size_t i = 0; i < t.values.size(); ++i) os << t.offset + i << ',' << t.values[i] << '\n';
            break;
        case ExportFormat::json:
            // Big integers are written as bare JSON numbers, so the array is
            // assembled by hand rather than through a double or int64.
            os << "{\"label\": " << nlohmann::json(t.label).dump() << ", \"offset\": " << t.offset
               << ", \"values\": [";
            for (std::size_t i = 0; i < t.values.size(); ++i) os << (i ? ", " : "") << t.values[i];
            os << "]}\n";
            break;
    }
    return os.str();
}

void export_table(const CountTable& t, ExportFormat f, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
    out << format_table(t, f);
    out.flush();
    if (!out) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
}

}  // namespace modasc
