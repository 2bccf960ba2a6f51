#include "harvestlab/io.hpp"

#include <cmath>
#include <cstdio>

namespace harvestlab {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const Table& table, std::ostream& os)
{
    for (const auto& [k, v] : table.metadata)
        os << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_double(row[i]);
        os << "\n";
    }
}

} // namespace harvestlab
