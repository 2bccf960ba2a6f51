#ifndef HARVESTLAB_IO_HPP
#define HARVESTLAB_IO_HPP

#include "harvestlab/figures.hpp"

#include <ostream>
#include <string>

namespace harvestlab {

// Shortest exact decimal form (17 significant digits), '.' decimal point,
// identical across runs.
std::string format_double(double v);

// '#'-prefixed key=value metadata lines, a header row, comma-separated data.
void write_csv(const Table& table, std::ostream& os);

} // namespace harvestlab

#endif
