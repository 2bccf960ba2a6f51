#ifndef HARVESTLAB_FIGURES_HPP
#define HARVESTLAB_FIGURES_HPP

#include "harvestlab/optimize.hpp"

#include <string>
#include <utility>
#include <vector>

namespace harvestlab {

struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Preset curve families keyed by figure id (fig2a ... fig14): 256 abscissa
// points per table, one column per curve, flat-space dashed references
// where the plots carry them.
std::vector<std::string> figure_ids();
bool is_figure_id(const std::string& id);
Table make_figure(const std::string& id);

} // namespace harvestlab

#endif
