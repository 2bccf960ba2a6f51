#include "doctest.h"

#include "harvestlab/io.hpp"

#include <algorithm>
#include <sstream>

using namespace harvestlab;

namespace {

std::size_t argmax_column(const Table& t, std::size_t col)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        if (t.rows[i][col] > t.rows[best][col])
            best = i;
    return best;
}

} // namespace

TEST_SUITE("figures")
{
    TEST_CASE("id table")
    {
        CHECK(is_figure_id("fig3a"));
        CHECK_FALSE(is_figure_id("fig10"));
        CHECK_THROWS_AS((void)make_figure("fig10"), std::invalid_argument);
        for (const auto& id : figure_ids()) {
            Table t = make_figure(id);
            CHECK(t.rows.size() == 256);
            CHECK(t.columns.size() >= 2);
            for (const auto& row : t.rows)
                CHECK(row.size() == t.columns.size());
        }
    }

    TEST_CASE("concurrence versus distance has an interior peak")
    {
        Table t = make_figure("fig3a");
        // column 1 = identical-gap curve, last columns = flat-space values
        CHECK(t.rows.front()[1] == 0.0); // on the boundary
        std::size_t peak = argmax_column(t, 1);
        CHECK(peak > 0);
        CHECK(peak + 1 < t.rows.size());
        double dz_peak = t.rows[peak][0];
        CHECK(dz_peak >= 0.3);
        CHECK(dz_peak <= 3.0);
        // the peak tops the flat-space asymptote
        double bl = t.rows.front()[4];
        CHECK(t.rows[peak][1] > bl * 1.001);
    }

    TEST_CASE("mutual information climbs to its flat-space asymptote")
    {
        Table t = make_figure("fig7a");
        for (std::size_t i = 1; i < t.rows.size(); ++i)
            CHECK(t.rows[i][1] > t.rows[i - 1][1]);
        double bl = t.rows.front()[4];
        double last = t.rows.back()[1];
        CHECK(last < bl);
        CHECK(last > 0.99 * bl);
    }

    TEST_CASE("concurrence range is finite, mutual information range is not")
    {
        Table c = make_figure("fig2a");
        for (std::size_t col = 1; col <= 3; ++col) {
            CHECK(c.rows.front()[col] > 0.0);
            CHECK(c.rows.back()[col] == 0.0); // exact clamp at large L
        }
        Table m = make_figure("fig6a");
        for (std::size_t col = 1; col <= 3; ++col)
            CHECK(m.rows.back()[col] > 0.0); // still positive at L = 10
    }

    TEST_CASE("gap-difference scans: hindering versus assisting")
    {
        Table a = make_figure("fig4a"); // L = 0.1: monotone decreasing
        for (std::size_t col = 1; col <= 3; ++col)
            for (std::size_t i = 1; i < a.rows.size(); ++i)
                CHECK(a.rows[i][col] <= a.rows[i - 1][col] + 1e-15);

        Table b = make_figure("fig4b"); // L = 1.5: interior maximum
        for (std::size_t col = 1; col <= 3; ++col) {
            std::size_t peak = argmax_column(b, col);
            CHECK(peak > 0);
            CHECK(b.rows[peak][col] > b.rows.front()[col]);
        }
    }

    TEST_CASE("csv writer round trip of shape")
    {
        Table t = make_figure("fig4a");
        std::ostringstream os;
        write_csv(t, os);
        std::string text = os.str();
        CHECK(text.find("# figure=fig4a") != std::string::npos);
        // one header line plus 256 data rows after the metadata
        std::size_t lines = std::count(text.begin(), text.end(), '\n');
        CHECK(lines == t.metadata.size() + 1 + 256);
        // deterministic bytes
        std::ostringstream os2;
        write_csv(make_figure("fig4a"), os2);
        CHECK(text == os2.str());
    }
}
