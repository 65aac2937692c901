#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracgreen/evaluation.hpp"
#include "fracgreen/params.hpp"

namespace fracgreen {

inline constexpr const char* version_string = "fracgreen 1.0.0";

struct TableRow {
    double x;
    double value;
    double abs_err;
    Method method;
};

/// Rows of G(x, t) on an equispaced grid, ascending in x.
struct DensityTable {
    FractionalTriplet triplet;
    double t;
    double tolerance;
    std::vector<TableRow> rows;
};

struct GridSpec {
    double x_min;
    double x_max;
    int n;
};

/// Evaluates every grid point, possibly on several threads. Any failure is
/// rethrown (the first one in x order) and no table is returned.
DensityTable tabulate(const FractionalTriplet& triplet, double t, const GridSpec& grid, double tol,
                      unsigned threads = 0);

/// Worker count from FRACGREEN_THREADS; 0 or unset means hardware
/// concurrency.
unsigned thread_count_from_env();

/// Decimal text with `digits` significant digits, independent of the locale.
std::string format_real(double v, int digits = 17);

void write_csv(std::ostream& out, const DensityTable& table);
void write_json(std::ostream& out, const DensityTable& table);

}  // namespace fracgreen
