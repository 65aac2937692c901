#include "fracgreen/table.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <string>
#include <thread>

#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"

namespace fracgreen {

unsigned thread_count_from_env() {
    const char* env = std::getenv("FRACGREEN_THREADS");
    unsigned n = 0;
    if (env != nullptr && *env != '\0') {
        const char* end = env + std::char_traits<char>::length(env);
        auto [p, ec] = std::from_chars(env, end, n);
        if (ec != std::errc() || p != end) n = 0;
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

std::string format_real(double v, int digits) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, r.ptr);
}

DensityTable tabulate(const FractionalTriplet& triplet, double t, const GridSpec& grid, double tol, unsigned threads) {
    if (!(grid.n >= 2)) throw DomainError("a table needs n >= 2 points");
    if (!(grid.x_min < grid.x_max) || !std::isfinite(grid.x_min) || !std::isfinite(grid.x_max))
        throw DomainError("a table needs finite x-min < x-max");
    if (classify(triplet) == DiffusionClass::Wave) throw WaveCaseError();

    const std::size_t n = static_cast<std::size_t>(grid.n);
    std::vector<TableRow> rows(n);
    std::vector<std::exception_ptr> failures(n);
    const double span = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double k = static_cast<double>(i);
        rows[i].x = (grid.x_min * (span - k) + grid.x_max * k) / span;
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                const EvaluationResult r = green(triplet, rows[i].x, t, tol);
                rows[i].value = r.value;
                rows[i].abs_err = r.abs_error;
                rows[i].method = r.method;
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = thread_count_from_env();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return {triplet, t, tol, std::move(rows)};
}

void write_csv(std::ostream& out, const DensityTable& table) {
    out << "# " << version_string << '\n';
    out << "# alpha=" << format_real(table.triplet.alpha()) << '\n';
    out << "# beta=" << format_real(table.triplet.beta()) << '\n';
    out << "# theta=" << format_real(table.triplet.theta()) << '\n';
    out << "# t=" << format_real(table.t) << '\n';
    out << "# tolerance=" << format_real(table.tolerance) << '\n';
    out << "x,value,abs_err,method\n";
    for (const auto& r : table.rows)
        out << format_real(r.x) << ',' << format_real(r.value) << ',' << format_real(r.abs_err) << ','
            << to_string(r.method) << '\n';
}

void write_json(std::ostream& out, const DensityTable& table) {
    out << "{\"meta\":{\"version\":\"" << version_string << "\",\"alpha\":" << format_real(table.triplet.alpha())
        << ",\"beta\":" << format_real(table.triplet.beta()) << ",\"theta\":" << format_real(table.triplet.theta())
        << ",\"t\":" << format_real(table.t) << ",\"tolerance\":" << format_real(table.tolerance) << "},\"rows\":[";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        if (i) out << ',';
        out << '[' << format_real(r.x) << ',' << format_real(r.value) << ',' << format_real(r.abs_err) << ",\""
            << to_string(r.method) << "\"]";
    }
    out << "]}\n";
}

}  // namespace fracgreen
