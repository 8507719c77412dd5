#include "dab/surface.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "dab/enumerate.hpp"
#include "dab/parallel.hpp"
#include "dab/quadrature.hpp"

namespace dab {

namespace {

constexpr double kDiagonalGuard = 1e-9;

void check_region(double alpha, double beta, const char* who) {
    if (!(alpha > 0.0 && alpha < beta && beta < 1.0 - alpha))
        throw std::invalid_argument(std::string(who) +
                                    ": requires 0 < alpha < beta < 1 - alpha");
}

double integrand(double x, double y, double beta) {
    return std::pow((x + y) * (beta - x) * (1.0 - beta - y), -1.5);
}

}  // namespace

double phi(double alpha, double beta, double tol) {
    check_region(alpha, beta, "phi");
    if (!(tol > 0.0)) throw std::invalid_argument("phi: tol must be > 0");

    const double eps = 1e-6;  // corner excision radius
    const double raw_tol = tol * 8.0 * M_PI;

    // Excised corner x+y <= eps: integrand ~ (x+y)^{-3/2} [beta(1-beta)]^{-3/2},
    // and the triangle integral of (x+y)^{-3/2} is 2 sqrt(eps). The neglected
    // variation is O(eps^{3/2}), far below tol.
    double corner = 2.0 * std::sqrt(eps) * std::pow(beta * (1.0 - beta), -1.5);

    double inner_tol = 0.45 * raw_tol / alpha;
    auto outer = [&](double y) {
        double lo = std::max(0.0, eps - y);
        double hi = alpha - y;
        if (lo >= hi) return 0.0;
        return adaptive_quad([&](double x) { return integrand(x, y, beta); },
                             lo, hi, inner_tol);
    };
    double raw = adaptive_quad(outer, 0.0, alpha, 0.45 * raw_tol);
    return (raw + corner) / (8.0 * M_PI);
}

double inner_antiderivative(double x, double y, double beta) {
    return (2.0 * x + y - beta) / std::sqrt((x + y) * (beta - x));
}

double phi_reduced(double alpha, double beta, double tol) {
    check_region(alpha, beta, "phi_reduced");
    if (!(tol > 0.0)) throw std::invalid_argument("phi_reduced: tol must be > 0");

    // Inner x-integral in closed form, then y = t^2 to remove the 1/sqrt(y)
    // endpoint singularity. The remaining integrand is smooth on [0, sqrt(alpha)].
    auto h = [&](double t) {
        double y = t * t;
        double outer = std::pow(1.0 - beta - y, -1.5) * 2.0 /
                       ((y + beta) * (y + beta));
        double upper = (2.0 * alpha - y - beta) * 2.0 * t /
                       std::sqrt(alpha * (beta - alpha + y));
        double lower = 2.0 * (beta - y) / std::sqrt(beta);
        return outer * (upper + lower);
    };
    double raw = adaptive_quad(h, 0.0, std::sqrt(alpha), tol * 8.0 * M_PI);
    return raw / (8.0 * M_PI);
}

double surface_value(double x, double y, double tol) {
    if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0))
        throw std::invalid_argument("surface_value: point outside (0,1)^2");
    if (std::abs(x - y) <= kDiagonalGuard ||
        std::abs(x + y - 1.0) <= kDiagonalGuard)
        throw std::invalid_argument("surface_value: point on a diagonal");
    if (x > y) std::swap(x, y);
    if (x + y > 1.0) {
        double nx = 1.0 - y, ny = 1.0 - x;
        x = nx;
        y = ny;
    }
    return phi_reduced(x, y, tol);
}

SurfaceGrid surface_grid(int resolution, double tol) {
    if (resolution < 4 || resolution % 2 != 0)
        throw std::invalid_argument("surface_grid: resolution must be even and >= 4");
    int g = resolution;
    double cell = 1.0 / g;
    // quarter-cell offset for diagonal-centered cells, so even the corner
    // cell stays strictly inside the open region
    double h = 0.25 * cell;

    SurfaceGrid grid;
    grid.resolution = g;
    grid.tol = tol;
    grid.values.assign(static_cast<size_t>(g),
                       std::vector<double>(static_cast<size_t>(g), 0.0));

    auto center = [&](int u) { return (u + 0.5) * cell; };

    std::vector<std::pair<int, int>> cells;
    for (int u = 0; u < g; ++u)
        for (int v = u; v + u <= g - 1; ++v) cells.emplace_back(u, v);

    parallel_for(cells.size(), [&](size_t idx) {
        auto [u, v] = cells[idx];
        {
            double x = center(u), y = center(v);
            double val;
            if (u == v) {
                // main-diagonal cell: evaluate half a cell off, symmetrically
                double c = x < 0.5 ? x : 1.0 - x;
                val = phi_reduced(c - h, c + h, tol);
            } else if (u + v == g - 1) {
                // antidiagonal cell (x < y here)
                val = phi_reduced(x, y - h, tol);
            } else {
                val = phi_reduced(x, y, tol);
            }
            auto set = [&](int a, int b) {
                grid.values[static_cast<size_t>(a)][static_cast<size_t>(b)] = val;
            };
            set(u, v);
            set(v, u);
            set(g - 1 - u, g - 1 - v);
            set(g - 1 - v, g - 1 - u);
        }
    });
    return grid;
}

std::vector<SliceRow> slice_compare(long m, double alpha,
                                    const std::vector<double>& betas) {
    if (m < 1 || m > 4000)
        throw std::invalid_argument("slice_compare: requires 1 <= m <= 4000");
    std::vector<SliceRow> rows;
    rows.reserve(betas.size());
    for (double beta : betas) {
        check_region(alpha, beta, "slice_compare");
        // nearest even integers, ties upward
        long i = 2 * std::lround(alpha * m);
        long j = 2 * std::lround(beta * m);
        if (i < 1 || j < 1 || i > 2 * m || j > 2 * m)
            throw std::invalid_argument("slice_compare: rounded index out of range");
        double p = probability_float(m, i, j);
        double ph = phi_reduced(alpha, beta, 1e-8);
        rows.push_back({beta, m * p, ph, m * p - ph});
    }
    return rows;
}

}  // namespace dab
