#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dab {

namespace detail {

// Gauss-Kronrod 15-point rule with embedded Gauss 7-point rule on [-1,1].
// Nodes are symmetric; only the nonnegative half is tabulated.
inline constexpr std::array<double, 8> kGK15Nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kGK15Weights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Gauss-7 weights at the odd Kronrod nodes (indices 1,3,5,7).
inline constexpr std::array<double, 4> kG7Weights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gk15(F&& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double kronrod = 0.0, gauss = 0.0;
    for (size_t i = 0; i < 8; ++i) {
        double x = kGK15Nodes[i] * h;
        double fv = (i == 7) ? f(c) : f(c - x) + f(c + x);
        kronrod += kGK15Weights[i] * fv;
        if (i % 2 == 1) gauss += kG7Weights[i / 2] * fv;
    }
    kronrod *= h;
    gauss *= h;
    // |K - G| overestimates the Kronrod error for smooth integrands
    return {kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] to an absolute
/// tolerance. Interval bisection with a worklist; throws if the interval
/// budget is exhausted before the tolerance is met.
template <class F>
double adaptive_quad(F&& f, double a, double b, double abs_tol,
                     std::size_t max_intervals = 200000) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("adaptive_quad: tol must be > 0");
    if (a == b) return 0.0;

    struct Segment {
        double a, b, value, error;
    };
    auto [v0, e0] = detail::gk15(f, a, b);
    std::vector<Segment> segs{{a, b, v0, e0}};
    double total_err = e0;

    while (total_err > abs_tol) {
        // split the worst segment
        size_t worst = 0;
        for (size_t i = 1; i < segs.size(); ++i)
            if (segs[i].error > segs[worst].error) worst = i;
        Segment s = segs[worst];
        double mid = 0.5 * (s.a + s.b);
        if (mid == s.a || mid == s.b)
            break;  // interval at machine resolution; error estimate is noise
        auto [vl, el] = detail::gk15(f, s.a, mid);
        auto [vr, er] = detail::gk15(f, mid, s.b);
        total_err += el + er - s.error;
        segs[worst] = {s.a, mid, vl, el};
        segs.push_back({mid, s.b, vr, er});
        if (segs.size() > max_intervals)
            throw std::runtime_error("adaptive_quad: interval budget exhausted");
    }
    double total = 0.0;
    for (const auto& s : segs) total += s.value;
    return total;
}

}  // namespace dab
