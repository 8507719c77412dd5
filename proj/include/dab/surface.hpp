#pragma once

#include <vector>

namespace dab {

/// Limit density on the fundamental region 0 < alpha < beta < 1 - alpha:
///   phi(alpha,beta) = 1/(8 pi) int_0^alpha int_0^{alpha-y}
///                     dx dy / [(x+y)(beta-x)(1-beta-y)]^{3/2}.
/// Brute 2D adaptive quadrature on the corner-excised domain plus an
/// analytic bound on the excised corner mass. Retained as the independent
/// cross-check for phi_reduced.
double phi(double alpha, double beta, double tol = 1e-8);

/// Same value via the closed-form inner antiderivative, reduced to a 1D
/// integral with the y = t^2 endpoint substitution. Primary evaluator,
/// roughly two orders of magnitude cheaper than phi.
double phi_reduced(double alpha, double beta, double tol = 1e-8);

/// Antiderivative in x of [(x+y)(beta-x)]^{-3/2}, up to the factor
/// 2/(y+beta)^2: F(x) = (2x+y-beta)/sqrt((x+y)(beta-x)). Exposed so its
/// defining identity can be checked by finite differences.
double inner_antiderivative(double x, double y, double beta);

/// Extension Phi of phi to (0,1)^2 by reflection across both diagonals.
/// Rejects points within 1e-9 of either diagonal.
double surface_value(double x, double y, double tol = 1e-8);

struct SurfaceGrid {
    int resolution = 0;
    double tol = 0.0;
    std::vector<std::vector<double>> values;  // values[u][v] = Phi at cell center
};

/// Phi sampled at cell centers ((u+1/2)/G, (v+1/2)/G). Requires even
/// G >= 4. Cells whose center falls on a diagonal are evaluated half a
/// cell off the diagonal, symmetrically.
SurfaceGrid surface_grid(int resolution, double tol = 1e-6);

struct SliceRow {
    double beta = 0.0;
    double m_p = 0.0;   // m * P(m, i, j), float-mode
    double phi = 0.0;   // phi(alpha, beta)
    double diff = 0.0;  // m_p - phi
};

/// Finite-m vs limit comparison along a horizontal slice: indices round
/// 2*alpha*m and 2*beta*m to the nearest even integer, ties upward.
std::vector<SliceRow> slice_compare(long m, double alpha,
                                    const std::vector<double>& betas);

}  // namespace dab
