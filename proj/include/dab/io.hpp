#pragma once

#include <string>
#include <vector>

#include "dab/enumerate.hpp"
#include "dab/sample.hpp"
#include "dab/surface.hpp"

namespace dab {

/// Shortest round-trip decimal representation.
std::string format_double(double v);
double parse_double(const std::string& s);

// Matrix: header `# dab-matrix m=<m> mode=<exact|float>`, then 2m rows of
// 2m comma-separated values (decimal integers in exact mode).
std::string matrix_to_csv(const CountMatrix& mat);
CountMatrix matrix_from_csv(const std::string& text);

// JSON alternative: {"m":..., "mode":..., "rows":[[...],...]}; exact
// entries are decimal strings, float entries are numbers.
std::string matrix_to_json(const CountMatrix& mat);
CountMatrix matrix_from_json(const std::string& text);

// Brute-force oracle matrix: header `# dab-brute n=<n>`, then n rows.
std::string brute_matrix_to_csv(int n,
                                const std::vector<std::vector<long long>>& mat);

// Samples: header `# dab-sample m=<m> count=<c> seed=<s>`, one
// space-separated permutation per line.
std::string batch_to_text(const SampleBatch& batch);
SampleBatch batch_from_text(const std::string& text);

// Surface grid: header `# dab-surface G=<G> tol=<tol>`, then G rows of G floats.
std::string grid_to_csv(const SurfaceGrid& grid);
SurfaceGrid grid_from_csv(const std::string& text);

// Slice: header `# dab-slice m=<m> alpha=<alpha>`, rows `beta,mP,phi,diff`.
std::string slice_to_csv(long m, double alpha, const std::vector<SliceRow>& rows);

// Corner table, one `label,i,j,value,exact` line per entry.
std::string corners_to_csv(long m, const std::vector<CornerEntry>& entries);

/// Writes via a temp file in the same directory plus rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace dab
