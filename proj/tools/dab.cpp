#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dab/catalan.hpp"
#include "dab/enumerate.hpp"
#include "dab/io.hpp"
#include "dab/perm.hpp"
#include "dab/sample.hpp"
#include "dab/surface.hpp"

namespace {

// exit codes: 0 success, 1 compute/suite failure, 2 usage error
constexpr int kOk = 0;
constexpr int kComputeFailure = 1;
constexpr int kUsageError = 2;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        dab::write_atomic(out_path, content);
}

// --n is an alias for the half-length flag: n = 2m, odd n only with --odd.
bool resolve_m(long& m, long n_alias, bool odd, std::string& err) {
    if (n_alias < 0) return true;  // not given
    if (m >= 0) {
        err = "give either --m or --n, not both";
        return false;
    }
    if (n_alias % 2 != 0 && !odd) {
        err = "--n must be even unless --odd is given";
        return false;
    }
    m = n_alias / 2;
    return true;
}

int run_exact(long m, const std::string& mode, const std::string& format,
              const std::string& out_path) {
    dab::MatrixMode mm =
        mode == "float" ? dab::MatrixMode::Float : dab::MatrixMode::Exact;
    if (mm == dab::MatrixMode::Exact && m > 256) {
        std::cerr << "error: exact mode bound is m <= 256\n";
        return kUsageError;
    }
    if (mm == dab::MatrixMode::Float && m > 4000) {
        std::cerr << "error: float mode bound is m <= 4000\n";
        return kUsageError;
    }
    dab::CountMatrix mat = dab::count_matrix(m, mm);
    emit(out_path,
         format == "json" ? dab::matrix_to_json(mat) : dab::matrix_to_csv(mat));
    return kOk;
}

int run_brute(int n, const std::string& out_path) {
    emit(out_path, dab::brute_matrix_to_csv(n, dab::brute_count_matrix(n)));
    return kOk;
}

struct Suite {
    std::string name;
    bool passed = true;
    std::string detail;
};

int run_verify(long max_m) {
    std::vector<Suite> suites;

    {
        Suite s{"brute vs lemma vs recurrence"};
        for (long m = 1; m <= max_m && s.passed; ++m) {
            auto brute = dab::brute_count_matrix(static_cast<int>(2 * m));
            for (long i = 1; i <= 2 * m && s.passed; ++i)
                for (long j = 1; j <= 2 * m && s.passed; ++j) {
                    dab::BigCount expected =
                        brute[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
                    dab::BigCount got = dab::count_b(m, i, j);
                    dab::BigCount rec = dab::count_b_recurrence(m, i, j);
                    if (got != expected || rec != expected) {
                        s.passed = false;
                        s.detail = "m=" + std::to_string(m) + " i=" +
                                   std::to_string(i) + " j=" + std::to_string(j) +
                                   " expected=" + expected.str() + " got=" +
                                   (got != expected ? got.str() : rec.str());
                    }
                }
        }
        suites.push_back(s);
    }
    {
        Suite s{"symmetries and row sums"};
        for (long m = 1; m <= max_m && s.passed; ++m) {
            auto mat = dab::count_matrix(m, dab::MatrixMode::Exact);
            dab::BigCount cm = dab::catalan(m);
            for (long i = 1; i <= 2 * m && s.passed; ++i) {
                dab::BigCount row = 0;
                for (long j = 1; j <= 2 * m; ++j) {
                    const auto& v =
                        mat.ints[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
                    row += v;
                    const auto& tr =
                        mat.ints[static_cast<size_t>(j) - 1][static_cast<size_t>(i) - 1];
                    const auto& ad = mat.ints[static_cast<size_t>(2 * m - j)]
                                             [static_cast<size_t>(2 * m - i)];
                    if (v != tr || v != ad) {
                        s.passed = false;
                        s.detail = "symmetry broken at m=" + std::to_string(m) +
                                   " i=" + std::to_string(i) + " j=" + std::to_string(j);
                    }
                }
                if (s.passed && row != cm) {
                    s.passed = false;
                    s.detail = "row sum " + row.str() + " != C_m at m=" +
                               std::to_string(m) + " i=" + std::to_string(i);
                }
            }
        }
        suites.push_back(s);
    }
    {
        Suite s{"partial convolution identities"};
        for (long r = 1; r <= 8 && s.passed; ++r)
            for (long ss = 1; ss <= 8 && s.passed; ++ss) {
                if (r + ss - 1 <= 14 &&
                    dab::partial_convolution(r, ss) != dab::dyck_oracle(r, ss)) {
                    s.passed = false;
                    s.detail = "p(r,s) != dyck oracle at r=" + std::to_string(r) +
                               " s=" + std::to_string(ss);
                }
                // p_{r,s} = C_{r+s-2} + sum_k C_{k-1} p_{r,s-k}
                dab::BigCount rhs = dab::catalan(r + ss - 2);
                for (long k = 1; k <= ss - 1; ++k)
                    rhs += dab::catalan(k - 1) * dab::partial_convolution(r, ss - k);
                if (s.passed && rhs != dab::partial_convolution(r, ss)) {
                    s.passed = false;
                    s.detail = "expansion identity failed at r=" +
                               std::to_string(r) + " s=" + std::to_string(ss);
                }
            }
        suites.push_back(s);
    }
    {
        Suite s{"sampler chi-square (m=3, 1e5 draws)"};
        auto outcomes = dab::enumerate_dab(6);
        std::vector<long long> hits(outcomes.size(), 0);
        const long draws = 100000;
        auto batch = dab::sample_batch(3, draws, 20250823);
        for (const auto& sigma : batch.permutations) {
            bool found = false;
            for (size_t o = 0; o < outcomes.size(); ++o)
                if (sigma == outcomes[o]) {
                    ++hits[o];
                    found = true;
                    break;
                }
            if (!found) {
                s.passed = false;
                s.detail = "sample outside B_6";
                break;
            }
        }
        if (s.passed) {
            double expect = static_cast<double>(draws) /
                            static_cast<double>(outcomes.size());
            double chi2 = 0.0;
            for (long long h : hits) {
                double d = static_cast<double>(h) - expect;
                chi2 += d * d / expect;
            }
            // chi-square 0.999 quantile, 4 degrees of freedom
            if (chi2 > 18.467) {
                s.passed = false;
                s.detail = "chi2 = " + std::to_string(chi2) + " > 18.467";
            }
        }
        suites.push_back(s);
    }

    bool all = true;
    for (const auto& s : suites) {
        std::cout << (s.passed ? "pass  " : "FAIL  ") << s.name;
        if (!s.passed) std::cout << "  (" << s.detail << ")";
        std::cout << "\n";
        all = all && s.passed;
    }
    return all ? kOk : kComputeFailure;
}

int run_sample(long m, long count, std::uint64_t seed, bool odd,
               const std::string& out_path) {
    emit(out_path, dab::batch_to_text(dab::sample_batch(m, count, seed, odd)));
    return kOk;
}

int run_surface(int grid, double tol, const std::string& out_path) {
    emit(out_path, dab::grid_to_csv(dab::surface_grid(grid, tol)));
    return kOk;
}

int run_slice(long m, double alpha, double beta_min, double beta_max,
              long steps, const std::string& out_path) {
    std::vector<double> betas;
    for (long s = 0; s < steps; ++s)
        betas.push_back(steps == 1 ? beta_min
                                   : beta_min + (beta_max - beta_min) * s /
                                         static_cast<double>(steps - 1));
    emit(out_path, dab::slice_to_csv(m, alpha, dab::slice_compare(m, alpha, betas)));
    return kOk;
}

int run_corners(long m, const std::string& out_path) {
    emit(out_path, dab::corners_to_csv(m, dab::corner_probabilities(m)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"doubly alternating Baxter permutations: exact counts, "
                 "uniform samples, and the limit surface"};
    app.require_subcommand(1);

    long m = -1, n_alias = -1, count = 1, steps = 41, max_m = 6;
    int n_brute = 4, grid = 100;
    std::uint64_t seed = 0;
    bool odd = false;
    double tol = 1e-6, alpha = 0.075, beta_min = 0.1, beta_max = 0.9;
    std::string mode = "exact", format = "csv", out_path;

    auto* exact = app.add_subcommand("exact", "emit the B(m,i,j) count matrix");
    exact->add_option("--m", m, "half-length (matrix is 2m x 2m)");
    exact->add_option("--n", n_alias, "full length alias (must be even)");
    exact->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
    exact->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    exact->add_option("--out", out_path);

    auto* brute = app.add_subcommand("brute", "emit the brute-force count matrix");
    brute->add_option("--n", n_brute, "permutation length")->check(CLI::Range(0, 13));
    brute->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run the oracle equivalence suites");
    verify->add_option("--max-m", max_m, "largest half-length checked");

    auto* sample = app.add_subcommand("sample", "draw uniform members of B_2m");
    sample->add_option("--m", m, "half-length");
    sample->add_option("--n", n_alias, "full length alias");
    sample->add_option("--count", count)->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed);
    sample->add_flag("--odd", odd, "sample from B_{2m+1} instead");
    sample->add_option("--out", out_path);

    auto* surface = app.add_subcommand("surface", "emit the limit surface grid");
    surface->add_option("--grid", grid, "grid resolution (even, >= 4)");
    surface->add_option("--tol", tol, "quadrature tolerance");
    surface->add_option("--out", out_path);

    auto* slice = app.add_subcommand("slice", "finite-m vs limit slice table");
    slice->add_option("--m", m, "half-length");
    slice->add_option("--alpha", alpha);
    slice->add_option("--beta-min", beta_min);
    slice->add_option("--beta-max", beta_max);
    slice->add_option("--steps", steps)->check(CLI::PositiveNumber);
    slice->add_option("--out", out_path);

    auto* corners = app.add_subcommand("corners", "exact corner probabilities");
    corners->add_option("--m", m, "half-length (>= 2)");
    corners->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        std::string err;
        if (!resolve_m(m, n_alias, odd, err)) {
            std::cerr << "error: " << err << "\n";
            return kUsageError;
        }
        if (exact->parsed()) {
            if (m < 1) {
                std::cerr << "error: exact requires --m (or --n)\n";
                return kUsageError;
            }
            return run_exact(m, mode, format, out_path);
        }
        if (brute->parsed()) return run_brute(n_brute, out_path);
        if (verify->parsed()) {
            if (max_m < 1 || max_m > 6) {
                std::cerr << "error: verify bound is 1 <= max-m <= 6\n";
                return kUsageError;
            }
            return run_verify(max_m);
        }
        if (sample->parsed()) {
            if (m < 0 || m > 2000) {
                std::cerr << "error: sample requires 0 <= m <= 2000\n";
                return kUsageError;
            }
            return run_sample(m, count, seed, odd, out_path);
        }
        if (surface->parsed()) {
            if (grid < 4 || grid % 2 != 0) {
                std::cerr << "error: --grid must be even and >= 4\n";
                return kUsageError;
            }
            if (tol <= 0) {
                std::cerr << "error: --tol must be > 0\n";
                return kUsageError;
            }
            return run_surface(grid, tol, out_path);
        }
        if (slice->parsed()) {
            if (m < 1 || m > 4000) {
                std::cerr << "error: slice requires 1 <= m <= 4000\n";
                return kUsageError;
            }
            return run_slice(m, alpha, beta_min, beta_max, steps, out_path);
        }
        if (corners->parsed()) {
            if (m < 2) {
                std::cerr << "error: corners requires m >= 2\n";
                return kUsageError;
            }
            return run_corners(m, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputeFailure;
    }
    return kUsageError;
}
