#include <algorithm>
#include <cmath>
#include <map>

#include "dab/catalan.hpp"
#include "dab/enumerate.hpp"
#include "dab/perm.hpp"
#include "dab/sample.hpp"
#include "doctest.h"

using dab::Permutation;

TEST_CASE("first_value_distribution: exact laws") {
    CHECK(dab::first_value_distribution(1) == std::vector<double>{1.0});
    auto q2 = dab::first_value_distribution(2);
    REQUIRE(q2.size() == 2);
    CHECK(q2[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(q2[1] == doctest::Approx(0.5).epsilon(1e-12));
    auto q3 = dab::first_value_distribution(3);
    REQUIRE(q3.size() == 3);
    CHECK(q3[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(q3[1] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(q3[2] == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("first_value_distribution: normalized in both regimes") {
    for (long m : {10L, 500L, 1000L, 1001L, 1500L, 2000L}) {
        auto q = dab::first_value_distribution(m);
        REQUIRE(q.size() == static_cast<std::size_t>(m));
        double sum = 0;
        for (double v : q) {
            CHECK(v >= 0.0);
            sum += v;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("first_value_distribution: log regime matches the float regime") {
    // m = 1001 switches to log space; m = 1000 does not
    auto lo = dab::first_value_distribution(1000);
    for (std::size_t k = 0; k < lo.size(); ++k) {
        // compare against the direct log-space formula
        double lq = dab::catalan_log(static_cast<long>(k)) +
                    dab::catalan_log(999 - static_cast<long>(k)) -
                    dab::catalan_log(1000);
        CHECK(lo[k] == doctest::Approx(std::exp(lq)).epsilon(1e-9));
    }
}

TEST_CASE("sample_even: forced small cases") {
    dab::RngState rng(12345);
    CHECK(dab::sample_even(0, rng) == Permutation{});
    CHECK(dab::sample_even(1, rng) == Permutation{1, 2});
    for (int t = 0; t < 50; ++t) {
        Permutation s = dab::sample_even(2, rng);
        bool ok = (s == Permutation{1, 3, 2, 4}) || (s == Permutation{3, 4, 1, 2});
        CHECK(ok);
    }
}

TEST_CASE("sample_odd: forced small cases") {
    dab::RngState rng(777);
    CHECK(dab::sample_odd(0, rng) == Permutation{1});
    CHECK(dab::sample_odd(1, rng) == Permutation{1, 3, 2});
    auto b5 = dab::enumerate_dab(5);
    for (int t = 0; t < 50; ++t) {
        Permutation s = dab::sample_odd(2, rng);
        CHECK(std::find(b5.begin(), b5.end(), s) != b5.end());
    }
}

TEST_CASE("samples are valid members with the right length") {
    dab::RngState rng(99);
    for (long m : {1L, 2L, 3L, 5L, 8L, 10L, 25L, 50L}) {
        for (int t = 0; t < 300; ++t) {
            Permutation s = dab::sample_even(m, rng);
            REQUIRE(s.size() == static_cast<std::size_t>(2 * m));
            CHECK(s[0] % 2 == 1);
            CHECK(dab::is_dab(s));
        }
        Permutation o = dab::sample_odd(m, rng);
        REQUIRE(o.size() == static_cast<std::size_t>(2 * m + 1));
        CHECK(o[0] == 1);
        CHECK(dab::is_dab(o));
    }
}

TEST_CASE("deep samples stay valid (m = 1000)") {
    dab::RngState rng(4242);
    for (int t = 0; t < 10; ++t) {
        Permutation s = dab::sample_even(1000, rng);
        REQUIRE(s.size() == 2000);
        CHECK(dab::is_dab(s));
    }
}

TEST_CASE("chi-square uniformity over the 5 outcomes at m = 3") {
    auto outcomes = dab::enumerate_dab(6);
    REQUIRE(outcomes.size() == 5);
    const long N = 100000;
    std::map<Permutation, long> hits;
    dab::RngState rng(20260823);
    for (long t = 0; t < N; ++t) ++hits[dab::sample_even(3, rng)];
    double expected = static_cast<double>(N) / 5.0;
    double chi2 = 0;
    for (const auto& o : outcomes) {
        double d = static_cast<double>(hits[o]) - expected;
        chi2 += d * d / expected;
    }
    CHECK(hits.size() == 5);            // no foreign outcomes
    CHECK(chi2 < 18.467);               // chi2_{4, 1-1e-3}
}

TEST_CASE("first-value frequencies match the law within 3 standard errors") {
    const long m = 10, N = 100000;
    auto q = dab::first_value_distribution(m);
    std::vector<long> hits(m, 0);
    dab::RngState rng(555);
    for (long t = 0; t < N; ++t) {
        Permutation s = dab::sample_even(m, rng);
        ++hits[(s[0] - 1) / 2];
    }
    for (long k = 0; k < m; ++k) {
        double freq = static_cast<double>(hits[k]) / N;
        double se = std::sqrt(q[k] * (1 - q[k]) / N);
        CHECK(std::abs(freq - q[k]) <= 3 * se + 1e-12);
    }
}

TEST_CASE("batches are deterministic and order-independent in seed") {
    auto a = dab::sample_batch(7, 25, 31337);
    auto b = dab::sample_batch(7, 25, 31337);
    CHECK(a.permutations == b.permutations);
    // sample i depends only on derive_seed(seed, i)
    dab::RngState solo(dab::derive_seed(31337, 13));
    CHECK(a.permutations[13] == dab::sample_even(7, solo));
    auto odd = dab::sample_batch(4, 5, 9, true);
    for (const auto& s : odd.permutations) CHECK(s.size() == 9);
}

TEST_CASE("empirical_matrix: converges to the exact matrix") {
    auto e1 = dab::empirical_matrix(1, 10, 1);
    CHECK(e1[0][0] == 1.0);

    auto e2 = dab::empirical_matrix(2, 100000, 2);
    CHECK(std::abs(e2[0][0] - 0.5) <= 0.01);

    long m = 6;
    auto emp = dab::empirical_matrix(m, 100000, 3);
    auto ex = dab::count_matrix(m, dab::MatrixMode::Float);
    double worst = 0;
    for (long i = 0; i < 2 * m; ++i) {
        double rowsum = 0;
        for (long j = 0; j < 2 * m; ++j) {
            worst = std::max(worst, std::abs(emp[i][j] - ex.floats[i][j]));
            rowsum += emp[i][j];
        }
        CHECK(rowsum == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(worst <= 0.02);
}
