#include "dab/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "dab/parallel.hpp"

namespace dab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct ExactTables {
    std::vector<BigCount> cat;                // C_0..C_max
    std::vector<std::vector<BigCount>> p;     // p[r][s], r+s <= cap

    const BigCount& c(long n) const {
        static const BigCount zero = 0;
        return n < 0 ? zero : cat[static_cast<size_t>(n)];
    }
};

ExactTables build_exact_tables(long c_max, long rs_cap) {
    ExactTables t;
    t.cat.reserve(static_cast<size_t>(c_max) + 1);
    for (long n = 0; n <= c_max; ++n) t.cat.push_back(catalan(n));
    t.p.assign(static_cast<size_t>(std::max(rs_cap, 1L)),
               std::vector<BigCount>());
    // Antidiagonal recurrence p_{r,s} = p_{r+1,s-1} + C_{r-1} C_{s-1},
    // base p_{r,1} = C_{r-1}.
    for (long r = 1; r < rs_cap; ++r) {
        t.p[static_cast<size_t>(r)].assign(static_cast<size_t>(rs_cap - r) + 1,
                                           BigCount(0));
        t.p[static_cast<size_t>(r)][1] = t.c(r - 1);
    }
    for (long n = 3; n <= rs_cap; ++n)
        for (long r = n - 2; r >= 1; --r) {
            long s = n - r;
            t.p[static_cast<size_t>(r)][static_cast<size_t>(s)] =
                t.p[static_cast<size_t>(r) + 1][static_cast<size_t>(s) - 1] +
                t.c(r - 1) * t.c(s - 1);
        }
    return t;
}

// Eq. with a = ceil(i/2), b = floor(j/2); negative Catalan indices
// contribute 0, which keeps the sum bounds literal.
BigCount lemma_eval(long m, long i, long j, const ExactTables& t) {
    long a = (i + 1) / 2;
    long b = j / 2;
    bool odd = (j % 2 != 0);
    BigCount total = odd ? t.c(b) * t.c(m - b - 1) : BigCount(0);
    for (long r = 1; r <= a - 1; ++r)
        for (long s = 1; s <= a - r; ++s) {
            const BigCount& prs = t.p[static_cast<size_t>(r)][static_cast<size_t>(s)];
            if (odd)
                total += prs * t.c(b - r + 1) * t.c(m - b - s - 1);
            else
                total += prs * t.c(b - r) * t.c(m - b - s);
        }
    return total;
}

struct LogTables {
    std::vector<double> lcat;
    std::vector<std::vector<double>> lp;

    double lc(long n) const {
        return n < 0 ? kNegInf : lcat[static_cast<size_t>(n)];
    }
};

double lse2(double x, double y) {
    if (x == kNegInf) return y;
    if (y == kNegInf) return x;
    double hi = std::max(x, y), lo = std::min(x, y);
    return hi + std::log1p(std::exp(lo - hi));
}

LogTables build_log_tables(long c_max, long rs_cap) {
    LogTables t;
    t.lcat.reserve(static_cast<size_t>(c_max) + 1);
    for (long n = 0; n <= c_max; ++n) t.lcat.push_back(catalan_log(n));
    t.lp.assign(static_cast<size_t>(std::max(rs_cap, 1L)),
                std::vector<double>());
    for (long r = 1; r < rs_cap; ++r) {
        t.lp[static_cast<size_t>(r)].assign(
            static_cast<size_t>(rs_cap - r) + 1, kNegInf);
        t.lp[static_cast<size_t>(r)][1] = t.lc(r - 1);
    }
    for (long n = 3; n <= rs_cap; ++n)
        for (long r = n - 2; r >= 1; --r) {
            long s = n - r;
            t.lp[static_cast<size_t>(r)][static_cast<size_t>(s)] =
                lse2(t.lp[static_cast<size_t>(r) + 1][static_cast<size_t>(s) - 1],
                     t.lc(r - 1) + t.lc(s - 1));
        }
    return t;
}

// Online log-sum-exp accumulator.
struct LogSum {
    double mx = kNegInf;
    double acc = 0.0;

    void add(double t) {
        if (t == kNegInf) return;
        if (t > mx) {
            acc = acc * std::exp(mx - t) + 1.0;
            mx = t;
        } else {
            acc += std::exp(t - mx);
        }
    }
    double value() const { return mx == kNegInf ? kNegInf : mx + std::log(acc); }
};

double lemma_eval_log(long m, long i, long j, const LogTables& t) {
    long a = (i + 1) / 2;
    long b = j / 2;
    bool odd = (j % 2 != 0);
    LogSum sum;
    if (odd) {
        double lead = t.lc(b) + t.lc(m - b - 1);
        if (b >= 0 && m - b - 1 >= 0) sum.add(lead);
    }
    for (long r = 1; r <= a - 1; ++r)
        for (long s = 1; s <= a - r; ++s) {
            double lprs = t.lp[static_cast<size_t>(r)][static_cast<size_t>(s)];
            double term = odd ? lprs + t.lc(b - r + 1) + t.lc(m - b - s - 1)
                              : lprs + t.lc(b - r) + t.lc(m - b - s);
            if (term != term) continue;  // -inf + inf cannot occur; NaN guard
            sum.add(term);
        }
    return sum.value();
}

struct Cell {
    long i, j;
    bool antidiag;
};

// Reflections B(m,i,j) = B(m,j,i) = B(m,2m+1-j,2m+1-i) map every cell into
// the region i <= j <= 2m-i except the antidiagonal i+j = 2m+1, which they
// fix.
Cell canonicalize(long m, long i, long j) {
    if (i > j) std::swap(i, j);
    if (i + j > 2 * m + 1) {
        long ni = 2 * m + 1 - j, nj = 2 * m + 1 - i;
        i = ni;
        j = nj;
    }
    return {i, j, i + j == 2 * m + 1};
}

void check_range(long m, long i, long j, const char* who) {
    if (m < 1 || i < 1 || j < 1 || i > 2 * m || j > 2 * m)
        throw std::invalid_argument(std::string(who) + ": indices out of range");
}

BigCount recurrence_value(long m, long i, long j);

// B(n,p,q) with out-of-range cells counting 0.
BigCount recurrence_guarded(long n, long p, long q) {
    if (n < 1 || p < 1 || q < 1 || p > 2 * n || q > 2 * n) return 0;
    return recurrence_value(n, p, q);
}

BigCount recurrence_value(long m, long i, long j) {
    Cell c = canonicalize(m, i, j);
    i = c.i;
    j = c.j;
    if (i == 1) {
        // first row: 0 for j even, C_b C_{m-b-1} for j = 2b+1
        if (j % 2 == 0) return 0;
        long b = j / 2;
        return catalan(b) * catalan(m - b - 1);
    }
    static std::map<std::tuple<long, long, long>, BigCount> memo;
    static std::mutex memo_mu;
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = memo.find({m, i, j});
        if (it != memo.end()) return it->second;
    }
    // canonical cells with i > 1 always have j < 2m, so the recurrence
    // (conditioning on the position 2k of the value 2m) applies
    BigCount total = 0;
    for (long k = 1; k <= (i + 1) / 2 - 1; ++k)
        total += catalan(k - 1) * recurrence_guarded(m - k, i - 2 * k, j);
    for (long k = m - j / 2 + 1; k <= m; ++k)
        total += catalan(m - k) * recurrence_guarded(k - 1, i - 1, 2 * m - j);
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        memo.emplace(std::make_tuple(m, i, j), total);
    }
    return total;
}

// log B(m,i,j) for a non-antidiagonal cell, via local log tables.
double count_b_log(long m, long i, long j, const LogTables& t) {
    Cell c = canonicalize(m, i, j);
    return lemma_eval_log(m, c.i, c.j, t);
}

double big_ratio(const BigCount& a, const BigCount& b) {
    if (a == 0) return 0.0;
    size_t bits = boost::multiprecision::msb(b);
    if (bits < 1000) return a.convert_to<double>() / b.convert_to<double>();
    auto log_big = [](const BigCount& x) {
        size_t k = boost::multiprecision::msb(x);
        if (k <= 62) return std::log(x.convert_to<double>());
        BigCount top = x >> (k - 62);
        return std::log(top.convert_to<double>()) +
               static_cast<double>(k - 62) * std::log(2.0);
    };
    return std::exp(log_big(a) - log_big(b));
}

}  // namespace

BigCount count_b_lemma(long m, long i, long j) {
    check_range(m, i, j, "count_b_lemma");
    if (!(i <= j && j <= 2 * m - i))
        throw std::invalid_argument("count_b_lemma: requires i <= j <= 2m-i");
    long a = (i + 1) / 2;
    ExactTables t = build_exact_tables(m, a);
    return lemma_eval(m, i, j, t);
}

BigCount count_b_recurrence(long m, long i, long j) {
    check_range(m, i, j, "count_b_recurrence");
    return recurrence_value(m, i, j);
}

BigCount count_b(long m, long i, long j) {
    check_range(m, i, j, "count_b");
    Cell c = canonicalize(m, i, j);
    if (c.antidiag) return recurrence_value(m, c.i, c.j);
    return count_b_lemma(m, c.i, c.j);
}

CountMatrix count_matrix(long m, MatrixMode mode) {
    if (m < 1) throw std::invalid_argument("count_matrix: m must be >= 1");
    long n = 2 * m;
    CountMatrix out;
    out.m = m;
    out.mode = mode;

    if (mode == MatrixMode::Exact) {
        if (m > 256)
            throw std::invalid_argument("count_matrix: exact mode bound is m <= 256");
        ExactTables t = build_exact_tables(m, (m + 1) / 2 + 1);
        out.ints.assign(static_cast<size_t>(n),
                        std::vector<BigCount>(static_cast<size_t>(n)));
        auto set = [&](long i, long j, const BigCount& v) {
            out.ints[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = v;
        };
        // distinct (i,j) orbits write disjoint cells, so rows parallelize
        parallel_for(static_cast<size_t>(2 * m), [&](size_t row) {
            long i = static_cast<long>(row) + 1;
            for (long j = i; i + j <= 2 * m + 1; ++j) {
                BigCount v = (i + j == 2 * m + 1) ? recurrence_value(m, i, j)
                                                  : lemma_eval(m, i, j, t);
                set(i, j, v);
                set(j, i, v);
                set(2 * m + 1 - j, 2 * m + 1 - i, v);
                set(2 * m + 1 - i, 2 * m + 1 - j, v);
            }
        });
        return out;
    }

    if (m > 4000)
        throw std::invalid_argument("count_matrix: float mode bound is m <= 4000");
    LogTables t = build_log_tables(m, (m + 1) / 2 + 1);
    double lcm = t.lc(m);
    out.floats.assign(static_cast<size_t>(n),
                      std::vector<double>(static_cast<size_t>(n), 0.0));
    auto set = [&](long i, long j, double v) {
        out.floats[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = v;
    };
    parallel_for(static_cast<size_t>(2 * m), [&](size_t row) {
        long i = static_cast<long>(row) + 1;
        for (long j = i; i + j <= 2 * m; ++j) {
            double lv = lemma_eval_log(m, i, j, t);
            double v = lv == kNegInf ? 0.0 : std::exp(lv - lcm);
            set(i, j, v);
            set(j, i, v);
            set(2 * m + 1 - j, 2 * m + 1 - i, v);
            set(2 * m + 1 - i, 2 * m + 1 - j, v);
        }
    });
    // antidiagonal cells: the reflections fix them and the summation
    // formula's hypothesis excludes them, so fill by row stochasticity;
    // cell (1, 2m) is 0 exactly (first row vanishes at even columns)
    for (long i = 1; i <= m; ++i) {
        long j = 2 * m + 1 - i;
        double v = 0.0;
        if (i > 1) {
            double s = 0.0;
            for (long jj = 1; jj <= 2 * m; ++jj)
                if (jj != j)
                    s += out.floats[static_cast<size_t>(i) - 1]
                                   [static_cast<size_t>(jj) - 1];
            v = std::max(0.0, 1.0 - s);
        }
        set(i, j, v);
        set(j, i, v);
    }
    return out;
}

double probability(long m, long i, long j) {
    check_range(m, i, j, "probability");
    if (m > 4000)
        throw std::invalid_argument("probability: bound is m <= 4000");
    if (m <= 256) {
        double v = big_ratio(count_b(m, i, j), catalan(m));
        return std::clamp(v, 0.0, 1.0);
    }
    return probability_float(m, i, j);
}

double probability_float(long m, long i, long j) {
    check_range(m, i, j, "probability_float");
    Cell c = canonicalize(m, i, j);
    long a = (c.i + 1) / 2;
    LogTables t = build_log_tables(m, a + 1);
    double lcm = t.lc(m);
    if (!c.antidiag) {
        double lv = lemma_eval_log(m, c.i, c.j, t);
        if (lv == kNegInf) return 0.0;
        return std::clamp(std::exp(lv - lcm), 0.0, 1.0);
    }
    // antidiagonal: cell (1, 2m) is 0 exactly by first-row parity;
    // otherwise take the complement of the rest of the row
    if (c.i == 1) return 0.0;
    double s = 0.0;
    for (long jj = 1; jj <= 2 * m; ++jj) {
        if (jj == c.j) continue;
        double lv = count_b_log(m, c.i, jj, t);
        if (lv != kNegInf) s += std::exp(lv - lcm);
    }
    return std::clamp(1.0 - s, 0.0, 1.0);
}

std::vector<CornerEntry> corner_probabilities(long m) {
    if (m < 2) throw std::invalid_argument("corner_probabilities: m must be >= 2");
    BigCount cm = catalan(m);
    auto entry = [&](const std::string& label, long i, long j) {
        BigCount b = count_b(m, i, j);
        return CornerEntry{label, i, j, b, cm, big_ratio(b, cm)};
    };
    return {
        entry("P(m,1,1)", 1, 1),
        entry("P(m,1,2m-1)", 1, 2 * m - 1),
        entry("P(m,2,2m-1)", 2, 2 * m - 1),
        entry("P(m,1,2)", 1, 2),
        entry("P(m,1,2m)", 1, 2 * m),
        entry("P(m,2,2)", 2, 2),
    };
}

}  // namespace dab
