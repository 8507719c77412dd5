#include "dab/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Pulls `key=value` out of a `# name k1=v1 k2=v2` header line.
std::string header_field(const std::string& header, const std::string& key) {
    std::string needle = key + "=";
    size_t at = header.find(needle);
    if (at == std::string::npos)
        throw std::invalid_argument("missing header field: " + key);
    size_t start = at + needle.size();
    size_t end = header.find(' ', start);
    return header.substr(start, end == std::string::npos ? end : end - start);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad float: " + s);
    return v;
}

std::string matrix_to_csv(const CountMatrix& mat) {
    std::ostringstream out;
    out << "# dab-matrix m=" << mat.m << " mode="
        << (mat.mode == MatrixMode::Exact ? "exact" : "float") << "\n";
    long n = 2 * mat.m;
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            if (j) out << ",";
            if (mat.mode == MatrixMode::Exact)
                out << mat.ints[static_cast<size_t>(i)][static_cast<size_t>(j)].str();
            else
                out << format_double(
                    mat.floats[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        out << "\n";
    }
    return out.str();
}

CountMatrix matrix_from_csv(const std::string& text) {
    auto ls = lines_of(text);
    if (ls.empty() || ls[0].rfind("# dab-matrix ", 0) != 0)
        throw std::invalid_argument("not a dab-matrix file");
    CountMatrix mat;
    mat.m = std::stol(header_field(ls[0], "m"));
    std::string mode = header_field(ls[0], "mode");
    mat.mode = mode == "exact" ? MatrixMode::Exact : MatrixMode::Float;
    size_t n = static_cast<size_t>(2 * mat.m);
    if (ls.size() != n + 1) throw std::invalid_argument("bad row count");
    for (size_t i = 1; i <= n; ++i) {
        auto cells = split(ls[i], ',');
        if (cells.size() != n) throw std::invalid_argument("bad column count");
        if (mat.mode == MatrixMode::Exact) {
            std::vector<BigCount> row;
            row.reserve(n);
            for (auto& c : cells) row.emplace_back(c);
            mat.ints.push_back(std::move(row));
        } else {
            std::vector<double> row;
            row.reserve(n);
            for (auto& c : cells) row.push_back(parse_double(c));
            mat.floats.push_back(std::move(row));
        }
    }
    return mat;
}

std::string matrix_to_json(const CountMatrix& mat) {
    nlohmann::json j;
    j["m"] = mat.m;
    j["mode"] = mat.mode == MatrixMode::Exact ? "exact" : "float";
    nlohmann::json rows = nlohmann::json::array();
    long n = 2 * mat.m;
    for (long i = 0; i < n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (long jx = 0; jx < n; ++jx) {
            if (mat.mode == MatrixMode::Exact)
                row.push_back(
                    mat.ints[static_cast<size_t>(i)][static_cast<size_t>(jx)].str());
            else
                row.push_back(
                    mat.floats[static_cast<size_t>(i)][static_cast<size_t>(jx)]);
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump() + "\n";
}

CountMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CountMatrix mat;
    mat.m = j.at("m").get<long>();
    mat.mode = j.at("mode").get<std::string>() == "exact" ? MatrixMode::Exact
                                                          : MatrixMode::Float;
    for (const auto& row : j.at("rows")) {
        if (mat.mode == MatrixMode::Exact) {
            std::vector<BigCount> r;
            for (const auto& cell : row) r.emplace_back(cell.get<std::string>());
            mat.ints.push_back(std::move(r));
        } else {
            std::vector<double> r;
            for (const auto& cell : row) r.push_back(cell.get<double>());
            mat.floats.push_back(std::move(r));
        }
    }
    return mat;
}

std::string brute_matrix_to_csv(int n,
                                const std::vector<std::vector<long long>>& mat) {
    std::ostringstream out;
    out << "# dab-brute n=" << n << "\n";
    for (const auto& row : mat) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << ",";
            out << row[j];
        }
        out << "\n";
    }
    return out.str();
}

std::string batch_to_text(const SampleBatch& batch) {
    std::ostringstream out;
    out << "# dab-sample m=" << batch.m << " count=" << batch.count
        << " seed=" << batch.seed << "\n";
    for (const auto& sigma : batch.permutations) {
        for (size_t i = 0; i < sigma.size(); ++i) {
            if (i) out << " ";
            out << sigma[i];
        }
        out << "\n";
    }
    return out.str();
}

SampleBatch batch_from_text(const std::string& text) {
    auto ls = lines_of(text);
    if (ls.empty() || ls[0].rfind("# dab-sample ", 0) != 0)
        throw std::invalid_argument("not a dab-sample file");
    SampleBatch batch;
    batch.m = std::stol(header_field(ls[0], "m"));
    batch.count = std::stol(header_field(ls[0], "count"));
    batch.seed = std::stoull(header_field(ls[0], "seed"));
    for (size_t i = 1; i < ls.size(); ++i) {
        Permutation sigma;
        for (const auto& tok : split(ls[i], ' '))
            if (!tok.empty()) sigma.push_back(std::stoi(tok));
        batch.permutations.push_back(std::move(sigma));
    }
    batch.odd = !batch.permutations.empty() &&
                batch.permutations[0].size() % 2 == 1;
    return batch;
}

std::string grid_to_csv(const SurfaceGrid& grid) {
    std::ostringstream out;
    out << "# dab-surface G=" << grid.resolution
        << " tol=" << format_double(grid.tol) << "\n";
    for (const auto& row : grid.values) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << ",";
            out << format_double(row[j]);
        }
        out << "\n";
    }
    return out.str();
}

SurfaceGrid grid_from_csv(const std::string& text) {
    auto ls = lines_of(text);
    if (ls.empty() || ls[0].rfind("# dab-surface ", 0) != 0)
        throw std::invalid_argument("not a dab-surface file");
    SurfaceGrid grid;
    grid.resolution = std::stoi(header_field(ls[0], "G"));
    grid.tol = parse_double(header_field(ls[0], "tol"));
    for (size_t i = 1; i < ls.size(); ++i) {
        std::vector<double> row;
        for (const auto& tok : split(ls[i], ','))
            row.push_back(parse_double(tok));
        grid.values.push_back(std::move(row));
    }
    return grid;
}

std::string slice_to_csv(long m, double alpha,
                         const std::vector<SliceRow>& rows) {
    std::ostringstream out;
    out << "# dab-slice m=" << m << " alpha=" << format_double(alpha) << "\n";
    for (const auto& r : rows)
        out << format_double(r.beta) << "," << format_double(r.m_p) << ","
            << format_double(r.phi) << "," << format_double(r.diff) << "\n";
    return out.str();
}

std::string corners_to_csv(long m, const std::vector<CornerEntry>& entries) {
    std::ostringstream out;
    out << "# dab-corners m=" << m << "\n";
    for (const auto& e : entries)
        out << e.label << "," << e.i << "," << e.j << ","
            << format_double(e.value) << "," << e.numerator.str() << "/"
            << e.denominator.str() << "\n";
    return out.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

}  // namespace dab
