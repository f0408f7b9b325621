#include "entmono/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace entmono {

Complex parse_complex(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected a complex scalar as [re, im], got " + j.dump());
    double re = j[0].get<double>(), im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
        throw ParseError("non-finite complex scalar " + j.dump());
    return {re, im};
}

ComplexMatrix parse_matrix(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("expected a matrix as a nonempty array of rows");
    const size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw ParseError("expected each matrix row to be a nonempty array");
    const size_t cols = j[0].size();
    ComplexMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError("ragged matrix: row " + std::to_string(r) + " has " +
                             std::to_string(j[r].size()) + " entries, expected " +
                             std::to_string(cols));
        for (size_t c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c]);
    }
    return m;
}

BipartitePureState parse_bipartite_state(const Json& j) {
    return bipartite_from_matrix(parse_matrix(j));
}

TripartitePureState parse_tripartite_state(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("expected a tripartite state as a [2][2][n] array");
    size_t n = 0;
    for (int i = 0; i < 2; ++i) {
        if (!j[i].is_array() || j[i].size() != 2)
            throw ParseError("expected a tripartite state as a [2][2][n] array");
        for (int jj = 0; jj < 2; ++jj) {
            if (!j[i][jj].is_array() || j[i][jj].empty())
                throw ParseError("expected a tripartite state as a [2][2][n] array");
            if (n == 0) n = j[i][jj].size();
            if (j[i][jj].size() != n)
                throw ParseError("ragged tripartite state: expected n = " + std::to_string(n));
        }
    }
    ComplexMatrix amps(4, n);
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj)
            for (size_t k = 0; k < n; ++k)
                amps(2 * i + jj, k) = parse_complex(j[i][jj][k]);
    return tripartite_from_tensor(amps);
}

DensityMatrix parse_density_matrix(const Json& j) {
    return density_from_matrix(parse_matrix(j));
}

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Json complex_to_json(Complex z) {
    return Json::array({round12(z.real()), round12(z.imag())});
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json tripartite_to_json(const TripartitePureState& s) {
    Json top = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json mid = Json::array();
        for (int j = 0; j < 2; ++j) {
            Json inner = Json::array();
            for (int k = 0; k < s.n(); ++k) inner.push_back(complex_to_json(s.amp(i, j, k)));
            mid.push_back(std::move(inner));
        }
        top.push_back(std::move(mid));
    }
    return top;
}

Json povm_to_json(const PovmPair& p) {
    return Json{{"a1", matrix_to_json(p.a1)}, {"a2", matrix_to_json(p.a2)}};
}

Json fuzz_report_to_json(const FuzzReport& r) {
    Json worst;
    worst["state"] = r.worst.tripartite
                         ? tripartite_to_json(TripartitePureState{r.worst.state})
                         : matrix_to_json(r.worst.state);
    worst["povm"] = povm_to_json(r.worst.povm);
    worst["party"] = party_name(r.worst.party);
    worst["before"] = round12(r.worst.before);
    worst["avg"] = round12(r.worst.avg);
    worst["trial"] = r.worst.trial;
    return Json{{"trials_run", r.trials_run},
                {"max_violation", round12(r.max_violation)},
                {"passed", r.passed},
                {"worst_case", std::move(worst)}};
}

Json kinks_to_json(const std::vector<KinkReport>& kinks) {
    Json arr = Json::array();
    for (const KinkReport& k : kinks)
        arr.push_back(Json{{"measure", measure_name(k.measure)},
                           {"location", round12(k.location)},
                           {"jump", round12(k.jump)}});
    return arr;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) throw Error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot rename " + tmp + " to " + path);
    }
}

}  // namespace entmono
