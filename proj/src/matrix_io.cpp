#include "ccrflow/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ccrflow {

namespace {

MatrixXd parse_real_rows(const json& rows, int n, const char* what) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError(std::string("matrix: '") + what + "' must be an array of " +
                         std::to_string(n) + " rows");
    MatrixXd M(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(std::string("matrix: row ") + std::to_string(i) + " of '" + what +
                             "' must have " + std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j) {
            if (!row[j].is_number())
                throw ParseError(std::string("matrix: non-numeric entry in '") + what + "'");
            M(i, j) = row[j].get<double>();
        }
    }
    return M;
}

} // namespace

MatrixXcd matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re"))
        throw ParseError("matrix: expected object with 'dim' and 're'");
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
        throw ParseError("matrix: 'dim' must be a positive integer");
    const int n = j["dim"].get<int>();
    MatrixXd re = parse_real_rows(j["re"], n, "re");
    MatrixXd im = MatrixXd::Zero(n, n);
    if (j.contains("im") && !j["im"].is_null()) im = parse_real_rows(j["im"], n, "im");
    return re.cast<std::complex<double>>() +
           std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
}

MatrixXcd load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

json matrix_to_json(const MatrixXcd& M) {
    const int n = static_cast<int>(M.rows());
    json re = json::array(), im = json::array();
    bool has_im = false;
    for (int i = 0; i < n; ++i) {
        json rr = json::array(), ri = json::array();
        for (int j = 0; j < n; ++j) {
            rr.push_back(M(i, j).real());
            ri.push_back(M(i, j).imag());
            if (M(i, j).imag() != 0.0) has_im = true;
        }
        re.push_back(rr);
        im.push_back(ri);
    }
    json out;
    out["dim"] = n;
    out["re"] = re;
    out["im"] = has_im ? im : json(nullptr);
    return out;
}

json matrix_to_json(const MatrixXd& M) {
    return matrix_to_json(MatrixXcd(M.cast<std::complex<double>>()));
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void dump_rec(const json& j, std::ostringstream& os, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) { os << "{}"; return; }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad_in << json(it.key()).dump() << ": ";
                dump_rec(it.value(), os, indent, depth + 1);
            }
            os << "\n" << pad << "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) { os << "[]"; return; }
            os << "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) os << ",\n";
                first = false;
                os << pad_in;
                dump_rec(v, os, indent, depth + 1);
            }
            os << "\n" << pad << "]";
            return;
        }
        case json::value_t::number_float:
            os << format_double(j.get<double>());
            return;
        default:
            os << j.dump();
            return;
    }
}

} // namespace

std::string dump_json(const json& j, int indent) {
    std::ostringstream os;
    dump_rec(j, os, indent, 0);
    os << "\n";
    return os.str();
}

} // namespace ccrflow
