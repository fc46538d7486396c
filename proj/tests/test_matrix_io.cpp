#include <doctest.h>

#include <complex>
#include <cstdio>
#include <fstream>

#include "ccrflow/matrix_io.hpp"

using namespace ccrflow;
using std::complex;

TEST_CASE("matrix JSON round trip (complex)") {
    MatrixXcd M(2, 2);
    M << complex<double>(0.5, 0.0), complex<double>(0.0, 0.3),
         complex<double>(0.0, -0.3), complex<double>(0.5, 0.0);
    json j = matrix_to_json(M);
    CHECK(j["dim"] == 2);
    CHECK(!j["im"].is_null());
    MatrixXcd back = matrix_from_json(j);
    CHECK(max_abs(back - M) == 0.0);
}

TEST_CASE("real matrices serialize with im: null") {
    MatrixXcd M = MatrixXcd::Identity(3, 3);
    json j = matrix_to_json(M);
    CHECK(j["im"].is_null());
    CHECK(max_abs(matrix_from_json(j) - M) == 0.0);
}

TEST_CASE("parser rejects malformed payloads") {
    CHECK_THROWS_AS(matrix_from_json(json::array()), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json{{"dim", 2}}), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json{{"dim", 0}, {"re", json::array()}}), ParseError);
    // wrong row count
    json j;
    j["dim"] = 2;
    j["re"] = json::array({json::array({1.0, 0.0})});
    CHECK_THROWS_AS(matrix_from_json(j), ParseError);
    // ragged row
    j["re"] = json::array({json::array({1.0, 0.0}), json::array({0.0})});
    CHECK_THROWS_AS(matrix_from_json(j), ParseError);
    // non-numeric entry
    j["re"] = json::array({json::array({1.0, "x"}), json::array({0.0, 1.0})});
    CHECK_THROWS_AS(matrix_from_json(j), ParseError);
}

TEST_CASE("load_matrix reports missing and malformed files") {
    CHECK_THROWS_AS(load_matrix("/nonexistent/definitely_missing.json"), ParseError);
    const char* path = "bad_matrix_test.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_matrix(path), ParseError);
    std::remove(path);
}

TEST_CASE("floats print with 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.0) == "-0");
}

TEST_CASE("dump_json is deterministic and order preserving") {
    json j;
    j["b"] = 1.5;
    j["a"] = json::array({1.0 / 3.0, json(nullptr)});
    const std::string s1 = dump_json(j);
    const std::string s2 = dump_json(j);
    CHECK(s1 == s2);
    // insertion order kept, not alphabetical
    CHECK(s1.find("\"b\"") < s1.find("\"a\""));
    CHECK(s1.find("0.33333333333333331") != std::string::npos);
}
