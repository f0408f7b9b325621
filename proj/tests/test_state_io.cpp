#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "entmono/state_io.hpp"

using namespace entmono;

TEST_SUITE("state_io") {

TEST_CASE("parse_complex accepts [re, im] and nothing else") {
    CHECK(parse_complex(Json::parse("[1, 2]")) == Complex(1, 2));
    CHECK(parse_complex(Json::parse("[-0.5, 0]")) == Complex(-0.5, 0));

    CHECK_THROWS_AS(parse_complex(Json::parse("[1]")), ParseError);
    CHECK_THROWS_AS(parse_complex(Json::parse("[1, 2, 3]")), ParseError);
    CHECK_THROWS_AS(parse_complex(Json::parse("1.5")), ParseError);
    CHECK_THROWS_AS(parse_complex(Json::parse("[1, \"i\"]")), ParseError);
    // non-finite numbers cannot appear in JSON text, but Json values built
    // in code can carry them; the parser still refuses
    Json inf_pair = Json::array({std::numeric_limits<double>::infinity(), 0.0});
    CHECK_THROWS_AS(parse_complex(inf_pair), ParseError);
}

TEST_CASE("parse_matrix enforces rectangular shape") {
    ComplexMatrix m = parse_matrix(Json::parse("[[[1,0],[0,1]],[[2,0],[0,-1]]]"));
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    CHECK(m(0, 0) == Complex(1, 0));
    CHECK(m(0, 1) == Complex(0, 1));
    CHECK(m(1, 0) == Complex(2, 0));
    CHECK(m(1, 1) == Complex(0, -1));

    CHECK_THROWS_AS(parse_matrix(Json::parse("[]")), ParseError);
    CHECK_THROWS_AS(parse_matrix(Json::parse("[[]]")), ParseError);
    CHECK_THROWS_AS(parse_matrix(Json::parse("{\"rows\": 2}")), ParseError);
    CHECK_THROWS_AS(parse_matrix(Json::parse("[[[1,0],[0,0]],[[1,0]]]")), ParseError);
}

TEST_CASE("parse_bipartite_state normalizes and validates") {
    BipartitePureState s = parse_bipartite_state(Json::parse("[[[1,0],[0,0]],[[0,0],[1,0]]]"));
    CHECK(std::abs(s.psi(0, 0) - Complex(1 / std::sqrt(2.0))) < 1e-12);
    CHECK_THROWS_AS(parse_bipartite_state(Json::parse("[[[0,0]]]")), ZeroStateError);
}

TEST_CASE("parse_tripartite_state reads the [2][2][n] nesting") {
    // GHZ
    Json j = Json::parse(
        "[[[[1,0],[0,0]],[[0,0],[0,0]]],[[[0,0],[0,0]],[[0,0],[1,0]]]]");
    TripartitePureState s = parse_tripartite_state(j);
    CHECK(s.n() == 2);
    CHECK(std::abs(s.amp(0, 0, 0) - Complex(1 / std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(s.amp(1, 1, 1) - Complex(1 / std::sqrt(2.0))) < 1e-12);

    // wrong outer arity
    CHECK_THROWS_AS(parse_tripartite_state(Json::parse("[[[[1,0]]],[[[0,0]]],[[[0,0]]]]")),
                    ParseError);
    // ragged n between (i, j) blocks
    CHECK_THROWS_AS(parse_tripartite_state(Json::parse(
                        "[[[[1,0]],[[0,0],[0,0]]],[[[0,0]],[[0,0]]]]")),
                    ParseError);
    // a matrix is not a tripartite tensor
    CHECK_THROWS_AS(parse_tripartite_state(Json::parse("[[[1,0],[0,0]],[[0,0],[1,0]]]")),
                    ParseError);
}

TEST_CASE("parse_density_matrix rejects invalid density matrices") {
    Json good = Json::parse("[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]");
    CHECK(parse_density_matrix(good).dim() == 2);

    Json not_herm = Json::parse("[[[0.5,0],[0.1,0]],[[0,0],[0.5,0]]]");
    CHECK_THROWS_AS(parse_density_matrix(not_herm), NotHermitianError);

    Json not_norm = Json::parse("[[[1,0],[0,0]],[[0,0],[1,0]]]");
    CHECK_THROWS_AS(parse_density_matrix(not_norm), NotNormalizedError);
}

TEST_CASE("serialization round-trips through 12 significant digits") {
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexMatrix m(3, 2);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 2; ++c) m(r, c) = rng.complex_gauss();
        ComplexMatrix back = parse_matrix(matrix_to_json(m));
        CHECK((back - m).cwiseAbs().maxCoeff() < 1e-11);
    }

    TripartitePureState s = random_tripartite_state(5, RngSeed{9});
    TripartitePureState back = parse_tripartite_state(tripartite_to_json(s));
    CHECK((back.amps - s.amps).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("fmt12 and round12 pin the numeric format") {
    CHECK(fmt12(2 / M_PI) == "0.636619772368");
    CHECK(fmt12(1.0) == "1");
    CHECK(fmt12(-0.25) == "-0.25");
    CHECK(round12(round12(0.1234567890123456)) == round12(0.1234567890123456));
    CHECK(round12(1e-300) == 1e-300);
}

TEST_CASE("fuzz_report_to_json carries the full witness") {
    FuzzConfig cfg;
    cfg.trials = 20;
    cfg.seed = 5;
    cfg.shape = FuzzShape::tripartite_c(3);
    cfg.parties = {Party::A, Party::B, Party::C};
    FuzzReport r = run_campaign(cfg);

    Json j = fuzz_report_to_json(r);
    CHECK(j["trials_run"] == 20);
    CHECK(j["passed"] == true);
    CHECK(j["max_violation"].is_number());
    CHECK(j["worst_case"]["party"].is_string());
    CHECK(j["worst_case"]["state"].is_array());
    CHECK(j["worst_case"]["state"].size() == 2);  // [2][2][n] nesting
    CHECK(j["worst_case"]["povm"]["a1"].is_array());
    CHECK(j["worst_case"]["povm"]["a2"].is_array());
    CHECK(j["worst_case"]["trial"] == r.worst.trial);

    // bipartite witnesses serialize the flat matrix instead
    cfg.shape = FuzzShape::bipartite(2, 2);
    cfg.parties = {Party::A, Party::B};
    Json jb = fuzz_report_to_json(run_campaign(cfg));
    CHECK(jb["worst_case"]["state"].size() == 2);  // two rows
    CHECK(jb["worst_case"]["state"][0][0].size() == 2);  // [re, im]
}

TEST_CASE("kinks_to_json") {
    std::vector<KinkReport> kinks{{Measure::E, 1.0, 1.86}, {Measure::C, 1.537, 0.38}};
    Json j = kinks_to_json(kinks);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["measure"] == "E");
    CHECK(j[0]["location"] == 1.0);
    CHECK(j[1]["measure"] == "C");
    CHECK(j[1]["jump"] == 0.38);
}

TEST_CASE("write_file_atomic leaves no temporary behind") {
    const char* path = "io_test_artifact.json";
    write_file_atomic(path, "{\"value\": 42}\n");
    Json j = load_json_file(path);
    CHECK(j["value"] == 42);

    std::ifstream tmp(std::string(path) + ".tmp");
    CHECK_FALSE(tmp.good());

    write_file_atomic(path, "{\"value\": 43}\n");  // overwrite works
    CHECK(load_json_file(path)["value"] == 43);
    std::remove(path);
}

TEST_CASE("load_json_file reports missing or broken files as ParseError") {
    CHECK_THROWS_AS(load_json_file("does_not_exist_1234.json"), ParseError);

    const char* path = "io_test_broken.json";
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK_THROWS_AS(load_json_file(path), ParseError);
    std::remove(path);
}

}  // TEST_SUITE
