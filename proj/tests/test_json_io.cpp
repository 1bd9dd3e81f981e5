// Tests for the matrix JSON codec: bit-exact round trips, the omitted "im"
// convention, malformed-input rejection, and file round trips.

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "helpers.hpp"
#include "kreinalg/json_io.hpp"
#include "kreinalg/random.hpp"

using namespace krein;

namespace {

// Serialize-then-parse through the textual form, as the CLI does.
Matrix round_trip(const Matrix& m) {
    const std::string text = matrix_to_json(m).dump();
    return matrix_from_json(nlohmann::json::parse(text));
}

}  // namespace

TEST_CASE("matrix JSON round trips are bit exact") {
    const Matrix awkward = Matrix::from_rows(
        {{0.1, 1.0}, {1e-300, 3.0}, {-1.0 / 3.0, 2.2250738585072014e-308}});
    CHECK(testutil::entry_gap(round_trip(awkward), awkward) == 0.0);

    const cplx i{0.0, 1.0};
    const Matrix complex_m = Matrix::from_rows({{0.1 + 0.2 * i, -3.0}, {i, 1e17 * i}});
    CHECK(testutil::entry_gap(round_trip(complex_m), complex_m) == 0.0);

    SplitMix64 g(derive_seed(0x150A, 1));
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = random_matrix(g, 3, 4);
        CHECK(testutil::entry_gap(round_trip(m), m) == 0.0);
    }
}

TEST_CASE("the im field is omitted exactly for real matrices") {
    const nlohmann::json real_j = matrix_to_json(Matrix::from_rows({{1.0, 2.0}, {3.0, 4.0}}));
    CHECK_FALSE(real_j.contains("im"));
    CHECK(real_j["shape"][0] == 2);
    CHECK(real_j["shape"][1] == 2);
    CHECK(real_j["re"].size() == 4);
    CHECK(real_j["re"][1] == 2.0);

    const nlohmann::json complex_j =
        matrix_to_json(Matrix::from_rows({{1.0, cplx{0.0, 1e-30}}}));
    CHECK(complex_j.contains("im"));
    CHECK(complex_j["im"][1] == 1e-30);

    // Missing "im" parses as purely real.
    const Matrix parsed = matrix_from_json(real_j);
    for (std::size_t k = 0; k < parsed.size(); ++k) CHECK(parsed[k].imag() == 0.0);
}

TEST_CASE("malformed matrix JSON is rejected") {
    using nlohmann::json;
    REQUIRE_THROWS_AS(matrix_from_json(json::parse("[1,2,3]")), InputError);
    REQUIRE_THROWS_AS(matrix_from_json(json::parse("{\"re\":[1]}")), InputError);
    REQUIRE_THROWS_AS(matrix_from_json(json::parse("{\"shape\":[1,1]}")), InputError);
    REQUIRE_THROWS_AS(matrix_from_json(json::parse("{\"shape\":[1],\"re\":[1]}")),
                      InputError);
    REQUIRE_THROWS_AS(matrix_from_json(json::parse("{\"shape\":[-1,1],\"re\":[1]}")),
                      InputError);
    REQUIRE_THROWS_AS(matrix_from_json(json::parse("{\"shape\":[1,\"x\"],\"re\":[1]}")),
                      InputError);
    REQUIRE_THROWS_AS(matrix_from_json(json::parse("{\"shape\":[2,2],\"re\":[1,2,3]}")),
                      InputError);
    REQUIRE_THROWS_AS(
        matrix_from_json(json::parse("{\"shape\":[1,2],\"re\":[1,\"y\"]}")), InputError);
    REQUIRE_THROWS_AS(
        matrix_from_json(json::parse("{\"shape\":[1,2],\"re\":[1,2],\"im\":[0]}")),
        InputError);
    REQUIRE_THROWS_AS(
        matrix_from_json(json::parse("{\"shape\":[1,2],\"re\":[1,2],\"im\":[0,\"z\"]}")),
        InputError);
    // Non-finite entries are rejected by the matrix constructor and rewrapped.
    json inf_j;
    inf_j["shape"] = {1, 1};
    inf_j["re"] = {std::numeric_limits<double>::infinity()};
    REQUIRE_THROWS_AS(matrix_from_json(inf_j), InputError);
}

TEST_CASE("matrix files save and load") {
    const std::string path = "test_json_io_tmp_matrix.json";
    const Matrix m = Matrix::from_rows({{0.1, cplx{2.0, -0.25}}, {1e-7, 4.0}});
    save_matrix(path, m);
    const Matrix loaded = load_matrix(path);
    CHECK(testutil::entry_gap(loaded, m) == 0.0);
    std::remove(path.c_str());

    REQUIRE_THROWS_AS(load_matrix("definitely_missing_file.json"), InputError);

    // A file with broken JSON content.
    const std::string bad = "test_json_io_tmp_bad.json";
    {
        std::ofstream out(bad);
        out << "{not json";
    }
    REQUIRE_THROWS_AS(load_matrix(bad), InputError);
    std::remove(bad.c_str());
}
