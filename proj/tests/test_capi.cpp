#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <folis.h>

#include <json.hpp>

#include <cstring>
#include <string>

namespace {

std::string take(char* owned) {
    REQUIRE(owned != nullptr);
    std::string s = owned;
    folis_string_free(owned);
    return s;
}

folis_ci* make(int n, std::initializer_list<int> degrees) {
    std::vector<int> d(degrees);
    folis_ci* ci = nullptr;
    REQUIRE(folis_ci_create(n, d.data(), d.size(), &ci) == FOLIS_OK);
    REQUIRE(ci != nullptr);
    return ci;
}

}  // namespace

TEST_CASE("handle lifecycle and validation") {
    folis_ci* ci = make(3, {2, 2});
    CHECK(folis_ci_dimension(ci) == 1);
    folis_ci_destroy(ci);
    folis_ci_destroy(nullptr);  // harmless

    folis_ci* bad = nullptr;
    const int degrees[] = {2, 2, 2};
    CHECK(folis_ci_create(3, degrees, 3, &bad) == FOLIS_ERR_INVALID_ARGUMENT);
    CHECK(bad == nullptr);
    CHECK(std::strlen(folis_last_error()) > 0);
    CHECK(folis_ci_create(3, nullptr, 1, &bad) == FOLIS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scalar accessors") {
    folis_ci* ci = make(3, {2, 2});
    char* value = nullptr;

    CHECK(folis_ci_chi_section(ci, 0, &value) == FOLIS_OK);
    CHECK(take(value) == "0");
    CHECK(folis_ci_chi_section(ci, 1, &value) == FOLIS_OK);
    CHECK(take(value) == "4");
    CHECK(folis_ci_chi_section(ci, 7, &value) == FOLIS_ERR_INVALID_ARGUMENT);

    CHECK(folis_ci_polar_class(ci, 1, 0, &value) == FOLIS_OK);
    CHECK(take(value) == "8");
    CHECK(folis_ci_polar_class(ci, 1, 1, &value) == FOLIS_OK);
    CHECK(take(value) == "8");
    CHECK(folis_ci_polar_class(ci, 5, 0, &value) == FOLIS_ERR_INVALID_ARGUMENT);

    CHECK(folis_ci_singularity_count(ci, 2, &value) == FOLIS_OK);
    CHECK(take(value) == "4");
    CHECK(folis_ci_singularity_count(ci, 1, &value) == FOLIS_ERR_INVALID_ARGUMENT);

    CHECK(folis_ci_alpha(ci, &value) == FOLIS_OK);
    CHECK(take(value) == "2");
    CHECK(folis_ci_beta(ci, &value) == FOLIS_OK);
    CHECK(take(value) == "2");

    int min_degree = 0;
    CHECK(folis_ci_min_foliation_degree(ci, &min_degree) == FOLIS_OK);
    CHECK(min_degree == 2);
    folis_ci_destroy(ci);
}

TEST_CASE("rational values cross as p/q strings") {
    folis_ci* ci = make(5, {2, 2});
    char* value = nullptr;
    CHECK(folis_ci_alpha(ci, &value) == FOLIS_OK);
    CHECK(take(value) == "4/3");
    folis_ci_destroy(ci);
}

TEST_CASE("domain gates map to NOT_APPLICABLE") {
    folis_ci* even = make(3, {2});
    int out = 0;
    CHECK(folis_ci_min_foliation_degree(even, &out) == FOLIS_ERR_NOT_APPLICABLE);
    folis_ci_destroy(even);

    folis_ci* line = make(3, {1, 1});
    char* value = nullptr;
    CHECK(folis_ci_alpha(line, &value) == FOLIS_ERR_NOT_APPLICABLE);
    folis_ci_destroy(line);
}

TEST_CASE("json documents") {
    folis_ci* ci = make(3, {2, 2});
    char* out = nullptr;

    REQUIRE(folis_chi_json(ci, &out) == FOLIS_OK);
    const auto chi = nlohmann::json::parse(take(out));
    CHECK(chi["chi_sections"] == nlohmann::json({"0", "4"}));
    CHECK(chi["total_degree"] == "4");

    int agree = 0;
    REQUIRE(folis_count_json(ci, 2, &agree, &out) == FOLIS_OK);
    const auto count = nlohmann::json::parse(take(out));
    CHECK(agree == 1);
    CHECK(count["wronski_form"] == "4");
    CHECK(count["euler_form"] == "4");
    CHECK(count["chern_form"] == "4");

    REQUIRE(folis_bound_json(ci, &out) == FOLIS_OK);
    const auto bound = nlohmann::json::parse(take(out));
    CHECK(bound["alpha"] == "2");
    CHECK(bound["min_degree"] == "2");
    CHECK(bound["nonpositivity_threshold"] == "vacuous");

    REQUIRE(folis_polar_json(ci, &out) == FOLIS_OK);
    const auto polar = nlohmann::json::parse(take(out));
    CHECK(polar["polar_product_formula"] == nlohmann::json({"4", "8"}));
    CHECK(polar["paths_agree"] == true);

    folis_ci_destroy(ci);
}

TEST_CASE("end-to-end verification through the C API") {
    folis_solver_options options;
    folis_solver_options_init(&options);
    CHECK(options.seed == 0);
    CHECK(options.starts_per_chart == 200);

    int matches = 0;
    char* out = nullptr;
    REQUIRE(folis_verify_example2_json(&options, &matches, &out) == FOLIS_OK);
    const auto doc = nlohmann::json::parse(take(out));
    CHECK(matches == 1);
    CHECK(doc["formula_count"] == "4");
    CHECK(doc["solver"]["nondegenerate_count"] == "4");
    CHECK(doc["solver"]["distinct_points"] == "8");
    CHECK(doc["invariant"] == true);
    CHECK(doc["degree_bound"]["attained"] == true);

    // Same system through the text interface.
    const char* text =
        "field\n"
        "-1 * z1^2 * z2 + z1 * z3\n"
        "-1 * z1 * z2^2 + 2 * z2 * z3 - z1\n"
        "-1 * z1 * z2 * z3 - z2^2 + z3^2 + 1\n"
        "variety\n"
        "z1^2 + z2^2 + z3^2 + 1\n"
        "z1 * z3 + z2\n";
    REQUIRE(folis_verify_system_json(text, &options, &matches, &out) == FOLIS_OK);
    const auto custom = nlohmann::json::parse(take(out));
    CHECK(matches == 1);
    CHECK(custom["solver"]["nondegenerate_count"] == "4");

    CHECK(folis_verify_system_json("field\nnot a polynomial\nvariety\nz1\n", &options, &matches,
                                   &out) == FOLIS_ERR_PARSE);

    folis_solver_options broken = options;
    broken.starts_per_chart = 0;
    CHECK(folis_verify_example2_json(&broken, &matches, &out) == FOLIS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("example 1 through the C API") {
    int matches = 0;
    char* out = nullptr;
    REQUIRE(folis_verify_example1_json(1, 3, nullptr, &matches, &out) == FOLIS_OK);
    const auto doc = nlohmann::json::parse(take(out));
    CHECK(matches == 1);
    CHECK(doc["formula_count"] == "3");
    CHECK(doc["foliation_degree"] == "2");
    // Degree gate: ell = 2 gives a degree-1 foliation.
    CHECK(folis_verify_example1_json(1, 2, nullptr, &matches, &out) ==
          FOLIS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("version string") {
    CHECK(folis_version() != nullptr);
    CHECK(std::string(folis_version()) == "0.1.0");
}
