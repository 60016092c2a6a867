#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rcsing.h>

#include <json.hpp>

#include <cstring>
#include <string>

namespace {

const char* kCusp = R"({"degree": 3, "a": "t^2*v", "b": "t^3", "c": "v^3"})";
const char* kNodeInline = "t^2*v - v^3; t^3 - t*v^2; v^3";

} // namespace

TEST_CASE("analyze handle lifecycle and accessors")
{
    rcsing_analysis* a = nullptr;
    char* err = nullptr;
    rcsing_status st = rcsing_analyze(kCusp, nullptr, &a, &err);
    REQUIRE(st == RCSING_OK);
    REQUIRE(a != nullptr);
    CHECK(err == nullptr);
    CHECK(rcsing_curve_degree(a) == 3);
    CHECK(rcsing_mu(a) == 1);
    CHECK(rcsing_singularity_count(a) == 1);
    CHECK(std::string(rcsing_orders(a)) == "2");
    CHECK(rcsing_budget_ok(a) == 1);
    CHECK(rcsing_is_incomplete(a) == 0);

    const char* json = rcsing_report_json(a);
    REQUIRE(json != nullptr);
    auto parsed = nlohmann::ordered_json::parse(json);
    CHECK(parsed["mu"] == 1);
    CHECK(parsed["smith"].size() == 2);
    CHECK(parsed["smith"][1] == "s^2");
    CHECK(parsed["singularities"][0]["order"] == 2);
    CHECK(parsed["singularities"][0]["formula"] == "t^2");
    CHECK(parsed["budget"]["ok"] == true);

    CHECK(rcsing_verify(a) == RCSING_OK);
    rcsing_analysis_free(a);
}

TEST_CASE("coefficient-array curve input")
{
    const char* spec =
        R"({"degree": 3, "a": ["0","0","1","0"], "b": ["0","0","0","1"], "c": ["1","0","0","0"]})";
    rcsing_analysis* a = nullptr;
    rcsing_status st = rcsing_analyze(spec, nullptr, &a, nullptr);
    REQUIRE(st == RCSING_OK);
    CHECK(rcsing_singularity_count(a) == 1); // the cuspidal cubic again
    rcsing_analysis_free(a);
}

TEST_CASE("error paths carry status codes and messages")
{
    rcsing_analysis* a = nullptr;
    char* err = nullptr;

    // Parse error with position info.
    CHECK(rcsing_analyze("t^2 +; t; v", nullptr, &a, &err) == RCSING_ERR_PARSE);
    REQUIRE(err != nullptr);
    CHECK(std::string(err).find("line") != std::string::npos);
    rcsing_string_free(err);
    err = nullptr;

    // Degenerate input: a line.
    CHECK(rcsing_analyze("t^3; t^3; v^3", nullptr, &a, &err) == RCSING_ERR_DEGENERATE);
    REQUIRE(err != nullptr);
    CHECK(std::string(err).find("linearly dependent") != std::string::npos);
    rcsing_string_free(err);
    err = nullptr;

    // Improper parametrization.
    CHECK(rcsing_analyze("t^4; t^2*v^2; v^4", nullptr, &a, &err) == RCSING_ERR_DEGENERATE);
    REQUIRE(err != nullptr);
    CHECK(std::string(err).find("improper") != std::string::npos);
    rcsing_string_free(err);

    CHECK(rcsing_analyze(nullptr, nullptr, &a, nullptr) == RCSING_ERR_NULLARG);
}

TEST_CASE("one-shot command runner")
{
    char* out = nullptr;
    char* err = nullptr;

    CHECK(rcsing_run("mubasis", kCusp, nullptr, "json", &out, &err) == RCSING_OK);
    REQUIRE(out != nullptr);
    auto j = nlohmann::ordered_json::parse(out);
    CHECK(j["mu"] == 1);
    rcsing_string_free(out);
    out = nullptr;

    CHECK(rcsing_run("smith", kNodeInline, nullptr, "json", &out, &err) == RCSING_OK);
    j = nlohmann::ordered_json::parse(out);
    CHECK(j["smith"][1] == "s^2 - u^2");
    CHECK(j["d_chain"][0] == "s^2 - u^2");
    rcsing_string_free(out);
    out = nullptr;

    CHECK(rcsing_run("implicit", kCusp, nullptr, "text", &out, &err) == RCSING_OK);
    CHECK(std::string(out).find("implicit curve degree: 3") != std::string::npos);
    rcsing_string_free(out);
    out = nullptr;

    CHECK(rcsing_run("verify", kNodeInline, nullptr, "json", &out, &err) == RCSING_OK);
    j = nlohmann::ordered_json::parse(out);
    CHECK(j["all_pass"] == true);
    rcsing_string_free(out);
    out = nullptr;

    CHECK(rcsing_run("compare-matrices", kCusp, nullptr, "text", &out, &err) == RCSING_OK);
    CHECK(std::string(out).find("ok") != std::string::npos);
    rcsing_string_free(out);
    out = nullptr;

    CHECK(rcsing_run("frobnicate", kCusp, nullptr, "text", &out, &err) ==
          RCSING_ERR_BADCOMMAND);
    if (err) rcsing_string_free(err);
}

TEST_CASE("version string")
{
    CHECK(rcsing_version() != nullptr);
    CHECK(std::strlen(rcsing_version()) > 0);
}
