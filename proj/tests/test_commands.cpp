#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include <centraldeg/commands.hpp>

using namespace centraldeg;

namespace {

RunConfig degree_config(std::string family, int m, int d, std::string method)
{
    RunConfig rc;
    rc.command = "degree";
    rc.family = std::move(family);
    rc.m = m;
    rc.d = d;
    rc.method = std::move(method);
    return rc;
}

} // namespace

TEST(DegreeCommand, LPAllMethodsAgree)
{
    const CommandResult res = cmd_degree(degree_config("lp", 5, 2, "all"));
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_TRUE(res.json["agree"].get<bool>());
    ASSERT_EQ(res.json["reports"].size(), 3u);
    std::vector<std::string> methods;
    for (const auto& r : res.json["reports"]) {
        EXPECT_EQ(r["value"].get<int>(), 6);
        methods.push_back(r["method"].get<std::string>());
    }
    EXPECT_EQ(methods, (std::vector<std::string>{"formula", "polytope", "homotopy"}));
}

TEST(DegreeCommand, QPAllMethodsAgree)
{
    const CommandResult res = cmd_degree(degree_config("qp", 5, 2, "all"));
    EXPECT_EQ(res.exit_code, 0);
    for (const auto& r : res.json["reports"]) {
        EXPECT_EQ(r["value"].get<int>(), 11);
    }
}

TEST(DegreeCommand, SdpRationalCurve)
{
    const CommandResult formula = cmd_degree(degree_config("sdp", 3, 1, "formula"));
    EXPECT_EQ(formula.json["value"].get<int>(), 2);
    EXPECT_EQ(formula.json["method"].get<std::string>(), "reference");
    const CommandResult hom = cmd_degree(degree_config("sdp", 3, 1, "homotopy"));
    EXPECT_EQ(hom.exit_code, 0);
    EXPECT_EQ(hom.json["count"].get<int>(), 2);
    EXPECT_EQ(hom.json["family"].get<std::string>(), "sdp");

    const CommandResult poly = cmd_degree(degree_config("sdp", 3, 1, "polytope"));
    EXPECT_EQ(poly.exit_code, 1);
    EXPECT_TRUE(poly.json.contains("error"));
}

TEST(DegreeCommand, SosReferenceAndRefusal)
{
    RunConfig rc = degree_config("sos", 0, 0, "formula");
    rc.n = 2;
    rc.two_D = 6;
    const CommandResult res = cmd_degree(rc);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.json["value"].get<int>(), 7);
    EXPECT_EQ(res.json["m"].get<int>(), 4);
    EXPECT_EQ(res.json["d"].get<int>(), 7);

    rc.method = "homotopy";
    rc.two_D = 8;
    const CommandResult refused = cmd_degree(rc);
    EXPECT_EQ(refused.exit_code, 1);
    EXPECT_EQ(refused.json["reference"].get<int>(), 45);
    rc.n = 3;
    rc.two_D = 4;
    EXPECT_EQ(cmd_degree(rc).json["reference"].get<int>(), 66);
}

TEST(DegreeCommand, BudgetRefusalIsNonzeroExit)
{
    RunConfig rc = degree_config("lp", 6, 2, "homotopy");
    rc.tracker.max_paths = 8;
    const CommandResult res = cmd_degree(rc);
    EXPECT_EQ(res.exit_code, 1);
    EXPECT_TRUE(res.json.contains("refused"));
}

TEST(DegreeCommand, RejectsInvalidDimensions)
{
    EXPECT_THROW(cmd_degree(degree_config("lp", 3, 3, "formula")), std::invalid_argument);
    EXPECT_THROW(cmd_degree(degree_config("sdp", 3, 6, "formula")), std::invalid_argument);
    EXPECT_THROW(cmd_degree(degree_config("lp", 4, 2, "guess")), std::invalid_argument);
}

TEST(GenusCommand, Examples)
{
    RunConfig rc;
    rc.m = 5;
    rc.d = 2;
    EXPECT_EQ(cmd_genus("lp", rc).json["value"].get<int>(), 3);
    rc.m = 4;
    rc.d = 7;
    const CommandResult special = cmd_genus("sdp-special", rc);
    EXPECT_EQ(special.exit_code, 0);
    EXPECT_EQ(special.json["value"].get<int>(), 10);
    rc.d = 4;
    const CommandResult refused = cmd_genus("sdp-special", rc);
    EXPECT_EQ(refused.exit_code, 1);
    EXPECT_TRUE(refused.json.contains("refused"));
    EXPECT_FALSE(refused.json.contains("value"));
    rc.hvector = {1, 1, 1};
    EXPECT_EQ(cmd_genus("hvector", rc).json["value"].get<int>(), 1);
}

TEST(PathCommand, LPGapLaw)
{
    RunConfig rc;
    rc.family = "lp";
    rc.m = 6;
    rc.d = 2;
    rc.schedule.n_steps = 20;
    const CommandResult res = cmd_path(rc);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.json["samples"].get<int>(), 20);
    EXPECT_LT(res.json["check"]["max_gap_error"].get<double>(), 1e-6);
    EXPECT_EQ(std::count(res.csv.begin(), res.csv.end(), '\n'), 21);
}

TEST(PathCommand, SdpFeasibleAndDeterministic)
{
    RunConfig rc;
    rc.family = "sdp";
    rc.m = 3;
    rc.d = 2;
    const auto out = std::filesystem::temp_directory_path() / "centraldeg_path_cmd.csv";
    rc.out = out.string();
    const CommandResult a = cmd_path(rc);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_TRUE(a.json["check"]["strictly_feasible"].get<bool>());
    std::ifstream f(out, std::ios::binary);
    const std::string file((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    EXPECT_EQ(file, a.csv);
    const CommandResult b = cmd_path(rc);
    EXPECT_EQ(a.csv, b.csv);
    EXPECT_EQ(a.json.dump(), b.json.dump());
    std::filesystem::remove(out);
}

TEST(InstanceCommand, SeedSelectsInstance)
{
    RunConfig rc;
    rc.family = "lp";
    rc.m = 4;
    rc.d = 2;
    rc.seed = 3;
    const auto a = cmd_instance(rc).json.dump();
    EXPECT_EQ(a, cmd_instance(rc).json.dump());
    rc.seed = 4;
    EXPECT_NE(a, cmd_instance(rc).json.dump());
    const LPInstance lp = lp_from_json(nlohmann::json::parse(a));
    EXPECT_EQ(lp.A, random_lp(4, 2, 3).A);
}

TEST(OutputFormat, ParsesAndRendersText)
{
    EXPECT_EQ(output_format_from_string("csv"), OutputFormat::csv);
    EXPECT_THROW(output_format_from_string("xml"), std::invalid_argument);
    const nlohmann::ordered_json j = {{"a", 1}, {"b", {{"c", true}}}};
    const std::string text = render_text(j);
    EXPECT_NE(text.find("a: 1"), std::string::npos);
    EXPECT_NE(text.find("c: true"), std::string::npos);
}

TEST(ReproduceCommand, DeskScaleClaimsWithoutSos)
{
    RunConfig rc;
    const CommandResult res = cmd_reproduce(rc, {.include_sos = false, .on_claim = {}});
    ASSERT_TRUE(res.json["all_pass"].is_boolean());
    std::vector<std::string> ids;
    for (const auto& c : res.json["claims"]) {
        ids.push_back(c["id"].get<std::string>());
        EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
    }
    EXPECT_EQ(ids.size(), 7u);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.json.dump().find("runtime"), std::string::npos);
}
