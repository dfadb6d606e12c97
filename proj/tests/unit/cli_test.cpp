#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"
#include "render.hpp"

using runpoly::cli::run;
using Json = nlohmann::json;

TEST(CliTable, RunsCsv) {
  const auto r = run({"table", "runs", "--n", "4", "--format", "csv"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "n,k,count\n4,1,2\n4,2,12\n4,3,10\n");
}

TEST(CliTable, DescentsSingleRow) {
  const auto r = run({"table", "descents", "--n", "1", "--format", "csv"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "n,k,count\n1,0,1\n");
}

TEST(CliTable, TJson) {
  const auto r = run({"table", "t", "--n", "4", "--j", "1", "--format", "json"});
  ASSERT_EQ(r.exit_code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "table");
  EXPECT_EQ(j["format"], "json");
  EXPECT_EQ(j["parameters"]["j"], 1);
  EXPECT_EQ(j["payload"]["rows"][0]["k"], 1);
  EXPECT_EQ(j["payload"]["rows"][0]["count"], "2");
  EXPECT_EQ(j["payload"]["rows"][1]["count"], "10");
  EXPECT_EQ(j["payload"]["total"], "12");
}

TEST(CliTable, DefaultFormatComesFromCaller) {
  const auto r = run({"table", "runs", "--n", "3"}, "csv");
  EXPECT_EQ(r.out, "n,k,count\n3,1,2\n3,2,4\n");
  const auto flag = run({"table", "runs", "--n", "3", "--format", "text"}, "csv");
  EXPECT_NE(flag.out.find("count"), std::string::npos);
  EXPECT_EQ(flag.out.find("n,k,count"), std::string::npos);
  EXPECT_EQ(run({"table", "runs", "--n", "3"}, "xml").exit_code, 2);
}

TEST(CliTable, ExitCodes) {
  EXPECT_EQ(run({"table", "runs", "--n", "11"}).exit_code, 3);
  EXPECT_EQ(run({"table", "runs", "--n", "11", "--max-n", "11", "--format", "csv"}).exit_code, 0);
  EXPECT_EQ(run({"table", "runs", "--n", "1"}).exit_code, 2);
  EXPECT_EQ(run({"table", "nope", "--n", "4"}).exit_code, 2);
  EXPECT_EQ(run({"table", "t", "--n", "4"}).exit_code, 2);
  EXPECT_EQ(run({"table", "runs", "--n", "4", "--j", "1"}).exit_code, 2);
  EXPECT_EQ(run({"table", "runs"}).exit_code, 2);
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(CliVerify, QuotientsForAllJ) {
  const auto r = run({"verify", "lemma-difficult", "--n", "8", "--format", "json"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["payload"]["passed"]);
  EXPECT_EQ(j["payload"]["checks"].size(), 4u);
}

TEST(CliVerify, BijectionReportsRoundtrips) {
  const auto r = run({"verify", "bijection", "--n", "7"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("5040 roundtrips"), std::string::npos);
}

TEST(CliVerify, PhiAuditPayload) {
  const auto r = run({"verify", "phi-audit", "--n", "6", "--k", "2", "--restriction", "V", "--format", "json"});
  ASSERT_EQ(r.exit_code, 0);
  const auto j = Json::parse(r.out);
  const auto& audit = j["payload"]["audits"][0];
  EXPECT_EQ(audit["restriction"], "V");
  EXPECT_TRUE(audit["domain_pairs"].is_string());
  EXPECT_TRUE(audit["elapsed_ms"].is_number_integer());
  for (const char* key : {"domain_pairs", "defined", "undefined", "injective", "target_intersecting_pairs",
                          "image_size", "intersecting_nonimage"}) {
    EXPECT_TRUE(audit.contains(key)) << key;
  }
}

TEST(CliVerify, NoTimingIsByteStable) {
  const std::vector<std::string> args{"verify", "phi-audit", "--n", "5", "--format", "json", "--no-timing"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("elapsed"), std::string::npos);
}

TEST(CliVerify, AllInFixedOrderWithSkips) {
  const auto r = run({"verify", "all", "--n", "5", "--format", "json", "--no-timing"});
  ASSERT_EQ(r.exit_code, 0) << r.out << r.err;
  const auto j = Json::parse(r.out);
  std::vector<std::string> order;
  for (const auto& c : j["payload"]["checks"]) {
    const std::string name = c["name"];
    const std::string target = name.substr(0, name.find(':'));
    if (order.empty() || order.back() != target) order.push_back(target);
    if (target == "trivi") EXPECT_EQ(c["status"], "skip");
  }
  EXPECT_EQ(order, (std::vector<std::string>{"divisibility", "lemma-difficult", "trivi", "bijection",
                                             "dp-oracle", "invariance", "log-concavity", "phi-audit"}));
}

TEST(CliVerify, ExitCodes) {
  EXPECT_EQ(run({"verify", "trivi", "--n", "5"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "phi-audit", "--n", "6", "--k", "5"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "bogus", "--n", "6"}).exit_code, 2);
  EXPECT_EQ(run({"verify", "phi-audit", "--n", "7", "--k", "3", "--max-pairs", "1000"}).exit_code, 3);
  EXPECT_EQ(run({"verify", "divisibility", "--n", "12"}).exit_code, 3);
}

TEST(CliVerify, CsvHasHeader) {
  const auto r = run({"verify", "divisibility", "--n", "6", "--format", "csv"});
  EXPECT_EQ(r.out.rfind("target,check,status,detail\n", 0), 0u);
}

TEST(CliDraw, Staircase) {
  const auto r = run({"draw", "--perm", "243165"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "permutation: 243165\n"
            "edges: H1 H1 V2 V1 H1 V5\n"
            "\n"
            "            +\n"
            "            |5\n"
            "        +-1-+\n"
            "        |1\n"
            "        +\n"
            "        |2\n"
            "+-1-+-1-+\n");
}

TEST(CliDraw, StraightAndSingle) {
  EXPECT_NE(run({"draw", "--perm", "1234"}).out.find("+-1-+-1-+-1-+-1-+\n"), std::string::npos);
  const auto single = run({"draw", "--path", R"([{"dir":"H","label":1}])", "--format", "json"});
  ASSERT_EQ(single.exit_code, 0);
  const auto j = Json::parse(single.out);
  EXPECT_EQ(j["payload"]["edges"].size(), 1u);
  EXPECT_EQ(j["payload"]["rows"][0], "+-1-+");
}

TEST(CliDraw, MalformedInput) {
  EXPECT_EQ(run({"draw", "--path", "[{"}).exit_code, 2);
  EXPECT_EQ(run({"draw", "--path", R"([{"dir":"V","label":1}])"}).exit_code, 2);
  EXPECT_EQ(run({"draw", "--path", R"([{"dir":"Q","label":1}])"}).exit_code, 2);
  EXPECT_EQ(run({"draw", "--perm", "1224"}).exit_code, 2);
  EXPECT_EQ(run({"draw"}).exit_code, 2);
  EXPECT_EQ(run({"draw", "--perm", "12", "--path", "[]"}).exit_code, 2);
}

TEST(Render, WideLabels) {
  const auto rows = runpoly::cli::render_path(runpoly::LabeledPath::parse("H1 H10 V12"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "          +");
  EXPECT_EQ(rows[1], "          |12");
  EXPECT_EQ(rows[2], "+-1--+-10-+");
}
