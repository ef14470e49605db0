#include "cli_app.hpp"
#include "metlie/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run
{
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = metlie::cli::run_cli(std::move(args), out, err);
	return {code, out.str(), err.str()};
}

std::string temp_catalog(std::string const &name, std::string const &body)
{
	auto path = std::filesystem::temp_directory_path() / ("metlie_" + name + ".txt");
	std::ofstream(path) << body;
	return path.string();
}

} // namespace

TEST(Cli, Normalize)
{
	auto r = run({"normalize", "[x1,x2]"});
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, "-[x2,x1]\n");
	EXPECT_EQ(run({"normalize", "[[x2,x3],x1]"}).out, "[[x2,x1],x3] - [[x3,x1],x2]\n");
	EXPECT_EQ(run({"normalize", "x1; [x1,x1]"}).out, "x1\n0\n");
}

TEST(Cli, NormalizeJson)
{
	auto r = run({"--json", "normalize", "x1 + [x2,x1]"});
	ASSERT_EQ(r.code, 0);
	auto j = metlie::Json::parse(r.out);
	EXPECT_EQ(j["n"], 2);
	EXPECT_EQ(j["elements"][0]["normal"], "x1 + [x2,x1]");
	EXPECT_EQ(j["elements"][0]["basis"]["terms"][0]["word"], metlie::Json::parse("[2,1]"));
}

TEST(Cli, DeriveAndJacobian)
{
	auto d = run({"derive", "[[x2,x1],x1]"});
	EXPECT_EQ(d.code, 0);
	EXPECT_NE(d.out.find("d1 = -x1*x2"), std::string::npos);
	EXPECT_NE(d.out.find("d2 = x1^2"), std::string::npos);
	auto j = run({"jacobian", "x1 + [x2,x1]", "x2"});
	EXPECT_EQ(j.out, "[ -x2 + 1, 0 ]\n[ x1, 1 ]\n");
}

TEST(Cli, PrimitiveExitCodes)
{
	auto yes = run({"primitive", "x1 + [[x2,x1],x1]"});
	EXPECT_EQ(yes.code, 0);
	EXPECT_NE(yes.out.find("certificate: 1 ="), std::string::npos);
	auto no = run({"primitive", "x1 + [x2,x1]"});
	EXPECT_EQ(no.code, 1);
	EXPECT_NE(no.out.find("vanishing point over F_2: (0, 1)"), std::string::npos);
	EXPECT_EQ(run({"primitive", "2*x1"}).code, 1);
	auto capped = run({"--groebner-size", "1", "primitive", "x1 + [[x2,x1],x1]"});
	EXPECT_EQ(capped.code, 3);
}

TEST(Cli, PrimitiveJson)
{
	auto r = run({"--json", "primitive", "x1 + [[x2,x1],x1]"});
	auto j = metlie::Json::parse(r.out);
	EXPECT_EQ(j["primitive"], true);
	EXPECT_EQ(j["certificate"]["verified"], true);
	auto n = metlie::Json::parse(run({"--json", "primitive", "2*x1"}).out);
	EXPECT_EQ(n["primitive"], false);
	EXPECT_EQ(n["refutation"]["kind"], "abelian");
}

TEST(Cli, Uniform)
{
	auto no = run({"uniform", "x1 + [x2,x1]"});
	EXPECT_EQ(no.code, 1);
	EXPECT_NE(no.out.find("not uniform"), std::string::npos);
	auto yes = run({"uniform", "--p", "1", "--q", "1", "--m", "2", "x1 + [[x2,x1],x1]"});
	EXPECT_EQ(yes.code, 0);
	EXPECT_NE(yes.out.find("expected fiber 1024, min 1024, max 1024"), std::string::npos);
	EXPECT_EQ(run({"uniform", "--abelian-model", "--m", "2", "2*x1"}).code, 1);
	EXPECT_EQ(run({"--method", "exhaustive", "uniform", "--p", "2", "--q", "2", "--m", "3", "x2"}).code, 4);
	EXPECT_EQ(run({"--budget", "10", "--method", "serial", "uniform", "x2"}).code, 4);
}

TEST(Cli, UniformJson)
{
	auto j = metlie::Json::parse(run({"--json", "uniform", "x1 + [x2,x1]"}).out);
	EXPECT_EQ(j["model"]["kind"], "matrix");
	EXPECT_EQ(j["model"]["size"], 1024);
	EXPECT_EQ(j["uniform"], false);
	EXPECT_TRUE(j["elapsed_ms"].is_null());
	EXPECT_FALSE(j["witness_target"].is_null());
	auto t = metlie::Json::parse(run({"--json", "--timing", "uniform", "x1"}).out);
	EXPECT_TRUE(t["elapsed_ms"].is_number());
}

TEST(Cli, Witness)
{
	auto w = run({"witness", "x1 + [x2,x1]"});
	EXPECT_EQ(w.code, 1);
	EXPECT_NE(w.out.find("witness found"), std::string::npos);
	auto none = run({"--grid", "1:1:2", "--abelian", "2", "witness", "x1 + [[x2,x1],x1]"});
	EXPECT_EQ(none.code, 0);
	EXPECT_EQ(none.out, "no witness on 2 checked models\n");
}

TEST(Cli, Automorphism)
{
	auto a = run({"auto", "x1 + [x2,x1]", "x2"});
	EXPECT_EQ(a.code, 1);
	EXPECT_EQ(a.out, "det = -x2 + 1\nnot an automorphism\n");
	auto b = run({"auto", "x1 + [[x2,x1],x1]", "x2 + [[x2,x1],x2]"});
	EXPECT_EQ(b.code, 0);
	EXPECT_EQ(run({"auto", "x2"}).code, 2);
}

TEST(Cli, InputErrors)
{
	auto bad = run({"normalize", "[x1,"});
	EXPECT_EQ(bad.code, 2);
	EXPECT_NE(bad.err.find("error:"), std::string::npos);
	EXPECT_EQ(run({"normalize"}).code, 2);
	EXPECT_EQ(run({"--n", "1", "normalize", "x2"}).code, 2);
	EXPECT_EQ(run({"--grid", "1:1", "witness", "x1"}).code, 2);
	EXPECT_EQ(run({"--variant", "wide", "uniform", "x1"}).code, 2);
	EXPECT_EQ(run({"frobnicate"}).code, 2);
	EXPECT_EQ(run({}).code, 2);
	EXPECT_EQ(run({"selfcheck", "x1"}).code, 2);
}

TEST(Cli, ExplicitGeneratorCount)
{
	EXPECT_EQ(run({"--n", "3", "derive", "x1"}).out, "g = x1\n  d1 = 1\n  d2 = 0\n  d3 = 0\n");
}

TEST(Cli, BudgetFromEnvironment)
{
	::setenv("METLIE_BUDGET", "10", 1);
	auto env = run({"--method", "serial", "uniform", "x2"});
	auto flag = run({"--budget", "100000000", "--method", "exhaustive", "uniform", "x2"});
	::unsetenv("METLIE_BUDGET");
	EXPECT_EQ(env.code, 4);
	EXPECT_EQ(flag.code, 0);
}

TEST(Cli, DeterministicJson)
{
	std::vector<std::string> args{"--json", "witness", "x1 + [x2,x1]"};
	EXPECT_EQ(run(args).out, run(args).out);
	std::vector<std::string> sc{"--json", "--seed", "7", "selfcheck", "--count", "50"};
	auto a = run(sc), b = run(sc);
	EXPECT_EQ(a.code, 0);
	EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ConsistencyExamples)
{
	auto ok = temp_catalog("ok", "n=2\n"
	                             "x1 | primitive\n"
	                             "x1 + [x2,x1] | non-primitive\n"
	                             "2*x1; x2 | non-primitive\n"
	                             "x1 + [[x2,x1],x1]\n");
	auto r = run({"consistency", ok});
	EXPECT_EQ(r.code, 0) << r.out;
	EXPECT_NE(r.out.find("4 systems, 0 contradictions"), std::string::npos);

	auto wrong = temp_catalog("wrong", "n=2\nx1 + [x2,x1] | primitive\n");
	auto w = run({"--json", "consistency", wrong});
	EXPECT_EQ(w.code, 1);
	auto j = metlie::Json::parse(w.out);
	EXPECT_EQ(j["contradictions"], 1);

	auto skipped = temp_catalog("skipped", "n=2\nx1 + [[x2,x1],x1]\n");
	EXPECT_EQ(run({"--grid", "2:2:3", "--method", "exhaustive", "consistency", skipped}).code, 4);

	auto broken = temp_catalog("broken", "n=2\nx1 + | primitive\n");
	EXPECT_EQ(run({"consistency", broken}).code, 2);
	EXPECT_EQ(run({"consistency", "/nonexistent/catalog.txt"}).code, 2);
}
