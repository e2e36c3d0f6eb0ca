#include "cdpoly/cdpoly.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    const std::string cmd = std::string(CDPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("cdpoly_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& text)
    {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path dir_;
};

const std::string kK2 = "2 1\n0 1\n";
const std::string kK13 = "4 3\n0 1\n0 2\n0 3\n";
const std::string kP3 = "3 2\n0 1\n1 2\n";
const std::string kC4 = "4 4\n0 1\n1 2\n2 3\n3 0\n";
const std::string kC5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

}  // namespace

TEST_F(Cli, PolyExamples)
{
    auto r = run("poly " + file("k2", kK2));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 + 2x\n");
    r = run("poly --oracle " + file("k13", kK13));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 + 4x + 3x^2 + x^3\n");
    r = run("poly --which matching " + file("k2", kK2));
    EXPECT_EQ(r.out, "-1 + x^2\n");
    r = run("poly --format graph6 " + file("k4.g6", "C~\n"));
    EXPECT_EQ(r.out, "1 + 4x\n");
    r = run("poly --json " + file("k2", kK2));
    auto j = cdpoly::Json::parse(r.out.substr(r.out.find('{')));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["poly"]["text"], "1 + 2x");
}

TEST_F(Cli, ParseErrorsExitTwo)
{
    EXPECT_EQ(run("poly " + file("dup", "3 2\n0 1\n1 0\n")).code, 2);
    EXPECT_EQ(run("poly " + file("loop", "2 1\n1 1\n")).code, 2);
    EXPECT_EQ(run("poly " + (dir_ / "missing").string()).code, 2);
    EXPECT_EQ(run("poly --format graph6 " + file("bad.g6", "A\n")).code, 2);
    EXPECT_EQ(run("nonsense").code, 2);
    EXPECT_EQ(run("certify " + file("junk", "hello\n")).code, 2);
}

TEST_F(Cli, OracleCapIsAHardError)
{
    std::string big = "30 0\n";
    EXPECT_EQ(run("poly --oracle " + file("big", big)).code, 2);
}

TEST_F(Cli, VerifyExamples)
{
    auto r = run("verify --identity t1 --anchors 0,1 " + file("k2", kK2));
    EXPECT_EQ(r.code, 0);
    auto j = cdpoly::Json::parse(r.out);
    EXPECT_EQ(j["holds"], true);
    EXPECT_EQ(j["lhs"]["text"], "x^2");

    r = run("verify --identity ms --anchors 0,2 --x 1 " + file("p3", kP3));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("actual=NEGATIVE predicted=NEGATIVE"), std::string::npos);

    r = run("verify --identity t3 " + file("k1", "1 0\n"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(cdpoly::Json::parse(r.out)["notes"].get<std::string>().find("proof orientation"), std::string::npos);
}

TEST_F(Cli, VerifyBadAnchorsExitTwo)
{
    const std::string k2 = file("k2", kK2);
    EXPECT_EQ(run("verify --identity t1 --anchors 0 " + k2).code, 2);
    EXPECT_EQ(run("verify --identity t1 --anchors 0,0 " + k2).code, 2);
    EXPECT_EQ(run("verify --identity t2 --anchors 5 " + k2).code, 2);
    EXPECT_EQ(run("verify --identity t3 --anchors 0 " + k2).code, 2);
    EXPECT_EQ(run("verify --identity zz " + k2).code, 2);
    EXPECT_EQ(run("verify --identity ms --anchors 0,1 " + file("k3", "3 3\n0 1\n1 2\n0 2\n")).code, 2);
    EXPECT_EQ(run("verify --identity ms --anchors 0,1 --x 0 " + k2).code, 2);
}

TEST_F(Cli, CertifyExamples)
{
    auto r = run("certify " + file("c5", kC5));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(cdpoly::Json::parse(r.out)["cert"]["all_real"], true);

    r = run("certify " + file("k13", kK13));
    EXPECT_EQ(r.code, 1);
    auto j = cdpoly::Json::parse(r.out);
    EXPECT_EQ(j["witness"], cdpoly::Json::array({0, 1, 2, 3}));

    EXPECT_EQ(run("certify " + file("c4", kC4)).code, 0);

    r = run("certify --intervals " + file("c4", kC4));
    EXPECT_EQ(cdpoly::Json::parse(r.out)["cert"]["isolating_intervals"].size(), 2U);
}

TEST_F(Cli, CorpusExamples)
{
    auto r = run("corpus --model exhaustive --n 5 --identities t1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 35);

    const std::string args =
        "corpus --model gnp --n 10 --p 1/2 --count 100 --seed 7 --filter claw_free --action certify-all --workers 2";
    r = run(args);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 101);
    EXPECT_EQ(run(args).out, r.out);

    r = run("corpus --model exhaustive --n 4 --out " + (dir_ / "out").string());
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(fs::exists(dir_ / "out" / "summary.tsv"));
    EXPECT_TRUE(fs::exists(dir_ / "out" / "graph_000010.json"));

    EXPECT_EQ(run("corpus --model gnp --n 5 --p 1/2").code, 2);
    EXPECT_EQ(run("corpus --model gnp --n 5 --p 3/2 --count 1").code, 2);
    EXPECT_EQ(run("corpus --model exhaustive --n 5 --filter odd").code, 2);
}
