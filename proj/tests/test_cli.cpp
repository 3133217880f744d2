#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  std::string cmd = std::string(BSG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Outcome& r) { return nlohmann::json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("bsg_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, ModularValue) {
  Outcome r = run("bs modular --p 2 --q 3 --word 't^2 a^5'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r), nlohmann::json::parse(R"({"value":"9/4"})"));
}

TEST(Cli, LevelModelCorollary) {
  Outcome r = run("cocycle level-model --p 2 --q 3 --k 1 --l 1 --verify-corollary");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["product"], "3/2");
  EXPECT_EQ(parse(r)["N"], 6);
  EXPECT_EQ(parse(r)["N_prime"], 9);
}

TEST(Cli, ValidateRejectsBrokenProductTable) {
  Outcome made = run("groupoid from-action --perms 1,2,3,0");
  ASSERT_EQ(made.code, 0);
  nlohmann::json g = parse(made);
  std::string good = temp_file("good.json", g.dump());
  EXPECT_EQ(run("groupoid validate --in " + good).code, 0);
  for (auto& t : g["product"])
    if (t[0] == 5 && t[1] == 1) t[2] = 0;
  std::string broken = temp_file("broken.json", g.dump());
  Outcome r = run("groupoid validate --in " + broken);
  EXPECT_EQ(r.code, 1);
  nlohmann::json j = parse(r);
  EXPECT_EQ(j["valid"], false);
  EXPECT_NE(j["violation"].get<std::string>().find("AxiomViolation"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("suite ''").code, 2);
  EXPECT_EQ(run("suite").code, 2);
  EXPECT_EQ(run("suite everything").code, 2);
  EXPECT_EQ(run("bs modular --p 2 --q 3").code, 2);
  EXPECT_EQ(run("bs modular --p 2 --q 3 --word 'x'").code, 2);
  EXPECT_EQ(run("bs modular --p 3 --q 2 --word t").code, 2);
  EXPECT_EQ(run("--format yaml bs modular --word t").code, 2);
}

TEST(Cli, EverySubcommandHasHelp) {
  for (const char* c : {"", "bs", "tree", "groupoid", "cocycle", "profinite", "dynamics", "suite", "bs normalize",
                        "tree stabilizer", "groupoid validate", "cocycle mackey", "profinite sigma", "dynamics cesaro"}) {
    Outcome r = run(std::string(c) + " --help");
    EXPECT_EQ(r.code, 0) << c;
    EXPECT_NE(r.out.find("Usage:"), std::string::npos) << c;
  }
}

TEST(Cli, SuiteIsDeterministic) {
  Outcome a = run("suite dynamics --seed 5");
  Outcome b = run("suite dynamics --seed 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse(a)["passed"], true);
}

TEST(Cli, SuiteLemmasPasses) {
  Outcome r = run("suite lemmas --seed 7 --instances 40 --words 300 --max-modulus 300");
  EXPECT_EQ(r.code, 0);
  nlohmann::json j = parse(r);
  EXPECT_EQ(j["passed"], true);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["passed"], true) << c["name"];
  EXPECT_EQ(run("suite lemmas --seed 7 --instances 40 --words 300 --max-modulus 300").out, r.out);
}

TEST(Cli, ConfigFile) {
  std::string cfg = temp_file("ok.cfg", "# level model\np = 2\nq = 3\nword = t^2 a^5\n");
  Outcome r = run("bs modular --config " + cfg);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["value"], "9/4");
  EXPECT_EQ(parse(run("bs modular --word t --config " + cfg))["value"], "3/2");
  std::string bad = temp_file("bad.cfg", "p = 2\nspeed = 9\n");
  EXPECT_EQ(run("bs modular --word t --config " + bad).code, 2);
  std::string flag = temp_file("flag.cfg", "verify-corollary = true\nk = 2\n");
  Outcome lm = run("cocycle level-model --config " + flag);
  EXPECT_EQ(lm.code, 0);
  EXPECT_EQ(parse(lm)["k"], 2);
}

TEST(Cli, CsvAndText) {
  Outcome csv = run("--format csv dynamics components --n 12 --kmax 1 --lmax 1");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "k,l,count");
  Outcome text = run("bs modular --word t --format text");
  EXPECT_EQ(text.out, "value: 3/2\n");
}

TEST(Cli, QuotientAndStabilizerReports) {
  Outcome made = run("groupoid from-action --perms 1,2,3,0");
  std::string g = temp_file("z4.json", parse(made).dump());
  Outcome q = run("groupoid quotient --in " + g + " --sub 2");
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(parse(q)["kernel_is_S"], true);
  Outcome st = run("tree stabilizer --from '' --to 't a T^2' --oracle-bound 200");
  EXPECT_EQ(st.code, 0);
  EXPECT_EQ(parse(st)["agree"], true);
}

}  // namespace
