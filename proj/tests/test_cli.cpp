#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "support.hpp"
#include "wha/cli.hpp"

using namespace wha;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
};

// Runs the installed binary; stderr goes to /dev/null.
Outcome shell(const std::string& args) {
  std::string cmd = std::string(WHA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct InProcess {
  int code;
  std::string out, err;
};

InProcess call(CommandConfig cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

CommandConfig cmd(std::string c, std::string input, bool json = false) {
  CommandConfig cfg;
  cfg.command = std::move(c);
  cfg.input = std::move(input);
  cfg.json = json;
  return cfg;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("wha_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

// Sweedler with S(x) = gx instead of −gx.
std::string write_broken_sweedler(const TempDir& d) {
  Json j = read_json_file(WHA_DATA_DIR "/sweedler.wha.json");
  for (auto& e : j["antipode"])
    if (e[0] == 2) e[2] = "1";
  auto path = d.file("broken.wha.json");
  write_json_file(j, path);
  return path;
}

}  // namespace

TEST(Cli, VerifyBuiltinPasses) {
  auto r = call(cmd("verify", "sweedler"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, CorruptedFileNamesTheAxiom) {
  TempDir d;
  auto path = write_broken_sweedler(d);
  auto r = shell("verify " + path);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("antipode_1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);

  auto j = Json::parse(shell("verify --json " + path).out);
  EXPECT_EQ(j["schema"], "wha-report");
  EXPECT_EQ(j["exit_code"], 1);
  EXPECT_FALSE(j["passed"].get<bool>());
  std::set<std::string> axioms;
  for (const auto& c : j["checks"])
    for (const auto& w : c["witnesses"]) axioms.insert(w["axiom"].get<std::string>());
  EXPECT_TRUE(axioms.contains("antipode_1"));
  EXPECT_FALSE(axioms.contains("assoc"));
}

TEST(Cli, AnalyzeBaseField) {
  auto r = shell("analyze k");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim_Ht: 1"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  TempDir d;
  auto bad = d.file("bad.wha.json");
  {
    std::ofstream out(bad);
    out << "[1, 2";
  }
  EXPECT_EQ(shell("verify " + bad).code, 2);
  EXPECT_EQ(shell("verify no-such-algebra").code, 2);
  EXPECT_EQ(shell("verify kc2 --field R").code, 2);
  EXPECT_EQ(shell("verify kc2 --field Fp:9").code, 2);
  EXPECT_EQ(shell("verify sweedler --field Fp:2").code, 2);
  EXPECT_EQ(shell(std::string("verify ") + WHA_DATA_DIR "/sweedler.wha.json --field Fp:5").code, 2);
  EXPECT_EQ(shell("frobnicate kc2").code, 2);
  EXPECT_EQ(shell("").code, 2);

  Json j = read_json_file(WHA_DATA_DIR "/sweedler.wha.json");
  j["unit"][0] = "1/0";
  write_json_file(j, bad);
  auto r = call(cmd("verify", bad, true));
  EXPECT_EQ(r.code, 2);
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["error"]["kind"], "input");
  EXPECT_NE(r.err.find("1/0"), std::string::npos);
}

TEST(Cli, NakayamaLimit) {
  auto r = call(cmd("nakayama", "pairgpd3", true));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(Json::parse(r.out)["error"]["kind"], "limit");
  auto cfg = cmd("nakayama", "pairgpd3");
  cfg.max_dim = 9;
  EXPECT_EQ(call(cfg).code, 0);
}

TEST(Cli, NakayamaPowers) {
  auto cfg = cmd("nakayama", "sweedler", true);
  cfg.power_n = 2;
  auto r = call(cfg);
  EXPECT_EQ(r.code, 0);
  auto doc = Json::parse(r.out);
  std::multiset<std::string> names;
  for (const auto& c : doc["checks"]) names.insert(c["name"].get<std::string>());
  EXPECT_EQ(names.count("nakayama"), 1u);
  EXPECT_EQ(names.count("nakayama_power"), 2u);
}

TEST(Cli, IntegralsReportUnimodularity) {
  auto s = Json::parse(call(cmd("integrals", "sweedler", true)).out);
  EXPECT_FALSE(s["data"]["unimodular"].get<bool>());
  auto k = Json::parse(call(cmd("integrals", "kc2", true)).out);
  EXPECT_TRUE(k["data"]["unimodular"].get<bool>());
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  for (const std::string args : {"analyze sum:sweedler,fun-c2 --json", "integrals pairgpd2 --json",
                                 "nakayama sweedler --json --witness", "verify kc3 --field Fp:7 --json"}) {
    auto a = shell(args), b = shell(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, DecomposeWritesSummands) {
  TempDir d;
  auto cfg = cmd("decompose", "sum:kc2,pairgpd2", true);
  cfg.out_dir = d.path.string();
  auto r = call(cfg);
  ASSERT_EQ(r.code, 0) << r.out;
  auto files = Json::parse(r.out)["data"]["summand_files"];
  ASSERT_EQ(files.size(), 2u);
  Field<Rational> q;
  std::multiset<std::size_t> dims;
  std::vector<WeakHopfAlgebra<Rational>> parts;
  for (const auto& f : files) {
    auto h = load_algebra(d.file(f.get<std::string>()), q);
    dims.insert(h.dim());
    EXPECT_TRUE(verify_weak_bialgebra(h).passed());
    EXPECT_TRUE(verify_antipode(h).passed());
    parts.push_back(std::move(h));
  }
  EXPECT_EQ(dims, (std::multiset<std::size_t>{2, 4}));
  auto whole = *builtin(q, "sum:kc2,pairgpd2");
  EXPECT_TRUE(basis_permutation(direct_sum(parts[0], parts[1]), whole).has_value());
}

TEST(Cli, DecomposeFromFileWritesNextToInput) {
  TempDir d;
  auto src = d.file("sw.wha.json");
  fs::copy_file(WHA_DATA_DIR "/sweedler.wha.json", src);
  EXPECT_EQ(shell("decompose " + src).code, 0);
  EXPECT_TRUE(fs::exists(d.file("sw.summand1.wha.json")));
  EXPECT_FALSE(fs::exists(d.file("sw.summand2.wha.json")));
}
