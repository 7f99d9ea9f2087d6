// End-to-end tests that drive the installed command surface through a
// subprocess.  The binary path arrives in QWILSON_CLI (ctest sets it).

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string cli_path() {
  const char* env = std::getenv("QWILSON_CLI");
  return env ? std::string(env) : std::string();
}

#define REQUIRE_CLI()                                       \
  do {                                                      \
    if (cli_path().empty()) {                               \
      MESSAGE("QWILSON_CLI not set; skipping CLI test");    \
      return;                                               \
    }                                                       \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string command =
      cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = std::move(output);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::filesystem::path fresh_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("qwilson-cli-" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("verify wilson streams one report per n") {
  REQUIRE_CLI();
  const auto result = run_cli("verify wilson --n 2..6 --no-cache --format json");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() == 5);

  const std::vector<std::string> expected_residues{"-1", "-1", "0", "-1", "1"};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto doc = nlohmann::json::parse(lines[i]);
    CHECK(doc.at("check") == "wilson");
    CHECK(doc.at("status") == "pass");
    CHECK(doc.at("params").at("n") == 2 + static_cast<int>(i));
    CHECK(doc.at("residue") == expected_residues[i]);
    CHECK(doc.at("expected") == expected_residues[i]);
    // Re-rendering a parsed report is byte-identical.
    CHECK(doc.dump() == lines[i]);
  }
}

TEST_CASE("verify wilson single value") {
  REQUIRE_CLI();
  const auto result = run_cli("verify wilson --n 7 --no-cache --format json");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() == 1);
  CHECK(nlohmann::json::parse(lines[0]).at("residue") == "-1");
}

TEST_CASE("compute cyclotomic text output") {
  REQUIRE_CLI();
  const auto result = run_cli("compute cyclotomic --n 7");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "1 + q + q^2 + q^3 + q^4 + q^5 + q^6\n");
}

TEST_CASE("compute fpoly with cache") {
  REQUIRE_CLI();
  const auto dir = fresh_dir("fpoly");
  const std::string base = "compute fpoly --n 3 --cache-dir " + dir.string();

  const auto first = run_cli(base);
  CHECK(first.exit_code == 0);
  CHECK(first.output == "q + q^2 + 2*q^3 + q^4 + q^5\n");
  CHECK(std::filesystem::exists(dir / "f_3.json"));

  const auto second = run_cli(base);  // served from the cache
  CHECK(second.exit_code == 0);
  CHECK(second.output == first.output);

  SUBCASE("corrupted cache entries are load-time errors") {
    std::ofstream(dir / "f_3.json") << "{\"format_version\":1,\"n\":3,\"coeffs\":[\"zzz\"]}";
    const auto corrupted = run_cli(base, /*merge_stderr=*/true);
    CHECK(corrupted.exit_code == 2);
    CHECK(corrupted.output.find("cache") != std::string::npos);
  }
}

TEST_CASE("a wrong-but-consistent cache entry surfaces as a failing check") {
  REQUIRE_CLI();
  const auto dir = fresh_dir("poison");
  // Value at 1 is 24 = 4!, so the integrity check passes, but the
  // distribution is wrong: the residue cannot be mu(5).
  std::ofstream(dir / "f_4.json")
      << R"({"format_version": 1, "n": 4, "coeffs": ["0", "0", "24"]})";
  const auto result = run_cli("verify wilson --n 5 --method brute --cache-dir " +
                              dir.string() + " --format json");
  CHECK(result.exit_code == 1);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() == 1);
  const auto doc = nlohmann::json::parse(lines[0]);
  CHECK(doc.at("status") == "fail");
  CHECK(doc.at("residue") == "24*q^2");
}

TEST_CASE("compute orbits census") {
  REQUIRE_CLI();
  const auto result = run_cli("compute orbits --n 4");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() == 4);  // three orbits plus the summary
  int fixed = 0;
  for (int i = 0; i < 3; ++i) {
    if (lines[i].find("h=1") != std::string::npos) ++fixed;
  }
  CHECK(fixed == 2);
  CHECK(lines.back() == "3 orbits, total mass 6");

  SUBCASE("csv quotes the representative") {
    const auto csv = run_cli("compute orbits --n 4 --format csv");
    const auto csv_lines = lines_of(csv.output);
    REQUIRE(csv_lines.size() == 4);
    CHECK(csv_lines[0] == "rep,h,maj_bar,des_bar");
    CHECK(csv_lines[1].front() == '"');
  }
}

TEST_CASE("chapman-pan splits congruence and invalidity") {
  REQUIRE_CLI();
  SUBCASE("p = 1 (mod 4) is informational") {
    const auto result = run_cli("verify chapman-pan --p 5 --format json");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 1);
    const auto doc = nlohmann::json::parse(lines[0]);
    CHECK(doc.at("check") == "chapman-pan-invalidity");
    CHECK(doc.at("status") == "pass");
    CHECK(doc.at("residue") != "-1");
  }
  SUBCASE("p = 3 (mod 4) asserts the congruence, in csv") {
    const auto result = run_cli("verify chapman-pan --p 7 --format csv");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.output);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "check,p,status,residue,expected");
    CHECK(lines[1] == "chapman-pan,7,pass,-1,-1");
  }
  SUBCASE("default range covers 5, 7, 11, 13") {
    const auto result = run_cli("verify chapman-pan --format json");
    CHECK(result.exit_code == 0);
    CHECK(lines_of(result.output).size() == 4);
  }
}

TEST_CASE("usage errors exit with 2") {
  REQUIRE_CLI();
  CHECK(run_cli("verify wilson --n 0..5", true).exit_code == 2);
  CHECK(run_cli("verify wilson --n abc", true).exit_code == 2);
  CHECK(run_cli("verify nope", true).exit_code == 2);
  CHECK(run_cli("compute qbinomial --n 70 --k 2", true).exit_code == 2);
  CHECK(run_cli("compute fpoly", true).exit_code == 2);  // --n is required
  CHECK(run_cli("verify chapman-pan --p 6..6", true).exit_code == 2);
  CHECK(run_cli("verify wilson --n 5..2", true).exit_code == 2);
}

TEST_CASE("verify text mode prints a summary") {
  REQUIRE_CLI();
  const auto result = run_cli("verify mahonian --n 1..3");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines.back() == "3 checks, 3 passed, 0 failed");
}

TEST_CASE("fpoly output is independent of the job count") {
  REQUIRE_CLI();
  const auto one = run_cli("compute fpoly --n 6 --no-cache --jobs 1");
  const auto three = run_cli("compute fpoly --n 6 --no-cache --jobs 3");
  CHECK(one.exit_code == 0);
  CHECK(one.output == three.output);
}

TEST_CASE("lucas csv stream has a stable header") {
  REQUIRE_CLI();
  const auto result = run_cli("verify lucas --n 2..2 --format csv");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.output);
  REQUIRE(lines.size() == 65);  // header + 4*2*4*2 instances
  CHECK(lines[0] == "check,a,b,c,d,n,status,residue,expected");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].find(",pass,") != std::string::npos);
  }
}

TEST_CASE("lemmas and ramanujan default sweeps pass") {
  REQUIRE_CLI();
  const auto lemmas = run_cli("verify lemmas --n 2..5 --format json");
  CHECK(lemmas.exit_code == 0);
  CHECK(lines_of(lemmas.output).size() == 8);  // two reports per n

  SUBCASE("both lemma checks share one csv header") {
    const auto csv = run_cli("verify lemmas --n 4..4 --format csv");
    const auto csv_lines = lines_of(csv.output);
    REQUIRE(csv_lines.size() == 3);
    CHECK(csv_lines[0] == "check,n,samples,status,residue,expected");
    CHECK(csv_lines[1] == "transfer-law,4,6,pass,0,0");
    CHECK(csv_lines[2] == "fixed-points,4,6,pass,0,0");
  }

  const auto ramanujan = run_cli("verify ramanujan --n 1..10 --format json");
  CHECK(ramanujan.exit_code == 0);
  // totative-sum for n in 2..10 plus c_n(1) for n in 1..10.
  CHECK(lines_of(ramanujan.output).size() == 19);
}

TEST_CASE("fermat respects the coprimality filter") {
  REQUIRE_CLI();
  const auto result = run_cli("verify fermat --n 2..4 --a 1..4 --format json");
  CHECK(result.exit_code == 0);
  // coprime pairs: n=2 -> {1,3}; n=3 -> {1,2,4}; n=4 -> {1,3}.
  CHECK(lines_of(result.output).size() == 7);
}

TEST_CASE("version flag") {
  REQUIRE_CLI();
  const auto result = run_cli("--version");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("qwilson") != std::string::npos);
}
