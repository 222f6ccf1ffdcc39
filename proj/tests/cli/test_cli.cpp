#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gjgf/char_model.hpp"
#include "gjgf/cluster_engine.hpp"
#include "gjgf/problem_json.hpp"
#include "json.hpp"

using namespace gjgf;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the installed binary through the shell, capturing stdout (and
// stderr too when merged); the exit code comes from the pipeline status.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, n);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string bin() { return GJCOUNT_BIN; }

std::string data(const std::string& name) {
  return std::string(GJGF_TEST_DATA) + "/" + name;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "gjgf_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

Problem load_problem(const std::string& name) {
  return parse_problem_json(read_file(data(name)));
}

std::vector<std::string> series_strings(const Problem& problem, int order) {
  SeriesPrefix series = generating_function(problem).series_in_t(order);
  std::vector<std::string> out;
  for (const Polynomial& c : series.coefficients)
    out.push_back(c.to_string(problem.alphabet.symbols()));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gf emits the engine's function and series") {
  RunResult r = run_cli(bin() + " gf --input " + data("single_ab.json") +
                        " --series 3");
  REQUIRE(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);

  Problem p = load_problem("single_ab.json");
  RationalFunction f = generating_function(p);
  CHECK(doc["numerator"] == f.numerator().to_string(p.alphabet.symbols()));
  CHECK(doc["denominator"] == f.denominator().to_string(p.alphabet.symbols()));
  std::vector<std::string> series = doc["series"];
  CHECK(series == std::vector<std::string>{
                      "1", "1*x_a + 1*x_b", "1*x_a^2 + 1*x_a*x_b + 1*x_b^2",
                      "1*x_a^3 + 1*x_a^2*x_b + 1*x_b^3"});
  CHECK(doc.count("series_decimal") == 0);
}

TEST_CASE("repeated runs are byte identical") {
  std::string cmd =
      bin() + " gf --input " + data("single_ab.json") + " --series 5";
  RunResult first = run_cli(cmd);
  RunResult second = run_cli(cmd);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("both methods print the same series") {
  std::string base = bin() + " gf --input " + data("single_ab.json") +
                     " --series 6 --method ";
  RunResult cluster = run_cli(base + "cluster");
  RunResult recursive = run_cli(base + "recursive");
  REQUIRE(cluster.code == 0);
  REQUIRE(recursive.code == 0);
  nlohmann::json a = nlohmann::json::parse(cluster.out);
  nlohmann::json b = nlohmann::json::parse(recursive.out);
  CHECK(a["series"] == b["series"]);
}

TEST_CASE("fully bound problems render decimal series") {
  RunResult r = run_cli(bin() + " gf --input " + data("prob_double.json") +
                        " --series 4 --decimal 5");
  REQUIRE(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  std::vector<std::string> series = doc["series"];
  CHECK(series == std::vector<std::string>{"1", "1", "5/8", "131/400",
                                           "131/800"});
  std::vector<std::string> decimals = doc["series_decimal"];
  CHECK(decimals == std::vector<std::string>{"1.0000", "1.0000", "0.62500",
                                             "0.32750", "0.16375"});
}

TEST_CASE("oracle verification reports success on stderr") {
  RunResult r = run_cli(bin() + " gf --input " + data("single_ab.json") +
                            " --check-oracle 5 --out /dev/null",
                        true);
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle check passed through t^5") != std::string::npos);
}

TEST_CASE("validation problems exit with code 2") {
  CHECK(run_cli(bin() + " gf --input " + data("bad.json")).code == 2);
  CHECK(run_cli(bin() + " gf --input " + data("one_letter.json")).code == 2);
  CHECK(run_cli(bin() + " gf --input " + data("unreduced.json")).code == 2);
  CHECK(run_cli(bin() + " gf --input /nonexistent.json").code == 2);
  CHECK(run_cli(bin() + " gf --input " + data("single_ab.json") +
                " --method fancy")
            .code == 2);
  CHECK(run_cli(bin() + " gf --input " + data("single_ab.json") +
                " --series -1")
            .code == 2);
  CHECK(run_cli(bin() + " gf --frobnicate").code == 2);
  CHECK(run_cli(bin()).code == 2);
  RunResult merged =
      run_cli(bin() + " gf --input " + data("one_letter.json"), true);
  CHECK(merged.out.find("error:") != std::string::npos);
}

TEST_CASE("auto-reduce accepts unreduced forbidden lists") {
  RunResult r = run_cli(bin() + " gf --input " + data("unreduced.json") +
                        " --auto-reduce --series 2");
  REQUIRE(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  std::vector<std::string> series = doc["series"];
  CHECK(series == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("help and version exit cleanly") {
  RunResult help = run_cli(bin() + " --help", true);
  CHECK(help.code == 0);
  CHECK(help.out.find("gf") != std::string::npos);
  CHECK(run_cli(bin() + " gf --help", true).code == 0);
  RunResult version = run_cli(bin() + " --version", true);
  CHECK(version.code == 0);
  CHECK(version.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("ingest writes a stochastic model") {
  auto model_path = temp_dir() / "model.json";
  RunResult r = run_cli(bin() + " ingest --corpus " + data("corpus.txt") +
                            " --alphabet " + data("alphabet_ab.json") +
                            " --out " + model_path.string(),
                        true);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("ingested 4 words") != std::string::npos);

  CharModel model = CharModel::from_json(read_file(model_path));
  for (Letter from = 0; from < model.separator(); ++from) {
    Rational row(0);
    for (Letter to = 0; to <= model.separator(); ++to)
      row += model.transition(from, to);
    CHECK(row == Rational(1));
  }
  CHECK(model.transition(model.separator(), model.separator()) == Rational(0));
}

TEST_CASE("ingest policy for invalid lines") {
  auto out_path = temp_dir() / "dirty_model.json";
  std::string base = bin() + " ingest --corpus " + data("corpus_dirty.txt") +
                     " --alphabet " + data("alphabet_ab.json") + " --out " +
                     out_path.string();
  CHECK(run_cli(base).code == 2);
  RunResult skipped = run_cli(base + " --skip-invalid", true);
  CHECK(skipped.code == 0);
  CHECK(skipped.out.find("ingested 3 words") != std::string::npos);
  CHECK(skipped.out.find("skipped 2 invalid lines") != std::string::npos);
}

TEST_CASE("avoid runs the whole pipeline against the oracle") {
  auto model_path = temp_dir() / "pipeline_model.json";
  REQUIRE(run_cli(bin() + " ingest --corpus " + data("corpus.txt") +
                  " --alphabet " + data("alphabet_ab.json") + " --out " +
                  model_path.string())
              .code == 0);

  auto out_path = temp_dir() / "pipeline_out.json";
  RunResult r = run_cli(bin() + " avoid --model " + model_path.string() +
                            " --forbidden " + data("forbidden_bb.json") +
                            " --series 6 --check-oracle 6 --out " +
                            out_path.string(),
                        true);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("oracle check passed through t^6") != std::string::npos);

  CharModel model = CharModel::from_json(read_file(model_path));
  Letter b = model.alphabet().index_of("b");
  Problem p = model_to_problem(model, {Word({b, b})});
  nlohmann::json doc = nlohmann::json::parse(read_file(out_path));
  std::vector<std::string> series = doc["series"];
  SeriesPrefix expected = generating_function(p).series_in_t(6);
  REQUIRE(series.size() == expected.coefficients.size());
  for (std::size_t n = 0; n < series.size(); ++n)
    CHECK(series[n] ==
          expected.coefficients[n].to_string(p.alphabet.symbols()));

  // the forbidden list may also be given inline instead of as a file
  RunResult inline_json =
      run_cli(bin() + " avoid --model " + model_path.string() +
              " --forbidden '[[\"b\",\"b\"]]' --series 6");
  CHECK(inline_json.code == 0);
  CHECK(nlohmann::json::parse(inline_json.out)["series"] == doc["series"]);
}

TEST_CASE("state graphs dump as JSON") {
  auto states_path = temp_dir() / "states.json";
  RunResult r = run_cli(bin() + " gf --input " + data("single_ab.json") +
                        " --dump-states " + states_path.string() +
                        " --out /dev/null");
  REQUIRE(r.code == 0);
  std::string text = read_file(states_path);
  CHECK(text.find("\"states\"") != std::string::npos);
  CHECK(text.find("\"edges\"") != std::string::npos);
  CHECK(text.find("\"roots\"") != std::string::npos);
}

TEST_CASE("dash routes stdin and stdout") {
  RunResult piped = run_cli("cat " + data("single_ab.json") + " | " + bin() +
                            " gf --input - --series 2");
  RunResult direct = run_cli(bin() + " gf --input " + data("single_ab.json") +
                             " --series 2");
  CHECK(piped.code == 0);
  CHECK(piped.out == direct.out);

  auto out_path = temp_dir() / "redirected.json";
  RunResult to_file = run_cli(bin() + " gf --input " + data("single_ab.json") +
                              " --series 2 --out " + out_path.string());
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(read_file(out_path) == direct.out);
}

TEST_SUITE_END();
