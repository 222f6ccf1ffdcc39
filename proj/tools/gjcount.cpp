#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gjgf/char_model.hpp"
#include "gjgf/cluster_engine.hpp"
#include "gjgf/errors.hpp"
#include "gjgf/oracle.hpp"
#include "gjgf/problem_json.hpp"
#include "gjgf/recursive_engine.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;
constexpr int kExitOracleMismatch = 4;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw gjgf::Error(gjgf::errc::schema_error, "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw gjgf::Error(gjgf::errc::schema_error,
                      "cannot write \"" + path + "\"");
  out << text;
}

struct GfOptions {
  std::string input;
  std::string method = "cluster";
  std::string out = "-";
  std::string dump_states;
  int series = -1;
  int check_oracle = -1;
  int decimal = 0;
  bool auto_reduce = false;
};

struct IngestOptions {
  std::string corpus;
  std::string alphabet;
  std::string out;
  bool skip_invalid = false;
};

struct AvoidOptions {
  std::string model;
  std::string forbidden;
  std::string out = "-";
  int series = -1;
  int check_oracle = -1;
  int decimal = 0;
  bool auto_reduce = false;
};

// Arguments that already look like JSON are used verbatim; anything else is
// a file path.
std::string read_json_argument(const std::string& arg) {
  std::size_t i = arg.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (arg[i] == '[' || arg[i] == '{')) return arg;
  return read_all(arg);
}

gjgf::Alphabet parse_alphabet_file(const std::string& text) {
  gjgf::Problem shim = gjgf::parse_problem_json(
      "{\"alphabet\":" + text + ",\"variant\":\"basic\"}");
  return shim.alphabet;
}

// Returns the failing coefficient index, or -1 when all agree.
int first_series_mismatch(const gjgf::SeriesPrefix& engine,
                          const gjgf::SeriesPrefix& oracle, int order) {
  for (int n = 0; n <= order; ++n)
    if (!(engine.coefficients[n] == oracle.coefficients[n])) return n;
  return -1;
}

int check_against_oracle(const gjgf::Problem& problem,
                         const gjgf::RationalFunction& f, int order) {
  gjgf::SeriesPrefix engine = f.series_in_t(order);
  gjgf::SeriesPrefix oracle = gjgf::brute_force_series({problem, order});
  int n = first_series_mismatch(engine, oracle, order);
  if (n < 0) {
    std::cerr << "oracle check passed through t^" << order << "\n";
    return 0;
  }
  const auto& symbols = problem.alphabet.symbols();
  std::cerr << "oracle mismatch at t^" << n << ": engine has "
            << engine.coefficients[n].to_string(symbols) << ", enumeration has "
            << oracle.coefficients[n].to_string(symbols) << "\n";
  return kExitOracleMismatch;
}

int run_gf(const GfOptions& opt) {
  gjgf::Problem problem =
      gjgf::parse_problem_json(read_all(opt.input), opt.auto_reduce);

  if (!opt.dump_states.empty()) {
    gjgf::StateGraph graph =
        gjgf::build_state_graph(problem.alphabet, problem.forbidden);
    write_all(opt.dump_states,
              gjgf::state_graph_to_json(graph, problem.alphabet));
  }

  gjgf::RationalFunction f = opt.method == "recursive"
                                 ? gjgf::recursive_gf(problem)
                                 : gjgf::generating_function(problem);

  if (opt.check_oracle >= 0) {
    int rc = check_against_oracle(problem, f, opt.check_oracle);
    if (rc != 0) return rc;
  }

  std::optional<gjgf::SeriesPrefix> series;
  if (opt.series >= 0) series = f.series_in_t(opt.series);
  write_all(opt.out,
            gjgf::format_output(f, series ? &*series : nullptr,
                                problem.alphabet.symbols(), opt.decimal));
  return 0;
}

int run_ingest(const IngestOptions& opt) {
  gjgf::Alphabet letters = parse_alphabet_file(read_all(opt.alphabet));
  gjgf::IngestReport report;
  std::istringstream corpus(read_all(opt.corpus));
  gjgf::CharModel model =
      gjgf::ingest_corpus_stream(corpus, letters, opt.skip_invalid, &report);
  write_all(opt.out, model.to_json());
  std::cerr << "ingested " << report.words_ingested << " words";
  if (report.lines_skipped > 0)
    std::cerr << ", skipped " << report.lines_skipped << " invalid lines";
  std::cerr << "\n";
  return 0;
}

int run_avoid(const AvoidOptions& opt) {
  gjgf::CharModel model = gjgf::CharModel::from_json(read_all(opt.model));
  gjgf::ForbiddenSet forbidden = gjgf::parse_forbidden_json(
      read_json_argument(opt.forbidden), model.alphabet(), opt.auto_reduce);
  gjgf::Problem problem =
      gjgf::model_to_problem(model, forbidden.words(), opt.auto_reduce);

  gjgf::RationalFunction f = gjgf::generating_function(problem);
  if (opt.check_oracle >= 0) {
    int rc = check_against_oracle(problem, f, opt.check_oracle);
    if (rc != 0) return rc;
  }
  std::optional<gjgf::SeriesPrefix> series;
  if (opt.series >= 0) series = f.series_in_t(opt.series);
  write_all(opt.out,
            gjgf::format_output(f, series ? &*series : nullptr,
                                problem.alphabet.symbols(), opt.decimal));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact generating functions for words avoiding forbidden factors"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  GfOptions gf;
  CLI::App* gf_cmd = app.add_subcommand(
      "gf", "Generating function for a problem document");
  gf_cmd->add_option("--input", gf.input, "Problem JSON (\"-\" for stdin)")
      ->required();
  gf_cmd->add_option("--method", gf.method, "Engine to run")
      ->check(CLI::IsMember({"cluster", "recursive"}));
  gf_cmd->add_option("--series", gf.series, "Print series through t^N")
      ->check(CLI::NonNegativeNumber);
  gf_cmd->add_option("--check-oracle", gf.check_oracle,
                     "Compare against brute force through t^N")
      ->check(CLI::NonNegativeNumber);
  gf_cmd->add_option("--dump-states", gf.dump_states,
                     "Write the prefix-state graph as JSON");
  gf_cmd->add_option("--decimal", gf.decimal,
                     "Also render constant series coefficients as decimals")
      ->check(CLI::PositiveNumber);
  gf_cmd->add_flag("--auto-reduce", gf.auto_reduce,
                   "Drop forbidden words that contain another");
  gf_cmd->add_option("--out", gf.out, "Output path (\"-\" for stdout)");

  IngestOptions ingest;
  CLI::App* ingest_cmd = app.add_subcommand(
      "ingest", "Build a character model from a word list");
  ingest_cmd
      ->add_option("--corpus", ingest.corpus,
                   "One word per line (\"-\" for stdin)")
      ->required();
  ingest_cmd
      ->add_option("--alphabet", ingest.alphabet,
                   "JSON array of letter symbols")
      ->required();
  ingest_cmd->add_flag("--skip-invalid", ingest.skip_invalid,
                       "Skip lines with unknown symbols or duplicates");
  ingest_cmd->add_option("--out", ingest.out, "Model JSON output path")
      ->required();

  AvoidOptions avoid;
  CLI::App* avoid_cmd = app.add_subcommand(
      "avoid", "Probability that model text avoids forbidden strings");
  avoid_cmd->add_option("--model", avoid.model, "Model JSON from ingest")
      ->required();
  avoid_cmd
      ->add_option("--forbidden", avoid.forbidden,
                   "Symbol arrays as inline JSON or a file path")
      ->required();
  avoid_cmd->add_option("--series", avoid.series, "Print series through t^N")
      ->check(CLI::NonNegativeNumber);
  avoid_cmd->add_option("--check-oracle", avoid.check_oracle,
                        "Compare against brute force through t^N")
      ->check(CLI::NonNegativeNumber);
  avoid_cmd->add_option("--decimal", avoid.decimal,
                        "Also render series coefficients as decimals")
      ->check(CLI::PositiveNumber);
  avoid_cmd->add_flag("--auto-reduce", avoid.auto_reduce,
                      "Drop forbidden words that contain another");
  avoid_cmd->add_option("--out", avoid.out, "Output path (\"-\" for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (gf_cmd->parsed()) return run_gf(gf);
    if (ingest_cmd->parsed()) return run_ingest(ingest);
    return run_avoid(avoid);
  } catch (const gjgf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gjgf::is_solver_error(e.code()) ? kExitSolver : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
