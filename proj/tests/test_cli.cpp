#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "specbound/cli.hpp"

using namespace specbound;
using namespace specbound::cli;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run_with(RunConfig config, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(config, in, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config_for(Command c, std::optional<std::string> gen = std::nullopt) {
  RunConfig config;
  config.command = c;
  config.generator = std::move(gen);
  config.metadata = false;
  return config;
}

std::optional<RunConfig> parse(std::vector<const char*> args, int* code = nullptr) {
  args.insert(args.begin(), "specbound");
  std::ostringstream out, err;
  ParsedArgs p = parse_args(static_cast<int>(args.size()), args.data(), out, err);
  if (code) *code = p.exit_code;
  return p.config;
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(format_number(2.5) == "2.5");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333");
  CHECK(format_number(0.0) == "0");
}

TEST_CASE("parse_args") {
  const auto c = parse({"sweep", "--gen", "gnp:20:0.5", "--count", "3", "--seed", "7", "--format",
                        "json", "--parallel", "--threads", "2", "--no-meta"});
  REQUIRE(c);
  CHECK(c->command == Command::sweep);
  CHECK(c->generator == "gnp:20:0.5");
  CHECK(c->count == 3);
  CHECK(c->seed == 7);
  CHECK(c->format == Format::json);
  CHECK(c->parallel);
  CHECK(c->threads == 2);
  CHECK_FALSE(c->metadata);

  const auto file = parse({"spectrum", "graphs.g6"});
  REQUIRE(file);
  CHECK(file->input == "graphs.g6");
  CHECK_FALSE(file->format);

  int code = 0;
  CHECK_FALSE(parse({}, &code));
  CHECK(code == kExitUsage);
  CHECK_FALSE(parse({"verify", "--format", "xml"}, &code));
  CHECK(code == kExitUsage);
  CHECK_FALSE(parse({"verify", "--tol", "-1"}, &code));
  CHECK(code == kExitUsage);
  CHECK_FALSE(parse({"--help"}, &code));
  CHECK(code == kExitOk);
}

TEST_CASE("spectrum json") {
  RunConfig config = config_for(Command::spectrum, "complete:3");
  config.format = Format::json;
  const Captured r = run_with(config);
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK_FALSE(doc.contains("meta"));
  CHECK(doc["command"] == "spectrum");
  const auto& g = doc["graphs"][0];
  CHECK(g["graph6"] == "Bw");
  CHECK(g["n"] == 3);
  CHECK(g["m"] == 3);
  CHECK(g["s_plus"].get<double>() == doctest::Approx(4.0));
  CHECK(g["s_minus"].get<double>() == doctest::Approx(2.0));
  CHECK(g["eigenvalues"].size() == 3);
}

TEST_CASE("verify json fields") {
  RunConfig config = config_for(Command::verify, "kneser:5:2");
  config.format = Format::json;
  const Captured r = run_with(config);
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& rep = doc["reports"][0];
  for (const char* key : {"id", "graph6", "n", "m", "eigenvalues", "s_plus", "s_minus", "chi_vec",
                          "bound", "slack_main", "lemma2_forward", "lemma2_swapped",
                          "equality_case", "certified"}) {
    CAPTURE(key);
    CHECK(rep.contains(key));
  }
  CHECK(rep["chi_vec"].get<double>() == doctest::Approx(2.5).epsilon(1e-6));
  CHECK(rep["certified"] == true);
  CHECK(doc["summary"]["count"] == 1);
}

TEST_CASE("sweep csv, stdin input and summary on stderr") {
  const Captured r = run_with(config_for(Command::sweep), "A_\n\nBw\n");
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header, first, second, extra;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(header == kReportCsvHeader);
  CHECK(first.rfind("A_,2,1,", 0) == 0);
  CHECK(second.rfind("Bw,3,3,", 0) == 0);
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(r.err.find("summary: graphs=2 certified=2") != std::string::npos);
}

TEST_CASE("errors and exit codes") {
  const Captured bad = run_with(config_for(Command::verify), "A_\nB~\n");
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("line 2") != std::string::npos);

  CHECK(run_with(config_for(Command::verify, "kneser:3:2")).code == kExitUsage);
  RunConfig count = config_for(Command::verify, "complete:3");
  count.count = 2;
  CHECK(run_with(count).code == kExitUsage);

  RunConfig missing = config_for(Command::verify);
  missing.input = "/nonexistent/graphs.g6";
  CHECK(run_with(missing).code == kExitUsage);

  RunConfig starved = config_for(Command::verify, "cycle:7");
  starved.max_iter = 5;
  CHECK(run_with(starved).code == kExitUncertified);
  RunConfig chivec = config_for(Command::chivec, "cycle:7");
  chivec.max_iter = 5;
  CHECK(run_with(chivec).code == kExitUncertified);
}

TEST_CASE("metadata line") {
  RunConfig config = config_for(Command::spectrum, "path:3");
  config.metadata = true;
  const Captured r = run_with(config);
  CHECK(r.out.rfind("# specbound ", 0) == 0);
  CHECK(r.out.find("command=spectrum gen=path:3") != std::string::npos);
}

TEST_CASE("determinism: repeated and parallel runs are byte-identical") {
  RunConfig config = config_for(Command::sweep, "gnp:10:0.5");
  config.count = 6;
  const Captured a = run_with(config);
  const Captured b = run_with(config);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  config.parallel = true;
  config.threads = 3;
  CHECK(run_with(config).out == a.out);

  for (Format f : {Format::text, Format::json, Format::csv}) {
    RunConfig v = config_for(Command::verify, "cycle:5");
    v.format = f;
    CHECK(run_with(v).out == run_with(v).out);
  }
}
