#include "specbound/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <thread>

#include "specbound/errors.hpp"
#include "specbound/generators.hpp"
#include "specbound/graph6.hpp"
#include "specbound/spectral.hpp"
#include "specbound/vector_chromatic.hpp"
#include "specbound/verify.hpp"

namespace specbound::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

constexpr const char* kGeneratorHelp =
    "Graph generator spec family:param[:param...]\n"
    "  complete:N  empty:N  cycle:N  path:N  bipartite:A:B  kneser:N:K  gnp:N:P[:SEED]\n"
    "gnp without SEED uses --seed; --count K produces seeds SEED..SEED+K-1";

// Rounded to 10 significant digits so JSON's shortest round-trip printing
// matches the text and CSV output.
double rounded(double x) { return std::stod(format_number(x)); }

const char* command_name(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::chivec: return "chivec";
    case Command::verify: return "verify";
    case Command::sweep: return "sweep";
  }
  return "?";
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

std::vector<NamedGraph> load_graphs(const RunConfig& config, std::istream& in) {
  std::vector<NamedGraph> graphs;
  if (config.generator) {
    const GraphFamily fam = parse_family(*config.generator, config.seed);
    if (const auto* g = std::get_if<family::Gnp>(&fam)) {
      for (std::size_t i = 0; i < config.count; ++i) {
        family::Gnp member = *g;
        member.seed = g->seed + i;
        graphs.push_back({family_name(member), generate(member)});
      }
    } else {
      if (config.count != 1) throw ArgumentError("--count only applies to gnp generators");
      graphs.push_back({family_name(fam), generate(fam)});
    }
    return graphs;
  }

  std::vector<Graph6Line> lines;
  if (config.input == "-") {
    lines = read_graph6_stream(in);
  } else {
    std::ifstream file(config.input);
    if (!file) throw ArgumentError("cannot open input file '" + config.input + "'");
    lines = read_graph6_stream(file);
  }
  for (auto& line : lines) {
    graphs.push_back({"line:" + std::to_string(line.line_number), std::move(line.graph)});
  }
  return graphs;
}

std::string metadata_line(const RunConfig& config) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  std::string line = std::string("specbound ") + kVersion + " command=" + command_name(config.command);
  line += config.generator ? " gen=" + *config.generator : " input=" + config.input;
  line += " tol=" + format_number(config.tol) + " max_iter=" + std::to_string(config.max_iter);
  line += std::string(" started=") + stamp;
  return line;
}

ordered_json residuals_json(const SdpResiduals& r) {
  return {{"affine", rounded(r.affine)}, {"psd", rounded(r.psd)}, {"nonneg", rounded(r.nonneg)}};
}

ordered_json lemma2_json(const Lemma2Report& l) {
  return {{"xy_product_norm", rounded(l.xy_product_norm)},
          {"offedge_agreement", rounded(l.offedge_agreement)},
          {"d_from_nonedges", rounded(l.d_from_nonedges)},
          {"d_from_edges", rounded(l.d_from_edges)},
          {"norm_x_sq", rounded(l.norm_x_sq)},
          {"norm_y_sq", rounded(l.norm_y_sq)},
          {"cauchy_lhs", rounded(l.cauchy_lhs)},
          {"cauchy_rhs", rounded(l.cauchy_rhs)},
          {"cauchy_sum_lhs", rounded(l.cauchy_sum_lhs)},
          {"cauchy_sum_rhs", rounded(l.cauchy_sum_rhs)},
          {"mu", rounded(l.mu)},
          {"hypothesis_lhs", rounded(l.hypothesis_lhs)},
          {"hypothesis_rhs", rounded(l.hypothesis_rhs)},
          {"conclusion_lhs", rounded(l.conclusion_lhs)},
          {"conclusion_rhs", rounded(l.conclusion_rhs)},
          {"d_identity_holds", l.d_identity_holds},
          {"cauchy_holds", l.cauchy_holds},
          {"hypothesis_holds", l.hypothesis_holds},
          {"conclusion_holds", l.conclusion_holds}};
}

ordered_json lemma1_json(const Lemma1Check& c) {
  return {{"lhs", rounded(c.lhs)}, {"rhs", rounded(c.rhs)}, {"slack", rounded(c.slack)}};
}

ordered_json values_json(const std::vector<double>& values) {
  ordered_json out = ordered_json::array();
  for (double v : values) out.push_back(rounded(v));
  return out;
}

ordered_json report_json(const VerificationReport& r) {
  return {{"id", r.id},
          {"graph6", r.graph6},
          {"n", r.n},
          {"m", r.m},
          {"eigenvalues", values_json(r.eigenvalues)},
          {"s_plus", rounded(r.s_plus)},
          {"s_minus", rounded(r.s_minus)},
          {"chi_vec", rounded(r.chi_vec)},
          {"chi_vec_sdp1", rounded(r.chi_vec_sdp1)},
          {"agreement_gap", rounded(r.agreement_gap)},
          {"sdp_converged", r.sdp_converged},
          {"sdp_iterations", r.sdp_iterations},
          {"bound", rounded(r.bound)},
          {"slack_main", rounded(r.slack_main)},
          {"scaled_slack", rounded(r.scaled_slack)},
          {"intermediate_slack", rounded(r.intermediate_slack)},
          {"intermediate_slack_swapped", rounded(r.intermediate_slack_swapped)},
          {"lemma1_forward", lemma1_json(r.lemma1_forward)},
          {"lemma1_swapped", lemma1_json(r.lemma1_swapped)},
          {"lift_residuals", residuals_json(r.lift_residuals)},
          {"lemma2_forward", lemma2_json(r.lemma2_forward)},
          {"lemma2_swapped", lemma2_json(r.lemma2_swapped)},
          {"equality_case", r.equality_case},
          {"certified", r.certified},
          {"failures", r.failures}};
}

ordered_json summary_json(const SweepSummary& s) {
  return {{"count", s.count},
          {"certified", s.certified},
          {"equality_cases", s.equality_cases},
          {"min_slack", rounded(s.min_slack)},
          {"min_relative_slack", rounded(s.min_relative_slack)},
          {"failures", s.failures}};
}

std::string joined(const std::vector<double>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += format_number(values[i]);
  }
  return out;
}

void emit_json(std::ostream& out, const RunConfig& config, ordered_json body) {
  ordered_json doc;
  if (config.metadata) doc["meta"] = metadata_line(config);
  doc["command"] = command_name(config.command);
  for (auto& [key, value] : body.items()) doc[key] = value;
  out << doc.dump(2) << "\n";
}

int run_spectrum(const RunConfig& config, Format format, const std::vector<NamedGraph>& graphs,
                 std::ostream& out) {
  std::vector<SpectralSplit> results;
  results.reserve(graphs.size());
  for (const auto& g : graphs) results.push_back(split(adjacency_matrix(g.graph)));

  if (format == Format::json) {
    ordered_json items = ordered_json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i].graph;
      items.push_back({{"id", graphs[i].id},
                       {"graph6", write_graph6(g)},
                       {"n", g.vertex_count()},
                       {"m", g.edge_count()},
                       {"eigenvalues", values_json(results[i].eigenvalues)},
                       {"s_plus", rounded(results[i].s_plus)},
                       {"s_minus", rounded(results[i].s_minus)}});
    }
    emit_json(out, config, {{"graphs", items}});
  } else if (format == Format::csv) {
    out << "graph6,n,m,s_plus,s_minus,eigenvalues\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i].graph;
      out << write_graph6(g) << ',' << g.vertex_count() << ',' << g.edge_count() << ','
          << format_number(results[i].s_plus) << ',' << format_number(results[i].s_minus) << ','
          << joined(results[i].eigenvalues, ";") << "\n";
    }
  } else {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i].graph;
      out << graphs[i].id << " graph6=" << write_graph6(g) << " n=" << g.vertex_count()
          << " m=" << g.edge_count() << "\n"
          << "  eigenvalues: " << joined(results[i].eigenvalues, " ") << "\n"
          << "  s_plus=" << format_number(results[i].s_plus)
          << " s_minus=" << format_number(results[i].s_minus) << "\n";
    }
  }
  return kExitOk;
}

int run_chivec(const RunConfig& config, Format format, const std::vector<NamedGraph>& graphs,
               const SdpSettings& settings, std::ostream& out) {
  std::vector<ChiVecResult> results;
  results.reserve(graphs.size());
  bool all_ok = true;
  const double agreement = ToleranceProfile{}.agreement;
  for (const auto& g : graphs) {
    results.push_back(chi_vec(g.graph, settings));
    all_ok = all_ok && results.back().converged() && results.back().agreement_gap <= agreement;
  }

  if (format == Format::json) {
    ordered_json items = ordered_json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto& r = results[i];
      items.push_back({{"id", graphs[i].id},
                       {"graph6", write_graph6(graphs[i].graph)},
                       {"n", graphs[i].graph.vertex_count()},
                       {"m", graphs[i].graph.edge_count()},
                       {"chi_vec", rounded(r.value())},
                       {"value_sdp1", rounded(r.value_sdp1)},
                       {"value_sdp2", rounded(r.value_sdp2)},
                       {"agreement_gap", rounded(r.agreement_gap)},
                       {"converged", r.converged()},
                       {"residuals_sdp1", residuals_json(r.residuals_sdp1)},
                       {"residuals_sdp2", residuals_json(r.residuals_sdp2)},
                       {"lifted_residuals", residuals_json(r.lifted_residuals)},
                       {"iterations_sdp1", r.iterations_sdp1},
                       {"iterations_sdp2", r.iterations_sdp2}});
    }
    emit_json(out, config, {{"graphs", items}});
  } else if (format == Format::csv) {
    out << "graph6,n,m,chi_vec,value_sdp1,value_sdp2,agreement_gap,converged\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto& r = results[i];
      out << write_graph6(graphs[i].graph) << ',' << graphs[i].graph.vertex_count() << ','
          << graphs[i].graph.edge_count() << ',' << format_number(r.value()) << ','
          << format_number(r.value_sdp1) << ',' << format_number(r.value_sdp2) << ','
          << format_number(r.agreement_gap) << ',' << bool_name(r.converged()) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto& r = results[i];
      out << graphs[i].id << " graph6=" << write_graph6(graphs[i].graph)
          << " chi_vec=" << format_number(r.value()) << " (sdp1 " << format_number(r.value_sdp1)
          << ", sdp2 " << format_number(r.value_sdp2) << ", gap " << format_number(r.agreement_gap)
          << ") converged=" << bool_name(r.converged()) << "\n";
    }
  }
  return all_ok ? kExitOk : kExitUncertified;
}

void write_report_csv_row(std::ostream& out, const VerificationReport& r) {
  out << r.graph6 << ',' << r.n << ',' << r.m << ',' << format_number(r.s_plus) << ','
      << format_number(r.s_minus) << ',' << format_number(r.chi_vec) << ','
      << format_number(r.bound) << ',' << format_number(r.slack_main) << ','
      << bool_name(r.equality_case) << ',' << bool_name(r.certified) << "\n";
}

void write_lemma2_text(std::ostream& out, const char* label, const Lemma2Report& l) {
  out << "  " << label << ": ||XY||=" << format_number(l.xy_product_norm)
      << " offedge=" << format_number(l.offedge_agreement)
      << " d=" << format_number(l.d_from_nonedges) << "/" << format_number(l.d_from_edges)
      << " cauchy " << format_number(l.cauchy_lhs) << "<=" << format_number(l.cauchy_rhs)
      << " hypothesis " << format_number(l.hypothesis_lhs) << "<=" << format_number(l.hypothesis_rhs)
      << " conclusion " << format_number(l.conclusion_lhs) << "<=" << format_number(l.conclusion_rhs)
      << " ok=" << bool_name(l.invariants_hold()) << "\n";
}

void write_report_text(std::ostream& out, const VerificationReport& r) {
  out << r.id << " graph6=" << r.graph6 << " n=" << r.n << " m=" << r.m << "\n"
      << "  s_plus=" << format_number(r.s_plus) << " s_minus=" << format_number(r.s_minus)
      << " chi_vec=" << format_number(r.chi_vec) << " (sdp1 " << format_number(r.chi_vec_sdp1)
      << ", gap " << format_number(r.agreement_gap) << ")\n"
      << "  bound=" << format_number(r.bound) << " slack=" << format_number(r.slack_main)
      << " scaled_slack=" << format_number(r.scaled_slack)
      << " equality=" << bool_name(r.equality_case) << "\n"
      << "  s+ <= (chi_vec-1)s- slack=" << format_number(r.intermediate_slack)
      << "  s- <= (chi_vec-1)s+ slack=" << format_number(r.intermediate_slack_swapped) << "\n";
  write_lemma2_text(out, "X=A+,Y=A-", r.lemma2_forward);
  write_lemma2_text(out, "X=A-,Y=A+", r.lemma2_swapped);
  out << "  certified=" << bool_name(r.certified) << "\n";
  for (const auto& why : r.failures) out << "  failure: " << why << "\n";
}

void write_summary_text(std::ostream& out, const SweepSummary& s) {
  out << "summary: graphs=" << s.count << " certified=" << s.certified
      << " equality_cases=" << s.equality_cases << " min_slack=" << format_number(s.min_slack)
      << " min_relative_slack=" << format_number(s.min_relative_slack)
      << " failures=" << s.failures.size() << "\n";
}

int run_verify(const RunConfig& config, Format format, const std::vector<NamedGraph>& graphs,
               const ToleranceProfile& tol, std::ostream& out, std::ostream& err) {
  unsigned threads = 1;
  if (config.parallel) {
    threads = config.threads > 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  }
  const SweepResult result = sweep(graphs, tol, threads);

  if (format == Format::json) {
    ordered_json items = ordered_json::array();
    for (const auto& r : result.reports) items.push_back(report_json(r));
    emit_json(out, config, {{"reports", items}, {"summary", summary_json(result.summary)}});
  } else if (format == Format::csv) {
    out << kReportCsvHeader << "\n";
    for (const auto& r : result.reports) write_report_csv_row(out, r);
    write_summary_text(err, result.summary);
  } else {
    const bool detailed = config.command == Command::verify;
    for (const auto& r : result.reports) {
      if (detailed) {
        write_report_text(out, r);
      } else {
        out << r.id << " " << r.graph6 << " slack=" << format_number(r.slack_main)
            << " chi_vec=" << format_number(r.chi_vec) << " certified=" << bool_name(r.certified)
            << "\n";
      }
    }
    write_summary_text(out, result.summary);
  }
  return result.summary.failures.empty() ? kExitOk : kExitUncertified;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

ParsedArgs parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral bounds and the vector chromatic number: s+, s-, chi_vec via two SDPs, "
               "and numerical certification of min{s+,s-} >= 2m/chi_vec."};
  app.require_subcommand(1);

  RunConfig config;
  std::string format_name;
  std::string generator;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "graph6 file, one graph per line ('-' for stdin)");
    sub->add_option("--gen", generator, kGeneratorHelp);
    sub->add_option("--count", config.count, "number of gnp graphs")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "base seed for gnp generators");
    sub->add_option("--tol", config.tol, "SDP residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", config.max_iter, "SDP iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", format_name, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--parallel", config.parallel, "evaluate graphs concurrently");
    sub->add_option("--threads", config.threads, "worker threads for --parallel");
    sub->add_flag("--no-meta", [&](std::int64_t) { config.metadata = false; },
                  "omit the metadata line (the only run-dependent output)");
  };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"spectrum", "eigenvalues, s+ and s- of the adjacency matrix", Command::spectrum},
      {"chivec", "vector chromatic number from both SDP formulations", Command::chivec},
      {"verify", "full certification report per graph", Command::verify},
      {"sweep", "one-line certification per graph plus a summary (CSV by default)", Command::sweep},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    subs.emplace_back(sub, e.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitUsage};
  }

  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) config.command = command;
  }
  if (!generator.empty()) config.generator = generator;
  if (format_name == "text") config.format = Format::text;
  if (format_name == "json") config.format = Format::json;
  if (format_name == "csv") config.format = Format::csv;
  return {config, kExitOk};
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!(config.tol > 0.0) || config.max_iter < 1) {
    err << "error: tol must be positive and max_iter at least 1\n";
    return kExitUsage;
  }
  std::vector<NamedGraph> graphs;
  try {
    graphs = load_graphs(config, in);
    for (const auto& g : graphs) {
      if (g.graph.vertex_count() == 0) throw ArgumentError(g.id + ": graph has no vertices");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Format format =
      config.format.value_or(config.command == Command::sweep ? Format::csv : Format::text);
  if (config.metadata && format != Format::json) out << "# " << metadata_line(config) << "\n";

  ToleranceProfile tol;
  tol.sdp.tol = config.tol;
  tol.sdp.max_iter = config.max_iter;

  try {
    switch (config.command) {
      case Command::spectrum: return run_spectrum(config, format, graphs, out);
      case Command::chivec: return run_chivec(config, format, graphs, tol.sdp, out);
      case Command::verify:
      case Command::sweep: return run_verify(config, format, graphs, tol, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace specbound::cli
