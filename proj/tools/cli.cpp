#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "mstep/classify.hpp"
#include "mstep/generator.hpp"
#include "mstep/io.hpp"
#include "mstep/oracle.hpp"
#include "mstep/report.hpp"
#include "mstep/verify.hpp"

namespace mstep::cli {

namespace {

// Thrown for input problems that map to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GraphFormat pick_format(const std::string& requested, const std::string& path) {
  if (!requested.empty()) {
    if (auto f = graph_format_from_name(requested)) return *f;
    throw InputError("unknown format '" + requested + "'");
  }
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".json") return GraphFormat::json;
  if (ext == ".dot" || ext == ".gv") return GraphFormat::dot;
  return GraphFormat::matrix;
}

DigraphDocument load(const std::string& path, const std::string& format) {
  return parse_document(read_input(path), pick_format(format, path));
}

StructureReport analyze_document(const DigraphDocument& doc) {
  return doc.partite_sets ? analyze(doc.digraph, *doc.partite_sets) : analyze(doc.digraph);
}

struct Options {
  std::string input;
  std::string format;
  bool json = false;
  std::size_t m_max = 8;
  CorpusSpec corpus;
  std::size_t jobs = 1;
  std::string dump_dir = ".";
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  std::optional<double> bias;
  std::string to = "json";
};

int cmd_classify(const Options& o, std::ostream& out) {
  const DigraphDocument doc = load(o.input, o.format);
  const StructureReport structure = analyze_document(doc);
  const Verdict verdict = classify(doc.digraph, structure, {true, step_budget_from_env()});
  if (o.json) {
    out << nlohmann::json{{"structure", to_json(structure)}, {"verdict", to_json(verdict)}}.dump(2)
        << "\n";
  } else {
    out << describe(structure) << describe(verdict);
  }
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const DigraphDocument doc = load(o.input, o.format);
  const std::vector<UndirectedGraph> seq = competition_sequence(doc.digraph, o.m_max);
  const auto report = detect_period(doc.digraph, step_budget_from_env());
  if (o.json) {
    nlohmann::json j;
    nlohmann::json matrices = nlohmann::json::array();
    for (const UndirectedGraph& g : seq) {
      matrices.push_back(to_json(g));
    }
    j["sequence"] = std::move(matrices);
    j["report"] = report ? to_json(*report) : nlohmann::json(nullptr);
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t m = 1; m <= seq.size(); ++m) {
    out << "C^" << m << ":\n" << to_matrix_text(seq[m - 1].adjacency());
  }
  if (report) {
    out << describe(*report);
  } else {
    out << "period undetermined within " << step_budget_from_env() << " steps\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerificationSummary summary = run_verification(o.corpus, o.jobs, step_budget_from_env());
  std::vector<std::string> dumped;
  for (const InstanceOutcome& f : summary.failures) {
    const Instance inst = corpus_instance(o.corpus, f.index);
    const std::filesystem::path path =
        std::filesystem::path(o.dump_dir) / ("counterexample-" + std::to_string(f.index) + ".json");
    std::ofstream file(path);
    file << serialize(inst.digraph, GraphFormat::json, inst.parts);
    dumped.push_back(path.string());
  }
  if (o.json) {
    nlohmann::json j;
    j["total"] = summary.total;
    j["agreed"] = summary.agreed;
    j["diverging"] = summary.diverging;
    j["cases"] = summary.tag_counts;
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t i = 0; i < summary.failures.size(); ++i) {
      failures.push_back({{"index", summary.failures[i].index},
                          {"reason", summary.failures[i].reason},
                          {"file", dumped[i]}});
    }
    j["failures"] = std::move(failures);
    out << j.dump(2) << "\n";
  } else {
    out << summary.agreed << "/" << summary.total << " agree (" << summary.diverging
        << " diverging)\n";
    for (const auto& [tag, count] : summary.tag_counts) out << "  " << tag << ": " << count << "\n";
    for (std::size_t i = 0; i < summary.failures.size(); ++i) {
      out << "MISMATCH #" << summary.failures[i].index << ": " << summary.failures[i].reason
          << " -> " << dumped[i] << "\n";
    }
  }
  return summary.all_agree() ? kOk : kMismatch;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const Instance inst = o.bias ? random_ranked_multipartite_tournament(o.sizes, o.seed, *o.bias)
                               : random_multipartite_tournament(o.sizes, o.seed);
  out << serialize(inst.digraph, pick_format(o.to, ""), inst.parts);
  return kOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  const DigraphDocument doc = load(o.input, o.format);
  std::optional<PartiteStructure> parts = doc.partite_sets;
  if (!parts) {
    try {
      parts = infer_partite_sets(doc.digraph);
    } catch (const NotMultipartiteTournament&) {
      // exported without clusters
    }
  }
  out << serialize(doc.digraph, pick_format(o.to, ""), parts);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"m-step competition graphs of multipartite tournaments", "mstep"};
  app.require_subcommand(1);

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", o.input, "input digraph, '-' for stdin")->required();
    sub->add_option("--format", o.format, "json, matrix or dot-in (default: by extension)")
        ->check(CLI::IsMember({"json", "matrix", "dot", "dot-in"}));
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "predict the limit or periodic family");
  add_input(classify_cmd);
  classify_cmd->add_flag("--json", o.json, "machine-readable output");

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "compute C^m(D) directly");
  add_input(simulate_cmd);
  simulate_cmd->add_option("--m-max", o.m_max, "largest m to print")->check(CLI::PositiveNumber);
  simulate_cmd->add_flag("--json", o.json, "machine-readable output");

  CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check theory and oracle");
  verify_cmd->add_option("--count", o.corpus.count, "number of instances");
  verify_cmd->add_option("--max-n", o.corpus.max_n, "largest vertex count")
      ->check(CLI::Range(2, 4096));
  verify_cmd->add_option("--parts", o.corpus.max_parts, "largest number of partite sets")
      ->check(CLI::Range(2, 4096));
  verify_cmd->add_option("--seed", o.corpus.seed, "corpus seed");
  verify_cmd->add_option("--jobs", o.jobs, "worker threads, 0 for all cores");
  verify_cmd->add_option("--dump-dir", o.dump_dir, "where counterexamples are written");
  verify_cmd->add_flag("--json", o.json, "machine-readable output");

  CLI::App* generate_cmd = app.add_subcommand("generate", "random multipartite tournament");
  generate_cmd->add_option("--parts", o.sizes, "part sizes, e.g. --parts 3,2,2")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", o.seed, "generator seed");
  generate_cmd->add_option("--bias", o.bias, "forward probability for a ranked instance")
      ->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--to", o.to, "output format")
      ->check(CLI::IsMember({"json", "matrix", "dot"}));

  CLI::App* export_cmd = app.add_subcommand("export", "convert a digraph to DOT or JSON");
  add_input(export_cmd);
  export_cmd->add_option("--to", o.to, "dot or json")
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out);
    if (*simulate_cmd) return cmd_simulate(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*generate_cmd) return cmd_generate(o, out);
    return cmd_export(o, out);
  } catch (const NotMultipartiteTournament& e) {
    err << "error: not a multipartite tournament: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Discrepancy& e) {
    err << "discrepancy: " << e.what() << "\n";
    return kMismatch;
  } catch (const BudgetExhausted& e) {
    out << "UNDETERMINED: " << e.what() << "\n";
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace mstep::cli
