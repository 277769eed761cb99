// matecensus: command-line front end.
//
//   matecensus census      --gen graphs:6 --param spec:A
//   matecensus pair-census --input g8.g6 --param spec:WA --param snf:D --mates out.txt
//   matecensus table       --gen graphs:7 --rows all --cols snf:WD
//   matecensus trees       --min-n 9 --max-n 13 --param snf:DdegPlus
//   matecensus gen         graphs:5 -o g5.g6
//   matecensus matrix      --kind DL --graph6 Bg
//   matecensus verify      --max-n 6
//
// Exit status: 0 success, 1 data error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "matecensus/census.hpp"
#include "matecensus/error.hpp"
#include "matecensus/generate.hpp"
#include "matecensus/graph6.hpp"
#include "matecensus/verify.hpp"

using namespace matecensus;

namespace {

constexpr int kDataError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string gen;
  std::string input;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_option("--gen", gen, "built-in generator: graphs:N (N <= 8) or trees:N");
    auto* i = cmd->add_option("--input", input, "graph6 file, or - for stdin");
    g->excludes(i);
  }

  std::unique_ptr<GraphSource> open(int workers) const {
    if (gen.empty() == input.empty()) throw UsageError("give exactly one of --gen or --input");
    if (!gen.empty()) return make_generator_source(gen, workers);
    if (input != "-") return std::make_unique<FileSource>(input);
    std::vector<Graph> graphs;
    read_graph6_stream(std::cin, [&](Graph g, std::string) { graphs.push_back(std::move(g)); });
    return std::make_unique<VectorSource>(std::move(graphs), "stdin");
  }
};

InvariantKind parse_token(const std::string& token) {
  if (auto k = parse_invariant_kind(token)) return *k;
  throw UsageError("unknown invariant '" + token + "'; valid tokens: " + valid_tokens_help());
}

std::vector<InvariantKind> parse_list(const std::string& list) {
  if (list == "all") return all_invariant_kinds();
  std::vector<InvariantKind> out;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(parse_token(token));
  }
  if (out.empty()) throw UsageError("empty invariant list");
  return out;
}

Semantics parse_semantics(const std::string& s) {
  if (s == "joint") return Semantics::Joint;
  if (s == "intersection") return Semantics::SetIntersection;
  throw UsageError("--semantics must be joint or intersection");
}

void note_labeling(std::span<const InvariantKind> kinds) {
  for (const auto& k : kinds) {
    if (!labeling_invariant(k)) {
      std::cerr << "note: " << to_token(k) << " depends on the vertex labeling of the input graphs\n";
    }
  }
}

// Writes to `path`, or stdout when empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw Error(Errc::Io, "cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int default_workers() {
  if (const char* env = std::getenv("MATECENSUS_WORKERS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("MATECENSUS_WORKERS must be an integer");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra and Smith normal forms of graph matrices; cospectral and coinvariant mate censuses."};
  app.require_subcommand(1);
  int workers = -1;
  app.add_option("--workers", workers, "worker threads (default: MATECENSUS_WORKERS, else all cores)")
      ->check(CLI::NonNegativeNumber);

  // census / pair-census
  InputOptions census_in;
  std::vector<std::string> census_params;
  std::string semantics = "joint";
  std::string mates_path, csv_path;
  bool hashed = false;
  bool no_header = false;
  auto add_census_options = [&](CLI::App* cmd) {
    census_in.add_to(cmd);
    cmd->add_option("--param", census_params, "invariant token such as spec:A or snf:WDQ")->required();
    cmd->add_option("--semantics", semantics, "joint (default) or intersection");
    cmd->add_option("--mates", mates_path, "write mate classes, one per line");
    cmd->add_option("--csv", csv_path, "write the report here instead of stdout");
    cmd->add_flag("--hashed", hashed, "two-pass hashed aggregation for large streams");
    cmd->add_flag("--no-header", no_header, "omit the CSV header line");
  };
  auto* census = app.add_subcommand("census", "count graphs with a mate under one or two invariants");
  add_census_options(census);
  auto* pair = app.add_subcommand("pair-census", "census under exactly two invariants");
  add_census_options(pair);

  // table
  InputOptions table_in;
  std::string rows = "all", cols = "all", table_semantics = "joint", table_csv;
  auto* table = app.add_subcommand("table", "pairwise census over row x column invariant lists");
  table_in.add_to(table);
  table->add_option("--rows", rows, "comma-separated tokens or 'all'");
  table->add_option("--cols", cols, "comma-separated tokens or 'all'");
  table->add_option("--semantics", table_semantics, "joint (default) or intersection");
  table->add_option("--csv", table_csv, "write here instead of stdout");

  // trees
  int tree_min = 9, tree_max = 14;
  std::vector<std::string> tree_params;
  std::string tree_csv;
  auto* trees = app.add_subcommand("trees", "mate censuses over all free trees of each order");
  trees->add_option("--min-n", tree_min)->check(CLI::Range(1, kMaxOrder));
  trees->add_option("--max-n", tree_max)->check(CLI::Range(1, kMaxOrder));
  trees->add_option("--param", tree_params, "tokens (default: the tree invariants of interest)");
  trees->add_option("--csv", tree_csv, "write here instead of stdout");

  // gen
  std::string gen_spec, gen_out;
  bool gen_header = false;
  auto* gen = app.add_subcommand("gen", "write a generated stream as graph6");
  gen->add_option("spec", gen_spec, "graphs:N or trees:N")->required();
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_flag("--header", gen_header, "start with >>graph6<<");

  // matrix
  std::string kind_name, graph6;
  auto* matrix = app.add_subcommand("matrix", "print one matrix with its characteristic polynomial and Smith form");
  matrix->add_option("--kind", kind_name, "matrix name, e.g. A, DL, WAtr")->required();
  matrix->add_option("--graph6", graph6, "the graph")->required();

  // verify
  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "run the cross-algorithm oracle suite");
  verify->add_option("--max-n", verify_options.max_n, "largest order checked")->check(CLI::Range(1, kMaxGeneratedOrder));
  verify->add_option("--trials", verify_options.permutation_trials, "random relabelings")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", verify_options.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (workers < 0) workers = default_workers();

    if (census->parsed() || pair->parsed()) {
      std::vector<InvariantKind> kinds;
      for (const auto& t : census_params) kinds.push_back(parse_token(t));
      if (pair->parsed() && kinds.size() != 2) throw UsageError("pair-census needs exactly two --param");
      if (kinds.size() > 2) throw UsageError("at most two --param");
      CensusConfig cfg;
      cfg.parameter.kinds = kinds;
      cfg.semantics = parse_semantics(semantics);
      cfg.collect_members = !mates_path.empty();
      cfg.hashing = hashed ? HashingMode::TwoPassHashed : HashingMode::Exact;
      cfg.workers = workers;
      if (cfg.semantics == Semantics::SetIntersection && kinds.size() != 2) {
        throw UsageError("intersection semantics needs two --param");
      }
      if (cfg.semantics == Semantics::SetIntersection && cfg.collect_members) {
        throw UsageError("--mates is not available with intersection semantics");
      }
      note_labeling(kinds);
      const auto source = census_in.open(workers);
      const CensusResult result = run_census(*source, cfg);
      if (!mates_path.empty()) {
        Output mates(mates_path);
        write_mate_classes(mates.stream(), extract_mate_classes(result.table));
      }
      Output out(csv_path);
      if (!no_header) out.stream() << csv_header() << '\n';
      out.stream() << csv_row(result.report) << '\n';
    } else if (table->parsed()) {
      const auto row_kinds = parse_list(rows);
      const auto col_kinds = parse_list(cols);
      const Semantics s = parse_semantics(table_semantics);
      note_labeling(row_kinds);
      note_labeling(col_kinds);
      const auto source = table_in.open(workers);
      const auto cells = pairwise_table(*source, row_kinds, col_kinds, s, workers);
      Output out(table_csv);
      out.stream() << csv_header() << '\n';
      for (const auto& cell : cells) out.stream() << csv_row(cell.report) << '\n';
    } else if (trees->parsed()) {
      if (tree_min > tree_max) throw UsageError("--min-n exceeds --max-n");
      if (tree_params.empty()) {
        tree_params = {"snf:D", "snf:DL", "snf:DQ", "spec:WA", "snf:Atr", "snf:Ddeg", "snf:DdegPlus"};
      }
      std::vector<InvariantKind> kinds;
      for (const auto& t : tree_params) kinds.push_back(parse_token(t));
      note_labeling(kinds);
      Output out(tree_csv);
      out.stream() << csv_header() << '\n';
      for (int n = tree_min; n <= tree_max; ++n) {
        const SignatureTable sigs(TreeSource(n), kinds, workers);
        for (const auto& k : kinds) out.stream() << csv_row(sigs.census(k)) << '\n';
      }
    } else if (gen->parsed()) {
      const auto source = make_generator_source(gen_spec, workers);
      Output out(gen_out);
      if (gen_header) out.stream() << kGraph6Header;
      source->for_each_chunk(4096, [&](std::span<const Graph> chunk) {
        for (const auto& g : chunk) out.stream() << encode_graph6(g) << '\n';
      });
    } else if (matrix->parsed()) {
      const auto kind = parse_matrix_kind(kind_name);
      if (!kind) throw UsageError("unknown matrix '" + kind_name + "'; valid tokens: " + valid_tokens_help());
      const Graph g = parse_graph6(graph6);
      const IntMatrix m = build_matrix(*kind, g);
      const SnfResult s = snf(m);
      std::cout << "matrix " << name(*kind) << '\n'
                << m.dump() << "charpoly " << char_poly(m).to_string() << '\n'
                << "snf " << s.to_string() << '\n'
                << "cokernel " << cokernel_decomposition(s).to_string() << '\n';
    } else if (verify->parsed()) {
      const VerifyReport report = run_verification(verify_options);
      for (const auto& c : report.checks) {
        std::cout << (c.ok() ? "ok   " : "FAIL ") << c.name << ": " << c.cases << " cases, " << c.failures
                  << " failures";
        if (!c.first_failure.empty()) std::cout << " (first: " << c.first_failure << ")";
        std::cout << '\n';
      }
      std::cout << "permutation-invariance covers the labeling-invariant kinds only\n";
      return report.ok() ? 0 : kDataError;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::InvalidArgument:
      case Errc::TooLarge:
      case Errc::Unsupported:
        return kUsageError;
      default:
        return kDataError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
