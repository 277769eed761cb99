#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "matecensus/census.hpp"
#include "matecensus/error.hpp"
#include "matecensus/generate.hpp"
#include "matecensus/graph6.hpp"

using namespace matecensus;

namespace {

InvariantKind tok(const char* s) { return *parse_invariant_kind(s); }

const std::vector<Graph>& graphs(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_connected_graphs(n)).first;
  return it->second;
}

CensusConfig config(std::vector<InvariantKind> kinds, int workers = 1) {
  CensusConfig cfg;
  cfg.parameter.kinds = std::move(kinds);
  cfg.workers = workers;
  return cfg;
}

std::string mate_file(const CensusResult& r) {
  std::ostringstream out;
  write_mate_classes(out, extract_mate_classes(r.table));
  return out.str();
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::Io;
}

}  // namespace

TEST_SUITE("fraction") {
  TEST_CASE("decimal rendering") {
    CHECK(Fraction{1868, 261080}.decimal() == "0.00715489505132526");
    CHECK(Fraction{6, 112}.decimal() == "0.0535714285714286");
    CHECK(Fraction{1, 3}.decimal() == "0.333333333333333");
    CHECK(Fraction{2, 3}.decimal() == "0.666666666666667");
    CHECK(Fraction{1, 1}.decimal() == "1");
    CHECK(Fraction{0, 7}.decimal() == "0");
    CHECK(Fraction{5, 2}.decimal() == "2.5");
    CHECK(Fraction{1, 8}.decimal(2) == "0.13");
    CHECK(Fraction{999999, 1000000}.decimal(3) == "1");
    CHECK(Fraction{123456789, 1}.decimal(3) == "123000000");
  }

  TEST_CASE("reduction") {
    CHECK(Fraction{6, 112}.to_string() == "3/56");
    CHECK(Fraction{0, 5}.to_string() == "0/1");
    CHECK(Fraction{1868, 261080}.reduced().denominator == 65270);
  }
}

TEST_SUITE("census") {
  TEST_CASE("single invariant at order 6") {
    const VectorSource src(graphs(6));
    const auto r = run_census(src, config({tok("spec:A")})).report;
    CHECK(r.n == 6);
    CHECK(r.total == 112);
    CHECK(r.with_mate == 2);
    CHECK(r.classes == 1);
    CHECK(r.parameter == "spec:A");
    CHECK(csv_row(r) == "6,spec:A,single,112,2,1,1/56=0.0178571428571429");
    CHECK(csv_header() == "n,parameter,semantics,total,with_mate,classes,uncertainty");
  }

  TEST_CASE("mate classes") {
    const VectorSource src(graphs(7));
    CensusConfig cfg = config({tok("spec:L")});
    cfg.collect_members = true;
    const auto result = run_census(src, cfg);
    const auto classes = extract_mate_classes(result.table);
    CHECK(classes.size() == *result.report.classes);
    std::size_t members = 0;
    for (const auto& cls : classes) {
      CHECK(cls.size() >= 2);
      CHECK(std::is_sorted(cls.begin(), cls.end()));
      members += cls.size();
      const auto key = signature(parse_graph6(cls.front()), tok("spec:L"));
      for (const auto& g6 : cls) CHECK(signature(parse_graph6(g6), tok("spec:L")) == key);
    }
    CHECK(members == result.report.with_mate);
    CHECK(result.report.with_mate == 115);

    const std::string file = mate_file(result);
    CHECK(static_cast<std::size_t>(std::count(file.begin(), file.end(), '\n')) == classes.size());
  }

  TEST_CASE("members must be requested") {
    const VectorSource src(graphs(5));
    const auto result = run_census(src, config({tok("snf:A")}));
    CHECK(code_of([&] { extract_mate_classes(result.table); }) == Errc::MembersNotCollected);
  }

  TEST_CASE("stream errors") {
    std::vector<Graph> mixed = graphs(4);
    mixed.push_back(graphs(5).front());
    CHECK(code_of([&] { run_census(VectorSource(mixed), config({tok("spec:A")})); }) == Errc::MixedOrder);

    std::vector<Graph> with_gap = graphs(4);
    with_gap.push_back(Graph(4));
    CHECK(code_of([&] { run_census(VectorSource(with_gap), config({tok("spec:A")}, 2)); }) == Errc::Disconnected);

    CHECK(code_of([&] { run_census(VectorSource(graphs(4)), config({})); }) == Errc::InvalidArgument);
    CHECK(code_of([&] {
            run_census(VectorSource(graphs(4)), config({tok("spec:A"), tok("snf:A"), tok("snf:L")}));
          }) == Errc::InvalidArgument);
  }

  TEST_CASE("empty stream") {
    const auto r = run_census(VectorSource({}), config({tok("spec:A")})).report;
    CHECK(r.total == 0);
    CHECK(r.with_mate == 0);
    CHECK(r.uncertainty().decimal() == "0");
  }

  TEST_CASE("hashed two-pass mode equals exact mode") {
    for (int n : {5, 6, 7}) {
      const VectorSource src(graphs(n));
      for (const auto& k : all_invariant_kinds()) {
        CensusConfig exact = config({k});
        exact.collect_members = true;
        CensusConfig hashed = exact;
        hashed.hashing = HashingMode::TwoPassHashed;
        hashed.chunk_size = 100;
        const auto a = run_census(src, exact);
        const auto b = run_census(src, hashed);
        CHECK(a.report == b.report);
        CHECK(mate_file(a) == mate_file(b));
        CHECK(b.table.bucket_count() <= a.table.bucket_count());
      }
    }
  }

  TEST_CASE("signature table agrees with direct censuses") {
    const VectorSource src(graphs(6));
    const auto& kinds = all_invariant_kinds();
    const SignatureTable table(src, kinds, 2);
    CHECK(table.order() == 6);
    CHECK(table.graph_count() == 112);
    for (const auto& k : kinds) CHECK(table.census(k) == run_census(src, config({k})).report);
    for (std::size_t i = 0; i < kinds.size(); i += 7) {
      for (std::size_t j = 0; j < kinds.size(); j += 5) {
        const auto direct = run_census(src, config({kinds[i], kinds[j]})).report;
        CHECK(table.census(kinds[i], kinds[j], Semantics::Joint) == direct);
      }
    }
  }

  TEST_CASE("joint versus intersection") {
    const VectorSource src(graphs(7));
    const SignatureTable table(src, all_invariant_kinds());
    for (const auto& a : all_invariant_kinds()) {
      for (const auto& b : all_invariant_kinds()) {
        const auto joint = table.census(a, b, Semantics::Joint);
        const auto both = table.census(a, b, Semantics::SetIntersection);
        CHECK(joint.with_mate <= both.with_mate);
        CHECK(both.with_mate <= std::min(table.census(a).with_mate, table.census(b).with_mate));
        CHECK_FALSE(both.classes.has_value());
      }
    }
    CensusConfig cfg = config({tok("spec:A"), tok("snf:A")});
    cfg.semantics = Semantics::SetIntersection;
    const auto r = run_census(src, cfg).report;
    CHECK(r.with_mate == 63);
    CHECK(csv_row(r).find(",intersection,") != std::string::npos);
    CHECK(csv_row(r).find(",-,") != std::string::npos);
    cfg.collect_members = true;
    CHECK(code_of([&] { run_census(src, cfg); }) == Errc::InvalidArgument);
  }

  TEST_CASE("pairwise table layout") {
    const VectorSource src(graphs(5));
    const std::vector<InvariantKind> rows{tok("spec:Q"), tok("snf:D")};
    const std::vector<InvariantKind> cols{tok("snf:A"), tok("spec:Q"), tok("snf:Ddeg")};
    const auto cells = pairwise_table(src, rows, cols, Semantics::Joint);
    REQUIRE(cells.size() == 6);
    CHECK(cells[1].row == rows[0]);
    CHECK(cells[1].col == cols[1]);
    CHECK(cells[1].report.with_mate == 2);
    CHECK(cells[3].report.parameter == "snf:D+snf:A");
    CHECK_THROWS_AS(pairwise_table(src, {}, cols, Semantics::Joint), Error);
  }

  TEST_CASE("keys: parallel equals serial") {
    const auto& gs = graphs(7);
    for (const auto& p : {Parameter::single(tok("spec:DQ")), Parameter::joint(tok("snf:WD"), tok("spec:Atr"))}) {
      const auto serial = compute_keys_serial(gs, p);
      for (int workers : {1, 2, 4}) CHECK(compute_keys_parallel(gs, p, workers) == serial);
    }
  }

  TEST_CASE("output does not depend on workers, chunking or stream order") {
    std::vector<Graph> gs = graphs(7);
    std::mt19937_64 rng(23);
    std::vector<Graph> shuffled = gs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (const auto& kinds : {std::vector<InvariantKind>{tok("spec:Q")},
                              std::vector<InvariantKind>{tok("snf:Ddeg"), tok("spec:D")}}) {
      CensusConfig base = config(kinds);
      base.collect_members = true;
      const auto reference = run_census(VectorSource(gs), base);
      for (int workers : {2, 4}) {
        for (std::size_t chunk : {std::size_t{1}, std::size_t{64}}) {
          CensusConfig cfg = base;
          cfg.workers = workers;
          cfg.chunk_size = chunk;
          const auto r = run_census(VectorSource(shuffled), cfg);
          CHECK(r.report == reference.report);
          CHECK(mate_file(r) == mate_file(reference));
        }
      }
    }
  }

  TEST_CASE("file source") {
    const auto path = std::filesystem::temp_directory_path() / "matecensus_test_graphs.g6";
    {
      std::ofstream out(path);
      out << ">>graph6<<\n";
      for (const auto& g : graphs(6)) out << encode_graph6(g) << '\n';
    }
    const FileSource file(path.string());
    const VectorSource memory(graphs(6));
    for (const char* k : {"spec:Q", "snf:DdegPlus"}) {
      CHECK(run_census(file, config({tok(k)})).report == run_census(memory, config({tok(k)})).report);
    }
    CHECK(code_of([] { run_census(FileSource("/nonexistent/x.g6"), config({tok("spec:A")})); }) == Errc::Io);
    std::filesystem::remove(path);
  }
}
