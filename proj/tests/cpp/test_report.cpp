#include <doctest.h>

#include <cstdlib>

#include "speclab/commands.hpp"
#include "test_support.hpp"

using namespace speclab;

namespace {

CommandOptions minepump_options() {
  CommandOptions options;
  options.spec_path = testing::corpus_path("minepump.spec");
  options.k = 4;
  return options;
}

}  // namespace

TEST_CASE("check-bc command: verdicts drive the exit code") {
  CommandOptions options = minepump_options();
  options.fixtures = {"phi1"};
  CommandResult r = run_check_bc(options);
  CHECK(r.exit_code == kExitOk);

  options.fixtures = {"phi3"};
  CHECK(run_check_bc(options).exit_code == kExitOk);

  options.fixtures.clear();
  options.formulas = {"!(G(h -> X p) && G(m -> X (! p)))"};
  CommandResult trivial = run_check_bc(options);
  CHECK(trivial.exit_code == kExitNegative);
  bool saw_triviality = false;
  for (const auto& record : trivial.report.records)
    if (record["type"] == "bc" &&
        record["verdict"].value("failure", "") == "triviality")
      saw_triviality = true;
  CHECK(saw_triviality);
}

TEST_CASE("filter command in both modes") {
  CommandOptions options = minepump_options();
  options.fixtures = {"phi1", "phi2", "phi3"};

  options.mode = "generality";
  CommandResult generality = run_filter(options);
  std::vector<std::string> kept;
  for (const auto& record : generality.report.records)
    if (record["type"] == "bc") kept.push_back(record["id"]);
  std::sort(kept.begin(), kept.end());
  CHECK(kept == std::vector<std::string>{"phi1", "phi3"});

  options.mode = "contrasty";
  CommandResult contrasty = run_filter(options);
  kept.clear();
  for (const auto& record : contrasty.report.records)
    if (record["type"] == "bc") kept.push_back(record["id"]);
  CHECK(kept == std::vector<std::string>{"phi1"});
}

TEST_CASE("likelihood of the trivially true formula is 1 at rank 1") {
  CommandOptions options = minepump_options();
  options.formulas = {"true"};
  CommandResult r = run_likelihood(options);
  bool seen = false;
  for (const auto& record : r.report.records) {
    if (record["type"] != "bc") continue;
    seen = true;
    CHECK(record["rank"] == 1);
    CHECK(record["likelihood"]["value"] == 1.0);
  }
  CHECK(seen);
}

TEST_CASE("likelihood command ranks are a permutation honoring the order") {
  CommandOptions options = minepump_options();
  options.fixtures = {"phi1", "phi2", "phi3", "phi3prime"};
  CommandResult r = run_likelihood(options);
  std::vector<int> ranks;
  double previous = 2.0;
  for (const auto& record : r.report.records) {
    if (record["type"] != "bc") continue;
    ranks.push_back(record["rank"].get<int>());
    double value = record["likelihood"]["value"].get<double>();
    CHECK(value <= previous);
    previous = value;
  }
  std::sort(ranks.begin(), ranks.end());
  CHECK(ranks == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("identify reports are byte-identical modulo timings") {
  CommandOptions options = minepump_options();
  options.framework = "jfc";
  options.searcher = "pattern";
  CommandResult a = run_identify(options);
  CommandResult b = run_identify(options);
  CHECK(a.report.to_jsonl_without_timings() ==
        b.report.to_jsonl_without_timings());
  CHECK(a.report.to_jsonl_without_timings().find("termination-condition") !=
        std::string::npos);
}

TEST_CASE("report command summarizes manifest-shape statistics") {
  CommandOptions options;
  options.spec_path = testing::corpus_path("elevator.spec");
  CommandResult r = run_report(options);
  CHECK(r.exit_code == kExitOk);
  const auto& run = r.report.records.front();
  CHECK(run["summary"]["dom"] == 1);
  CHECK(run["summary"]["goals"] == 1);
  CHECK(run["summary"]["vars"] == 3);
  CHECK(run["summary"]["analyzable"] == false);
}

TEST_CASE("corpus directory override") {
  setenv("SPECLAB_CORPUS_DIR", "/tmp/some-corpus", 1);
  CHECK(corpus_dir() == "/tmp/some-corpus");
  unsetenv("SPECLAB_CORPUS_DIR");
  CHECK(corpus_dir() != "/tmp/some-corpus");
}
