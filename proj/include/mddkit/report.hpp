#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mddkit/generators.hpp"
#include "mddkit/monomial.hpp"

namespace mddkit {

/// One size-report line. Word counts use the sequential form: a node with r
/// outgoing edges costs 1 + 2r words, so mdd_words = nodes + 2*edges, and
/// gens_words counts the minimal generator list at n words per monomial.
struct SizeReportRow {
  std::string source;
  std::size_t n = 0;
  std::size_t r_raw = 0;
  std::size_t r_min = 0;
  std::uint64_t gens_words = 0;
  std::uint64_t tree_words = 0;
  std::uint64_t mdd_words = 0;
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
  std::uint64_t width = 0;
  std::uint64_t branching = 0;
};

SizeReportRow measure_ideal(const std::string& source, const GeneratorList& gens);

void write_size_report_header(std::ostream& os);
void write_size_report_row(const SizeReportRow& row, std::ostream& os);

/// Membership timing row; ns_per_query is the median over reps.
struct BenchRow {
  std::string backend;
  int threads = 1;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t queries = 0;
  int reps = 0;
  double ns_per_query = 0.0;
  bool agreement = true;
};

struct BenchConfig {
  FamilySpec spec;
  std::size_t queries = 10000;
  int reps = 5;
  std::uint64_t query_bound = 0;  // 0: use the family bound
  std::uint64_t query_seed = 1;
  int threads = 1;  // > 1 adds parallel rows
};

/// Runs the mdd and naive-list backends over one random query set, checks
/// that every answer agrees, and reports timings. Throws std::runtime_error
/// on any disagreement; timings are never reported in that case.
std::vector<BenchRow> bench_membership(const BenchConfig& config);

void write_bench_header(std::ostream& os);
void write_bench_row(const BenchRow& row, std::ostream& os);

}  // namespace mddkit
