#include "mddkit/report.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "mddkit/batch.hpp"
#include "mddkit/mdd.hpp"
#include "mddkit/rng.hpp"

namespace mddkit {

SizeReportRow measure_ideal(const std::string& source, const GeneratorList& gens) {
  if (gens.gens.empty()) throw std::invalid_argument("size report needs a nonempty ideal");
  SizeReportRow row;
  row.source = source;
  row.n = gens.dim;
  row.r_raw = gens.gens.size();
  const GeneratorList minimal = minimalize(gens);
  row.r_min = minimal.gens.size();
  row.gens_words = static_cast<std::uint64_t>(row.r_min) * gens.dim;

  DiagramStore store(gens.dim);
  const DiagramHandle h = build_diagram(store, gens);
  const DiagramMetrics m = store.metrics(*h.root);
  row.tree_words = store.tree_seq_words(*h.root);
  row.mdd_words = m.seq_words;
  row.nodes = m.nodes;
  row.edges = m.edges;
  row.width = m.width;
  row.branching = m.branching_degree;
  return row;
}

void write_size_report_header(std::ostream& os) {
  os << "source,n,r_raw,r_min,gens_words,tree_words,mdd_words,nodes,edges,width,branching\n";
}

void write_size_report_row(const SizeReportRow& row, std::ostream& os) {
  os << row.source << ',' << row.n << ',' << row.r_raw << ',' << row.r_min << ','
     << row.gens_words << ',' << row.tree_words << ',' << row.mdd_words << ',' << row.nodes
     << ',' << row.edges << ',' << row.width << ',' << row.branching << '\n';
}

namespace {

std::vector<Monomial> random_queries(std::size_t n, std::size_t count, std::uint64_t bound,
                                     std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::vector<Monomial> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::uint64_t> nat(n);
    for (auto& e : nat) e = rng.below(bound + 1);
    out.push_back(Monomial::from_natural(nat));
  }
  return out;
}

template <class F>
double median_ns_per_call(F&& run, std::size_t calls, int reps) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  for (int k = 0; k < reps; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    const auto t1 = std::chrono::steady_clock::now();
    const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
    samples.push_back(ns / static_cast<double>(calls));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

std::vector<BenchRow> bench_membership(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  if (config.queries == 0) return rows;
  if (config.reps < 1) throw std::invalid_argument("bench needs reps >= 1");

  const GeneratorList gens = generate(config.spec);
  DiagramStore store(gens.dim);
  const DiagramHandle h = build_diagram(store, gens);
  const std::uint64_t qbound = config.query_bound ? config.query_bound : config.spec.bound;
  const auto queries = random_queries(gens.dim, config.queries, qbound, config.query_seed);

  const auto mdd_answers = batch_contains_serial(store, h.root, queries);
  const auto naive_answers = batch_naive_contains_serial(gens, queries);
  bool agree = mdd_answers == naive_answers;
  if (agree && config.threads > 1) {
    agree = batch_contains_parallel(store, h.root, queries, config.threads) == mdd_answers &&
            batch_naive_contains_parallel(gens, queries, config.threads) == naive_answers;
  }
  if (!agree) {
    for (std::size_t i = 0; i < queries.size(); ++i) {
      if (batch_contains_serial(store, h.root, {&queries[i], 1})[0] !=
          batch_naive_contains_serial(gens, {&queries[i], 1})[0])
        throw std::runtime_error("backends disagree on query " + to_string(queries[i]) +
                                 "; timings withheld");
    }
    throw std::runtime_error("backends disagree; timings withheld");
  }

  auto push = [&](const std::string& backend, int threads, double ns) {
    rows.push_back({backend, threads, gens.dim, gens.gens.size(), config.queries, config.reps,
                    ns, true});
  };
  push("mdd", 1, median_ns_per_call(
                     [&] { batch_contains_serial(store, h.root, queries); }, queries.size(),
                     config.reps));
  push("naive-list", 1,
       median_ns_per_call([&] { batch_naive_contains_serial(gens, queries); }, queries.size(),
                          config.reps));
  if (config.threads > 1) {
    push("mdd", config.threads,
         median_ns_per_call([&] { batch_contains_parallel(store, h.root, queries, config.threads); },
                            queries.size(), config.reps));
    push("naive-list", config.threads,
         median_ns_per_call(
             [&] { batch_naive_contains_parallel(gens, queries, config.threads); },
             queries.size(), config.reps));
  }
  return rows;
}

void write_bench_header(std::ostream& os) {
  os << "backend,threads,n,r,queries,reps,ns_per_query,agreement\n";
}

void write_bench_row(const BenchRow& row, std::ostream& os) {
  os << row.backend << ',' << row.threads << ',' << row.n << ',' << row.r << ',' << row.queries
     << ',' << row.reps << ',' << row.ns_per_query << ',' << (row.agreement ? 1 : 0) << '\n';
}

}  // namespace mddkit
