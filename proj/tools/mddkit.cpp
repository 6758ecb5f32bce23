#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mddkit/batch.hpp"
#include "mddkit/buchberger.hpp"
#include "mddkit/generators.hpp"
#include "mddkit/mdd.hpp"
#include "mddkit/monomial_io.hpp"
#include "mddkit/parse_error.hpp"
#include "mddkit/polynomial.hpp"
#include "mddkit/report.hpp"
#include "mddkit/sgb.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

struct OutputFile {
  std::ofstream file;
  std::ostream& stream(const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
  }
};

mddkit::FamilySpec parse_spec_string(const std::string& text, std::uint64_t default_seed) {
  // family:n:r:bound[:seed]
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 4 || parts.size() > 5)
    throw std::runtime_error("bad spec '" + text + "', expected family:n:r:bound[:seed]");
  mddkit::FamilySpec spec;
  spec.family = mddkit::family_from_name(parts[0]);
  spec.n = std::stoull(parts[1]);
  spec.r = std::stoull(parts[2]);
  spec.bound = std::stoull(parts[3]);
  spec.seed = parts.size() == 5 ? std::stoull(parts[4]) : default_seed;
  return spec;
}

std::string spec_label(const mddkit::FamilySpec& spec) {
  std::ostringstream os;
  os << mddkit::family_name(spec.family) << ":n=" << spec.n;
  if (spec.family != mddkit::Family::complete_degree) os << ":r=" << spec.r;
  os << ":b=" << spec.bound;
  if (spec.family != mddkit::Family::complete_degree) os << ":s=" << spec.seed;
  return os.str();
}

std::vector<mddkit::Monomial> lead_monomials_sorted(const std::vector<mddkit::Polynomial>& basis) {
  std::vector<mddkit::Monomial> out;
  out.reserve(basis.size());
  for (const auto& f : basis) out.push_back(f.lead_monomial());
  std::sort(out.begin(), out.end(),
            [](const mddkit::Monomial& a, const mddkit::Monomial& b) {
              return a.storage() < b.storage();
            });
  return out;
}

nlohmann::json stats_json(const mddkit::SgbStats& s) {
  return nlohmann::json{{"membership_tests", s.membership_tests},
                        {"insertions", s.insertions},
                        {"koszul_skips", s.koszul_skips},
                        {"syzygy_skips", s.syzygy_skips},
                        {"zero_reductions", s.zero_reductions},
                        {"nonzero_reductions", s.nonzero_reductions},
                        {"pairs_processed", s.pairs_processed},
                        {"blocked_filter_hits", s.blocked_filter_hits}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monomial divisibility diagrams: size reports, membership benchmarks, "
               "DOT export, Groebner bases"};
  app.require_subcommand(1);

  std::uint64_t env_seed = 0;
  if (const char* s = std::getenv("MDDKIT_SEED")) env_seed = std::strtoull(s, nullptr, 10);

  // --- size-report ---
  auto* size_cmd = app.add_subcommand("size-report", "CSV size report per ideal");
  std::vector<std::string> size_specs;
  std::vector<std::string> size_inputs;
  std::string size_family;
  std::size_t size_n = 0, size_r = 0;
  std::uint64_t size_bound = 0, size_seed = env_seed;
  bool size_parallel = false;
  std::string size_out;
  size_cmd->add_option("--spec", size_specs, "family:n:r:bound[:seed], repeatable");
  size_cmd->add_option("--input", size_inputs, "monomial list file, repeatable");
  size_cmd->add_option("--family", size_family, "single-spec family name");
  size_cmd->add_option("--n", size_n, "single-spec dimension");
  size_cmd->add_option("--r", size_r, "single-spec generator count");
  size_cmd->add_option("--bound", size_bound, "single-spec exponent bound / total degree");
  size_cmd->add_option("--seed", size_seed, "single-spec seed")->envname("MDDKIT_SEED");
  size_cmd->add_flag("--par", size_parallel, "measure rows in parallel (one store per row)");
  size_cmd->add_option("--out", size_out, "output file (default stdout)");

  // --- bench-membership ---
  auto* bench_cmd = app.add_subcommand("bench-membership", "time mdd vs naive-list membership");
  std::string bench_family = "random-small-degree";
  std::size_t bench_n = 10, bench_r = 1000, bench_queries = 10000;
  std::uint64_t bench_bound = 10, bench_seed = env_seed, bench_query_bound = 0;
  int bench_reps = 5, bench_threads = 1;
  std::string bench_out;
  bench_cmd->add_option("--family", bench_family, "family name");
  bench_cmd->add_option("--n", bench_n, "dimension");
  bench_cmd->add_option("--r", bench_r, "generator count");
  bench_cmd->add_option("--bound", bench_bound, "exponent bound / total degree");
  bench_cmd->add_option("--seed", bench_seed, "seed")->envname("MDDKIT_SEED");
  bench_cmd->add_option("--queries", bench_queries, "number of random queries");
  bench_cmd->add_option("--reps", bench_reps, "timing repetitions (median reported)");
  bench_cmd->add_option("--query-bound", bench_query_bound,
                        "exponent bound for queries (default: family bound)");
  bench_cmd->add_option("--threads", bench_threads, "also time OpenMP kernels with this many threads");
  bench_cmd->add_option("--out", bench_out, "output file (default stdout)");

  // --- dot ---
  auto* dot_cmd = app.add_subcommand("dot", "render the diagram of a monomial file");
  std::string dot_input, dot_out;
  bool dot_seq = false;
  dot_cmd->add_option("--input", dot_input, "monomial list file")->required();
  dot_cmd->add_flag("--seq", dot_seq, "emit the sequential word form instead of DOT");
  dot_cmd->add_option("--out", dot_out, "output file (default stdout)");

  // --- groebner ---
  auto* gb_cmd = app.add_subcommand("groebner", "compute a Groebner basis of a system file");
  std::string gb_input, gb_engine = "sgb", gb_order_flag, gb_out;
  std::uint32_t gb_char = 0;
  bool gb_verify = false, gb_stats = false;
  gb_cmd->add_option("--input", gb_input, "polynomial system file")->required();
  gb_cmd->add_option("--engine", gb_engine, "sgb or buchberger")
      ->check(CLI::IsMember({"sgb", "buchberger"}));
  gb_cmd->add_option("--char", gb_char, "override field characteristic");
  gb_cmd->add_option("--order", gb_order_flag, "override monomial order")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  gb_cmd->add_flag("--verify", gb_verify, "cross-check against the other engine");
  gb_cmd->add_flag("--stats", gb_stats, "print JSON stats after the basis (sgb only)");
  gb_cmd->add_option("--out", gb_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(size_cmd)) {
      std::vector<std::pair<std::string, mddkit::GeneratorList>> ideals;
      for (const auto& s : size_specs) {
        const auto spec = parse_spec_string(s, size_seed);
        ideals.emplace_back(spec_label(spec), mddkit::generate(spec));
      }
      if (!size_family.empty()) {
        mddkit::FamilySpec spec;
        spec.family = mddkit::family_from_name(size_family);
        spec.n = size_n;
        spec.r = size_r;
        spec.bound = size_bound ? size_bound : mddkit::default_bound(spec.family);
        spec.seed = size_seed;
        ideals.emplace_back(spec_label(spec), mddkit::generate(spec));
      }
      for (const auto& path : size_inputs)
        ideals.emplace_back(path, mddkit::load_monomials_file(path));

      std::vector<mddkit::SizeReportRow> rows(ideals.size());
      if (size_parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(ideals.size()); ++i)
          rows[static_cast<std::size_t>(i)] =
              mddkit::measure_ideal(ideals[static_cast<std::size_t>(i)].first,
                                    ideals[static_cast<std::size_t>(i)].second);
      } else {
        for (std::size_t i = 0; i < ideals.size(); ++i)
          rows[i] = mddkit::measure_ideal(ideals[i].first, ideals[i].second);
      }
      OutputFile out;
      auto& os = out.stream(size_out);
      mddkit::write_size_report_header(os);
      for (const auto& row : rows) mddkit::write_size_report_row(row, os);
      return kExitOk;
    }

    if (app.got_subcommand(bench_cmd)) {
      mddkit::BenchConfig config;
      config.spec.family = mddkit::family_from_name(bench_family);
      config.spec.n = bench_n;
      config.spec.r = bench_r;
      config.spec.bound = bench_bound;
      config.spec.seed = bench_seed;
      config.queries = bench_queries;
      config.reps = bench_reps;
      config.query_bound = bench_query_bound;
      config.threads = bench_threads;
      std::vector<mddkit::BenchRow> rows;
      try {
        rows = mddkit::bench_membership(config);
      } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
      }
      OutputFile out;
      auto& os = out.stream(bench_out);
      mddkit::write_bench_header(os);
      for (const auto& row : rows) mddkit::write_bench_row(row, os);
      return kExitOk;
    }

    if (app.got_subcommand(dot_cmd)) {
      const auto gens = mddkit::load_monomials_file(dot_input);
      if (gens.gens.empty()) throw std::runtime_error("input describes the empty ideal");
      mddkit::DiagramStore store(gens.dim);
      const auto handle = mddkit::build_diagram(store, gens);
      OutputFile out;
      auto& os = out.stream(dot_out);
      if (dot_seq)
        store.dump_sequential(*handle.root, os);
      else
        os << store.to_dot(*handle.root);
      return kExitOk;
    }

    if (app.got_subcommand(gb_cmd)) {
      auto sys = mddkit::parse_system_file(gb_input);
      if (gb_char != 0) sys.modulus = gb_char;
      if (gb_order_flag == "grevlex") sys.order = mddkit::MonomialOrder::grevlex;
      if (gb_order_flag == "lex") sys.order = mddkit::MonomialOrder::lex;
      if (gb_stats && gb_engine != "sgb") {
        std::cerr << "error: --stats requires --engine sgb\n";
        return kExitUsage;
      }
      const mddkit::PrimeField field(sys.modulus);

      std::vector<mddkit::Polynomial> basis;
      mddkit::SgbStats stats;
      if (gb_engine == "sgb") {
        auto [gb, s] = mddkit::sgb_incremental(sys.polys, sys.order, field);
        basis = std::move(gb);
        stats = s;
      } else {
        basis = mddkit::buchberger(sys.polys, sys.order, field);
      }

      if (gb_verify) {
        std::vector<mddkit::Polynomial> other;
        if (gb_engine == "sgb") {
          other = mddkit::buchberger(sys.polys, sys.order, field);
        } else {
          other = mddkit::sgb_incremental(sys.polys, sys.order, field).first;
        }
        const bool self_ok = mddkit::is_groebner(basis, sys.order, field);
        const bool leads_ok =
            lead_monomials_sorted(basis) == lead_monomials_sorted(other);
        if (!self_ok || !leads_ok) {
          std::cerr << "verification failed: " << (self_ok ? "" : "Buchberger criterion; ")
                    << (leads_ok ? "" : "lead ideals differ") << '\n';
          return kExitVerification;
        }
      }

      mddkit::PolynomialSystem out_sys{sys.modulus, sys.dim, sys.order, basis};
      OutputFile out;
      auto& os = out.stream(gb_out);
      mddkit::print_system(out_sys, os);
      if (gb_stats) os << stats_json(stats).dump(2) << '\n';
      return kExitOk;
    }
  } catch (const mddkit::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
