#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "mddkit/mdd.hpp"
#include "mddkit/polynomial.hpp"

namespace mddkit {

/// Basis element with its signature monomial. Elements carried over from the
/// previous Gröbner basis are marked from_input and act as unrestricted
/// reducers; their sig field is unused.
struct BasisElement {
  Polynomial poly;
  Monomial sig;
  bool from_input = false;
};

struct SgbStats {
  std::uint64_t membership_tests = 0;   // criteria-diagram queries, one per pair
  std::uint64_t insertions = 0;         // criteria-diagram insertions (zero reductions)
  std::uint64_t koszul_skips = 0;
  std::uint64_t syzygy_skips = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t nonzero_reductions = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t blocked_filter_hits = 0;  // filter said yes, no admissible reducer

  SgbStats& operator+=(const SgbStats& o);
};

struct SgbOptions {
  /// Test hook: regular-reduce every criteria-skipped pair anyway and count
  /// how many fail to reach zero.
  bool force_check_skips = false;
  std::uint64_t* force_checked = nullptr;
  std::uint64_t* force_failures = nullptr;

  /// Test hook: record the signature of each processed pair, in order.
  std::vector<Monomial>* processed_signatures = nullptr;
};

/// Fully reduce u*p, allowing from_input reducers freely and others g only
/// when (t/lm(g))*sig(g) is strictly below the pair signature u*sig(p).
/// A term is final once the reducer-existence diagram rules out divisors or
/// every divisor is signature-blocked.
Polynomial regular_reduce(const Monomial& u, const BasisElement& p,
                          const std::deque<BasisElement>& basis, const DiagramStore& filter_store,
                          std::optional<NodeId> filter_root, MonomialOrder order,
                          const PrimeField& field, SgbStats* stats = nullptr);

/// One incremental step: given a Gröbner basis G (all from_input) and a new
/// polynomial f, return a Gröbner basis of <G, f>. Pairs are processed by
/// minimal signature (FIFO among exact ties); one shared diagram carries the
/// lead monomials of G and the recorded zero-reduction signatures.
std::vector<BasisElement> sgb_step(const std::vector<BasisElement>& G, const Polynomial& f,
                                   MonomialOrder order, const PrimeField& field, SgbStats& stats,
                                   const SgbOptions& options = {});

/// Fold sgb_step over the input polynomials; the output is interreduced for
/// presentation. Aggregates stats across steps.
std::pair<std::vector<Polynomial>, SgbStats> sgb_incremental(
    const std::vector<Polynomial>& polys, MonomialOrder order, const PrimeField& field,
    const SgbOptions& options = {});

}  // namespace mddkit
