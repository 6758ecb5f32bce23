#include "mddkit/sgb.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

#include "mddkit/buchberger.hpp"

namespace mddkit {

SgbStats& SgbStats::operator+=(const SgbStats& o) {
  membership_tests += o.membership_tests;
  insertions += o.insertions;
  koszul_skips += o.koszul_skips;
  syzygy_skips += o.syzygy_skips;
  zero_reductions += o.zero_reductions;
  nonzero_reductions += o.nonzero_reductions;
  pairs_processed += o.pairs_processed;
  blocked_filter_hits += o.blocked_filter_hits;
  return *this;
}

namespace {

#ifndef NDEBUG
bool some_lead_divides(const std::deque<BasisElement>& basis, const Monomial& m) {
  return std::any_of(basis.begin(), basis.end(), [&](const BasisElement& g) {
    return divides(g.poly.lead_monomial(), m);
  });
}
#endif

struct PendingPair {
  Monomial u;
  const BasisElement* elem;
  Monomial sig;  // mul(u, elem->sig)
  std::uint64_t seq;
};

}  // namespace

Polynomial regular_reduce(const Monomial& u, const BasisElement& p,
                          const std::deque<BasisElement>& basis, const DiagramStore& filter_store,
                          std::optional<NodeId> filter_root, MonomialOrder order,
                          const PrimeField& field, SgbStats* stats) {
  const Monomial pair_sig = mul(u, p.sig);
  Polynomial rest = monomial_multiple(p.poly, u);
  std::vector<Term> done;
  while (!rest.is_zero()) {
    const Term& t = rest.lead();
    const BasisElement* reducer = nullptr;
    Monomial cof;
    if (filter_store.contains(filter_root, t.mono)) {
      for (const BasisElement& g : basis) {
        if (!divides(g.poly.lead_monomial(), t.mono)) continue;
        Monomial c = quotient(t.mono, g.poly.lead_monomial());
        if (g.from_input ||
            compare(order, mul(c, g.sig), pair_sig) == std::strong_ordering::less) {
          reducer = &g;
          cof = std::move(c);
          break;
        }
      }
      if (reducer == nullptr && stats) ++stats->blocked_filter_hits;
    } else {
      // filter says no divisor exists; cross-check against the linear scan
      assert(!some_lead_divides(basis, t.mono) && "reducer filter out of sync");
    }
    if (reducer == nullptr) {
      done.push_back(t);
      rest.terms.erase(rest.terms.begin());
      continue;
    }
    const std::uint32_t c = field.div(t.coeff, reducer->poly.lead().coeff);
    rest = subtract_multiple(rest, c, cof, reducer->poly, order, field);
  }
  Polynomial out;
  out.terms = std::move(done);
  return out;
}

std::vector<BasisElement> sgb_step(const std::vector<BasisElement>& G, const Polynomial& f,
                                   MonomialOrder order, const PrimeField& field, SgbStats& stats,
                                   const SgbOptions& options) {
  if (f.is_zero()) throw std::invalid_argument("sgb_step: zero polynomial");
  const std::size_t dim = f.lead_monomial().dim();
  for (const BasisElement& g : G)
    if (g.poly.is_zero() || g.poly.lead_monomial().dim() != dim)
      throw std::invalid_argument("sgb_step: bad basis element");

  std::deque<BasisElement> basis(G.begin(), G.end());

  // one diagram for both criteria: seeded with lm(G), grown with
  // zero-reduction signatures; the seed-time root stays valid and is used to
  // classify skips (that query is bookkeeping, not counted)
  DiagramStore criteria_store(dim);
  std::optional<NodeId> criteria;
  for (const BasisElement& g : G)
    criteria = criteria_store.insert(criteria, g.poly.lead_monomial());
  const std::optional<NodeId> koszul_seed = criteria;

  // reducer-existence pre-filter over all current lead monomials
  DiagramStore filter_store(dim);
  std::optional<NodeId> filter;
  for (const BasisElement& g : G)
    filter = filter_store.insert(filter, g.poly.lead_monomial());

  auto later = [order](const PendingPair& a, const PendingPair& b) {
    const auto c = compare(order, a.sig, b.sig);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    return a.seq > b.seq;
  };
  std::priority_queue<PendingPair, std::vector<PendingPair>, decltype(later)> pending(later);
  std::uint64_t seq = 0;

  BasisElement start{f, Monomial(dim), false};
  pending.push({Monomial(dim), &start, Monomial(dim), seq++});

  while (!pending.empty()) {
    PendingPair top = pending.top();
    pending.pop();
    while (!pending.empty() && pending.top().sig == top.sig) pending.pop();
    ++stats.pairs_processed;
    if (options.processed_signatures) options.processed_signatures->push_back(top.sig);

    ++stats.membership_tests;
    if (criteria_store.contains(criteria, top.sig)) {
      if (criteria_store.contains(koszul_seed, top.sig))
        ++stats.koszul_skips;
      else
        ++stats.syzygy_skips;
      if (options.force_check_skips) {
        const Polynomial q =
            regular_reduce(top.u, *top.elem, basis, filter_store, filter, order, field);
        if (options.force_checked) ++*options.force_checked;
        if (!q.is_zero() && options.force_failures) ++*options.force_failures;
      }
      continue;
    }

    const Polynomial q =
        regular_reduce(top.u, *top.elem, basis, filter_store, filter, order, field, &stats);
    if (q.is_zero()) {
      ++stats.zero_reductions;
      criteria = criteria_store.insert(criteria, top.sig);
      ++stats.insertions;
      continue;
    }
    ++stats.nonzero_reductions;

    basis.push_back({make_monic(q, field), top.sig, false});
    const BasisElement* appended = &basis.back();
    // Schedule the S-pair of the new element against every earlier one at
    // the larger of its two side signatures; the smaller side's reducer
    // would be signature-blocked. Equal sides form a singular pair and are
    // dropped: both sides regularly reduce to the same polynomial.
    for (std::size_t si = 0; si + 1 < basis.size(); ++si) {
      const BasisElement& s = basis[si];
      const Monomial gamma = lcm(appended->poly.lead_monomial(), s.poly.lead_monomial());
      const Monomial v = quotient(gamma, appended->poly.lead_monomial());
      if (s.from_input) {
        pending.push({v, appended, mul(v, appended->sig), seq++});
        continue;
      }
      const Monomial w = quotient(gamma, s.poly.lead_monomial());
      Monomial new_side = mul(v, appended->sig);
      Monomial old_side = mul(w, s.sig);
      const auto side = compare(order, new_side, old_side);
      if (side == std::strong_ordering::equal) continue;
      if (side == std::strong_ordering::greater)
        pending.push({v, appended, std::move(new_side), seq++});
      else
        pending.push({w, &s, std::move(old_side), seq++});
    }
    filter = filter_store.insert(filter, appended->poly.lead_monomial());
  }

  return {basis.begin(), basis.end()};
}

std::pair<std::vector<Polynomial>, SgbStats> sgb_incremental(
    const std::vector<Polynomial>& polys, MonomialOrder order, const PrimeField& field,
    const SgbOptions& options) {
  if (polys.empty()) throw std::invalid_argument("sgb_incremental: empty input");
  for (const Polynomial& f : polys)
    if (f.is_zero()) throw std::invalid_argument("sgb_incremental: zero input polynomial");

  SgbStats total;
  std::vector<BasisElement> G;
  for (const Polynomial& f : polys) {
    SgbStats step;
    auto G_new = sgb_step(G, f, order, field, step, options);
    total += step;
    G.clear();
    G.reserve(G_new.size());
    for (auto& g : G_new) G.push_back({std::move(g.poly), Monomial(), true});
  }

  std::vector<Polynomial> out;
  out.reserve(G.size());
  for (auto& g : G) out.push_back(std::move(g.poly));
  return {interreduce(std::move(out), order, field), total};
}

}  // namespace mddkit
