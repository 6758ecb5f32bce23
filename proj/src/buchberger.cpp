#include "mddkit/buchberger.hpp"

#include <algorithm>
#include <stdexcept>

namespace mddkit {

Polynomial plain_reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                        MonomialOrder order, const PrimeField& field) {
  for (const Polynomial& g : basis)
    if (g.is_zero()) throw std::invalid_argument("plain_reduce: zero basis element");

  Polynomial rest = f;
  std::vector<Term> done;
  while (!rest.is_zero()) {
    const Term& t = rest.lead();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : basis) {
      if (divides(g.lead_monomial(), t.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      done.push_back(t);
      rest.terms.erase(rest.terms.begin());
      continue;
    }
    const std::uint32_t c = field.div(t.coeff, reducer->lead().coeff);
    const Monomial cof = quotient(t.mono, reducer->lead_monomial());
    rest = subtract_multiple(rest, c, cof, *reducer, order, field);
  }
  Polynomial out;
  out.terms = std::move(done);
  return out;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, MonomialOrder order,
                 const PrimeField& field) {
  const Monomial gamma = lcm(f.lead_monomial(), g.lead_monomial());
  const Monomial uf = quotient(gamma, f.lead_monomial());
  const Monomial ug = quotient(gamma, g.lead_monomial());
  const Polynomial lhs = scale(monomial_multiple(f, uf), field.inv(f.lead().coeff), field);
  return subtract_multiple(lhs, field.inv(g.lead().coeff), ug, g, order, field);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& polys, MonomialOrder order,
                                   const PrimeField& field) {
  if (polys.empty()) throw std::invalid_argument("buchberger: empty input");
  std::vector<Polynomial> basis;
  for (const Polynomial& f : polys) {
    if (f.is_zero()) throw std::invalid_argument("buchberger: zero input polynomial");
    basis.push_back(make_monic(f, field));
  }

  struct Pair {
    std::uint64_t lcm_degree;
    std::size_t i, j;
  };
  auto pair_after = [](const Pair& a, const Pair& b) {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree > b.lcm_degree;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  };
  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial l = lcm(basis[i].lead_monomial(), basis[j].lead_monomial());
      queue.push_back({l.total_degree(), i, j});
      std::push_heap(queue.begin(), queue.end(), pair_after);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    std::pop_heap(queue.begin(), queue.end(), pair_after);
    const Pair p = queue.back();
    queue.pop_back();
    const Monomial& li = basis[p.i].lead_monomial();
    const Monomial& lj = basis[p.j].lead_monomial();
    if (lcm(li, lj) == mul(li, lj)) continue;  // coprime leads
    const Polynomial r =
        plain_reduce(spoly(basis[p.i], basis[p.j], order, field), basis, order, field);
    if (!r.is_zero()) {
      basis.push_back(make_monic(r, field));
      push_pairs(basis.size() - 1);
    }
  }
  return interreduce(std::move(basis), order, field);
}

bool is_groebner(const std::vector<Polynomial>& basis, MonomialOrder order,
                 const PrimeField& field) {
  for (const Polynomial& g : basis)
    if (g.is_zero()) throw std::invalid_argument("is_groebner: zero basis element");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Polynomial r =
          plain_reduce(spoly(basis[i], basis[j], order, field), basis, order, field);
      if (!r.is_zero()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, MonomialOrder order,
                                    const PrimeField& field) {
  // keep one element per minimal lead monomial
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(order, a.lead_monomial(), b.lead_monomial()) == std::strong_ordering::less;
  });
  std::vector<Polynomial> kept;
  for (auto& f : basis) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Polynomial& g) {
          return divides(g.lead_monomial(), f.lead_monomial());
        });
    if (!redundant) kept.push_back(std::move(f));
  }
  // tail-reduce each against the others
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    out.push_back(make_monic(plain_reduce(kept[i], others, order, field), field));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(order, a.lead_monomial(), b.lead_monomial()) == std::strong_ordering::less;
  });
  return out;
}

}  // namespace mddkit
