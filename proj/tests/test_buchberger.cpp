#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mddkit/buchberger.hpp"
#include "mddkit/rng.hpp"
#include "support/systems.hpp"

using namespace mddkit;

namespace {

Monomial nat(std::initializer_list<std::uint64_t> exps) {
  std::vector<std::uint64_t> v(exps);
  return Monomial::from_natural(v);
}

Polynomial poly(std::initializer_list<std::pair<std::uint32_t, Monomial>> terms,
                MonomialOrder order, const PrimeField& field) {
  std::vector<Term> ts;
  for (const auto& [c, m] : terms) ts.push_back({c, m});
  return normalize_terms(std::move(ts), order, field);
}

std::vector<Monomial> leads(const std::vector<Polynomial>& basis) {
  std::vector<Monomial> out;
  for (const auto& f : basis) out.push_back(f.lead_monomial());
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return a.storage() < b.storage(); });
  return out;
}

}  // namespace

TEST_CASE("plain_reduce") {
  const PrimeField f7(7);
  const auto order = MonomialOrder::grevlex;
  const auto xy = poly({{1, nat({1, 0})}, {1, nat({0, 1})}}, order, f7);  // x + y
  const auto y = poly({{1, nat({0, 1})}}, order, f7);
  const auto r = plain_reduce(xy, {y}, order, f7);
  REQUIRE(r.terms.size() == 1);
  CHECK(r.lead_monomial() == nat({1, 0}));

  CHECK(plain_reduce(y, {y}, order, f7).is_zero());

  // no term of a normal form is divisible by a basis lead
  const auto g = poly({{1, nat({2, 0})}, {3, nat({0, 2})}}, order, f7);
  const auto nf = plain_reduce(poly({{1, nat({3, 1})}, {1, nat({1, 0})}}, order, f7), {g}, order, f7);
  for (const auto& t : nf.terms) CHECK_FALSE(divides(g.lead_monomial(), t.mono));
}

TEST_CASE("normal forms do not depend on reducer choice over a GB") {
  const PrimeField field(65521);
  const auto order = MonomialOrder::grevlex;
  auto gb = buchberger(testing::cyclic_system(4, order, field), order, field);
  Xoshiro256 rng(51);
  const auto probe = testing::random_dense_system(4, 2, order, field, 99)[0];
  const auto reference = plain_reduce(probe, gb, order, field);
  for (int iter = 0; iter < 20; ++iter) {
    for (std::size_t i = gb.size(); i > 1; --i) std::swap(gb[i - 1], gb[rng.below(i)]);
    CHECK(plain_reduce(probe, gb, order, field) == reference);
  }
}

TEST_CASE("buchberger on simple systems") {
  const PrimeField f7(7);
  const auto order = MonomialOrder::grevlex;

  const auto x = poly({{1, nat({1, 0})}}, order, f7);
  const auto y = poly({{1, nat({0, 1})}}, order, f7);
  const auto gb = buchberger({x, y}, order, f7);
  CHECK(leads(gb) == leads({x, y}));

  const auto f = poly({{1, nat({2, 0})}, {6, nat({0, 1})}}, order, f7);   // x^2 - y
  const auto g = poly({{1, nat({1, 1})}, {6, nat({0, 0})}}, order, f7);   // xy - 1
  CHECK_FALSE(is_groebner({f, g}, order, f7));
  const auto gb2 = buchberger({f, g}, order, f7);
  CHECK(is_groebner(gb2, order, f7));
  CHECK(gb2.size() > 2);

  const auto principal = buchberger({scale(f, 3, f7)}, order, f7);
  REQUIRE(principal.size() == 1);
  CHECK(principal[0].lead().coeff == 1);
  CHECK(principal[0] == f);

  CHECK_THROWS_AS((void)buchberger({}, order, f7), std::invalid_argument);
  CHECK_THROWS_AS((void)buchberger({Polynomial{}}, order, f7), std::invalid_argument);
}

TEST_CASE("is_groebner accepts single elements and oracle output") {
  const PrimeField field(65521);
  const auto order = MonomialOrder::grevlex;
  const auto sys = testing::cyclic_system(4, order, field);
  CHECK(is_groebner({sys[0]}, order, field));
  const auto gb = buchberger(sys, order, field);
  CHECK(is_groebner(gb, order, field));
}

TEST_CASE("idempotence up to lead ideal") {
  const PrimeField field(65521);
  const auto order = MonomialOrder::grevlex;
  const auto sys = testing::random_dense_system(3, 2, order, field, 4);
  const auto gb = buchberger(sys, order, field);
  const auto gb2 = buchberger(gb, order, field);
  CHECK(leads(gb) == leads(gb2));
}
