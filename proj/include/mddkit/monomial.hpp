#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mddkit {

/// Exponent vector of a monomial in n variables.
///
/// Storage is in tree-level order: coordinate 0 holds the exponent of x_n,
/// the last coordinate holds the exponent of x_1. Level k of an ideal tree
/// or diagram branches on coordinate k-1. All file formats and printing use
/// the natural x1..xn order; conversion happens at the I/O boundary.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t dim) : exps_(dim, 0) {}

  static Monomial from_storage(std::vector<std::uint64_t> exps);
  static Monomial from_natural(std::span<const std::uint64_t> exps);

  std::size_t dim() const { return exps_.size(); }
  std::uint64_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint64_t>& storage() const { return exps_; }

  /// Exponents in x1..xn order.
  std::vector<std::uint64_t> natural_exponents() const;

  bool is_one() const;
  std::uint64_t total_degree() const;  // throws std::overflow_error on wrap

  bool operator==(const Monomial&) const = default;

private:
  std::vector<std::uint64_t> exps_;
};

enum class MonomialOrder { grevlex, lex };

/// Total order on equal-dimension monomials. grevlex compares total degree,
/// then breaks ties reverse-lexicographically; lex compares the x1 exponent
/// first. Both are multiplicative and have 1 as minimum.
std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);       // throws on overflow
Monomial quotient(const Monomial& a, const Monomial& b);  // requires divides(b, a)

/// Cofactor set { lcm(p_lead, s)/p_lead : s in lead_set }, deduplicated.
/// The result is sorted by storage order, so it is deterministic.
std::vector<Monomial> crit(std::span<const Monomial> lead_set, const Monomial& p_lead);

/// Render as e.g. "x1^2*x3"; the unit monomial prints as "1".
std::string to_string(const Monomial& m);

/// A list of same-dimension monomials, the input of ideal constructions.
struct GeneratorList {
  std::size_t dim = 0;
  std::vector<Monomial> gens;
};

}  // namespace mddkit
