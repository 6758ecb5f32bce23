#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mddkit/field.hpp"
#include "mddkit/monomial.hpp"

namespace mddkit {

struct Term {
  std::uint32_t coeff;  // in [1, p)
  Monomial mono;
  bool operator==(const Term&) const = default;
};

/// Sparse GF(p) polynomial. Terms are kept strictly decreasing in the active
/// monomial order with no zero coefficients; the zero polynomial has no
/// terms. Sortedness is a construction invariant: build polynomials through
/// normalize_terms or the arithmetic helpers below.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  const Monomial& lead_monomial() const { return terms.front().mono; }
  bool operator==(const Polynomial&) const = default;
};

/// Sort descending, merge equal monomials, drop zeros.
Polynomial normalize_terms(std::vector<Term> terms, MonomialOrder order, const PrimeField& field);

Polynomial monomial_multiple(const Polynomial& f, const Monomial& m);
Polynomial scale(const Polynomial& f, std::uint32_t c, const PrimeField& field);
Polynomial make_monic(Polynomial f, const PrimeField& field);

/// f - c * m * g, merged in one pass.
Polynomial subtract_multiple(const Polynomial& f, std::uint32_t c, const Monomial& m,
                             const Polynomial& g, MonomialOrder order, const PrimeField& field);

std::string to_string(const Polynomial& f, const PrimeField& field);

/// Polynomial system text format:
///   p <modulus>
///   n <dim>
///   order <grevlex|lex>
/// then one polynomial per line, terms like "x1^2*x2 + 3*x3 - 1" joined by
/// '+'/'-' ('*' between factors, '^' for exponents, variables x1..xn).
/// Whitespace-insensitive; '#' lines are comments. Errors carry line/column.
struct PolynomialSystem {
  std::uint32_t modulus = 65521;
  std::size_t dim = 0;
  MonomialOrder order = MonomialOrder::grevlex;
  std::vector<Polynomial> polys;
};

PolynomialSystem parse_system(std::istream& is);
PolynomialSystem parse_system_file(const std::string& path);
void print_system(const PolynomialSystem& sys, std::ostream& os);

/// Parse one polynomial line (used by parse_system; exposed for tests).
Polynomial parse_polynomial(const std::string& line, std::size_t line_no, std::size_t dim,
                            MonomialOrder order, const PrimeField& field);

}  // namespace mddkit
