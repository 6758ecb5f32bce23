#pragma once

#include <vector>

#include "mddkit/polynomial.hpp"

namespace mddkit {

/// Normal form of f modulo basis: no term of the result is divisible by any
/// basis lead monomial. Reducers are found by linear scan, first match wins.
Polynomial plain_reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                        MonomialOrder order, const PrimeField& field);

Polynomial spoly(const Polynomial& f, const Polynomial& g, MonomialOrder order,
                 const PrimeField& field);

/// Reference Buchberger: normal selection (lowest lcm degree first), the
/// coprime-lcm skip, nothing else. Returns the reduced basis: minimal lead
/// terms, tails reduced, monic. Deliberately plain; this is the oracle the
/// signature engine is checked against.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& polys, MonomialOrder order,
                                   const PrimeField& field);

/// Buchberger criterion: every S-polynomial reduces to zero.
bool is_groebner(const std::vector<Polynomial>& basis, MonomialOrder order,
                 const PrimeField& field);

/// Drop redundant lead terms, tail-reduce survivors against each other, make
/// monic. Presentation pass shared by both engines.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, MonomialOrder order,
                                    const PrimeField& field);

}  // namespace mddkit
