#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mddkit/monomial.hpp"

namespace mddkit {

enum class Family {
  random_large_degree,   // exponents i.i.d. uniform on {0..bound}, default bound 30000
  random_small_degree,   // exponents i.i.d. uniform on {0..bound}, default bound 10
  random_squarefree,     // exponents i.i.d. uniform on {0,1}
  random_fixed_total_degree,  // uniform among monomials of total degree exactly bound
  complete_degree,       // every monomial of total degree exactly bound (ignores r, seed)
};

struct FamilySpec {
  Family family = Family::random_small_degree;
  std::size_t n = 1;
  std::size_t r = 1;
  std::uint64_t bound = 0;
  std::uint64_t seed = 0;
};

Family family_from_name(std::string_view name);  // throws on unknown name
std::string_view family_name(Family f);
std::uint64_t default_bound(Family f);

/// Deterministic for a fixed spec: same spec, same bytes. Random exponents
/// are drawn monomial by monomial in natural x1..xn order from a
/// xoshiro256** stream seeded with spec.seed.
GeneratorList generate(const FamilySpec& spec);

/// The minimal generating set of the same ideal: duplicates removed, then
/// any generator divisible by another dropped. Output sorted by total
/// degree, ties broken by storage order. Idempotent.
GeneratorList minimalize(const GeneratorList& gens);

/// C(a, b) with overflow detection.
std::uint64_t binomial_checked(std::uint64_t a, std::uint64_t b);

}  // namespace mddkit
