#include "mddkit/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "mddkit/rng.hpp"

namespace mddkit {

namespace {

std::uint64_t compositions_count(std::size_t parts, std::uint64_t total) {
  // number of ways to write total as an ordered sum of `parts` nonnegatives
  return binomial_checked(total + parts - 1, parts - 1);
}

/// Decode index -> composition of `total` into `parts` parts, ordered by
/// first coordinate ascending. Bijective, so a uniform index gives a
/// uniform monomial of the given total degree.
std::vector<std::uint64_t> decode_composition(std::uint64_t index, std::size_t parts,
                                              std::uint64_t total) {
  std::vector<std::uint64_t> out(parts);
  std::uint64_t remaining = total;
  for (std::size_t pos = 0; pos + 1 < parts; ++pos) {
    std::uint64_t e = 0;
    for (;; ++e) {
      const std::uint64_t block = compositions_count(parts - pos - 1, remaining - e);
      if (index < block) break;
      index -= block;
    }
    out[pos] = e;
    remaining -= e;
  }
  out[parts - 1] = remaining;
  return out;
}

void enumerate_complete(std::size_t parts, std::uint64_t total,
                        std::vector<std::uint64_t>& prefix, std::vector<Monomial>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(Monomial::from_natural(prefix));
    prefix.pop_back();
    return;
  }
  for (std::uint64_t e = 0; e <= total; ++e) {
    prefix.push_back(e);
    enumerate_complete(parts - 1, total - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Family family_from_name(std::string_view name) {
  if (name == "random-large-degree") return Family::random_large_degree;
  if (name == "random-small-degree") return Family::random_small_degree;
  if (name == "random-squarefree") return Family::random_squarefree;
  if (name == "random-fixed-total-degree") return Family::random_fixed_total_degree;
  if (name == "complete-degree") return Family::complete_degree;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::random_large_degree: return "random-large-degree";
    case Family::random_small_degree: return "random-small-degree";
    case Family::random_squarefree: return "random-squarefree";
    case Family::random_fixed_total_degree: return "random-fixed-total-degree";
    case Family::complete_degree: return "complete-degree";
  }
  throw std::invalid_argument("unknown family");
}

std::uint64_t default_bound(Family f) {
  switch (f) {
    case Family::random_large_degree: return 30000;
    case Family::random_small_degree: return 10;
    case Family::random_squarefree: return 1;
    case Family::random_fixed_total_degree: return 12;
    case Family::complete_degree: return 2;
  }
  throw std::invalid_argument("unknown family");
}

std::uint64_t binomial_checked(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    acc = acc * (a - b + i) / i;
    if (acc > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

GeneratorList generate(const FamilySpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("family needs n >= 1");
  GeneratorList out;
  out.dim = spec.n;

  if (spec.family == Family::complete_degree) {
    std::vector<std::uint64_t> prefix;
    enumerate_complete(spec.n, spec.bound, prefix, out.gens);
    return out;
  }

  if (spec.r == 0) throw std::invalid_argument("family needs r >= 1");
  Xoshiro256 rng(spec.seed);
  out.gens.reserve(spec.r);
  switch (spec.family) {
    case Family::random_large_degree:
    case Family::random_small_degree:
    case Family::random_squarefree: {
      // squarefree always draws from {0,1}
      const std::uint64_t bound = spec.family == Family::random_squarefree ? 1 : spec.bound;
      for (std::size_t i = 0; i < spec.r; ++i) {
        std::vector<std::uint64_t> nat(spec.n);
        for (auto& e : nat) e = rng.below(bound + 1);
        out.gens.push_back(Monomial::from_natural(nat));
      }
      break;
    }
    case Family::random_fixed_total_degree: {
      const std::uint64_t count = compositions_count(spec.n, spec.bound);
      for (std::size_t i = 0; i < spec.r; ++i) {
        const auto nat = decode_composition(rng.below(count), spec.n, spec.bound);
        out.gens.push_back(Monomial::from_natural(nat));
      }
      break;
    }
    default:
      throw std::invalid_argument("unknown family");
  }
  return out;
}

GeneratorList minimalize(const GeneratorList& gens) {
  std::vector<Monomial> sorted = gens.gens;
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    return da != db ? da < db : a.storage() < b.storage();
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  GeneratorList out;
  out.dim = gens.dim;
  for (const Monomial& m : sorted) {
    // a proper divisor has strictly smaller degree, so it is already kept
    bool redundant = std::any_of(out.gens.begin(), out.gens.end(),
                                 [&](const Monomial& g) { return divides(g, m); });
    if (!redundant) out.gens.push_back(m);
  }
  return out;
}

}  // namespace mddkit
