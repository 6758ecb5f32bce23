#pragma once

#include <iosfwd>
#include <string>

#include "mddkit/monomial.hpp"

namespace mddkit {

/// Monomial list text format, shared by all tools:
///   - one monomial per line: n whitespace-separated decimal exponents in
///     natural x1..xn order;
///   - '#' starts a comment line;
///   - the first non-comment line may be "n <dim>" to fix the dimension,
///     otherwise the first monomial line sets it.
GeneratorList load_monomials(std::istream& is);
GeneratorList load_monomials_file(const std::string& path);

void save_monomials(const GeneratorList& gens, std::ostream& os);

}  // namespace mddkit
