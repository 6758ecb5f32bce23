#include "mddkit/monomial_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "mddkit/parse_error.hpp"

namespace mddkit {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line_no, std::size_t col) {
  std::uint64_t v = 0;
  if (tok.empty()) throw ParseError(line_no, col, "expected a number");
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw ParseError(line_no, col, "expected a nonnegative decimal exponent, got '" + tok + "'");
    const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (v > (UINT64_MAX - d) / 10) throw ParseError(line_no, col, "exponent out of range");
    v = v * 10 + d;
  }
  return v;
}

}  // namespace

GeneratorList load_monomials(std::istream& is) {
  GeneratorList out;
  std::optional<std::size_t> dim;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_line = true;
  while (std::getline(is, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);

    if (first_data_line && toks.size() == 2 && toks[0] == "n") {
      dim = static_cast<std::size_t>(parse_u64(toks[1], line_no, 1));
      if (*dim == 0) throw ParseError(line_no, 1, "dimension must be >= 1");
      first_data_line = false;
      continue;
    }
    first_data_line = false;

    if (!dim) {
      dim = toks.size();
      if (*dim == 0) throw ParseError(line_no, 1, "empty monomial line");
    }
    if (toks.size() != *dim)
      throw ParseError(line_no, 1,
                       "expected " + std::to_string(*dim) + " exponents, got " +
                           std::to_string(toks.size()));
    std::vector<std::uint64_t> nat(*dim);
    for (std::size_t i = 0; i < *dim; ++i) nat[i] = parse_u64(toks[i], line_no, i + 1);
    out.gens.push_back(Monomial::from_natural(nat));
  }
  if (!dim) throw ParseError(line_no + 1, 1, "no monomials and no dimension header");
  out.dim = *dim;
  return out;
}

GeneratorList load_monomials_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return load_monomials(f);
}

void save_monomials(const GeneratorList& gens, std::ostream& os) {
  os << "n " << gens.dim << '\n';
  for (const Monomial& m : gens.gens) {
    const auto nat = m.natural_exponents();
    for (std::size_t i = 0; i < nat.size(); ++i) os << (i ? " " : "") << nat[i];
    os << '\n';
  }
}

}  // namespace mddkit
