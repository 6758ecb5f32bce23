#include "mddkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "mddkit/parse_error.hpp"

namespace mddkit {

Polynomial normalize_terms(std::vector<Term> terms, MonomialOrder order,
                           const PrimeField& field) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(order, a.mono, b.mono) == std::strong_ordering::greater;
  });
  Polynomial out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().mono == t.mono) {
      out.terms.back().coeff = field.add(out.terms.back().coeff, t.coeff);
      if (out.terms.back().coeff == 0) out.terms.pop_back();
    } else if (t.coeff != 0) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

Polynomial monomial_multiple(const Polynomial& f, const Monomial& m) {
  Polynomial out;
  out.terms.reserve(f.terms.size());
  for (const Term& t : f.terms) out.terms.push_back({t.coeff, mul(m, t.mono)});
  return out;
}

Polynomial scale(const Polynomial& f, std::uint32_t c, const PrimeField& field) {
  Polynomial out;
  if (c == 0) return out;
  out.terms.reserve(f.terms.size());
  for (const Term& t : f.terms) out.terms.push_back({field.mul(c, t.coeff), t.mono});
  return out;
}

Polynomial make_monic(Polynomial f, const PrimeField& field) {
  if (f.is_zero() || f.lead().coeff == 1) return f;
  const std::uint32_t s = field.inv(f.lead().coeff);
  for (Term& t : f.terms) t.coeff = field.mul(s, t.coeff);
  return f;
}

Polynomial subtract_multiple(const Polynomial& f, std::uint32_t c, const Monomial& m,
                             const Polynomial& g, MonomialOrder order,
                             const PrimeField& field) {
  Polynomial out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms.size() && j < g.terms.size()) {
    const Monomial gm = mul(m, g.terms[j].mono);
    const auto cmp = compare(order, f.terms[i].mono, gm);
    if (cmp == std::strong_ordering::greater) {
      out.terms.push_back(f.terms[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.terms.push_back({field.neg(field.mul(c, g.terms[j].coeff)), gm});
      ++j;
    } else {
      const std::uint32_t v = field.sub(f.terms[i].coeff, field.mul(c, g.terms[j].coeff));
      if (v != 0) out.terms.push_back({v, f.terms[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
  for (; j < g.terms.size(); ++j)
    out.terms.push_back({field.neg(field.mul(c, g.terms[j].coeff)), mul(m, g.terms[j].mono)});
  return out;
}

std::string to_string(const Polynomial& f, const PrimeField& field) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const std::uint32_t p = field.modulus();
  bool first = true;
  for (const Term& t : f.terms) {
    const bool negative = t.coeff > p / 2;
    const std::uint32_t mag = negative ? p - t.coeff : t.coeff;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (t.mono.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(t.mono);
    }
  }
  return os.str();
}

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Polynomial parse_polynomial(const std::string& line, std::size_t line_no, std::size_t dim,
                            MonomialOrder order, const PrimeField& field) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(line_no, i + 1, msg);
  };
  auto is_digit = [&](std::size_t k) {
    return k < line.size() && line[k] >= '0' && line[k] <= '9';
  };
  auto at_minus = [&] {
    if (i >= line.size()) return std::size_t{0};
    if (line[i] == '-') return std::size_t{1};
    if (line.compare(i, 3, "\xE2\x88\x92") == 0) return std::size_t{3};  // U+2212
    return std::size_t{0};
  };
  auto read_u64 = [&](const char* what) -> std::uint64_t {
    skip();
    if (!is_digit(i)) throw fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (is_digit(i)) {
      const std::uint64_t d = static_cast<std::uint64_t>(line[i] - '0');
      if (v > (UINT64_MAX - d) / 10) throw fail("number out of range");
      v = v * 10 + d;
      ++i;
    }
    return v;
  };

  std::vector<Term> terms;
  bool first = true;
  for (;;) {
    skip();
    if (i >= line.size()) {
      if (first) throw fail("empty polynomial");
      break;
    }
    int sign = +1;
    if (const std::size_t w = at_minus()) {
      sign = -1;
      i += w;
    } else if (line[i] == '+') {
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }

    std::uint32_t coeff = 1;
    Monomial mono(dim);
    bool any_factor = false;
    for (;;) {
      skip();
      if (is_digit(i)) {
        std::uint32_t v = 0;
        while (is_digit(i)) {
          v = static_cast<std::uint32_t>(
              (static_cast<std::uint64_t>(v) * 10 + (line[i] - '0')) % field.modulus());
          ++i;
        }
        coeff = field.mul(coeff, v);
        any_factor = true;
      } else if (i < line.size() && line[i] == 'x') {
        const std::size_t var_col = i + 1;
        ++i;
        if (!is_digit(i)) throw fail("expected a variable index after 'x'");
        const std::uint64_t idx = read_u64("variable index");
        if (idx < 1 || idx > dim)
          throw ParseError(line_no, var_col,
                           "variable index " + std::to_string(idx) + " out of range 1.." +
                               std::to_string(dim));
        std::uint64_t e = 1;
        skip();
        if (i < line.size() && line[i] == '^') {
          ++i;
          e = read_u64("exponent after '^'");
        }
        const std::size_t si = dim - static_cast<std::size_t>(idx);
        if (mono[si] + e < mono[si]) throw fail("exponent overflow");
        mono[si] += e;
        any_factor = true;
      } else {
        throw fail("expected a coefficient or a variable like x1");
      }
      skip();
      if (i < line.size() && line[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor) throw fail("empty term");
    if (sign < 0) coeff = field.neg(coeff);
    if (coeff != 0) terms.push_back({coeff, std::move(mono)});
    first = false;
  }
  return normalize_terms(std::move(terms), order, field);
}

PolynomialSystem parse_system(std::istream& is) {
  PolynomialSystem sys;
  std::optional<std::uint32_t> modulus;
  std::optional<std::size_t> dim;
  std::optional<MonomialOrder> order;
  std::optional<PrimeField> field;
  std::string line;
  std::size_t line_no = 0;

  auto ensure_field = [&](std::size_t at_line) {
    if (!field) {
      if (!dim) throw ParseError(at_line, 1, "missing 'n <dim>' header before polynomials");
      try {
        field.emplace(modulus.value_or(65521));
      } catch (const std::invalid_argument& e) {
        throw ParseError(at_line, 1, e.what());
      }
    }
  };

  while (std::getline(is, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (sys.polys.empty() && !field && (head == "p" || head == "n" || head == "order")) {
      std::string value;
      if (!(ss >> value)) throw ParseError(line_no, 1, "header '" + head + "' needs a value");
      std::string extra;
      if (ss >> extra) throw ParseError(line_no, 1, "trailing junk after header");
      if (head == "p") {
        std::uint64_t v = 0;
        for (char c : value) {
          if (c < '0' || c > '9') throw ParseError(line_no, 3, "modulus must be a number");
          v = v * 10 + static_cast<std::uint64_t>(c - '0');
          if (v > 0x7fffffffull) throw ParseError(line_no, 3, "modulus too large");
        }
        modulus = static_cast<std::uint32_t>(v);
      } else if (head == "n") {
        std::uint64_t v = 0;
        for (char c : value) {
          if (c < '0' || c > '9') throw ParseError(line_no, 3, "dimension must be a number");
          v = v * 10 + static_cast<std::uint64_t>(c - '0');
          if (v > 1000000) throw ParseError(line_no, 3, "dimension too large");
        }
        if (v == 0) throw ParseError(line_no, 3, "dimension must be >= 1");
        dim = static_cast<std::size_t>(v);
      } else {
        if (value == "grevlex")
          order = MonomialOrder::grevlex;
        else if (value == "lex")
          order = MonomialOrder::lex;
        else
          throw ParseError(line_no, 7, "order must be grevlex or lex");
      }
      continue;
    }
    ensure_field(line_no);
    sys.polys.push_back(
        parse_polynomial(line, line_no, *dim, order.value_or(MonomialOrder::grevlex), *field));
  }
  if (!dim) throw ParseError(line_no + 1, 1, "missing 'n <dim>' header");
  sys.modulus = modulus.value_or(65521);
  sys.dim = *dim;
  sys.order = order.value_or(MonomialOrder::grevlex);
  return sys;
}

PolynomialSystem parse_system_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return parse_system(f);
}

void print_system(const PolynomialSystem& sys, std::ostream& os) {
  const PrimeField field(sys.modulus);
  os << "p " << sys.modulus << '\n';
  os << "n " << sys.dim << '\n';
  os << "order " << (sys.order == MonomialOrder::grevlex ? "grevlex" : "lex") << '\n';
  for (const Polynomial& f : sys.polys) os << to_string(f, field) << '\n';
}

}  // namespace mddkit
