#include "mddkit/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mddkit {

namespace {

void require_same_dim(const Monomial& a, const Monomial& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("monomial dimension mismatch");
}

}  // namespace

Monomial Monomial::from_storage(std::vector<std::uint64_t> exps) {
  Monomial m;
  m.exps_ = std::move(exps);
  return m;
}

Monomial Monomial::from_natural(std::span<const std::uint64_t> exps) {
  std::vector<std::uint64_t> rev(exps.rbegin(), exps.rend());
  return from_storage(std::move(rev));
}

std::vector<std::uint64_t> Monomial::natural_exponents() const {
  return {exps_.rbegin(), exps_.rend()};
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (std::uint64_t e : exps_) {
    d += e;
    if (d < e) throw std::overflow_error("total degree overflows 64 bits");
  }
  return d;
}

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  switch (order) {
    case MonomialOrder::lex:
      // x1 decides first; storage is reversed, so scan from the back.
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i])
          return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    case MonomialOrder::grevlex: {
      const std::uint64_t da = a.total_degree();
      const std::uint64_t db = b.total_degree();
      if (da != db)
        return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
      // Tie-break: the first storage coordinate that differs belongs to the
      // rightmost differing variable; a smaller exponent there means greater.
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i])
          return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      return std::strong_ordering::equal;
    }
  }
  throw std::invalid_argument("unknown monomial order");
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  std::vector<std::uint64_t> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::max(a[i], b[i]);
  return Monomial::from_storage(std::move(out));
}

Monomial mul(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  std::vector<std::uint64_t> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out[i] = a[i] + b[i];
    if (out[i] < a[i]) throw std::overflow_error("exponent overflow in monomial product");
  }
  return Monomial::from_storage(std::move(out));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same_dim(a, b);
  std::vector<std::uint64_t> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b[i] > a[i]) throw std::domain_error("monomial quotient by a non-divisor");
    out[i] = a[i] - b[i];
  }
  return Monomial::from_storage(std::move(out));
}

std::vector<Monomial> crit(std::span<const Monomial> lead_set, const Monomial& p_lead) {
  std::vector<Monomial> out;
  out.reserve(lead_set.size());
  for (const Monomial& s : lead_set) {
    require_same_dim(s, p_lead);
    std::vector<std::uint64_t> cof(p_lead.dim());
    for (std::size_t i = 0; i < p_lead.dim(); ++i)
      cof[i] = s[i] > p_lead[i] ? s[i] - p_lead[i] : 0;
    out.push_back(Monomial::from_storage(std::move(cof)));
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return a.storage() < b.storage(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  const auto nat = m.natural_exponents();
  for (std::size_t j = 0; j < nat.size(); ++j) {
    if (nat[j] == 0) continue;
    if (!first) os << '*';
    os << 'x' << (j + 1);
    if (nat[j] > 1) os << '^' << nat[j];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

}  // namespace mddkit
