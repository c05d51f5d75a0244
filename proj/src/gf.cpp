#include "ffzeta/gf.hpp"

#include <algorithm>
#include <sstream>

namespace ffzeta {

namespace {

using Digits = std::vector<std::uint32_t>;

// Dense polynomials over F_p with plain digit vectors, lowest first. Only used
// for building and validating the field itself, where l <= 8.

void trim(Digits& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) {
      a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + p - c * b[k] % p) % p);
    }
    trim(a);
  }
  return a;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), m, p);
}

Digits poly_gcd(Digits a, Digits b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^e mod m.
Digits x_pow_mod(std::uint64_t e, const Digits& m, std::uint32_t p) {
  Digits result{1};
  Digits base = poly_mod(Digits{0, 1}, m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
  }
  return result;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower PrimePower::make(std::uint64_t p, std::uint64_t l) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (l < 1) throw FieldError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < l; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw FieldError("field size " + std::to_string(p) + "^" + std::to_string(l) +
                       " exceeds " + std::to_string(kMaxFieldSize));
    }
  }
  return PrimePower{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(l),
                    static_cast<std::uint32_t>(q)};
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> f_in, std::uint32_t p) {
  Digits f(f_in.begin(), f_in.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  for (auto c : f) {
    if (c >= p) return false;
  }
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // No roots in F_p.
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return false;
  }
  // No factor of degree k <= deg/2: gcd(x^{p^k} - x, f) = 1.
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    Digits h = x_pow_mod(ipow(p, k), f, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    Digits g = poly_gcd(f, h, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> monic_irreducibles(std::uint32_t p, std::uint32_t l) {
  std::vector<Digits> out;
  const std::uint64_t count = ipow(p, l);
  for (std::uint64_t v = 0; v < count; ++v) {
    // c_0 is the most significant position of the tuple.
    Digits f(l + 1, 0);
    std::uint64_t rest = v;
    for (std::size_t i = l; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[l] = 1;
    if (is_irreducible_mod_p(f, p)) out.push_back(std::move(f));
  }
  return out;
}

FieldPtr Field::make(std::uint64_t p, std::uint64_t l,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  const PrimePower pp = PrimePower::make(p, l);
  Digits m;
  if (modulus) {
    m = std::move(*modulus);
    if (m.size() != pp.l + 1 || m.back() != 1) {
      throw FieldError("modulus must be monic of degree " + std::to_string(pp.l));
    }
    if (!is_irreducible_mod_p(m, pp.p)) throw FieldError("modulus is reducible over F_p");
  } else if (pp.l == 1) {
    m = {0, 1};
  } else {
    auto all = monic_irreducibles(pp.p, pp.l);
    m = std::move(all.front());
  }
  return FieldPtr(new Field(pp, std::move(m)));
}

Field::Field(PrimePower pp, std::vector<std::uint32_t> modulus)
    : pp_(pp), modulus_(std::move(modulus)) {
  const std::uint32_t q = pp_.q;
  add_.resize(std::size_t{q} * q);
  mul_.resize(std::size_t{q} * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  std::vector<Digits> dig(q);
  for (std::uint32_t c = 0; c < q; ++c) dig[c] = digits(FieldElement{static_cast<std::uint8_t>(c)});

  auto encode = [&](const Digits& d) {
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * pp_.p + d[i];
    return static_cast<std::uint8_t>(code);
  };

  for (std::uint32_t a = 0; a < q; ++a) {
    Digits n(pp_.l);
    for (std::size_t i = 0; i < pp_.l; ++i) n[i] = (pp_.p - dig[a][i]) % pp_.p;
    neg_[a] = encode(n);
    for (std::uint32_t b = 0; b < q; ++b) {
      Digits s(pp_.l);
      for (std::size_t i = 0; i < pp_.l; ++i) s[i] = (dig[a][i] + dig[b][i]) % pp_.p;
      add_[std::size_t{a} * q + b] = encode(s);
      Digits prod = poly_mulmod(dig[a], dig[b], modulus_, pp_.p);
      prod.resize(pp_.l, 0);
      mul_[std::size_t{a} * q + b] = encode(prod);
    }
  }
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul_[std::size_t{a} * q + b] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw FieldError("inverse of zero");
  return {inv_[a.code]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement result = one();
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

FieldElement Field::embed_int(std::int64_t c) const noexcept {
  const std::int64_t p = pp_.p;
  return {static_cast<std::uint8_t>(((c % p) + p) % p)};
}

FieldElement Field::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() != pp_.l) throw FieldError("element needs exactly " + std::to_string(pp_.l) + " digits");
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= pp_.p) throw FieldError("digit out of range");
    code = code * pp_.p + d[i];
  }
  return {static_cast<std::uint8_t>(code)};
}

std::vector<std::uint32_t> Field::digits(FieldElement a) const {
  std::vector<std::uint32_t> d(pp_.l);
  std::uint32_t code = a.code;
  for (auto& x : d) {
    x = code % pp_.p;
    code /= pp_.p;
  }
  return d;
}

std::vector<FieldElement> Field::all_elements() const {
  std::vector<FieldElement> out(pp_.q);
  for (std::uint32_t c = 0; c < pp_.q; ++c) out[c] = FieldElement{static_cast<std::uint8_t>(c)};
  return out;
}

namespace {
std::string format_digits(std::span<const std::uint32_t> d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ']';
  return os.str();
}
}  // namespace

std::string Field::format(FieldElement a) const {
  if (is_prime_field()) return std::to_string(a.code);
  return format_digits(digits(a));
}

std::string Field::format_modulus() const { return format_digits(modulus_); }

}  // namespace ffzeta
