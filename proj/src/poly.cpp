#include "ffzeta/poly.hpp"

#include <sstream>

namespace ffzeta {

namespace {

using Coeffs = std::vector<FieldElement>;

void trim(Coeffs& c) noexcept {
  while (!c.empty() && c.back().code == 0) c.pop_back();
}

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) throw std::invalid_argument("polynomials over different fields");
}

// r <- r mod b in place, optionally recording the quotient. b nonzero, trimmed.
void reduce_in_place(const Field& f, Coeffs& r, const Coeffs& b, Coeffs* quotient) {
  trim(r);
  const std::size_t db = b.size() - 1;
  if (r.size() <= db) {
    if (quotient) quotient->clear();
    return;
  }
  const std::uint32_t q = f.q();
  const std::uint8_t* add = f.add_table();
  const std::uint8_t* mul = f.mul_table();
  const std::uint8_t* neg = f.neg_table();
  const FieldElement lead_inv = f.inv(b.back());
  const bool monic = b.back() == Field::one();
  if (quotient) quotient->assign(r.size() - db, Field::zero());

  for (std::size_t top = r.size(); top-- > db;) {
    const FieldElement lc = r[top];
    if (lc.code == 0) continue;
    const FieldElement c = monic ? lc : f.mul(lc, lead_inv);
    if (quotient) (*quotient)[top - db] = c;
    const std::uint8_t* row = mul + std::size_t{neg[c.code]} * q;
    FieldElement* dst = r.data() + (top - db);
    for (std::size_t k = 0; k < db; ++k) {
      dst[k].code = add[std::size_t{dst[k].code} * q + row[b[k].code]];
    }
    r[top] = Field::zero();
  }
  r.resize(db);
  trim(r);
}

Coeffs multiply(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  if (f.is_prime_field()) {
    // Accumulate in integers and reduce once; p < 256 keeps every partial
    // sum far below 2^64.
    std::vector<std::uint64_t> acc(out.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ai = a[i].code;
      if (ai == 0) continue;
      std::uint64_t* dst = acc.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j].code;
    }
    const std::uint64_t p = f.p();
    for (std::size_t k = 0; k < out.size(); ++k) out[k].code = static_cast<std::uint8_t>(acc[k] % p);
  } else {
    const std::uint32_t q = f.q();
    const std::uint8_t* add = f.add_table();
    const std::uint8_t* mul = f.mul_table();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].code == 0) continue;
      const std::uint8_t* row = mul + std::size_t{a[i].code} * q;
      FieldElement* dst = out.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) {
        dst[j].code = add[std::size_t{dst[j].code} * q + row[b[j].code]];
      }
    }
  }
  trim(out);
  return out;
}

}  // namespace

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c.code >= field_->q()) throw FieldError("coefficient outside the field");
  }
  normalize();
}

void Polynomial::normalize() noexcept { trim(coeffs_); }

Polynomial Polynomial::constant(FieldPtr field, FieldElement c) {
  return Polynomial(std::move(field), {c});
}

Polynomial Polynomial::monomial(FieldPtr field, FieldElement c, std::size_t k) {
  Coeffs coeffs(k + 1, Field::zero());
  coeffs[k] = c;
  return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::linear(FieldPtr field, FieldElement c) {
  return Polynomial(std::move(field), {c, Field::one()});
}

FieldElement Polynomial::eval(FieldElement x) const noexcept {
  FieldElement v = Field::zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = field_->add(field_->mul(v, x), coeffs_[i]);
  return v;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = field_->neg(c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  require_same_field(*this, b);
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), Field::zero());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], b.coeffs_[i]);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  require_same_field(*this, b);
  if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), Field::zero());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = field_->sub(coeffs_[i], b.coeffs_[i]);
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  Polynomial r(a.field_);
  r.coeffs_ = multiply(*a.field_, a.coeffs_, b.coeffs_);
  return r;
}

Polynomial Polynomial::scaled(FieldElement c) const {
  if (c.code == 0) return Polynomial(field_);
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = field_->mul(x, c);
  return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Coeffs r(a.coeffs().begin(), a.coeffs().end());
  Coeffs bc(b.coeffs().begin(), b.coeffs().end());
  Coeffs quot;
  reduce_in_place(*a.field(), r, bc, &quot);
  return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(r))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Coeffs r(a.coeffs().begin(), a.coeffs().end());
  Coeffs bc(b.coeffs().begin(), b.coeffs().end());
  reduce_in_place(*a.field(), r, bc, nullptr);
  return Polynomial(a.field(), std::move(r));
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
  return quot;
}

Polynomial make_monic(const Polynomial& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return a.scaled(a.field()->inv(a.leading()));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  const Field& f = *a.field();
  Coeffs x(a.coeffs().begin(), a.coeffs().end());
  Coeffs y(b.coeffs().begin(), b.coeffs().end());
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    reduce_in_place(f, x, y, nullptr);
    std::swap(x, y);
  }
  return make_monic(Polynomial(a.field(), std::move(x)));
}

Polynomial pow(const Polynomial& a, std::uint64_t e) {
  Polynomial result = Polynomial::one(a.field());
  Polynomial base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

std::vector<Polynomial> monic_polys(const FieldPtr& field, std::size_t d, std::uint64_t cap) {
  const std::uint64_t q = field->q();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    count *= q;
    if (count > cap) {
      throw EnumerationCapError("q^d = " + std::to_string(q) + "^" + std::to_string(d) +
                                " exceeds the enumeration cap " + std::to_string(cap));
    }
  }
  std::vector<Polynomial> out;
  out.reserve(count);
  Coeffs coeffs(d + 1, Field::zero());
  coeffs[d] = Field::one();
  for (std::uint64_t v = 0; v < count; ++v) {
    std::uint64_t rest = v;
    for (std::size_t i = 0; i < d; ++i) {
      coeffs[i] = FieldElement{static_cast<std::uint8_t>(rest % q)};
      rest /= q;
    }
    out.emplace_back(field, coeffs);
  }
  return out;
}

std::string format(const Polynomial& a) {
  if (a.is_zero()) return "0";
  const Field& f = *a.field();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    const FieldElement c = a.coeffs()[k];
    if (c.code == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == Field::one();
    if (k == 0) {
      os << f.format(c);
      continue;
    }
    if (!unit) os << f.format(c) << '*';
    os << 't';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace ffzeta
