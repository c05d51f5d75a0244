#include "ffzeta/ratfun.hpp"

#include <vector>

namespace ffzeta {

RationalFunction::RationalFunction(FieldPtr field)
    : num_(field), den_(Polynomial::one(field)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::one(num_.field())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.field() != den_.field()) throw std::invalid_argument("numerator and denominator over different fields");
  if (num_.is_zero()) {
    den_ = Polynomial::one(num_.field());
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  if (!den_.is_monic()) {
    const FieldElement lc_inv = field()->inv(den_.leading());
    num_ = num_.scaled(lc_inv);
    den_ = den_.scaled(lc_inv);
  }
}

bool RationalFunction::is_canonical() const {
  if (den_.is_zero() || !den_.is_monic()) return false;
  if (num_.is_zero()) return den_.is_one();
  return gcd(num_, den_).is_one();
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Reduced{}, -num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  using R = RationalFunction;
  if (a.den_ == b.den_) {
    Polynomial n = a.num_ + b.num_;
    if (n.is_zero()) return R(a.field());
    if (a.den_.is_one()) return R(R::Reduced{}, std::move(n), a.den_);
    const Polynomial g = gcd(n, a.den_);
    if (g.is_one()) return R(R::Reduced{}, std::move(n), a.den_);
    return R(R::Reduced{}, exact_div(n, g), exact_div(a.den_, g));
  }
  // Henrici: only the common part g of the denominators can cancel.
  const Polynomial g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    Polynomial n = a.num_ * b.den_ + b.num_ * a.den_;
    return R(R::Reduced{}, std::move(n), a.den_ * b.den_);
  }
  const Polynomial a_den = exact_div(a.den_, g);
  const Polynomial b_den = exact_div(b.den_, g);
  Polynomial n = a.num_ * b_den + b.num_ * a_den;
  if (n.is_zero()) return R(a.field());
  const Polynomial g2 = gcd(n, g);
  if (g2.is_one()) return R(R::Reduced{}, std::move(n), a_den * b.den_);
  return R(R::Reduced{}, exact_div(n, g2), a_den * exact_div(b.den_, g2));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  using R = RationalFunction;
  if (a.is_zero() || b.is_zero()) return R(a.field());
  // Cross-cancel so the product stays reduced.
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial n1 = g1.is_one() ? a.num_ : exact_div(a.num_, g1);
  Polynomial d2 = g1.is_one() ? b.den_ : exact_div(b.den_, g1);
  Polynomial n2 = g2.is_one() ? b.num_ : exact_div(b.num_, g2);
  Polynomial d1 = g2.is_one() ? a.den_ : exact_div(a.den_, g2);
  return R(R::Reduced{}, n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::scaled(FieldElement c) const {
  if (c.code == 0) return RationalFunction(field());
  return RationalFunction(Reduced{}, num_.scaled(c), den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  const FieldElement lc_inv = field()->inv(num_.leading());
  return RationalFunction(Reduced{}, den_.scaled(lc_inv), num_.scaled(lc_inv));
}

RationalFunction pow(const RationalFunction& a, std::int64_t e) {
  if (e < 0) {
    if (a.is_zero()) throw std::domain_error("zero raised to a negative power");
    return pow(a.inverse(), -e);
  }
  const auto ue = static_cast<std::uint64_t>(e);
  // Powers of coprime polynomials stay coprime, and a monic den stays monic.
  return RationalFunction(pow(a.num(), ue), pow(a.den(), ue));
}

namespace {
RationalFunction sum_range(const FieldPtr& field, std::span<const RationalFunction> xs) {
  if (xs.empty()) return RationalFunction(field);
  if (xs.size() == 1) return xs.front();
  const std::size_t mid = xs.size() / 2;
  return sum_range(field, xs.first(mid)) + sum_range(field, xs.subspan(mid));
}
}  // namespace

RationalFunction balanced_sum(const FieldPtr& field, std::span<const RationalFunction> xs) {
  return sum_range(field, xs);
}

Polynomial rescale_to_denominator(const RationalFunction& a, const Polynomial& target_den) {
  if (target_den.is_zero()) throw std::domain_error("target denominator is zero");
  auto [factor, rem] = divmod(target_den, a.den());
  if (!rem.is_zero()) throw std::domain_error("denominator does not divide the target");
  return a.num() * factor;
}

namespace {
std::string wrap(const Polynomial& p) {
  std::string s = format(p);
  std::size_t terms = 0;
  for (auto c : p.coeffs()) terms += c.code != 0;
  return terms > 1 ? "(" + s + ")" : s;
}
}  // namespace

std::string format(const RationalFunction& a) { return wrap(a.num()) + " / " + wrap(a.den()); }

}  // namespace ffzeta
