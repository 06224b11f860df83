#include "drinact/ore.hpp"

#include <sstream>

#include "drinact/encoding.hpp"

namespace drinact {

OrePoly::OrePoly(ExtFieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_) raise(ErrorCode::MixedFields, "Ore coefficient from another field");
  trim();
}

OrePoly OrePoly::monomial(const FieldElement& c, std::size_t n) {
  OrePoly p(c.field());
  if (c.is_zero()) return p;
  p.coeffs_.assign(n + 1, c.field()->zero());
  p.coeffs_[n] = c;
  return p;
}

void OrePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void OrePoly::check_same(const OrePoly& o) const {
  if (field_ != o.field_) raise(ErrorCode::MixedFields, "Ore polynomials over different fields");
}

OrePoly OrePoly::left_scaled(const FieldElement& c) const {
  OrePoly r(field_);
  if (c.is_zero()) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& x : coeffs_) r.coeffs_.push_back(c * x);
  return r;
}

OrePoly OrePoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return left_scaled(leading().inverse());
}

OrePoly OrePoly::times_tau(std::size_t n) const {
  if (is_zero() || n == 0) return *this;
  OrePoly r(field_);
  r.coeffs_.assign(n, field_->zero());
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

OrePoly OrePoly::twisted(unsigned k) const {
  OrePoly r = *this;
  if (k == 0) return r;
  for (auto& c : r.coeffs_) c = c.frobenius(k);
  return r;
}

FieldElement OrePoly::apply(const FieldElement& x) const {
  if (x.field() != field_) raise(ErrorCode::MixedFields, "apply: element of another field");
  FieldElement acc = field_->zero();
  FieldElement power = x;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) power = power.frobenius();
    if (!coeffs_[i].is_zero()) acc += coeffs_[i] * power;
  }
  return acc;
}

OrePoly OrePoly::operator-() const {
  OrePoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

OrePoly& OrePoly::operator+=(const OrePoly& o) {
  check_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) {
  check_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
  a.check_same(b);
  OrePoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t na = a.coeffs_.size(), nb = b.coeffs_.size();
  r.coeffs_.assign(na + nb - 1, a.field_->zero());
  std::vector<FieldElement> tw = b.coeffs_;
  for (std::size_t i = 0; i < na; ++i) {
    if (i)
      for (auto& c : tw) c = c.frobenius();
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < nb; ++j)
      if (!tw[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * tw[j];
  }
  r.trim();
  return r;
}

std::string OrePoly::to_string() const {
  std::ostringstream pretty, list;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) list << "; ";
    list << encode_element(coeffs_[i]);
    if (coeffs_[i].is_zero()) continue;
    if (!first) pretty << " + ";
    first = false;
    pretty << encode_element(coeffs_[i]);
    if (i == 1) pretty << "*t";
    if (i > 1) pretty << "*t^" << i;
  }
  if (first) pretty << "0";
  return pretty.str() + " ; tau-coeffs: [" + list.str() + "]";
}

std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& p1, const OrePoly& p2) {
  if (p2.is_zero()) raise(ErrorCode::DivisionByZero, "right division by the zero Ore polynomial");
  if (p1.field() != p2.field()) raise(ErrorCode::MixedFields, "Ore polynomials over different fields");
  const ExtFieldPtr& F = p1.field();
  const int n = p1.degree(), m = p2.degree();
  if (n < m) return {OrePoly(F), p1};

  const std::size_t span = static_cast<std::size_t>(n - m);
  // twists[k] = frobenius^k applied to p2's coefficients, for k = 0..n-m.
  std::vector<std::vector<FieldElement>> twists;
  twists.reserve(span + 1);
  twists.push_back(p2.coefficients());
  for (std::size_t k = 1; k <= span; ++k) {
    std::vector<FieldElement> next = twists.back();
    for (auto& c : next) c = c.frobenius();
    twists.push_back(std::move(next));
  }
  const bool monic = p2.is_monic();
  FieldElement inv_lead = monic ? F->one() : p2.leading().inverse();

  std::vector<FieldElement> rem = p1.coefficients();
  std::vector<FieldElement> quot(span + 1, F->zero());
  for (std::size_t k = span + 1; k-- > 0;) {
    const FieldElement& top = rem[static_cast<std::size_t>(m) + k];
    if (top.is_zero()) continue;
    const FieldElement alpha = monic ? top : top * inv_lead.frobenius(static_cast<unsigned>(k));
    const auto& tw = twists[k];
    for (std::size_t j = 0; j <= static_cast<std::size_t>(m); ++j)
      if (!tw[j].is_zero()) rem[j + k] -= alpha * tw[j];
    quot[k] = alpha;
  }
  rem.resize(static_cast<std::size_t>(m), F->zero());
  return {OrePoly(F, std::move(quot)), OrePoly(F, std::move(rem))};
}

OrePoly rgcd(const OrePoly& p1, const OrePoly& p2) {
  if (p1.is_zero() && p2.is_zero()) raise(ErrorCode::BothZero, "rgcd(0, 0)");
  OrePoly a = p1.monic();
  OrePoly b = p2.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    OrePoly r = right_divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RightXgcd right_xgcd(const OrePoly& p1, const OrePoly& p2) {
  if (p1.is_zero() && p2.is_zero()) raise(ErrorCode::BothZero, "rgcd(0, 0)");
  const ExtFieldPtr& F = p1.field();
  OrePoly r0 = p1, r1 = p2;
  OrePoly s0 = OrePoly::constant(F->one()), s1(F);
  OrePoly t0(F), t1 = OrePoly::constant(F->one());
  while (!r1.is_zero()) {
    auto [quot, r2] = right_divmod(r0, r1);
    OrePoly s2 = s0 - quot * s1;
    OrePoly t2 = t0 - quot * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const FieldElement c = r0.leading().inverse();
  return {r0.left_scaled(c), s0.left_scaled(c), t0.left_scaled(c)};
}

OrePoly exact_right_div(const OrePoly& p, const OrePoly& d) {
  auto [quot, rem] = right_divmod(p, d);
  if (!rem.is_zero()) raise(ErrorCode::NotRightDivisible, "nonzero remainder in exact right division");
  return quot;
}

Height height_and_separability(const OrePoly& p) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "height of the zero Ore polynomial");
  int h = 0;
  while (p.coefficients()[static_cast<std::size_t>(h)].is_zero()) ++h;
  return {h, h == 0};
}

OrePoly tau_power_mod(std::size_t n, const OrePoly& m) {
  if (m.is_zero()) raise(ErrorCode::DivisionByZero, "reduction modulo the zero Ore polynomial");
  const ExtFieldPtr& F = m.field();
  const std::size_t deg = static_cast<std::size_t>(m.degree());
  if (deg == 0) return OrePoly(F);
  const FieldElement inv_lead = m.leading().inverse();
  const auto& mc = m.coefficients();
  // r holds deg coefficients (degree < deg) of the running remainder.
  std::vector<FieldElement> r(deg, F->zero());
  r[0] = F->one();
  std::vector<FieldElement> next(deg + 1, F->zero());
  for (std::size_t step = 0; step < n; ++step) {
    next[0] = F->zero();
    for (std::size_t i = 0; i < deg; ++i) next[i + 1] = r[i].is_zero() ? r[i] : r[i].frobenius();
    if (!next[deg].is_zero()) {
      const FieldElement alpha = next[deg] * inv_lead;
      for (std::size_t i = 0; i < deg; ++i)
        if (!mc[i].is_zero()) next[i] -= alpha * mc[i];
    }
    for (std::size_t i = 0; i < deg; ++i) r[i] = std::move(next[i]);
  }
  return OrePoly(F, std::move(r));
}

}  // namespace drinact
