#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "drinact/ext_field.hpp"

namespace drinact {

/// Ore polynomial in L{tau} with the commutation rule tau*a = a^q*tau,
/// stored little-endian (index i is the coefficient of tau^i) and trimmed.
class OrePoly {
 public:
  explicit OrePoly(ExtFieldPtr field) : field_(std::move(field)) {}
  OrePoly(ExtFieldPtr field, std::vector<FieldElement> coeffs);

  static OrePoly constant(const FieldElement& c) { return monomial(c, 0); }
  /// c * tau^n.
  static OrePoly monomial(const FieldElement& c, std::size_t n);
  static OrePoly tau_power(const ExtFieldPtr& field, std::size_t n) { return monomial(field->one(), n); }

  const ExtFieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const noexcept { return !is_zero() && coeffs_.back().is_one(); }

  const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }
  FieldElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
  const FieldElement& leading() const { return coeffs_.back(); }

  /// c * P (no twist, since c sits on the left).
  OrePoly left_scaled(const FieldElement& c) const;
  /// Scaled on the left so that the leading coefficient is 1.
  OrePoly monic() const;
  /// P * tau^n.
  OrePoly times_tau(std::size_t n) const;
  /// Applies x -> x^(q^k) to every coefficient, so tau^k * P = twisted(k) * tau^k.
  OrePoly twisted(unsigned k) const;

  /// Evaluates P as an F_q-linear map: sum of P_i * x^(q^i).
  FieldElement apply(const FieldElement& x) const;

  OrePoly operator-() const;
  OrePoly& operator+=(const OrePoly& o);
  OrePoly& operator-=(const OrePoly& o);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  /// Composition product.
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
  friend bool operator==(const OrePoly& a, const OrePoly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// "e0 + e1*t + ... ; tau-coeffs: [e0; e1; ...]" with field-element encodings.
  std::string to_string() const;

 private:
  void trim();
  void check_same(const OrePoly& o) const;

  ExtFieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

inline OrePoly ore_mul(const OrePoly& a, const OrePoly& b) { return a * b; }

/// p1 = Q * p2 + R with deg R < deg p2. DivisionByZero for p2 = 0.
std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& p1, const OrePoly& p2);

/// Monic generator of the left ideal L{tau}p1 + L{tau}p2. BothZero if both vanish.
OrePoly rgcd(const OrePoly& p1, const OrePoly& p2);

struct RightXgcd {
  OrePoly g, a, b;  // a*p1 + b*p2 = g, g monic
};
RightXgcd right_xgcd(const OrePoly& p1, const OrePoly& p2);

/// q with p = q * d; NotRightDivisible if the remainder is nonzero.
OrePoly exact_right_div(const OrePoly& p, const OrePoly& d);

struct Height {
  int height;
  bool separable;
};
/// ZeroPolynomial for p = 0.
Height height_and_separability(const OrePoly& p);

/// tau^n modulo m, by repeated "multiply by tau then reduce".
OrePoly tau_power_mod(std::size_t n, const OrePoly& m);

}  // namespace drinact
