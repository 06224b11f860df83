#include "drinact/ext_field.hpp"

#include "gf2x.hpp"

namespace drinact {

namespace {

constexpr std::size_t kMaxSparseTerms = 16;

}  // namespace

std::shared_ptr<const ExtField> ExtField::create(const FqPoly& modulus) {
  if (modulus.degree() < 1 || !modulus.is_monic())
    raise(ErrorCode::InvalidArgument, "field modulus must be monic of degree >= 1");
  if (!is_irreducible(modulus)) raise(ErrorCode::InvalidArgument, "field modulus is reducible: " + modulus.to_string());
  return std::shared_ptr<const ExtField>(new ExtField(modulus));
}

ExtField::ExtField(const FqPoly& modulus) : base_(modulus.field()), modulus_(modulus), degree_(modulus.degree()) {
  if (!base_.is_binary()) return;
  for (int i = 0; i < degree_; ++i)
    if (modulus_.coeff(static_cast<std::size_t>(i))) low_terms_.push_back(i);
  const int top_low = low_terms_.empty() ? 0 : low_terms_.back();
  sparse_reduction_ = top_low + 64 <= degree_ && low_terms_.size() <= kMaxSparseTerms;
  if (sparse_reduction_) return;
  // Dense modulus: squaring and fourth powers go through precomputed bit matrices.
  frob1_.resize(static_cast<std::size_t>(degree_));
  frob2_.resize(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    frob1_[i] = reduce(FqPoly::monomial(base_, 1, 2 * static_cast<std::size_t>(i))).raw();
    frob2_[i] = reduce(FqPoly::monomial(base_, 1, 4 * static_cast<std::size_t>(i))).raw();
  }
}

void ExtField::reduce_binary(std::vector<std::uint64_t>& w) const {
  gf2x::trim(w);
  if (gf2x::degree(w) < degree_) return;
  if (!sparse_reduction_) {
    std::vector<std::uint64_t> rem;
    gf2x::divmod(w, modulus_.raw(), nullptr, rem);
    w = std::move(rem);
    return;
  }
  const std::size_t d = static_cast<std::size_t>(degree_);
  for (std::size_t wi = w.size(); wi-- > d / 64;) {
    std::uint64_t c = w[wi];
    if (wi == d / 64) c &= ~((std::uint64_t{1} << (d % 64)) - 1);
    if (!c) continue;
    w[wi] ^= c;
    const long base = static_cast<long>(64 * wi) - static_cast<long>(d);
    for (int e : low_terms_) gf2x::xor_chunk(w, c, base + e);
  }
  gf2x::trim(w);
}

FqPoly ExtField::reduce(const FqPoly& a) const {
  if (a.degree() < degree_) return a;
  if (base_.is_binary()) {
    std::vector<std::uint64_t> w = a.raw();
    reduce_binary(w);
    return FqPoly::from_raw(base_, std::move(w));
  }
  return a % modulus_;
}

FqPoly ExtField::mul(const FqPoly& a, const FqPoly& b) const {
  if (base_.is_binary()) {
    std::vector<std::uint64_t> w = gf2x::mul(a.raw(), b.raw());
    reduce_binary(w);
    return FqPoly::from_raw(base_, std::move(w));
  }
  return reduce(a * b);
}

std::vector<std::uint64_t> ExtField::apply_matrix(const std::vector<std::vector<std::uint64_t>>& cols,
                                                  const std::vector<std::uint64_t>& x) const {
  std::vector<std::uint64_t> r(static_cast<std::size_t>(degree_) / 64 + 1, 0);
  for (std::size_t wi = 0; wi < x.size(); ++wi) {
    std::uint64_t bits = x[wi];
    while (bits) {
      const std::size_t i = 64 * wi + static_cast<std::size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      const auto& col = cols[i];
      for (std::size_t k = 0; k < col.size(); ++k) r[k] ^= col[k];
    }
  }
  gf2x::trim(r);
  return r;
}

FqPoly ExtField::frobenius(const FqPoly& a, unsigned k) const {
  k %= static_cast<unsigned>(degree_);
  if (k == 0 || a.degree() <= 0) return a;
  if (base_.is_binary()) {
    std::vector<std::uint64_t> w = a.raw();
    if (sparse_reduction_) {
      for (unsigned i = 0; i < k; ++i) {
        w = gf2x::sqr(w);
        reduce_binary(w);
      }
    } else {
      for (unsigned i = 0; i + 1 < k; i += 2) w = apply_matrix(frob2_, w);
      if (k % 2) w = apply_matrix(frob1_, w);
    }
    return FqPoly::from_raw(base_, std::move(w));
  }
  FqPoly r = a;
  for (unsigned i = 0; i < k; ++i) {
    FqPoly base = r;
    FqPoly acc = FqPoly::constant(base_, 1);
    for (std::uint32_t e = q(); e; e >>= 1) {
      if (e & 1) acc = mul(acc, base);
      if (e > 1) base = mul(base, base);
    }
    r = std::move(acc);
  }
  return r;
}

FieldElement ExtField::zero() const { return {shared_from_this(), FqPoly(base_)}; }
FieldElement ExtField::one() const { return constant(1); }
FieldElement ExtField::generator() const { return element(FqPoly::x(base_)); }
FieldElement ExtField::constant(std::uint32_t c) const { return {shared_from_this(), FqPoly::constant(base_, c)}; }
FieldElement ExtField::element(const FqPoly& poly) const {
  if (!(poly.field() == base_)) raise(ErrorCode::MixedFields, "polynomial over a different prime field");
  return {shared_from_this(), reduce(poly)};
}
FieldElement ExtField::element(std::span<const std::uint32_t> coeffs) const { return element(FqPoly(base_, coeffs)); }

FieldElement ExtField::random(Rng& rng) const {
  return {shared_from_this(), random_poly(base_, static_cast<std::size_t>(degree_), rng)};
}

FieldElement ExtField::random_nonzero(Rng& rng) const {
  for (;;) {
    FieldElement x = random(rng);
    if (!x.is_zero()) return x;
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) raise(ErrorCode::MixedFields, "elements of different extension fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  value_ += o.value_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  value_ -= o.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  value_ = field_->mul(value_, o.value_);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of 0 in L");
  return {field_, invmod(value_, field_->modulus())};
}

FieldElement FieldElement::pow(const BigInt& e) const {
  FieldElement result = field_->one();
  if (e == 0) return result;
  const auto top = boost::multiprecision::msb(e);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = result.square();
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result *= *this;
  }
  return result;
}

FieldElement norm_to_base(const FieldElement& x) {
  FieldElement acc = x;
  FieldElement conj = x;
  for (int i = 1; i < x.field()->degree(); ++i) {
    conj = conj.frobenius();
    acc *= conj;
  }
  return acc;
}

}  // namespace drinact
