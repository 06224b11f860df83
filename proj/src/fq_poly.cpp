#include "drinact/fq_poly.hpp"

#include <algorithm>
#include <sstream>

#include "gf2x.hpp"

namespace drinact {

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim_coeffs(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs schoolbook(const PrimeField& F, const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                  std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  // Products are < 2^32, so an uint64 accumulator holds any realistic length.
  Coeffs r(na + nb - 1, 0);
  for (std::size_t i = 0; i < na; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < nb; ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& x : r) x %= F.q();
  return r;
}

constexpr std::size_t kKaratsubaThreshold = 32;

Coeffs karatsuba(const PrimeField& F, const std::uint64_t* a, std::size_t na, const std::uint64_t* b,
                 std::size_t nb) {
  if (na <= kKaratsubaThreshold || nb <= kKaratsubaThreshold) return schoolbook(F, a, na, b, nb);
  const std::size_t m = std::max(na, nb) / 2;
  const std::size_t a0n = std::min(na, m), b0n = std::min(nb, m);
  const std::size_t a1n = na > m ? na - m : 0, b1n = nb > m ? nb - m : 0;
  Coeffs z0 = karatsuba(F, a, a0n, b, b0n);
  Coeffs z2 = karatsuba(F, a + a0n, a1n, b + b0n, b1n);
  Coeffs sa(std::max(a0n, a1n), 0), sb(std::max(b0n, b1n), 0);
  for (std::size_t i = 0; i < a0n; ++i) sa[i] = a[i];
  for (std::size_t i = 0; i < a1n; ++i) sa[i] = F.add(static_cast<std::uint32_t>(sa[i]), static_cast<std::uint32_t>(a[m + i]));
  for (std::size_t i = 0; i < b0n; ++i) sb[i] = b[i];
  for (std::size_t i = 0; i < b1n; ++i) sb[i] = F.add(static_cast<std::uint32_t>(sb[i]), static_cast<std::uint32_t>(b[m + i]));
  Coeffs z1 = karatsuba(F, sa.data(), sa.size(), sb.data(), sb.size());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(static_cast<std::uint32_t>(z1[i]), static_cast<std::uint32_t>(z0[i]));
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(static_cast<std::uint32_t>(z1[i]), static_cast<std::uint32_t>(z2[i]));
  Coeffs r(na + nb - 1, 0);
  auto acc = [&](const Coeffs& z, std::size_t off) {
    for (std::size_t i = 0; i < z.size() && i + off < r.size(); ++i)
      r[i + off] = F.add(static_cast<std::uint32_t>(r[i + off]), static_cast<std::uint32_t>(z[i]));
  };
  acc(z0, 0);
  acc(z1, m);
  acc(z2, 2 * m);
  return r;
}

}  // namespace

FqPoly::FqPoly(PrimeField field, std::span<const std::uint32_t> coeffs) : field_(field) {
  if (field_.is_binary()) {
    data_.assign((coeffs.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] & 1) data_[i / 64] |= std::uint64_t{1} << (i % 64);
  } else {
    data_.reserve(coeffs.size());
    for (auto c : coeffs) data_.push_back(field_.reduce(c));
  }
  trim();
}

FqPoly FqPoly::constant(PrimeField field, std::uint32_t c) { return monomial(field, c, 0); }

FqPoly FqPoly::monomial(PrimeField field, std::uint32_t c, std::size_t n) {
  FqPoly p(field);
  p.set_coeff(n, field.reduce(c));
  return p;
}

FqPoly FqPoly::from_raw(PrimeField field, std::vector<std::uint64_t> raw) {
  FqPoly p(field);
  p.data_ = std::move(raw);
  if (!field.is_binary())
    for (auto& x : p.data_) x %= field.q();
  p.trim();
  return p;
}

void FqPoly::trim() noexcept { trim_coeffs(data_); }

void FqPoly::check_same(const FqPoly& other) const {
  if (!(field_ == other.field_)) raise(ErrorCode::MixedFields, "polynomials over different prime fields");
}

int FqPoly::degree() const noexcept {
  if (field_.is_binary()) return gf2x::degree(data_);
  return static_cast<int>(data_.size()) - 1;
}

bool FqPoly::is_one() const noexcept { return data_.size() == 1 && data_[0] == 1; }

std::uint32_t FqPoly::coeff(std::size_t i) const noexcept {
  if (field_.is_binary()) return gf2x::bit(data_, i) ? 1 : 0;
  return i < data_.size() ? static_cast<std::uint32_t>(data_[i]) : 0;
}

void FqPoly::set_coeff(std::size_t i, std::uint32_t c) {
  c = field_.reduce(c);
  if (field_.is_binary()) {
    if (gf2x::bit(data_, i) != (c != 0)) gf2x::flip_bit(data_, i);
  } else {
    if (data_.size() <= i) {
      if (c == 0) return;
      data_.resize(i + 1, 0);
    }
    data_[i] = c;
  }
  trim();
}

std::vector<std::uint32_t> FqPoly::coefficients() const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(degree() + 1));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i);
  return out;
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

FqPoly FqPoly::scaled(std::uint32_t c) const {
  c = field_.reduce(c);
  if (c == 0) return FqPoly(field_);
  if (c == 1) return *this;
  FqPoly r = *this;
  for (auto& x : r.data_) x = field_.mul(static_cast<std::uint32_t>(x), c);
  return r;
}

FqPoly FqPoly::derivative() const {
  FqPoly r(field_);
  const int n = degree();
  if (field_.is_binary()) {
    // d/dX X^i = i X^(i-1): only odd exponents survive.
    r.data_.assign(data_.size(), 0);
    for (int i = 1; i <= n; i += 2)
      if (coeff(static_cast<std::size_t>(i))) r.data_[(i - 1) / 64] |= std::uint64_t{1} << ((i - 1) % 64);
  } else {
    r.data_.assign(n > 0 ? static_cast<std::size_t>(n) : 0, 0);
    for (int i = 1; i <= n; ++i)
      r.data_[i - 1] = field_.mul(static_cast<std::uint32_t>(data_[i]), static_cast<std::uint32_t>(i % field_.q()));
  }
  r.trim();
  return r;
}

FqPoly FqPoly::shifted(std::size_t n) const {
  if (is_zero()) return *this;
  FqPoly r(field_);
  if (field_.is_binary()) {
    r.data_.assign(data_.size() + n / 64 + 1, 0);
    gf2x::xor_shifted(r.data_.data(), data_.data(), data_.size(), n);
  } else {
    r.data_.assign(n, 0);
    r.data_.insert(r.data_.end(), data_.begin(), data_.end());
  }
  r.trim();
  return r;
}

std::uint32_t FqPoly::eval(std::uint32_t x) const noexcept {
  std::uint32_t acc = 0;
  for (int i = degree(); i >= 0; --i) acc = field_.add(field_.mul(acc, x), coeff(static_cast<std::size_t>(i)));
  return acc;
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  if (!field_.is_binary())
    for (auto& x : r.data_) x = field_.neg(static_cast<std::uint32_t>(x));
  return r;
}

FqPoly& FqPoly::operator+=(const FqPoly& other) {
  check_same(other);
  if (data_.size() < other.data_.size()) data_.resize(other.data_.size(), 0);
  if (field_.is_binary()) {
    for (std::size_t i = 0; i < other.data_.size(); ++i) data_[i] ^= other.data_[i];
  } else {
    for (std::size_t i = 0; i < other.data_.size(); ++i)
      data_[i] = field_.add(static_cast<std::uint32_t>(data_[i]), static_cast<std::uint32_t>(other.data_[i]));
  }
  trim();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& other) {
  if (field_.is_binary()) return *this += other;
  check_same(other);
  if (data_.size() < other.data_.size()) data_.resize(other.data_.size(), 0);
  for (std::size_t i = 0; i < other.data_.size(); ++i)
    data_[i] = field_.sub(static_cast<std::uint32_t>(data_[i]), static_cast<std::uint32_t>(other.data_[i]));
  trim();
  return *this;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  a.check_same(b);
  FqPoly r(a.field_);
  if (a.field_.is_binary()) {
    r.data_ = gf2x::mul(a.data_, b.data_);
  } else {
    r.data_ = karatsuba(a.field_, a.data_.data(), a.data_.size(), b.data_.data(), b.data_.size());
    r.trim();
  }
  return r;
}

std::string FqPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::uint32_t c = coeff(static_cast<std::size_t>(i));
    if (!c) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "X";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (!(a.field() == b.field())) raise(ErrorCode::MixedFields, "polynomials over different prime fields");
  const PrimeField F = a.field();
  if (F.is_binary()) {
    gf2x::Words quot, rem;
    gf2x::divmod(a.raw(), b.raw(), &quot, rem);
    return {FqPoly::from_raw(F, std::move(quot)), FqPoly::from_raw(F, std::move(rem))};
  }
  const int da = a.degree(), db = b.degree();
  if (da < db) return {FqPoly(F), a};
  Coeffs rem = a.raw();
  const Coeffs& bc = b.raw();
  Coeffs quot(static_cast<std::size_t>(da - db + 1), 0);
  const std::uint32_t inv_lead = F.inv(b.leading());
  for (int i = da; i >= db; --i) {
    const auto c = F.mul(static_cast<std::uint32_t>(rem[i]), inv_lead);
    if (!c) continue;
    quot[i - db] = c;
    const std::uint32_t nc = F.neg(c);
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = F.add(static_cast<std::uint32_t>(rem[i - db + j]), F.mul(nc, static_cast<std::uint32_t>(bc[j])));
  }
  return {FqPoly::from_raw(F, std::move(quot)), FqPoly::from_raw(F, std::move(rem))};
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const FqPoly& a, const FqPoly& b) {
  const PrimeField F = a.field();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::constant(F, 1), s1(F);
  FqPoly t0(F), t1 = FqPoly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [qq, r2] = divmod(r0, r1);
    FqPoly s2 = s0 - qq * s1;
    FqPoly t2 = t0 - qq * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, FqPoly(F), FqPoly(F)};
  const std::uint32_t c = F.inv(r0.leading());
  return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return (a * b) % m; }

FqPoly powmod(const FqPoly& base, const BigInt& e, const FqPoly& m) {
  FqPoly result = FqPoly::constant(base.field(), 1) % m;
  if (e == 0) return result;
  FqPoly b = base % m;
  const auto top = boost::multiprecision::msb(e);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = mulmod(result, result, m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mulmod(result, b, m);
  }
  return result;
}

FqPoly frobenius_mod(const FqPoly& a, const FqPoly& m) {
  if (a.field().is_binary()) {
    FqPoly r = a % m;
    return FqPoly::from_raw(a.field(), gf2x::sqr(r.raw())) % m;
  }
  return powmod(a, BigInt(a.q()), m);
}

FqPoly invmod(const FqPoly& a, const FqPoly& m) {
  Xgcd r = xgcd(a % m, m);
  if (!r.g.is_one()) raise(ErrorCode::DivisionByZero, "element is not invertible modulo " + m.to_string());
  return r.s % m;
}

bool factor_order_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const int n = a.degree();
  for (int i = 0; i <= n; ++i) {
    const auto ca = a.coeff(static_cast<std::size_t>(i)), cb = b.coeff(static_cast<std::size_t>(i));
    if (ca != cb) return ca < cb;
  }
  return false;
}

bool is_irreducible(const FqPoly& p_in) {
  if (p_in.is_zero()) raise(ErrorCode::ZeroPolynomial, "irreducibility of 0");
  const int n = p_in.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FqPoly p = p_in.monic();
  const PrimeField F = p.field();
  const FqPoly X = FqPoly::x(F);

  std::vector<int> checkpoints;
  int rest = n;
  for (int l = 2; l <= rest; ++l) {
    if (rest % l) continue;
    checkpoints.push_back(n / l);
    while (rest % l == 0) rest /= l;
  }
  FqPoly h = X % p;
  for (int i = 1; i <= n; ++i) {
    h = frobenius_mod(h, p);
    if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end())
      if (!gcd(h - X, p).is_one()) return false;
  }
  return h == X % p;
}

namespace {

FqPoly pth_root(const FqPoly& f) {
  // Over a prime field the p-th root of a coefficient is itself.
  const PrimeField F = f.field();
  const std::size_t q = F.q();
  std::vector<std::uint32_t> c(static_cast<std::size_t>(f.degree()) / q + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i * q);
  return FqPoly(F, c);
}

void squarefree(const FqPoly& f, unsigned scale, std::vector<std::pair<FqPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const FqPoly g = f.derivative();
  if (g.is_zero()) {
    squarefree(pth_root(f), scale * f.q(), out);
    return;
  }
  FqPoly c = gcd(f, g);
  FqPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FqPoly y = gcd(w, c);
    FqPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), scale * f.q(), out);
}

std::vector<std::pair<FqPoly, int>> distinct_degree(const FqPoly& f) {
  std::vector<std::pair<FqPoly, int>> out;
  const PrimeField F = f.field();
  const FqPoly X = FqPoly::x(F);
  FqPoly rest = f;
  FqPoly h = X % rest;
  int i = 0;
  while (rest.degree() >= 2 * (i + 1)) {
    ++i;
    h = frobenius_mod(h, rest);
    FqPoly g = gcd(rest, h - X);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

void equal_degree(const FqPoly& f, int k, Rng& rng, std::vector<FqPoly>& out) {
  const int n = f.degree();
  if (n == k) {
    out.push_back(f);
    return;
  }
  const PrimeField F = f.field();
  BigInt half_order;
  if (!F.is_binary()) {
    BigInt qk = 1;
    for (int i = 0; i < k; ++i) qk *= F.q();
    half_order = (qk - 1) / 2;
  }
  for (;;) {
    FqPoly a = random_poly(F, static_cast<std::size_t>(n), rng);
    if (a.degree() <= 0) continue;
    FqPoly t(F);
    if (F.is_binary()) {
      FqPoly s = a;
      t = a;
      for (int i = 1; i < k; ++i) {
        s = frobenius_mod(s, f);
        t += s;
      }
    } else {
      t = powmod(a, half_order, f) - FqPoly::constant(F, 1);
    }
    FqPoly g = gcd(t, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, k, rng, out);
      equal_degree(f / g, k, rng, out);
      return;
    }
  }
}

}  // namespace

FqPoly Factorization::recompose(PrimeField field) const {
  FqPoly r = FqPoly::constant(field, unit);
  for (const auto& [p, m] : factors)
    for (unsigned i = 0; i < m; ++i) r *= p;
  return r;
}

Factorization factor(const FqPoly& u, std::uint64_t seed) {
  if (u.is_zero()) raise(ErrorCode::ZeroPolynomial, "factor(0)");
  Factorization result;
  result.unit = u.leading();
  Rng rng(seed);
  std::vector<std::pair<FqPoly, unsigned>> sqf;
  squarefree(u.monic(), 1, sqf);
  std::vector<std::pair<FqPoly, unsigned>> raw;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, k] : distinct_degree(part)) {
      std::vector<FqPoly> pieces;
      equal_degree(block, k, rng, pieces);
      for (auto& p : pieces) raw.emplace_back(p.monic(), mult);
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return factor_order_less(a.first, b.first); });
  for (auto& entry : raw) {
    if (!result.factors.empty() && result.factors.back().first == entry.first)
      result.factors.back().second += entry.second;
    else
      result.factors.push_back(std::move(entry));
  }
  return result;
}

FqPoly smallest_prime_factor(const FqPoly& u) {
  if (u.degree() <= 0) raise(ErrorCode::InvalidArgument, "constant polynomial has no prime factor");
  return factor(u).factors.front().first;
}

FqPoly random_poly(PrimeField field, std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> c(n);
  for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(field.q()));
  return FqPoly(field, c);
}

FqPoly random_monic(PrimeField field, std::size_t n, Rng& rng) {
  FqPoly p = random_poly(field, n, rng);
  p.set_coeff(n, 1);
  return p;
}

FqPoly random_irreducible(PrimeField field, std::size_t d, Rng& rng) {
  if (d == 0) raise(ErrorCode::InvalidArgument, "irreducible of degree 0");
  for (std::size_t trial = 0; trial < 100 * d; ++trial) {
    FqPoly p = random_monic(field, d, rng);
    if (d > 1 && p.coeff(0) == 0) continue;
    if (is_irreducible(p)) return p;
  }
  raise(ErrorCode::GenerationFailed, "no irreducible of degree " + std::to_string(d) + " found");
}

FqPoly random_irreducible(PrimeField field, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_irreducible(field, d, rng);
}

unsigned valuation(const FqPoly& u, const FqPoly& r) {
  if (u.is_zero() || r.degree() <= 0) raise(ErrorCode::InvalidArgument, "valuation needs u != 0 and r nonconstant");
  unsigned k = 0;
  FqPoly w = u;
  for (;;) {
    auto [quot, rem] = divmod(w, r);
    if (!rem.is_zero()) return k;
    w = std::move(quot);
    ++k;
  }
}

}  // namespace drinact
