#include "drinact/linalg.hpp"

#include "drinact/error.hpp"

namespace drinact {

FqVector::FqVector(PrimeField field, std::size_t n) : field_(field), n_(0) { resize(n); }

void FqVector::resize(std::size_t n) {
  if (field_.is_binary()) {
    bits_.resize((n + 63) / 64, 0);
    if (n < n_ && n % 64) bits_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  } else {
    coeffs_.resize(n, 0);
  }
  n_ = n;
}

std::uint32_t FqVector::get(std::size_t i) const noexcept {
  if (field_.is_binary()) return static_cast<std::uint32_t>((bits_[i / 64] >> (i % 64)) & 1);
  return coeffs_[i];
}

void FqVector::set(std::size_t i, std::uint32_t c) {
  c = field_.reduce(c);
  if (field_.is_binary()) {
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    bits_[i / 64] = c ? (bits_[i / 64] | m) : (bits_[i / 64] & ~m);
  } else {
    coeffs_[i] = c;
  }
}

bool FqVector::is_zero() const noexcept { return first_nonzero() == n_; }

std::size_t FqVector::first_nonzero(std::size_t from) const noexcept {
  if (from >= n_) return n_;
  if (field_.is_binary()) {
    std::size_t w = from / 64;
    std::uint64_t word = bits_[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (word) return 64 * w + static_cast<std::size_t>(__builtin_ctzll(word));
      if (++w == bits_.size()) return n_;
      word = bits_[w];
    }
  }
  for (std::size_t i = from; i < n_; ++i)
    if (coeffs_[i]) return i;
  return n_;
}

void FqVector::add_scaled(const FqVector& o, std::uint32_t c, std::size_t from) {
  if (o.n_ > n_) resize(o.n_);
  c = field_.reduce(c);
  if (c == 0) return;
  if (field_.is_binary()) {
    std::uint64_t* dst = bits_.data();
    const std::uint64_t* src = o.bits_.data();
    for (std::size_t w = from / 64, e = o.bits_.size(); w < e; ++w) dst[w] ^= src[w];
    return;
  }
  for (std::size_t i = from; i < o.n_; ++i)
    if (o.coeffs_[i]) coeffs_[i] = field_.add(coeffs_[i], field_.mul(c, o.coeffs_[i]));
}

void FqVector::scale(std::uint32_t c) {
  c = field_.reduce(c);
  if (field_.is_binary()) {
    if (c == 0) std::fill(bits_.begin(), bits_.end(), 0);
    return;
  }
  for (auto& x : coeffs_) x = field_.mul(x, c);
}

void FqVector::add_poly(std::size_t offset, const FqPoly& p) {
  if (p.is_zero()) return;
  if (offset + static_cast<std::size_t>(p.degree()) >= n_) raise(ErrorCode::InvalidArgument, "add_poly out of range");
  if (field_.is_binary()) {
    const auto& w = p.raw();
    const std::size_t off = offset / 64;
    const unsigned s = offset % 64;
    for (std::size_t i = 0; i < w.size(); ++i) {
      bits_[off + i] ^= w[i] << s;
      if (s && (w[i] >> (64 - s))) bits_[off + i + 1] ^= w[i] >> (64 - s);
    }
    return;
  }
  for (int i = 0; i <= p.degree(); ++i) {
    auto& slot = coeffs_[offset + static_cast<std::size_t>(i)];
    slot = field_.add(slot, p.coeff(static_cast<std::size_t>(i)));
  }
}

FqVector SpanSolver::reduce(FqVector& v) const {
  FqVector acc(field_, count_ + 1);
  for (const Row& r : rows_) {
    const std::uint32_t c = v.get(r.pivot);
    if (c == 0) continue;
    v.add_scaled(r.vec, field_.neg(c), r.pivot);
    acc.add_scaled(r.comb, c);
  }
  return acc;
}

std::vector<std::uint32_t> SpanSolver::to_coeffs(const FqVector& comb) const {
  std::vector<std::uint32_t> out(count_);
  for (std::size_t i = 0; i < count_ && i < comb.size(); ++i) out[i] = comb.get(i);
  return out;
}

std::optional<std::vector<std::uint32_t>> SpanSolver::express(const FqVector& v) const {
  if (v.size() != dim_) raise(ErrorCode::InvalidArgument, "vector length does not match the solver dimension");
  FqVector w = v;
  FqVector acc = reduce(w);
  if (!w.is_zero()) return std::nullopt;
  return to_coeffs(acc);
}

std::optional<std::vector<std::uint32_t>> SpanSolver::add(const FqVector& v) {
  if (v.size() != dim_) raise(ErrorCode::InvalidArgument, "vector length does not match the solver dimension");
  FqVector w = v;
  FqVector acc = reduce(w);
  const std::size_t pivot = w.first_nonzero();
  const std::size_t index = count_++;
  if (pivot == dim_) return to_coeffs(acc);
  // w = v - sum acc_i v_i, so its combination is e_index - acc.
  FqVector comb(field_, count_);
  comb.add_scaled(acc, field_.neg(1));
  comb.set(index, 1);
  const std::uint32_t inv = field_.inv(w.get(pivot));
  w.scale(inv);
  comb.scale(inv);
  for (Row& r : rows_) r.comb.resize(count_);
  rows_.push_back({std::move(w), std::move(comb), pivot});
  return std::nullopt;
}

}  // namespace drinact
