#include "drinact/encoding.hpp"

#include <charconv>
#include <vector>

namespace drinact {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<std::uint32_t> parse_list(std::string_view s, std::uint32_t q) {
  s = strip(s);
  if (s.empty()) raise(ErrorCode::InvalidArgument, "empty coefficient list");
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view tok = strip(s.substr(pos, comma - pos));
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || v >= q)
      raise(ErrorCode::InvalidArgument, "bad coefficient '" + std::string(tok) + "'");
    out.push_back(static_cast<std::uint32_t>(v));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string hex_encode(const FqPoly& p) {
  if (!p.field().is_binary()) raise(ErrorCode::WrongCharacteristic, "hex form requires q = 2");
  if (p.is_zero()) return "0x0";
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t n = static_cast<std::size_t>(p.degree()) / 4 + 1;
  std::string out = "0x";
  out.reserve(n + 2);
  for (std::size_t k = 0; k < n; ++k) {
    unsigned g = 0;
    for (unsigned j = 0; j < 4; ++j) g |= p.coeff(4 * k + j) << j;
    out.push_back(kDigits[g]);
  }
  return out;
}

FqPoly hex_decode(std::string_view s) {
  s = strip(s);
  if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
    raise(ErrorCode::MalformedHex, "expected 0x<digits>, got '" + std::string(s) + "'");
  const PrimeField F2(2);
  std::vector<std::uint64_t> words((s.size() - 2) * 4 / 64 + 1, 0);
  for (std::size_t k = 2; k < s.size(); ++k) {
    const int g = hex_value(s[k]);
    if (g < 0) raise(ErrorCode::MalformedHex, std::string("bad hex digit '") + s[k] + "'");
    for (unsigned j = 0; j < 4; ++j)
      if ((g >> j) & 1) {
        const std::size_t bit = 4 * (k - 2) + j;
        words[bit / 64] |= std::uint64_t{1} << (bit % 64);
      }
  }
  return FqPoly::from_raw(F2, std::move(words));
}

std::string encode_poly(const FqPoly& p) {
  if (p.field().is_binary()) return hex_encode(p);
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(p.coeff(static_cast<std::size_t>(i)));
  }
  return out;
}

FqPoly decode_poly(PrimeField field, std::string_view s) {
  if (field.is_binary()) return hex_decode(s);
  return FqPoly(field, parse_list(s, field.q()));
}

std::string encode_element(const FieldElement& x) {
  const auto& F = *x.field();
  if (F.base().is_binary()) return hex_encode(x.value());
  std::string out;
  for (int i = 0; i < F.degree(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(x.coeff(static_cast<std::size_t>(i)));
  }
  return out;
}

FieldElement decode_element(const ExtFieldPtr& field, std::string_view s) {
  return field->element(decode_poly(field->base(), s));
}

}  // namespace drinact
