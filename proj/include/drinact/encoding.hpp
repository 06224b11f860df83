#pragma once

// Textual forms of polynomials and field elements.
//
// q = 2 uses NTL-style hex: after "0x" comes a digit sequence g0 g1 g2 ...
// where bit j of digit g_k is the coefficient of X^(4k+j). So "0x4bc" is
// X^2 + X^4 + X^5 + X^7 + X^10 + X^11. Trailing zero digits are dropped and
// the zero polynomial is "0x0".
//
// q > 2 uses decimal little-endian coefficient lists "c0,c1,...". Field
// elements are written with exactly d entries.

#include <string>
#include <string_view>

#include "drinact/ext_field.hpp"

namespace drinact {

std::string hex_encode(const FqPoly& p);
FqPoly hex_decode(std::string_view s);

std::string encode_poly(const FqPoly& p);
FqPoly decode_poly(PrimeField field, std::string_view s);

std::string encode_element(const FieldElement& x);
FieldElement decode_element(const ExtFieldPtr& field, std::string_view s);

}  // namespace drinact
