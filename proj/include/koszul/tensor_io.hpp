// Text interchange format for order-3 tensors, plus built-in tensors.
//
// Document layout (UTF-8, '#' starts a comment):
//   tensor v1 field=<Q|GF:p> dims=<a>x<b>x<c>
//   <i> <j> <k> <value>
//   ...
// Canonical form sorts entries by (i, j, k), writes reduced values, and
// round-trips byte-identically.

#pragma once

#include <string>
#include <string_view>

#include "koszul/tensor.hpp"

namespace koszul {

/// Throws std::runtime_error (with a line number) on malformed input,
/// out-of-range indices, duplicate entries, or a non-prime modulus.
Tensor3 parse_tensor(std::string_view text);

std::string serialize_tensor(const Tensor3& tensor);

/// Built-ins: "det3", "perm3", "unit:<d>", "toeplitz_sum:<d>" (d even).
Tensor3 builtin_tensor(std::string_view name, const FieldSpec& field);

}  // namespace koszul
