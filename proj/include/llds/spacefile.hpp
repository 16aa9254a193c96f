#pragma once

#include <optional>
#include <string>

#include "llds/alternating.hpp"
#include "llds/matspace.hpp"

namespace llds {

// Line-oriented exchange format:
//   llds 1
//   field <p>  |  field <p> <k> <c0> ... <c{k-1}>
//   space <m> <n> <d>  |  alt <n> <d>
//   d blocks of: "matrix" then m (resp. n) rows of whitespace-separated tokens
// GF(p) tokens are decimals in [0,p); extension tokens are c0:c1:...:c{k-1}.
// '#' starts a comment; blank lines are ignored.  Emission writes the
// canonical basis with LF endings and no trailing whitespace, so parse and
// emit are mutually inverse byte-for-byte on canonical files.
struct SpaceFile {
  Field field;
  bool is_alt = false;
  std::optional<MatrixSpace> space;
  std::optional<AltSubspace> alt;
};

SpaceFile parse_space_file(const std::string& text);
SpaceFile load_space_file(const std::string& path);

std::string emit_space_file(const MatrixSpace& S);
std::string emit_space_file(const AltSubspace& V);

std::string field_header(const Field& F);

}  // namespace llds
