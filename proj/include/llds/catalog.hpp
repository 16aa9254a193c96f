#pragma once

#include <optional>
#include <string>
#include <vector>

#include "llds/alternating.hpp"
#include "llds/matspace.hpp"

namespace llds {

struct ExpectedRecord {
  unsigned m = 0, n = 0, d = 0;
  unsigned urk = 0, trk = 0, lld_index = 0;
  std::optional<bool> semiprimitive, primitive, minimal;
  std::string class_tag;
};

struct EntryParams {
  std::optional<std::uint64_t> n;   // wedge size
  std::optional<fe> delta;          // quadratic class parameter
};

struct CatalogEntry {
  std::string id;
  Field field;
  std::optional<MatrixSpace> space;  // the operator/matrix space, when the entry is one
  std::optional<AltSubspace> alt;    // alternating subspace: the object itself (a1..a5)
                                     // or the defining plane P (plane-* entries)
  ExpectedRecord expected;
  fe delta = 0;  // parameter actually used
  // the literal generic-matrix display, one string per row, for the
  // transcription cross-check ("D" stands for the delta parameter)
  std::vector<std::string> generic_rows;
};

struct EntryDescriptor {
  std::string id;
  std::string summary;
  bool takes_delta = false;
  bool takes_n = false;
  bool char2_only = false;
};

std::vector<EntryDescriptor> list_entries();
CatalogEntry build_entry(const std::string& id, const Field& F, const EntryParams& params = {});

// Expand a generic-matrix display into per-symbol generator matrices
// (symbols a..d in order); exposed for the transcription tests.
std::vector<Mat> expand_generic_rows(const Field& F, const std::vector<std::string>& rows,
                                     fe delta);

}  // namespace llds
