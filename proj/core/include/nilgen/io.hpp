#pragma once

#include <iosfwd>
#include <string>

#include "nilgen/autgrp.hpp"
#include "nilgen/classify.hpp"
#include "nilgen/cover.hpp"

namespace nilgen {

struct ParsedAlgebra {
  NilAlgebra algebra;
  /// Set when the input had no weights and was brought to a nilpotent basis;
  /// rows are the new basis in input coordinates.
  std::optional<Matrix> basis_change;
};

/// Structure-constants object. Throws ParseError naming the offending field
/// (and line/column for syntax errors).
ParsedAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const NilAlgebra& L);

/// One JSON value per line: a header, then one record per algebra in id order.
void write_catalog(std::ostream& out, const Catalog& catalog);
/// Reads a catalog; automorphism groups come back with their order only.
/// ParseError fields are prefixed with "line N: ".
Catalog read_catalog(std::istream& in);

/// `[f1,...][z]  count` rows followed by a total line.
std::string emit_table(const Catalog& catalog, int dim);

std::string serialize_matrix(const Matrix& m);
std::string serialize_aut(const AutGroup& g);
std::string serialize_cover(const CoverData& cd);

}  // namespace nilgen
