#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nilgen/lie_table.hpp"

namespace nilgen {

/// b_i = [b_left, b_right] holds exactly in the table.
struct Definition {
  int left;
  int right;
  bool operator==(const Definition&) const = default;
};

/// A nilpotent Lie algebra presented on a nilpotent basis.
///
/// Weights are nondecreasing, the elements of weight >= k span gamma_k, and
/// every element of weight >= 2 carries a definition. Construction does not
/// check any of this; call validate().
class NilAlgebra {
 public:
  NilAlgebra() = default;
  NilAlgebra(LieTable table, std::vector<int> weights, std::vector<std::optional<Definition>> defs);

  int p() const { return table_.p(); }
  int dim() const { return table_.dim(); }
  const LieTable& table() const { return table_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<std::optional<Definition>>& definitions() const { return defs_; }
  /// Number of weight-1 elements, dim L/L'.
  int num_generators() const { return num_gens_; }
  int nilpotency_class() const { return weights_.empty() ? 0 : weights_.back(); }
  /// Indices of basis elements with the given weight form [begin, end).
  std::pair<int, int> layer(int w) const;

  Vec bracket(std::span<const Elem> x, std::span<const Elem> y) const { return table_.bracket(x, y); }

  bool operator==(const NilAlgebra&) const = default;

 private:
  LieTable table_;
  std::vector<int> weights_;
  std::vector<std::optional<Definition>> defs_;
  int num_gens_ = 0;
};

struct TypeSymbol {
  std::vector<int> factors;
  int center_dim = 0;

  std::string to_string() const;
  auto operator<=>(const TypeSymbol&) const = default;
};

std::vector<Subspace> lower_central_series(const NilAlgebra& L);
Subspace center(const NilAlgebra& L);
TypeSymbol type_symbol(const NilAlgebra& L);

struct ValidationReport {
  bool ok = true;
  std::string kind;  ///< "shape", "weights", "definition", "grading", "lcs", "jacobi"
  std::string message;
  std::optional<std::array<int, 3>> triple;

  explicit operator bool() const { return ok; }
};

ValidationReport validate(const NilAlgebra& L);

NilAlgebra make_abelian(int p, int d);

struct Normalized {
  NilAlgebra algebra;
  /// Rows are the new basis vectors in input coordinates.
  Matrix basis_change;
};

/// Nilpotent basis with definitions for an arbitrary nilpotent table.
/// Throws JacobiFailure or NotNilpotent.
Normalized normalize(const LieTable& raw);

/// The same structure constants read over GF(q). Throws JacobiFailure
/// when the identity fails over q and DomainError when a coefficient does
/// not lift.
NilAlgebra reinterpret(const NilAlgebra& L, int q);

/// L itself for k = 0, otherwise L renormalized after the k-th seeded
/// random change of basis. Repeatable across runs.
NilAlgebra presentation(const NilAlgebra& L, int k);

/// reinterpret() on the first of presentation(L, 0..attempts) for which the
/// Jacobi identity survives over GF(q); that depends on the presentation.
std::optional<NilAlgebra> reinterpret_any(const NilAlgebra& L, int q, int attempts = 256);

/// L / gamma_c(L): the table with the last weight layer dropped.
NilAlgebra top_quotient(const NilAlgebra& L);

/// Image of a generator assignment extended along the definitions.
///
/// `gen_images` holds one target vector per weight-1 element of L; the
/// result's row i is the image of b_i, computed as [image(left), image(right)]
/// in `target` for defined elements.
Matrix extend_by_definitions(const NilAlgebra& L, const LieTable& target, const std::vector<Vec>& gen_images);

/// Whether the rows of m (images of L's basis in target) preserve every bracket.
bool is_homomorphism(const LieTable& source, const LieTable& target, const Matrix& m);

}  // namespace nilgen
