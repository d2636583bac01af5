#pragma once

#include <vector>

#include "nilgen/algebra.hpp"

namespace nilgen {

struct CoverOptions {
  /// Tails on every non-defining product and Jacobi over all triples,
  /// instead of generator-only tails and generator-led triples.
  bool basic = false;
  /// Also collect Jacobi values over all triples and require that they span
  /// the same relation space as the reduced set.
  bool check_full_jacobi = false;
};

struct TailOrigin {
  int i;
  int j;
};

/// The cover of L in tail coordinates.
///
/// `table` has dimension n + m: coordinates [0, n) reproduce L's basis and
/// [n, n + m) are the surviving tails, which span the multiplicator M.
/// The tail coordinates are central; `table` is generally not on a
/// nilpotent basis (see star()).
struct CoverData {
  NilAlgebra base;
  LieTable table;
  std::vector<TailOrigin> tail_origin;  ///< one per surviving tail
  Subspace nucleus;                     ///< gamma_{c+1}(table), M coordinates

  int n() const { return base.dim(); }
  int m() const { return table.dim() - base.dim(); }
  int nucleus_dim() const { return nucleus.dim(); }
  /// M as a subspace of the table's coordinates.
  Subspace mult() const;
  /// The nucleus in table coordinates.
  Subspace nucleus_in_table() const;
};

CoverData compute_cover(const NilAlgebra& L, CoverOptions opts = {});

/// The cover on a nilpotent basis, with the change of basis from `table`.
Normalized star(const CoverData& cd);

/// J + N = M and J != M; J in M coordinates.
bool is_allowable(const CoverData& cd, const Subspace& J);

struct Quotient {
  NilAlgebra algebra;
  /// (n+m) x (n+s): table coordinates onto the quotient.
  Matrix projection;
  /// (n+s) x (n+m): a preimage in `table` of each quotient basis vector.
  Matrix preimage;
};

/// table / J on a nilpotent basis. The first n coordinates reproduce L;
/// the new layer is spanned by products [b_i, b_j] with w(b_i) = 1 and
/// w(b_j) = c, taken greedily in lexicographic order, and each carries
/// that pair as its definition.
Quotient quotient_by(const CoverData& cd, const Subspace& J);

struct DescendantMap {
  /// (n+m) x dim K surjection table -> K fixing L's basis.
  Matrix projection;
  /// Its kernel, in M coordinates.
  Subspace kernel;
};

/// For K with top_quotient(K) == cd.base, the canonical surjection of the
/// cover onto K and the allowable subspace it determines.
DescendantMap descendant_map(const CoverData& cd, const NilAlgebra& K);

}  // namespace nilgen
