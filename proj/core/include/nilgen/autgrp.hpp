#pragma once

#include <optional>
#include <vector>

#include "nilgen/bigint.hpp"
#include "nilgen/cover.hpp"

namespace nilgen {

/// Generators of Aut(L) as matrices on L (rows are basis images) and the
/// group order when known.
struct AutGroup {
  int dim = 0;
  int p = 2;
  std::vector<Matrix> gens;
  std::optional<BigInt> order;

  /// Checks that every generator is an invertible bracket-preserving map.
  static AutGroup make(const LieTable& table, std::vector<Matrix> gens, std::optional<BigInt> order);
};

BigInt gl_order(int p, int d);
/// Companion matrix of the first primitive polynomial plus I + E_{0,1}
/// (a primitive-root scalar when d = 1). Generation is verified once per
/// (p, d) and further elementary transvections are added if needed.
AutGroup gl_generators(int p, int d);

/// The homomorphism from the cover table of `src` into `target` sending the
/// generators of L to `gen_images`: defined elements follow their
/// definitions, and each tail t_{ij} maps to [x_i, x_j] - sum_k a_{ij}^k x_k.
Matrix lift_map(const CoverData& src, const LieTable& target, const std::vector<Vec>& gen_images);

/// alpha* on the cover table, from the canonical lift of the generator images.
Matrix lift_automorphism(const CoverData& cd, const Matrix& alpha);

/// alpha*|_M in M coordinates; throws ConsistencyError unless M is preserved
/// and the restriction is invertible.
Matrix restrict_to_mult(const CoverData& cd, const Matrix& lifted);
std::vector<Matrix> mult_representation(const CoverData& cd, const std::vector<Matrix>& gens);

/// The d*l maps b_i -> b_i + b_j (i a generator, b_j in the last layer)
/// extended along definitions.
std::vector<Matrix> central_automorphisms(const NilAlgebra& K);

/// Automorphism of K = cover/J induced by alpha in Stab(J); K must be
/// presented so that its first n coordinates are L's basis.
Matrix push_to_descendant(const NilAlgebra& K, const Matrix& alpha);

/// Aut(K) from the stabiliser in Aut(L) of K's allowable subspace:
/// pushed stabiliser generators plus central automorphisms, with
/// order |Aut L| / |orbit| * p^(d*l).
AutGroup assemble_descendant_aut(const AutGroup& parent, const NilAlgebra& K, const std::vector<Matrix>& stab_gens,
                                 const BigInt& orbit_size);

}  // namespace nilgen
