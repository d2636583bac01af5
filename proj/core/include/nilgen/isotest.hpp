#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilgen/descend.hpp"

namespace nilgen {

enum class IsoOutcome { Isomorphic, NotIsomorphic, Undecided };

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::NotIsomorphic;
  /// Rows are images of A's basis in B, set when Isomorphic.
  std::optional<Matrix> witness;
  std::string note;
};

struct IsoOptions {
  /// Largest orbit explored during a single membership or stabiliser search.
  std::uint64_t max_orbit = 10'000'000;
};

/// Word in the action's generators carrying J1 to J2, or nullopt when J2
/// is outside the orbit. CeilingExceeded when the orbit is too large.
std::optional<std::vector<int>> orbit_membership(const GroupAction& action, std::uint64_t j1, std::uint64_t j2,
                                                 std::uint64_t max_points);

/// Cheap isomorphism invariants; unequal fingerprints prove non-isomorphism.
std::vector<long long> fingerprint(const NilAlgebra& L);

/// Whether rows of m transport A's table onto B's (m invertible).
bool verify_witness(const NilAlgebra& A, const NilAlgebra& B, const Matrix& m);

/// Byte string identifying a presentation exactly (table, weights, definitions).
std::string presentation_key(const NilAlgebra& L);

/// Isomorphism tests and automorphism groups with shared caches of covers
/// and automorphism groups of the quotients met along the recursion.
class IsoTester {
 public:
  explicit IsoTester(IsoOptions opts = {}) : opts_(opts) {}

  IsoResult test(const NilAlgebra& A, const NilAlgebra& B);
  /// Aut(L) with exact order. Throws CeilingExceeded when an orbit exceeds
  /// the configured limit.
  AutGroup automorphism_group(const NilAlgebra& L);

 private:
  const CoverData& cover(const NilAlgebra& Q);
  const std::vector<long long>& fingerprint_of(const NilAlgebra& L);

  IsoOptions opts_;
  std::map<std::string, std::unique_ptr<CoverData>> covers_;
  std::map<std::string, AutGroup> auts_;
  std::map<std::string, std::vector<long long>> prints_;
};

IsoResult are_isomorphic(const NilAlgebra& A, const NilAlgebra& B, IsoOptions opts = {});
AutGroup automorphism_group(const NilAlgebra& L, IsoOptions opts = {});

}  // namespace nilgen
