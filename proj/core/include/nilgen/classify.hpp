#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilgen/autgrp.hpp"
#include "nilgen/descend.hpp"
#include "nilgen/isotest.hpp"

namespace nilgen {

struct CatalogEntry {
  std::string id;  ///< "<p>-<dim>-<index>", index 1-based
  std::optional<std::string> parent;
  NilAlgebra algebra;
  /// Generators may be empty for entries whose group was not computed.
  AutGroup aut;
  TypeSymbol type;
  int step = 0;
  /// Orbit representative index within its parent's allowable space.
  std::optional<std::uint64_t> rep_index;
  /// Size of that orbit under Aut(parent).
  std::optional<BigInt> orbit_size;
  /// "abelian", "descendant" or "reinterpreted".
  std::string source;
  /// For reinterpreted entries: id of the source algebra.
  std::optional<std::string> origin;
};

struct ReinterpretationRecord {
  std::string parent;       ///< blocked parent id
  int step = 0;
  std::string source_catalog;  ///< "F2 catalog, max dim N"
  int candidates = 0;
  int kept = 0;
  /// Candidates kept although undecided against an earlier kept entry.
  int undecided_pairs = 0;
  /// Candidates whose every tried lift duplicated a kept class.
  int duplicates = 0;
  std::vector<std::string> failures;  ///< candidates with no presentation valid over GF(q)
};

struct Catalog {
  int p = 2;
  int max_dim = 0;
  std::uint64_t max_enumeration = kDefaultMaxEnumeration;
  std::string version;
  std::vector<std::vector<CatalogEntry>> dims;  ///< dims[k] holds dimension k+1
  std::vector<ReinterpretationRecord> reinterpretations;

  const std::vector<CatalogEntry>& at_dim(int d) const { return dims.at(d - 1); }
  const CatalogEntry* find(const std::string& id) const;
  std::vector<int> counts() const;
};

struct ClassifyConfig {
  std::uint64_t max_enumeration = kDefaultMaxEnumeration;
  /// F2 catalog whose descendants are reinterpreted for blocked families.
  const Catalog* reuse = nullptr;
  int workers = 1;
  IsoOptions iso;
  std::function<void(const std::string&)> log;
};

/// Complete irredundant catalog of nilpotent Lie algebras of dimension
/// 1..n over GF(p). Throws CeilingExceeded naming the blocking family when a
/// job is above the ceiling and no reuse catalog is configured.
Catalog classify(int p, int n, const ClassifyConfig& config = {});

/// Families (abelian parent dimension, step) that exceed the ceiling for
/// targets up to n; these are known before any work starts.
std::vector<std::pair<int, int>> blocked_abelian_families(int p, int n, std::uint64_t max_enumeration);

/// Candidates for a blocked family from an F2 catalog, reinterpreted over
/// GF(q) and reduced to one per isomorphism class.
std::vector<CatalogEntry> reinterpretation_path(const Catalog& f2, const CatalogEntry& parent, int q, int step,
                                                IsoTester& tester, ReinterpretationRecord& record);

/// Types with counts in descending lexicographic order of the type symbol.
std::vector<std::pair<TypeSymbol, int>> tabulate(const Catalog& catalog, int dim);

}  // namespace nilgen
