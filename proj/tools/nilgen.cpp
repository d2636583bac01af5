#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "nilgen/classify.hpp"
#include "nilgen/errors.hpp"
#include "nilgen/io.hpp"
#include "nilgen/isotest.hpp"

namespace {

using namespace nilgen;

constexpr int kExitNotIsomorphic = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitCeiling = 4;
constexpr int kExitInternal = 5;

struct InputError {
  std::string file;
  std::string field;
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError{path, "", "cannot open file"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParsedAlgebra load_algebra(const std::string& path) {
  std::string text = slurp(path);
  try {
    return parse_algebra(text);
  } catch (const ParseError& e) {
    throw InputError{path, e.field(), e.what()};
  }
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError{path, "", "cannot open file"};
  try {
    return read_catalog(in);
  } catch (const ParseError& e) {
    throw InputError{path, e.field(), e.what()};
  }
}

void note_normalized(const std::string& path, const ParsedAlgebra& a) {
  if (a.basis_change) std::cerr << path << ": no weights given; working on a normalized basis\n";
}

// Rows of m map A's basis to B's; both sides may carry a change of basis.
Matrix to_input_coordinates(const Matrix& m, const ParsedAlgebra& a, const ParsedAlgebra& b) {
  Matrix out = m;
  if (a.basis_change) out = *inverse(*a.basis_change) * out;
  if (b.basis_change) out = out * *b.basis_change;
  return out;
}

int run_classify(int p, int n, std::uint64_t ceiling, std::uint64_t max_orbit, const std::string& reuse_path,
                 const std::string& out_path, int workers, bool verbose) {
  std::optional<Catalog> reuse;
  if (!reuse_path.empty()) reuse = load_catalog(reuse_path);
  ClassifyConfig cfg;
  cfg.max_enumeration = ceiling;
  cfg.reuse = reuse ? &*reuse : nullptr;
  cfg.workers = workers;
  cfg.iso.max_orbit = max_orbit;
  if (verbose) cfg.log = [](const std::string& m) { std::cerr << m << '\n'; };
  Catalog cat = classify(p, n, cfg);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << out_path << ": cannot write\n";
    return kExitInternal;
  }
  write_catalog(out, cat);
  std::ostringstream counts;
  for (int c : cat.counts()) counts << (counts.tellp() ? " " : "") << c;
  std::cout << "counts by dimension: " << counts.str() << '\n';
  return 0;
}

int run_descendants(const std::string& path, int step, std::uint64_t ceiling, std::uint64_t max_orbit) {
  ParsedAlgebra in = load_algebra(path);
  note_normalized(path, in);
  IsoOptions iso{max_orbit};
  AutGroup aut = automorphism_group(in.algebra, iso);
  auto ds = immediate_descendants(in.algebra, aut, step, DescendOptions{ceiling});
  for (const Descendant& d : ds) {
    nlohmann::json rec = {{"type", type_symbol(d.algebra).to_string()},
                          {"aut_order", d.aut.order ? to_string(*d.aut.order) : "unknown"},
                          {"rep_index", std::to_string(d.rep_index)},
                          {"orbit_size", to_string(d.orbit_size)},
                          {"algebra", nlohmann::json::parse(serialize_algebra(d.algebra))}};
    std::cout << rec.dump() << '\n';
  }
  std::cerr << ds.size() << " descendants\n";
  return 0;
}

int run_isom(const std::string& a_path, const std::string& b_path, std::uint64_t max_orbit) {
  ParsedAlgebra a = load_algebra(a_path), b = load_algebra(b_path);
  if (a.algebra.p() != b.algebra.p()) throw InputError{b_path, "p", "field differs from " + a_path};
  IsoResult r = are_isomorphic(a.algebra, b.algebra, IsoOptions{max_orbit});
  switch (r.outcome) {
    case IsoOutcome::Isomorphic:
      std::cout << serialize_matrix(to_input_coordinates(*r.witness, a, b)) << '\n';
      return 0;
    case IsoOutcome::NotIsomorphic:
      std::cout << "not isomorphic: " << r.note << '\n';
      return kExitNotIsomorphic;
    case IsoOutcome::Undecided:
      std::cout << "undecided at configured limits: " << r.note << '\n';
      return kExitUndecided;
  }
  return kExitUndecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent Lie algebras over small prime fields"};
  app.require_subcommand(1);
  std::uint64_t ceiling = kDefaultMaxEnumeration;
  std::uint64_t max_orbit = IsoOptions{}.max_orbit;
  std::string in_path, out_path, reuse_path, catalog_path, a_path, b_path;
  int prime = 2, dim = 0, step = 1;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool verbose = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify all algebras up to a dimension");
  classify_cmd->add_option("--prime", prime, "Field size")->required()->check(CLI::Range(2, kMaxPrime));
  classify_cmd->add_option("--dim", dim, "Largest dimension")->required()->check(CLI::Range(1, 64));
  classify_cmd->add_option("--max-enumeration", ceiling, "Largest allowable-subspace count enumerated directly")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--max-orbit", max_orbit, "Largest orbit held in memory by an isomorphism test")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--reuse-catalog", reuse_path, "GF(2) catalog reinterpreted for blocked families");
  classify_cmd->add_option("--out", out_path, "Catalog output (JSON lines)")->required();
  classify_cmd->add_option("--workers", workers, "Concurrent descendant jobs")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("-v,--verbose", verbose, "Progress on stderr");

  auto* desc_cmd = app.add_subcommand("descendants", "Immediate descendants of one step size");
  desc_cmd->add_option("--in", in_path, "Algebra (JSON)")->required();
  desc_cmd->add_option("--step", step, "Dimension increase")->required()->check(CLI::PositiveNumber);
  desc_cmd->add_option("--max-enumeration", ceiling, "Largest allowable-subspace count enumerated directly")->check(CLI::PositiveNumber);
  desc_cmd->add_option("--max-orbit", max_orbit, "Largest orbit held in memory by an isomorphism test")->check(CLI::PositiveNumber);

  auto* cover_cmd = app.add_subcommand("cover", "Cover, multiplicator and nucleus");
  cover_cmd->add_option("--in", in_path, "Algebra (JSON)")->required();

  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group generators and order");
  aut_cmd->add_option("--in", in_path, "Algebra (JSON)")->required();
  aut_cmd->add_option("--max-orbit", max_orbit, "Largest orbit held in memory by an isomorphism test")->check(CLI::PositiveNumber);

  auto* isom_cmd = app.add_subcommand("isom", "Isomorphism test; exit 0, 1 or 2");
  isom_cmd->add_option("a", a_path, "First algebra (JSON)")->required();
  isom_cmd->add_option("b", b_path, "Second algebra (JSON)")->required();
  isom_cmd->add_option("--max-orbit", max_orbit, "Largest orbit held in memory by an isomorphism test")->check(CLI::PositiveNumber);

  auto* type_cmd = app.add_subcommand("type", "Type symbol");
  type_cmd->add_option("--in", in_path, "Algebra (JSON)")->required();

  auto* tab_cmd = app.add_subcommand("tabulate", "Type counts of one dimension of a catalog");
  tab_cmd->add_option("--catalog", catalog_path, "Catalog written by classify")->required();
  tab_cmd->add_option("--dim", dim, "Dimension to tabulate")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) return run_classify(prime, dim, ceiling, max_orbit, reuse_path, out_path, workers, verbose);
    if (*desc_cmd) return run_descendants(in_path, step, ceiling, max_orbit);
    if (*cover_cmd) {
      ParsedAlgebra in = load_algebra(in_path);
      note_normalized(in_path, in);
      std::cout << serialize_cover(compute_cover(in.algebra)) << '\n';
    } else if (*aut_cmd) {
      ParsedAlgebra in = load_algebra(in_path);
      note_normalized(in_path, in);
      std::cout << serialize_aut(automorphism_group(in.algebra, IsoOptions{max_orbit})) << '\n';
    } else if (*isom_cmd) {
      return run_isom(a_path, b_path, max_orbit);
    } else if (*type_cmd) {
      std::cout << type_symbol(load_algebra(in_path).algebra).to_string() << '\n';
    } else if (*tab_cmd) {
      Catalog cat = load_catalog(catalog_path);
      if (dim > cat.max_dim) throw InputError{catalog_path, "max_dim", "catalog stops at dimension " +
                                                                            std::to_string(cat.max_dim)};
      std::cout << emit_table(cat, dim);
    }
    return 0;
  } catch (const InputError& e) {
    std::cerr << e.file << (e.field.empty() ? "" : ": " + e.field) << ": " << e.message << '\n';
    return kExitBadInput;
  } catch (const CeilingExceeded& e) {
    std::cerr << "refused: " << e.what() << "\nblocking job: " << e.job() << '\n';
    return kExitCeiling;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
