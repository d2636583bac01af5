#include "nilgen/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "nilgen/errors.hpp"

#ifndef NILGEN_VERSION
#define NILGEN_VERSION "unknown"
#endif

namespace nilgen {

const CatalogEntry* Catalog::find(const std::string& id) const {
  for (const auto& d : dims)
    for (const auto& e : d)
      if (e.id == id) return &e;
  return nullptr;
}

std::vector<int> Catalog::counts() const {
  std::vector<int> c;
  for (const auto& d : dims) c.push_back(static_cast<int>(d.size()));
  return c;
}

std::vector<std::pair<int, int>> blocked_abelian_families(int p, int n, std::uint64_t max_enumeration) {
  std::vector<std::pair<int, int>> out;
  for (int d = 2; d < n; ++d) {
    const int m = d * (d - 1) / 2;
    for (int s = 1; s <= m && d + s <= n; ++s)
      if (gaussian_binomial(m, s, p) > max_enumeration) out.emplace_back(d, s);
  }
  return out;
}

namespace {

constexpr int kLiftAttempts = 64;

std::string make_id(int p, int dim, std::size_t index) {
  return std::to_string(p) + "-" + std::to_string(dim) + "-" + std::to_string(index);
}

struct Job {
  std::size_t parent_dim_index;  // into dims
  std::size_t parent_slot;
  int step;
  std::vector<Descendant> result;
  std::optional<std::string> blocked;
};

void say(const ClassifyConfig& cfg, const std::string& msg) {
  if (cfg.log) cfg.log(msg);
}

}  // namespace

std::vector<CatalogEntry> reinterpretation_path(const Catalog& f2, const CatalogEntry& parent, int q, int step,
                                                IsoTester& tester, ReinterpretationRecord& record) {
  const int pdim = parent.algebra.dim();
  record.parent = parent.id;
  record.step = step;
  record.source_catalog = "p=" + std::to_string(f2.p) + " max_dim=" + std::to_string(f2.max_dim);
  if (pdim + step > f2.max_dim) throw DomainError("reuse catalog does not reach dimension " + std::to_string(pdim + step));

  const CatalogEntry* source = nullptr;
  if (parent.origin) {
    source = f2.find(*parent.origin);
  } else {
    for (const CatalogEntry& e : f2.at_dim(pdim)) {
      if (e.type.factors != parent.type.factors) continue;
      bool match = false;
      for (int k = 0; k <= kLiftAttempts && !match; ++k) {
        try {
          match = tester.test(reinterpret(presentation(e.algebra, k), q), parent.algebra).outcome ==
                  IsoOutcome::Isomorphic;
        } catch (const JacobiFailure&) {
        }
      }
      if (match) {
        source = &e;
        break;
      }
    }
  }
  if (!source) {
    record.failures.push_back("no counterpart of " + parent.id + " in the reuse catalog");
    return {};
  }

  // A lift may land in a class already kept, or outside the family, or be
  // undecided against a kept class; other presentations of the candidate
  // are tried before settling for an undecided lift.
  std::vector<CatalogEntry> kept;
  for (const CatalogEntry& cand : f2.at_dim(pdim + step)) {
    if (cand.parent != source->id) continue;
    ++record.candidates;
    std::optional<NilAlgebra> found, fallback;
    bool lifted = false;
    for (int k = 0; k <= kLiftAttempts && !found; ++k) {
      NilAlgebra K;
      try {
        K = reinterpret(presentation(cand.algebra, k), q);
      } catch (const JacobiFailure&) {
        continue;
      }
      lifted = true;
      if (!validate(K)) continue;
      if (tester.test(top_quotient(K), parent.algebra).outcome != IsoOutcome::Isomorphic) continue;
      const TypeSymbol ts = type_symbol(K);
      bool duplicate = false, undecided = false;
      for (const CatalogEntry& other : kept) {
        if (other.type != ts) continue;
        IsoOutcome r = tester.test(K, other.algebra).outcome;
        duplicate = r == IsoOutcome::Isomorphic;
        undecided = undecided || r == IsoOutcome::Undecided;
        if (duplicate) break;
      }
      if (duplicate) continue;
      if (!undecided)
        found = std::move(K);
      else if (!fallback)
        fallback = std::move(K);
    }
    if (!found && fallback) {
      ++record.undecided_pairs;
      found = std::move(fallback);
    }
    if (!found) {
      if (lifted)
        ++record.duplicates;
      else
        record.failures.push_back(cand.id + ": no presentation satisfies the Jacobi identity over GF(" +
                                  std::to_string(q) + ")");
      continue;
    }
    CatalogEntry e;
    e.parent = parent.id;
    e.type = type_symbol(*found);
    e.step = step;
    e.source = "reinterpreted";
    e.origin = cand.id;
    try {
      e.aut = tester.automorphism_group(*found);
    } catch (const CeilingExceeded&) {
      e.aut = AutGroup{found->dim(), q, {}, std::nullopt};
    }
    e.algebra = std::move(*found);
    kept.push_back(std::move(e));
  }
  record.kept = static_cast<int>(kept.size());
  return kept;
}

Catalog classify(int p, int n, const ClassifyConfig& config) {
  if (!is_prime(p) || p > kMaxPrime) throw DomainError("unsupported prime " + std::to_string(p));
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (config.max_enumeration < 1) throw DomainError("ceiling must be at least 1");

  if (!config.reuse) {
    auto blocked = blocked_abelian_families(p, n, config.max_enumeration);
    if (!blocked.empty()) {
      auto [d, s] = blocked.front();
      BigInt cnt = gaussian_binomial(d * (d - 1) / 2, s, p);
      throw CeilingExceeded("descendants of the " + std::to_string(d) + "-dimensional abelian algebra with step " +
                                std::to_string(s) + " need " + cnt.str() + " allowable subspaces, above the ceiling of " +
                                std::to_string(config.max_enumeration) +
                                "; dimension " + std::to_string(d + s) + " is out of reach without a reuse catalog",
                            std::to_string(p) + "-" + std::to_string(d) + "-1 step " + std::to_string(s));
    }
  } else if (config.reuse->p != 2 && config.reuse->p != p) {
    throw DomainError("reuse catalog must be over GF(2)");
  }

  Catalog cat;
  cat.p = p;
  cat.max_dim = n;
  cat.max_enumeration = config.max_enumeration;
  cat.version = NILGEN_VERSION;
  std::vector<std::vector<std::unique_ptr<CoverData>>> covers;
  IsoTester tester(config.iso);

  for (int m = 1; m <= n; ++m) {
    std::vector<CatalogEntry> entries;
    CatalogEntry ab;
    ab.algebra = make_abelian(p, m);
    ab.aut = gl_generators(p, m);
    ab.type = type_symbol(ab.algebra);
    ab.source = "abelian";
    entries.push_back(std::move(ab));

    std::vector<Job> jobs;
    for (std::size_t di = 0; di < cat.dims.size(); ++di)
      for (std::size_t slot = 0; slot < cat.dims[di].size(); ++slot)
        jobs.push_back({di, slot, m - static_cast<int>(di + 1), {}, std::nullopt});

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex fail_mu;
    auto worker = [&] {
      for (;;) {
        std::size_t j = next.fetch_add(1);
        if (j >= jobs.size()) return;
        Job& job = jobs[j];
        const CatalogEntry& parent = cat.dims[job.parent_dim_index][job.parent_slot];
        try {
          auto& cover = covers[job.parent_dim_index][job.parent_slot];
          if (!cover) cover = std::make_unique<CoverData>(compute_cover(parent.algebra));
          if (job.step > cover->nucleus_dim()) continue;
          if (!parent.aut.order) {
            job.blocked = "automorphism group of " + parent.id + " is unknown";
            continue;
          }
          job.result = immediate_descendants(parent.algebra, parent.aut, job.step,
                                             DescendOptions{config.max_enumeration}, cover.get());
        } catch (const CeilingExceeded& e) {
          job.blocked = e.what();
        } catch (...) {
          std::lock_guard lock(fail_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    const int nworkers = std::max(1, std::min<int>(config.workers, static_cast<int>(jobs.size())));
    if (nworkers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (Job& job : jobs) {
      const CatalogEntry& parent = cat.dims[job.parent_dim_index][job.parent_slot];
      if (job.blocked) {
        if (!config.reuse)
          throw CeilingExceeded(*job.blocked, parent.id + " step " + std::to_string(job.step));
        say(config, "reinterpreting family " + parent.id + " step " + std::to_string(job.step) + ": " + *job.blocked);
        ReinterpretationRecord rec;
        auto found = reinterpretation_path(*config.reuse, parent, p, job.step, tester, rec);
        cat.reinterpretations.push_back(rec);
        for (auto& e : found) entries.push_back(std::move(e));
        continue;
      }
      for (Descendant& d : job.result) {
        CatalogEntry e;
        e.parent = parent.id;
        e.type = type_symbol(d.algebra);
        e.step = d.step;
        e.rep_index = d.rep_index;
        e.orbit_size = d.orbit_size;
        e.source = "descendant";
        e.algebra = std::move(d.algebra);
        e.aut = std::move(d.aut);
        entries.push_back(std::move(e));
      }
    }
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i].id = make_id(p, m, i + 1);
    say(config, "dimension " + std::to_string(m) + ": " + std::to_string(entries.size()) + " algebras");
    covers.emplace_back(entries.size());
    cat.dims.push_back(std::move(entries));
  }
  return cat;
}

std::vector<std::pair<TypeSymbol, int>> tabulate(const Catalog& catalog, int dim) {
  std::map<TypeSymbol, int, std::greater<>> counts;
  for (const CatalogEntry& e : catalog.at_dim(dim)) ++counts[e.type];
  return {counts.begin(), counts.end()};
}

}  // namespace nilgen
