#include "nilgen/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "nilgen/errors.hpp"

namespace nilgen {

NilAlgebra::NilAlgebra(LieTable table, std::vector<int> weights, std::vector<std::optional<Definition>> defs)
    : table_(std::move(table)), weights_(std::move(weights)), defs_(std::move(defs)) {
  if (static_cast<int>(weights_.size()) != table_.dim() || static_cast<int>(defs_.size()) != table_.dim())
    throw DomainError("weights/definitions length must equal the dimension");
  num_gens_ = static_cast<int>(std::count(weights_.begin(), weights_.end(), 1));
}

std::pair<int, int> NilAlgebra::layer(int w) const {
  auto lo = std::lower_bound(weights_.begin(), weights_.end(), w);
  auto hi = std::upper_bound(weights_.begin(), weights_.end(), w);
  return {static_cast<int>(lo - weights_.begin()), static_cast<int>(hi - weights_.begin())};
}

std::string TypeSymbol::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i];
  os << "][" << center_dim << ']';
  return os.str();
}

std::vector<Subspace> lower_central_series(const NilAlgebra& L) { return L.table().lower_central_series(); }

Subspace center(const NilAlgebra& L) { return L.table().center(); }

TypeSymbol type_symbol(const NilAlgebra& L) {
  TypeSymbol t;
  auto lcs = lower_central_series(L);
  for (std::size_t k = 0; k + 1 < lcs.size(); ++k) t.factors.push_back(lcs[k].dim() - lcs[k + 1].dim());
  t.center_dim = center(L).dim();
  return t;
}

namespace {

ValidationReport fail(std::string kind, std::string msg, std::optional<std::array<int, 3>> triple = {}) {
  return {false, std::move(kind), std::move(msg), triple};
}

std::string pos(int i) { return std::to_string(i + 1); }

}  // namespace

ValidationReport validate(const NilAlgebra& L) {
  const int n = L.dim();
  const auto& w = L.weights();
  const auto& T = L.table();
  if (n == 0) return {};
  if (w[0] != 1) return fail("weights", "first weight must be 1");
  for (int i = 1; i < n; ++i) {
    if (w[i] < w[i - 1]) return fail("weights", "weights must be nondecreasing at b" + pos(i));
    if (w[i] > w[i - 1] + 1) return fail("weights", "weight gap before b" + pos(i));
  }
  for (int i = 0; i < n; ++i) {
    const auto& d = L.definitions()[i];
    if (w[i] == 1) {
      if (d) return fail("definition", "weight-1 element b" + pos(i) + " has a definition");
      continue;
    }
    if (!d) return fail("definition", "b" + pos(i) + " has no definition");
    if (d->left < 0 || d->left >= n || d->right < 0 || d->right >= n || d->left == d->right)
      return fail("definition", "definition of b" + pos(i) + " is out of range");
    if (w[d->left] != 1 || w[d->right] != w[i] - 1)
      return fail("definition", "definition of b" + pos(i) + " has wrong weights");
    Vec v = T.product(d->left, d->right);
    Vec e(n, 0);
    e[i] = 1;
    if (v != e) return fail("definition", "[b" + pos(d->left) + ",b" + pos(d->right) + "] is not b" + pos(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const Term& t : T.terms(i, j))
        if (w[t.index] < w[i] + w[j])
          return fail("grading", "[b" + pos(i) + ",b" + pos(j) + "] has a term in b" + pos(t.index) + " of too low weight");
  auto lcs = T.lower_central_series();
  const int c = w.back();
  if (static_cast<int>(lcs.size()) != c + 1 || lcs.back().dim() != 0)
    return fail("lcs", "lower central series length does not match the class");
  for (int k = 1; k <= c; ++k) {
    int first = static_cast<int>(std::lower_bound(w.begin(), w.end(), k) - w.begin());
    Matrix suffix(L.p(), n - first, n);
    for (int r = 0; r < n - first; ++r) suffix(r, first + r) = 1;
    if (!(Subspace::from_span(suffix) == lcs[k - 1]))
      return fail("lcs", "elements of weight >= " + std::to_string(k) + " do not span gamma_" + std::to_string(k));
  }
  if (auto bad = T.jacobi_violation())
    return fail("jacobi",
                "Jacobi identity fails on (b" + pos((*bad)[0]) + ",b" + pos((*bad)[1]) + ",b" + pos((*bad)[2]) + ")",
                bad);
  return {};
}

NilAlgebra make_abelian(int p, int d) {
  if (d < 1) throw DomainError("abelian algebra needs dimension >= 1");
  return NilAlgebra(LieTable(p, d), std::vector<int>(d, 1), std::vector<std::optional<Definition>>(d));
}

Normalized normalize(const LieTable& raw) {
  if (auto bad = raw.jacobi_violation()) throw JacobiFailure("input table violates the Jacobi identity", *bad);
  auto lcs = raw.lower_central_series();
  if (lcs.back().dim() != 0) throw NotNilpotent("lower central series does not reach zero");
  const int n = raw.dim(), p = raw.p();
  const int c = static_cast<int>(lcs.size()) - 1;

  std::vector<Vec> basis;
  std::vector<int> weights;
  std::vector<std::optional<Definition>> defs;
  std::vector<int> gens;
  std::vector<int> prev_layer;

  for (int wgt = 1; wgt <= c; ++wgt) {
    const Subspace& below = lcs[wgt];
    const int target = lcs[wgt - 1].dim() - below.dim();
    Subspace span = below;
    std::vector<int> layer;
    auto try_add = [&](Vec v, std::optional<Definition> def) {
      if (span.contains(v)) return;
      span = span.sum(Subspace::from_span(Matrix::from_rows(p, n, {v})));
      layer.push_back(static_cast<int>(basis.size()));
      basis.push_back(std::move(v));
      weights.push_back(wgt);
      defs.push_back(def);
    };
    if (wgt == 1) {
      for (int i = 0; i < n && static_cast<int>(layer.size()) < target; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        try_add(std::move(e), std::nullopt);
      }
      gens = layer;
    } else {
      for (int a : gens)
        for (int y : prev_layer) {
          if (static_cast<int>(layer.size()) == target) break;
          if (wgt == 2 && a >= y) continue;
          try_add(raw.bracket(basis[a], basis[y]), Definition{a, y});
        }
    }
    if (static_cast<int>(layer.size()) != target) throw ConsistencyError("normalize failed to span a layer");
    prev_layer = layer;
  }

  Matrix change = Matrix::from_rows(p, n, basis);
  LieTable table = raw.change_basis(change);
  return {NilAlgebra(std::move(table), std::move(weights), std::move(defs)), std::move(change)};
}

NilAlgebra reinterpret(const NilAlgebra& L, int q) {
  if (!is_prime(q) || q > kMaxPrime) throw DomainError("target modulus must be a supported prime");
  const auto& T = L.table();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j)
      for (const Term& t : T.terms(i, j))
        if (t.coeff >= q)
          throw DomainError("coefficient " + std::to_string(t.coeff) + " does not lift to GF(" + std::to_string(q) + ")");
  LieTable lifted = T.with_modulus(q);
  if (auto bad = lifted.jacobi_violation())
    throw JacobiFailure("Jacobi identity fails after reinterpretation over GF(" + std::to_string(q) + ")", *bad);
  return NilAlgebra(std::move(lifted), L.weights(), L.definitions());
}

NilAlgebra presentation(const NilAlgebra& L, int k) {
  if (k == 0) return L;
  const int n = L.dim(), p = L.p();
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(k));
  std::uniform_int_distribution<int> coeff(0, p - 1);
  Matrix g(p, n, n);
  do {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g(r, c) = static_cast<Elem>(coeff(rng));
  } while (rank(g) < n);
  return normalize(L.table().change_basis(g)).algebra;
}

std::optional<NilAlgebra> reinterpret_any(const NilAlgebra& L, int q, int attempts) {
  for (int k = 0; k <= attempts; ++k) {
    try {
      return reinterpret(presentation(L, k), q);
    } catch (const JacobiFailure&) {
    }
  }
  return std::nullopt;
}

NilAlgebra top_quotient(const NilAlgebra& L) {
  const int c = L.nilpotency_class();
  if (c <= 1) throw DomainError("top quotient of an abelian algebra");
  const int keep = L.layer(c).first;
  LieTable t(L.p(), keep);
  for (int i = 0; i < keep; ++i)
    for (int j = i + 1; j < keep; ++j) {
      std::vector<Term> terms;
      for (const Term& s : L.table().terms(i, j))
        if (s.index < keep) terms.push_back(s);
      if (!terms.empty()) t.set(i, j, std::move(terms));
    }
  std::vector<int> w(L.weights().begin(), L.weights().begin() + keep);
  std::vector<std::optional<Definition>> d(L.definitions().begin(), L.definitions().begin() + keep);
  return NilAlgebra(std::move(t), std::move(w), std::move(d));
}

Matrix extend_by_definitions(const NilAlgebra& L, const LieTable& target, const std::vector<Vec>& gen_images) {
  const int n = L.dim();
  if (static_cast<int>(gen_images.size()) != L.num_generators())
    throw DomainError("one image per generator is required");
  Matrix m(target.p(), n, target.dim());
  for (int i = 0; i < n; ++i) {
    Vec v;
    if (L.weights()[i] == 1) {
      v = gen_images[i];
    } else {
      const Definition& d = *L.definitions()[i];
      v = target.bracket(m.row(d.left), m.row(d.right));
    }
    if (static_cast<int>(v.size()) != target.dim()) throw DomainError("image vector length mismatch");
    std::copy(v.begin(), v.end(), m.row(i).begin());
  }
  return m;
}

bool is_homomorphism(const LieTable& source, const LieTable& target, const Matrix& m) {
  const int n = source.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec lhs = vec_mul(source.product(i, j), m);
      Vec rhs = target.bracket(m.row(i), m.row(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace nilgen
