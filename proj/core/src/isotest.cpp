#include "nilgen/isotest.hpp"

#include "nilgen/errors.hpp"

namespace nilgen {

std::optional<std::vector<int>> orbit_membership(const GroupAction& action, std::uint64_t j1, std::uint64_t j2,
                                                 std::uint64_t max_points) {
  SingleOrbit orb(action, j1, max_points, j2);
  if (!orb.contains(j2)) return std::nullopt;
  return orb.word(j2);
}

namespace {

int layer_of(const std::vector<Subspace>& lcs, std::span<const Elem> x) {
  int k = 0;
  while (k + 1 < static_cast<int>(lcs.size()) && lcs[k + 1].contains(x)) ++k;
  return k;
}

}  // namespace

std::vector<long long> fingerprint(const NilAlgebra& L) {
  const int n = L.dim(), p = L.p();
  const LieTable& T = L.table();
  std::vector<long long> fp;
  TypeSymbol ts = type_symbol(L);
  fp.push_back(n);
  fp.insert(fp.end(), ts.factors.begin(), ts.factors.end());
  fp.push_back(-1);
  fp.push_back(ts.center_dim);
  auto lcs = lower_central_series(L);
  Subspace z = center(L);
  for (const Subspace& g : lcs) {
    // dim(gamma_k meet Z) = dim gamma_k + dim Z - dim(gamma_k + Z)
    fp.push_back(g.dim() + z.dim() - g.sum(z).dim());
    // Centraliser of gamma_k: x with [x, g] = 0 for g in a basis of gamma_k.
    Matrix stacked(p, n * std::max(1, g.dim()), n);
    for (int r = 0; r < g.dim(); ++r)
      for (int i = 0; i < n; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        Vec b = T.bracket(v, g.basis().row(r));
        for (int k = 0; k < n; ++k) stacked(r * n + k, i) = b[k];
      }
    fp.push_back(nullspace(stacked).dim());
  }
  // Derived algebra of the derived algebra.
  if (lcs.size() > 1) {
    const Subspace& d1 = lcs[1];
    std::vector<Vec> rows;
    for (int a = 0; a < d1.dim(); ++a)
      for (int b = a + 1; b < d1.dim(); ++b) rows.push_back(T.bracket(d1.basis().row(a), d1.basis().row(b)));
    fp.push_back(rows.empty() ? 0 : Subspace::from_span(Matrix::from_rows(p, n, rows)).dim());
  }
  // Histogram of (layer of x, rank of ad x) over all nonzero x.
  double points = 1;
  for (int i = 0; i < n; ++i) points *= p;
  if (points <= (1 << 21)) {
    const int c = L.nilpotency_class();
    std::vector<Matrix> ad;  // ad[i] rows j: [b_i, b_j]
    for (int i = 0; i < n; ++i) {
      Matrix m(p, n, n);
      for (int j = 0; j < n; ++j) {
        Vec v = T.product(i, j);
        std::copy(v.begin(), v.end(), m.row(j).begin());
      }
      ad.push_back(std::move(m));
    }
    std::vector<long long> hist(static_cast<std::size_t>(c + 1) * (n + 1), 0);
    const Field& f = Field::get(p);
    Vec x(n, 0);
    Matrix adx(p, n, n);
    for (long long code = 1; code < static_cast<long long>(points); ++code) {
      for (int i = 0; i < n; ++i) {
        if (x[i] + 1 < p) {
          ++x[i];
          break;
        }
        x[i] = 0;
      }
      adx = Matrix(p, n, n);
      for (int i = 0; i < n; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (ad[i](j, k)) adx(j, k) = f.add(adx(j, k), f.mul(x[i], ad[i](j, k)));
      }
      hist[layer_of(lcs, x) * (n + 1) + rank(adx)]++;
    }
    fp.push_back(-2);
    fp.insert(fp.end(), hist.begin(), hist.end());

    // Histogram of (deepest gamma_k not killed by phi, rank of (x,y) -> phi([x,y]))
    // over all nonzero functionals phi.
    std::vector<long long> forms(static_cast<std::size_t>(c + 1) * (n + 1), 0);
    Vec phi(n, 0);
    Matrix form(p, n, n);
    for (long long code = 1; code < static_cast<long long>(points); ++code) {
      for (int i = 0; i < n; ++i) {
        if (phi[i] + 1 < p) {
          ++phi[i];
          break;
        }
        phi[i] = 0;
      }
      int depth = 0;
      for (int k = 0; k < static_cast<int>(lcs.size()); ++k) {
        const Matrix& b = lcs[k].basis();
        bool kills = true;
        for (int r = 0; r < b.rows() && kills; ++r) {
          Elem acc = 0;
          for (int t = 0; t < n; ++t) acc = f.add(acc, f.mul(phi[t], b(r, t)));
          kills = acc == 0;
        }
        if (!kills) depth = k + 1;
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Elem acc = 0;
          for (int k = 0; k < n; ++k)
            if (ad[i](j, k)) acc = f.add(acc, f.mul(phi[k], ad[i](j, k)));
          form(i, j) = acc;
        }
      forms[depth * (n + 1) + rank(form)]++;
    }
    fp.push_back(-3);
    fp.insert(fp.end(), forms.begin(), forms.end());
  }
  return fp;
}

bool verify_witness(const NilAlgebra& A, const NilAlgebra& B, const Matrix& m) {
  if (A.dim() != B.dim() || m.rows() != A.dim() || m.cols() != B.dim()) return false;
  return inverse(m).has_value() && is_homomorphism(A.table(), B.table(), m);
}

std::string presentation_key(const NilAlgebra& L) {
  std::string k;
  k.push_back(static_cast<char>(L.p()));
  k.push_back(static_cast<char>(L.dim()));
  for (int w : L.weights()) k.push_back(static_cast<char>(w));
  for (const auto& d : L.definitions()) {
    k.push_back(static_cast<char>(d ? d->left : 255));
    k.push_back(static_cast<char>(d ? d->right : 255));
  }
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      for (const Term& t : L.table().terms(i, j)) {
        k.push_back(static_cast<char>(t.index));
        k.push_back(static_cast<char>(t.coeff));
      }
      k.push_back(static_cast<char>(255));
    }
  return k;
}

const CoverData& IsoTester::cover(const NilAlgebra& Q) {
  auto& slot = covers_[presentation_key(Q)];
  if (!slot) slot = std::make_unique<CoverData>(compute_cover(Q));
  return *slot;
}

const std::vector<long long>& IsoTester::fingerprint_of(const NilAlgebra& L) {
  auto key = presentation_key(L);
  auto it = prints_.find(key);
  if (it == prints_.end()) it = prints_.emplace(key, fingerprint(L)).first;
  return it->second;
}

AutGroup IsoTester::automorphism_group(const NilAlgebra& L) {
  const std::string key = presentation_key(L);
  if (auto it = auts_.find(key); it != auts_.end()) return it->second;
  AutGroup result;
  if (L.nilpotency_class() <= 1) {
    result = gl_generators(L.p(), L.dim());
  } else {
    NilAlgebra Q = top_quotient(L);
    AutGroup aq = automorphism_group(Q);
    const CoverData& cd = cover(Q);
    DescendantMap dm = descendant_map(cd, L);
    AllowableSpace space(cd, L.dim() - Q.dim());
    GroupAction action(space, aq.gens, mult_representation(cd, aq.gens));
    SingleOrbit orb(action, space.index_of(dm.kernel), opts_.max_orbit);
    result = assemble_descendant_aut(aq, L, orb.stabiliser(*aq.order), BigInt(orb.size()));
  }
  auts_.emplace(key, result);
  return result;
}

IsoResult IsoTester::test(const NilAlgebra& A, const NilAlgebra& B) {
  if (A.p() != B.p()) throw DomainError("isomorphism test needs algebras over the same field");
  if (A.dim() != B.dim()) return {IsoOutcome::NotIsomorphic, std::nullopt, "dimensions differ"};
  if (A == B) return {IsoOutcome::Isomorphic, Matrix::identity(A.p(), A.dim()), "identical presentations"};
  if (type_symbol(A) != type_symbol(B)) return {IsoOutcome::NotIsomorphic, std::nullopt, "types differ"};
  if (fingerprint_of(A) != fingerprint_of(B)) return {IsoOutcome::NotIsomorphic, std::nullopt, "invariants differ"};
  if (A.nilpotency_class() <= 1) return {IsoOutcome::Isomorphic, Matrix::identity(A.p(), A.dim()), "abelian"};

  NilAlgebra qa = top_quotient(A), qb = top_quotient(B);
  IsoResult top = test(qa, qb);
  if (top.outcome != IsoOutcome::Isomorphic) return top;
  const Matrix& phi = *top.witness;

  try {
    const CoverData& ca = cover(qa);
    const CoverData& cb = cover(qb);
    DescendantMap da = descendant_map(ca, A);
    DescendantMap db = descendant_map(cb, B);
    std::vector<Vec> imgs;
    for (int i = 0; i < qa.num_generators(); ++i) {
      Vec v(cb.table.dim(), 0);
      std::copy(phi.row(i).begin(), phi.row(i).end(), v.begin());
      imgs.push_back(std::move(v));
    }
    Matrix phi_star = lift_map(ca, cb.table, imgs);
    Matrix to_b = phi_star * db.projection;
    Subspace j_b = nullspace(to_b.block(ca.n(), 0, ca.m(), B.dim()).transpose());
    const int s = A.dim() - qa.dim();
    if (j_b.dim() != ca.m() - s) throw ConsistencyError("transported subspace has the wrong dimension");

    AutGroup aq = automorphism_group(qa);
    AllowableSpace space(ca, s);
    GroupAction action(space, aq.gens, mult_representation(ca, aq.gens));
    auto word = orbit_membership(action, space.index_of(da.kernel), space.index_of(j_b), opts_.max_orbit);
    if (!word) return {IsoOutcome::NotIsomorphic, std::nullopt, "subspaces lie in different orbits"};

    Matrix g = Matrix::identity(qa.p(), qa.dim());
    for (int k : *word) g = g * action.gen(k);
    Matrix full = lift_automorphism(ca, g) * to_b;
    std::vector<Vec> gen_imgs;
    for (int i = 0; i < A.num_generators(); ++i) gen_imgs.push_back(full.row_vec(i));
    Matrix w = extend_by_definitions(A, B.table(), gen_imgs);
    if (!verify_witness(A, B, w)) throw ConsistencyError("constructed isomorphism fails verification");
    return {IsoOutcome::Isomorphic, std::move(w), ""};
  } catch (const CeilingExceeded& e) {
    return {IsoOutcome::Undecided, std::nullopt, e.what()};
  }
}

IsoResult are_isomorphic(const NilAlgebra& A, const NilAlgebra& B, IsoOptions opts) {
  IsoTester t(opts);
  return t.test(A, B);
}

AutGroup automorphism_group(const NilAlgebra& L, IsoOptions opts) {
  IsoTester t(opts);
  return t.automorphism_group(L);
}

}  // namespace nilgen
