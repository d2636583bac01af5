#include "nilgen/stab_chain.hpp"

#include "nilgen/errors.hpp"

namespace nilgen {

StabChain::StabChain(int p, int n) : p_(p), n_(n) { Field::get(p); }

std::uint64_t StabChain::code(std::span<const Elem> v) const {
  std::uint64_t c = 0;
  for (int i = n_ - 1; i >= 0; --i) c = c * p_ + v[i];
  return c;
}

std::pair<Matrix, int> StabChain::sift(const Matrix& g) const {
  Matrix h = g;
  for (int k = 0; k < static_cast<int>(levels_.size()); ++k) {
    const Level& lv = levels_[k];
    auto it = lv.where.find(code(vec_mul(lv.point, h)));
    if (it == lv.where.end()) return {h, k};
    h = h * lv.uinv[it->second];
  }
  return {h, static_cast<int>(levels_.size())};
}

bool StabChain::contains(const Matrix& g) const {
  auto [h, k] = sift(g);
  return k == static_cast<int>(levels_.size()) && h.is_identity();
}

void StabChain::extend_orbit(int level) {
  Level& lv = levels_[level];
  // Re-close the orbit under all generators that fix the earlier base points.
  std::vector<int> active;
  for (int g = 0; g < static_cast<int>(gens_.size()); ++g)
    if (gen_level_[g] >= level) active.push_back(g);
  for (std::size_t pos = 0; pos < lv.orbit.size(); ++pos) {
    for (int g : active) {
      Vec img = vec_mul(vec_mul(lv.point, lv.u[pos]), gens_[g]);
      std::uint64_t c = code(img);
      if (lv.where.count(c)) continue;
      Matrix u = lv.u[pos] * gens_[g];
      lv.where.emplace(c, static_cast<int>(lv.orbit.size()));
      lv.orbit.push_back(c);
      lv.uinv.push_back(*inverse(u));
      lv.u.push_back(std::move(u));
    }
  }
}

bool StabChain::add(const Matrix& g) {
  if (g.rows() != n_ || g.cols() != n_ || g.p() != p_) throw DomainError("generator shape mismatch");
  auto [h, k] = sift(g);
  if (k == static_cast<int>(levels_.size())) {
    if (h.is_identity()) return false;
    Level lv;
    lv.point.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      Vec e(n_, 0);
      e[i] = 1;
      if (vec_mul(e, h) != e) {
        lv.point = e;
        break;
      }
    }
    lv.orbit.push_back(code(lv.point));
    lv.where.emplace(lv.orbit.back(), 0);
    lv.u.push_back(Matrix::identity(p_, n_));
    lv.uinv.push_back(Matrix::identity(p_, n_));
    levels_.push_back(std::move(lv));
  }
  gens_.push_back(h);
  gen_level_.push_back(k);
  for (int lvl = 0; lvl <= k; ++lvl) extend_orbit(lvl);
  return true;
}

void StabChain::complete() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = static_cast<int>(levels_.size()) - 1; k >= 0 && !changed; --k) {
      for (std::size_t pos = 0; pos < levels_[k].orbit.size() && !changed; ++pos) {
        for (int g = 0; g < static_cast<int>(gens_.size()) && !changed; ++g) {
          if (gen_level_[g] < k) continue;
          const Level& lv = levels_[k];
          Matrix ug = lv.u[pos] * gens_[g];
          auto it = lv.where.find(code(vec_mul(lv.point, ug)));
          Matrix schreier = ug * lv.uinv[it->second];
          if (add(schreier)) changed = true;
        }
      }
    }
  }
}

BigInt StabChain::order() const {
  BigInt o = 1;
  for (const Level& lv : levels_) o *= lv.orbit.size();
  return o;
}

BigInt group_order(int p, int n, const std::vector<Matrix>& gens) {
  StabChain sc(p, n);
  for (const Matrix& g : gens) sc.add(g);
  sc.complete();
  return sc.order();
}

}  // namespace nilgen
