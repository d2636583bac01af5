#pragma once

#include <cstdint>
#include <vector>

namespace nilgen {

/// A residue in GF(p); p never exceeds 251 so a byte suffices.
using Elem = std::uint8_t;

inline constexpr int kMaxPrime = 251;

bool is_prime(int n);

/// Arithmetic tables for a prime field GF(p), 2 <= p <= 251.
///
/// Instances are created once per prime and shared; obtain one with
/// Field::get(). All member functions are const and thread-safe.
class Field {
 public:
  static const Field& get(int p);

  int p() const { return p_; }

  Elem add(Elem a, Elem b) const {
    int s = a + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const {
    int s = a - b;
    return static_cast<Elem>(s < 0 ? s + p_ : s);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(p_ - a); }
  Elem mul(Elem a, Elem b) const { return mul_[a * p_ + b]; }
  /// Inverse of a nonzero element.
  Elem inv(Elem a) const { return inv_[a]; }
  Elem reduce(long long v) const {
    long long r = v % p_;
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  /// Smallest generator of the multiplicative group.
  Elem primitive_root() const { return primitive_root_; }

 private:
  explicit Field(int p);

  int p_;
  Elem primitive_root_ = 1;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
};

}  // namespace nilgen
