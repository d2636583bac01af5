#include "nilgen/field.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "nilgen/errors.hpp"

namespace nilgen {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(int p) : p_(p), mul_(p * p), inv_(p, 0) {
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) mul_[a * p + b] = static_cast<Elem>(a * b % p);
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) inv_[a] = static_cast<Elem>(b);
  for (int g = 1; g < p; ++g) {
    int x = 1, order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) {
      primitive_root_ = static_cast<Elem>(g);
      break;
    }
  }
}

const Field& Field::get(int p) {
  static std::array<std::unique_ptr<Field>, kMaxPrime + 1> cache;
  static std::mutex mu;
  if (p < 2 || p > kMaxPrime || !is_prime(p))
    throw DomainError("unsupported field size " + std::to_string(p) +
                      " (need a prime 2 <= p <= 251)");
  std::lock_guard lock(mu);
  if (!cache[p]) cache[p].reset(new Field(p));
  return *cache[p];
}

}  // namespace nilgen
