#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace nilgen {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt ipow(int base, int exp);

/// Narrowing conversion; nullopt when v does not fit.
std::optional<std::uint64_t> to_u64(const BigInt& v);

}  // namespace nilgen
