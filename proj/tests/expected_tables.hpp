#pragma once

#include <map>
#include <string>

namespace nilgen::testing {

using TypeCounts = std::map<std::string, int>;

/// Type counts of the dimension-6 algebras over GF(2).
inline TypeCounts dim6_f2() {
  return {{"[6][6]", 1},          {"[5,1][4]", 1},         {"[5,1][2]", 1},      {"[4,2][3]", 1},
          {"[4,2][2]", 3},        {"[4,1,1][3]", 1},       {"[4,1,1][2]", 1},    {"[4,1,1][1]", 1},
          {"[3,3][3]", 1},        {"[3,2,1][2]", 3},       {"[3,2,1][1]", 3},    {"[3,1,2][3]", 1},
          {"[3,1,2][2]", 3},      {"[3,1,1,1][2]", 2},     {"[3,1,1,1][1]", 4},  {"[2,1,2,1][2]", 1},
          {"[2,1,2,1][1]", 2},    {"[2,1,1,1,1][1]", 6}};
}

/// Dimension 6 over GF(3) and GF(5).
inline TypeCounts dim6_odd() {
  TypeCounts t = dim6_f2();
  t["[3,1,1,1][1]"] = 3;
  t["[2,1,1,1,1][1]"] = 5;
  return t;
}

inline TypeCounts dim7_f2() {
  return {{"[7][7]", 1},           {"[6,1][5]", 1},          {"[6,1][3]", 1},          {"[6,1][1]", 1},
          {"[5,2][4]", 1},         {"[5,2][3]", 3},          {"[5,2][2]", 2},          {"[5,1,1][4]", 1},
          {"[5,1,1][3]", 1},       {"[5,1,1][2]", 1},        {"[5,1,1][1]", 1},        {"[4,3][4]", 1},
          {"[4,3][3]", 5},         {"[4,2,1][3]", 3},        {"[4,2,1][2]", 12},       {"[4,2,1][1]", 9},
          {"[4,1,2][4]", 1},       {"[4,1,2][3]", 3},        {"[4,1,2][2]", 5},        {"[4,1,1,1][3]", 2},
          {"[4,1,1,1][2]", 4},     {"[4,1,1,1][1]", 5},      {"[3,3,1][3]", 1},        {"[3,3,1][2]", 3},
          {"[3,3,1][1]", 2},       {"[3,2,2][3]", 2},        {"[3,2,2][2]", 21},       {"[3,2,1,1][2]", 9},
          {"[3,2,1,1][1]", 13},    {"[3,1,2,1][3]", 1},      {"[3,1,2,1][2]", 11},     {"[3,1,2,1][1]", 8},
          {"[3,1,1,1,1][2]", 6},   {"[3,1,1,1,1][1]", 21},   {"[2,1,2,2][2]", 3},      {"[2,1,2,1,1][2]", 4},
          {"[2,1,2,1,1][1]", 14},  {"[2,1,1,1,2][2]", 4},    {"[2,1,1,1,1,1][1]", 15}};
}

inline TypeCounts dim7_f3() {
  TypeCounts t = dim7_f2();
  t["[4,1,1,1][2]"] = 3;
  t["[3,3,1][1]"] = 5;
  t["[3,2,1,1][2]"] = 8;
  t["[3,2,1,1][1]"] = 14;
  t["[3,1,2,1][2]"] = 10;
  t["[3,1,2,1][1]"] = 12;
  t["[3,1,1,1,1][2]"] = 5;
  t["[3,1,1,1,1][1]"] = 17;
  t["[2,1,2,1,1][1]"] = 16;
  t["[2,1,1,1,2][2]"] = 3;
  t["[2,1,1,1,1,1][1]"] = 11;
  return t;
}

inline TypeCounts dim7_f5() {
  TypeCounts t = dim7_f3();
  t["[3,3,1][1]"] = 6;
  t["[3,2,1,1][1]"] = 18;
  t["[3,1,2,1][1]"] = 16;
  t["[3,1,1,1,1][1]"] = 16;
  t["[2,1,2,1,1][1]"] = 18;
  t["[2,1,1,1,1,1][1]"] = 13;
  return t;
}

inline int total(const TypeCounts& t) {
  int s = 0;
  for (const auto& [k, v] : t) s += v;
  return s;
}

}  // namespace nilgen::testing
