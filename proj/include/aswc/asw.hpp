#pragma once

#include <string>
#include <vector>

#include "aswc/witt.hpp"

namespace aswc {

// One floor of the canonical tower: x_i^p - x_i = rhs_i, where rhs_i may use
// the tower variables x1..x_{i-1} below it.
struct ASWLevel {
  std::string var;
  Poly rhs;
};

struct ASWTower {
  long p = 0;
  int n = 0;
  std::vector<ASWLevel> levels;

  std::string render() const;
};

// Tower for F.x - x = a, solved top-down. Level i carries
//   rhs_i = a_i + (correction polynomial in x1..x_{i-1})
// with the correction extracted from the universal Witt subtraction.
ASWTower build_tower(const WittVec& a);

// a  ->  a + F.b - b (the coboundary ambiguity of the defining vector).
WittVec shift_cocycle(const WittVec& a, const WittVec& b);

// Polynomial-identity check that the shifted equations describe the same
// cover under x -> x + b (Witt sum):  f_minus_id(x + b) = f_minus_id(x) + (F.b - b).
struct ConsistencyRecord {
  WittVec lhs;
  WittVec rhs;
};

ConsistencyRecord substitution_consistency(const WittVec& a, const WittVec& b);

}  // namespace aswc
