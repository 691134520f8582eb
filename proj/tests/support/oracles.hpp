#pragma once

// Independent recomputations used to pin down expected values. These stick
// to definitions (convolution, Pascal triangle, explicit path scans) and
// deliberately share no code with the library routines they check.

#include "pavsec/bigint.hpp"
#include "pavsec/dyck.hpp"

#include <vector>

namespace oracle {

// C_0..C_n by the convolution C_k = sum_j C_{j-1} C_{k-j}.
inline std::vector<pavsec::BigInt> catalan_convolution(unsigned n) {
  std::vector<pavsec::BigInt> c{1};
  for (unsigned k = 1; k <= n; ++k) {
    pavsec::BigInt sum = 0;
    for (unsigned j = 1; j <= k; ++j) sum += c[j - 1] * c[k - j];
    c.push_back(sum);
  }
  return c;
}

// Pascal triangle row n.
inline std::vector<pavsec::BigInt> pascal_row(unsigned n) {
  std::vector<pavsec::BigInt> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<pavsec::BigInt> next(r + 1, 1);
    for (unsigned k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return row;
}

// Every Dyck path of semilength n, by backtracking over steps.
inline std::vector<pavsec::DyckPath> all_dyck_paths(int n) {
  std::vector<pavsec::DyckPath> out;
  std::vector<std::int8_t> steps;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      out.push_back(pavsec::DyckPath{steps});
      return;
    }
    if (ups < n) {
      steps.push_back(1);
      self(self, ups + 1, downs);
      steps.pop_back();
    }
    if (downs < ups) {
      steps.push_back(-1);
      self(self, ups, downs + 1);
      steps.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace oracle
