#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pavsec {

// One-line notation over ranks 1..n; rank n is the best item.
class Permutation {
 public:
  explicit Permutation(std::vector<int> entries);  // validates a bijection on 1..n

  // Skips validation; for internal producers whose output is a permutation
  // by construction.
  static Permutation trusted(std::vector<int> entries);

  int size() const { return static_cast<int>(v_.size()); }
  int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }  // 0-based
  const std::vector<int>& entries() const { return v_; }

  std::string str() const;  // comma separated, e.g. "2,4,1,3"
  static Permutation parse(std::string_view text);

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.v_ < b.v_; }

 private:
  struct trusted_tag {};
  Permutation(std::vector<int> entries, trusted_tag) : v_(std::move(entries)) {}
  std::vector<int> v_;
};

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

}  // namespace pavsec
