#include "pavsec/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace pavsec {

Permutation::Permutation(std::vector<int> entries) : v_(std::move(entries)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("Permutation: empty");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : v_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) {
      throw std::invalid_argument("Permutation: entries must be a bijection on 1.." +
                                  std::to_string(n));
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::trusted(std::vector<int> entries) {
  return Permutation(std::move(entries), trusted_tag{});
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v_[i]);
  }
  return out;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("Permutation: cannot parse \"" + std::string(text) + "\"");
    }
    entries.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return Permutation(std::move(entries));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.entries().rbegin(), p.entries().rend());
  return Permutation::trusted(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int x : p.entries()) v.push_back(n + 1 - x);
  return Permutation::trusted(std::move(v));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(p[i] - 1)] = i + 1;
  return Permutation::trusted(std::move(v));
}

}  // namespace pavsec
