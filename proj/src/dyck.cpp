#include "pavsec/dyck.hpp"

#include <stdexcept>

namespace pavsec {

bool DyckPath::valid() const {
  if (steps.size() % 2 != 0) return false;
  int height = 0;
  for (std::int8_t s : steps) {
    if (s != 1 && s != -1) return false;
    height += s;
    if (height < 0) return false;
  }
  return height == 0;
}

Permutation dyck_to_321(const DyckPath& path) {
  if (!path.valid()) throw std::invalid_argument("dyck_to_321: malformed path");
  const int n = path.semilength();
  if (n == 0) throw std::invalid_argument("dyck_to_321: empty path");
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  std::vector<bool> value_used(static_cast<std::size_t>(n + 1), false);
  int ups = 0;
  int downs = 0;
  for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
    if (path.steps[i] == 1) {
      ++ups;
    } else {
      ++downs;
      if (path.steps[i + 1] == 1) {  // valley
        const int position = downs;  // 1-based
        const int value = ups + 1;   // counts the up that ends the valley
        out[static_cast<std::size_t>(position - 1)] = value;
        value_used[static_cast<std::size_t>(value)] = true;
      }
    }
  }
  int next_value = 1;
  for (int pos = 0; pos < n; ++pos) {
    if (out[static_cast<std::size_t>(pos)] != 0) continue;
    while (value_used[static_cast<std::size_t>(next_value)]) ++next_value;
    out[static_cast<std::size_t>(pos)] = next_value++;
  }
  return Permutation::trusted(std::move(out));
}

}  // namespace pavsec
