#pragma once

#include <string>
#include <vector>

#include "pretop/bits.hpp"

namespace pretop {

// Carrier set: n distinct point labels, points addressed by index 0..n-1.
struct universe_t {
  std::vector<std::string> labels;

  universe_t() = default;
  explicit universe_t(std::vector<std::string> ls);  // validates, throws bad_input

  int size() const { return static_cast<int>(labels.size()); }
  mask_t all() const { return full_mask(size()); }

  int index_of(const std::string& label) const;  // -1 when absent
  const std::string& label(int i) const { return labels[i]; }

  std::vector<std::string> mask_labels(mask_t m) const;
  mask_t mask_of(const std::vector<std::string>& ls) const;  // throws bad_input

  friend bool operator==(const universe_t&, const universe_t&) = default;
};

}  // namespace pretop
