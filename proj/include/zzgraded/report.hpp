#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zzgraded/element.hpp"

namespace zzg {

struct Witness {
  std::vector<std::int64_t> indices;  // flattened index tuple
  std::string offending;              // printed offending element or polynomial
};

/// Outcome of an exhaustive sweep. Empty witnesses iff the check passed.
struct ViolationReport {
  std::string check;
  std::vector<Witness> witnesses;
  std::size_t checked_count = 0;

  bool passed() const { return witnesses.empty(); }
  /// Concatenates another report over a disjoint part of the same sweep.
  ViolationReport& merge(const ViolationReport& other);
};

std::vector<std::int64_t> flatten(std::initializer_list<GradedIndex> idx);

}  // namespace zzg
