#include "zzgraded/report.hpp"

namespace zzg {

ViolationReport& ViolationReport::merge(const ViolationReport& other) {
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  checked_count += other.checked_count;
  return *this;
}

std::vector<std::int64_t> flatten(std::initializer_list<GradedIndex> idx) {
  std::vector<std::int64_t> out;
  for (auto g : idx) {
    out.push_back(g.i);
    out.push_back(g.j);
  }
  return out;
}

}  // namespace zzg
