#include "symdeg/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symdeg {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  // Larger parts first within a weight.
  return b.parts_ <=> a.parts_;
}

namespace {

void generate(int remaining, int max_part, int parts_left, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // Remaining weight must fit in the parts still available.
    if (static_cast<long>(p) * parts_left < remaining) break;
    prefix.push_back(p);
    generate(remaining - p, p, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, std::max(max_parts, 0), prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_parts) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto layer = partitions_of(w, max_parts);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k) os << ',';
    os << p.parts()[k];
  }
  return os << ')';
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace symdeg
