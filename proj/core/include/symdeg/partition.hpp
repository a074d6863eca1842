#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace symdeg {

/// Integer partition: non-increasing list of positive parts.
///
/// Ordering is graded: by weight first, then reverse-lexicographic within a
/// weight, so (), (1), (2), (1,1), (3), (2,1), (1,1,1), ...
class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order; throws std::invalid_argument on a part < 1.
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int weight() const { return weight_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Partitions of n with at most max_parts parts, reverse-lexicographic: (3), (2,1), (1,1,1).
[[nodiscard]] std::vector<Partition> partitions_of(int n, int max_parts);

/// All partitions of weight <= max_weight with at most max_parts parts, in graded order.
[[nodiscard]] std::vector<Partition> partitions_up_to(int max_weight, int max_parts);

std::ostream& operator<<(std::ostream& os, const Partition& p);
[[nodiscard]] std::string to_string(const Partition& p);

}  // namespace symdeg
