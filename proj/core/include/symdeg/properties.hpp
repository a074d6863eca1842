#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symdeg/partition.hpp"
#include "symdeg/sympoly.hpp"

namespace symdeg {

/// Value of a partial Boolean property on one input class.
enum class Label { One, Zero, Undefined };

[[nodiscard]] std::string_view label_name(Label label);
/// Accepts "One", "Zero", "Undefined". Throws std::invalid_argument otherwise.
[[nodiscard]] Label parse_label(std::string_view text);

/// A property of f:[n] -> [m] invariant under permutations of domain and range.
///
/// Symmetry holds by construction: the rule only ever sees the canonical
/// frequency class of f.
class PropertySpec {
 public:
  using Rule = std::function<Label(const FrequencyVector&)>;

  /// requires_full_range: the property compares against one-to-one functions
  /// and therefore needs m >= n.
  PropertySpec(std::string name, Rule rule, bool requires_full_range, std::optional<int> fixed_n = std::nullopt);

  static PropertySpec collision();
  static PropertySpec element_distinctness();
  /// One-to-one versus some value with at least three preimages.
  static PropertySpec modified_element_distinctness();
  static PropertySpec always_one();

  /// Property given by an explicit class table for a fixed n; unlisted classes
  /// are Undefined. Throws std::invalid_argument on wrong weights or duplicates.
  static PropertySpec from_classes(std::string name, int n, const std::vector<std::pair<Partition, Label>>& classes);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] bool requires_full_range() const { return requires_full_range_; }
  [[nodiscard]] std::optional<int> fixed_n() const { return fixed_n_; }

  /// Throws std::invalid_argument if the property is defined only for a different n.
  [[nodiscard]] Label classify(const FrequencyVector& z) const;

 private:
  std::string name_;
  Rule rule_;
  bool requires_full_range_;
  std::optional<int> fixed_n_;
};

/// Looks up a built-in by name ("ed", "element_distinctness", "collision",
/// "modified-ed", "modified_element_distinctness", "always-one", "always_one").
[[nodiscard]] PropertySpec builtin_property(std::string_view name);

/// Throws std::invalid_argument unless (n, m) is a meaningful instance for prop.
void check_dimensions(const PropertySpec& prop, int n, int m);

struct LabeledClass {
  Partition partition;
  Label label;
};

/// Every partition of n with at most min(n, m) parts, reverse-lexicographic, with its label.
[[nodiscard]] std::vector<LabeledClass> enumerate_classes(const PropertySpec& prop, int n, int m);

}  // namespace symdeg
