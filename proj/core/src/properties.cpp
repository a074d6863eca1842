#include "symdeg/properties.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

namespace symdeg {

std::string_view label_name(Label label) {
  switch (label) {
    case Label::One:
      return "One";
    case Label::Zero:
      return "Zero";
    case Label::Undefined:
      return "Undefined";
  }
  return "Undefined";
}

Label parse_label(std::string_view text) {
  if (text == "One") return Label::One;
  if (text == "Zero") return Label::Zero;
  if (text == "Undefined") return Label::Undefined;
  throw std::invalid_argument("unknown label '" + std::string(text) + "'");
}

PropertySpec::PropertySpec(std::string name, Rule rule, bool requires_full_range, std::optional<int> fixed_n)
    : name_(std::move(name)), rule_(std::move(rule)), requires_full_range_(requires_full_range), fixed_n_(fixed_n) {}

PropertySpec PropertySpec::collision() {
  return PropertySpec(
      "collision",
      [](const FrequencyVector& z) {
        const auto& parts = z.nonzero().parts();
        if (std::all_of(parts.begin(), parts.end(), [](int c) { return c == 1; })) return Label::One;
        if (std::all_of(parts.begin(), parts.end(), [](int c) { return c == 2; })) return Label::Zero;
        return Label::Undefined;
      },
      true);
}

PropertySpec PropertySpec::element_distinctness() {
  return PropertySpec(
      "element_distinctness",
      [](const FrequencyVector& z) { return z.nonzero().largest() > 1 ? Label::Zero : Label::One; }, true);
}

PropertySpec PropertySpec::modified_element_distinctness() {
  return PropertySpec(
      "modified_element_distinctness",
      [](const FrequencyVector& z) {
        const int top = z.nonzero().largest();
        if (top <= 1) return Label::One;
        if (top >= 3) return Label::Zero;
        return Label::Undefined;
      },
      true);
}

PropertySpec PropertySpec::always_one() {
  return PropertySpec("always_one", [](const FrequencyVector&) { return Label::One; }, false);
}

PropertySpec PropertySpec::from_classes(std::string name, int n,
                                        const std::vector<std::pair<Partition, Label>>& classes) {
  if (n < 1) throw std::invalid_argument("property '" + name + "': n must be positive");
  auto table = std::make_shared<std::map<Partition, Label>>();
  for (const auto& [partition, label] : classes) {
    if (partition.weight() != n) {
      throw std::invalid_argument("property '" + name + "': class " + to_string(partition) + " does not have weight " +
                                  std::to_string(n));
    }
    if (!table->emplace(partition, label).second) {
      throw std::invalid_argument("property '" + name + "': class " + to_string(partition) + " listed twice");
    }
  }
  return PropertySpec(
      std::move(name),
      [table](const FrequencyVector& z) {
        auto it = table->find(z.nonzero());
        return it == table->end() ? Label::Undefined : it->second;
      },
      false, n);
}

Label PropertySpec::classify(const FrequencyVector& z) const {
  if (fixed_n_ && z.n() != *fixed_n_) {
    throw std::invalid_argument("property '" + name_ + "' is defined for n=" + std::to_string(*fixed_n_) +
                                " but the class has weight " + std::to_string(z.n()));
  }
  return rule_(z);
}

PropertySpec builtin_property(std::string_view name) {
  if (name == "ed" || name == "element_distinctness" || name == "element-distinctness") {
    return PropertySpec::element_distinctness();
  }
  if (name == "collision") return PropertySpec::collision();
  if (name == "modified-ed" || name == "modified_ed" || name == "modified_element_distinctness" ||
      name == "modified-element-distinctness") {
    return PropertySpec::modified_element_distinctness();
  }
  if (name == "always-one" || name == "always_one") return PropertySpec::always_one();
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

void check_dimensions(const PropertySpec& prop, int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive");
  if (prop.fixed_n() && *prop.fixed_n() != n) {
    throw std::invalid_argument("property '" + prop.name() + "' is defined only for n=" +
                                std::to_string(*prop.fixed_n()));
  }
  if (prop.requires_full_range() && m < n) {
    throw std::invalid_argument("property '" + prop.name() + "' needs m >= n (got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  }
}

std::vector<LabeledClass> enumerate_classes(const PropertySpec& prop, int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("enumerate_classes: n and m must be positive");
  std::vector<LabeledClass> out;
  for (Partition& p : partitions_of(n, std::min(n, m))) {
    const Label label = prop.classify(FrequencyVector(m, p));
    out.push_back({std::move(p), label});
  }
  return out;
}

}  // namespace symdeg
