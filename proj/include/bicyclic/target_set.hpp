#ifndef BICYCLIC_TARGET_SET_HPP
#define BICYCLIC_TARGET_SET_HPP

#include <string>
#include <variant>
#include <vector>

#include "bicyclic/element.hpp"
#include "bicyclic/family.hpp"

namespace bicyclic {

/// A set of elements whose avoidability is in question: either an explicit
/// finite set or one of the parameterized maximal families. Membership is
/// decidable for any element of the monoid, including products that leave
/// whatever window is being swept.
class TargetSet {
public:
  TargetSet() : rep_(std::vector<Element>{}) {}
  explicit TargetSet(std::vector<Element> elements);  // sorted, deduplicated
  explicit TargetSet(const MaximalFamily& family) : rep_(family) {}

  bool is_finite() const { return std::holds_alternative<std::vector<Element>>(rep_); }
  const std::vector<Element>& elements() const;  // finite sets only
  const MaximalFamily& family() const;           // family sets only

  bool contains(Element x) const;
  TargetSet star() const;

  std::string to_string() const;

private:
  std::variant<std::vector<Element>, MaximalFamily> rep_;
};

}  // namespace bicyclic

#endif
