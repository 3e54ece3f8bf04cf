#include "bicyclic/target_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicyclic {

TargetSet::TargetSet(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  rep_ = std::move(elements);
}

const std::vector<Element>& TargetSet::elements() const {
  if (!is_finite()) throw std::logic_error("target set is a family, not a finite set");
  return std::get<std::vector<Element>>(rep_);
}

const MaximalFamily& TargetSet::family() const {
  if (is_finite()) throw std::logic_error("target set is finite, not a family");
  return std::get<MaximalFamily>(rep_);
}

bool TargetSet::contains(Element x) const {
  if (is_finite()) {
    const auto& es = std::get<std::vector<Element>>(rep_);
    return std::binary_search(es.begin(), es.end(), x);
  }
  return std::get<MaximalFamily>(rep_).contains(x);
}

TargetSet TargetSet::star() const {
  if (is_finite()) {
    std::vector<Element> starred;
    starred.reserve(elements().size());
    for (Element x : elements()) starred.push_back(bicyclic::star(x));
    return TargetSet(std::move(starred));
  }
  return TargetSet(family().star());
}

std::string TargetSet::to_string() const {
  if (is_finite()) return format_elements(elements());
  return "family " + bicyclic::to_string(family());
}

}  // namespace bicyclic
