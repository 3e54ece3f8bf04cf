#ifndef BICYCLIC_WINDOW_HPP
#define BICYCLIC_WINDOW_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bicyclic/element.hpp"

namespace bicyclic {

/// The finite truncation {(a,b) : 0 <= a <= n, 0 <= a+b <= n} of the monoid,
/// listed in lexicographic order of (a, a+b). It has (n+1)^2 elements, is
/// closed under the adjoint, and exhausts the monoid as n grows, which makes
/// it the stage for every exhaustive check in this library.
class Window {
public:
  explicit Window(int n);

  int bound() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& at(std::size_t i) const { return elements_[i]; }

  bool contains(Element x) const;
  // Dense index a*(n+1) + (a+b); O(1), absent for elements outside.
  std::optional<std::size_t> index_of(Element x) const;

private:
  int n_;
  std::vector<Element> elements_;
};

}  // namespace bicyclic

#endif
