#include "bicyclic/window.hpp"

#include <stdexcept>

namespace bicyclic {

Window::Window(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("window bound must be nonnegative");
  elements_.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (Int a = 0; a <= n; ++a)
    for (Int s = 0; s <= n; ++s)  // s = a+b
      elements_.emplace_back(a, s - a);
}

bool Window::contains(Element x) const {
  return x.a() <= n_ && x.a() + x.b() <= n_;
}

std::optional<std::size_t> Window::index_of(Element x) const {
  if (!contains(x)) return std::nullopt;
  return static_cast<std::size_t>(x.a()) * (n_ + 1) + static_cast<std::size_t>(x.a() + x.b());
}

}  // namespace bicyclic
