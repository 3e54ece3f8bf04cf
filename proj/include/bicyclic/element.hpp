#ifndef BICYCLIC_ELEMENT_HPP
#define BICYCLIC_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bicyclic {

using Int = std::int64_t;

// Overflow-checked arithmetic. All constructions in the library stay tiny,
// but parameter sweeps must fail loudly instead of wrapping.
Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_neg(Int x);

/// An element (a,b) of the bicyclic monoid: a >= 0 and a+b >= 0.
///
/// The element acts on the nonnegative integers as the partial bijection
/// that shifts {n : n >= a} by b. Multiplication composes these maps with
/// the right factor applied first.
class Element {
public:
  constexpr Element() = default;  // identity (0,0)
  Element(Int a, Int b);          // throws std::invalid_argument outside the monoid

  constexpr Int a() const { return a_; }
  constexpr Int b() const { return b_; }

  friend constexpr bool operator==(const Element&, const Element&) = default;
  friend constexpr auto operator<=>(const Element&, const Element&) = default;

private:
  Int a_ = 0;
  Int b_ = 0;
};

enum class Parity { Even, Odd };

// Where an element sits in the even/odd taxonomy. Only the identity,
// even diagonal elements (a,-a), idempotents (a,0) and even column
// elements (0,b) can belong to an avoidable set; every other even
// element is forbidden on its own, and the InteriorEven tag lets the
// classifier report why.
enum class EvenClass {
  Identity,      // (0,0)
  EvenDiagonal,  // (a,-a) with a >= 2 even
  Idempotent,    // (a,0) with a >= 1
  EvenColumn,    // (0,b) with b >= 2 even
  InteriorEven,  // even but none of the above
  Odd,
};

/// (a,b)(c,d) = (max{c+d,a}-d, b+d). Total on the monoid.
Element multiply(Element x, Element y);
inline Element operator*(Element x, Element y) { return multiply(x, y); }

/// Adjoint (a,b)* = (a+b,-b); involutive, (xy)* = y* x*.
Element star(Element x);

/// Action of x on n >= 0: n+b when n >= a, absent otherwise.
std::optional<Int> apply_shift(Element x, Int n);

Parity parity(Element x);
EvenClass classify_even(Element x);

// The monoid is generated by G = (0,1) together with its adjoint.
enum class Letter { Gen, GenStar };

Element evaluate_word(const std::vector<Letter>& word);  // nonempty, left-to-right
std::vector<Letter> parse_word(std::string_view text);   // e.g. "GG*G"

std::string to_string(Element x);
std::ostream& operator<<(std::ostream& os, Element x);

// Text syntax "(a,b)" with optional whitespace; lists separated by ';'.
Element parse_element(std::string_view text);
std::vector<Element> parse_element_list(std::string_view text);
std::string format_elements(const std::vector<Element>& xs);

}  // namespace bicyclic

#endif
