#include "bicyclic/element.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bicyclic {

Int checked_add(Int x, Int y) {
  Int out;
  if (__builtin_add_overflow(x, y, &out))
    throw std::overflow_error("integer overflow in bicyclic arithmetic");
  return out;
}

Int checked_sub(Int x, Int y) {
  Int out;
  if (__builtin_sub_overflow(x, y, &out))
    throw std::overflow_error("integer overflow in bicyclic arithmetic");
  return out;
}

Int checked_neg(Int x) { return checked_sub(0, x); }

Element::Element(Int a, Int b) : a_(a), b_(b) {
  if (a < 0 || checked_add(a, b) < 0) {
    std::ostringstream msg;
    msg << "(" << a << "," << b << ") is not an element of B: requires a >= 0 and a+b >= 0";
    throw std::invalid_argument(msg.str());
  }
}

Element multiply(Element x, Element y) {
  const Int cd = checked_add(y.a(), y.b());
  const Int first = checked_sub(std::max(cd, x.a()), y.b());
  const Int second = checked_add(x.b(), y.b());
  return Element(first, second);
}

Element star(Element x) { return Element(checked_add(x.a(), x.b()), checked_neg(x.b())); }

std::optional<Int> apply_shift(Element x, Int n) {
  if (n < 0) throw std::invalid_argument("apply_shift: point must be nonnegative");
  if (n < x.a()) return std::nullopt;
  return checked_add(n, x.b());
}

Parity parity(Element x) { return x.b() % 2 == 0 ? Parity::Even : Parity::Odd; }

EvenClass classify_even(Element x) {
  const Int a = x.a(), b = x.b();
  if (b % 2 != 0) return EvenClass::Odd;
  if (a == 0 && b == 0) return EvenClass::Identity;
  if (b == -a && a >= 2) return EvenClass::EvenDiagonal;
  if (b == 0 && a >= 1) return EvenClass::Idempotent;
  if (a == 0 && b >= 2) return EvenClass::EvenColumn;
  return EvenClass::InteriorEven;
}

Element evaluate_word(const std::vector<Letter>& word) {
  if (word.empty()) throw std::invalid_argument("evaluate_word: empty word");
  const Element gen(0, 1);
  auto letter = [&](Letter l) { return l == Letter::Gen ? gen : star(gen); };
  Element acc = letter(word.front());
  for (std::size_t i = 1; i < word.size(); ++i) acc = acc * letter(word[i]);
  return acc;
}

std::vector<Letter> parse_word(std::string_view text) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != 'G' && c != 'g')
      throw std::invalid_argument("parse_word: expected 'G' or 'G*'");
    if (i + 1 < text.size() && text[i + 1] == '*') {
      out.push_back(Letter::GenStar);
      ++i;
    } else {
      out.push_back(Letter::Gen);
    }
  }
  if (out.empty()) throw std::invalid_argument("parse_word: empty word");
  return out;
}

std::string to_string(Element x) {
  std::ostringstream os;
  os << "(" << x.a() << "," << x.b() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Element x) { return os << to_string(x); }

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

Int parse_int(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  Int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos || pos == start)
    throw std::invalid_argument("malformed integer in element");
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != c) {
    std::ostringstream msg;
    msg << "malformed element, expected '" << c << "' in \"" << std::string(text) << "\"";
    throw std::invalid_argument(msg.str());
  }
  ++pos;
}

Element parse_element_at(std::string_view text, std::size_t& pos) {
  expect(text, pos, '(');
  const Int a = parse_int(text, pos);
  expect(text, pos, ',');
  const Int b = parse_int(text, pos);
  expect(text, pos, ')');
  return Element(a, b);
}

}  // namespace

Element parse_element(std::string_view text) {
  std::size_t pos = 0;
  Element x = parse_element_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("trailing characters after element: \"" + std::string(text) + "\"");
  return x;
}

std::vector<Element> parse_element_list(std::string_view text) {
  std::vector<Element> out;
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size()) return out;  // empty list
  for (;;) {
    out.push_back(parse_element_at(text, pos));
    skip_ws(text, pos);
    if (pos == text.size()) break;
    expect(text, pos, ';');
    skip_ws(text, pos);
    if (pos == text.size()) break;  // tolerate trailing separator
  }
  return out;
}

std::string format_elements(const std::vector<Element>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << "; ";
    os << xs[i];
  }
  return os.str();
}

}  // namespace bicyclic
