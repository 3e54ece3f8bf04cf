#include "bicyclic/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace bicyclic {

Int remainder(Int y, Int m) {
  if (m < 1) throw std::invalid_argument("remainder: modulus must be >= 1");
  Int r = y % m;
  return r < 0 ? r + m : r;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("invalid partition parameters: ") + what);
}

ColorClass band_color(const PartitionRule::DiagonalBand& p, Element x) {
  const Int m = p.a - p.c;
  const Int r = remainder(x.b(), m);
  bool in_a = (p.a - 2 * p.c) / 2 <= r && r <= (2 * p.a - 3 * p.c - 1) / 2;
  if (in_a && x.a() + x.b() == 0) {
    // excluded ray (a/2 + k(a-c), -a/2 - k(a-c)), k >= 0
    const Int v = x.a();
    if (v >= p.a / 2 && (v - p.a / 2) % m == 0) in_a = false;
  }
  return in_a ? ColorClass::A : ColorClass::B;
}

ColorClass idem_row_color(const PartitionRule::IdempotentRow& p, Element x) {
  const Int y = x.b();
  if (y == 0) return x.a() < p.a ? ColorClass::A : ColorClass::B;
  const Int m = p.d > 0 ? p.d : -p.d;
  const Int r = remainder(y, m);
  bool phi_zero;
  if (p.d > 0)
    phi_zero = (0 < r && r <= (m - 1) / 2) || (r == 0 && y < 0);
  else
    phi_zero = (0 < r && r <= (m - 1) / 2) || (r == 0 && y > 0);
  return phi_zero ? ColorClass::A : ColorClass::B;
}

ColorClass zero_row_color(const PartitionRule::ZeroRow& p, Element x) {
  const Int y = x.b();
  const Int m = p.d > 0 ? p.d : -p.d;
  bool in_a = remainder(y, m) <= (m - 1) / 2;
  if (in_a && y != 0) {
    // excluded ray y = k*d, k >= 1
    if (p.d > 0 ? (y > 0 && y % p.d == 0) : (y < 0 && y % p.d == 0)) in_a = false;
  }
  return in_a ? ColorClass::A : ColorClass::B;
}

// Forest 2-coloring for {(a,-a),(0,0)}: diagonal chains alternate through
// the column elements (0,x) that close identity products, and every other
// vertex hangs off exactly one diagonal.
ColorClass diag_identity_color(const PartitionRule::DiagonalIdentity& p, Element x) {
  const Int a = p.a;
  const Int y = x.b();
  if (x.a() + y == 0) {
    const Int v = x.a();
    const Int r = remainder(v, a);
    return (v == 0 || (1 <= r && r <= a / 2)) ? ColorClass::A : ColorClass::B;
  }
  const Int r = remainder(y, a);
  if (x.a() == 0)
    return (r == 0 || r > a / 2) ? ColorClass::A : ColorClass::B;
  return ((r == 0 && y >= 0) || r > a / 2) ? ColorClass::A : ColorClass::B;
}

}  // namespace

PartitionRule PartitionRule::parity() { return PartitionRule(Rep{Parity{}}); }

PartitionRule PartitionRule::diagonal_band(Int a, Int c) {
  require(a >= 2 && a % 2 == 0, "a must be even and >= 2");
  require(c % 2 != 0, "c must be odd");
  require(0 < c && 2 * c <= a, "requires 0 < c <= a/2");
  return PartitionRule(Rep{DiagonalBand{a, c}});
}

PartitionRule PartitionRule::idempotent_row(Int a, Int d) {
  require(a >= 1, "a must be >= 1");
  require(d % 2 != 0, "d must be odd");
  require(d < a, "requires d < a");
  return PartitionRule(Rep{IdempotentRow{a, d}});
}

PartitionRule PartitionRule::zero_row(Int d) {
  require(d % 2 != 0, "d must be odd");
  return PartitionRule(Rep{ZeroRow{d}});
}

PartitionRule PartitionRule::diagonal_identity(Int a) {
  require(a >= 4 && a % 4 == 0, "a must be a positive multiple of 4");
  return PartitionRule(Rep{DiagonalIdentity{a}});
}

PartitionRule PartitionRule::explicit_map(std::map<Element, ColorClass> colors) {
  return PartitionRule(Rep{Explicit{std::move(colors)}});
}

PartitionRule PartitionRule::starred(PartitionRule inner) {
  return PartitionRule(Rep{Starred{std::make_shared<PartitionRule>(std::move(inner))}});
}

ColorClass PartitionRule::color(Element x) const {
  return std::visit(
      [&](const auto& p) -> ColorClass {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Parity>) {
          return x.b() % 2 == 0 ? ColorClass::A : ColorClass::B;
        } else if constexpr (std::is_same_v<T, DiagonalBand>) {
          return band_color(p, x);
        } else if constexpr (std::is_same_v<T, IdempotentRow>) {
          return idem_row_color(p, x);
        } else if constexpr (std::is_same_v<T, ZeroRow>) {
          return zero_row_color(p, x);
        } else if constexpr (std::is_same_v<T, DiagonalIdentity>) {
          return diag_identity_color(p, x);
        } else if constexpr (std::is_same_v<T, Explicit>) {
          auto it = p.colors.find(x);
          if (it == p.colors.end())
            throw std::invalid_argument("explicit coloring has no entry for " + to_string(x));
          return it->second;
        } else {
          static_assert(std::is_same_v<T, Starred>);
          return p.inner->color(star(x));
        }
      },
      rep_);
}

std::string PartitionRule::descriptor() const {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, Parity>) {
          os << "parity";
        } else if constexpr (std::is_same_v<T, DiagonalBand>) {
          os << "D:a=" << p.a << ",c=" << p.c;
        } else if constexpr (std::is_same_v<T, IdempotentRow>) {
          os << "E:a=" << p.a << ",d=" << p.d;
        } else if constexpr (std::is_same_v<T, ZeroRow>) {
          os << "Z:d=" << p.d;
        } else if constexpr (std::is_same_v<T, DiagonalIdentity>) {
          os << "DZ:a=" << p.a;
        } else if constexpr (std::is_same_v<T, Explicit>) {
          os << "explicit[" << p.colors.size() << "]";
        } else {
          static_assert(std::is_same_v<T, Starred>);
          os << "star:" << p.inner->descriptor();
        }
        return os.str();
      },
      rep_);
}

namespace {

Int parse_param(std::string_view text, std::size_t& pos, char name) {
  if (pos >= text.size() || text[pos] != name)
    throw std::invalid_argument(std::string("rule descriptor: expected parameter '") + name + "'");
  ++pos;
  if (pos >= text.size() || text[pos] != '=')
    throw std::invalid_argument("rule descriptor: expected '='");
  ++pos;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw std::invalid_argument("rule descriptor: malformed integer");
  Int value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    value = value * 10 + (text[pos++] - '0');
  return neg ? -value : value;
}

void expect_char(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c)
    throw std::invalid_argument(std::string("rule descriptor: expected '") + c + "'");
  ++pos;
}

}  // namespace

PartitionRule PartitionRule::parse(std::string_view text) {
  if (text == "parity") return parity();
  if (text.rfind("star:", 0) == 0) return starred(parse(text.substr(5)));
  std::size_t pos = 0;
  if (text.rfind("DZ:", 0) == 0) {
    pos = 3;
    Int a = parse_param(text, pos, 'a');
    if (pos != text.size()) throw std::invalid_argument("rule descriptor: trailing characters");
    return diagonal_identity(a);
  }
  if (text.rfind("D:", 0) == 0) {
    pos = 2;
    Int a = parse_param(text, pos, 'a');
    expect_char(text, pos, ',');
    Int c = parse_param(text, pos, 'c');
    if (pos != text.size()) throw std::invalid_argument("rule descriptor: trailing characters");
    return diagonal_band(a, c);
  }
  if (text.rfind("E:", 0) == 0) {
    pos = 2;
    Int a = parse_param(text, pos, 'a');
    expect_char(text, pos, ',');
    Int d = parse_param(text, pos, 'd');
    if (pos != text.size()) throw std::invalid_argument("rule descriptor: trailing characters");
    return idempotent_row(a, d);
  }
  if (text.rfind("Z:", 0) == 0) {
    pos = 2;
    Int d = parse_param(text, pos, 'd');
    if (pos != text.size()) throw std::invalid_argument("rule descriptor: trailing characters");
    return zero_row(d);
  }
  throw std::invalid_argument("unknown partition rule descriptor: \"" + std::string(text) + "\"");
}

PartitionRule star_partition(const PartitionRule& rule) {
  // Simplifications keep the result closed-form where possible: parity is
  // self-adjoint and star is an involution.
  if (std::holds_alternative<PartitionRule::Parity>(rule.rep())) return rule;
  if (const auto* s = std::get_if<PartitionRule::Starred>(&rule.rep())) return *s->inner;
  if (const auto* e = std::get_if<PartitionRule::Explicit>(&rule.rep())) {
    std::map<Element, ColorClass> out;
    for (const auto& [x, c] : e->colors) out[star(x)] = c;
    return PartitionRule::explicit_map(std::move(out));
  }
  return PartitionRule::starred(rule);
}

std::string render_grid(const PartitionRule& rule, Int row_lo, Int row_hi, Int col_lo,
                        Int col_hi) {
  if (row_lo > row_hi || col_lo > col_hi)
    throw std::invalid_argument("render_grid: empty range");
  std::string out;
  out.reserve(static_cast<std::size_t>(row_hi - row_lo + 1) *
              static_cast<std::size_t>(col_hi - col_lo + 2));
  for (Int x = row_lo; x <= row_hi; ++x) {
    for (Int y = col_lo; y <= col_hi; ++y) {
      if (x < 0 || x + y < 0) {
        out += '.';
      } else {
        out += rule.color(Element(x, y)) == ColorClass::A ? '0' : '1';
      }
    }
    out += '\n';
  }
  return out;
}

std::optional<Violation> partition_violation(const PartitionRule& rule, const TargetSet& target,
                                             const Window& window) {
  const auto& elems = window.elements();
  std::vector<ColorClass> colors;
  colors.reserve(elems.size());
  for (Element x : elems) colors.push_back(rule.color(x));
  // Ordered pairs: checking both st and ts costs little and catches
  // asymmetric product bugs.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j || colors[i] != colors[j]) continue;
      Element p = elems[i] * elems[j];
      if (target.contains(p)) return Violation{elems[i], elems[j], p};
    }
  }
  return std::nullopt;
}

}  // namespace bicyclic
