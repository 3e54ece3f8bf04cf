#include "bicyclic/family.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace bicyclic {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("invalid family parameters: ") + what);
}

}  // namespace

MaximalFamily::MaximalFamily(FamilyKind kind, Int big, Int small)
    : kind_(kind), big_(big), small_(small) {}

MaximalFamily MaximalFamily::all_odd() { return {FamilyKind::AllOdd, 0, 0}; }

MaximalFamily MaximalFamily::row_with_identity(Int d) {
  require(d % 2 != 0, "row offset d must be odd");
  return {FamilyKind::RowWithIdentity, d, 0};
}

MaximalFamily MaximalFamily::row_below_idempotent(Int a, Int d) {
  require(a >= 1, "idempotent index a must be >= 1");
  require(d % 2 != 0, "row offset d must be odd");
  require(d < a, "requires d < a");
  return {FamilyKind::RowBelowIdempotent, a, d};
}

MaximalFamily MaximalFamily::diagonal_pair(Int a, Int c) {
  require(a >= 2 && a % 2 == 0, "a must be even and >= 2");
  require(c % 2 != 0, "c must be odd");
  require(0 < c && 2 * c < a, "requires 0 < c < a/2");
  return {FamilyKind::DiagonalPair, a, c};
}

MaximalFamily MaximalFamily::diagonal_half_triple(Int a) {
  require(a >= 2 && a % 2 == 0, "a must be even and >= 2");
  require((a / 2) % 2 != 0, "a/2 must be odd");
  return {FamilyKind::DiagonalHalfTriple, a, 0};
}

MaximalFamily MaximalFamily::column_pair(Int b, Int d) {
  require(b >= 2 && b % 2 == 0, "b must be even and >= 2");
  require(d % 2 != 0, "d must be odd");
  require(0 < d && 2 * d < b, "requires 0 < d < b/2");
  return {FamilyKind::ColumnPair, b, d};
}

MaximalFamily MaximalFamily::column_half_triple(Int b) {
  require(b >= 2 && b % 2 == 0, "b must be even and >= 2");
  require((b / 2) % 2 != 0, "b/2 must be odd");
  return {FamilyKind::ColumnHalfTriple, b, 0};
}

MaximalFamily MaximalFamily::diagonal_with_identity(Int a) {
  require(a >= 4 && a % 4 == 0, "a must be a positive multiple of 4");
  return {FamilyKind::DiagonalWithIdentity, a, 0};
}

MaximalFamily MaximalFamily::column_with_identity(Int b) {
  require(b >= 4 && b % 4 == 0, "b must be a positive multiple of 4");
  return {FamilyKind::ColumnWithIdentity, b, 0};
}

bool MaximalFamily::contains(Element x) const {
  const Int a = x.a(), b = x.b();
  switch (kind_) {
    case FamilyKind::AllOdd:
      return b % 2 != 0;
    case FamilyKind::RowWithIdentity:
      return (a == 0 && b == 0) || b == big_;
    case FamilyKind::RowBelowIdempotent:
      if (a == 0 && b == 0) return true;
      if (a == big_ && b == 0) return true;
      return b == small_ && std::max(a, a + b) < big_;
    case FamilyKind::DiagonalPair:
      return x == Element(big_, -big_) || x == Element(small_, -small_);
    case FamilyKind::DiagonalHalfTriple:
      return x == Element(big_, -big_) || x == Element(big_ / 2, -big_ / 2) ||
             x == Element(0, 0);
    case FamilyKind::ColumnPair:
      return x == Element(0, big_) || x == Element(0, small_);
    case FamilyKind::ColumnHalfTriple:
      return x == Element(0, big_) || x == Element(0, big_ / 2) || x == Element(0, 0);
    case FamilyKind::DiagonalWithIdentity:
      return x == Element(big_, -big_) || x == Element(0, 0);
    case FamilyKind::ColumnWithIdentity:
      return x == Element(0, big_) || x == Element(0, 0);
  }
  return false;
}

MaximalFamily MaximalFamily::star() const {
  switch (kind_) {
    case FamilyKind::AllOdd:
      return *this;
    case FamilyKind::RowWithIdentity:
      return row_with_identity(-big_);
    case FamilyKind::RowBelowIdempotent:
      // Adjoints of {(c,d) : max(c,c+d) < a} are exactly {(c,-d) : ...} with
      // the same reach bound, so the family is closed under star with d
      // negated. When -d >= a the row part is empty and the set is its own
      // adjoint.
      return -small_ < big_ ? row_below_idempotent(big_, -small_) : *this;
    case FamilyKind::DiagonalPair:
      return column_pair(big_, small_);
    case FamilyKind::DiagonalHalfTriple:
      return column_half_triple(big_);
    case FamilyKind::ColumnPair:
      return diagonal_pair(big_, small_);
    case FamilyKind::ColumnHalfTriple:
      return diagonal_half_triple(big_);
    case FamilyKind::DiagonalWithIdentity:
      return column_with_identity(big_);
    case FamilyKind::ColumnWithIdentity:
      return diagonal_with_identity(big_);
  }
  throw std::logic_error("unreachable");
}

char family_code(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::AllOdd: return 'a';
    case FamilyKind::RowWithIdentity: return 'b';
    case FamilyKind::RowBelowIdempotent: return 'c';
    case FamilyKind::DiagonalPair: return 'd';
    case FamilyKind::DiagonalHalfTriple: return 'e';
    case FamilyKind::ColumnPair: return 'f';
    case FamilyKind::ColumnHalfTriple: return 'g';
    case FamilyKind::DiagonalWithIdentity: return 'h';
    case FamilyKind::ColumnWithIdentity: return 'i';
  }
  return '?';
}

std::string to_string(const MaximalFamily& fam) {
  std::ostringstream os;
  os << family_code(fam.kind());
  switch (fam.kind()) {
    case FamilyKind::AllOdd:
      break;
    case FamilyKind::RowWithIdentity:
      os << ":d=" << fam.big();
      break;
    case FamilyKind::RowBelowIdempotent:
      os << ":a=" << fam.big() << ",d=" << fam.small();
      break;
    case FamilyKind::DiagonalPair:
      os << ":a=" << fam.big() << ",c=" << fam.small();
      break;
    case FamilyKind::DiagonalHalfTriple:
    case FamilyKind::DiagonalWithIdentity:
      os << ":a=" << fam.big();
      break;
    case FamilyKind::ColumnPair:
      os << ":b=" << fam.big() << ",d=" << fam.small();
      break;
    case FamilyKind::ColumnHalfTriple:
    case FamilyKind::ColumnWithIdentity:
      os << ":b=" << fam.big();
      break;
  }
  return os.str();
}

namespace {

Int parse_named_int(std::string_view text, std::size_t& pos, char name) {
  if (pos >= text.size() || text[pos] != name)
    throw std::invalid_argument(std::string("family descriptor: expected parameter '") + name + "'");
  ++pos;
  if (pos >= text.size() || text[pos] != '=')
    throw std::invalid_argument("family descriptor: expected '='");
  ++pos;
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  Int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos || start == pos)
    throw std::invalid_argument("family descriptor: malformed integer");
  return value;
}

}  // namespace

MaximalFamily parse_family(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty family descriptor");
  const char code = text[0];
  std::size_t pos = 1;
  auto expect_colon = [&] {
    if (pos >= text.size() || text[pos] != ':')
      throw std::invalid_argument("family descriptor: expected ':'");
    ++pos;
  };
  auto expect_comma = [&] {
    if (pos >= text.size() || text[pos] != ',')
      throw std::invalid_argument("family descriptor: expected ','");
    ++pos;
  };
  auto expect_end = [&](MaximalFamily fam) {
    if (pos != text.size())
      throw std::invalid_argument("family descriptor: trailing characters");
    return fam;
  };
  switch (code) {
    case 'a':
      return expect_end(MaximalFamily::all_odd());
    case 'b': {
      expect_colon();
      Int d = parse_named_int(text, pos, 'd');
      return expect_end(MaximalFamily::row_with_identity(d));
    }
    case 'c': {
      expect_colon();
      Int a = parse_named_int(text, pos, 'a');
      expect_comma();
      Int d = parse_named_int(text, pos, 'd');
      return expect_end(MaximalFamily::row_below_idempotent(a, d));
    }
    case 'd': {
      expect_colon();
      Int a = parse_named_int(text, pos, 'a');
      expect_comma();
      Int c = parse_named_int(text, pos, 'c');
      return expect_end(MaximalFamily::diagonal_pair(a, c));
    }
    case 'e': {
      expect_colon();
      Int a = parse_named_int(text, pos, 'a');
      return expect_end(MaximalFamily::diagonal_half_triple(a));
    }
    case 'f': {
      expect_colon();
      Int b = parse_named_int(text, pos, 'b');
      expect_comma();
      Int d = parse_named_int(text, pos, 'd');
      return expect_end(MaximalFamily::column_pair(b, d));
    }
    case 'g': {
      expect_colon();
      Int b = parse_named_int(text, pos, 'b');
      return expect_end(MaximalFamily::column_half_triple(b));
    }
    case 'h': {
      expect_colon();
      Int a = parse_named_int(text, pos, 'a');
      return expect_end(MaximalFamily::diagonal_with_identity(a));
    }
    case 'i': {
      expect_colon();
      Int b = parse_named_int(text, pos, 'b');
      return expect_end(MaximalFamily::column_with_identity(b));
    }
    default:
      throw std::invalid_argument("unknown family code");
  }
}

}  // namespace bicyclic
