#ifndef BICYCLIC_FAMILY_HPP
#define BICYCLIC_FAMILY_HPP

#include <string>
#include <string_view>

#include "bicyclic/element.hpp"

namespace bicyclic {

// The parameterized maximal avoidable families. Codes 'a'..'g' are the
// classification's seven families; 'h' and 'i' are the two families the
// seven miss (a diagonal element whose half is even, paired with the
// identity, and its adjoint mirror) -- without them the decision procedure
// would misclassify sets like {(4,-4),(0,0)}.
enum class FamilyKind {
  AllOdd,              // a: every odd element
  RowWithIdentity,     // b: {(0,0)} + all (e,d) for a fixed odd d
  RowBelowIdempotent,  // c: {(a,0),(0,0)} + {(c,d) : max(c,c+d) < a}, d odd, d < a
  DiagonalPair,        // d: {(a,-a),(c,-c)}, a even, c odd, 0 < c < a/2
  DiagonalHalfTriple,  // e: {(a,-a),(a/2,-a/2),(0,0)}, a/2 odd
  ColumnPair,          // f: {(0,b),(0,d)}, b even, d odd, 0 < d < b/2
  ColumnHalfTriple,    // g: {(0,b),(0,b/2),(0,0)}, b/2 odd
  DiagonalWithIdentity,  // h: {(a,-a),(0,0)}, a divisible by 4
  ColumnWithIdentity,    // i: {(0,b),(0,0)}, b divisible by 4
};

class MaximalFamily {
public:
  static MaximalFamily all_odd();
  static MaximalFamily row_with_identity(Int d);
  static MaximalFamily row_below_idempotent(Int a, Int d);
  static MaximalFamily diagonal_pair(Int a, Int c);
  static MaximalFamily diagonal_half_triple(Int a);
  static MaximalFamily column_pair(Int b, Int d);
  static MaximalFamily column_half_triple(Int b);
  static MaximalFamily diagonal_with_identity(Int a);
  static MaximalFamily column_with_identity(Int b);

  FamilyKind kind() const { return kind_; }
  // Leading parameter: a on the diagonal/idempotent side, b on the column
  // side, d for RowWithIdentity. Zero when the kind has no parameters.
  Int big() const { return big_; }
  // Secondary parameter (c or d) for the two-parameter kinds.
  Int small() const { return small_; }

  bool contains(Element x) const;
  MaximalFamily star() const;

  friend bool operator==(const MaximalFamily&, const MaximalFamily&) = default;

private:
  MaximalFamily(FamilyKind kind, Int big, Int small);

  FamilyKind kind_;
  Int big_;
  Int small_;
};

char family_code(FamilyKind kind);  // 'a'..'i'

// Descriptor syntax: "a", "b:d=5", "c:a=6,d=5", "d:a=8,c=3", "e:a=6",
// "f:b=8,d=3", "g:b=6", "h:a=4", "i:b=4".
std::string to_string(const MaximalFamily& fam);
MaximalFamily parse_family(std::string_view text);

}  // namespace bicyclic

#endif
