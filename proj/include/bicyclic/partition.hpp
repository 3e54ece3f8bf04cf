#ifndef BICYCLIC_PARTITION_HPP
#define BICYCLIC_PARTITION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bicyclic/element.hpp"
#include "bicyclic/target_set.hpp"
#include "bicyclic/window.hpp"

namespace bicyclic {

/// Remainder of y modulo m in [0, m-1], for any sign of y. m must be >= 1.
Int remainder(Int y, Int m);

enum class ColorClass : std::uint8_t { A, B };

/// A two-class partition of the whole monoid, given as a closed-form rule
/// (or an explicit finite map). Each rule is the avoiding partition for one
/// family of target sets; partition_violation checks that claim on a window.
class PartitionRule {
public:
  struct Parity {};

  // Class A is a band of residues of y mod (a-c) with the ray
  // (a/2 + k(a-c), -a/2 - k(a-c)), k >= 0, carved out. Avoids
  // {(a,-a),(c,-c)} for odd c < a/2 and {(a,-a),(a/2,-a/2),(0,0)}
  // when c = a/2 is odd.
  struct DiagonalBand {
    Int a;
    Int c;
  };

  // Class A collects the rows y with phi(y) = 0 plus the idempotents
  // below a. Avoids {(a,0),(0,0)} together with the full d-row of reach
  // below a.
  struct IdempotentRow {
    Int a;
    Int d;
  };

  // Class A is a residue band of y mod |d| minus the ray of positive
  // multiples of d. Avoids {(0,0)} plus the full d-row.
  struct ZeroRow {
    Int d;
  };

  // Avoids {(a,-a),(0,0)} for a divisible by 4 (the sets the seven-family
  // classification misses). Derived from the component structure of the
  // associated graph, which is a forest for these targets.
  struct DiagonalIdentity {
    Int a;
  };

  struct Explicit {
    std::map<Element, ColorClass> colors;
  };

  // Colors x by the inner rule's color of x*.
  struct Starred {
    std::shared_ptr<const PartitionRule> inner;
  };

  static PartitionRule parity();
  static PartitionRule diagonal_band(Int a, Int c);
  static PartitionRule idempotent_row(Int a, Int d);
  static PartitionRule zero_row(Int d);
  static PartitionRule diagonal_identity(Int a);
  static PartitionRule explicit_map(std::map<Element, ColorClass> colors);
  static PartitionRule starred(PartitionRule inner);

  ColorClass color(Element x) const;

  // Descriptor syntax: "parity", "D:a=8,c=3", "E:a=6,d=5", "Z:d=5",
  // "DZ:a=4", and "star:<descriptor>".
  std::string descriptor() const;
  static PartitionRule parse(std::string_view text);

  const auto& rep() const { return rep_; }

private:
  using Rep = std::variant<Parity, DiagonalBand, IdempotentRow, ZeroRow, DiagonalIdentity,
                           Explicit, Starred>;
  explicit PartitionRule(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

/// color(x) of the result equals color(x*) of the input everywhere.
PartitionRule star_partition(const PartitionRule& rule);

/// One character per cell, rows indexed by x (first coordinate, ascending),
/// columns by y: '0' for class A, '1' for class B, '.' outside the monoid.
std::string render_grid(const PartitionRule& rule, Int row_lo, Int row_hi, Int col_lo,
                        Int col_hi);

struct Violation {
  Element s;
  Element t;
  Element product;  // s*t, an element of the target set
};

/// Scans every ordered pair of distinct window elements with equal colors
/// and reports the first pair (in window order) whose product lands in the
/// target set; absent means the partition avoids the set on this window.
std::optional<Violation> partition_violation(const PartitionRule& rule, const TargetSet& target,
                                             const Window& window);

inline bool partition_avoids(const PartitionRule& rule, const TargetSet& target,
                             const Window& window) {
  return !partition_violation(rule, target, window).has_value();
}

}  // namespace bicyclic

#endif
