#ifndef BICYCLIC_WITNESS_HPP
#define BICYCLIC_WITNESS_HPP

#include <string>
#include <vector>

#include "bicyclic/element.hpp"
#include "bicyclic/target_set.hpp"

namespace bicyclic {

/// An explicit odd cycle in the associated graph of a target set. Each
/// constructor below handles one shape of provably unavoidable set and
/// returns a cycle whose consecutive products all land in the target.
/// A repeated non-consecutive vertex is allowed: an odd closed walk with
/// distinct consecutive vertices already rules out a bipartition.
struct Witness {
  std::vector<Element> cycle;
  TargetSet target;
  std::string provenance;
};

/// Triangle for a single even element (a,b) with b != 0, a >= 1, a+b >= 1
/// (the "interior" even elements that no avoidable set may contain).
Witness witness_interior_even(Int a, Int b);

/// Triangle for {(a,-a),(c,d)} where (a,-a) is an even diagonal element
/// and c+d >= 1.
Witness witness_diag_nondiag(Int a, Int c, Int d);

/// Triangle for {(a,-a),(c,-c)} where a is even >= 2, c > a/2, c != a.
Witness witness_diag_pair(Int a, Int c);

/// Triangle for {(a,-a),(c,-c),(e,-e)} with 0 < c < e <= a/2, c and e odd.
Witness witness_diag_odd_triple(Int a, Int c, Int e);

/// Five-cycle for {(a,-a),(c,-c),(0,0)} with 0 < c < a/2.
Witness witness_diag_identity(Int a, Int c);

/// Triangle for {(a,0),(c,d)} where max(c,c+d) >= a and (c,d) != (a,0).
Witness witness_idem_reach(Int a, Int c, Int d);

/// Five-cycle for {(a,0),(c,d),(e,f)} with d,f odd and distinct and both
/// rows reaching strictly below a. Swaps the rows so d < f.
Witness witness_idem_odd_rows(Int a, Int c, Int d, Int e, Int f);

/// Five-cycle for {(0,0),(c,d),(e,f)} with d,f odd and distinct. Swaps the
/// rows so d < f.
Witness witness_identity_odd_rows(Int c, Int d, Int e, Int f);

/// Adjoints of an odd cycle for U* form an odd cycle for U.
Witness star_witness(const Witness& w);

/// Re-checks the witness invariants from scratch: odd length >= 3, every
/// vertex in the monoid, consecutive vertices distinct (wrapping), each
/// consecutive product in the target in one order or the other, and full
/// distinctness for triangles. Uses only multiplication and membership,
/// never the constructors' formulas.
bool validate(const Witness& w);

std::string witness_to_text(const Witness& w);

}  // namespace bicyclic

#endif
