#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pftlab/finite_space.hpp"
#include "pftlab/poset.hpp"
#include "pftlab/subset.hpp"

namespace pftlab {

/// Outcome of checking that an explicit order is a bounded distributive
/// lattice. `witness` names the offending elements when a check fails.
struct LatticeReport {
  bool bounded = false;
  bool lattice = false;
  bool distributive = false;
  std::vector<std::size_t> witness;
  std::string message;

  bool valid() const { return bounded && lattice && distributive; }
};

/// Checks boundedness, existence of all binary meets/joins and the finite
/// distributive law over all triples.
LatticeReport check_lattice(const FinitePoset& order);

/// A finite bounded distributive lattice, hence a frame and a complete
/// Heyting algebra.
///
/// The canonical form is Up(P): every element is stored as an upset of a
/// base poset P, so ∧ and ∨ are intersection and union and ≤ is inclusion.
/// Lattices entered as an explicit order are validated, their
/// join-irreducibles J extracted and re-represented with P = J^op. Carrier
/// order and element names follow the input.
class FiniteLattice {
 public:
  /// The one-element lattice.
  FiniteLattice();

  /// Birkhoff: all upsets of P under inclusion, in canonical subset order.
  /// Elements are named "{a,b,...}" after their points.
  static FiniteLattice from_poset(const FinitePoset& p);
  /// Explicit order. Throws InvalidModel carrying the LatticeReport message
  /// when `order` is not a bounded distributive lattice.
  static FiniteLattice from_order(const FinitePoset& order);

  std::size_t size() const { return upsets_.size(); }
  Subset carrier() const { return Subset::full(size()); }
  const std::string& name(std::size_t a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  bool leq(std::size_t a, std::size_t b) const { return upsets_[a].subset_of(upsets_[b]); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t implies(std::size_t a, std::size_t b) const { return implies_[a * size() + b]; }
  std::size_t negate(std::size_t a) const { return implies(a, bottom_); }

  /// ⋀S, with ⋀∅ = 1.
  std::size_t meet_all(Subset s) const;
  /// ⋁S, with ⋁∅ = 0.
  std::size_t join_all(Subset s) const;
  /// ↑a and ↓a as subsets of the carrier.
  Subset principal_up(std::size_t a) const;
  Subset principal_down(std::size_t a) const;

  /// The base poset P with this lattice ≅ Up(P).
  const FinitePoset& base() const { return base_; }
  /// The upset of base() representing element a.
  Subset representation(std::size_t a) const { return upsets_.at(a); }
  std::optional<std::size_t> element_of(Subset upset) const;

  /// The lattice order as a poset over the carrier.
  FinitePoset order() const;

  bool operator==(const FiniteLattice& other) const;

 private:
  FiniteLattice(FinitePoset base, std::vector<Subset> upsets, std::vector<std::string> names);

  FinitePoset base_;
  std::vector<Subset> upsets_;
  std::vector<std::string> names_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> implies_;
};

/// Re-checks a constructed lattice from its tables: ∧/∨ are glb/lub of ≤,
/// bounds are correct and every triple distributes.
LatticeReport validate(const FiniteLattice& l);

/// The largest x with a ∧ x ≤ b, found by scanning the carrier (the
/// definition of →). Independent of the cached table.
std::size_t implication_by_scan(const FiniteLattice& l, std::size_t a, std::size_t b);

bool is_boolean(const FiniteLattice& l);
/// The complement of a, when it exists.
std::optional<std::size_t> complement(const FiniteLattice& l, std::size_t a);

/// p ≠ 1 with a ∧ b ≤ p ⇒ a ≤ p or b ≤ p.
Subset meet_primes(const FiniteLattice& l);
/// j ≠ 0 with j ≤ a ∨ b ⇒ j ≤ a or j ≤ b. In a distributive lattice these
/// are the join-irreducibles.
Subset join_irreducibles(const FiniteLattice& l);

struct Filter {
  Subset members;
  bool prime = false;
  bool completely_prime = false;

  bool operator==(const Filter&) const = default;
};

/// Nonempty, upward closed and closed under binary meets.
bool is_filter(const FiniteLattice& l, Subset f);
/// A proper filter with a ∨ b ∈ F ⇒ a ∈ F or b ∈ F.
bool is_prime_filter(const FiniteLattice& l, Subset f);
/// A proper filter with ⋁S ∈ F ⇒ some s ∈ F, checked for every S ⊆ L
/// through the equivalent closure of L∖F under all joins.
bool is_completely_prime_filter(const FiniteLattice& l, Subset f);

/// Prime filters, generated as the principal filters ↑j at join-irreducible
/// j and checked against the definition. Sorted canonically.
std::vector<Filter> prime_filters(const FiniteLattice& l);
/// Completely prime filters, generated independently as the complements
/// L∖↓p at meet-prime p and checked against the definition.
std::vector<Filter> completely_prime_filters(const FiniteLattice& l);
/// The filter {a : a ≰ p} attached to a meet-prime p.
Subset filter_of_meet_prime(const FiniteLattice& l, std::size_t p);

/// pt(L) with opens η(a) = {x : a ∈ x}. Points are named "x" + generator.
FiniteSpace points_space(const FiniteLattice& l);

struct SpatialWitness {
  bool spatial = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  // a ≰ b not separated
};

SpatialWitness is_spatial(const FiniteLattice& l);

/// Least d ≥ a with d → a = a, if any.
std::optional<std::size_t> smallest_dense(const FiniteLattice& l, std::size_t a);
bool is_scattered_frame(const FiniteLattice& l);

/// Minimal members of the meet-primes above a.
Subset min_primes(const FiniteLattice& l, std::size_t a);

struct EssentialPrimes {
  bool meet_of_min_is_a = false;  // a = ⋀Min(a); essential primes are only defined then
  Subset primes;
};

EssentialPrimes essential_primes(const FiniteLattice& l, std::size_t a);

/// A sublattice-shaped quotient: its own lattice plus, for each element, the
/// source element it came from.
struct Embedded {
  FiniteLattice lattice;
  std::vector<std::size_t> source;
};

/// `elements` under the order induced from l, validated as a lattice in its
/// own right (its joins need not be those of l).
Embedded induced_lattice(const FiniteLattice& l, Subset elements);

/// B(L): the image of ¬¬, verified boolean.
Embedded booleanization(const FiniteLattice& l);

/// A lattice isomorphism between two lattices, as an element map, or nullopt.
std::optional<std::vector<std::size_t>> find_lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace pftlab
