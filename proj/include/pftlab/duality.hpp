#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pftlab/bounds.hpp"
#include "pftlab/heyting.hpp"
#include "pftlab/poset.hpp"

namespace pftlab {

/// A finite Esakia space: a poset carrying the discrete topology (every
/// finite Priestley space is discrete). When built from a lattice, point i
/// is the prime filter `filters[i]` and the order is inclusion.
struct EsakiaSpace {
  static constexpr std::string_view topology = "discrete";

  FinitePoset order;
  std::vector<Filter> filters;

  std::size_t size() const { return order.size(); }
  Subset carrier() const { return order.carrier(); }
};

/// X_L: prime filters of L ordered by inclusion, named "x" + ⋀F.
EsakiaSpace dual_space(const FiniteLattice& l);
/// The space on a bare poset (no filter back-references).
EsakiaSpace esakia_space(const FinitePoset& p);

/// φ(a) = {x ∈ X_L : a ∈ x}.
Subset phi(const EsakiaSpace& x, std::size_t a);

/// Literal check outcome. `literal` is false when the subset quantification
/// was replaced by the finite-discrete shortcut because |X| exceeded the
/// literal-check bound.
struct TopologyCheck {
  bool holds = true;
  bool literal = true;
};

// Topology of (X, π). The space is discrete, so these reduce to carrier
// membership; they exist so that definitions can be stated literally.
bool is_clopen(const EsakiaSpace& x, Subset s);
Subset closure_pi(const EsakiaSpace& x, Subset s);
Subset interior_pi(const EsakiaSpace& x, Subset s);
bool is_regular_closed_pi(const EsakiaSpace& x, Subset s);

/// x ≰ y ⇒ some clopen upset contains x and misses y (witness X∖↓y).
bool priestley_separation(const EsakiaSpace& x);
/// ↓U clopen for every clopen U.
TopologyCheck esakia_condition(const EsakiaSpace& x, const Bounds& bounds = {});
/// The closure of every open upset is clopen.
TopologyCheck extremally_order_disconnected(const EsakiaSpace& x, const Bounds& bounds = {});

/// U(X): all (clopen) upsets of X.
FiniteLattice upset_algebra(const EsakiaSpace& x);
/// U → V = X ∖ ↓(U ∖ V).
Subset upset_implication(const EsakiaSpace& x, Subset u, Subset v);

/// A lattice together with its dual space and the unit φ, with φ⁻¹ lookups.
class Dual {
 public:
  explicit Dual(FiniteLattice l);

  const FiniteLattice& lattice() const { return lattice_; }
  const EsakiaSpace& space() const { return space_; }
  std::size_t points() const { return space_.size(); }
  Subset carrier() const { return space_.carrier(); }
  Subset phi(std::size_t a) const { return phi_.at(a); }
  /// The element whose φ is `upset`, if any.
  std::optional<std::size_t> element_of(Subset upset) const;

 private:
  FiniteLattice lattice_;
  EsakiaSpace space_;
  std::vector<Subset> phi_;
};

struct UnitCounitReport {
  bool phi_bijective = false;
  bool phi_preserves_bounds = false;
  bool phi_preserves_meet = false;
  bool phi_preserves_join = false;
  bool phi_preserves_implication = false;  // φ(a→b) = X ∖ ↓(φ(a) ∖ φ(b))
  bool upset_implication_agrees = false;   // formula → equals the sup definition in U(X)
  bool xi_isomorphism = false;             // ξ : X ≅ X_{U(X)}
  bool base_isomorphism = false;           // X_L ≅ base poset of the canonical form
  TopologyCheck priestley;
  TopologyCheck esakia;
  TopologyCheck extremal;
  std::string witness;

  bool ok() const;
};

UnitCounitReport unit_counit_check(const FiniteLattice& l, const Bounds& bounds = {});

}  // namespace pftlab
