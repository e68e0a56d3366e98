#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pftlab/assembly.hpp"
#include "pftlab/bounds.hpp"
#include "pftlab/duality.hpp"
#include "pftlab/finite_space.hpp"
#include "pftlab/heyting.hpp"

namespace pftlab {

/// O(S): element i is the open set S.opens()[i], named "{a,b}".
FiniteLattice open_frame(const FiniteSpace& s);

bool is_t0(const FiniteSpace& s);

/// The subspace on `t` with the induced topology; points keep their names.
FiniteSpace subspace(const FiniteSpace& s, Subset t);

struct QuotientMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::size_t> map;
};

struct QuotientCheck {
  bool continuous = false;
  bool open = false;
  bool closed = false;
  bool surjective = false;

  bool ok() const { return continuous && open && closed && surjective; }
};

QuotientCheck check_quotient(const QuotientMap& q);

/// ρ : S → S_0 collapsing x ∼ y iff cl{x} = cl{y}. Classes are ordered by
/// their least point; a singleton class keeps its point's name, a larger
/// one is named "[a,b]".
QuotientMap t0_reflection(const FiniteSpace& s);

/// pt(O S) with ε : S → pt(O S) and the same map into X_{O S}.
struct Soberification {
  FiniteSpace space;
  std::vector<std::size_t> epsilon;       // into space
  std::vector<std::size_t> epsilon_dual;  // into X_{O S}
  bool continuous = false;
  bool frame_isomorphism = false;  // ε⁻¹ : O(pt O S) ≅ O S
  bool homeomorphic_to_t0 = false;
};

Soberification soberification(const FiniteSpace& s);

/// Every irreducible closed set is the closure of exactly one point.
bool is_sober(const FiniteSpace& s);

/// Topology generated by {U ∖ V : U, V open}.
FiniteSpace front_topology(const FiniteSpace& s);

struct PointKind {
  bool isolated = false;
  bool weakly_isolated = false;
  bool detached = false;
};

/// Kind of x as a point of the subspace T. Throws IndexOutOfRange unless
/// x ∈ T ⊆ S.
PointKind classify_point(const FiniteSpace& s, Subset t, std::size_t x);

struct ScatterFlags {
  bool t0 = false;
  bool t_d = false;
  bool scattered = false;
  bool weakly_scattered = false;
  bool dispersed = false;
};

/// Quantifying over nonempty closed subsets.
ScatterFlags scatter_flags(const FiniteSpace& s);
/// The same predicates quantifying over every nonempty subspace.
ScatterFlags scatter_flags_all_subspaces(const FiniteSpace& s);

struct ScatterReport {
  ScatterFlags flags;
  bool all_subspaces_agree = false;
  bool scattered_iff_weak_and_td = false;
  bool dispersed_iff_t0_scattered = false;  // dispersed(S) ⇔ scattered(S_0)
  bool weak_iff_t0_weak = false;            // weakly scattered(S) ⇔ weakly scattered(S_0)
  bool scattered_implies_t0 = false;

  bool consistent() const {
    return all_subspaces_agree && scattered_iff_weak_and_td && dispersed_iff_t0_scattered && weak_iff_t0_weak &&
           scattered_implies_t0;
  }
};

ScatterReport scatter_report(const FiniteSpace& s);

/// S with O S, its dual X_{O S} and ε : S → X_{O S}.
class SpaceDual {
 public:
  explicit SpaceDual(FiniteSpace s);

  const FiniteSpace& space() const { return space_; }
  const Dual& dual() const { return dual_; }
  const FiniteLattice& frame() const { return dual_.lattice(); }
  std::size_t epsilon(std::size_t x) const { return epsilon_.at(x); }
  const std::vector<std::size_t>& epsilon() const { return epsilon_; }

 private:
  FiniteSpace space_;
  Dual dual_;
  std::vector<std::size_t> epsilon_;
};

/// σ(j) = ⋃{j(U) ∖ U : U ∈ O S}.
Subset sigma(const FiniteSpace& s, const Nucleus& j);
/// δ(N) = ε⁻¹(N).
Subset delta(const SpaceDual& sd, NuclearSet n);

struct CompactificationReport {
  bool factors_through_rho = false;
  bool injective = false;        // ε′ : S_0 → X_{O S}
  bool front_continuous = false;
  bool embedding = false;        // homeomorphism onto the image
  bool dense = false;
  bool surjective = false;

  bool ok() const { return factors_through_rho && injective && front_continuous && embedding && dense; }
};

CompactificationReport compactification_check(const FiniteSpace& s);

struct SimmonsIsbellReport {
  std::size_t nuclei = 0;
  std::size_t front_opens = 0;
  bool sigma_injective = false;
  bool sigma_onto = false;               // onto O_F(S)
  bool sigma_homomorphism = false;       // ∧, ∨, 0, 1
  bool sigma_delta_identity = false;     // σ(j) = S ∖ δ(N_j)
  bool delta_homomorphism = false;       // onto coframe map into front-closed sets
  bool sober_weakly_scattered = false;   // soberification weakly scattered
  bool dispersed = false;
  bool frame_scattered = false;          // O S scattered
  bool assembly_boolean = false;         // N(O S) boolean
  bool sober_iff_t0 = false;
  bool soberification_is_t0_reflection = false;
  ScatterReport scatter;

  bool agree() const;
  bool ok() const;
};

SimmonsIsbellReport simmons_isbell_report(const FiniteSpace& s, const Bounds& bounds = {});

/// Closed F with cl(int F) = F, canonical order.
std::vector<Subset> regular_closed(const FiniteSpace& s);

/// Every topology on points "0".."n-1", in increasing order of the open
/// family's bit encoding. Throws BoundExceeded when n > bounds.max_topology_points.
std::vector<FiniteSpace> enumerate_topologies(std::size_t n, const Bounds& bounds = {});

/// Point map f with U open in a ⇔ f(U) open in b.
std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace pftlab
