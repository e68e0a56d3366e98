#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pftlab/bounds.hpp"
#include "pftlab/duality.hpp"
#include "pftlab/heyting.hpp"

namespace pftlab {

/// An endomap of a FiniteLattice, stored densely by carrier position.
/// Whether it is a nucleus is decided by validate_nucleus.
class Nucleus {
 public:
  Nucleus() = default;
  explicit Nucleus(std::vector<std::size_t> values) : values_(std::move(values)) {}

  std::size_t operator()(std::size_t a) const { return values_.at(a); }
  std::size_t size() const { return values_.size(); }
  const std::vector<std::size_t>& values() const { return values_; }

  auto operator<=>(const Nucleus&) const = default;

 private:
  std::vector<std::size_t> values_;
};

struct NucleusReport {
  bool total = false;           // one in-range value per element
  bool inflationary = false;    // a ≤ ja
  bool idempotent = false;      // jja ≤ ja
  bool preserves_meets = false; // j(a ∧ b) = ja ∧ jb
  bool monotone = false;
  std::vector<std::size_t> witness;
  std::string message;

  bool valid() const { return total && inflationary && idempotent && preserves_meets && monotone; }
};

NucleusReport validate_nucleus(const FiniteLattice& l, const Nucleus& j);

/// ⊥ of N(L).
Nucleus identity_nucleus(const FiniteLattice& l);
/// ⊤ of N(L): everything to 1.
Nucleus top_nucleus(const FiniteLattice& l);
/// x ↦ a ∨ x
Nucleus make_u(const FiniteLattice& l, std::size_t a);
/// x ↦ a → x
Nucleus make_v(const FiniteLattice& l, std::size_t a);
/// x ↦ (x → a) → a
Nucleus make_w(const FiniteLattice& l, std::size_t a);

/// j ≤ k pointwise.
bool nucleus_leq(const FiniteLattice& l, const Nucleus& j, const Nucleus& k);
/// L_j = {a : ja = a}
Subset fixpoints(const FiniteLattice& l, const Nucleus& j);

/// A subset of the dual space standing for a nucleus.
struct NuclearSet {
  Subset points;
  bool operator==(const NuclearSet&) const = default;
};

/// F is closed and ↓(U ∩ F) is clopen for every clopen U. Quantifies over
/// all subsets U when |X| ≤ bounds.literal_check_points; above that the
/// finite-discrete shortcut answers (literal = false) unless
/// `allow_shortcut` is false, in which case BoundExceeded is thrown.
TopologyCheck is_nuclear(const EsakiaSpace& x, Subset f, const Bounds& bounds = {}, bool allow_shortcut = true);

/// N_j = {x : j⁻¹(x) = x}
NuclearSet to_nuclear_set(const Dual& d, const Nucleus& j);
/// j_N with φ(j_N a) = X ∖ ↓(N ∖ φ(a)).
Nucleus from_nuclear_set(const Dual& d, NuclearSet n);

/// N(L) realised through N(X_L): one frame element per nuclear subset,
/// ordered by reverse inclusion (so ⊥ = X_L is the identity nucleus).
struct Assembly {
  FiniteLattice frame;
  std::vector<NuclearSet> sets;
  std::vector<Nucleus> nuclei;
  bool literal = true;  // nuclearity decided by the literal check

  std::optional<std::size_t> index_of(Subset nuclear) const;
};

/// Elements are named after their nuclear set, e.g. "{x1,xm}".
Assembly assembly_frame(const Dual& d, const Bounds& bounds = {});

/// Pointwise meet; the empty meet is ⊤.
Nucleus nuclei_meet(const FiniteLattice& l, std::span<const Nucleus> js);
/// Join computed dually: the meet in N(X) of the N_j, mapped back. The
/// empty join is ⊥.
Nucleus nuclei_join(const Dual& d, std::span<const Nucleus> js, const Bounds& bounds = {},
                    bool literal_meet_formula = false);
/// Join by iterating the composite of all js to a fixpoint at every element.
Nucleus join_by_iteration(const FiniteLattice& l, std::span<const Nucleus> js);

/// Meet of a family in (N(X), ⊆) with N = ⋂ family (X for the empty
/// family). With `literal` set (needs
/// |X| ≤ 4) evaluates cl_π(⋃{F ∈ N(X) : F ⊆ N}); otherwise returns N,
/// which is the same set on a finite discrete space.
Subset meet_in_nuclear_sets(const EsakiaSpace& x, std::span<const Subset> family, bool literal = false,
                            const Bounds& bounds = {});

/// Every nucleus, from the fixpoint sets S ∋ 1 closed under ∧ and under
/// a → s; each S gives j(a) = ⋀{s ∈ S : a ≤ s}. Throws BoundExceeded when
/// |L| > bounds.oracle_elements.
std::vector<Nucleus> enumerate_nuclei_oracle(const FiniteLattice& l, const Bounds& bounds = {});

/// L_j as a frame (meets from L, joins j(⋁S)).
Embedded fixpoint_frame(const FiniteLattice& l, const Nucleus& j);

/// j = ⋀{w_a : ja = a}
bool w_decomposition_check(const FiniteLattice& l, const Nucleus& j);

/// Agreement of the nucleus enumeration with N(X_L).
struct NuclearDualityReport {
  std::size_t oracle_count = 0;
  std::size_t nuclear_set_count = 0;
  bool bijective = false;          // j ↦ N_j onto N(X_L)
  bool round_trip = false;         // j_{N_j} = j and N_{j_N} = N
  bool order_reversing = false;    // j ≤ k ⇔ N_k ⊆ N_j
  bool u_v_w_formulas = false;     // N_{u_a}, N_{v_a}, N_{w_a}
  bool meet_is_union = false;      // N_{j∧k} = N_j ∪ N_k
  bool join_is_intersection = false;  // N_{j∨k} = N_j ∩ N_k, against the iteration oracle
  bool max_of_downsets_nuclear = false;
  bool clopen_cut_nuclear = false; // U ∩ N nuclear
  std::string witness;

  bool ok() const;
};

NuclearDualityReport nuclear_duality_check(const Dual& d, const Bounds& bounds = {});

/// The conditions that characterise a boolean N(L), each evaluated on its own.
struct BooleanReport {
  bool assembly_boolean = false;            // N(L) is boolean
  bool nuclear_equals_regular_closed = false;  // N(X_L) = RC(X_L)
  bool max_of_clopen_downsets_clopen = false;
  bool scattered = false;                   // L is a scattered frame

  bool agree() const;
};

BooleanReport is_assembly_boolean(const Dual& d, const Bounds& bounds = {});

struct EmbeddingCheck {
  std::vector<std::size_t> map;  // a ↦ u_a
  bool injective = false;
  bool preserves_bounds = false;
  bool preserves_meets = false;
  bool preserves_joins = false;
  bool u_v_complemented = false;  // u_a, v_a complementary in the next stage

  bool ok() const { return injective && preserves_bounds && preserves_meets && preserves_joins && u_v_complemented; }
};

struct Tower {
  std::vector<FiniteLattice> stages;       // N⁰(L) = L, N¹(L), ...
  std::vector<EmbeddingCheck> embeddings;  // stage i → i+1
};

/// Throws BoundExceeded when k > bounds.max_tower_depth, or when k ≥ 2 and
/// |X_L| > bounds.tower_points.
Tower tower(const FiniteLattice& l, std::size_t k, const Bounds& bounds = {});

struct BooleanizationCheck {
  std::size_t booleanization_size = 0;   // |B(N(L))|
  std::size_t regular_closed_count = 0;  // |RC(X_L)|
  bool dual_isomorphism = false;

  bool ok() const { return dual_isomorphism && booleanization_size == regular_closed_count; }
};

BooleanizationCheck assembly_booleanization_check(const Dual& d, const Bounds& bounds = {});

}  // namespace pftlab
