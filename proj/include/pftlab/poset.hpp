#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pftlab/bounds.hpp"
#include "pftlab/subset.hpp"

namespace pftlab {

using Relation = std::vector<std::pair<std::size_t, std::size_t>>;

/// A finite partial order on named points.
///
/// Construction takes any relation whose reflexive-transitive closure is
/// antisymmetric (a Hasse cover list and a full order both qualify), closes
/// it and validates the result. Afterwards the value is immutable; `up(i)`
/// and `down(i)` hold the principal upset and downset of each point.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Throws InvalidModel on duplicate names, out-of-range pairs or a cycle.
  static FinitePoset from_relation(std::vector<std::string> names, const Relation& pairs);
  /// Unnamed points "0", "1", ...
  static FinitePoset from_relation(std::size_t n, const Relation& pairs);
  static FinitePoset antichain(std::size_t n);
  static FinitePoset chain(std::size_t n);

  std::size_t size() const { return names_.size(); }
  Subset carrier() const { return Subset::full(size()); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].contains(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  Subset up(std::size_t i) const { return up_.at(i); }
  Subset down(std::size_t i) const { return down_.at(i); }

  /// Covering pairs (a, b): a < b with nothing strictly between.
  Relation covers() const;
  /// Length of the longest chain ending at i (minimal points have height 0).
  std::size_t height(std::size_t i) const;

  /// Same point names in the same positions and the same order.
  bool operator==(const FinitePoset&) const = default;

  /// Relabel: point i of the result is point perm[i] of *this.
  FinitePoset permuted(std::span<const std::size_t> perm) const;

 private:
  std::vector<std::string> names_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

enum class Direction { up, down };

/// Throws IndexOutOfRange when `a` mentions a point outside the carrier.
void check_membership(const FinitePoset& p, Subset a);

/// ↑A or ↓A.
Subset closure(const FinitePoset& p, Subset a, Direction dir);
inline Subset up_closure(const FinitePoset& p, Subset a) { return closure(p, a, Direction::up); }
inline Subset down_closure(const FinitePoset& p, Subset a) { return closure(p, a, Direction::down); }
bool is_upset(const FinitePoset& p, Subset a);
bool is_downset(const FinitePoset& p, Subset a);

/// Points of A with no strictly greater point in A.
Subset maximal_points(const FinitePoset& p, Subset a);
Subset minimal_points(const FinitePoset& p, Subset a);

/// All upsets in canonical subset order. Output-linear enumeration; throws
/// BoundExceeded once more than `limit` upsets exist.
std::vector<Subset> upsets(const FinitePoset& p, std::size_t limit = Subset::capacity);

/// Order isomorphism P → Q as a point map (result[i] is the image of i), or
/// nullopt. Backtracking pruned by (|↓x|, |↑x|, height).
std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& p, const FinitePoset& q);

/// Whether `map` is a bijection with x ≤ y ⇔ map(x) ≤ map(y).
bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q, std::span<const std::size_t> map);

/// One representative per isomorphism class of posets on n points, with
/// points named "0".."n-1", sorted by (relation size, canonical code).
/// Throws BoundExceeded when n > bounds.max_poset_size.
std::vector<FinitePoset> enumerate_posets(std::size_t n, const Bounds& bounds = {});

}  // namespace pftlab
