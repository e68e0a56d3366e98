#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pftlab/poset.hpp"
#include "pftlab/subset.hpp"

namespace pftlab {

/// A finite topological space with its open sets listed explicitly. No
/// separation axiom is assumed.
class FiniteSpace {
 public:
  FiniteSpace() : opens_{Subset{}} {}

  /// Throws InvalidModel unless `opens` contains ∅ and the whole set and is
  /// closed under binary union and intersection. Duplicates are dropped and
  /// the family is stored in canonical subset order.
  static FiniteSpace from_opens(std::vector<std::string> names, std::vector<Subset> opens);
  /// Alexandroff topology of a preorder: opens are the sets closed upward
  /// along `pairs` (reflexive-transitive closure taken).
  static FiniteSpace from_preorder(std::vector<std::string> names, const Relation& pairs);
  /// Points "0".."n-1".
  static FiniteSpace discrete(std::size_t n);
  static FiniteSpace indiscrete(std::size_t n);
  /// Points "0","1"; opens ∅, {1}, S.
  static FiniteSpace sierpinski();

  std::size_t size() const { return names_.size(); }
  Subset carrier() const { return Subset::full(size()); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const std::vector<Subset>& opens() const { return opens_; }
  std::optional<std::size_t> open_index(Subset u) const;
  bool is_open(Subset s) const { return open_index(s).has_value(); }
  bool is_closed(Subset s) const { return is_open(s.complement(size())); }
  /// Closed sets in canonical order.
  std::vector<Subset> closed_sets() const;

  Subset interior(Subset s) const;
  Subset closure(Subset s) const;
  Subset point_closure(std::size_t x) const { return closure(Subset::singleton(x)); }
  /// Smallest open set containing x.
  Subset neighbourhood(std::size_t x) const;

  /// x ≤ y iff x ∈ cl{y}.
  bool specialization_leq(std::size_t x, std::size_t y) const { return point_closure(y).contains(x); }
  /// [x] = {y : cl{x} = cl{y}}.
  Subset t0_class(std::size_t x) const;

  bool operator==(const FiniteSpace&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Subset> opens_;
};

}  // namespace pftlab
