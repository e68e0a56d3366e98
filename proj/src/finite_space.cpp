#include "pftlab/finite_space.hpp"

#include <algorithm>

#include "pftlab/error.hpp"

namespace pftlab {

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> names, std::vector<Subset> opens) {
  const std::size_t n = names.size();
  if (n > Subset::capacity) throw BoundExceeded("space has more than 64 points");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (names[i] == names[j]) throw InvalidModel("duplicate point name '" + names[i] + "'");
    }
  }
  const Subset all = Subset::full(n);
  for (Subset u : opens) {
    if (!u.subset_of(all)) throw IndexOutOfRange("open set mentions a point outside the space");
  }
  std::sort(opens.begin(), opens.end(), canonical_less);
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto has = [&](Subset s) { return std::binary_search(opens.begin(), opens.end(), s, canonical_less); };
  if (!has(Subset{})) throw InvalidModel("opens must contain the empty set");
  if (!has(all)) throw InvalidModel("opens must contain the whole space");
  for (Subset u : opens) {
    for (Subset v : opens) {
      if (!has(u | v)) throw InvalidModel("opens are not closed under union");
      if (!has(u & v)) throw InvalidModel("opens are not closed under intersection");
    }
  }
  FiniteSpace s;
  s.names_ = std::move(names);
  s.opens_ = std::move(opens);
  return s;
}

FiniteSpace FiniteSpace::from_preorder(std::vector<std::string> names, const Relation& pairs) {
  const std::size_t n = names.size();
  if (n > Subset::capacity) throw BoundExceeded("space has more than 64 points");
  std::vector<Subset> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = Subset::singleton(i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw IndexOutOfRange("preorder pair mentions a point outside the space");
    up[a].insert(b);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].contains(k)) up[i] |= up[k];
    }
  }
  // Open sets are unions of the principal upsets.
  std::vector<Subset> opens{Subset{}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t count = opens.size();
    for (std::size_t k = 0; k < count; ++k) {
      const Subset u = opens[k] | up[i];
      if (std::find(opens.begin(), opens.end(), u) == opens.end()) opens.push_back(u);
    }
  }
  if (std::find(opens.begin(), opens.end(), Subset::full(n)) == opens.end()) opens.push_back(Subset::full(n));
  return from_opens(std::move(names), std::move(opens));
}

namespace {
std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}
}  // namespace

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  std::vector<Subset> opens;
  for_each_subset(Subset::full(n), [&](Subset s) { opens.push_back(s); });
  return from_opens(numbered(n), std::move(opens));
}

FiniteSpace FiniteSpace::indiscrete(std::size_t n) { return from_opens(numbered(n), {Subset{}, Subset::full(n)}); }

FiniteSpace FiniteSpace::sierpinski() {
  return from_opens(numbered(2), {Subset{}, Subset::singleton(1), Subset::full(2)});
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteSpace::open_index(Subset u) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), u, canonical_less);
  if (it == opens_.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - opens_.begin());
}

std::vector<Subset> FiniteSpace::closed_sets() const {
  std::vector<Subset> out;
  out.reserve(opens_.size());
  for (Subset u : opens_) out.push_back(u.complement(size()));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Subset FiniteSpace::interior(Subset s) const {
  Subset out;
  for (Subset u : opens_) {
    if (u.subset_of(s)) out |= u;
  }
  return out;
}

Subset FiniteSpace::closure(Subset s) const { return interior(s.complement(size())).complement(size()); }

Subset FiniteSpace::neighbourhood(std::size_t x) const {
  Subset out = carrier();
  for (Subset u : opens_) {
    if (u.contains(x)) out &= u;
  }
  return out;
}

Subset FiniteSpace::t0_class(std::size_t x) const {
  const Subset cx = point_closure(x);
  Subset out;
  for (std::size_t y = 0; y < size(); ++y) {
    if (point_closure(y) == cx) out.insert(y);
  }
  return out;
}

}  // namespace pftlab
