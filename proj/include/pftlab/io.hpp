#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pftlab/assembly.hpp"
#include "pftlab/duality.hpp"
#include "pftlab/finite_space.hpp"
#include "pftlab/heyting.hpp"
#include "pftlab/poset.hpp"

namespace pftlab::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become MalformedInput.
Json parse_text(std::string_view text);
/// Reads `source` as inline JSON when it starts with '{', else as a path.
Json load(const std::string& source);

/// {"elements": ["a","b"], "leq": [["a","b"]]}. `leq` may be any relation
/// whose reflexive-transitive closure is the order.
FinitePoset parse_poset(const Json& j);
/// Either the poset schema (an explicit lattice order) or
/// {"from_poset": <poset>} for Up(P).
FiniteLattice parse_lattice(const Json& j);
/// {"points": [...], "opens": [[...], ...]} or {"points": [...], "leq": [...]}
/// for the Alexandroff topology of a preorder.
FiniteSpace parse_space(const Json& j);
/// {"values": {"a": "b", ...}} naming every element.
Nucleus parse_nucleus(const FiniteLattice& l, const Json& j);

Json names_of(const std::vector<std::string>& names, Subset s);
/// {"elements": [...], "leq": covering pairs}
Json to_json(const FinitePoset& p);
Json to_json(const FiniteLattice& l);
Json to_json(const FiniteSpace& s);
Json to_json(const EsakiaSpace& x);
Json to_json(const FiniteLattice& l, const Nucleus& j);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// Hasse diagram, bottom to top; `highlight` points are shaded.
std::string to_dot(const FinitePoset& p, std::string_view graph_name, Subset highlight = {});
/// Specialization preorder: strict covers as edges, equivalent points
/// joined by a dashed two-way edge.
std::string to_dot(const FiniteSpace& s, std::string_view graph_name);

}  // namespace pftlab::io
