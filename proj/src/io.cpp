#include "pftlab/io.hpp"

#include <fstream>
#include <sstream>

#include "pftlab/error.hpp"

namespace pftlab::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) throw MalformedInput(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::size_t lookup(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw MalformedInput("unknown element \"" + name + "\"");
}

Relation relation(const std::vector<std::string>& names, const Json& j) {
  if (!j.is_array()) throw MalformedInput("\"leq\" must be an array of pairs");
  Relation r;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw MalformedInput("\"leq\" entries must be [lower, upper] name pairs");
    }
    r.emplace_back(lookup(names, pair[0].get<std::string>()), lookup(names, pair[1].get<std::string>()));
  }
  return r;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

Json load(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return parse_text(source);
  std::ifstream in(source, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + source);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

FinitePoset parse_poset(const Json& j) {
  std::vector<std::string> names = string_list(field(j, "elements"), "\"elements\"");
  const Relation r = j.contains("leq") ? relation(names, j.at("leq")) : Relation{};
  return FinitePoset::from_relation(std::move(names), r);
}

FiniteLattice parse_lattice(const Json& j) {
  if (j.is_object() && j.contains("from_poset")) return FiniteLattice::from_poset(parse_poset(j.at("from_poset")));
  return FiniteLattice::from_order(parse_poset(j));
}

FiniteSpace parse_space(const Json& j) {
  std::vector<std::string> names = string_list(field(j, "points"), "\"points\"");
  if (j.contains("opens")) {
    const Json& opens = j.at("opens");
    if (!opens.is_array()) throw MalformedInput("\"opens\" must be an array of point lists");
    std::vector<Subset> family;
    for (const Json& u : opens) {
      Subset s;
      for (const std::string& p : string_list(u, "each open set")) s.insert(lookup(names, p));
      family.push_back(s);
    }
    return FiniteSpace::from_opens(std::move(names), std::move(family));
  }
  if (j.contains("leq")) {
    const Relation r = relation(names, j.at("leq"));
    return FiniteSpace::from_preorder(std::move(names), r);
  }
  throw MalformedInput("a space needs \"opens\" or \"leq\"");
}

Nucleus parse_nucleus(const FiniteLattice& l, const Json& j) {
  const Json& values = field(j, "values");
  if (!values.is_object()) throw MalformedInput("\"values\" must map element names to element names");
  std::vector<std::size_t> v(l.size(), l.size());
  for (const auto& [key, value] : values.items()) {
    if (!value.is_string()) throw MalformedInput("\"values\" must map element names to element names");
    v[lookup(l.names(), key)] = lookup(l.names(), value.get<std::string>());
  }
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (v[a] == l.size()) throw MalformedInput("no value given for \"" + l.name(a) + "\"");
  }
  return Nucleus(std::move(v));
}

Json names_of(const std::vector<std::string>& names, Subset s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(names.at(i));
  return out;
}

Json to_json(const FinitePoset& p) {
  Json out;
  out["elements"] = p.names();
  out["leq"] = Json::array();
  for (auto [a, b] : p.covers()) out["leq"].push_back({p.name(a), p.name(b)});
  return out;
}

Json to_json(const FiniteLattice& l) { return to_json(l.order()); }

Json to_json(const FiniteSpace& s) {
  Json out;
  out["points"] = s.names();
  out["opens"] = Json::array();
  for (Subset u : s.opens()) out["opens"].push_back(names_of(s.names(), u));
  return out;
}

Json to_json(const EsakiaSpace& x) {
  Json out;
  out["topology"] = std::string(EsakiaSpace::topology);
  out["points"] = x.order.names();
  out["leq"] = to_json(x.order)["leq"];
  return out;
}

Json to_json(const FiniteLattice& l, const Nucleus& j) {
  Json values = Json::object();
  for (std::size_t a = 0; a < l.size(); ++a) values[l.name(a)] = l.name(j(a));
  return Json{{"values", values}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const FinitePoset& p, std::string_view graph_name, Subset highlight) {
  std::string out = "digraph " + quoted(std::string(graph_name)) + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += "  " + quoted(p.name(i));
    if (highlight.contains(i)) out += " [style=filled, fillcolor=gray]";
    out += ";\n";
  }
  for (auto [a, b] : p.covers()) out += "  " + quoted(p.name(a)) + " -> " + quoted(p.name(b)) + ";\n";
  return out + "}\n";
}

std::string to_dot(const FiniteSpace& s, std::string_view graph_name) {
  std::string out = "digraph " + quoted(std::string(graph_name)) + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < s.size(); ++i) out += "  " + quoted(s.name(i)) + ";\n";
  const std::size_t n = s.size();
  auto strictly = [&](std::size_t a, std::size_t b) { return s.specialization_leq(a, b) && !s.specialization_leq(b, a); };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a < b && s.specialization_leq(a, b) && s.specialization_leq(b, a)) {
        out += "  " + quoted(s.name(a)) + " -> " + quoted(s.name(b)) + " [dir=both, style=dashed];\n";
      }
      if (!strictly(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) {
        if (strictly(a, c) && strictly(c, b)) cover = false;
      }
      // one edge per pair of classes: draw from the first point of each class
      if (cover && s.t0_class(a).front() == a && s.t0_class(b).front() == b) {
        out += "  " + quoted(s.name(a)) + " -> " + quoted(s.name(b)) + ";\n";
      }
    }
  }
  return out + "}\n";
}

}  // namespace pftlab::io
