#include "pftlab/bounds.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace pftlab {

namespace {

void read_env(const char* var, std::size_t& out) {
  const char* raw = std::getenv(var);
  if (raw == nullptr) return;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc() && end == text.data() + text.size()) out = value;
}

}  // namespace

Bounds Bounds::from_env() {
  Bounds b;
  read_env("PFTLAB_MAX_POSET", b.max_poset_size);
  read_env("PFTLAB_LITERAL_POINTS", b.literal_check_points);
  read_env("PFTLAB_ORACLE_ELEMENTS", b.oracle_elements);
  read_env("PFTLAB_TOWER_POINTS", b.tower_points);
  read_env("PFTLAB_TOWER_DEPTH", b.max_tower_depth);
  read_env("PFTLAB_MAX_TOPOLOGY", b.max_topology_points);
  return b;
}

}  // namespace pftlab
