#pragma once

// Canonical JSON encoding:
//   ColoredComposition  {"nu": int, "parts": [[size,color],...]}
//   DominoComposition   {"n": int, "tiles": [[alpha,beta,color],...]}

#include "colorcomp/core.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace colorcomp {

using json = nlohmann::ordered_json;

/// Malformed or mistyped JSON input.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline json to_json(const ColoredComposition& comp) {
  json parts = json::array();
  for (const auto& p : comp.parts) parts.push_back(json::array({p.size, p.color}));
  return json{{"nu", comp.nu}, {"parts", std::move(parts)}};
}

inline json to_json(const DominoComposition& dc) {
  json tiles = json::array();
  for (const auto& t : dc.tiles) tiles.push_back(json::array({t.alpha, t.beta, t.color}));
  return json{{"n", dc.n}, {"tiles", std::move(tiles)}};
}

inline std::string encode(const ColoredComposition& comp) { return to_json(comp).dump(); }
inline std::string encode(const DominoComposition& dc) { return to_json(dc).dump(); }

namespace detail {

inline std::int64_t as_int(const json& v, std::string_view what) {
  if (!v.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw parse_error("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

inline json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what());
  }
}

} // namespace detail

inline ColoredComposition colored_from_json(const json& j) {
  ColoredComposition comp;
  comp.nu = detail::as_int(detail::field(j, "nu"), "nu");
  const json& parts = detail::field(j, "parts");
  if (!parts.is_array()) throw parse_error("\"parts\" must be an array");
  for (const auto& p : parts) {
    if (!p.is_array() || p.size() != 2) throw parse_error("each part must be [size,color]");
    comp.parts.push_back({detail::as_int(p[0], "size"), detail::as_int(p[1], "color")});
  }
  return comp;
}

inline DominoComposition domino_from_json(const json& j) {
  DominoComposition dc;
  dc.n = detail::as_int(detail::field(j, "n"), "n");
  const json& tiles = detail::field(j, "tiles");
  if (!tiles.is_array()) throw parse_error("\"tiles\" must be an array");
  for (const auto& t : tiles) {
    if (!t.is_array() || t.size() != 3) throw parse_error("each tile must be [alpha,beta,color]");
    dc.tiles.push_back({detail::as_int(t[0], "alpha"), detail::as_int(t[1], "beta"),
                        detail::as_int(t[2], "color")});
  }
  return dc;
}

inline ColoredComposition decode_colored(std::string_view text) {
  return colored_from_json(detail::parse_text(text));
}

inline DominoComposition decode_domino(std::string_view text) {
  return domino_from_json(detail::parse_text(text));
}

} // namespace colorcomp
