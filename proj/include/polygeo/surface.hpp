#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "polygeo/exact.hpp"

namespace polygeo::surface {

/// Finite polysquare translation surface in origami form: b unit squares,
/// right[s] is the square entered when leaving s through its right edge and
/// top[s] the square entered through its top edge.
///
/// Vertical edge i is the left edge of square i, so right edge of s is
/// vertical edge right[s]. There are exactly b vertical edges.
struct PolysquareSurface {
  int squares = 0;
  std::vector<int> right;
  std::vector<int> top;

  friend bool operator==(const PolysquareSurface&, const PolysquareSurface&) = default;
};

struct SurfacePoint {
  int square = 0;
  Quad x;
  Quad y;
};

/// Human-readable violations; empty iff both gluings are permutations of
/// {0..b-1} and together act transitively on the squares.
std::vector<std::string> validate(const PolysquareSurface& s);
bool is_connected(const PolysquareSurface& s);

PolysquareSurface torus();
/// Three squares in an L: 0 and 1 side by side, 2 on top of 0.
PolysquareSurface l3();

/// Named fixture (`torus`, `L3`) or nullopt.
std::optional<PolysquareSurface> fixture(std::string_view name);

nlohmann::ordered_json to_json(const PolysquareSurface& s);
/// Throws MalformedFile on schema problems, InvariantViolation on invalid
/// gluings.
PolysquareSurface from_json(const nlohmann::json& j);

PolysquareSurface load(const std::filesystem::path& path);
void save(const PolysquareSurface& s, const std::filesystem::path& path);

/// Fixture name, else a JSON file path.
PolysquareSurface resolve(std::string_view name_or_path);

}  // namespace polygeo::surface
