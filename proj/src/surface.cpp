#include "polygeo/surface.hpp"

#include <fstream>
#include <queue>

namespace polygeo::surface {

namespace {

bool is_permutation_of_range(const std::vector<int>& p, int b) {
  if (static_cast<int>(p.size()) != b) return false;
  std::vector<bool> hit(static_cast<std::size_t>(b), false);
  for (int v : p) {
    if (v < 0 || v >= b || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

}  // namespace

bool is_connected(const PolysquareSurface& s) {
  if (s.squares <= 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(s.squares), false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  int reached = 1;
  while (!todo.empty()) {
    const int sq = todo.front();
    todo.pop();
    for (int next : {s.right[static_cast<std::size_t>(sq)], s.top[static_cast<std::size_t>(sq)]}) {
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        ++reached;
        todo.push(next);
      }
    }
  }
  // Permutations of a finite set: forward reachability already covers the
  // inverses, so this is the orbit of the generated group.
  return reached == s.squares;
}

std::vector<std::string> validate(const PolysquareSurface& s) {
  std::vector<std::string> out;
  if (s.squares <= 0) {
    out.emplace_back("surface needs at least one square");
    return out;
  }
  const bool right_ok = is_permutation_of_range(s.right, s.squares);
  const bool top_ok = is_permutation_of_range(s.top, s.squares);
  if (!right_ok) out.emplace_back("right gluing is not a permutation of 0.." + std::to_string(s.squares - 1));
  if (!top_ok) out.emplace_back("top gluing is not a permutation of 0.." + std::to_string(s.squares - 1));
  if (right_ok && top_ok && !is_connected(s)) out.emplace_back("gluings do not connect all squares");
  return out;
}

PolysquareSurface torus() { return {1, {0}, {0}}; }
PolysquareSurface l3() { return {3, {1, 0, 2}, {2, 1, 0}}; }

std::optional<PolysquareSurface> fixture(std::string_view name) {
  if (name == "torus") return torus();
  if (name == "L3") return l3();
  return std::nullopt;
}

nlohmann::ordered_json to_json(const PolysquareSurface& s) {
  return {{"squares", s.squares}, {"right", s.right}, {"top", s.top}};
}

PolysquareSurface from_json(const nlohmann::json& j) {
  PolysquareSurface s;
  try {
    if (!j.is_object()) throw Error(ErrorCode::MalformedFile, "surface must be a JSON object");
    s.squares = j.at("squares").get<int>();
    s.right = j.at("right").get<std::vector<int>>();
    s.top = j.at("top").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedFile, std::string("bad surface JSON: ") + e.what());
  }
  if (auto problems = validate(s); !problems.empty()) {
    std::string detail = problems.front();
    for (std::size_t i = 1; i < problems.size(); ++i) detail += "; " + problems[i];
    throw Error(ErrorCode::InvariantViolation, detail);
  }
  return s;
}

PolysquareSurface load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedFile, "cannot open surface file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedFile, path.string() + ": " + e.what());
  }
  return from_json(j);
}

void save(const PolysquareSurface& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MalformedFile, "cannot write surface file " + path.string());
  out << to_json(s).dump() << '\n';
}

PolysquareSurface resolve(std::string_view name_or_path) {
  if (auto f = fixture(name_or_path)) return *f;
  std::filesystem::path p{std::string(name_or_path)};
  // `L3.json` with no such file on disk still names the fixture.
  if (!std::filesystem::exists(p)) {
    if (auto f = fixture(p.stem().string()); f && p.extension() == ".json") return *f;
  }
  return load(p);
}

}  // namespace polygeo::surface
