#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "multirec/generators.hpp"
#include "multirec/morphism.hpp"
#include "multirec/rotation.hpp"

namespace multirec {

using Json = nlohmann::json;

// Nested arrays, outermost index = last coordinate, so 2-D words read
// bottom row first.
Json toJson(const FiniteWord& f);
FiniteWord finiteWordFromJson(const Json& j);

Json toJson(const Morphism& phi);
Morphism morphismFromJson(const Json& j);
Morphism loadMorphism(const std::filesystem::path& path);

Json toJson(const QuadExt& x);
QuadExt quadExtFromJson(const Json& j);
Json toJson(const RotationWordSpec& spec);
RotationWordSpec rotationSpecFromJson(const Json& j);

// Rows top first, cells separated by spaces, -1 printed as '?'.
std::string toText(const FiniteWord& f);
std::string toText(const PartialGrid& g);

// Text grid with header line `dims=WxH alphabet=k`; rows top first.
struct GoldenGrid {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::size_t alphabet = 0;
  std::vector<std::vector<std::string>> rowsTopFirst;

  const std::string& token(std::int64_t x, std::int64_t y) const;
  // Numeric cell, -1 for '?'.
  int value(std::int64_t x, std::int64_t y) const;
  Size size() const { return Size{width, height}; }
};

GoldenGrid parseGolden(const std::string& text);
GoldenGrid readGolden(const std::filesystem::path& path);
std::string formatGolden(const PartialGrid& g, std::size_t alphabet);
std::filesystem::path fixtureDir();

enum class RenderFormat { Text, Json, Csv, Pbm, Pgm };
RenderFormat parseRenderFormat(const std::string& name);

struct RenderSpec {
  RenderFormat format = RenderFormat::Text;
  Size box;
};

std::string render(const WordSource& w, const RenderSpec& spec);
std::string render(const FiniteWord& f, RenderFormat format, std::size_t alphabet);

// "27x8" -> (27, 8); "1,3" -> (1, 3).
Point parseTuple(const std::string& text);

}  // namespace multirec
