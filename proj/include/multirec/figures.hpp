#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "multirec/derive.hpp"
#include "multirec/io.hpp"

namespace multirec {

struct FigureCheck {
  std::string name;
  bool passed = false;
  std::size_t mismatches = 0;
  std::string detail;
};

// Cellwise comparison of a regenerated grid against a golden.
FigureCheck compareExact(const std::string& name, const GoldenGrid& golden, const PartialGrid& ours);
// Comparison up to a bijection between code sets; '?' must match exactly.
FigureCheck compareBijective(const std::string& name, const GoldenGrid& golden, const PartialGrid& ours);

PartialGrid toGrid(const FiniteWord& f);

// code -> return word, columns of (1,2) blocks.
std::map<int, ReturnWord> readReturnCodes(const std::filesystem::path& path);

inline constexpr std::int64_t kDerivativeHorizon = 2000;

FigureCheck checkPreimage(const std::filesystem::path& dir);
FigureCheck checkSurdNotSsurdo(const std::filesystem::path& dir);
FigureCheck checkSierpinski(const std::filesystem::path& dir);
FigureCheck checkUrRowsNonUr(const std::filesystem::path& dir);
FigureCheck checkUrNonRecurrentRows(const std::filesystem::path& dir);
FigureCheck checkDer1(const std::filesystem::path& dir);
FigureCheck checkDer2(const std::filesystem::path& dir);
FigureCheck checkReturnCodes(const std::filesystem::path& dir);
FigureCheck checkSubgroups5(const std::filesystem::path& dir);
FigureCheck checkSubgroups6(const std::filesystem::path& dir);

// Runs every check; throws FixtureMissing if the directory holds no goldens.
std::vector<FigureCheck> verifyFigures(const std::filesystem::path& dir = fixtureDir());

}  // namespace multirec
