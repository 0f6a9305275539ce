#pragma once

#include <cstdint>
#include <vector>

#include "multirec/lattice.hpp"

namespace multirec {

Letter thueMorse(std::uint64_t n);
Letter fibonacciWord(std::uint64_t n);

WordPtr thueMorseWord();
WordPtr fibonacciWordSource();

// w(i) = u(gcd(i)), gcd of the zero vector being 0.
WordPtr gcdWord(const WordPtr& u, std::size_t dim);

// Rows alternate 1F and 0F.
WordPtr fibRowsWord();
// Row 0 is 10^omega, row n > 0 is (1 0^(2^k - 1))^omega with k = v2(n).
WordPtr toeplitzRowsWord();

// Partially filled finite grid; -1 marks an empty cell.
class PartialGrid {
 public:
  PartialGrid() = default;
  explicit PartialGrid(const Size& size);
  const Size& size() const { return size_; }
  bool inside(const Point& p) const;
  std::int32_t at(const Point& p) const { return cells_[index(p)]; }
  bool filled(const Point& p) const { return at(p) >= 0; }
  void set(const Point& p, Letter a) { cells_[index(p)] = static_cast<std::int32_t>(a); }
  std::size_t filledCount() const;
  const std::vector<std::int32_t>& cells() const { return cells_; }

 private:
  std::size_t index(const Point& p) const;
  Size size_;
  std::vector<std::int32_t> cells_;
};

enum class FillPolicy { Constant, SeededRandom };

struct ToeplitzSchedule {
  std::uint64_t seed = 0;
  FillPolicy policy = FillPolicy::Constant;
  Letter constant = 0;
  Letter anchor = 1;
  std::size_t alphabet = 2;
  int steps = 1;
};

std::uint64_t splitmix64(std::uint64_t x);

// Letter chosen for residue r at step n (n >= 1).
Letter toeplitzFill(const ToeplitzSchedule& sched, int step, std::int64_t rx, std::int64_t ry);

// The limit word, evaluated lazily and total on N^2.
WordPtr toeplitzConstruct(const ToeplitzSchedule& sched);

// Explicit step-by-step fill of [0, side)^2 after sched.steps steps.
PartialGrid toeplitzGrid(const ToeplitzSchedule& sched, std::int64_t side);

struct UrdNotUrSchedule {
  std::uint64_t seed = 0;
  bool randomFill = false;
  int steps = 4;
  std::size_t dim = 2;
  std::int64_t box = 96;
  std::int64_t cap = std::int64_t{1} << 20;
};

struct UrdCopyRecord {
  Direction direction;
  std::int64_t b = 0;
};

struct UrdStepRecord {
  int n = 0;
  FiniteWord prefix;
  std::vector<UrdCopyRecord> copies;
  Position zeroBlock;
  bool zeroBlockPlaced = false;
};

struct UrdNotUrResult {
  PartialGrid grid;
  std::vector<UrdStepRecord> steps;
  bool bestEffort = true;
};

UrdNotUrResult urdNotUrConstruct(const UrdNotUrSchedule& sched);

}  // namespace multirec
