#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multirec/lattice.hpp"
#include "multirec/parallel.hpp"

namespace multirec {

struct RecurrenceBudget {
  std::int64_t horizon = 5000;   // L
  std::int64_t maxDir = 5;       // Q
  std::int64_t maxSize = 3;      // S
  std::int64_t maxOrigin = 3;    // P
  std::int64_t blockBound = 256; // B
  unsigned workers = 0;          // 0: hardware concurrency

  void validate() const;
  static RecurrenceBudget parse(const std::string& csv);  // "L,Q,S,P,B"
};

enum class Verdict { BoundedWitnessed, NoRecurrenceInHorizon, GapExceedsClaim };
std::string toString(Verdict v);

struct GapReport {
  Direction direction;
  Size size;
  Position origin;
  std::int64_t horizon = 0;
  std::vector<std::int64_t> occurrences;
  std::optional<std::int64_t> maxGap;
  std::optional<std::int64_t> claim;
  Verdict verdict = Verdict::NoRecurrenceInHorizon;
};

using ClaimFn = std::function<std::optional<std::int64_t>(const Size&)>;

std::vector<std::int64_t> occurrenceIndices(const WordSource& w, const Direction& q, const Size& s,
                                            const Position& origin, std::int64_t L);
GapReport measureGaps(const WordSource& w, const Direction& q, const Size& s, const Position& origin,
                      std::int64_t L, std::optional<std::int64_t> claim = std::nullopt);

// All sizes with entries in [1, S], lexicographic.
std::vector<Size> sizesUpTo(std::size_t dim, std::int64_t S);
std::vector<Position> originsUpTo(std::size_t dim, std::int64_t P);

// One report per (q, s), origin 0.
std::vector<GapReport> checkURDEmpirical(const WordSource& w, const RecurrenceBudget& budget,
                                         const ClaimFn& claim = {});

struct SizeSummary {
  Size size;
  std::optional<std::int64_t> bound;  // sup of max gaps, if all witnessed
  Verdict verdict = Verdict::BoundedWitnessed;
  GapReport worst;
  std::size_t combinations = 0;
};

std::vector<SizeSummary> checkSURDEmpirical(const WordSource& w, const RecurrenceBudget& budget,
                                            const ClaimFn& claim = {});
std::vector<SizeSummary> checkSSURDOEmpirical(const WordSource& w, const RecurrenceBudget& budget,
                                              const ClaimFn& claim = {});

struct URReport {
  Size size;
  std::optional<std::int64_t> b;
};

// Smallest b <= B such that every (b,...,b) block with corner in [0,B]^d
// contains the prefix of size s.
std::optional<std::int64_t> urWindowBound(const WordSource& w, const Size& s, std::int64_t B);
std::vector<URReport> checkUREmpirical(const WordSource& w, const RecurrenceBudget& budget);

std::int64_t longestConstantRun(const WordSource& w, const Direction& q, std::int64_t horizon);

SizeSummary summarize(const Size& s, const std::vector<GapReport>& reports);

}  // namespace multirec
