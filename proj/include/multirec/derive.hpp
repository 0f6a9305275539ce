#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "multirec/generators.hpp"
#include "multirec/lattice.hpp"

namespace multirec {

struct ReturnWord {
  std::vector<FiniteWord> letters;

  std::size_t length() const { return letters.size(); }
  // Origin cell of each block; for d = 1 this is the factor itself.
  std::vector<Letter> heads() const;
  friend bool operator==(const ReturnWord&, const ReturnWord&) = default;
  friend std::strong_ordering operator<=>(const ReturnWord& a, const ReturnWord& b);
};

std::string toString(const ReturnWord& r);

class CodeTable {
 public:
  // Existing code, or a fresh one in order of first appearance.
  int assign(const ReturnWord& r);
  int codeOf(const ReturnWord& r) const;  // -1 when absent
  const ReturnWord& word(int code) const { return words_.at(static_cast<std::size_t>(code)); }
  std::size_t size() const { return words_.size(); }
  const std::vector<ReturnWord>& words() const { return words_; }

 private:
  std::vector<ReturnWord> words_;
  std::map<ReturnWord, int> index_;
};

struct ReturnScan {
  Direction direction;
  Size size;
  std::vector<std::int64_t> occurrences;
  std::vector<ReturnWord> words;
  std::vector<int> codes;
  CodeTable table;
};

// Return words to w_{q,s}(0) along q for l in [0, L]; stops early once
// `needed` words are known.
ReturnScan returnWordsAlong(const WordSource& w, const Direction& q, const Size& s, std::int64_t L,
                            std::size_t needed = static_cast<std::size_t>(-1));

enum class DerivativeScheme { PerDirection, Uniform };
std::string toString(DerivativeScheme s);

struct DerivativeWord {
  DerivativeScheme scheme = DerivativeScheme::PerDirection;
  Size box;
  PartialGrid grid;  // -1 marks the undefined origin of the uniform scheme
  CodeTable table;   // uniform scheme only
  std::size_t distinctCodes() const;
};

DerivativeWord derivativePerDirection(const WordSource& w, const Size& s, const Size& box, std::int64_t L,
                                      unsigned workers = 0);

struct ScanOrder {
  // Directions with coordinates <= seedMaxDir are scanned first, over the
  // whole horizon; 0 disables the seed pass.
  std::int64_t seedMaxDir = 5;
};

DerivativeWord derivativeUniform(const WordSource& w, const Size& s, const Size& box, std::int64_t L,
                                 const ScanOrder& order = {}, unsigned workers = 0);

// Return word of the cell p != 0: index gcd(p) along p / gcd(p).
ReturnWord cellReturnWord(const WordSource& w, const Size& s, const Point& p, std::int64_t L);

}  // namespace multirec
