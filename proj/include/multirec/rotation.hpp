#pragma once

#include <vector>

#include "multirec/lattice.hpp"
#include "multirec/quadext.hpp"

namespace multirec {

enum class Orientation { Lower, Upper };  // [a,b) or (a,b]

struct Arc {
  QuadExt lo;
  QuadExt hi;
};

// Finite union of disjoint arcs of the unit circle, stored cut at 0 so that
// every arc satisfies 0 <= lo < hi <= 1.
class IntervalSet {
 public:
  explicit IntervalSet(Orientation o = Orientation::Lower) : orient_(o) {}
  static IntervalSet full(Orientation o = Orientation::Lower);
  static IntervalSet arc(const QuadExt& lo, const QuadExt& hi, Orientation o = Orientation::Lower);

  Orientation orientation() const { return orient_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }
  // Components on the circle: a piece ending at 1 joins one starting at 0.
  std::size_t componentCount() const;
  bool contains(const QuadExt& x) const;
  QuadExt measure() const;

  IntervalSet intersect(const IntervalSet& other) const;
  // {x : (x + a) mod 1 in this}, for 0 <= a < 1.
  IntervalSet rotatedBack(const QuadExt& a) const;

 private:
  void normalize();
  Orientation orient_;
  std::vector<Arc> arcs_;
};

class IntervalPartition {
 public:
  IntervalPartition() = default;
  // Interior cut points 0 < c_1 < ... < c_{k-1} < 1.
  IntervalPartition(std::vector<QuadExt> cuts, Orientation o);

  std::size_t size() const { return ends_.size() - 1; }
  Orientation orientation() const { return orient_; }
  const QuadExt& endpoint(std::size_t j) const { return ends_[j]; }
  std::vector<QuadExt> cuts() const { return {ends_.begin() + 1, ends_.end() - 1}; }
  IntervalSet interval(std::size_t j) const;
  QuadExt length(std::size_t j) const { return ends_[j + 1] - ends_[j]; }
  QuadExt minLength() const;
  Letter letterOf(const QuadExt& x) const;

 private:
  std::vector<QuadExt> ends_{QuadExt(0), QuadExt(1)};
  Orientation orient_ = Orientation::Lower;
};

struct RotationWordSpec {
  std::vector<QuadExt> alpha;
  QuadExt rho;
  IntervalPartition partition;

  std::size_t dimension() const { return alpha.size(); }
  void validate() const;
};

// Partition [0, alpha_1), [alpha_1, 1).
RotationWordSpec sturmianSpec(std::vector<QuadExt> alpha, QuadExt rho = QuadExt(0));
// alpha = (sqrt2 - 1, sqrt3 - 1), rho = 0.
RotationWordSpec defaultSturmianSpec();

bool rationalIndependenceCheck(const std::vector<QuadExt>& alpha);

QuadExt orbitPoint(const RotationWordSpec& spec, const Point& p);
Letter rotationLetter(const RotationWordSpec& spec, const Point& p);

class RotationWord final : public WordSource {
 public:
  explicit RotationWord(RotationWordSpec spec);
  std::size_t dimension() const override { return spec_.dimension(); }
  std::size_t alphabetSize() const override { return spec_.partition.size(); }
  Letter at(const Point& p) const override;
  std::string describe() const override { return "rotation"; }
  const RotationWordSpec& spec() const { return spec_; }

 private:
  RotationWordSpec spec_;
  std::vector<std::int64_t> primes_;
  std::vector<QuadExt> alpha_;
  QuadExt rho_;
};

WordPtr rotationWord(const RotationWordSpec& spec);

IntervalSet factorIntervalSet(const RotationWordSpec& spec, const FiniteWord& f);
bool factorOccurs(const RotationWordSpec& spec, const FiniteWord& f);
bool occursAt(const RotationWordSpec& spec, const FiniteWord& f, const Point& p);

struct ThreeGapReport {
  std::vector<std::int64_t> gaps;  // distinct, increasing
  std::int64_t visits = 0;
  std::int64_t firstVisit = 0;
  std::int64_t maxGap() const { return gaps.empty() ? 0 : gaps.back(); }
};

// Gaps between successive l in [0, L] with (start + l*delta) mod 1 in I.
ThreeGapReport threeGapAnalysis(const QuadExt& delta, const IntervalSet& I, std::int64_t L,
                                const QuadExt& start = QuadExt(0));

// q_N = (q_1, N, ..., N), coprime, with N * ((q_N . alpha) mod 1) < min |I_j|.
Direction surdFailureDirection(const RotationWordSpec& spec, std::int64_t N, std::int64_t searchCap = 1'000'000);

}  // namespace multirec
