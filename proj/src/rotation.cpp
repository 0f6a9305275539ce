#include "multirec/rotation.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace multirec {

IntervalSet IntervalSet::full(Orientation o) { return arc(QuadExt(0), QuadExt(1), o); }

IntervalSet IntervalSet::arc(const QuadExt& lo, const QuadExt& hi, Orientation o) {
  if (lo < QuadExt(0) || hi > QuadExt(1)) throw InvalidInput("arc endpoints outside [0,1]");
  IntervalSet s(o);
  if (lo < hi) {
    s.arcs_.push_back({lo, hi});
  } else if (hi < lo) {
    s.arcs_.push_back({QuadExt(0), hi});
    s.arcs_.push_back({lo, QuadExt(1)});
    s.normalize();
  }
  return s;
}

void IntervalSet::normalize() {
  std::erase_if(arcs_, [](const Arc& a) { return !(a.lo < a.hi); });
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
  std::vector<Arc> merged;
  for (auto& a : arcs_) {
    if (!merged.empty() && merged.back().hi >= a.lo) {
      if (merged.back().hi < a.hi) merged.back().hi = a.hi;
    } else {
      merged.push_back(a);
    }
  }
  arcs_ = std::move(merged);
}

std::size_t IntervalSet::componentCount() const {
  std::size_t n = arcs_.size();
  if (n >= 2 && arcs_.front().lo == QuadExt(0) && arcs_.back().hi == QuadExt(1)) --n;
  return n;
}

bool IntervalSet::contains(const QuadExt& x) const {
  if (orient_ == Orientation::Lower) {
    for (const auto& a : arcs_)
      if (a.lo <= x && x < a.hi) return true;
    return false;
  }
  const QuadExt y = x.isZero() ? QuadExt(1) : x;
  for (const auto& a : arcs_)
    if (a.lo < y && y <= a.hi) return true;
  return false;
}

QuadExt IntervalSet::measure() const {
  QuadExt m(0);
  for (const auto& a : arcs_) m += a.hi - a.lo;
  return m;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  if (orient_ != other.orient_) throw InvalidInput("cannot intersect arcs of different orientation");
  IntervalSet out(orient_);
  std::size_t i = 0, j = 0;
  while (i < arcs_.size() && j < other.arcs_.size()) {
    const Arc& a = arcs_[i];
    const Arc& b = other.arcs_[j];
    const QuadExt& lo = a.lo < b.lo ? b.lo : a.lo;
    const bool aEndsFirst = a.hi < b.hi;
    const QuadExt& hi = aEndsFirst ? a.hi : b.hi;
    if (lo < hi) out.arcs_.push_back({lo, hi});
    if (aEndsFirst)
      ++i;
    else
      ++j;
  }
  out.normalize();
  return out;
}

IntervalSet IntervalSet::rotatedBack(const QuadExt& a) const {
  IntervalSet out(orient_);
  const QuadExt zero(0), one(1);
  for (const auto& arc : arcs_) {
    const QuadExt lo = arc.lo - a;
    const QuadExt hi = arc.hi - a;
    if (lo >= zero) {
      out.arcs_.push_back({lo, hi});
    } else if (hi <= zero) {
      out.arcs_.push_back({lo + one, hi + one});
    } else {
      out.arcs_.push_back({lo + one, one});
      out.arcs_.push_back({zero, hi});
    }
  }
  out.normalize();
  return out;
}

IntervalPartition::IntervalPartition(std::vector<QuadExt> cuts, Orientation o) : orient_(o) {
  ends_.clear();
  ends_.push_back(QuadExt(0));
  for (auto& c : cuts) {
    if (!(ends_.back() < c)) throw InvalidInput("partition endpoints must increase strictly");
    ends_.push_back(std::move(c));
  }
  if (!(ends_.back() < QuadExt(1))) throw InvalidInput("partition cut at or above 1");
  ends_.push_back(QuadExt(1));
}

IntervalSet IntervalPartition::interval(std::size_t j) const {
  return IntervalSet::arc(ends_.at(j), ends_.at(j + 1), orient_);
}

QuadExt IntervalPartition::minLength() const {
  QuadExt m = length(0);
  for (std::size_t j = 1; j < size(); ++j)
    if (length(j) < m) m = length(j);
  return m;
}

Letter IntervalPartition::letterOf(const QuadExt& x) const {
  std::size_t lo = 0, hi = size();
  if (orient_ == Orientation::Lower) {
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (ends_[mid] <= x)
        lo = mid;
      else
        hi = mid;
    }
  } else {
    const QuadExt y = x.isZero() ? QuadExt(1) : x;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (ends_[mid] < y)
        lo = mid;
      else
        hi = mid;
    }
  }
  return static_cast<Letter>(lo);
}

void RotationWordSpec::validate() const {
  if (alpha.empty()) throw InvalidInput("rotation word needs at least one angle");
  const QuadExt zero(0), one(1);
  for (const auto& a : alpha)
    if (a < zero || a >= one) throw InvalidInput("angle outside [0,1): " + a.toString());
  if (rho < zero || rho >= one) throw InvalidInput("intercept outside [0,1)");
  if (!rationalIndependenceCheck(alpha)) throw InvalidInput("1, alpha_1, ..., alpha_d are rationally dependent");
}

RotationWordSpec sturmianSpec(std::vector<QuadExt> alpha, QuadExt rho) {
  RotationWordSpec s;
  s.partition = IntervalPartition({alpha.at(0)}, Orientation::Lower);
  s.alpha = std::move(alpha);
  s.rho = std::move(rho);
  s.validate();
  return s;
}

RotationWordSpec defaultSturmianSpec() {
  return sturmianSpec({QuadExt::sqrt(2) - QuadExt(1), QuadExt::sqrt(3) - QuadExt(1)});
}

bool rationalIndependenceCheck(const std::vector<QuadExt>& alpha) {
  using BigQ = boost::multiprecision::cpp_rational;
  std::vector<std::int64_t> primes;
  for (const auto& a : alpha) primes = unionPrimes(primes, a.primes());
  std::vector<std::vector<BigQ>> rows;
  rows.push_back(std::vector<BigQ>(std::size_t{1} << primes.size(), BigQ(0)));
  rows[0][0] = 1;
  for (const auto& a : alpha) {
    const QuadExt b = a.withPrimes(primes);
    std::vector<BigQ> row;
    for (const auto& c : b.coeffs()) row.emplace_back(BigQ(c.num()) / BigQ(c.den()));
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const BigQ f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank == rows.size();
}

QuadExt orbitPoint(const RotationWordSpec& spec, const Point& p) {
  if (p.dim() != spec.dimension()) throw DimensionError("position dimension mismatch");
  QuadExt x = spec.rho;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p[i] != 0) x += spec.alpha[i].scaled(Rational(p[i]));
  return mod1(x);
}

Letter rotationLetter(const RotationWordSpec& spec, const Point& p) {
  return spec.partition.letterOf(orbitPoint(spec, p));
}

RotationWord::RotationWord(RotationWordSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  primes_ = spec_.rho.primes();
  for (const auto& a : spec_.alpha) primes_ = unionPrimes(primes_, a.primes());
  for (const auto& a : spec_.alpha) alpha_.push_back(a.withPrimes(primes_));
  rho_ = spec_.rho.withPrimes(primes_);
}

Letter RotationWord::at(const Point& p) const {
  if (p.dim() != alpha_.size()) throw DimensionError("position dimension mismatch");
  QuadExt x = rho_;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p[i] != 0) x += alpha_[i].scaled(Rational(p[i]));
  return spec_.partition.letterOf(mod1(x));
}

WordPtr rotationWord(const RotationWordSpec& spec) { return std::make_shared<RotationWord>(spec); }

IntervalSet factorIntervalSet(const RotationWordSpec& spec, const FiniteWord& f) {
  if (f.dim() != spec.dimension()) throw DimensionError("factor dimension mismatch");
  const auto& part = spec.partition;
  IntervalSet acc = IntervalSet::full(part.orientation());
  std::size_t n = 0;
  bool dead = false;
  forEachCell(f.size(), [&](const Point& i) {
    const Letter a = f.cells()[n++];
    if (dead) return;
    if (a >= part.size()) {
      acc = IntervalSet(part.orientation());
      dead = true;
      return;
    }
    QuadExt shift(0);
    for (std::size_t k = 0; k < i.dim(); ++k)
      if (i[k] != 0) shift += spec.alpha[k].scaled(Rational(i[k]));
    acc = acc.intersect(part.interval(a).rotatedBack(mod1(shift)));
    if (acc.empty()) dead = true;
  });
  return acc;
}

bool factorOccurs(const RotationWordSpec& spec, const FiniteWord& f) { return !factorIntervalSet(spec, f).empty(); }

bool occursAt(const RotationWordSpec& spec, const FiniteWord& f, const Point& p) {
  return factorIntervalSet(spec, f).contains(orbitPoint(spec, p));
}

ThreeGapReport threeGapAnalysis(const QuadExt& delta, const IntervalSet& I, std::int64_t L, const QuadExt& start) {
  if (delta.isRational()) throw InvalidInput("rotation angle must be irrational");
  if (I.empty()) throw InvalidInput("empty interval");
  if (L < 0) throw InvalidInput("negative horizon");
  const QuadExt step = mod1(delta);
  const QuadExt one(1);
  QuadExt x = mod1(start);
  ThreeGapReport rep;
  std::int64_t last = -1;
  for (std::int64_t l = 0; l <= L; ++l) {
    if (I.contains(x)) {
      if (last < 0) {
        rep.firstVisit = l;
      } else {
        const std::int64_t g = l - last;
        if (!std::binary_search(rep.gaps.begin(), rep.gaps.end(), g))
          rep.gaps.insert(std::upper_bound(rep.gaps.begin(), rep.gaps.end(), g), g);
      }
      last = l;
      ++rep.visits;
    }
    x += step;
    if (x >= one) x = x - one;
  }
  if (rep.visits == 0) throw EmptyVisit("no visit within horizon " + std::to_string(L));
  return rep;
}

Direction surdFailureDirection(const RotationWordSpec& spec, std::int64_t N, std::int64_t searchCap) {
  if (N < 1) throw InvalidInput("N must be positive");
  const std::size_t d = spec.dimension();
  if (d < 2) throw InvalidInput("needs dimension at least 2");
  const QuadExt bound = spec.partition.minLength();
  QuadExt tail(0);
  for (std::size_t i = 1; i < d; ++i) tail += spec.alpha[i].scaled(Rational(N));
  for (std::int64_t q1 = 0; q1 <= searchCap; ++q1) {
    if (std::gcd(q1, N) != 1) continue;
    const QuadExt theta = mod1(tail + spec.alpha[0].scaled(Rational(q1)));
    if (theta.scaled(Rational(N)) < bound) {
      Point q(d, N);
      q[0] = q1;
      return Direction(q);
    }
  }
  throw NotFound("no q_N with q_1 <= " + std::to_string(searchCap));
}

}  // namespace multirec
