#include "multirec/recurrence.hpp"

#include <algorithm>
#include <sstream>

#include "multirec/errors.hpp"

namespace multirec {

void RecurrenceBudget::validate() const {
  if (horizon < 1 || maxDir < 1 || maxSize < 1 || maxOrigin < 0 || blockBound < 1)
    throw InvalidInput("recurrence budget entries must be positive");
}

RecurrenceBudget RecurrenceBudget::parse(const std::string& csv) {
  std::vector<std::int64_t> v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw InvalidInput("bad budget entry '" + item + "'");
    }
  }
  if (v.size() != 5) throw InvalidInput("budget must be L,Q,S,P,B");
  RecurrenceBudget b;
  b.horizon = v[0];
  b.maxDir = v[1];
  b.maxSize = v[2];
  b.maxOrigin = v[3];
  b.blockBound = v[4];
  b.validate();
  return b;
}

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::BoundedWitnessed: return "BOUNDED_WITNESSED";
    case Verdict::NoRecurrenceInHorizon: return "NO_RECURRENCE_IN_HORIZON";
    case Verdict::GapExceedsClaim: return "GAP_EXCEEDS_CLAIM";
  }
  return "?";
}

std::vector<std::int64_t> occurrenceIndices(const WordSource& w, const Direction& q, const Size& s,
                                            const Position& origin, std::int64_t L) {
  if (q.dim() != w.dimension() || s.dim() != w.dimension() || origin.dim() != w.dimension())
    throw DimensionError("dimension mismatch");
  const FiniteWord target = factorAt(w, origin, s);
  std::vector<std::int64_t> out;
  for (std::int64_t l = 0; l <= L; ++l) {
    const Point p = origin + l * q;
    if (factorMatches(w, p, target)) out.push_back(l);
  }
  return out;
}

GapReport measureGaps(const WordSource& w, const Direction& q, const Size& s, const Position& origin,
                      std::int64_t L, std::optional<std::int64_t> claim) {
  GapReport r;
  r.direction = q;
  r.size = s;
  r.origin = origin;
  r.horizon = L;
  r.claim = claim;
  r.occurrences = occurrenceIndices(w, q, s, origin, L);
  const auto& occ = r.occurrences;
  std::int64_t tail = L - occ.back();
  if (occ.size() >= 2) {
    std::int64_t g = 0;
    for (std::size_t i = 1; i < occ.size(); ++i) g = std::max(g, occ[i] - occ[i - 1]);
    r.maxGap = g;
    r.verdict = tail <= g ? Verdict::BoundedWitnessed : Verdict::NoRecurrenceInHorizon;
  } else {
    r.verdict = Verdict::NoRecurrenceInHorizon;
  }
  if (claim && ((r.maxGap && *r.maxGap > *claim) || tail >= *claim)) r.verdict = Verdict::GapExceedsClaim;
  return r;
}

std::vector<Size> sizesUpTo(std::size_t dim, std::int64_t S) {
  std::vector<Size> out;
  forEachCell(Point(dim, S), [&](const Point& i) {
    Point s(dim);
    for (std::size_t k = 0; k < dim; ++k) s[k] = i[k] + 1;
    out.emplace_back(s);
  });
  return out;
}

std::vector<Position> originsUpTo(std::size_t dim, std::int64_t P) {
  std::vector<Position> out;
  forEachCell(Point(dim, P + 1), [&](const Point& i) { out.emplace_back(i); });
  return out;
}

namespace {

int severity(const GapReport& r) {
  switch (r.verdict) {
    case Verdict::GapExceedsClaim: return 2;
    case Verdict::NoRecurrenceInHorizon: return 1;
    default: return 0;
  }
}

struct Job {
  Direction q;
  Size s;
  Position p;
};

std::vector<GapReport> runJobs(const WordSource& w, const std::vector<Job>& jobs, const RecurrenceBudget& b,
                               const ClaimFn& claim) {
  return parallelMap<GapReport>(jobs.size(), b.workers, [&](std::size_t i) {
    const auto& j = jobs[i];
    return measureGaps(w, j.q, j.s, j.p, b.horizon, claim ? claim(j.s) : std::nullopt);
  });
}

std::vector<SizeSummary> bySize(const std::vector<Size>& sizes, const std::vector<Job>& jobs,
                                const std::vector<GapReport>& reports) {
  std::vector<SizeSummary> out;
  for (const auto& s : sizes) {
    std::vector<GapReport> mine;
    for (std::size_t i = 0; i < jobs.size(); ++i)
      if (jobs[i].s == s) mine.push_back(reports[i]);
    out.push_back(summarize(s, mine));
  }
  return out;
}

}  // namespace

SizeSummary summarize(const Size& s, const std::vector<GapReport>& reports) {
  SizeSummary sum;
  sum.size = s;
  sum.combinations = reports.size();
  if (reports.empty()) return sum;
  std::int64_t bound = 0;
  bool allWitnessed = true;
  const GapReport* worst = &reports.front();
  for (const auto& r : reports) {
    if (r.verdict != Verdict::BoundedWitnessed) allWitnessed = false;
    if (r.maxGap) bound = std::max(bound, *r.maxGap);
    const int a = severity(r), b = severity(*worst);
    if (a > b || (a == b && r.maxGap.value_or(0) > worst->maxGap.value_or(0))) worst = &r;
  }
  sum.worst = *worst;
  if (allWitnessed) sum.bound = bound;
  sum.verdict = worst->verdict;
  return sum;
}

std::vector<GapReport> checkURDEmpirical(const WordSource& w, const RecurrenceBudget& budget,
                                         const ClaimFn& claim) {
  budget.validate();
  const std::size_t d = w.dimension();
  std::vector<Job> jobs;
  for (const auto& q : enumerateDirections(d, budget.maxDir))
    for (const auto& s : sizesUpTo(d, budget.maxSize)) jobs.push_back({q, s, Position::origin(d)});
  return runJobs(w, jobs, budget, claim);
}

std::vector<SizeSummary> checkSURDEmpirical(const WordSource& w, const RecurrenceBudget& budget,
                                            const ClaimFn& claim) {
  budget.validate();
  const std::size_t d = w.dimension();
  const auto sizes = sizesUpTo(d, budget.maxSize);
  std::vector<Job> jobs;
  for (const auto& s : sizes)
    for (const auto& q : enumerateDirections(d, budget.maxDir)) jobs.push_back({q, s, Position::origin(d)});
  return bySize(sizes, jobs, runJobs(w, jobs, budget, claim));
}

std::vector<SizeSummary> checkSSURDOEmpirical(const WordSource& w, const RecurrenceBudget& budget,
                                              const ClaimFn& claim) {
  budget.validate();
  const std::size_t d = w.dimension();
  const auto sizes = sizesUpTo(d, budget.maxSize);
  std::vector<Job> jobs;
  for (const auto& s : sizes)
    for (const auto& p : originsUpTo(d, budget.maxOrigin))
      for (const auto& q : enumerateDirections(d, budget.maxDir)) jobs.push_back({q, s, p});
  return bySize(sizes, jobs, runJobs(w, jobs, budget, claim));
}

namespace {

// Summed-area table over a d-dimensional box, padded by one on the low side.
class BoxCounter {
 public:
  BoxCounter(const Point& extent, const std::vector<std::uint8_t>& bits) : ext_(extent) {
    const std::size_t d = ext_.dim();
    pext_ = Point(d);
    for (std::size_t k = 0; k < d; ++k) pext_[k] = ext_[k] + 1;
    std::int64_t n = 1;
    for (std::size_t k = 0; k < d; ++k) n *= pext_[k];
    sums_.assign(static_cast<std::size_t>(n), 0);
    std::size_t src = 0;
    forEachCell(ext_, [&](const Point& i) {
      Point j = i;
      for (std::size_t k = 0; k < d; ++k) ++j[k];
      sums_[index(j)] = bits[src++];
    });
    for (std::size_t axis = 0; axis < d; ++axis) {
      forEachCell(pext_, [&](const Point& i) {
        if (i[axis] == 0) return;
        Point prev = i;
        --prev[axis];
        sums_[index(i)] += sums_[index(prev)];
      });
    }
  }

  // Count of set bits in [lo, hi] inclusive.
  std::int64_t count(const Point& lo, const Point& hi) const {
    const std::size_t d = ext_.dim();
    std::int64_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      Point c(d);
      int sign = 1;
      for (std::size_t k = 0; k < d; ++k) {
        if (mask & (1u << k)) {
          c[k] = lo[k];
          sign = -sign;
        } else {
          c[k] = hi[k] + 1;
        }
      }
      total += sign * sums_[index(c)];
    }
    return total;
  }

 private:
  std::size_t index(const Point& i) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < i.dim(); ++k) idx = idx * static_cast<std::size_t>(pext_[k]) + i[k];
    return idx;
  }

  Point ext_;
  Point pext_;
  std::vector<std::int64_t> sums_;
};

}  // namespace

std::optional<std::int64_t> urWindowBound(const WordSource& w, const Size& s, std::int64_t B) {
  const std::size_t d = w.dimension();
  if (s.dim() != d) throw DimensionError("dimension mismatch");
  if (B < 1) throw InvalidInput("block bound must be positive");
  const std::int64_t minB = s.maxCoord();
  if (minB > B) return std::nullopt;
  // Occurrence corners o with o + s <= 2B.
  Point extent(d);
  for (std::size_t k = 0; k < d; ++k) extent[k] = 2 * B - s[k] + 1;
  const FiniteWord f = prefixOf(w, s);
  std::vector<std::uint8_t> bits;
  forEachCell(extent, [&](const Point& o) { bits.push_back(factorMatches(w, o, f) ? 1 : 0); });
  const BoxCounter counter(extent, bits);

  auto ok = [&](std::int64_t b) {
    bool good = true;
    forEachCell(Point(d, B + 1), [&](const Point& c) {
      if (!good) return;
      Point hi(d);
      for (std::size_t k = 0; k < d; ++k) hi[k] = c[k] + b - s[k];
      if (counter.count(c, hi) == 0) good = false;
    });
    return good;
  };
  if (!ok(B)) return std::nullopt;
  std::int64_t lo = minB, hi = B;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

std::vector<URReport> checkUREmpirical(const WordSource& w, const RecurrenceBudget& budget) {
  budget.validate();
  const auto sizes = sizesUpTo(w.dimension(), budget.maxSize);
  return parallelMap<URReport>(sizes.size(), budget.workers, [&](std::size_t i) {
    return URReport{sizes[i], urWindowBound(w, sizes[i], budget.blockBound)};
  });
}

std::int64_t longestConstantRun(const WordSource& w, const Direction& q, std::int64_t horizon) {
  if (q.dim() != w.dimension()) throw DimensionError("dimension mismatch");
  std::int64_t best = 0, run = 0;
  Letter prev = 0;
  for (std::int64_t l = 0; l <= horizon; ++l) {
    const Letter a = w.at(l * q);
    run = (l > 0 && a == prev) ? run + 1 : 1;
    prev = a;
    best = std::max(best, run);
  }
  return best;
}

}  // namespace multirec
