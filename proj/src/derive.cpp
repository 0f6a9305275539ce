#include "multirec/derive.hpp"

#include <set>
#include <sstream>

#include "multirec/errors.hpp"
#include "multirec/parallel.hpp"

namespace multirec {

std::vector<Letter> ReturnWord::heads() const {
  std::vector<Letter> out;
  for (const auto& f : letters) out.push_back(f.cells().front());
  return out;
}

std::strong_ordering operator<=>(const ReturnWord& a, const ReturnWord& b) {
  return std::lexicographical_compare_three_way(a.letters.begin(), a.letters.end(), b.letters.begin(),
                                                b.letters.end());
}

std::string toString(const ReturnWord& r) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.letters.size(); ++i) {
    if (i) out << ' ';
    for (Letter c : r.letters[i].cells()) out << c;
  }
  return out.str();
}

int CodeTable::assign(const ReturnWord& r) {
  auto [it, fresh] = index_.emplace(r, static_cast<int>(words_.size()));
  if (fresh) words_.push_back(r);
  return it->second;
}

int CodeTable::codeOf(const ReturnWord& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

ReturnScan returnWordsAlong(const WordSource& w, const Direction& q, const Size& s, std::int64_t L,
                            std::size_t needed) {
  if (q.dim() != w.dimension() || s.dim() != w.dimension()) throw DimensionError("dimension mismatch");
  ReturnScan scan;
  scan.direction = q;
  scan.size = s;
  const FiniteWord u = factorAt(w, Point(w.dimension()), s);
  ReturnWord current;
  for (std::int64_t l = 0; l <= L && scan.words.size() < needed; ++l) {
    FiniteWord f = factorAt(w, l * q, s);
    if (f == u) {
      if (!scan.occurrences.empty()) {
        scan.codes.push_back(scan.table.assign(current));
        scan.words.push_back(std::move(current));
        current = {};
      }
      scan.occurrences.push_back(l);
    }
    current.letters.push_back(std::move(f));
  }
  if (scan.words.empty())
    throw ReturnScanFailed("prefix of size " + toString(s) + " does not return along " + toString(q) +
                           " within " + std::to_string(L));
  if (needed != static_cast<std::size_t>(-1) && scan.words.size() < needed)
    throw ReturnScanFailed("only " + std::to_string(scan.words.size()) + " return words along " + toString(q) +
                           " within " + std::to_string(L));
  return scan;
}

std::string toString(DerivativeScheme s) { return s == DerivativeScheme::Uniform ? "uniform" : "per-direction"; }

std::size_t DerivativeWord::distinctCodes() const {
  std::set<std::int32_t> seen;
  for (auto c : grid.cells())
    if (c >= 0) seen.insert(c);
  return seen.size();
}

namespace {

// Box cells grouped by their direction, with the largest multiple needed.
std::map<Direction, std::int64_t> boxDirections(const Size& box) {
  std::map<Direction, std::int64_t> out;
  forEachCell(box, [&](const Point& p) {
    if (p.isZero()) return;
    const std::int64_t g = gcdOf(p);
    Point q = p;
    for (auto& c : q) c /= g;
    auto& m = out[Direction(q)];
    m = std::max(m, g);
  });
  return out;
}

std::map<Direction, ReturnScan> scanBox(const WordSource& w, const Size& s, const Size& box, std::int64_t L,
                                        unsigned workers) {
  const auto dirs = boxDirections(box);
  std::vector<std::pair<Direction, std::int64_t>> jobs(dirs.begin(), dirs.end());
  auto scans = parallelMap<ReturnScan>(jobs.size(), workers, [&](std::size_t i) {
    return returnWordsAlong(w, jobs[i].first, s, L, static_cast<std::size_t>(jobs[i].second) + 1);
  });
  std::map<Direction, ReturnScan> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) out.emplace(jobs[i].first, std::move(scans[i]));
  return out;
}

void checkBox(const WordSource& w, const Size& box) {
  if (box.dim() != w.dimension()) throw DimensionError("box dimension mismatch");
}

}  // namespace

DerivativeWord derivativePerDirection(const WordSource& w, const Size& s, const Size& box, std::int64_t L,
                                      unsigned workers) {
  checkBox(w, box);
  const auto scans = scanBox(w, s, box, L, workers);
  DerivativeWord d;
  d.scheme = DerivativeScheme::PerDirection;
  d.box = box;
  d.grid = PartialGrid(box);
  forEachCell(box, [&](const Point& p) {
    if (p.isZero()) {
      d.grid.set(p, 0);
      return;
    }
    const std::int64_t g = gcdOf(p);
    Point q = p;
    for (auto& c : q) c /= g;
    d.grid.set(p, static_cast<Letter>(scans.at(Direction(q)).codes.at(static_cast<std::size_t>(g))));
  });
  return d;
}

DerivativeWord derivativeUniform(const WordSource& w, const Size& s, const Size& box, std::int64_t L,
                                 const ScanOrder& order, unsigned workers) {
  checkBox(w, box);
  DerivativeWord d;
  d.scheme = DerivativeScheme::Uniform;
  d.box = box;
  d.grid = PartialGrid(box);
  if (order.seedMaxDir > 0) {
    const auto seeds = enumerateDirections(w.dimension(), order.seedMaxDir);
    auto scans = parallelMap<ReturnScan>(seeds.size(), workers,
                                         [&](std::size_t i) { return returnWordsAlong(w, seeds[i], s, L); });
    for (const auto& sc : scans)
      for (const auto& r : sc.words) d.table.assign(r);
  }
  const auto scans = scanBox(w, s, box, L, workers);
  forEachCell(box, [&](const Point& p) {
    if (p.isZero()) return;
    const std::int64_t g = gcdOf(p);
    Point q = p;
    for (auto& c : q) c /= g;
    const auto& r = scans.at(Direction(q)).words.at(static_cast<std::size_t>(g));
    d.grid.set(p, static_cast<Letter>(d.table.assign(r)));
  });
  return d;
}

ReturnWord cellReturnWord(const WordSource& w, const Size& s, const Point& p, std::int64_t L) {
  if (p.isZero()) throw InvalidInput("the origin has no return word");
  const std::int64_t g = gcdOf(p);
  Point q = p;
  for (auto& c : q) c /= g;
  return returnWordsAlong(w, Direction(q), s, L, static_cast<std::size_t>(g) + 1).words.at(static_cast<std::size_t>(g));
}

}  // namespace multirec
