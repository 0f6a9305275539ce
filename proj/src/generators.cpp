#include "multirec/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace multirec {

Letter thueMorse(std::uint64_t n) { return static_cast<Letter>(std::popcount(n) & 1); }

Letter fibonacciWord(std::uint64_t n) {
  // Zeckendorf digits over 1, 2, 3, 5, ...; the letter is the last digit.
  std::vector<std::uint64_t> fib{1, 2};
  while (fib.back() <= n) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  Letter last = 0;
  for (auto it = fib.rbegin(); it != fib.rend(); ++it) {
    if (*it <= n) {
      n -= *it;
      last = (*it == 1) ? 1 : 0;
    }
  }
  return last;
}

WordPtr thueMorseWord() {
  return makeWord(1, 2, [](const Point& p) { return thueMorse(static_cast<std::uint64_t>(p[0])); }, "thue-morse");
}

WordPtr fibonacciWordSource() {
  return makeWord(1, 2, [](const Point& p) { return fibonacciWord(static_cast<std::uint64_t>(p[0])); }, "fibonacci");
}

WordPtr gcdWord(const WordPtr& u, std::size_t dim) {
  if (u->dimension() != 1) throw DimensionError("gcd word needs a unidimensional word");
  return makeWord(
      dim, u->alphabetSize(), [u](const Point& p) { return u->at(Point{gcdOf(p)}); },
      "gcd(" + u->describe() + ")");
}

WordPtr fibRowsWord() {
  return makeWord(
      2, 2,
      [](const Point& p) -> Letter {
        if (p[0] == 0) return p[1] % 2 == 0 ? 1 : 0;
        return fibonacciWord(static_cast<std::uint64_t>(p[0] - 1));
      },
      "fib-rows");
}

WordPtr toeplitzRowsWord() {
  return makeWord(
      2, 2,
      [](const Point& p) -> Letter {
        const auto x = static_cast<std::uint64_t>(p[0]);
        const auto y = static_cast<std::uint64_t>(p[1]);
        if (y == 0) return x == 0 ? 1 : 0;
        const auto k = std::countr_zero(y);
        const std::uint64_t period = std::uint64_t{1} << k;
        return (x & (period - 1)) == 0 ? 1 : 0;
      },
      "toeplitz-rows");
}

PartialGrid::PartialGrid(const Size& size)
    : size_(size), cells_(static_cast<std::size_t>(size.volume()), -1) {}

bool PartialGrid::inside(const Point& p) const {
  if (p.dim() != size_.dim()) return false;
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p[i] < 0 || p[i] >= size_[i]) return false;
  return true;
}

std::size_t PartialGrid::index(const Point& p) const {
  if (!inside(p)) throw InvalidInput("grid index " + toString(p) + " outside " + toString(size_));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) idx = idx * size_[i] + p[i];
  return idx;
}

std::size_t PartialGrid::filledCount() const {
  return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](auto c) { return c >= 0; }));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Letter toeplitzFill(const ToeplitzSchedule& sched, int step, std::int64_t rx, std::int64_t ry) {
  if (sched.policy == FillPolicy::Constant) return sched.constant;
  std::uint64_t h = splitmix64(sched.seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(step));
  h = splitmix64(h ^ static_cast<std::uint64_t>(rx));
  h = splitmix64(h ^ (static_cast<std::uint64_t>(ry) << 1));
  return static_cast<Letter>(h % sched.alphabet);
}

namespace {

void validate(const ToeplitzSchedule& s) {
  if (s.steps < 1) throw InvalidInput("Toeplitz schedule needs at least one step");
  if (s.alphabet < 2) throw InvalidInput("Toeplitz alphabet needs two letters");
  if (s.anchor >= s.alphabet || s.constant >= s.alphabet) throw InvalidInput("fill letter outside alphabet");
}

bool stepOneResidue(std::int64_t rx, std::int64_t ry) {
  return (rx == 0 && ry == 1) || (rx == 1 && ry == 0) || (rx == 1 && ry == 1);
}

}  // namespace

WordPtr toeplitzConstruct(const ToeplitzSchedule& sched) {
  validate(sched);
  return makeWord(
      2, sched.alphabet,
      [sched](const Point& p) -> Letter {
        const std::int64_t x = p[0], y = p[1];
        if (x % 2 == 0 && y % 2 == 0) return sched.anchor;
        if (stepOneResidue(x % 4, y % 4)) return toeplitzFill(sched, 1, x % 4, y % 4);
        for (int n = 2; n < 62; ++n) {
          const std::int64_t period = std::int64_t{1} << (n + 2);
          const std::int64_t box = std::int64_t{1} << (n + 1);
          const std::int64_t rx = x % period, ry = y % period;
          if (rx < box && ry < box) return toeplitzFill(sched, n, rx, ry);
        }
        throw ConstructionBug("position " + toString(p) + " never filled");
      },
      "toeplitz");
}

PartialGrid toeplitzGrid(const ToeplitzSchedule& sched, std::int64_t side) {
  validate(sched);
  if (sched.steps > 28) throw InvalidInput("too many steps for an explicit grid");
  const std::int64_t inner = std::max(side, std::int64_t{1} << (sched.steps + 1));
  PartialGrid g(Size{inner, inner});
  auto put = [&](std::int64_t x, std::int64_t y, Letter a) {
    const Point p{x, y};
    if (g.filled(p)) {
      if (static_cast<Letter>(g.at(p)) != a)
        throw ConstructionBug("cell " + toString(p) + " assigned twice with different letters");
      throw ConstructionBug("cell " + toString(p) + " assigned twice");
    }
    g.set(p, a);
  };
  for (std::int64_t x = 0; x < inner; x += 2)
    for (std::int64_t y = 0; y < inner; y += 2) put(x, y, sched.anchor);
  for (std::int64_t x = 0; x < inner; ++x)
    for (std::int64_t y = 0; y < inner; ++y)
      if (stepOneResidue(x % 4, y % 4)) put(x, y, toeplitzFill(sched, 1, x % 4, y % 4));
  for (int n = 2; n <= sched.steps; ++n) {
    const std::int64_t box = std::int64_t{1} << (n + 1);
    const std::int64_t period = box * 2;
    std::vector<std::pair<std::int64_t, std::int64_t>> open;
    for (std::int64_t x = 0; x < box; ++x)
      for (std::int64_t y = 0; y < box; ++y)
        if (!g.filled(Point{x, y})) open.emplace_back(x, y);
    for (auto [kx, ky] : open) {
      const Letter a = toeplitzFill(sched, n, kx, ky);
      for (std::int64_t x = kx; x < inner; x += period)
        for (std::int64_t y = ky; y < inner; y += period) put(x, y, a);
    }
  }
  if (inner == side) return g;
  PartialGrid out(Size{side, side});
  for (std::int64_t x = 0; x < side; ++x)
    for (std::int64_t y = 0; y < side; ++y) {
      const Point p{x, y};
      if (g.filled(p)) out.set(p, static_cast<Letter>(g.at(p)));
    }
  return out;
}

namespace {

struct UrdBuilder {
  const UrdNotUrSchedule& sched;
  PartialGrid grid;

  // Cells of the copy of f at corner c that land inside the grid.
  template <class F>
  void forCopy(const Point& corner, const FiniteWord& f, F&& fn) {
    std::size_t n = 0;
    forEachCell(f.size(), [&](const Point& i) {
      const Letter a = f.cells()[n++];
      const Point p = corner + i;
      if (grid.inside(p)) fn(p, a);
    });
  }

  bool cornerInside(const Point& c) const {
    for (std::size_t i = 0; i < c.dim(); ++i)
      if (c[i] >= grid.size()[i]) return false;
    return true;
  }

  bool consistent(const Direction& q, std::int64_t b, const FiniteWord& f) {
    std::unordered_map<std::size_t, Letter> pending;
    bool ok = true;
    for (std::int64_t l = 1; ok; ++l) {
      const Point corner = checkedMul(l, b) * q;
      if (!cornerInside(corner)) break;
      forCopy(corner, f, [&](const Point& p, Letter a) {
        if (!ok) return;
        if (grid.filled(p)) {
          if (static_cast<Letter>(grid.at(p)) != a) ok = false;
          return;
        }
        std::size_t key = 0;
        for (std::size_t i = 0; i < p.dim(); ++i) key = key * grid.size()[i] + p[i];
        auto [it, fresh] = pending.emplace(key, a);
        if (!fresh && it->second != a) ok = false;
      });
    }
    return ok;
  }

  void write(const Direction& q, std::int64_t b, const FiniteWord& f) {
    for (std::int64_t l = 1;; ++l) {
      const Point corner = checkedMul(l, b) * q;
      if (!cornerInside(corner)) break;
      forCopy(corner, f, [&](const Point& p, Letter a) {
        if (grid.filled(p)) {
          if (static_cast<Letter>(grid.at(p)) != a) throw ConstructionBug("copy overwrote " + toString(p));
        } else {
          grid.set(p, a);
        }
      });
    }
  }

  bool emptyBlock(const Point& corner, std::int64_t n) {
    bool ok = true;
    forEachCell(Point(corner.dim(), n), [&](const Point& i) {
      if (ok && grid.filled(corner + i)) ok = false;
    });
    return ok;
  }
};

}  // namespace

UrdNotUrResult urdNotUrConstruct(const UrdNotUrSchedule& sched) {
  if (sched.dim < 2) throw InvalidInput("construction needs dimension at least 2");
  if (sched.steps < 1 || sched.box < 4) throw InvalidInput("schedule too small");
  UrdBuilder B{sched, PartialGrid(Size::cube(sched.dim, sched.box))};
  UrdNotUrResult result;
  const std::size_t d = sched.dim;
  B.grid.set(Point(d), 1);
  for (int n = 2; n <= sched.steps; ++n) {
    UrdStepRecord rec;
    rec.n = n;
    const Size ns = Size::cube(d, n);
    FiniteWord prefix(ns);
    std::size_t idx = 0;
    forEachCell(ns, [&](const Point& i) {
      if (!B.grid.filled(i)) {
        Letter a = 0;
        if (sched.randomFill)
          a = static_cast<Letter>(splitmix64(sched.seed ^ splitmix64((std::uint64_t(n) << 32) + idx)) & 1);
        B.grid.set(i, a);
      }
      prefix.cells()[idx++] = static_cast<Letter>(B.grid.at(i));
    });
    rec.prefix = prefix;
    if (n >= 2) {
      for (const auto& q : enumerateDirections(d, n - 1)) {
        std::int64_t b = 1;
        while (!B.consistent(q, b, prefix)) {
          if (++b > sched.cap)
            throw ScheduleExhausted("no b for direction " + toString(q) + " at step " + std::to_string(n));
        }
        B.write(q, b, prefix);
        rec.copies.push_back({q, b});
      }
    }
    // Zero block strictly below the diagonal, as close to the origin as possible.
    const std::int64_t room = sched.box - n;
    for (std::int64_t total = 0; total <= room * static_cast<std::int64_t>(d) && !rec.zeroBlockPlaced; ++total) {
      forEachCell(Point(d, room + 1), [&](const Point& c) {
        if (rec.zeroBlockPlaced) return;
        std::int64_t sum = 0;
        for (auto v : c) sum += v;
        if (sum != total) return;
        for (std::size_t i = 1; i < d; ++i)
          if (c[i] + n - 1 >= c[0]) return;
        if (!B.emptyBlock(c, n)) return;
        forEachCell(ns, [&](const Point& i) { B.grid.set(c + i, 0); });
        rec.zeroBlock = Position(c);
        rec.zeroBlockPlaced = true;
      });
    }
    result.steps.push_back(std::move(rec));
  }
  result.grid = std::move(B.grid);
  return result;
}

}  // namespace multirec
