#include <catch_amalgamated.hpp>

#include "multirec/errors.hpp"
#include "multirec/generators.hpp"
#include "multirec/morphism.hpp"
#include "multirec/presets.hpp"

using namespace multirec;

namespace {

// Literal substitution: every cell of the current block is replaced by its image.
FiniteWord substitute(const Morphism& phi, const FiniteWord& f) {
  const auto& m = phi.dims();
  Point big(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) big[i] = f.size()[i] * m[i];
  FiniteWord out{Size(big)};
  forEachCell(f.size(), [&](const Point& p) {
    const auto& img = phi.image(f.at(p));
    forEachCell(m, [&](const Point& r) {
      Point q(f.dim());
      for (std::size_t i = 0; i < f.dim(); ++i) q[i] = p[i] * m[i] + r[i];
      out.set(q, img.at(r));
    });
  });
  return out;
}

FiniteWord bruteIterate(const Morphism& phi, Letter a, int n) {
  FiniteWord f(Size(Point(phi.dim(), 1)), a);
  for (int i = 0; i < n; ++i) f = substitute(phi, f);
  return f;
}

std::vector<Letter> iterate1d(const std::vector<std::vector<Letter>>& rules, std::size_t len) {
  std::vector<Letter> w{0};
  while (w.size() < len) {
    std::vector<Letter> next;
    for (auto a : w) next.insert(next.end(), rules[a].begin(), rules[a].end());
    w = std::move(next);
  }
  return w;
}

}  // namespace

TEST_CASE("prolongability") {
  const auto s = morphismPreset("sierpinski").phi;
  CHECK(checkProlongable(s, 1));
  CHECK(checkProlongable(s, 0));
  const auto pre = morphismPreset("preimage-3x2").phi;
  CHECK(checkProlongable(pre, 0));
  CHECK(checkProlongable(pre, 1));
  const auto other = Morphism::fromRowsTopFirst({{{1, 1}, {1, 1}}, {{0, 0}, {1, 0}}});
  CHECK_FALSE(checkProlongable(other, 0));
  CHECK_THROWS_AS(morphicLetter(other, 0, Position{3, 3}), NotProlongable);
}

TEST_CASE("digit descent agrees with literal substitution") {
  for (const auto& name : morphismPresetNames()) {
    const auto p = morphismPreset(name);
    const int n = p.phi.dims()[0] == 2 ? 5 : 3;
    const auto brute = bruteIterate(p.phi, p.start, n);
    CHECK(p.phi.iterate(p.start, n) == brute);
    forEachCell(brute.size(), [&](const Point& q) {
      REQUIRE(rectMorphicLetter(p.phi, p.start, Position(q)) == brute.at(q));
    });
  }
}

TEST_CASE("fixed-point prefixes nest") {
  const auto phi = morphismPreset("ssurdo-3x3").phi;
  for (int n = 0; n < 3; ++n) {
    const auto big = morphicPrefix(phi, 1, n + 1);
    const auto small = morphicPrefix(phi, 1, n);
    CHECK(big.block(Point{0, 0}, small.size()) == small);
  }
  CHECK(morphicPrefix(phi, 1, 0) == FiniteWord(Size{1, 1}, 1));
  const auto one = morphicPrefix(phi, 1, 1);
  for (std::int64_t y = 0; y < 3; ++y) {
    CHECK(one.at(Point{0, y}) == 1);
    CHECK(one.at(Point{1, y}) == 0);
  }
  CHECK(one.at(Point{2, 0}) == 0);
  CHECK(one.at(Point{2, 1}) == 1);
  CHECK(one.at(Point{2, 2}) == 1);
}

TEST_CASE("sierpinski square of 1") {
  const auto f = morphicPrefix(morphismPreset("sierpinski").phi, 1, 2);
  for (std::int64_t x = 0; x < 4; ++x) CHECK(f.at(Point{x, 0}) == 1);
  CHECK(f.at(Point{0, 3}) == 1);
  for (std::int64_t x = 1; x < 4; ++x) CHECK(f.at(Point{x, 3}) == 0);
}

TEST_CASE("preimage morphism letters") {
  const auto phi = morphismPreset("preimage-3x2").phi;
  CHECK(rectMorphicLetter(phi, 1, Position{0, 0}) == 1);
  CHECK(rectMorphicLetter(phi, 1, Position{2, 0}) == 0);
  CHECK(rectMorphicLetter(phi, 1, Position{8, 3}) == 1);
  CHECK(rectMorphicLetter(phi, 1, Position{4, 7}) == 1);
  // The (4,7) cell of phi^3(1) sits in the image of phi^2(1) at (1,3).
  const auto parent = phi.iterate(1, 2).at(Point{1, 3});
  CHECK(phi.image(parent).at(Point{4 % 3, 7 % 2}) == 1);
}

TEST_CASE("the two preimage morphism variants differ in 22 cells") {
  const auto fig = morphismPreset("preimage-3x2").phi.iterate(1, 3);
  const auto cap = morphismPreset("preimage-3x2-caption").phi.iterate(1, 3);
  REQUIRE(fig.size() == Size{27, 8});
  std::size_t diff = 0;
  for (std::size_t i = 0; i < fig.cells().size(); ++i) diff += fig.cells()[i] != cap.cells()[i];
  CHECK(diff == 22);
}

TEST_CASE("Thue-Morse") {
  const std::vector<Letter> t{0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0};
  for (std::uint64_t n = 0; n < t.size(); ++n) CHECK(thueMorse(n) == t[n]);
  for (int k = 0; k < 62; ++k) CHECK(thueMorse(std::uint64_t{1} << k) == 1);
  CHECK(thueMorse(20) == 0);
  const auto ref = iterate1d({{0, 1}, {1, 0}}, 4096);
  for (std::uint64_t n = 0; n < 4096; ++n) REQUIRE(thueMorse(n) == ref[n]);
}

TEST_CASE("Fibonacci word") {
  const std::vector<Letter> f{0, 1, 0, 0, 1, 0, 1, 0, 0};
  for (std::uint64_t n = 0; n < f.size(); ++n) CHECK(fibonacciWord(n) == f[n]);
  CHECK(fibonacciWord(12) == 1);
  const auto ref = iterate1d({{0, 1}, {0}}, 5000);
  for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(fibonacciWord(n) == ref[n]);
}

TEST_CASE("gcd word places u along every direction") {
  const auto w = gcdWord(thueMorseWord(), 2);
  CHECK(w->at(Point{2, 3}) == 1);
  CHECK(w->at(Point{0, 0}) == 0);
  CHECK(w->at(Point{4, 6}) == 1);
  for (const auto& q : enumerateDirections(2, 6))
    for (std::int64_t l = 0; l <= 300; ++l) REQUIRE(w->at(l * q) == thueMorse(static_cast<std::uint64_t>(l)));
  const auto w3 = gcdWord(thueMorseWord(), 3);
  CHECK(w3->at(Point{6, 10, 15}) == thueMorse(1));
  CHECK(w3->at(Point{6, 12, 18}) == thueMorse(6));
}

TEST_CASE("Fibonacci rows word") {
  const auto w = fibRowsWord();
  const std::vector<Letter> bottom{1, 0, 1, 0, 0, 1, 0, 1, 0};
  for (std::int64_t x = 0; x < 9; ++x) CHECK(w->at(Point{x, 0}) == bottom[x]);
  for (std::int64_t y = 0; y < 10; ++y)
    for (std::int64_t x = 1; x < 40; ++x)
      CHECK(w->at(Point{x, y}) == fibonacciWord(static_cast<std::uint64_t>(x - 1)));
  // The corner prefix only shows up in column 0.
  const auto prefix = prefixOf(*w, Size{2, 2});
  forEachCell(Size{63, 63}, [&](const Point& p) {
    if (factorMatches(*w, p, prefix)) REQUIRE(p[0] == 0);
  });
}

TEST_CASE("Toeplitz rows word") {
  const auto w = toeplitzRowsWord();
  CHECK(w->at(Point{0, 0}) == 1);
  for (std::int64_t x = 1; x < 300; ++x) CHECK(w->at(Point{x, 0}) == 0);
  const std::vector<Letter> row4{1, 0, 0, 0, 1, 0, 0, 0};
  for (std::int64_t x = 0; x < 8; ++x) CHECK(w->at(Point{x, 4}) == row4[x]);
  for (std::int64_t y = 1; y < 64; ++y) {
    const std::int64_t period = y & -y;
    for (std::int64_t x = 0; x < 64; ++x) CHECK(w->at(Point{x, y}) == (x % period == 0 ? 1u : 0u));
  }
  // Without row 0, the (2^N, 2^N) prefix repeats with periods 2^(N+1) on both axes.
  const auto shifted = translateOrigin(w, Position{0, 1});
  for (int N = 1; N <= 3; ++N) {
    const std::int64_t side = std::int64_t{1} << N, per = side * 2;
    const auto prefix = prefixOf(*shifted, Size{side, side});
    for (std::int64_t i = 0; i < 6; ++i)
      for (std::int64_t j = 0; j < 6; ++j) CHECK(factorMatches(*shifted, Point{i * per, j * per}, prefix));
  }
}

TEST_CASE("Toeplitz construction") {
  for (auto policy : {FillPolicy::Constant, FillPolicy::SeededRandom}) {
    ToeplitzSchedule sched;
    sched.policy = policy;
    sched.seed = 42;
    sched.steps = 4;
    const auto lazy = toeplitzConstruct(sched);
    const auto grid = toeplitzGrid(sched, 32);
    CHECK(grid.filledCount() == 32 * 32);
    forEachCell(Size{32, 32}, [&](const Point& p) {
      REQUIRE(grid.at(p) == static_cast<std::int32_t>(lazy->at(p)));
      if (p[0] % 2 == 0 && p[1] % 2 == 0) REQUIRE(lazy->at(p) == sched.anchor);
    });
  }
  ToeplitzSchedule a, b;
  a.policy = b.policy = FillPolicy::SeededRandom;
  a.seed = b.seed = 7;
  const auto wa = toeplitzConstruct(a), wb = toeplitzConstruct(b);
  b.seed = 8;
  const auto wc = toeplitzConstruct(b);
  bool differs = false;
  forEachCell(Size{64, 64}, [&](const Point& p) {
    REQUIRE(wa->at(p) == wb->at(p));
    differs = differs || wa->at(p) != wc->at(p);
  });
  CHECK(differs);

  ToeplitzSchedule c;
  c.constant = 0;
  const auto word = toeplitzConstruct(c);
  const auto phi = Morphism::fromRowsTopFirst({{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}}});
  forEachCell(Size{64, 64}, [&](const Point& p) { REQUIRE(word->at(p) == morphicLetter(phi, 1, Position(p))); });
}

TEST_CASE("URD-not-UR construction") {
  UrdNotUrSchedule sched;
  sched.steps = 4;
  sched.box = 96;
  const auto r = urdNotUrConstruct(sched);
  REQUIRE(r.steps.size() == 3);
  CHECK(r.bestEffort);
  for (const auto& step : r.steps) {
    CHECK(step.zeroBlockPlaced);
    forEachCell(Size::cube(2, step.n), [&](const Point& i) {
      REQUIRE(r.grid.at(step.zeroBlock + i) == 0);
      REQUIRE(r.grid.at(i) == static_cast<std::int32_t>(step.prefix.at(i)));
    });
    CHECK(step.copies.size() == enumerateDirections(2, step.n - 1).size());
    for (const auto& c : step.copies) {
      for (std::int64_t l = 1;; ++l) {
        const Point corner = (l * c.b) * c.direction;
        if (!r.grid.inside(corner)) break;
        forEachCell(step.prefix.size(), [&](const Point& i) {
          if (r.grid.inside(corner + i)) REQUIRE(r.grid.at(corner + i) == static_cast<std::int32_t>(step.prefix.at(i)));
        });
      }
    }
  }
  UrdNotUrSchedule tight = sched;
  tight.cap = 1;
  CHECK_THROWS_AS(urdNotUrConstruct(tight), ScheduleExhausted);
}
