#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "multirec/errors.hpp"
#include "multirec/quadext.hpp"
#include "multirec/recurrence.hpp"
#include "multirec/rotation.hpp"

using namespace multirec;

namespace {

const QuadExt r2 = QuadExt::sqrt(2), r3 = QuadExt::sqrt(3), r5 = QuadExt::sqrt(5);

QuadExt golden() { return (r5 - QuadExt(1)).scaled(Rational(1, 2)); }

std::vector<std::int64_t> floatGaps(double delta, double lo, double hi, std::int64_t L) {
  std::set<std::int64_t> gaps;
  std::int64_t last = -1;
  for (std::int64_t l = 0; l <= L; ++l) {
    const double x = std::fmod(static_cast<double>(l) * delta, 1.0);
    if (x >= lo && x < hi) {
      if (last >= 0) gaps.insert(l - last);
      last = l;
    }
  }
  return {gaps.begin(), gaps.end()};
}

}  // namespace

TEST_CASE("exact comparison") {
  CHECK(qextCompare(QuadExt(1) + r2, Rational(5, 2)) == Cmp::LT);
  CHECK(qextCompare(r2 + r3, r2 + r3) == Cmp::EQ);
  CHECK(qextCompare((QuadExt(1) + r5).scaled(Rational(1, 2)), Rational(3, 2)) == Cmp::GT);
  CHECK(r2 * r2 == QuadExt(2));
  CHECK(r2 * r3 == QuadExt::sqrt(6));
  CHECK((r2 - r2).isZero());
  // Close values need several refinement rounds: sqrt2 + sqrt3 vs 3.146264...
  CHECK(r2 + r3 > Rational(3146264, 1000000));
  CHECK(r2 + r3 < Rational(3146265, 1000000));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int t = 0; t < 300; ++t) {
    const QuadExt x = QuadExt(Rational(c(rng), 7)) + r2.scaled(Rational(c(rng), 5)) + r3.scaled(Rational(c(rng), 3));
    const QuadExt y = QuadExt(Rational(c(rng), 4)) + r5.scaled(Rational(c(rng), 9));
    const double dx = x.approx(), dy = y.approx();
    if (std::abs(dx - dy) < 1e-9) continue;
    CHECK((qextCompare(x, y) == Cmp::LT) == (dx < dy));
  }
}

TEST_CASE("mod1") {
  CHECK(mod1((QuadExt(1) + r5).scaled(Rational(1, 2))) == golden());
  CHECK(mod1(QuadExt(Rational(7, 3))) == QuadExt(Rational(1, 3)));
  CHECK(mod1(golden().scaled(3)) == (r5.scaled(3) - QuadExt(5)).scaled(Rational(1, 2)));
  CHECK(mod1(QuadExt(-1) + r2.scaled(Rational(1, 10))) == r2.scaled(Rational(1, 10)));
  for (int k = -30; k <= 30; ++k) {
    const QuadExt x = r3.scaled(k) + Rational(k, 3);
    const QuadExt m = mod1(x);
    CHECK(m >= QuadExt(0));
    CHECK(m < QuadExt(1));
    CHECK((x - m).isRational());
    CHECK(m.approx() == Catch::Approx(x.approx() - std::floor(x.approx())));
  }
}

TEST_CASE("rational independence") {
  CHECK(rationalIndependenceCheck({r2.scaled(Rational(1, 2))}));
  CHECK_FALSE(rationalIndependenceCheck({r2.scaled(Rational(1, 2)), QuadExt(1) - r2.scaled(Rational(1, 2))}));
  CHECK(rationalIndependenceCheck({r2.scaled(Rational(1, 2)), r3.scaled(Rational(1, 3))}));
  CHECK_FALSE(rationalIndependenceCheck({QuadExt(Rational(1, 2))}));
  CHECK_FALSE(rationalIndependenceCheck({r2 - QuadExt(1), r2.scaled(2) - QuadExt(2)}));
  CHECK(rationalIndependenceCheck({r2 - QuadExt(1), r3 - QuadExt(1), QuadExt::sqrt(6) - QuadExt(2)}));
}

TEST_CASE("rotation letters") {
  const auto spec = defaultSturmianSpec();
  CHECK(rotationLetter(spec, Point{0, 0}) == 0);
  CHECK(rotationLetter(spec, Point{1, 0}) == 1);
  CHECK(rotationLetter(spec, Point{0, 1}) == 1);

  const double a1 = std::sqrt(2.0) - 1, a2 = std::sqrt(3.0) - 1;
  const auto w = rotationWord(spec);
  forEachCell(Size{80, 80}, [&](const Point& p) {
    const double x = std::fmod(p[0] * a1 + p[1] * a2, 1.0);
    if (std::abs(x - a1) < 1e-9 || x < 1e-9) return;
    REQUIRE(w->at(p) == (x < a1 ? 0u : 1u));
  });

  auto upper = spec;
  upper.partition = IntervalPartition({spec.alpha[0]}, Orientation::Upper);
  CHECK(rotationLetter(upper, Point{0, 0}) == 1);
  CHECK(rotationLetter(upper, Point{1, 0}) == 0);
  CHECK(rotationLetter(spec, Point{1, 0}) == 1);

  RotationWordSpec bad = spec;
  bad.alpha = {r2.scaled(Rational(1, 2)), QuadExt(1) - r2.scaled(Rational(1, 2))};
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
  CHECK_THROWS_AS(IntervalPartition({QuadExt(Rational(1, 2)), QuadExt(Rational(1, 3))}, Orientation::Lower),
                  InvalidInput);
}

TEST_CASE("directional word is a rotation coding") {
  const auto spec = defaultSturmianSpec();
  const auto w = rotationWord(spec);
  for (const auto& q : {Direction{1, 1}, Direction{2, 3}, Direction{0, 1}, Direction{4, 1}}) {
    RotationWordSpec line;
    line.alpha = {mod1(spec.alpha[0].scaled(q[0]) + spec.alpha[1].scaled(q[1]))};
    line.rho = spec.rho;
    line.partition = spec.partition;
    const auto u = rotationWord(line);
    for (std::int64_t l = 0; l < 10000; ++l) REQUIRE(u->at(Point{l}) == w->at(l * q));
  }
}

TEST_CASE("factor interval sets") {
  const auto spec = defaultSturmianSpec();
  const auto w = rotationWord(spec);
  for (Letter j = 0; j < 2; ++j) {
    const auto I = factorIntervalSet(spec, FiniteWord(Size{1, 1}, j));
    CHECK(I.componentCount() == 1);
    CHECK(I.measure() == spec.partition.length(j));
  }
  // Every 2x2 and 3x2 block seen in a sample is predicted, and every predicted
  // block appears in a larger sample.
  for (const Size s : {Size{2, 2}, Size{3, 2}}) {
    std::set<FiniteWord> seen;
    forEachCell(Size{200, 200}, [&](const Point& p) { seen.insert(factorAt(*w, p, s)); });
    std::size_t predicted = 0;
    forEachCell(Point(static_cast<std::size_t>(s.volume()), 2), [&](const Point& bits) {
      FiniteWord f(s);
      for (std::size_t i = 0; i < f.cells().size(); ++i) f.cells()[i] = static_cast<Letter>(bits[i]);
      const bool occurs = factorOccurs(spec, f);
      predicted += occurs;
      REQUIRE(occurs == (seen.count(f) > 0));
    });
    CHECK(predicted == seen.size());
  }
  const auto f = prefixOf(*w, Size{2, 2});
  forEachCell(Size{60, 60}, [&](const Point& p) { REQUIRE(occursAt(spec, f, p) == factorMatches(*w, p, f)); });
}

TEST_CASE("interval set algebra") {
  const auto a = IntervalSet::arc(QuadExt(Rational(1, 4)), QuadExt(Rational(3, 4)));
  const auto wrap = IntervalSet::arc(QuadExt(Rational(3, 4)), QuadExt(Rational(1, 4)));
  CHECK(wrap.componentCount() == 1);
  CHECK(wrap.arcs().size() == 2);
  CHECK(a.intersect(wrap).empty());
  CHECK(a.measure() + wrap.measure() == QuadExt(1));
  CHECK(a.contains(QuadExt(Rational(1, 4))));
  CHECK_FALSE(a.contains(QuadExt(Rational(3, 4))));
  const auto back = a.rotatedBack(QuadExt(Rational(1, 2)));
  CHECK(back.contains(QuadExt(Rational(3, 4))));
  CHECK(back.contains(QuadExt(0)));
  CHECK_FALSE(back.contains(QuadExt(Rational(1, 2))));
}

TEST_CASE("three gaps") {
  const auto full = IntervalSet::full();
  CHECK(threeGapAnalysis(golden(), full, 1000).gaps == std::vector<std::int64_t>{1});

  const auto g = golden();
  const auto rep = threeGapAnalysis(g, IntervalSet::arc(QuadExt(0), g), 10000);
  CHECK(rep.gaps.size() <= 3);
  CHECK(rep.gaps == floatGaps(g.approx(), 0, g.approx(), 10000));
  CHECK(rep.gaps == std::vector<std::int64_t>{1, 2});

  const auto d = r2 - QuadExt(1);
  const auto small = threeGapAnalysis(d, IntervalSet::arc(QuadExt(0), QuadExt(Rational(1, 10))), 10000);
  CHECK(small.gaps.size() <= 3);
  CHECK(small.gaps == floatGaps(d.approx(), 0, 0.1, 10000));

  CHECK_THROWS_AS(threeGapAnalysis(d, IntervalSet::arc(QuadExt(0), QuadExt(Rational(1, 100000))), 5,
                                   QuadExt(Rational(1, 2))),
                  EmptyVisit);
  CHECK_THROWS_AS(threeGapAnalysis(QuadExt(Rational(1, 3)), full, 10), InvalidInput);
}

TEST_CASE("SURD failure directions") {
  const auto spec = defaultSturmianSpec();
  const auto w = rotationWord(spec);
  for (std::int64_t N : {1, 5, 10}) {
    const auto q = surdFailureDirection(spec, N);
    CHECK(q[1] == N);
    CHECK(gcdOf(q) == 1);
    CHECK(longestConstantRun(*w, q, 4 * N + 10) >= N);
  }
}

TEST_CASE("rotation words are URD at small scale") {
  const auto spec = defaultSturmianSpec();
  const auto w = rotationWord(spec);
  RecurrenceBudget b;
  b.horizon = 2000;
  b.maxDir = 4;
  b.maxSize = 2;
  for (const auto& r : checkURDEmpirical(*w, b)) {
    REQUIRE(r.verdict == Verdict::BoundedWitnessed);
    const auto q = r.direction;
    const auto delta = mod1(spec.alpha[0].scaled(q[0]) + spec.alpha[1].scaled(q[1]));
    const auto I = factorIntervalSet(spec, prefixOf(*w, r.size));
    CHECK(*r.maxGap == threeGapAnalysis(delta, I, 2000).maxGap());
  }
}
