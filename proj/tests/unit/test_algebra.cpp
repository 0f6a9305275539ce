#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "multirec/algebra.hpp"
#include "multirec/errors.hpp"

using namespace multirec;

namespace {

std::set<Point> elementSet(const CyclicSubgroup& c) { return {c.elements.begin(), c.elements.end()}; }

// Distinct <i> over every coprime-coordinate residue vector, by brute force.
std::set<std::set<Point>> bruteFamily(std::int64_t s, std::size_t d) {
  std::set<std::set<Point>> out;
  forEachCell(Point(d, s), [&](const Point& i) {
    if (gcdOf(i) != 1) return;
    std::set<Point> g;
    for (std::int64_t k = 0; k < s; ++k) {
      Point e(d);
      for (std::size_t j = 0; j < d; ++j) e[j] = (k * i[j]) % s;
      g.insert(e);
    }
    out.insert(g);
  });
  return out;
}

}  // namespace

TEST_CASE("cyclic subgroups") {
  CHECK(cyclicSubgroup(ResidueVector(5, Point{0, 1})).elements ==
        std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(cyclicSubgroup(ResidueVector(2, Point{1, 1})).elements == std::vector<Point>{{0, 0}, {1, 1}});
  CHECK(elementSet(cyclicSubgroup(ResidueVector(6, Point{5, 1}))) ==
        std::set<Point>{{0, 0}, {5, 1}, {4, 2}, {3, 3}, {2, 4}, {1, 5}});
  CHECK_THROWS_AS(cyclicSubgroup(ResidueVector(6, Point{2, 4})), NotCoprime);
  CHECK(generatedSubgroup(ResidueVector(6, Point{2, 4})).elements.size() == 3);
}

TEST_CASE("family sizes") {
  for (std::int64_t s : {2, 3, 5, 7, 11, 13}) CHECK(familyC(s, 2).subgroups.size() == static_cast<std::size_t>(s + 1));
  CHECK(familyC(6, 2).subgroups.size() == 12);
  CHECK(familyC(5, 3).subgroups.size() == 31);
  for (std::int64_t s : {2, 3, 5, 7})
    for (std::size_t d : {2u, 3u}) {
      std::int64_t sd = 1;
      for (std::size_t k = 0; k < d; ++k) sd *= s;
      CHECK(familyC(s, d).subgroups.size() == static_cast<std::size_t>((sd - 1) / (s - 1)));
    }
  for (std::int64_t s = 2; s <= 12; ++s) {
    const auto fam = familyC(s, 2);
    std::set<std::set<Point>> ours;
    for (const auto& g : fam.subgroups) ours.insert(elementSet(g));
    CHECK(ours == bruteFamily(s, 2));
  }
}

TEST_CASE("subgroup structure") {
  for (std::int64_t s : {5, 6, 7}) {
    const auto fam = familyC(s, 2);
    for (std::size_t k = 0; k < fam.subgroups.size(); ++k) {
      const auto& g = fam.subgroups[k];
      CHECK(g.contains(Point{0, 0}));
      for (const auto& a : g.elements)
        for (const auto& b : g.elements) CHECK(g.contains(Point{(a[0] + b[0]) % s, (a[1] + b[1]) % s}));
      for (const auto& gen : fam.generators[k]) CHECK(gcdOf(gen) == 1);
      CHECK(std::is_sorted(fam.generators[k].begin(), fam.generators[k].end()));
    }
  }
  const auto p = familyC(7, 2);
  for (std::size_t a = 0; a < p.subgroups.size(); ++a)
    for (std::size_t b = a + 1; b < p.subgroups.size(); ++b) {
      std::vector<Point> common;
      std::set_intersection(p.subgroups[a].elements.begin(), p.subgroups[a].elements.end(),
                            p.subgroups[b].elements.begin(), p.subgroups[b].elements.end(),
                            std::back_inserter(common));
      CHECK(common == std::vector<Point>{{0, 0}});
    }
  const auto c11 = cyclicSubgroup(ResidueVector(6, Point{1, 1}));
  const auto c13 = cyclicSubgroup(ResidueVector(6, Point{1, 3}));
  CHECK(c11.contains(Point{3, 3}));
  CHECK(c13.contains(Point{3, 3}));
}

TEST_CASE("Bezout coefficients") {
  for (const auto& q : {Direction{2, 3}, Direction{1, 0}, Direction{6, 10, 15}, Direction{0, 1}, Direction{35, 12}}) {
    const auto a = bezoutCoefficients(q);
    CHECK(dot(a, q) == 1);
  }
  CHECK(bezoutCoefficients(Direction{1, 0}) == Point{1, 0});
}

TEST_CASE("gcd along a line") {
  CHECK(linePeriod(Direction{2, 3}, Point{1, 1}) == 1);
  CHECK(gcdAlongLine(Direction{2, 3}, Point{1, 1}, 0) == 1);
  CHECK(gcdAlongLine(Direction{2, 3}, Point{1, 1}, 1) == 1);
  CHECK(linePeriod(Direction{1, 0}, Point{0, 2}) == 2);
  CHECK(gcdAlongLine(Direction{1, 0}, Point{0, 2}, 2) == 2);
  CHECK(gcdAlongLine(Direction{1, 0}, Point{0, 2}, 3) == 1);
  CHECK(gcdAlongLine(Direction{1, 0}, Point{0, 2}, 0) == 2);
  CHECK(linePeriod(Direction{1, 1}, Point{0, 3}) == 3);
  for (std::int64_t l = 0; l < 30; ++l) CHECK(gcdAlongLine(Direction{1, 1}, Point{0, 3}, l) == std::gcd(l, 3));
  CHECK(linePeriod(Direction{1, 2}, Point{2, 4}) == 0);
  CHECK_THROWS_AS(gcdAlongLine(Direction{1, 2}, Point{2, 4}, 3), OnLine);
  CHECK_THROWS_AS(gcdLemmaClosedForm(Direction{1, 2}, Point{2, 4}, 3), OnLine);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> c(0, 40);
  int tested = 0;
  while (tested < 200) {
    const std::size_t d = 2 + rng() % 2;
    Point raw(d), i(d);
    for (std::size_t k = 0; k < d; ++k) {
      raw[k] = c(rng);
      i[k] = c(rng);
    }
    if (raw.isZero()) continue;
    const auto q = normalizeDirection(raw);
    std::int64_t period;
    try {
      period = linePeriod(q, i);
    } catch (const OnLine&) {
      continue;
    }
    ++tested;
    for (std::int64_t l = 0; l <= 3 * period; ++l) {
      std::int64_t g = 0;
      for (std::size_t k = 0; k < d; ++k) g = std::gcd(g, l * q[k] + i[k]);
      REQUIRE(gcdAlongLine(q, i, l) == g);
      REQUIRE(gcdLemmaClosedForm(q, i, l) == g);
    }
  }
}

TEST_CASE("primality") {
  std::vector<std::int64_t> primes;
  for (std::int64_t n = 0; n < 60; ++n)
    if (isPrime(n)) primes.push_back(n);
  CHECK(primes == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59});
}
