#include "multirec/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

namespace multirec {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t s) {
  v %= s;
  return v < 0 ? v + s : v;
}

// (g, x, y) with a x + b y = g = gcd(a, b).
std::tuple<std::int64_t, std::int64_t, std::int64_t> extendedGcd(std::int64_t a, std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_tuple(b, a - q * b);
    std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

}  // namespace

ResidueVector::ResidueVector(std::int64_t s, const Point& raw) : modulus(s), coords(raw.dim()) {
  if (s < 2) throw InvalidInput("modulus must be at least 2");
  for (std::size_t i = 0; i < raw.dim(); ++i) coords[i] = reduce(raw[i], s);
}

bool CyclicSubgroup::contains(const Point& residue) const {
  return std::binary_search(elements.begin(), elements.end(), residue);
}

CyclicSubgroup generatedSubgroup(const ResidueVector& i) {
  CyclicSubgroup c;
  c.generator = i;
  const std::int64_t s = i.modulus;
  for (std::int64_t k = 0; k < s; ++k) {
    Point e(i.coords.dim());
    for (std::size_t j = 0; j < e.dim(); ++j) e[j] = (k * i.coords[j]) % s;
    c.elements.push_back(e);
  }
  std::sort(c.elements.begin(), c.elements.end());
  c.elements.erase(std::unique(c.elements.begin(), c.elements.end()), c.elements.end());
  return c;
}

CyclicSubgroup cyclicSubgroup(const ResidueVector& i) {
  if (gcdOf(i.coords) != 1) throw NotCoprime("generator " + toString(i.coords) + " has non-coprime coordinates");
  return generatedSubgroup(i);
}

SubgroupFamily familyC(std::int64_t s, std::size_t d) {
  if (s < 2) throw InvalidInput("modulus must be at least 2");
  SubgroupFamily fam;
  fam.modulus = s;
  fam.dim = d;
  std::map<std::vector<Point>, std::size_t> seen;
  forEachCell(Point(d, s), [&](const Point& i) {
    if (gcdOf(i) != 1) return;
    const ResidueVector r(s, i);
    auto c = generatedSubgroup(r);
    auto [it, fresh] = seen.emplace(c.elements, fam.subgroups.size());
    if (fresh) {
      fam.subgroups.push_back(std::move(c));
      fam.generators.push_back({i});
    } else {
      fam.generators[it->second].push_back(i);
    }
  });
  return fam;
}

Point bezoutCoefficients(const Direction& q) {
  Point a(q.dim());
  std::int64_t g = 0;
  for (std::size_t j = 0; j < q.dim(); ++j) {
    if (g == 0) {
      g = q[j];
      a[j] = q[j] == 0 ? 0 : 1;
      continue;
    }
    const auto [h, x, y] = extendedGcd(g, q[j]);
    for (std::size_t k = 0; k < j; ++k) a[k] = checkedMul(a[k], x);
    a[j] = y;
    g = h;
  }
  if (g != 1) throw NotCoprime("direction " + toString(q) + " is not coprime");
  return a;
}

std::int64_t gcdAlongLine(const Direction& q, const Point& i, std::int64_t l) {
  if (linePeriod(q, i) == 0) throw OnLine("position " + toString(i) + " lies on the line of " + toString(q));
  return std::abs(gcdOf(l * q + i));
}

std::int64_t linePeriod(const Direction& q, const Point& i) {
  if (q.dim() != i.dim()) throw DimensionError("dimension mismatch");
  std::int64_t g = 0;
  for (std::size_t j = 0; j < q.dim(); ++j)
    for (std::size_t k = j + 1; k < q.dim(); ++k)
      g = std::gcd(g, std::abs(checkedMul(i[j], q[k]) - checkedMul(i[k], q[j])));
  return g;
}

std::int64_t gcdLemmaClosedForm(const Direction& q, const Point& i, std::int64_t l) {
  const std::int64_t p = linePeriod(q, i);
  if (p == 0) throw OnLine("position " + toString(i) + " lies on the line of " + toString(q));
  const Point a = bezoutCoefficients(q);
  return std::gcd(checkedAdd(l, dot(a, i)), p);
}

bool isPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace multirec
