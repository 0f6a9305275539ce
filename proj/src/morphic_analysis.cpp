#include "multirec/morphic_analysis.hpp"

#include <algorithm>

#include "multirec/errors.hpp"
#include "multirec/generators.hpp"
#include "multirec/presets.hpp"

namespace multirec {

int ceilLog(std::int64_t base, std::int64_t x) {
  if (base < 2) throw InvalidInput("logarithm base must be at least 2");
  if (x < 1) throw InvalidInput("logarithm argument must be positive");
  int e = 0;
  std::int64_t p = 1;
  while (p < x) {
    p = checkedMul(p, base);
    ++e;
  }
  return e;
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p = checkedMul(p, base);
  return p;
}

SurdBoundClaim mainMorphicClaim(std::int64_t s, const Size& m) {
  return {m, ipow(s, ceilLog(s, m.maxCoord()) + 1)};
}

SurdBoundClaim reductionClaim(std::int64_t s, const Size& m, std::int64_t b) {
  return {m, checkedMul(ipow(s, ceilLog(s, m.maxCoord())), b)};
}

ClaimFn mainMorphicClaimFn(std::int64_t s) {
  return [s](const Size& m) -> std::optional<std::int64_t> { return mainMorphicClaim(s, m).bound; };
}

namespace {

bool allImagesAt(const Morphism& phi, const Point& i, Letter a) {
  for (Letter b = 0; b < phi.alphabetSize(); ++b)
    if (phi.image(b).at(i) != a) return false;
  return true;
}

void requireProlongable(const Morphism& phi, Letter a) {
  if (!checkProlongable(phi, a))
    throw NotProlongable("image of " + std::to_string(a) + " does not start with " + std::to_string(a));
}

std::int64_t primeSquareSize(const Morphism& phi) {
  const std::int64_t s = phi.squareSize();
  if (!isPrime(s)) throw CompositeSize("size " + std::to_string(s) + " is not prime");
  return s;
}

}  // namespace

ConditionVerdict checkMainMorphic(const Morphism& phi, Letter a) {
  const std::int64_t s = phi.squareSize();
  requireProlongable(phi, a);
  ConditionVerdict v;
  v.condition = "main-morphic";
  v.size = s;
  v.holds = true;
  const auto fam = familyC(s, phi.dim());
  for (const auto& c : fam.subgroups) {
    auto it = std::find_if(c.elements.begin(), c.elements.end(),
                           [&](const Point& i) { return allImagesAt(phi, i, a); });
    if (it == c.elements.end()) {
      v.holds = false;
      v.positions.clear();
      v.witness = "no common position in the subgroup generated by " + toString(c.generator.coords);
      return v;
    }
    v.positions.push_back(*it);
  }
  return v;
}

ConditionVerdict checkCor1(const Morphism& phi, Letter a) {
  ConditionVerdict v;
  v.condition = "cor1";
  v.size = phi.squareSize();
  const Point zero(phi.dim());
  for (Letter b = 0; b < phi.alphabetSize(); ++b) {
    if (phi.image(b).at(zero) != a) {
      v.witness = "image of " + std::to_string(b) + " has " + std::to_string(phi.image(b).at(zero)) + " at the origin";
      return v;
    }
  }
  v.holds = true;
  v.positions.push_back(zero);
  return v;
}

ConditionVerdict checkPower(const Morphism& psi, Letter a, int i) {
  if (i < 1) throw InvalidInput("power exponent must be positive");
  psi.squareSize();
  requireProlongable(psi, a);
  auto v = checkMainMorphic(psi.power(i), a);
  v.condition = "power-" + std::to_string(i);
  return v;
}

ConditionVerdict checkHyperplane(const Morphism& phi, Letter a) {
  const std::int64_t s = primeSquareSize(phi);
  ConditionVerdict v;
  v.condition = "hyperplane";
  v.size = s;
  Point face(phi.dim(), s);
  face[0] = 1;
  bool first = true;
  forEachCell(face, [&](const Point& i) {
    if (phi.image(a).at(i) != a) first = false;
  });
  if (!first) {
    v.witness = "image of " + std::to_string(a) + " is not constant on x=0";
    return v;
  }
  for (std::int64_t i1 = 0; i1 < s; ++i1) {
    bool ok = true;
    forEachCell(face, [&](const Point& i) {
      Point j = i;
      j[0] = i1;
      if (!allImagesAt(phi, j, a)) ok = false;
    });
    if (ok) {
      v.holds = true;
      Point col(phi.dim());
      col[0] = i1;
      v.positions.push_back(col);
      return v;
    }
  }
  v.witness = "no hyperplane x=i filled with " + std::to_string(a) + " in every image";
  return v;
}

ConditionVerdict checkNonRecurrentDirection(const Morphism& phi, Letter a, const Direction& q) {
  const std::int64_t s = primeSquareSize(phi);
  requireProlongable(phi, a);
  if (q.dim() != phi.dim()) throw DimensionError("direction dimension mismatch");
  ConditionVerdict v;
  v.condition = "non-recurrent-direction";
  v.size = s;
  const auto c = generatedSubgroup(ResidueVector(s, q));
  for (const auto& i : c.elements) {
    for (Letter b = 0; b < phi.alphabetSize(); ++b) {
      if (i.isZero() && b == a) continue;
      if (phi.image(b).at(i) == a) {
        v.witness = "image of " + std::to_string(b) + " has " + std::to_string(a) + " at " + toString(i);
        return v;
      }
    }
  }
  v.holds = true;
  v.positions = c.elements;
  return v;
}

std::string toString(Surd2x2 v) { return v == Surd2x2::Surd ? "SURD" : "NOT_SURD"; }

namespace {

void require2x2(const Morphism& phi) {
  if (phi.alphabetSize() != 2 || phi.dim() != 2 || !phi.isSquare() || phi.squareSize() != 2)
    throw InvalidInput("expected a binary square morphism of size 2");
  if (phi.image(1).at(Point{0, 0}) != 1) throw InvalidInput("morphism is not prolongable on 1");
}

using Pair = std::pair<Letter, Letter>;

Pair pairAt(const Morphism& phi, std::int64_t x, std::int64_t y) {
  const Point p{x, y};
  return {phi.image(1).at(p), phi.image(0).at(p)};
}

constexpr Pair k01{0, 1};
constexpr Pair k10{1, 0};
constexpr Pair k11{1, 1};

Witness2x2 caseWitness(const std::string& tag, int n, std::int64_t tail) {
  const std::int64_t t = ipow(2, n);
  Witness2x2 w;
  w.caseTag = tag;
  w.parameter = n;
  w.firstIndex = 1;
  w.lastIndex = t - 1;
  w.expected = 0;
  if (tag == "Case 1") {
    if (n % 2 == 0) throw InvalidInput("Case 1 needs an odd parameter");
    w.direction = Direction{checkedMul(t * t, t - 1), t + 1};
    w.pattern = "10^" + std::to_string(t - 1);
  } else if (tag == "Case 2") {
    w.direction = Direction{1, checkedMul(t - 1, t)};
    w.pattern = "10^" + std::to_string(t - 1);
  } else if (tag == "Case 3.1") {
    if (n % 2 == 0) throw InvalidInput("Case 3.1 needs an odd parameter");
    w.direction = Direction{t + 1, checkedAdd(checkedMul(t * t, t - 1), t + 1)};
    w.pattern = "10^" + std::to_string(t - 1);
  } else if (tag == "Case 3.2") {
    w.direction = Direction{2, 1};
    w.lastIndex = tail;
    w.pattern = "10^omega";
  } else {
    w.direction = Direction{t - 1, 1};
    w.pattern = "10^" + std::to_string(t - 1);
  }
  return w;
}

Witness2x2 treeWitness(const Morphism& phi, int n, std::int64_t tail) {
  const Pair p01 = pairAt(phi, 0, 1), p10 = pairAt(phi, 1, 0), p11 = pairAt(phi, 1, 1);
  if (p01 == k01) {
    if (p10 == k01) return caseWitness("Case 1", n, tail);
    if (p10 == k10) return caseWitness("Case 2", n, tail);
    return caseWitness(p11 == k01 ? "Case 3.1" : "Case 3.2", n, tail);
  }
  if (p10 == k01) {
    auto w = treeWitness(phi.transposed(), n, tail);
    w.transposed = true;
    w.caseTag = "Symm. " + w.caseTag;
    w.direction = Direction{w.direction[1], w.direction[0]};
    return w;
  }
  return caseWitness("Case 4", n, tail);
}

}  // namespace

Surd2x2 classify2x2(const Morphism& phi) {
  require2x2(phi);
  if (phi.image(0).at(Point{0, 0}) == 1) return Surd2x2::Surd;
  const auto& one = phi.image(1).cells();
  if (std::all_of(one.begin(), one.end(), [](Letter c) { return c == 1; })) return Surd2x2::Surd;
  return Surd2x2::NotSurd;
}

Witness2x2 nonSurd2x2Witness(const Morphism& phi, int parameter, std::int64_t tailHorizon) {
  if (classify2x2(phi) == Surd2x2::Surd) throw NotApplicable("morphism is SURD");
  if (parameter < 1) throw InvalidInput("case parameter must be positive");
  for (const Point& pos : {Point{0, 1}, Point{1, 0}, Point{1, 1}}) {
    if (pairAt(phi, pos[0], pos[1]) == Pair{0, 0}) {
      Witness2x2 w;
      w.caseTag = "Trivial";
      w.direction = Direction(pos);
      w.parameter = parameter;
      w.lastIndex = tailHorizon;
      w.pattern = "10^omega";
      return w;
    }
  }
  return treeWitness(phi, parameter, tailHorizon);
}

bool verifyWitness(const WordSource& w, const Witness2x2& witness) {
  if (w.at(Point(2)) != 1) return false;
  for (std::int64_t m = witness.firstIndex; m <= witness.lastIndex; ++m)
    if (w.at(m * witness.direction) != witness.expected) return false;
  return true;
}

std::vector<Morphism> enumerate2x2() {
  std::vector<Morphism> out;
  const std::vector<Point> cells = {Point{0, 1}, Point{1, 0}, Point{1, 1}};
  for (unsigned bits = 0; bits < 128; ++bits) {
    FiniteWord zero(Size{2, 2}), one(Size{2, 2});
    one.set(Point{0, 0}, 1);
    for (std::size_t c = 0; c < 3; ++c) one.set(cells[c], (bits >> c) & 1u);
    zero.set(Point{0, 0}, (bits >> 3) & 1u);
    for (std::size_t c = 0; c < 3; ++c) zero.set(cells[c], (bits >> (4 + c)) & 1u);
    out.emplace_back(2, Size{2, 2}, std::vector<FiniteWord>{zero, one});
  }
  return out;
}

bool thueLemmaTM1(int l) {
  if (l < 1 || l > 30) throw InvalidInput("lemma parameter out of range");
  const std::uint64_t d = (std::uint64_t{1} << l) - 1;
  const Letter first = thueMorse(d);
  for (std::uint64_t k = 2; k <= (std::uint64_t{1} << l); ++k)
    if (thueMorse(k * d) != first) return false;
  return (first == 1) == (l % 2 == 1);
}

bool thueLemmaTM0(int l) {
  if (l < 1 || l > 30) throw InvalidInput("lemma parameter out of range");
  const std::uint64_t d = (std::uint64_t{1} << l) + 1;
  for (std::uint64_t k = 0; k <= (std::uint64_t{1} << l); ++k)
    if (thueMorse(k * d) != 0) return false;
  return true;
}

bool lemma001_101Check(const Morphism& sigma, Letter a, std::int64_t m, std::int64_t horizon) {
  if (sigma.dim() != 1) throw DimensionError("expected a unidimensional morphism");
  const std::int64_t s = primeSquareSize(sigma);
  requireProlongable(sigma, a);
  bool common = false;
  for (std::int64_t i = 0; i < s && !common; ++i) common = allImagesAt(sigma, Point{i}, a);
  if (!common) throw InvalidInput("no position carries " + std::to_string(a) + " in every image");
  if (m < 1) throw InvalidInput("step must be positive");
  std::int64_t since = 0;  // letters since the last a
  for (std::int64_t k = 0; k < horizon; ++k) {
    since = sigma.fixedPointLetter(a, Point{checkedMul(m, k)}) == a ? 0 : since + 1;
    if (since >= s) return false;
  }
  return true;
}

bool ssurdoStructureCheck(int j) {
  if (j < 1) throw InvalidInput("iteration must be positive");
  const auto p = morphismPreset("ssurdo-3x3");
  const auto img0 = p.phi.iterate(0, j), img1 = p.phi.iterate(1, j);
  const std::int64_t n = ipow(3, j);
  std::size_t differences = 0;
  bool cornerDiffers = false;
  forEachCell(img0.size(), [&](const Point& i) {
    if (img0.at(i) != img1.at(i)) {
      ++differences;
      if (i[0] == n - 1 && i[1] == n - 1) cornerDiffers = true;
    }
  });
  if (differences != 1 || !cornerDiffers) return false;
  const MorphicWord w(p.phi, p.start);
  bool periodic = true;
  forEachCell(Point(2, 3 * n), [&](const Point& q) {
    const Point r{q[0] % 3, q[1] % 3};
    if (r[0] == 2 && r[1] == 2) return;
    if (w.at(q) != w.at(r)) periodic = false;
  });
  return periodic;
}

}  // namespace multirec
