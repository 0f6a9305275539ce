#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multirec/algebra.hpp"
#include "multirec/morphism.hpp"
#include "multirec/recurrence.hpp"

namespace multirec {

struct ConditionVerdict {
  std::string condition;
  bool holds = false;
  std::optional<std::string> witness;
  // Common position per subgroup (main morphic), or the column (hyperplane).
  std::vector<Point> positions;
  // Size of the morphism the condition was tested on.
  std::int64_t size = 0;
};

struct SurdBoundClaim {
  Size m;
  std::int64_t bound = 0;
};

// Smallest e >= 0 with base^e >= x.
int ceilLog(std::int64_t base, std::int64_t x);
std::int64_t ipow(std::int64_t base, int e);

// s^(ceil(log_s max m) + 1)
SurdBoundClaim mainMorphicClaim(std::int64_t s, const Size& m);
// s^ceil(log_s max m) * b
SurdBoundClaim reductionClaim(std::int64_t s, const Size& m, std::int64_t b);
ClaimFn mainMorphicClaimFn(std::int64_t s);

ConditionVerdict checkMainMorphic(const Morphism& phi, Letter a);
ConditionVerdict checkCor1(const Morphism& phi, Letter a);
ConditionVerdict checkPower(const Morphism& psi, Letter a, int i);
ConditionVerdict checkHyperplane(const Morphism& phi, Letter a);
ConditionVerdict checkNonRecurrentDirection(const Morphism& phi, Letter a, const Direction& q);

enum class Surd2x2 { Surd, NotSurd };
std::string toString(Surd2x2 v);
Surd2x2 classify2x2(const Morphism& phi);

// Claim: w(m * direction) == expected for m in [firstIndex, lastIndex],
// together with w(0) == 1.
struct Witness2x2 {
  std::string caseTag;
  Direction direction;
  bool transposed = false;
  int parameter = 0;
  std::int64_t firstIndex = 1;
  std::int64_t lastIndex = 0;
  Letter expected = 0;
  std::string pattern;
};

Witness2x2 nonSurd2x2Witness(const Morphism& phi, int parameter = 3, std::int64_t tailHorizon = 2000);
bool verifyWitness(const WordSource& w, const Witness2x2& witness);

// All binary size-2 morphisms with phi(1)_(0,0) = 1, in a fixed order.
std::vector<Morphism> enumerate2x2();

bool thueLemmaTM1(int l);
bool thueLemmaTM0(int l);

bool lemma001_101Check(const Morphism& sigma, Letter a, std::int64_t m, std::int64_t horizon);

bool ssurdoStructureCheck(int j);

}  // namespace multirec
