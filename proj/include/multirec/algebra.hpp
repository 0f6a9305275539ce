#pragma once

#include <string>
#include <vector>

#include "multirec/lattice.hpp"

namespace multirec {

// Element of (Z/sZ)^d with coordinates reduced into [0, s-1].
struct ResidueVector {
  std::int64_t modulus = 2;
  Point coords;

  ResidueVector() = default;
  ResidueVector(std::int64_t s, const Point& raw);
  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
};

struct CyclicSubgroup {
  ResidueVector generator;
  std::vector<Point> elements;  // sorted, includes the zero vector

  bool contains(const Point& residue) const;
};

struct SubgroupFamily {
  std::int64_t modulus = 2;
  std::size_t dim = 2;
  std::vector<CyclicSubgroup> subgroups;
  // All coprime generators of each subgroup, lexicographic.
  std::vector<std::vector<Point>> generators;
};

// The subgroup {k i mod s}; no coprimality requirement.
CyclicSubgroup generatedSubgroup(const ResidueVector& i);
CyclicSubgroup cyclicSubgroup(const ResidueVector& i);
SubgroupFamily familyC(std::int64_t s, std::size_t d);

Point bezoutCoefficients(const Direction& q);

std::int64_t gcdAlongLine(const Direction& q, const Point& i, std::int64_t l);
std::int64_t linePeriod(const Direction& q, const Point& i);
// gcd(l + alpha . i, period) with alpha the Bezout vector of q.
std::int64_t gcdLemmaClosedForm(const Direction& q, const Point& i, std::int64_t l);

bool isPrime(std::int64_t n);

}  // namespace multirec
