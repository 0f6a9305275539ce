#pragma once

#include <vector>

#include "multirec/lattice.hpp"

namespace multirec {

// Constant-size morphism: every letter maps to a block of the same size.
// A square morphism is the case where all size entries agree.
class Morphism {
 public:
  Morphism(std::size_t k, const Size& dims, std::vector<FiniteWord> images);

  // 2-D helper, each image given top row first.
  static Morphism fromRowsTopFirst(const std::vector<std::vector<std::vector<Letter>>>& images);

  std::size_t alphabetSize() const { return k_; }
  std::size_t dim() const { return dims_.dim(); }
  const Size& dims() const { return dims_; }
  bool isSquare() const;
  std::int64_t squareSize() const;

  const FiniteWord& image(Letter a) const { return images_.at(a); }
  const std::vector<FiniteWord>& images() const { return images_; }
  Letter imageAt(Letter a, std::size_t flat) const { return table_[a * cells_ + flat]; }

  bool prolongable(Letter a) const;
  FiniteWord iterate(Letter a, int n) const;
  Morphism power(int i) const;
  Morphism transposed() const;

  // phi^omega(a)(p) by mixed-radix digit descent.
  Letter fixedPointLetter(Letter a, const Point& p) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::size_t k_;
  Size dims_;
  std::vector<FiniteWord> images_;
  std::vector<Letter> table_;
  std::size_t cells_;
};

bool checkProlongable(const Morphism& phi, Letter a);
Letter morphicLetter(const Morphism& phi, Letter a, const Position& p);
Letter rectMorphicLetter(const Morphism& phi, Letter a, const Position& p);
FiniteWord morphicPrefix(const Morphism& phi, Letter a, int n);

class MorphicWord final : public WordSource {
 public:
  MorphicWord(Morphism phi, Letter a, std::string name = "morphic");
  std::size_t dimension() const override { return phi_.dim(); }
  std::size_t alphabetSize() const override { return phi_.alphabetSize(); }
  Letter at(const Point& p) const override { return phi_.fixedPointLetter(a_, p); }
  std::string describe() const override { return name_; }
  const Morphism& morphism() const { return phi_; }
  Letter letter() const { return a_; }

 private:
  Morphism phi_;
  Letter a_;
  std::string name_;
};

WordPtr fixedPoint(const Morphism& phi, Letter a, std::string name = "morphic");

}  // namespace multirec
