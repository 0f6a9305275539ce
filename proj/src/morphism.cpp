#include "multirec/morphism.hpp"

#include <algorithm>

namespace multirec {

Morphism::Morphism(std::size_t k, const Size& dims, std::vector<FiniteWord> images)
    : k_(k), dims_(dims), images_(std::move(images)) {
  if (k_ < 1) throw InvalidInput("empty alphabet");
  if (images_.size() != k_) throw InvalidInput("need one image per letter");
  cells_ = static_cast<std::size_t>(dims_.volume());
  table_.reserve(k_ * cells_);
  for (std::size_t a = 0; a < k_; ++a) {
    const auto& img = images_[a];
    if (img.size() != dims_)
      throw InvalidInput("image of " + std::to_string(a) + " has size " + toString(img.size()) + ", expected " +
                         toString(dims_));
    for (Letter b : img.cells()) {
      if (b >= k_) throw InvalidInput("image letter " + std::to_string(b) + " outside alphabet");
      table_.push_back(b);
    }
  }
}

Morphism Morphism::fromRowsTopFirst(const std::vector<std::vector<std::vector<Letter>>>& images) {
  if (images.empty()) throw InvalidInput("no images");
  std::vector<FiniteWord> imgs;
  for (const auto& rows : images) imgs.push_back(FiniteWord::fromRowsTopFirst(rows));
  const Size dims = imgs.front().size();
  const std::size_t k = imgs.size();
  return Morphism(k, dims, std::move(imgs));
}

bool Morphism::isSquare() const {
  return std::all_of(dims_.begin(), dims_.end(), [&](std::int64_t s) { return s == dims_[0]; });
}

std::int64_t Morphism::squareSize() const {
  if (!isSquare()) throw InvalidInput("morphism of size " + toString(dims_) + " is not square");
  return dims_[0];
}

bool Morphism::prolongable(Letter a) const { return a < k_ && table_[a * cells_] == a; }

FiniteWord Morphism::iterate(Letter a, int n) const {
  if (a >= k_) throw InvalidInput("letter outside alphabet");
  if (n < 0) throw InvalidInput("negative iteration count");
  FiniteWord cur(Size(Point(dim(), 1)), a);
  for (int step = 0; step < n; ++step) {
    Point next(dim());
    for (std::size_t i = 0; i < dim(); ++i) next[i] = checkedMul(cur.size()[i], dims_[i]);
    FiniteWord out{Size(next)};
    forEachCell(cur.size(), [&](const Point& j) {
      const Letter b = cur.at(j);
      Point corner(dim());
      for (std::size_t i = 0; i < dim(); ++i) corner[i] = j[i] * dims_[i];
      const auto& img = images_[b];
      std::size_t n2 = 0;
      forEachCell(dims_, [&](const Point& r) { out.set(corner + r, img.cells()[n2++]); });
    });
    cur = std::move(out);
  }
  return cur;
}

Morphism Morphism::power(int i) const {
  if (i < 1) throw InvalidInput("power exponent must be positive");
  std::vector<FiniteWord> imgs;
  for (Letter b = 0; b < k_; ++b) imgs.push_back(iterate(b, i));
  const Size dims = imgs.front().size();
  return Morphism(k_, dims, std::move(imgs));
}

Morphism Morphism::transposed() const {
  std::vector<FiniteWord> imgs;
  for (const auto& img : images_) imgs.push_back(img.transposed());
  return Morphism(k_, Size{dims_[1], dims_[0]}, std::move(imgs));
}

Letter Morphism::fixedPointLetter(Letter a, const Point& p) const {
  const std::size_t d = dim();
  if (p.dim() != d) throw DimensionError("position dimension mismatch");
  std::array<std::int64_t, kMaxDim> pw;
  pw.fill(1);
  int levels = 0;
  auto covered = [&] {
    for (std::size_t i = 0; i < d; ++i)
      if (p[i] >= pw[i]) return false;
    return true;
  };
  while (!covered()) {
    for (std::size_t i = 0; i < d; ++i) pw[i] = checkedMul(pw[i], dims_[i]);
    ++levels;
  }
  Letter cur = a;
  for (int lvl = 0; lvl < levels; ++lvl) {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < d; ++i) {
      pw[i] /= dims_[i];
      const std::int64_t digit = (p[i] / pw[i]) % dims_[i];
      flat = flat * static_cast<std::size_t>(dims_[i]) + static_cast<std::size_t>(digit);
    }
    cur = table_[cur * cells_ + flat];
  }
  return cur;
}

bool checkProlongable(const Morphism& phi, Letter a) {
  if (a >= phi.alphabetSize()) throw InvalidInput("letter outside alphabet");
  return phi.prolongable(a);
}

static void requireProlongable(const Morphism& phi, Letter a) {
  if (!checkProlongable(phi, a))
    throw NotProlongable("image of " + std::to_string(a) + " does not start with " + std::to_string(a));
}

Letter morphicLetter(const Morphism& phi, Letter a, const Position& p) {
  phi.squareSize();
  requireProlongable(phi, a);
  return phi.fixedPointLetter(a, p);
}

Letter rectMorphicLetter(const Morphism& phi, Letter a, const Position& p) {
  requireProlongable(phi, a);
  return phi.fixedPointLetter(a, p);
}

FiniteWord morphicPrefix(const Morphism& phi, Letter a, int n) {
  requireProlongable(phi, a);
  return phi.iterate(a, n);
}

MorphicWord::MorphicWord(Morphism phi, Letter a, std::string name)
    : phi_(std::move(phi)), a_(a), name_(std::move(name)) {
  requireProlongable(phi_, a_);
}

WordPtr fixedPoint(const Morphism& phi, Letter a, std::string name) {
  return std::make_shared<MorphicWord>(phi, a, std::move(name));
}

}  // namespace multirec
