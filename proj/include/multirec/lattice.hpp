#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "multirec/errors.hpp"

namespace multirec {

inline constexpr std::size_t kMaxDim = 8;

using Letter = std::uint32_t;

std::int64_t checkedAdd(std::int64_t a, std::int64_t b);
std::int64_t checkedMul(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Small fixed-capacity integer tuple. Signed so it can also carry Bezout
// coefficients and differences.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim, std::int64_t fill = 0);
  Point(std::initializer_list<std::int64_t> coords);
  explicit Point(std::span<const std::int64_t> coords);

  std::size_t dim() const { return dim_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  const std::int64_t* begin() const { return c_.data(); }
  const std::int64_t* end() const { return c_.data() + dim_; }
  std::int64_t* begin() { return c_.data(); }
  std::int64_t* end() { return c_.data() + dim_; }

  std::vector<std::int64_t> toVector() const { return {begin(), end()}; }
  std::int64_t maxCoord() const;
  std::int64_t minCoord() const;
  bool isZero() const;

  friend bool operator==(const Point& a, const Point& b);
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator*(std::int64_t k, const Point& a);

 private:
  std::array<std::int64_t, kMaxDim> c_{};
  std::size_t dim_ = 0;
};

std::string toString(const Point& p);
std::int64_t gcdOf(const Point& p);
std::int64_t dot(const Point& a, const Point& b);

// Nonnegative lattice position.
class Position : public Point {
 public:
  Position() = default;
  Position(std::initializer_list<std::int64_t> coords);
  explicit Position(const Point& p);
  static Position origin(std::size_t dim) { return Position(Point(dim)); }
};

// Block size, every entry >= 1.
class Size : public Point {
 public:
  Size() = default;
  Size(std::initializer_list<std::int64_t> dims);
  explicit Size(const Point& p);
  static Size cube(std::size_t dim, std::int64_t side);
  std::int64_t volume() const;
};

// Coprime nonnegative nonzero tuple.
class Direction : public Point {
 public:
  Direction() = default;
  Direction(std::initializer_list<std::int64_t> coords);
  explicit Direction(const Point& p);
};

Direction normalizeDirection(const Point& raw);

// Coprime nonzero nonnegative tuples with entries <= q, lexicographic.
std::vector<Direction> enumerateDirections(std::size_t dim, std::int64_t q);

// Visits every index of the box [0, s) with the last coordinate fastest.
template <class F>
void forEachCell(const Point& s, F&& f) {
  const std::size_t d = s.dim();
  for (std::size_t k = 0; k < d; ++k)
    if (s[k] <= 0) return;
  Point i(d);
  while (true) {
    f(static_cast<const Point&>(i));
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++i[k] < s[k]) break;
      i[k] = 0;
      if (k == 0) return;
    }
    if (d == 0) return;
  }
}

class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(const Size& size, Letter fill = 0);
  FiniteWord(const Size& size, std::vector<Letter> cells);

  // 2-D convenience: rows listed top row first, as printed.
  static FiniteWord fromRowsTopFirst(const std::vector<std::vector<Letter>>& rows);

  const Size& size() const { return size_; }
  std::size_t dim() const { return size_.dim(); }
  std::size_t index(const Point& i) const;
  Letter at(const Point& i) const { return cells_[index(i)]; }
  void set(const Point& i, Letter a) { cells_[index(i)] = a; }
  const std::vector<Letter>& cells() const { return cells_; }
  std::vector<Letter>& cells() { return cells_; }
  Letter maxLetter() const;

  FiniteWord block(const Point& p, const Size& s) const;
  FiniteWord transposed() const;  // 2-D only

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
  friend std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b);

 private:
  Size size_;
  std::vector<Letter> cells_;
};

class WordSource {
 public:
  virtual ~WordSource() = default;
  virtual std::size_t dimension() const = 0;
  virtual std::size_t alphabetSize() const = 0;
  virtual Letter at(const Point& p) const = 0;
  virtual std::string describe() const { return "word"; }
};

using WordPtr = std::shared_ptr<const WordSource>;

class FunctionWord final : public WordSource {
 public:
  using Fn = std::function<Letter(const Point&)>;
  FunctionWord(std::size_t dim, std::size_t k, Fn fn, std::string name = "function");
  std::size_t dimension() const override { return dim_; }
  std::size_t alphabetSize() const override { return k_; }
  Letter at(const Point& p) const override { return fn_(p); }
  std::string describe() const override { return name_; }

 private:
  std::size_t dim_;
  std::size_t k_;
  Fn fn_;
  std::string name_;
};

class TranslatedWord final : public WordSource {
 public:
  TranslatedWord(WordPtr base, const Position& offset);
  std::size_t dimension() const override { return base_->dimension(); }
  std::size_t alphabetSize() const override { return base_->alphabetSize(); }
  Letter at(const Point& p) const override { return base_->at(p + offset_); }
  std::string describe() const override;
  const WordPtr& base() const { return base_; }
  const Position& offset() const { return offset_; }

 private:
  WordPtr base_;
  Position offset_;
};

WordPtr makeWord(std::size_t dim, std::size_t k, FunctionWord::Fn fn, std::string name = "function");
WordPtr constantWord(std::size_t dim, Letter a, std::size_t k = 1);

WordPtr translateOrigin(const WordPtr& w, const Position& p);
FiniteWord factorAt(const WordSource& w, const Point& p, const Size& s);
bool factorMatches(const WordSource& w, const Point& p, const FiniteWord& f);
FiniteWord directionalLetter(const WordSource& w, const Direction& q, const Size& s, std::int64_t l);
FiniteWord prefixOf(const WordSource& w, const Size& s);

}  // namespace multirec
