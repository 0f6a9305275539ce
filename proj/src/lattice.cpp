#include "multirec/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace multirec {

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer addition");
  return r;
}

std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer multiplication");
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

Point::Point(std::size_t dim, std::int64_t fill) : dim_(dim) {
  if (dim > kMaxDim) throw DimensionError("dimension above " + std::to_string(kMaxDim));
  std::fill_n(c_.begin(), dim, fill);
}

Point::Point(std::initializer_list<std::int64_t> coords)
    : Point(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Point::Point(std::span<const std::int64_t> coords) : dim_(coords.size()) {
  if (dim_ > kMaxDim) throw DimensionError("dimension above " + std::to_string(kMaxDim));
  std::copy(coords.begin(), coords.end(), c_.begin());
}

std::int64_t Point::maxCoord() const {
  return dim_ == 0 ? 0 : *std::max_element(begin(), end());
}

std::int64_t Point::minCoord() const {
  return dim_ == 0 ? 0 : *std::min_element(begin(), end());
}

bool Point::isZero() const {
  return std::all_of(begin(), end(), [](std::int64_t v) { return v == 0; });
}

bool operator==(const Point& a, const Point& b) {
  return a.dim_ == b.dim_ && std::equal(a.begin(), a.end(), b.begin());
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

static void requireSameDim(const Point& a, const Point& b) {
  if (a.dim() != b.dim())
    throw DimensionError("dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

Point operator+(const Point& a, const Point& b) {
  requireSameDim(a, b);
  Point r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checkedAdd(a[i], b[i]);
  return r;
}

Point operator-(const Point& a, const Point& b) {
  requireSameDim(a, b);
  Point r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checkedAdd(a[i], -b[i]);
  return r;
}

Point operator*(std::int64_t k, const Point& a) {
  Point r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checkedMul(k, a[i]);
  return r;
}

std::string toString(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

std::int64_t gcdOf(const Point& p) {
  std::int64_t g = 0;
  for (auto v : p) g = std::gcd(g, v);
  return g;
}

std::int64_t dot(const Point& a, const Point& b) {
  requireSameDim(a, b);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s = checkedAdd(s, checkedMul(a[i], b[i]));
  return s;
}

Position::Position(std::initializer_list<std::int64_t> coords) : Position(Point(coords)) {}

Position::Position(const Point& p) : Point(p) {
  if (p.minCoord() < 0) throw InvalidInput("negative position " + toString(p));
}

Size::Size(std::initializer_list<std::int64_t> dims) : Size(Point(dims)) {}

Size::Size(const Point& p) : Point(p) {
  if (p.dim() == 0) throw InvalidInput("size needs at least one dimension");
  if (p.minCoord() < 1) throw InvalidInput("size entries must be positive " + toString(p));
}

Size Size::cube(std::size_t dim, std::int64_t side) { return Size(Point(dim, side)); }

std::int64_t Size::volume() const {
  std::int64_t v = 1;
  for (auto s : *this) v = checkedMul(v, s);
  return v;
}

Direction::Direction(std::initializer_list<std::int64_t> coords) : Direction(Point(coords)) {}

Direction::Direction(const Point& p) : Point(p) {
  if (p.minCoord() < 0) throw InvalidInput("negative direction " + toString(p));
  if (p.isZero()) throw DegenerateDirection("all-zero direction");
  if (gcdOf(p) != 1) throw NotCoprime("direction " + toString(p) + " is not coprime");
}

Direction normalizeDirection(const Point& raw) {
  if (raw.minCoord() < 0) throw InvalidInput("negative direction " + toString(raw));
  if (raw.isZero()) throw DegenerateDirection("all-zero direction");
  const std::int64_t g = gcdOf(raw);
  Point r(raw.dim());
  for (std::size_t i = 0; i < raw.dim(); ++i) r[i] = raw[i] / g;
  return Direction(r);
}

std::vector<Direction> enumerateDirections(std::size_t dim, std::int64_t q) {
  if (q < 1) throw InvalidInput("direction bound must be positive");
  std::vector<Direction> out;
  forEachCell(Point(dim, q + 1), [&](const Point& p) {
    if (!p.isZero() && gcdOf(p) == 1) out.emplace_back(p);
  });
  return out;
}

FiniteWord::FiniteWord(const Size& size, Letter fill)
    : size_(size), cells_(static_cast<std::size_t>(size.volume()), fill) {}

FiniteWord::FiniteWord(const Size& size, std::vector<Letter> cells)
    : size_(size), cells_(std::move(cells)) {
  if (static_cast<std::int64_t>(cells_.size()) != size.volume())
    throw InvalidInput("cell count does not match size " + toString(size));
}

FiniteWord FiniteWord::fromRowsTopFirst(const std::vector<std::vector<Letter>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("empty grid");
  const auto h = static_cast<std::int64_t>(rows.size());
  const auto w = static_cast<std::int64_t>(rows.front().size());
  FiniteWord f(Size{w, h});
  for (std::int64_t r = 0; r < h; ++r) {
    if (static_cast<std::int64_t>(rows[r].size()) != w) throw InvalidInput("ragged grid");
    for (std::int64_t x = 0; x < w; ++x) f.set(Point{x, h - 1 - r}, rows[r][x]);
  }
  return f;
}

std::size_t FiniteWord::index(const Point& i) const {
  if (i.dim() != size_.dim()) throw DimensionError("index dimension mismatch");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < i.dim(); ++k) {
    if (i[k] < 0 || i[k] >= size_[k]) throw InvalidInput("index " + toString(i) + " outside " + toString(size_));
    idx = idx * static_cast<std::size_t>(size_[k]) + static_cast<std::size_t>(i[k]);
  }
  return idx;
}

Letter FiniteWord::maxLetter() const {
  return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
}

FiniteWord FiniteWord::block(const Point& p, const Size& s) const {
  FiniteWord out(s);
  std::size_t n = 0;
  forEachCell(s, [&](const Point& i) { out.cells_[n++] = at(p + i); });
  return out;
}

FiniteWord FiniteWord::transposed() const {
  if (dim() != 2) throw DimensionError("transpose needs dimension 2");
  FiniteWord t(Size{size_[1], size_[0]});
  forEachCell(size_, [&](const Point& i) { t.set(Point{i[1], i[0]}, at(i)); });
  return t;
}

std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(), b.cells_.begin(),
                                                b.cells_.end());
}

FunctionWord::FunctionWord(std::size_t dim, std::size_t k, Fn fn, std::string name)
    : dim_(dim), k_(k), fn_(std::move(fn)), name_(std::move(name)) {}

TranslatedWord::TranslatedWord(WordPtr base, const Position& offset)
    : base_(std::move(base)), offset_(offset) {
  if (offset_.dim() != base_->dimension()) throw DimensionError("translation dimension mismatch");
}

std::string TranslatedWord::describe() const {
  return base_->describe() + " shifted by " + toString(offset_);
}

WordPtr makeWord(std::size_t dim, std::size_t k, FunctionWord::Fn fn, std::string name) {
  return std::make_shared<FunctionWord>(dim, k, std::move(fn), std::move(name));
}

WordPtr constantWord(std::size_t dim, Letter a, std::size_t k) {
  return makeWord(dim, std::max<std::size_t>(k, a + 1), [a](const Point&) { return a; }, "constant");
}

WordPtr translateOrigin(const WordPtr& w, const Position& p) {
  if (p.dim() != w->dimension()) throw DimensionError("translation dimension mismatch");
  if (p.isZero()) return w;
  if (auto t = std::dynamic_pointer_cast<const TranslatedWord>(w))
    return std::make_shared<TranslatedWord>(t->base(), Position(t->offset() + p));
  return std::make_shared<TranslatedWord>(w, p);
}

FiniteWord factorAt(const WordSource& w, const Point& p, const Size& s) {
  if (p.dim() != w.dimension() || s.dim() != w.dimension())
    throw DimensionError("factor dimension mismatch with word of dimension " + std::to_string(w.dimension()));
  FiniteWord f(s);
  auto& cells = f.cells();
  std::size_t n = 0;
  forEachCell(s, [&](const Point& i) { cells[n++] = w.at(p + i); });
  return f;
}

bool factorMatches(const WordSource& w, const Point& p, const FiniteWord& f) {
  const auto& cells = f.cells();
  const Size& s = f.size();
  if (p.dim() != w.dimension() || s.dim() != w.dimension()) throw DimensionError("factor dimension mismatch");
  const std::size_t d = s.dim();
  Point i(d);
  Point at = p;
  for (std::size_t n = 0; n < cells.size(); ++n) {
    if (w.at(at) != cells[n]) return false;
    std::size_t k = d;
    while (k > 0) {
      --k;
      ++at[k];
      if (++i[k] < s[k]) break;
      at[k] -= i[k];
      i[k] = 0;
    }
  }
  return true;
}

FiniteWord directionalLetter(const WordSource& w, const Direction& q, const Size& s, std::int64_t l) {
  if (q.dim() != w.dimension()) throw DimensionError("direction dimension mismatch");
  if (l < 0) throw InvalidInput("negative index along direction");
  return factorAt(w, l * q, s);
}

FiniteWord prefixOf(const WordSource& w, const Size& s) {
  return factorAt(w, Point(w.dimension()), s);
}

}  // namespace multirec
