#include "multirec/quadext.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace multirec {

namespace {

using Big = boost::multiprecision::cpp_int;

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mul64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("rational multiplication");
  return r;
}

// n = outside^2 * prod(primes), primes distinct.
std::pair<std::int64_t, std::vector<std::int64_t>> squarefree(std::int64_t n) {
  std::int64_t outside = 1;
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) outside = mul64(outside, p);
    if (e % 2) primes.push_back(p);
  }
  if (n > 1) primes.push_back(n);
  return {outside, primes};
}

std::int64_t radicandOf(const std::vector<std::int64_t>& primes, std::size_t mask) {
  std::int64_t r = 1;
  for (std::size_t j = 0; j < primes.size(); ++j)
    if (mask >> j & 1) r = mul64(r, primes[j]);
  return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InvalidInput("zero denominator");
  *this = fromWide(n, d);
}

Rational Rational::fromWide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
  if (n > lim || n < -lim || d > lim) throw ArithmeticOverflow("rational out of 64-bit range");
  Rational r;
  r.n_ = static_cast<std::int64_t>(n);
  r.d_ = static_cast<std::int64_t>(d);
  return r;
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw InvalidInput("not a rational: '" + text + "'");
  }
}

std::int64_t Rational::floor() const {
  std::int64_t q = n_ / d_;
  if (n_ % d_ != 0 && n_ < 0) --q;
  return q;
}

std::string Rational::toString() const {
  return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.d_ == b.d_) return Rational::fromWide(static_cast<__int128>(a.n_) + b.n_, a.d_);
  return Rational::fromWide(static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_,
                            static_cast<__int128>(a.d_) * b.d_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::fromWide(static_cast<__int128>(a.n_) * b.n_, static_cast<__int128>(a.d_) * b.d_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.n_ == 0) throw InvalidInput("division by zero");
  return Rational::fromWide(static_cast<__int128>(a.n_) * b.d_, static_cast<__int128>(a.d_) * b.n_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.n_) * b.d_ <=> static_cast<__int128>(b.n_) * a.d_;
}

std::vector<std::int64_t> unionPrimes(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

QuadExt QuadExt::sqrt(std::int64_t n) { return term(Rational(1), n); }

QuadExt QuadExt::term(const Rational& c, std::int64_t radicand) {
  if (radicand < 0) throw InvalidInput("negative radicand");
  if (radicand == 0) return QuadExt();
  auto [outside, primes] = squarefree(radicand);
  if (primes.size() > 16) throw InvalidInput("too many radicals");
  QuadExt x;
  x.primes_ = primes;
  x.coeffs_.assign(std::size_t{1} << primes.size(), Rational(0));
  x.coeffs_.back() = c * Rational(outside);
  return x;
}

QuadExt QuadExt::withPrimes(const std::vector<std::int64_t>& primes) const {
  if (primes == primes_) return *this;
  std::vector<std::size_t> pos(primes_.size());
  for (std::size_t j = 0; j < primes_.size(); ++j) {
    auto it = std::lower_bound(primes.begin(), primes.end(), primes_[j]);
    if (it == primes.end() || *it != primes_[j]) throw InvalidInput("prime basis does not contain own radicals");
    pos[j] = static_cast<std::size_t>(it - primes.begin());
  }
  QuadExt x;
  x.primes_ = primes;
  x.coeffs_.assign(std::size_t{1} << primes.size(), Rational(0));
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
    std::size_t m2 = 0;
    for (std::size_t j = 0; j < primes_.size(); ++j)
      if (mask >> j & 1) m2 |= std::size_t{1} << pos[j];
    x.coeffs_[m2] = coeffs_[mask];
  }
  return x;
}

std::vector<std::pair<std::int64_t, Rational>> QuadExt::terms() const {
  std::vector<std::pair<std::int64_t, Rational>> out;
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask)
    if (!coeffs_[mask].isZero()) out.emplace_back(radicandOf(primes_, mask), coeffs_[mask]);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool QuadExt::isZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.isZero(); });
}

bool QuadExt::isRational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& r) { return r.isZero(); });
}

double QuadExt::approx() const {
  double s = 0;
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask)
    if (!coeffs_[mask].isZero())
      s += coeffs_[mask].toDouble() * std::sqrt(static_cast<double>(radicandOf(primes_, mask)));
  return s;
}

int QuadExt::sign() const {
  if (isRational()) return coeffs_[0].sign();
  double s = 0, mag = 0;
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
    if (coeffs_[mask].isZero()) continue;
    const double t = coeffs_[mask].toDouble() * std::sqrt(static_cast<double>(radicandOf(primes_, mask)));
    s += t;
    mag += std::abs(t);
  }
  if (std::abs(s) > mag * 1e-12) return s > 0 ? 1 : -1;
  if (isZero()) return 0;

  // Exact refinement: scale to integers, then bracket each radical by
  // isqrt(N * 4^k) / 2^k until the enclosure excludes zero.
  Big den = 1;
  for (const auto& c : coeffs_)
    if (!c.isZero()) den = boost::multiprecision::lcm(den, Big(c.den()));
  std::vector<std::pair<Big, std::int64_t>> parts;
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
    const auto& c = coeffs_[mask];
    if (c.isZero()) continue;
    parts.emplace_back(Big(c.num()) * (den / Big(c.den())), radicandOf(primes_, mask));
  }
  for (unsigned k = 32; k <= (1u << 20); k *= 2) {
    const Big scale = Big(1) << k;
    Big lo = 0, hi = 0;
    for (const auto& [n, rad] : parts) {
      if (rad == 1) {
        lo += n * scale;
        hi += n * scale;
        continue;
      }
      const Big r = boost::multiprecision::sqrt(Big(rad) << (2 * k));
      if (n > 0) {
        lo += n * r;
        hi += n * (r + 1);
      } else {
        lo += n * (r + 1);
        hi += n * r;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw ArithmeticOverflow("sign refinement did not terminate");
}

std::int64_t QuadExt::floor() const {
  if (isRational()) return coeffs_[0].floor();
  const double a = approx();
  if (!std::isfinite(a) || std::abs(a) > 9e15) throw ArithmeticOverflow("value too large for floor");
  // Bracket lo <= x < hi, then bisect on exact comparisons.
  std::int64_t lo = static_cast<std::int64_t>(std::floor(a)) - 1;
  std::int64_t hi = lo + 3;
  while (qextCompare(*this, QuadExt(lo)) == Cmp::LT) lo -= (hi - lo);
  while (qextCompare(*this, QuadExt(hi)) != Cmp::LT) hi += (hi - lo);
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (qextCompare(*this, QuadExt(mid)) == Cmp::LT)
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

std::string QuadExt::toString() const {
  const auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [rad, c] : ts) {
    std::string body = c.toString();
    if (rad != 1) {
      if (c == Rational(1))
        body = "sqrt(" + std::to_string(rad) + ")";
      else if (c == Rational(-1))
        body = "-sqrt(" + std::to_string(rad) + ")";
      else
        body += "*sqrt(" + std::to_string(rad) + ")";
    }
    if (!first) os << (body.front() == '-' ? " - " : " + ");
    os << (first ? body : (body.front() == '-' ? body.substr(1) : body));
    first = false;
  }
  return os.str();
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  if (a.primes_ == b.primes_) {
    QuadExt r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  const auto ps = unionPrimes(a.primes_, b.primes_);
  return a.withPrimes(ps) + b.withPrimes(ps);
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  if (a.primes_ != b.primes_) {
    const auto ps = unionPrimes(a.primes_, b.primes_);
    return a.withPrimes(ps) * b.withPrimes(ps);
  }
  QuadExt r;
  r.primes_ = a.primes_;
  r.coeffs_.assign(a.coeffs_.size(), Rational(0));
  for (std::size_t s = 0; s < a.coeffs_.size(); ++s) {
    if (a.coeffs_[s].isZero()) continue;
    for (std::size_t t = 0; t < b.coeffs_.size(); ++t) {
      if (b.coeffs_[t].isZero()) continue;
      const Rational c = a.coeffs_[s] * b.coeffs_[t] * Rational(radicandOf(a.primes_, s & t));
      r.coeffs_[s ^ t] += c;
    }
  }
  return r;
}

QuadExt QuadExt::scaled(const Rational& k) const {
  QuadExt r = *this;
  for (auto& c : r.coeffs_) c = c * k;
  return r;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.primes_ == b.primes_) return a.coeffs_ == b.coeffs_;
  const auto ps = unionPrimes(a.primes_, b.primes_);
  return a.withPrimes(ps).coeffs_ == b.withPrimes(ps).coeffs_;
}

Cmp qextCompare(const QuadExt& x, const QuadExt& y) {
  const int s = (x - y).sign();
  return s < 0 ? Cmp::LT : (s > 0 ? Cmp::GT : Cmp::EQ);
}

QuadExt mod1(const QuadExt& x) { return x - QuadExt(x.floor()); }

}  // namespace multirec
