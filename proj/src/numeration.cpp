#include "tribwords/numeration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace tribwords {

namespace {

constexpr std::array<u64, kMaxTribIndex + 1> make_trib_table() {
  std::array<u64, kMaxTribIndex + 1> t{};
  t[0] = 0;
  t[1] = 1;
  t[2] = 1;
  for (int k = 3; k <= kMaxTribIndex; ++k)
    t[k] = t[k - 1] + t[k - 2] + t[k - 3];
  return t;
}

constexpr auto kTrib = make_trib_table();

// T_75 would overflow; make sure the table stops exactly at the last representable entry.
static_assert(kTrib[kMaxTribIndex] > ~u64{0} - kTrib[kMaxTribIndex - 1] - kTrib[kMaxTribIndex - 2]);

// Index of the largest T_k <= n with k >= 2; requires n >= 1.
int top_index(u64 n) {
  const auto it = std::upper_bound(kTrib.begin() + 2, kTrib.end(), n);
  return static_cast<int>(it - kTrib.begin()) - 1;
}

Constants compute_constants() {
  Constants c{};
  auto p = [](double x) { return ((x - 1.0) * x - 1.0) * x - 1.0; };
  auto dp = [](double x) { return (3.0 * x - 2.0) * x - 1.0; };
  double x = 2.0;
  for (int it = 0; it < 100; ++it) {
    const double step = p(x) / dp(x);
    x -= step;
    if (std::abs(p(x)) < 1e-14 && std::abs(step) < 1e-15)
      break;
  }
  c.psi = x;
  c.psi_residual = std::abs(p(x));

  // X^3 - X^2 - X - 1 = (X - psi)(X^2 + (psi - 1) X + 1/psi)
  const double a = c.psi - 1.0;
  const double b = 1.0 / c.psi;
  const double im = std::sqrt(4.0 * b - a * a) / 2.0;
  c.psi2 = {-a / 2.0, im};
  c.psi3 = std::conj(c.psi2);

  auto coeff = [](std::complex<double> z) { return 1.0 / (-z * z + 4.0 * z - 1.0); };
  c.c1 = coeff(c.psi).real();
  c.c2 = coeff(c.psi2);
  c.c3 = coeff(c.psi3);
  c.gamma = (c.psi * c.psi + 1.0) / 2.0;
  c.K = 2.0 * std::abs(c.c2 * c.psi2 * c.psi2);
  return c;
}

constexpr std::int64_t kCubicLimit = std::int64_t{1} << 40;

void check_cubic_range(const Rational& q) {
  if (q.num() > kCubicLimit || q.num() < -kCubicLimit || q.den() > kCubicLimit)
    throw std::range_error("exact comparison: rational " + q.to_string() + " exceeds 2^40");
}

int sign(i128 v) { return (v > 0) - (v < 0); }

} // namespace

u64 trib_number(int k) {
  if (k < 0)
    throw std::invalid_argument("trib_number: negative index " + std::to_string(k));
  if (k > kMaxTribIndex)
    throw std::overflow_error("trib_number: T_" + std::to_string(k) + " exceeds 64 bits");
  return kTrib[static_cast<std::size_t>(k)];
}

std::span<const u64> trib_table() { return kTrib; }

std::optional<u64> checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r))
    return std::nullopt;
  return r;
}

std::optional<u64> checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r))
    return std::nullopt;
  return r;
}

bool TribRep::is_valid(std::span<const std::uint8_t> digits) {
  if (!digits.empty() && digits.front() != 1)
    return false;
  int run = 0;
  for (auto d : digits) {
    if (d > 1)
      return false;
    run = d ? run + 1 : 0;
    if (run >= 3)
      return false;
  }
  return true;
}

TribRep TribRep::from_digits(std::vector<std::uint8_t> digits) {
  if (!is_valid(digits))
    throw std::invalid_argument("invalid Tribonacci representation");
  return TribRep(std::move(digits));
}

TribRep TribRep::parse(std::string_view text) {
  if (text == "0")
    return TribRep{};
  std::vector<std::uint8_t> digits;
  digits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("invalid Tribonacci digit '" + std::string(1, ch) + "'");
    digits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  if (!is_valid(digits))
    throw std::invalid_argument("invalid Tribonacci representation \"" + std::string(text) +
                                "\" (leading zero or 111 block)");
  return TribRep(std::move(digits));
}

TribRep TribRep::shifted() const {
  if (digits_.empty())
    return {};
  auto d = digits_;
  d.push_back(0);
  return TribRep(std::move(d));
}

std::string TribRep::to_string() const {
  if (digits_.empty())
    return "0";
  std::string s;
  s.reserve(digits_.size());
  for (auto d : digits_)
    s.push_back(static_cast<char>('0' + d));
  return s;
}

TribRep encode(u64 n) {
  if (n == 0)
    return {};
  const int top = top_index(n);
  std::vector<std::uint8_t> digits;
  digits.reserve(static_cast<std::size_t>(top - 1));
  u64 rem = n;
  for (int k = top; k >= 2; --k) {
    if (kTrib[k] <= rem) {
      rem -= kTrib[k];
      digits.push_back(1);
    } else {
      digits.push_back(0);
    }
  }
  return TribRep::from_digits(std::move(digits));
}

u64 decode(const TribRep& rep) {
  const auto& d = rep.digits();
  const std::size_t len = d.size();
  u64 sum = 0;
  for (std::size_t j = 0; j < len; ++j) {
    if (!d[j])
      continue;
    const std::size_t k = len + 1 - j;
    if (k > static_cast<std::size_t>(kMaxTribIndex))
      throw std::overflow_error("decode: representation with " + std::to_string(len) + " digits exceeds 64 bits");
    const auto next = checked_add(sum, kTrib[k]);
    if (!next)
      throw std::overflow_error("decode: value exceeds 64 bits");
    sum = *next;
  }
  return sum;
}

std::optional<u64> try_shift(u64 n) noexcept {
  if (n == 0)
    return 0;
  u64 rem = n;
  u64 out = 0;
  for (int k = top_index(n); k >= 2 && rem != 0; --k) {
    if (kTrib[k] > rem)
      continue;
    rem -= kTrib[k];
    if (k + 1 > kMaxTribIndex)
      return std::nullopt;
    const auto next = checked_add(out, kTrib[k + 1]);
    if (!next)
      return std::nullopt;
    out = *next;
  }
  return out;
}

u64 shift(u64 n) {
  const auto r = try_shift(n);
  if (!r)
    throw std::overflow_error("shift(" + std::to_string(n) + ") exceeds 64 bits");
  return *r;
}

const Constants& constants() {
  static const Constants c = compute_constants();
  return c;
}

int compare_with_psi(const Rational& q) {
  check_cubic_range(q);
  const i128 a = q.num();
  const i128 b = q.den();
  // psi is the only real root and the cubic is positive beyond it.
  return sign(a * a * a - a * a * b - a * b * b - b * b * b);
}

int compare_with_psi_squared(const Rational& q) {
  check_cubic_range(q);
  const i128 a = q.num();
  const i128 b = q.den();
  return sign(a * a * a - 3 * a * a * b - a * b * b - b * b * b);
}

u64 floor_psi_times(u64 n) {
  if (n >= (u64{1} << 38))
    throw std::range_error("floor_psi_times: n too large for exact comparison");
  if (n == 0)
    return 0;
  const auto sn = static_cast<std::int64_t>(n);
  auto m = static_cast<std::int64_t>(std::floor(constants().psi * static_cast<double>(n)));
  while (compare_with_psi(Rational(m + 1, sn)) < 0)
    ++m;
  while (compare_with_psi(Rational(m, sn)) > 0)
    --m;
  return static_cast<u64>(m);
}

u64 floor_gamma_times(u64 n) {
  if (n >= (u64{1} << 38))
    throw std::range_error("floor_gamma_times: n too large for exact comparison");
  if (n == 0)
    return 0;
  const auto sn = static_cast<std::int64_t>(n);
  auto m = static_cast<std::int64_t>(std::floor(constants().gamma * static_cast<double>(n)));
  // m <= gamma n  <=>  (2m - n) / n <= psi^2
  while (compare_with_psi_squared(Rational(2 * (m + 1) - sn, sn)) < 0)
    ++m;
  while (compare_with_psi_squared(Rational(2 * m - sn, sn)) > 0)
    --m;
  return static_cast<u64>(m);
}

} // namespace tribwords
