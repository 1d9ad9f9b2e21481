#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tribwords/rational.hpp"

namespace tribwords {

using u64 = std::uint64_t;

/// Largest k for which the Tribonacci number T_k fits in 64 bits.
inline constexpr int kMaxTribIndex = 74;

/// T_0 = 0, T_1 = T_2 = 1, T_k = T_{k-1} + T_{k-2} + T_{k-3}.
/// Throws std::overflow_error when T_k does not fit in 64 bits.
u64 trib_number(int k);

/// The whole table T_0..T_74.
std::span<const u64> trib_table();

/// Checked arithmetic helpers; nullopt on wraparound.
std::optional<u64> checked_add(u64 a, u64 b);
std::optional<u64> checked_mul(u64 a, u64 b);

/// Greedy Tribonacci representation, msd-first. Digit j (0-based from the
/// left) of an L-digit string carries weight T_{L+1-j}, so the last digit
/// weighs T_2 = 1. Zero is the empty string.
class TribRep {
public:
  TribRep() = default;

  /// Rejects digits other than 0/1, a leading 0, or any "111" block.
  static TribRep from_digits(std::vector<std::uint8_t> digits);

  /// Parses ASCII 0/1. The single string "0" is accepted as zero.
  static TribRep parse(std::string_view text);

  static bool is_valid(std::span<const std::uint8_t> digits);

  const std::vector<std::uint8_t>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool is_zero() const { return digits_.empty(); }

  /// The digits with one 0 appended at the least significant end.
  TribRep shifted() const;

  /// ASCII rendering; zero renders as "0".
  std::string to_string() const;

  friend bool operator==(const TribRep&, const TribRep&) = default;

private:
  explicit TribRep(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}
  std::vector<std::uint8_t> digits_;
};

TribRep encode(u64 n);

/// Throws std::overflow_error if the value exceeds 64 bits.
u64 decode(const TribRep& rep);

/// decode(encode(n) . 0). Throws std::overflow_error on wraparound.
u64 shift(u64 n);
std::optional<u64> try_shift(u64 n) noexcept;

/// Real and complex roots of X^3 - X^2 - X - 1 and the coefficients of the
/// closed form T_n = c1 psi^n + c2 psi2^n + c3 psi3^n.
struct Constants {
  double psi;
  std::complex<double> psi2;
  std::complex<double> psi3;
  double c1;
  std::complex<double> c2;
  std::complex<double> c3;
  double gamma;  // (psi^2 + 1) / 2
  double K;      // 2 |c2 psi2^2|, bounds |T_n - c1 psi^n| for n >= 2
  double psi_residual;
};

/// Computed once by Newton's method; thread-safe.
const Constants& constants();

/// Sign of q - psi, decided exactly by the sign of the cubic at q.
/// Throws std::range_error if the numerator or denominator exceeds 2^40.
int compare_with_psi(const Rational& q);

/// Sign of q - psi^2, using psi^2's minimal polynomial Y^3 - 3Y^2 - Y - 1.
int compare_with_psi_squared(const Rational& q);

/// Exact floor(psi * n) and floor(gamma * n); n < 2^38.
u64 floor_psi_times(u64 n);
u64 floor_gamma_times(u64 n);

} // namespace tribwords
