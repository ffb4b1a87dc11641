#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rankmatch {

// Arbitrary-precision signed integer (sign + base-2^32 magnitude).  Covers
// the needs of the exact LP oracle: add/sub/mul, truncated divmod, and
// conversion to double.  Throughput matters less than being obviously
// correct; the magnitudes stay in the hundreds of bits.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT: implicit by design, mirrors int

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  BigInt negated() const;
  BigInt abs() const;

  // Total bit length of the magnitude (0 for zero).
  int bit_length() const;

  double to_double() const;
  std::string str() const;  // base 10

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncated toward zero: a == (a/b)*b + a%b, |a%b| < |b|, sign(a%b) in
  // {0, sign(a)}.  Throws on division by zero.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  // Quotient with a guarantee that the division is exact; throws
  // std::logic_error when a remainder appears.
  static BigInt exact_div(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator<=(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

 private:
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b);
  // Requires a >= b.
  static std::vector<std::uint32_t> sub_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b);
  // Knuth algorithm D (with a fast path for single-limb divisors).
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& quot,
                         std::vector<std::uint32_t>& rem);
  static void trim(std::vector<std::uint32_t>& mag);
  static BigInt from_mag(int sign, std::vector<std::uint32_t> mag);

  int sign_ = 0;                     // -1, 0, +1
  std::vector<std::uint32_t> mag_;   // little-endian, no leading zeros
};

// Fraction of BigInts with positive denominator.  Not reduced to lowest
// terms; equality and ordering compare cross-products.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  double to_double() const;

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b);
  friend bool operator!=(const BigRational& a, const BigRational& b) {
    return !(a == b);
  }
  friend bool operator<(const BigRational& a, const BigRational& b);
  friend bool operator<=(const BigRational& a, const BigRational& b);

 private:
  BigInt num_;
  BigInt den_;  // > 0
};

}  // namespace rankmatch
