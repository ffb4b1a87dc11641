#include "rankmatch/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace rankmatch {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1
                            : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    mag_.push_back(static_cast<std::uint32_t>(mag));
    mag >>= 32;
  }
}

BigInt BigInt::negated() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

int BigInt::bit_length() const {
  if (sign_ == 0) return 0;
  return 32 * static_cast<int>(mag_.size()) -
         std::countl_zero(mag_.back());
}

void BigInt::trim(std::vector<std::uint32_t>& mag) {
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
}

BigInt BigInt::from_mag(int sign, std::vector<std::uint32_t> mag) {
  trim(mag);
  BigInt out;
  if (!mag.empty()) {
    out.sign_ = sign;
    out.mag_ = std::move(mag);
  }
  return out;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<std::uint32_t> out;
  out.reserve(hi.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    out.push_back(static_cast<std::uint32_t>(s));
    carry = s >> 32;
  }
  if (carry != 0) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(d));
  }
  trim(out);
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t s = ai * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    out[i + b.size()] = static_cast<std::uint32_t>(carry);
  }
  trim(out);
  return out;
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& quot,
                        std::vector<std::uint32_t>& rem) {
  quot.clear();
  rem.clear();
  if (b.empty()) throw std::invalid_argument("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    rem = a;
    return;
  }
  if (b.size() == 1) {
    const std::uint64_t d = b[0];
    quot.assign(a.size(), 0);
    std::uint64_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      const std::uint64_t cur = (r << 32) | a[i];
      quot[i] = static_cast<std::uint32_t>(cur / d);
      r = cur % d;
    }
    trim(quot);
    if (r != 0) rem.push_back(static_cast<std::uint32_t>(r));
    return;
  }

  // Knuth TAOCP vol. 2, algorithm D.  Normalize so the divisor's top limb
  // has its high bit set, then estimate one quotient limb at a time.
  const int shift = std::countl_zero(b.back());
  const std::size_t n = b.size();
  const std::size_t m = a.size() - n;

  std::vector<std::uint32_t> v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = b[i] << shift;
    if (shift != 0 && i > 0) v[i] |= b[i - 1] >> (32 - shift);
  }
  std::vector<std::uint32_t> u(a.size() + 1, 0);
  for (std::size_t i = a.size(); i-- > 0;) {
    u[i] = a[i] << shift;
    if (shift != 0 && i > 0) u[i] |= a[i - 1] >> (32 - shift);
  }
  if (shift != 0) u[a.size()] = a.back() >> (32 - shift);

  quot.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    const std::uint64_t top =
        (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = top / v[n - 1];
    std::uint64_t rhat = top % v[n - 1];
    while (qhat >= kBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }
    // Multiply-subtract qhat * v from u[j .. j+n].
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      const std::int64_t d = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xFFFFFFFFull) -
                             borrow;
      u[i + j] = static_cast<std::uint32_t>(d);
      borrow = d < 0 ? 1 : 0;
    }
    const std::int64_t d = static_cast<std::int64_t>(u[j + n]) -
                           static_cast<std::int64_t>(carry) - borrow;
    u[j + n] = static_cast<std::uint32_t>(d);

    if (d < 0) {
      // qhat was one too large; add the divisor back.
      --qhat;
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t s =
            static_cast<std::uint64_t>(u[i + j]) + v[i] + c;
        u[i + j] = static_cast<std::uint32_t>(s);
        c = s >> 32;
      }
      u[j + n] = static_cast<std::uint32_t>(u[j + n] + c);
    }
    quot[j] = static_cast<std::uint32_t>(qhat);
  }
  trim(quot);

  rem.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
  if (shift != 0) {
    for (std::size_t i = 0; i < n; ++i) {
      rem[i] >>= shift;
      if (i + 1 < n) rem[i] |= u[i + 1] << (32 - shift);
    }
  }
  trim(rem);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  if (a.sign_ == b.sign_)
    return BigInt::from_mag(a.sign_, BigInt::add_mag(a.mag_, b.mag_));
  const int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (c == 0) return BigInt();
  return c > 0 ? BigInt::from_mag(a.sign_, BigInt::sub_mag(a.mag_, b.mag_))
               : BigInt::from_mag(b.sign_, BigInt::sub_mag(b.mag_, a.mag_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  return BigInt::from_mag(a.sign_ * b.sign_, BigInt::mul_mag(a.mag_, b.mag_));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  std::vector<std::uint32_t> q, r;
  BigInt::divmod_mag(a.mag_, b.mag_, q, r);
  return BigInt::from_mag(a.sign_ * b.sign_, std::move(q));
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  std::vector<std::uint32_t> q, r;
  BigInt::divmod_mag(a.mag_, b.mag_, q, r);
  return BigInt::from_mag(a.sign_, std::move(r));
}

BigInt BigInt::exact_div(const BigInt& a, const BigInt& b) {
  std::vector<std::uint32_t> q, r;
  divmod_mag(a.mag_, b.mag_, q, r);
  if (!r.empty()) throw std::logic_error("BigInt::exact_div: nonzero remainder");
  return from_mag(a.sign_ * b.sign_, std::move(q));
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  const int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }

double BigInt::to_double() const {
  if (sign_ == 0) return 0.0;
  const int bits = bit_length();
  double value;
  int exp = 0;
  if (bits <= 64) {
    std::uint64_t v = mag_[0];
    if (mag_.size() > 1) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
    value = static_cast<double>(v);
  } else {
    // Top 64 bits of the magnitude; `exp` remembers the dropped tail.
    exp = bits - 64;
    auto limb_at = [&](int i) -> std::uint64_t {
      return i < static_cast<int>(mag_.size()) ? mag_[i] : 0u;
    };
    std::uint64_t v = 0;
    for (int bit = 0; bit < 64; ++bit) {
      const int src = exp + bit;
      v |= ((limb_at(src / 32) >> (src % 32)) & 1ull) << bit;
    }
    value = static_cast<double>(v);
  }
  return sign_ * std::ldexp(value, exp);
}

std::string BigInt::str() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> mag = mag_;
  std::string digits;
  const std::vector<std::uint32_t> chunk = {1000000000u};
  while (!mag.empty()) {
    std::vector<std::uint32_t> q, r;
    divmod_mag(mag, chunk, q, r);
    const std::uint32_t part = r.empty() ? 0u : r[0];
    std::string s = std::to_string(part);
    if (!q.empty()) s = std::string(9 - s.size(), '0') + s;
    digits = s + digits;
    mag = std::move(q);
  }
  return (sign_ < 0 ? "-" : "") + digits;
}

// ---- BigRational ------------------------------------------------------------

BigRational::BigRational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("BigRational: zero denominator");
  if (den_.sign() < 0) {
    num_ = num_.negated();
    den_ = den_.negated();
  }
}

double BigRational::to_double() const {
  if (num_.is_zero()) return 0.0;
  const int shift_n = std::max(0, num_.bit_length() - 62);
  const int shift_d = std::max(0, den_.bit_length() - 62);
  // Compare magnitudes through their top 62 bits; ldexp restores scale.
  auto top = [](const BigInt& v, int drop) {
    BigInt t = v.abs();
    if (drop > 0) {
      BigInt divisor(1);
      for (int i = 0; i < drop; ++i) divisor = divisor * BigInt(2);
      t = t / divisor;
    }
    return t.to_double();
  };
  const double ratio = top(num_, shift_n) / top(den_, shift_d);
  return (num_.sign() < 0 ? -1.0 : 1.0) * std::ldexp(ratio, shift_n - shift_d);
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
BigRational operator-(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
BigRational operator*(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const BigRational& a, const BigRational& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}
bool operator<(const BigRational& a, const BigRational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}
bool operator<=(const BigRational& a, const BigRational& b) {
  return a.num_ * b.den_ <= b.num_ * a.den_;
}

}  // namespace rankmatch
