#include "fbc/integer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fbc {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

Integer::Integer(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                               : ~static_cast<unsigned long long>(v) + 1ull;
  while (m) {
    mag_.push_back(static_cast<uint32_t>(m & 0xffffffffull));
    m >>= 32;
  }
}

void Integer::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int Integer::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int Integer::cmp(const Integer& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
  if (sign_ == 0) return 0;
  int c = cmp_mag(mag_, o.mag_);
  return sign_ > 0 ? c : -c;
}

std::vector<uint32_t> Integer::add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r[i] = static_cast<uint32_t>(s & 0xffffffffull);
    carry = s >> 32;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Requires |a| >= |b|.
std::vector<uint32_t> Integer::sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> Integer::mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t s = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(s & 0xffffffffull);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t s = r[k] + carry;
      r[k] = static_cast<uint32_t>(s & 0xffffffffull);
      carry = s >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D, simplified.  Requires b nonzero.
void Integer::div_mod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                          std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.clear();
  r.clear();
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  // Normalize so the top limb of the divisor has its high bit set.
  int shift = 0;
  for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
  auto shl = [&](const std::vector<uint32_t>& v) {
    std::vector<uint32_t> out(v.size() + 1, 0);
    for (size_t i = 0; i < v.size(); ++i) {
      out[i] |= shift ? (v[i] << shift) : v[i];
      if (shift) out[i + 1] = v[i] >> (32 - shift);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  std::vector<uint32_t> u = shl(a), v = shl(b);
  size_t n = v.size(), m = u.size() - n;
  u.resize(u.size() + 1, 0);
  q.assign(m + 1, 0);

  const uint64_t vtop = v[n - 1];
  const uint64_t vsec = n >= 2 ? v[n - 2] : 0;
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / vtop;
    uint64_t rhat = num % vtop;
    if (qhat >= kBase) {
      qhat = kBase - 1;
      rhat = num - qhat * vtop;
    }
    while (rhat < kBase && qhat * vsec > ((rhat << 32) | (n >= 2 ? u[j + n - 2] : 0))) {
      --qhat;
      rhat += vtop;
    }
    // u[j .. j+n] -= qhat * v
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(u[j + i]) - static_cast<int64_t>(p & 0xffffffffull) - borrow;
      if (t < 0) {
        t += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[j + i] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (t < 0) {
      // qhat was one too large: add v back.
      t += static_cast<int64_t>(kBase);
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[j + i]) + v[i] + c2;
        u[j + i] = static_cast<uint32_t>(s & 0xffffffffull);
        c2 = s >> 32;
      }
      t += static_cast<int64_t>(c2);
      t &= 0xffffffffll;
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  // Denormalize remainder.
  u.resize(n);
  if (shift) {
    for (size_t i = 0; i < n; ++i) {
      u[i] >>= shift;
      if (i + 1 < n) u[i] |= u[i + 1] << (32 - shift);
    }
  }
  while (!u.empty() && u.back() == 0) u.pop_back();
  r = std::move(u);
}

Integer Integer::abs() const {
  Integer r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

Integer Integer::operator-() const {
  Integer r = *this;
  r.sign_ = -r.sign_;
  return r;
}

Integer& Integer::operator+=(const Integer& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    mag_ = add_mag(mag_, o.mag_);
  } else {
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
      sign_ = 0;
      mag_.clear();
    } else if (c > 0) {
      mag_ = sub_mag(mag_, o.mag_);
    } else {
      mag_ = sub_mag(o.mag_, mag_);
      sign_ = o.sign_;
    }
  }
  trim();
  return *this;
}

Integer& Integer::operator-=(const Integer& o) { return *this += -o; }

Integer& Integer::operator*=(const Integer& o) { return *this = *this * o; }

Integer operator*(const Integer& a, const Integer& b) {
  Integer r;
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = Integer::mul_mag(a.mag_, b.mag_);
  r.trim();
  return r;
}

void Integer::div_mod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  if (b.sign_ == 0) throw std::domain_error("Integer: division by zero");
  std::vector<uint32_t> qm, rm;
  div_mod_mag(a.mag_, b.mag_, qm, rm);
  q = Integer();
  r = Integer();
  if (!qm.empty()) {
    q.sign_ = a.sign_ * b.sign_;
    q.mag_ = std::move(qm);
  }
  if (!rm.empty()) {
    r.sign_ = a.sign_;
    r.mag_ = std::move(rm);
  }
}

Integer operator/(const Integer& a, const Integer& b) {
  Integer q, r;
  Integer::div_mod(a, b, q, r);
  return q;
}

Integer operator%(const Integer& a, const Integer& b) {
  Integer q, r;
  Integer::div_mod(a, b, q, r);
  return r;
}

bool Integer::div_exact(const Integer& a, const Integer& b, Integer& q) {
  Integer r;
  div_mod(a, b, q, r);
  return r.is_zero();
}

Integer Integer::gcd(Integer a, Integer b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string Integer::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Integer Integer::from_string(const std::string& s) {
  Integer r;
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("Integer: empty numeral");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Integer: bad digit");
    r *= Integer(10);
    r += Integer(s[i] - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

double Integer::to_double() const {
  double v = 0;
  for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
  return sign_ < 0 ? -v : v;
}

long long Integer::to_ll(bool& ok) const {
  ok = true;
  if (sign_ == 0) return 0;
  if (mag_.size() > 2) {
    ok = false;
    return 0;
  }
  unsigned long long v = mag_[0];
  if (mag_.size() == 2) v |= static_cast<unsigned long long>(mag_[1]) << 32;
  if (sign_ > 0) {
    if (v > 0x7fffffffffffffffull) ok = false;
    return ok ? static_cast<long long>(v) : 0;
  }
  if (v > 0x8000000000000000ull) {
    ok = false;
    return 0;
  }
  return v == 0x8000000000000000ull ? (-0x7fffffffffffffffll - 1) : -static_cast<long long>(v);
}

std::string to_string(const Integer& v) { return v.to_string(); }

}  // namespace fbc
