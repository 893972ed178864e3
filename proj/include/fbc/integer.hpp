// Arbitrary-precision signed integers.
//
// Sign-magnitude representation with 32-bit limbs (little endian).  Only the
// operations the exact polynomial arithmetic needs are provided: ring ops,
// truncated division with remainder, gcd, parity, comparisons and conversion
// to double for the numeric layer.

#ifndef FBC_INTEGER_HPP
#define FBC_INTEGER_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fbc {

class Integer {
 public:
  Integer() = default;
  Integer(long long v);  // NOLINT(google-explicit-constructor)

  static Integer from_string(const std::string& s);
  std::string to_string() const;

  int sgn() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  bool odd() const { return sign_ != 0 && (mag_[0] & 1u); }

  Integer abs() const;
  Integer operator-() const;

  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(const Integer& a, const Integer& b);

  // Truncated toward zero, as for built-in integers: a == (a/b)*b + a%b.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);
  static void div_mod(const Integer& a, const Integer& b, Integer& q, Integer& r);

  // Quotient when the division is known exact; returns false on nonzero
  // remainder (used by the exact-division polynomial routines).
  static bool div_exact(const Integer& a, const Integer& b, Integer& q);

  static Integer gcd(Integer a, Integer b);

  bool operator==(const Integer& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
  bool operator!=(const Integer& o) const { return !(*this == o); }
  bool operator<(const Integer& o) const { return cmp(o) < 0; }
  bool operator<=(const Integer& o) const { return cmp(o) <= 0; }
  bool operator>(const Integer& o) const { return cmp(o) > 0; }
  bool operator>=(const Integer& o) const { return cmp(o) >= 0; }

  double to_double() const;
  // Value as long long; sets ok=false when out of range.
  long long to_ll(bool& ok) const;

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // little endian, no leading zero limbs, empty iff sign_==0

  int cmp(const Integer& o) const;
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void div_mod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                          std::vector<uint32_t>& q, std::vector<uint32_t>& r);
  void trim();
};

inline Integer operator*(long long a, const Integer& b) { return Integer(a) * b; }

std::string to_string(const Integer& v);

}  // namespace fbc

#endif  // FBC_INTEGER_HPP
