#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace nichols {

// Exact rational number in lowest terms.
//
// Values whose numerator and denominator fit in int64 are stored inline; anything
// larger lives in an immutable, shared GMP rational. The representation is
// canonical (a value that fits inline is never stored as big), so equality is
// structural.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long long n, long long d);
  explicit Rat(const mpq_class& q);

  static Rat from_string(std::string_view s);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  // "p/q", or "p" when q = 1.
  std::string to_string() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  Rat inverse() const;

 private:
  static Rat normalize(mpq_class q);
  static Rat from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace nichols
