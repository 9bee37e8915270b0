#include "nichols/rat.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace nichols {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs64(std::int64_t x) {
  return x < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(x)
               : static_cast<std::uint64_t>(x);
}

mpz_class mpz_from_i64(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return z;
}

bool fits_i64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  *this = from_wide(static_cast<i128>(n), static_cast<i128>(d));
}

Rat::Rat(const mpq_class& q) { *this = normalize(q); }

Rat Rat::normalize(mpq_class q) {
  q.canonicalize();
  Rat r;
  if (fits_i64(q.get_num()) && fits_i64(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rat Rat::from_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  // Slow path: assemble through GMP from the two 64-bit halves.
  auto to_mpz = [](i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi, lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  };
  return normalize(mpq_class(to_mpz(n), to_mpz(d)));
}

Rat Rat::from_string(std::string_view s) {
  std::string str(s);
  auto slash = str.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(str, 10);
      return normalize(mpq_class(n));
    }
    mpz_class n(str.substr(0, slash), 10);
    mpz_class d(str.substr(slash + 1), 10);
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    return normalize(mpq_class(n, d));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat: cannot parse '" + str + "'");
  }
}

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

mpz_class Rat::numerator() const { return big_ ? big_->get_num() : mpz_from_i64(num_); }
mpz_class Rat::denominator() const { return big_ ? big_->get_den() : mpz_from_i64(den_); }

std::string Rat::to_string() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator-() const {
  if (big_) return normalize(-*big_);
  return from_wide(-static_cast<i128>(num_), den_);
}

Rat operator+(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      long long s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rat(s);
    }
    if (a.den_ == b.den_) {
      return Rat::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
    }
    std::uint64_t g = gcd64(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
    i128 ad = a.den_ / static_cast<std::int64_t>(g);
    i128 bd = b.den_ / static_cast<std::int64_t>(g);
    // a.num*bd + b.num*ad stays inside 128 bits for 64-bit inputs.
    i128 n = static_cast<i128>(a.num_) * bd + static_cast<i128>(b.num_) * ad;
    i128 d = ad * b.den_;
    return Rat::from_wide(n, d);
  }
  return Rat::normalize(a.to_mpq() + b.to_mpq());
}

Rat operator-(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      long long s;
      if (!__builtin_sub_overflow(a.num_, b.num_, &s)) return Rat(s);
    }
    return a + (-b);
  }
  return Rat::normalize(a.to_mpq() - b.to_mpq());
}

Rat operator*(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rat();
    if (a.den_ == 1 && b.den_ == 1) {
      long long p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rat(p);
    }
    std::uint64_t g1 = gcd64(uabs64(a.num_), static_cast<std::uint64_t>(b.den_));
    std::uint64_t g2 = gcd64(uabs64(b.num_), static_cast<std::uint64_t>(a.den_));
    i128 n = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) *
             (b.num_ / static_cast<std::int64_t>(g2));
    i128 d = static_cast<i128>(a.den_ / static_cast<std::int64_t>(g2)) *
             (b.den_ / static_cast<std::int64_t>(g1));
    return Rat::from_wide(n, d);
  }
  return Rat::normalize(a.to_mpq() * b.to_mpq());
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: division by zero");
  if (big_) return normalize(1 / *big_);
  return from_wide(den_, num_);
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }

Rat& Rat::operator+=(const Rat& o) { return *this = *this + o; }
Rat& Rat::operator-=(const Rat& o) { return *this = *this - o; }
Rat& Rat::operator*=(const Rat& o) { return *this = *this * o; }
Rat& Rat::operator/=(const Rat& o) { return *this = *this / o; }

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace nichols
