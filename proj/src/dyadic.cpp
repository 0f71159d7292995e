#include "schubop/dyadic.hpp"

#include <bit>
#include <charconv>
#include <limits>

#include "schubop/error.hpp"

namespace schubop {
namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

// Left shift without overflow; false when the result does not fit.
bool shift_fits(std::int64_t v, std::int32_t shift, std::int64_t& out) {
  if (shift == 0) {
    out = v;
    return true;
  }
  if (shift >= 62) {
    return v == 0 ? (out = 0, true) : false;
  }
  const std::int64_t limit = std::numeric_limits<std::int64_t>::max() >> shift;
  if (v > limit || v < -limit) {
    return false;
  }
  out = v * (std::int64_t{1} << shift);
  return true;
}

}  // namespace

Dyadic::Dyadic(std::int64_t value) : small_(value) { normalize(); }

Dyadic::Dyadic(const mpz_class& mantissa, std::int32_t exponent) : exp_(exponent) {
  set_big(mantissa);
  normalize();
}

Dyadic::Dyadic(const Dyadic& other)
    : small_(other.small_),
      exp_(other.exp_),
      big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}

Dyadic& Dyadic::operator=(const Dyadic& other) {
  if (this != &other) {
    small_ = other.small_;
    exp_ = other.exp_;
    big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Dyadic::set_big(mpz_class value) {
  if (value.fits_slong_p()) {
    small_ = value.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpz_class>(std::move(value));
    small_ = 0;
  }
}

void Dyadic::normalize() {
  if (big_) {
    if (*big_ == 0) {
      big_.reset();
      small_ = 0;
      exp_ = 0;
      return;
    }
    const auto tz = static_cast<std::int32_t>(mpz_scan1(big_->get_mpz_t(), 0));
    if (tz > 0) {
      mpz_tdiv_q_2exp(big_->get_mpz_t(), big_->get_mpz_t(), static_cast<mp_bitcnt_t>(tz));
      exp_ += tz;
    }
    if (big_->fits_slong_p()) {
      small_ = big_->get_si();
      big_.reset();
    }
    return;
  }
  if (small_ == 0) {
    exp_ = 0;
    return;
  }
  const int tz = std::countr_zero(static_cast<std::uint64_t>(small_));
  if (tz > 0) {
    small_ >>= tz;
    exp_ += tz;
  }
}

int Dyadic::sign() const noexcept {
  if (big_) {
    return sgn(*big_);
  }
  return (small_ > 0) - (small_ < 0);
}

mpz_class Dyadic::mantissa() const { return big_ ? *big_ : to_mpz(small_); }

mpq_class Dyadic::to_rational() const {
  mpq_class q(mantissa());
  if (exp_ > 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exp_));
  } else if (exp_ < 0) {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp_));
  }
  return q;
}

mpz_class Dyadic::to_integer() const {
  if (exp_ < 0) {
    throw NonDyadic("value " + to_string() + " is not an integer");
  }
  mpz_class z = mantissa();
  mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
  return z;
}

Dyadic Dyadic::from_rational(const mpq_class& q) {
  const mpz_class& den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw NonDyadic("denominator " + den.get_str() + " is not a power of two");
  }
  const auto k = static_cast<std::int32_t>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
  return Dyadic(q.get_num(), -k);
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num(text.substr(0, slash));
  mpz_class m;
  if (num.empty() || m.set_str(num[0] == '+' ? num.substr(1) : num, 10) != 0) {
    throw NonDyadic("malformed dyadic literal '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) {
    return Dyadic(m, 0);
  }
  std::string_view den = text.substr(slash + 1);
  if (den.starts_with("2^")) {
    int k = 0;
    auto digits = den.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || k < 0) {
      throw NonDyadic("malformed dyadic literal '" + std::string(text) + "'");
    }
    return Dyadic(m, -k);
  }
  mpz_class d;
  if (d.set_str(std::string(den), 10) != 0 || d <= 0) {
    throw NonDyadic("malformed dyadic literal '" + std::string(text) + "'");
  }
  return from_rational(mpq_class(m, d));
}

Dyadic Dyadic::scaled(std::int32_t k) const {
  Dyadic r(*this);
  if (!r.is_zero()) {
    r.exp_ += k;
  }
  return r;
}

Dyadic Dyadic::operator-() const {
  Dyadic r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
  } else if (r.small_ == std::numeric_limits<std::int64_t>::min()) {
    r.set_big(-to_mpz(r.small_));
  } else {
    r.small_ = -r.small_;
  }
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (rhs.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = rhs;
  }
  const std::int32_t e = std::min(exp_, rhs.exp_);
  if (!big_ && !rhs.big_) {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t sum = 0;
    if (shift_fits(small_, exp_ - e, a) && shift_fits(rhs.small_, rhs.exp_ - e, b) &&
        !__builtin_add_overflow(a, b, &sum)) {
      small_ = sum;
      exp_ = e;
      normalize();
      return *this;
    }
  }
  mpz_class a = mantissa();
  mpz_class b = rhs.mantissa();
  mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_ - e));
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(rhs.exp_ - e));
  exp_ = e;
  set_big(a + b);
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  if (is_zero() || rhs.is_zero()) {
    small_ = 0;
    exp_ = 0;
    big_.reset();
    return *this;
  }
  exp_ += rhs.exp_;
  std::int64_t prod = 0;
  if (!big_ && !rhs.big_ && !__builtin_mul_overflow(small_, rhs.small_, &prod)) {
    small_ = prod;  // odd * odd stays odd
    return *this;
  }
  set_big(mantissa() * rhs.mantissa());
  normalize();
  return *this;
}

Dyadic Dyadic::divided_by(const Dyadic& divisor) const {
  if (divisor.is_zero()) {
    throw NonDyadic("division by zero");
  }
  const mpz_class m = divisor.mantissa();
  if (m != 1 && m != -1) {
    // General case: go through rationals and insist on a dyadic result.
    return from_rational(to_rational() / divisor.to_rational());
  }
  Dyadic r = scaled(-divisor.exp_);
  return m < 0 ? -r : r;
}

bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
  if (a.exp_ != b.exp_) {
    return false;
  }
  if (!a.big_ && !b.big_) {
    return a.small_ == b.small_;
  }
  if (a.big_ && b.big_) {
    return *a.big_ == *b.big_;
  }
  return false;  // canonical form: big iff it does not fit
}

std::string Dyadic::to_string() const {
  if (exp_ >= 0) {
    return to_integer().get_str();
  }
  return mantissa().get_str() + "/2^" + std::to_string(-exp_);
}

std::size_t Dyadic::hash() const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(big_ ? static_cast<std::int64_t>(mpz_get_si(big_->get_mpz_t())) : small_);
  return h ^ (std::hash<std::int32_t>{}(exp_) * 0x9e3779b97f4a7c15ULL);
}

}  // namespace schubop
