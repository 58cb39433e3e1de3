#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

namespace speclab {

// Thin RAII wrapper over GMP's mpz_t; just the operations the counting and
// likelihood paths need.
class BigInt {
 public:
  BigInt() { mpz_init(v_); }
  explicit BigInt(unsigned long value) { mpz_init_set_ui(v_, value); }
  BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }
  ~BigInt() { mpz_clear(v_); }

  static BigInt pow2(unsigned long exponent) {
    BigInt out;
    mpz_ui_pow_ui(out.v_, 2, exponent);
    return out;
  }

  static BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.v_, base.v_, exponent);
    return out;
  }

  BigInt& operator+=(const BigInt& o) {
    mpz_add(v_, v_, o.v_);
    return *this;
  }

  friend BigInt operator+(BigInt a, const BigInt& b) {
    a += b;
    return a;
  }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_mul(out.v_, a.v_, b.v_);
    return out;
  }

  int compare(const BigInt& o) const { return mpz_cmp(v_, o.v_); }
  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.compare(b) == 0;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) {
    return a.compare(b) != 0;
  }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    return a.compare(b) < 0;
  }
  friend bool operator<=(const BigInt& a, const BigInt& b) {
    return a.compare(b) <= 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) {
    return a.compare(b) > 0;
  }

  bool is_zero() const { return mpz_sgn(v_) == 0; }

  std::string str() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
  }

  double to_double() const { return mpz_get_d(v_); }

  // Exact-ratio double, safe for huge numerator/denominator.
  static double ratio(const BigInt& num, const BigInt& den) {
    mpq_t q;
    mpq_init(q);
    mpq_set_num(q, num.v_);
    mpq_set_den(q, den.v_);
    mpq_canonicalize(q);
    double out = mpq_get_d(q);
    mpq_clear(q);
    return out;
  }

 private:
  mpz_t v_;
};

}  // namespace speclab
