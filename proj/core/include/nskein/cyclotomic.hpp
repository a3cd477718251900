#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nsk {

/// The working coefficient field Q(zeta) with zeta a primitive 4r-th root of
/// unity, represented as Q[x]/Phi_{4r}(x) in the power basis
/// zeta^0 .. zeta^{phi(4r)-1}. Houses q = zeta^4, i = zeta^r, A = q^{(r+1)/2},
/// and the Gauss-sum realization of sqrt(r). The level r is odd and >= 3,
/// fixed for the lifetime of the field.
class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Cyc {
public:
  Cyc() : field_(nullptr) {}
  Cyc(const Field* f, std::vector<mpq_class> coeffs);

  const Field* field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator/(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);

  Cyc inverse() const;
  Cyc pow(long e) const;

  std::complex<double> to_complex() const;
  /// Power-basis coefficients as "p/q" strings (reduced form).
  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;

private:
  friend class Field;
  const Field* field_;
  std::vector<mpq_class> c_;  // size phi(4r), always reduced mod Phi_{4r}
};

class Field : public std::enable_shared_from_this<Field> {
public:
  /// r must be odd and >= 3.
  static FieldPtr make(int r);

  int level() const { return r_; }
  int phi() const { return phi_; }

  Cyc zero() const;
  Cyc one() const;
  Cyc from_int(long n) const;
  Cyc from_rational(const mpq_class& q) const;
  /// zeta^k for any integer k (reduced mod 4r).
  Cyc zeta_pow(long k) const;
  /// q^k with q = zeta^4 the primitive r-th root of unity.
  Cyc q_pow(long k) const;
  /// i^k with i = zeta^r.
  Cyc i_pow(long k) const;
  /// Kauffman variable A = q^{(r+1)/2}; A^2 = q.
  Cyc kauffman_A() const { return q_pow((r_ + 1) / 2); }
  /// Loop value delta = -q - q^{-1}.
  Cyc loop_delta() const;

  /// {k} = q^k - q^{-k}
  Cyc qbrace(long k) const;
  /// {k}' = q^k + q^{-k}
  Cyc qbrace_prime(long k) const;
  /// [k] = {k}/{1}, extended to all integers.
  Cyc qint(long k) const;
  /// [k]! for 0 <= k <= r-1; throws outside that range.
  Cyc qfact(long k) const;
  /// [k]_a = [ak]/[a] if a != 0 mod r, k otherwise.
  Cyc qint_sub(long k, long a) const;
  /// {k}'_a = {ak}'.
  Cyc qbrace_prime_sub(long k, long a) const;

  /// Quadratic Gauss sum G = sum_{k=0}^{r-1} q^{k^2}; satisfies
  /// G^2 = (-1)^{(r-1)/2} r. Verified on construction.
  Cyc gauss_sum() const;
  /// sqrt(r) in the field: the Gauss sum times the unit in {1,-1,i,-i}
  /// selected so the complex image is the positive real root.
  Cyc sqrt_r() const;
  /// Stabilization constants (Delta_+, Delta_-):
  ///   Delta_+ = i^{-(r-1)/2} r^{3/2} q^{(r-3)/2},
  ///   Delta_- = i^{+(r-1)/2} r^{3/2} q^{(r+3)/2}.
  std::pair<Cyc, Cyc> gauss_constants() const;
  /// Scaled constants (delta_+, delta_-) = (Delta_+/(r{1}), -Delta_-/(r{1})).
  std::pair<Cyc, Cyc> gauss_constants_scaled() const;

  std::complex<double> eval_complex(const Cyc& x) const;

  /// Reduce a raw coefficient vector (degree < 2*phi-1) mod Phi_{4r}.
  std::vector<mpq_class> reduce(std::vector<mpq_class> raw) const;

private:
  explicit Field(int r);
  void verify_gauss_branch() const;

  int r_;
  int fourr_;
  int phi_;
  std::vector<std::vector<mpq_class>> phi_poly_rows_;  // x^{phi+j} mod Phi
  std::vector<std::vector<mpq_class>> zeta_pow_table_; // zeta^k, k in 0..4r-1
  std::vector<std::complex<double>> zeta_complex_;     // float images of basis
  Cyc gauss_;
  Cyc sqrt_r_;
};

/// Integer cyclotomic polynomial Phi_n as coefficient vector (low to high).
std::vector<mpz_class> cyclotomic_polynomial(int n);

}  // namespace nsk
