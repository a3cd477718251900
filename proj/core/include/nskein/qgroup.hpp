#pragma once

#include <unordered_map>

#include "nskein/cyclotomic.hpp"

namespace nsk {

/// Element of the small quantum group of sl2 at the level-r root of unity,
/// in the PBW basis E^a F^b K^c with 0 <= a,b,c <= r-1. Generators satisfy
/// E^r = F^r = 0, K^r = 1, KEK^{-1} = q^2 E, KFK^{-1} = q^{-2} F,
/// [E,F] = (K - K^{-1})/(q - q^{-1}).
class PBWElement {
public:
  PBWElement() : field_(nullptr), r_(0) {}
  // Entries default to detached zeros; no per-entry allocation.
  explicit PBWElement(const Field* f)
      : field_(f), r_(f->level()), c_(r_ * r_ * r_) {}

  const Field* field() const { return field_; }
  int level() const { return r_; }
  bool is_zero() const;
  bool operator==(const PBWElement& o) const;
  bool operator!=(const PBWElement& o) const { return !(*this == o); }

  int index(int a, int b, int c) const { return (a * r_ + b) * r_ + c; }
  const Cyc& coeff(int a, int b, int c) const { return c_[index(a, b, c)]; }
  void add(int a, int b, int c, const Cyc& v);
  const std::vector<Cyc>& dense() const { return c_; }

  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator-() const;
  PBWElement operator*(const Cyc& s) const;

  std::string to_string() const;

private:
  const Field* field_;
  int r_;
  std::vector<Cyc> c_;  // index (a*r + b)*r + c
};

/// Element of the two-fold tensor power, sparse over pairs of PBW indices.
struct TensorElement {
  const Field* field = nullptr;
  int r = 0;
  std::unordered_map<uint64_t, Cyc> terms;  // key = i * r^3 + j

  bool is_zero() const { return terms.empty(); }
  void add(int i, int j, const Cyc& v);
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  bool operator==(const TensorElement& o) const;
};

/// The algebra, Hopf structure, R-matrix, ribbon elements, center and
/// integral, all exact.
class QuantumGroup {
public:
  explicit QuantumGroup(FieldPtr field);

  const Field* field() const { return field_.get(); }
  int level() const { return r_; }

  PBWElement zero() const { return PBWElement(field()); }
  PBWElement unit() const { return monomial(0, 0, 0); }
  PBWElement monomial(int a, int b, int c, Cyc coef = Cyc()) const;
  PBWElement gen_E() const { return monomial(1, 0, 0); }
  PBWElement gen_F() const { return monomial(0, 1, 0); }
  PBWElement gen_K(int pow = 1) const;

  PBWElement mul(const PBWElement& x, const PBWElement& y) const;
  TensorElement coproduct(const PBWElement& x) const;
  Cyc counit(const PBWElement& x) const;
  PBWElement antipode(const PBWElement& x) const;
  PBWElement antipode_inv(const PBWElement& x) const;

  TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) const;
  TensorElement tensor_of(const PBWElement& x, const PBWElement& y) const;
  TensorElement swap_legs(const TensorElement& x) const;

  /// R = (1/r) sum ({1}^a/[a]!) q^{a(a-1)/2 - 2bc} K^b E^a (x) K^c F^a.
  const TensorElement& r_matrix() const { return R_; }
  const TensorElement& r_matrix_inv() const { return Rinv_; }
  /// M = R_21 R_12.
  const TensorElement& m_matrix() const { return M_; }
  /// Ribbon element v_+ and inverse v_-.
  const PBWElement& ribbon_plus() const { return vplus_; }
  const PBWElement& ribbon_minus() const { return vminus_; }
  /// Pivotal element g = K.
  PBWElement pivot() const { return gen_K(); }

  /// Casimir C = EF + (q^{-1}K + qK^{-1})/{1}^2.
  PBWElement casimir() const;
  /// beta_m = {m+1}'/{1}^2.
  Cyc beta(int m) const;
  /// Central idempotents e_m (0 <= m <= r-2 and m = r-1; aliases for
  /// r <= m <= 2r-2 via e_m = e_{2r-m-2}).
  PBWElement central_e(int m) const;
  /// Central nilpotents w_m and their halves w_m^{+-} (0 <= m <= (r-3)/2,
  /// aliases via w^eps_{r-m-2} = w^{-eps}_m and the 2r-m-2 rule).
  PBWElement central_w(int m) const;
  PBWElement central_w_half(int m, int eps) const;
  /// Projector v_m = (1/r) sum_a q^{-am} K^a onto the K-eigenspace q^m.
  PBWElement k_projector(int m) const;

  /// Left integral: lambda(E^a F^b K^c) = xi delta_{a,r-1} delta_{b,r-1}
  /// delta_{c,r-1} with xi = r ([r-1]!)^2.
  Cyc integral_lambda(const PBWElement& x) const;

  /// Drinfeld map matrix D(phi) = phi(M') M'' in PBW coordinates
  /// (column j = image of the dual basis vector j), plus its exact rank.
  std::vector<std::vector<Cyc>> drinfeld_matrix() const;
  int drinfeld_rank() const;

private:
  PBWElement rmul_E(const PBWElement& x) const;
  PBWElement rmul_F(const PBWElement& x) const;
  PBWElement rmul_K(const PBWElement& x, int pow) const;
  void build_structure();

  FieldPtr field_;
  int r_;
  TensorElement R_, Rinv_, M_;
  PBWElement vplus_, vminus_;
  std::vector<PBWElement> antipode_table_;      // S on basis monomials
  std::vector<PBWElement> antipode_inv_table_;  // S^{-1} on basis monomials
  std::vector<TensorElement> coproduct_table_;  // Delta on basis monomials
};

/// Exact rank of a matrix over the field by Gaussian elimination.
int exact_rank(std::vector<std::vector<Cyc>> m);

}  // namespace nsk
