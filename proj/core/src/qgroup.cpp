#include "nskein/qgroup.hpp"

#include <sstream>

namespace nsk {

// ---------------------------------------------------------------------------
// PBWElement

bool PBWElement::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool PBWElement::operator==(const PBWElement& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (r_ != o.r_) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

void PBWElement::add(int a, int b, int c, const Cyc& v) {
  c_[index(a, b, c)] += v;
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  PBWElement out = *this;
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
  return out;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
  PBWElement out = *this;
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
  return out;
}

PBWElement PBWElement::operator-() const {
  PBWElement out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

PBWElement PBWElement::operator*(const Cyc& s) const {
  PBWElement out = *this;
  for (auto& x : out.c_) x *= s;
  return out;
}

std::string PBWElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c) {
        const Cyc& v = coeff(a, b, c);
        if (v.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << v.to_string() << ")";
        if (a) os << " E^" << a;
        if (b) os << " F^" << b;
        if (c) os << " K^" << c;
        first = false;
      }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// TensorElement

void TensorElement::add(int i, int j, const Cyc& v) {
  if (v.is_zero()) return;
  uint64_t key = static_cast<uint64_t>(i) * (r * r * r) + j;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement out = *this;
  for (const auto& [k, v] : o.terms) {
    auto it = out.terms.find(k);
    if (it == out.terms.end()) {
      out.terms.emplace(k, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  if (out.field == nullptr) out.field = o.field, out.r = o.r;
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement neg = o;
  for (auto& [k, v] : neg.terms) v = -v;
  return *this + neg;
}

bool TensorElement::operator==(const TensorElement& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (const auto& [k, v] : terms) {
    auto it = o.terms.find(k);
    if (it == o.terms.end() || !(it->second == v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// QuantumGroup

QuantumGroup::QuantumGroup(FieldPtr field) : field_(std::move(field)) {
  r_ = field_->level();
  build_structure();
}

PBWElement QuantumGroup::monomial(int a, int b, int c, Cyc coef) const {
  PBWElement x(field());
  if (a >= r_ || b >= r_) return x;  // E^r = F^r = 0
  if (a < 0 || b < 0) throw std::out_of_range("monomial: negative exponent");
  if (coef.field() == nullptr) coef = field()->one();
  x.add(a, b, ((c % r_) + r_) % r_, coef);
  return x;
}

PBWElement QuantumGroup::gen_K(int pow) const {
  return monomial(0, 0, ((pow % r_) + r_) % r_);
}

PBWElement QuantumGroup::rmul_E(const PBWElement& x) const {
  // (E^a F^b K^c) E = q^{2c} [ E^{a+1} F^b K^c
  //   - [b]/{1} (q^{1-b} E^a F^{b-1} K^{c+1} - q^{b-1} E^a F^{b-1} K^{c-1}) ]
  const Field* F = field();
  PBWElement out(F);
  Cyc inv_brace = F->qbrace(1).inverse();
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c) {
        const Cyc& v = x.coeff(a, b, c);
        if (v.is_zero()) continue;
        Cyc w = v * F->q_pow(2 * c);
        if (a + 1 < r_) out.add(a + 1, b, c, w);
        if (b > 0) {
          Cyc base = w * F->qint(b) * inv_brace;
          out.add(a, b - 1, (c + 1) % r_, -(base * F->q_pow(1 - b)));
          out.add(a, b - 1, (c - 1 + r_) % r_, base * F->q_pow(b - 1));
        }
      }
  return out;
}

PBWElement QuantumGroup::rmul_F(const PBWElement& x) const {
  // (E^a F^b K^c) F = q^{-2c} E^a F^{b+1} K^c
  const Field* F = field();
  PBWElement out(F);
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c) {
        const Cyc& v = x.coeff(a, b, c);
        if (v.is_zero()) continue;
        if (b + 1 < r_) out.add(a, b + 1, c, v * F->q_pow(-2 * c));
      }
  return out;
}

PBWElement QuantumGroup::rmul_K(const PBWElement& x, int pow) const {
  PBWElement out(field());
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c) {
        const Cyc& v = x.coeff(a, b, c);
        if (v.is_zero()) continue;
        out.add(a, b, ((c + pow) % r_ + r_) % r_, v);
      }
  return out;
}

PBWElement QuantumGroup::mul(const PBWElement& x, const PBWElement& y) const {
  PBWElement out(field());
  int max_a = -1, max_b = -1;
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c)
        if (!y.coeff(a, b, c).is_zero()) {
          max_a = std::max(max_a, a);
          max_b = std::max(max_b, b);
        }
  if (max_a < 0) return out;
  PBWElement curA = x;
  for (int a = 0; a <= max_a; ++a) {
    if (a > 0) {
      curA = rmul_E(curA);
      if (curA.is_zero()) break;
    }
    PBWElement curAB = curA;
    for (int b = 0; b <= max_b; ++b) {
      if (b > 0) {
        curAB = rmul_F(curAB);
        if (curAB.is_zero()) break;
      }
      for (int c = 0; c < r_; ++c) {
        const Cyc& v = y.coeff(a, b, c);
        if (v.is_zero()) continue;
        PBWElement shifted = rmul_K(curAB, c);
        for (int i = 0; i < r_ * r_ * r_; ++i) {
          const Cyc& w = shifted.dense()[i];
          if (w.is_zero()) continue;
          int cc = i % r_, bb = (i / r_) % r_, aa = i / (r_ * r_);
          out.add(aa, bb, cc, w * v);
        }
      }
    }
  }
  return out;
}

TensorElement QuantumGroup::tensor_of(const PBWElement& x,
                                      const PBWElement& y) const {
  TensorElement out;
  out.field = field();
  out.r = r_;
  const int n = r_ * r_ * r_;
  for (int i = 0; i < n; ++i) {
    const Cyc& xi = x.dense()[i];
    if (xi.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      const Cyc& yj = y.dense()[j];
      if (yj.is_zero()) continue;
      out.add(i, j, xi * yj);
    }
  }
  return out;
}

TensorElement QuantumGroup::swap_legs(const TensorElement& x) const {
  TensorElement out;
  out.field = x.field;
  out.r = x.r;
  const int n = r_ * r_ * r_;
  for (const auto& [k, v] : x.terms) {
    int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
    out.add(j, i, v);
  }
  return out;
}

TensorElement QuantumGroup::tensor_mul(const TensorElement& x,
                                       const TensorElement& y) const {
  const int n = r_ * r_ * r_;
  auto decode = [&](uint64_t k) {
    int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
    return std::pair<int, int>(i, j);
  };
  auto mono = [&](int idx) {
    int c = idx % r_, b = (idx / r_) % r_, a = idx / (r_ * r_);
    return monomial(a, b, c);
  };
  TensorElement out;
  out.field = field();
  out.r = r_;
  for (const auto& [kx, vx] : x.terms) {
    auto [i1, j1] = decode(kx);
    PBWElement m1 = mono(i1), m2 = mono(j1);
    for (const auto& [ky, vy] : y.terms) {
      auto [i2, j2] = decode(ky);
      PBWElement left = mul(m1, mono(i2));
      PBWElement right = mul(m2, mono(j2));
      Cyc scale = vx * vy;
      for (int i = 0; i < n; ++i) {
        const Cyc& li = left.dense()[i];
        if (li.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          const Cyc& rj = right.dense()[j];
          if (rj.is_zero()) continue;
          out.add(i, j, li * rj * scale);
        }
      }
    }
  }
  return out;
}

TensorElement QuantumGroup::coproduct(const PBWElement& x) const {
  TensorElement out;
  out.field = field();
  out.r = r_;
  for (int i = 0; i < r_ * r_ * r_; ++i) {
    const Cyc& v = x.dense()[i];
    if (v.is_zero()) continue;
    for (const auto& [k, w] : coproduct_table_[i].terms) {
      int a = static_cast<int>(k / (r_ * r_ * r_));
      int b = static_cast<int>(k % (r_ * r_ * r_));
      out.add(a, b, w * v);
    }
  }
  return out;
}

Cyc QuantumGroup::counit(const PBWElement& x) const {
  // eps(E) = eps(F) = 0, eps(K) = 1.
  Cyc acc = field()->zero();
  for (int c = 0; c < r_; ++c) acc += x.coeff(0, 0, c);
  return acc;
}

PBWElement QuantumGroup::antipode(const PBWElement& x) const {
  PBWElement out(field());
  const int n = r_ * r_ * r_;
  for (int i = 0; i < n; ++i) {
    const Cyc& v = x.dense()[i];
    if (v.is_zero()) continue;
    const PBWElement& s = antipode_table_[i];
    for (int j = 0; j < n; ++j) {
      const Cyc& w = s.dense()[j];
      if (w.is_zero()) continue;
      int c = j % r_, b = (j / r_) % r_, a = j / (r_ * r_);
      out.add(a, b, c, w * v);
    }
  }
  return out;
}

PBWElement QuantumGroup::antipode_inv(const PBWElement& x) const {
  PBWElement out(field());
  const int n = r_ * r_ * r_;
  for (int i = 0; i < n; ++i) {
    const Cyc& v = x.dense()[i];
    if (v.is_zero()) continue;
    const PBWElement& s = antipode_inv_table_[i];
    for (int j = 0; j < n; ++j) {
      const Cyc& w = s.dense()[j];
      if (w.is_zero()) continue;
      int c = j % r_, b = (j / r_) % r_, a = j / (r_ * r_);
      out.add(a, b, c, w * v);
    }
  }
  return out;
}

void QuantumGroup::build_structure() {
  const Field* F = field();
  const int n = r_ * r_ * r_;

  // Coproduct table on basis monomials, built incrementally:
  // Delta(E) = E (x) K + 1 (x) E, Delta(F) = K^{-1} (x) F + F (x) 1,
  // Delta(K) = K (x) K.
  {
    TensorElement dE, dF, dK;
    dE.field = dF.field = dK.field = F;
    dE.r = dF.r = dK.r = r_;
    auto idx = [&](int a, int b, int c) { return (a * r_ + b) * r_ + c; };
    dE.add(idx(1, 0, 0), idx(0, 0, 1), F->one());
    dE.add(idx(0, 0, 0), idx(1, 0, 0), F->one());
    dF.add(idx(0, 0, r_ - 1), idx(0, 1, 0), F->one());
    dF.add(idx(0, 1, 0), idx(0, 0, 0), F->one());
    dK.add(idx(0, 0, 1), idx(0, 0, 1), F->one());
    coproduct_table_.resize(n);
    TensorElement unit;
    unit.field = F;
    unit.r = r_;
    unit.add(0, 0, F->one());
    coproduct_table_[0] = unit;
    // order: c, then b, then a, reusing the previous entry
    for (int c = 1; c < r_; ++c)
      coproduct_table_[idx(0, 0, c)] =
          tensor_mul(coproduct_table_[idx(0, 0, c - 1)], dK);
    for (int b = 1; b < r_; ++b)
      for (int c = 0; c < r_; ++c)
        coproduct_table_[idx(0, b, c)] = tensor_mul(
            c == 0 ? coproduct_table_[idx(0, b - 1, 0)]
                   : coproduct_table_[idx(0, b, c - 1)],
            c == 0 ? dF : dK);
    for (int a = 1; a < r_; ++a)
      for (int b = 0; b < r_; ++b)
        for (int c = 0; c < r_; ++c) {
          const TensorElement* prev;
          const TensorElement* gen;
          if (c > 0) {
            prev = &coproduct_table_[idx(a, b, c - 1)];
            gen = &dK;
          } else if (b > 0) {
            prev = &coproduct_table_[idx(a, b - 1, 0)];
            gen = &dF;
          } else {
            prev = &coproduct_table_[idx(a - 1, 0, 0)];
            gen = &dE;
          }
          coproduct_table_[idx(a, b, c)] = tensor_mul(*prev, *gen);
        }
  }

  // Antipode on basis: S(E^a F^b K^c) = S(K)^c S(F)^b S(E)^a
  //   = K^{-c} (-KF)^b (-E K^{-1})^a.
  PBWElement sE = -mul(gen_E(), gen_K(-1));  // -E K^{-1}
  PBWElement sF = -mul(gen_K(1), gen_F());   // -K F
  antipode_table_.resize(n);
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c) {
        PBWElement acc = gen_K(-c);
        for (int t = 0; t < b; ++t) acc = mul(acc, sF);
        for (int t = 0; t < a; ++t) acc = mul(acc, sE);
        antipode_table_[(a * r_ + b) * r_ + c] = acc;
      }
  // S^{-1}(E^a F^b K^c) = S^{-1}(K)^c S^{-1}(F)^b S^{-1}(E)^a
  //   with S^{-1}(E) = -K^{-1} E, S^{-1}(F) = -F K, S^{-1}(K) = K^{-1}.
  PBWElement siE = -mul(gen_K(-1), gen_E());
  PBWElement siF = -mul(gen_F(), gen_K(1));
  antipode_inv_table_.resize(n);
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c) {
        PBWElement acc = gen_K(-c);
        for (int t = 0; t < b; ++t) acc = mul(acc, siF);
        for (int t = 0; t < a; ++t) acc = mul(acc, siE);
        antipode_inv_table_[(a * r_ + b) * r_ + c] = acc;
      }

  // R-matrix and inverse.
  R_.field = Rinv_.field = F;
  R_.r = Rinv_.r = r_;
  Cyc inv_r = F->from_int(r_).inverse();
  for (int a = 0; a < r_; ++a) {
    Cyc fa = F->qbrace(1).pow(a) / F->qfact(a);
    Cyc fa_inv = (-F->qbrace(1)).pow(a) / F->qfact(a);  // {-1}^a = (-{1})^a
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c) {
        // exponent a(a-1)/2 - 2bc
        Cyc qe = F->q_pow((static_cast<long>(a) * (a - 1)) / 2 - 2L * b * c);
        // PBW reorders: K^b E^a = q^{2ab} E^a K^b, K^c F^a = q^{-2ac} F^a K^c.
        Cyc reord = F->q_pow(2L * a * b - 2L * a * c);
        R_.add((a * r_ + 0) * r_ + b, (0 * r_ + a) * r_ + c,
               inv_r * fa * qe * reord);
        // R^{-1} = (1/r) sum ({-1}^a/[a]!) q^{-a(a-1)/2 + 2bc} E^a K^b (x) F^a K^c
        Cyc qei = F->q_pow(-(static_cast<long>(a) * (a - 1)) / 2 + 2L * b * c);
        Rinv_.add((a * r_ + 0) * r_ + b, (0 * r_ + a) * r_ + c,
                  inv_r * fa_inv * qei);
      }
  }
  M_ = tensor_mul(swap_legs(R_), R_);

  // Ribbon element and inverse; q^{(r+-1)/2 (...)^2} exponents are integers.
  vplus_ = PBWElement(F);
  vminus_ = PBWElement(F);
  Cyc ip = F->i_pow((r_ - 1) / 2);
  Cyc im = F->i_pow(-(r_ - 1) / 2);
  Cyc inv_sqrt = F->sqrt_r().inverse();
  for (int a = 0; a < r_; ++a) {
    Cyc fplus = (-F->qbrace(1)).pow(a) / F->qfact(a);
    Cyc fminus = F->qbrace(1).pow(a) / F->qfact(a);
    for (int b = 0; b < r_; ++b) {
      long d1 = static_cast<long>(a) - b - 1;
      long d2 = static_cast<long>(a) + b - 1;
      Cyc qp = F->q_pow(-(static_cast<long>(a) * (a - 1)) / 2 +
                        ((r_ + 1) / 2) * d1 * d1 * 1L);
      Cyc qm = F->q_pow((static_cast<long>(a) * (a - 1)) / 2 +
                        ((r_ - 1) / 2) * d2 * d2 * 1L);
      // F^a K^b E^a in PBW order: F^a K^b E^a = q^{2ab} F^a E^a K^b, and
      // F^a E^a reorders into E^j F^j K^* terms; compute via mul().
      PBWElement mono =
          mul(mul(monomial(0, a, 0), gen_K(b)), monomial(a, 0, 0));
      vplus_ = vplus_ + mono * (ip * inv_sqrt * fplus * qp);
      vminus_ = vminus_ + mono * (im * inv_sqrt * fminus * qm);
    }
  }
}

PBWElement QuantumGroup::casimir() const {
  const Field* F = field();
  Cyc inv_b2 = (F->qbrace(1) * F->qbrace(1)).inverse();
  PBWElement c = mul(gen_E(), gen_F());
  c = c + gen_K(1) * (F->q_pow(-1) * inv_b2) + gen_K(-1) * (F->q_pow(1) * inv_b2);
  return c;
}

Cyc QuantumGroup::beta(int m) const {
  const Field* F = field();
  return F->qbrace_prime(m + 1) / (F->qbrace(1) * F->qbrace(1));
}

PBWElement QuantumGroup::k_projector(int m) const {
  const Field* F = field();
  PBWElement out(F);
  Cyc inv_r = F->from_int(r_).inverse();
  for (int a = 0; a < r_; ++a) out.add(0, 0, a, inv_r * F->q_pow(-1L * a * m));
  return out;
}

namespace {

// Evaluate a polynomial with Cyc coefficients at the central element C.
PBWElement eval_poly(const QuantumGroup& U, const std::vector<Cyc>& poly,
                     const PBWElement& C) {
  PBWElement acc = U.zero();
  PBWElement power = U.unit();
  for (size_t i = 0; i < poly.size(); ++i) {
    if (!poly[i].is_zero()) acc = acc + power * poly[i];
    if (i + 1 < poly.size()) power = U.mul(power, C);
  }
  return acc;
}

// Multiply polynomials over Cyc.
std::vector<Cyc> poly_mul(const Field* F, const std::vector<Cyc>& a,
                          const std::vector<Cyc>& b) {
  std::vector<Cyc> out(a.size() + b.size() - 1, F->zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Cyc> poly_deriv(const Field* F, const std::vector<Cyc>& a) {
  std::vector<Cyc> out;
  for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * F->from_int(i));
  if (out.empty()) out.push_back(F->zero());
  return out;
}

Cyc poly_eval_scalar(const Field* F, const std::vector<Cyc>& a, const Cyc& x) {
  Cyc acc = F->zero();
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

// Psi_m(X) = Psi(X)/(X - beta_m)^2 for 0 <= m <= r-2 (using beta_{r-m-2} =
// beta_m), Psi_{r-1}(X) = Psi(X)/(X - beta_{r-1}).
std::vector<Cyc> psi_m_poly(const QuantumGroup& U, int m) {
  const Field* F = U.field();
  const int r = U.level();
  std::vector<Cyc> poly{F->one()};
  if (m == r - 1) {
    for (int j = 0; j <= (r - 3) / 2; ++j) {
      std::vector<Cyc> lin{-U.beta(j), F->one()};
      poly = poly_mul(F, poly, lin);
      poly = poly_mul(F, poly, lin);
    }
    return poly;
  }
  int mm = std::min(m, r - m - 2);
  std::vector<Cyc> lin_r1{-U.beta(r - 1), F->one()};
  poly = poly_mul(F, poly, lin_r1);
  for (int j = 0; j <= (r - 3) / 2; ++j) {
    if (j == mm) continue;
    std::vector<Cyc> lin{-U.beta(j), F->one()};
    poly = poly_mul(F, poly, lin);
    poly = poly_mul(F, poly, lin);
  }
  return poly;
}

}  // namespace

PBWElement QuantumGroup::central_e(int m) const {
  const Field* F = field();
  if (m >= r_) m = 2 * r_ - m - 2;
  if (m < 0 || m > r_ - 1) throw std::out_of_range("central_e: index");
  PBWElement C = casimir();
  if (m == r_ - 1) {
    auto psi = psi_m_poly(*this, r_ - 1);
    Cyc denom = poly_eval_scalar(F, psi, beta(r_ - 1));
    return eval_poly(*this, psi, C) * denom.inverse();
  }
  int mm = std::min(m, r_ - m - 2);
  auto psi = psi_m_poly(*this, mm);
  Cyc pb = poly_eval_scalar(F, psi, beta(mm));
  Cyc pderiv = poly_eval_scalar(F, poly_deriv(F, psi), beta(mm));
  // e_m = Psi_m(C)/Psi_m(b) - Psi_m'(b)(C - b)Psi_m(C)/Psi_m(b)^2
  PBWElement psiC = eval_poly(*this, psi, C);
  PBWElement cb = C - unit() * beta(mm);
  PBWElement term1 = psiC * pb.inverse();
  PBWElement term2 = mul(cb, psiC) * (pderiv / (pb * pb));
  return term1 - term2;
}

PBWElement QuantumGroup::central_w(int m) const {
  const Field* F = field();
  if (m >= r_) m = 2 * r_ - m - 2;
  if (m < 0 || m > r_ - 2) throw std::out_of_range("central_w: index");
  int mm = std::min(m, r_ - m - 2);
  auto psi = psi_m_poly(*this, mm);
  Cyc pb = poly_eval_scalar(F, psi, beta(mm));
  PBWElement C = casimir();
  PBWElement cb = C - unit() * beta(mm);
  return mul(cb, eval_poly(*this, psi, C)) * pb.inverse();
}

PBWElement QuantumGroup::central_w_half(int m, int eps) const {
  // Halves of w_m cut by T_m = sum_j v_{m-2j}: the T_m-part carries the
  // eigenvalues of the highest-weight block. The labels are fixed so that
  // the Jordan decomposition of the ribbon elements reads
  //   v_+- = q^{(r+-1)/2} e_{r-1}
  //        + sum_m q^{(r-+1)/2 m^2 -+ m} (e_m -+ c_m^+ w_m^+ -+ c_m^- w_m^-)
  // with c_m^+ = (m+1){1}/[m+1], c_m^- = (m-r+1){1}/[m+1].
  // Aliases: w_{r-m-2}^eps = w_m^{-eps}, w_{2r-m-2}^eps = w_m^eps.
  if (m >= r_) m = 2 * r_ - m - 2;
  if (m < 0 || m > r_ - 2) throw std::out_of_range("central_w_half: index");
  if (m > (r_ - 3) / 2) {
    m = r_ - m - 2;
    eps = -eps;
  }
  PBWElement T(field());
  for (int j = 0; j <= m; ++j) T = T + k_projector(m - 2 * j);
  PBWElement w = central_w(m);
  PBWElement half = mul(T, w);
  if (eps > 0) return w - half;
  return half;
}

Cyc QuantumGroup::integral_lambda(const PBWElement& x) const {
  const Field* F = field();
  Cyc xi = F->from_int(r_) * F->qfact(r_ - 1) * F->qfact(r_ - 1);
  return x.coeff(r_ - 1, r_ - 1, r_ - 1) * xi;
}

std::vector<std::vector<Cyc>> QuantumGroup::drinfeld_matrix() const {
  const Field* F = field();
  const int n = r_ * r_ * r_;
  std::vector<std::vector<Cyc>> D(n, std::vector<Cyc>(n, F->zero()));
  // D(phi) = phi(M') M''; column j = D(e_j^*) = sum_i M_{i,j-th-coeff}:
  // for M = sum M'_(i) (x) M''_(i), D(e_j^*) = sum coeff(M', j) M''.
  for (const auto& [k, v] : M_.terms) {
    int i = static_cast<int>(k / n);  // index into M'
    int j = static_cast<int>(k % n);  // index into M''
    D[j][i] += v;                     // row = output coordinate (M'' index)
  }
  return D;
}

int QuantumGroup::drinfeld_rank() const { return exact_rank(drinfeld_matrix()); }

int exact_rank(std::vector<std::vector<Cyc>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    Cyc inv = m[rank][col].inverse();
    for (size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Cyc f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace nsk
