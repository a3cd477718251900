#include "nskein/repmat.hpp"

namespace nsk {

RepMat RepMat::identity(const Field* f, int dim) {
  RepMat m(f, dim, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = f->one();
  return m;
}

bool RepMat::operator==(const RepMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

bool RepMat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RepMat RepMat::operator+(const RepMat& o) const {
  RepMat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

RepMat RepMat::operator-(const RepMat& o) const {
  RepMat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

RepMat RepMat::operator*(const RepMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RepMat: shape mismatch");
  RepMat out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Cyc& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Cyc& w = o.at(k, j);
        if (w.is_zero()) continue;
        out.at(i, j) += v * w;
      }
    }
  return out;
}

RepMat RepMat::operator*(const Cyc& s) const {
  RepMat out = *this;
  for (auto& x : out.a_) x *= s;
  return out;
}

RepMat RepMat::kron(const RepMat& o) const {
  RepMat out(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Cyc& v = at(i, j);
      if (v.is_zero()) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q) {
          const Cyc& w = o.at(p, q);
          if (w.is_zero()) continue;
          out.at(i * o.rows_ + p, j * o.cols_ + q) += v * w;
        }
    }
  return out;
}

Cyc RepMat::trace() const {
  Cyc acc = field_->zero();
  for (int i = 0; i < rows_ && i < cols_; ++i) acc += at(i, i);
  return acc;
}

// ---------------------------------------------------------------------------
// TLFunctor

RepMat TLFunctor::matrix_of_diagram(DiagId id) const {
  const Field* F = field();
  const DiagData& d = diagram(id);
  const int m = d.src, n = d.dst;
  RepMat out(F, 1 << n, 1 << m);
  // Every chord constrains two bit positions; the matrix entry is the
  // product of chord weights. Bit of tensor position p (0-based, leftmost
  // factor most significant): (idx >> (w-1-p)) & 1.
  Cyc e01 = -F->one();           // e(a0 (x) a1)
  Cyc e10 = F->q_pow(-1);        // e(a1 (x) a0)
  Cyc c01 = F->q_pow(1);         // coefficient of a0 (x) a1 in c(1)
  Cyc c10 = -F->one();           // coefficient of a1 (x) a0

  // Enumerate chord patterns: each chord independently takes one of two
  // admissible bit patterns; through strands copy bits.
  struct Chord {
    int p1, p2;  // boundary points, p1 < p2
    int kind;    // 0 = bottom-bottom (cap), 1 = top-top (cup), 2 = through
  };
  std::vector<Chord> chords;
  for (int i = 0; i < m + n; ++i) {
    int j = d.pair[i];
    if (j < i) continue;
    if (i < m && j < m)
      chords.push_back({i, j, 0});
    else if (i >= m && j >= m)
      chords.push_back({i - m, j - m, 1});
    else
      chords.push_back({i, j - m, 2});
  }
  const int nc = static_cast<int>(chords.size());
  for (int mask = 0; mask < (1 << nc); ++mask) {
    // bit of chord c in mask: 0 -> pattern (0,1), 1 -> pattern (1,0)
    // for through strands: 0 -> bit 0, 1 -> bit 1
    Cyc w = F->one();
    long brow = 0, bcol = 0;  // top index bits, bottom index bits
    for (int ci = 0; ci < nc; ++ci) {
      const Chord& ch = chords[ci];
      int sel = (mask >> ci) & 1;
      switch (ch.kind) {
        case 0: {  // cap on bottom points p1 < p2
          int b1 = sel ? 1 : 0, b2 = sel ? 0 : 1;
          w *= sel ? e10 : e01;
          if (b1) bcol |= 1L << (m - 1 - ch.p1);
          if (b2) bcol |= 1L << (m - 1 - ch.p2);
          break;
        }
        case 1: {  // cup on top points p1 < p2
          int b1 = sel ? 1 : 0, b2 = sel ? 0 : 1;
          w *= sel ? c10 : c01;
          if (b1) brow |= 1L << (n - 1 - ch.p1);
          if (b2) brow |= 1L << (n - 1 - ch.p2);
          break;
        }
        case 2: {  // through: bottom p1, top p2
          if (sel) {
            bcol |= 1L << (m - 1 - ch.p1);
            brow |= 1L << (n - 1 - ch.p2);
          }
          break;
        }
      }
    }
    out.at(static_cast<int>(brow), static_cast<int>(bcol)) += w;
  }
  return out;
}

RepMat TLFunctor::matrix(const TLMorphism& u) const {
  const Field* F = field();
  RepMat out(F, 1 << u.dst(), 1 << u.src());
  for (const auto& [d, c] : u.terms()) {
    RepMat md = matrix_of_diagram(d);
    for (int i = 0; i < out.rows(); ++i)
      for (int j = 0; j < out.cols(); ++j) {
        const Cyc& v = md.at(i, j);
        if (!v.is_zero()) out.at(i, j) += v * c;
      }
  }
  return out;
}

RepMat TLFunctor::bead_K(long a) const {
  const Field* F = field();
  RepMat m(F, 2, 2);
  m.at(0, 0) = F->q_pow(a);
  m.at(1, 1) = F->q_pow(-a);
  return m;
}

RepMat TLFunctor::bead_K_at(long a, int pos, int w) const {
  const Field* F = field();
  RepMat m = RepMat::identity(F, 1 << w);
  for (int idx = 0; idx < (1 << w); ++idx) {
    int bit = (idx >> (w - 1 - pos)) & 1;
    m.at(idx, idx) = F->q_pow(bit ? -a : a);
  }
  return m;
}

RepMat TLFunctor::action(const QuantumGroup& U, const PBWElement& x,
                         int w) const {
  const Field* F = field();
  const int r = U.level();
  // rho on X: K = diag(q, q^{-1}), E a_1 = a_0, F a_0 = a_1.
  RepMat rhoE(F, 2, 2), rhoF(F, 2, 2), rhoK(F, 2, 2);
  rhoE.at(0, 1) = F->one();
  rhoF.at(1, 0) = F->one();
  rhoK.at(0, 0) = F->q_pow(1);
  rhoK.at(1, 1) = F->q_pow(-1);
  auto rho_mono = [&](int a, int b, int c) {
    RepMat m = RepMat::identity(F, 2);
    for (int t = 0; t < a; ++t) m = m * rhoE;
    for (int t = 0; t < b; ++t) m = m * rhoF;
    for (int t = 0; t < c; ++t) m = m * rhoK;
    return m;
  };
  if (w == 1) {
    RepMat out(F, 2, 2);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) {
          const Cyc& v = x.coeff(a, b, c);
          if (v.is_zero()) continue;
          out = out + rho_mono(a, b, c) * v;
        }
    return out;
  }
  // w > 1: act through the iterated coproduct, recursively:
  // action(x, w) = sum action(x_(1), 1) (x) action(x_(2), w-1).
  TensorElement d = U.coproduct(x);
  RepMat out(F, 1 << w, 1 << w);
  const int n = r * r * r;
  for (const auto& [k, v] : d.terms) {
    int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
    int c1 = i % r, b1 = (i / r) % r, a1 = i / (r * r);
    PBWElement rest(U.field());
    int c2 = j % r, b2 = (j / r) % r, a2 = j / (r * r);
    rest.add(a2, b2, c2, v);
    RepMat left = rho_mono(a1, b1, c1);
    RepMat right = action(U, rest, w - 1);
    out = out + left.kron(right);
  }
  return out;
}

RepMat TLFunctor::algebraic_partial_trace(const RepMat& m, int w, int k) const {
  const Field* F = field();
  if (k == 0) return m;
  const int res = w - k;
  RepMat out(F, 1 << res, 1 << res);
  for (int i = 0; i < (1 << res); ++i)
    for (int j = 0; j < (1 << res); ++j) {
      Cyc acc = F->zero();
      for (int b = 0; b < (1 << k); ++b) {
        // pivot weight: product over traced strands of K at that bit
        Cyc wgt = F->one();
        for (int t = 0; t < k; ++t) {
          int bit = (b >> (k - 1 - t)) & 1;
          wgt *= F->q_pow(bit ? -1 : 1);
        }
        acc += wgt * m.at((i << k) | b, (j << k) | b);
      }
      out.at(i, j) = acc;
    }
  return out;
}

RepMat TLFunctor::braiding(const QuantumGroup& U, int sign) const {
  const Field* F = field();
  const int r = U.level();
  const TensorElement& R = sign > 0 ? U.r_matrix() : U.r_matrix_inv();
  // c(v (x) w) = (R'' w) (x) (R' v); for the inverse braiding,
  // c^{-1}(v (x) w) = (R^{-1})' w ... realized as flip o (rho x rho)(R) for
  // +1 and (rho x rho)(R^{-1}) o flip for -1.
  const int n = r * r * r;
  RepMat rr(F, 4, 4);
  TLFunctor self(field_);
  for (const auto& [k, v] : R.terms) {
    int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
    PBWElement xi(U.field()), xj(U.field());
    xi.add(i / (r * r), (i / r) % r, i % r, F->one());
    xj.add(j / (r * r), (j / r) % r, j % r, F->one());
    rr = rr + action(U, xi, 1).kron(action(U, xj, 1)) * v;
  }
  RepMat flip(F, 4, 4);
  flip.at(0, 0) = F->one();
  flip.at(1, 2) = F->one();
  flip.at(2, 1) = F->one();
  flip.at(3, 3) = F->one();
  return sign > 0 ? flip * rr : rr * flip;
}

}  // namespace nsk
