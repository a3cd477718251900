#pragma once

#include "nskein/qgroup.hpp"
#include "nskein/tl.hpp"

namespace nsk {

/// Exact matrix of field scalars acting on tensor powers of the
/// 2-dimensional fundamental representation X. The basis of X^{(x)w} is
/// indexed by bit strings (bit 0 = highest weight vector a_0, bit 1 = a_1),
/// most significant bit = leftmost tensor factor.
class RepMat {
public:
  RepMat() : field_(nullptr), rows_(0), cols_(0) {}
  // Entries default to detached zeros; no per-entry allocation.
  RepMat(const Field* f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols) {}

  static RepMat identity(const Field* f, int dim);

  const Field* field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Cyc& at(int i, int j) const { return a_[i * cols_ + j]; }
  Cyc& at(int i, int j) { return a_[i * cols_ + j]; }

  bool operator==(const RepMat& o) const;
  bool operator!=(const RepMat& o) const { return !(*this == o); }
  bool is_zero() const;

  RepMat operator+(const RepMat& o) const;
  RepMat operator-(const RepMat& o) const;
  RepMat operator*(const RepMat& o) const;
  RepMat operator*(const Cyc& s) const;
  RepMat kron(const RepMat& o) const;
  Cyc trace() const;

private:
  const Field* field_;
  int rows_, cols_;
  std::vector<Cyc> a_;
};

/// Functor from the diagram category to exact matrices: the generator 1 is
/// sent to X, the cap to e (e(a0,a1) = -1, e(a1,a0) = q^{-1}) and the cup
/// to c (c(1) = q a0 (x) a1 - a1 (x) a0). Linear extension over diagrams.
class TLFunctor {
public:
  explicit TLFunctor(FieldPtr field) : field_(std::move(field)) {}

  const Field* field() const { return field_.get(); }

  RepMat matrix(const TLMorphism& u) const;
  RepMat matrix_of_diagram(DiagId d) const;

  /// Action matrix of K^a on one strand: diag(q^a, q^-a).
  RepMat bead_K(long a) const;
  /// Bead on strand `pos` (0-based) of a width-w space.
  RepMat bead_K_at(long a, int pos, int w) const;
  /// Action matrix of an arbitrary element on X^{(x)w} via the coproduct.
  RepMat action(const QuantumGroup& U, const PBWElement& x, int w) const;

  /// Algebraic partial trace with pivot K over the rightmost k strands:
  /// ptr(M)_{ij} = sum_b K_{bb} M_{(i b),(j b)}.
  RepMat algebraic_partial_trace(const RepMat& m, int w, int k) const;

  /// Braiding c_{X,X} from the R-matrix: flip o (rho (x) rho)(R).
  RepMat braiding(const QuantumGroup& U, int sign) const;

private:
  FieldPtr field_;
};

}  // namespace nsk
