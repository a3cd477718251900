#include <doctest.h>

#include <map>
#include <random>

#include "nskein/qgroup.hpp"
#include "nskein/repmat.hpp"

using namespace nsk;

namespace {

PBWElement random_pbw(const QuantumGroup& U, std::mt19937& rng, int terms = 4) {
  const int r = U.level();
  std::uniform_int_distribution<int> d(0, r - 1), s(-3, 3);
  PBWElement x(U.field());
  for (int t = 0; t < terms; ++t)
    x.add(d(rng), d(rng), d(rng), U.field()->from_int(s(rng)));
  return x;
}

// Three-leg tensors for coassociativity, sparse over index triples.
using Tensor3 = std::map<std::tuple<int, int, int>, Cyc>;

void t3_add(Tensor3& t, int i, int j, int k, const Cyc& v) {
  if (v.is_zero()) return;
  auto key = std::make_tuple(i, j, k);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

PBWElement from_index(const QuantumGroup& U, int idx) {
  const int r = U.level();
  return U.monomial(idx / (r * r), (idx / r) % r, idx % r);
}

Tensor3 delta_left(const QuantumGroup& U, const TensorElement& t) {
  const int n = U.level() * U.level() * U.level();
  Tensor3 out;
  for (const auto& [k, v] : t.terms) {
    int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
    TensorElement di = U.coproduct(from_index(U, i));
    for (const auto& [k2, w] : di.terms) {
      int a = static_cast<int>(k2 / n), b = static_cast<int>(k2 % n);
      t3_add(out, a, b, j, v * w);
    }
  }
  return out;
}

Tensor3 delta_right(const QuantumGroup& U, const TensorElement& t) {
  const int n = U.level() * U.level() * U.level();
  Tensor3 out;
  for (const auto& [k, v] : t.terms) {
    int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
    TensorElement dj = U.coproduct(from_index(U, j));
    for (const auto& [k2, w] : dj.terms) {
      int a = static_cast<int>(k2 / n), b = static_cast<int>(k2 % n);
      t3_add(out, i, a, b, v * w);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("defining relations and Hopf structure") {
  for (int r : {3, 5}) {
    auto F = Field::make(r);
    QuantumGroup U(F);
    PBWElement E = U.gen_E(), Fg = U.gen_F(), K = U.gen_K();

    // [E,F] = (K - K^{-1})/{1}
    PBWElement lhs = U.mul(E, Fg) - U.mul(Fg, E);
    PBWElement rhs = (U.gen_K(1) - U.gen_K(-1)) * F->qbrace(1).inverse();
    CHECK(lhs == rhs);
    // K E K^{-1} = q^2 E
    CHECK(U.mul(U.mul(K, E), U.gen_K(-1)) == E * F->q_pow(2));
    CHECK(U.mul(U.mul(K, Fg), U.gen_K(-1)) == Fg * F->q_pow(-2));
    // E^r = F^r = 0, K^r = 1
    PBWElement Epow = U.unit();
    for (int t = 0; t < r; ++t) Epow = U.mul(Epow, E);
    CHECK(Epow.is_zero());
    CHECK(U.gen_K(r) == U.unit());

    // counit and antipode on generators
    CHECK(U.counit(K) == F->one());
    CHECK(U.counit(E).is_zero());
    CHECK(U.antipode(K) == U.gen_K(-1));
    CHECK(U.antipode(E) == -U.mul(E, U.gen_K(-1)));
    CHECK(U.antipode(Fg) == -U.mul(K, Fg));

    // S^2(x) = K x K^{-1} on generators
    for (const PBWElement& x : {E, Fg, K}) {
      CHECK(U.antipode(U.antipode(x)) ==
            U.mul(U.mul(K, x), U.gen_K(-1)));
      CHECK(U.antipode_inv(U.antipode(x)) == x);
    }

    // Hopf axioms on generators and a few random elements
    std::mt19937 rng(17 * r);
    std::vector<PBWElement> samples{E, Fg, K, random_pbw(U, rng),
                                    random_pbw(U, rng)};
    for (const PBWElement& x : samples) {
      TensorElement d = U.coproduct(x);
      CHECK(delta_left(U, d) == delta_right(U, d));
      // counit laws
      const int n = r * r * r;
      PBWElement left(U.field()), right(U.field());
      for (const auto& [k, v] : d.terms) {
        int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
        left = left + from_index(U, j) * (v * U.counit(from_index(U, i)));
        right = right + from_index(U, i) * (v * U.counit(from_index(U, j)));
      }
      CHECK(left == x);
      CHECK(right == x);
      // antipode law: m (S (x) id) Delta = eta eps
      PBWElement anti(U.field()), anti2(U.field());
      for (const auto& [k, v] : d.terms) {
        int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
        anti = anti + U.mul(U.antipode(from_index(U, i)), from_index(U, j)) * v;
        anti2 = anti2 + U.mul(from_index(U, i), U.antipode(from_index(U, j))) * v;
      }
      CHECK(anti == U.unit() * U.counit(x));
      CHECK(anti2 == U.unit() * U.counit(x));
    }
  }
}

TEST_CASE("R-matrix quasi-triangularity") {
  for (int r : {3, 5}) {
    auto F = Field::make(r);
    QuantumGroup U(F);
    // R R^{-1} = 1 (x) 1
    TensorElement prod = U.tensor_mul(U.r_matrix(), U.r_matrix_inv());
    TensorElement unit = U.tensor_of(U.unit(), U.unit());
    CHECK(prod == unit);
    // R Delta(x) = Delta^op(x) R for generators
    for (const PBWElement& x : {U.gen_E(), U.gen_F(), U.gen_K()}) {
      TensorElement d = U.coproduct(x);
      TensorElement dop = U.swap_legs(d);
      CHECK(U.tensor_mul(U.r_matrix(), d) == U.tensor_mul(dop, U.r_matrix()));
    }
  }
}

TEST_CASE("M-matrix closed formula") {
  for (int r : {3, 5}) {
    auto F = Field::make(r);
    QuantumGroup U(F);
    TensorElement M;
    M.field = F.get();
    M.r = r;
    Cyc inv_r = F->from_int(r).inverse();
    const int n = r * r * r;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        Cyc fab = F->qbrace(1).pow(a + b) / (F->qfact(a) * F->qfact(b));
        for (int c = 0; c < r; ++c)
          for (int d = 0; d < r; ++d) {
            long e = (static_cast<long>(a) * (a - 1) +
                      static_cast<long>(b) * (b - 1)) /
                         2 -
                     2L * c * d -
                     (static_cast<long>(b) + c) * (static_cast<long>(b) - d);
            Cyc coef = inv_r * fab * F->q_pow(e);
            PBWElement left =
                U.mul(U.mul(U.monomial(0, b, 0), U.gen_K(c)), U.monomial(a, 0, 0));
            PBWElement right =
                U.mul(U.mul(U.monomial(b, 0, 0), U.gen_K(d)), U.monomial(0, a, 0));
            for (int i = 0; i < n; ++i) {
              const Cyc& li = left.dense()[i];
              if (li.is_zero()) continue;
              for (int j = 0; j < n; ++j) {
                const Cyc& rj = right.dense()[j];
                if (rj.is_zero()) continue;
                M.add(i, j, li * rj * coef);
              }
            }
          }
      }
    CHECK(M == U.m_matrix());
  }
}

TEST_CASE("ribbon elements") {
  for (int r : {3, 5}) {
    auto F = Field::make(r);
    QuantumGroup U(F);
    CHECK(U.mul(U.ribbon_plus(), U.ribbon_minus()) == U.unit());
    for (const PBWElement& x : {U.gen_E(), U.gen_F(), U.gen_K()}) {
      CHECK(U.mul(U.ribbon_plus(), x) == U.mul(x, U.ribbon_plus()));
      CHECK(U.mul(U.ribbon_minus(), x) == U.mul(x, U.ribbon_minus()));
    }
    // Jordan decomposition of v_+-
    PBWElement vp(U.field()), vm(U.field());
    vp = U.central_e(r - 1) * F->q_pow((r + 1) / 2);
    vm = U.central_e(r - 1) * F->q_pow((r - 1) / 2);
    for (int m = 0; m <= (r - 3) / 2; ++m) {
      long ep = (static_cast<long>(r) - 1) / 2 * m * m - m;
      long em = (static_cast<long>(r) + 1) / 2 * m * m + m;
      Cyc cp = F->q_pow(ep);
      Cyc cm = F->q_pow(em);
      Cyc wp_coef = F->from_int(m + 1) * F->qbrace(1) / F->qint(m + 1);
      Cyc wm_coef = F->from_int(m - r + 1) * F->qbrace(1) / F->qint(m + 1);
      vp = vp + (U.central_e(m) - U.central_w_half(m, +1) * wp_coef -
                 U.central_w_half(m, -1) * wm_coef) *
                    cp;
      vm = vm + (U.central_e(m) + U.central_w_half(m, +1) * wp_coef +
                 U.central_w_half(m, -1) * wm_coef) *
                    cm;
    }
    CHECK(U.ribbon_plus() == vp);
    CHECK(U.ribbon_minus() == vm);
  }
}

TEST_CASE("center: Casimir minimal polynomial and idempotents") {
  for (int r : {3, 5}) {
    auto F = Field::make(r);
    QuantumGroup U(F);
    PBWElement C = U.casimir();
    // FE + (qK + q^{-1}K^{-1})/{1}^2 equals C as well
    Cyc inv2 = (F->qbrace(1) * F->qbrace(1)).inverse();
    PBWElement alt = U.mul(U.gen_F(), U.gen_E()) +
                     U.gen_K(1) * (F->q_pow(1) * inv2) +
                     U.gen_K(-1) * (F->q_pow(-1) * inv2);
    CHECK(C == alt);
    // Psi(C) = (C - beta_{r-1}) prod (C - beta_m)^2 = 0
    PBWElement acc = C - U.unit() * U.beta(r - 1);
    for (int m = 0; m <= (r - 3) / 2; ++m) {
      PBWElement lin = C - U.unit() * U.beta(m);
      acc = U.mul(acc, U.mul(lin, lin));
    }
    CHECK(acc.is_zero());
    // orthogonality and resolution of identity
    std::vector<int> idx;
    idx.push_back(r - 1);
    for (int m = 0; m <= (r - 3) / 2; ++m) idx.push_back(m);
    PBWElement sum(U.field());
    for (int m : idx) sum = sum + U.central_e(m);
    CHECK(sum == U.unit());
    for (int m : idx)
      for (int mp : idx) {
        PBWElement prod = U.mul(U.central_e(m), U.central_e(mp));
        if (m == mp)
          CHECK(prod == U.central_e(m));
        else
          CHECK(prod.is_zero());
      }
    for (int m = 0; m <= (r - 3) / 2; ++m) {
      CHECK(U.central_w(m) ==
            U.central_w_half(m, +1) + U.central_w_half(m, -1));
      for (int mp = 0; mp <= (r - 3) / 2; ++mp)
        for (int e1 : {+1, -1})
          for (int e2 : {+1, -1}) {
            PBWElement prod =
                U.mul(U.central_w_half(m, e1), U.central_w_half(mp, e2));
            CHECK(prod.is_zero());
          }
      // w^eps e_m' = delta w^eps
      for (int mp : idx) {
        PBWElement prod = U.mul(U.central_w_half(m, +1), U.central_e(mp));
        if (mp == m)
          CHECK(prod == U.central_w_half(m, +1));
        else
          CHECK(prod.is_zero());
      }
    }
  }
}

TEST_CASE("left integral") {
  for (int r : {3, 5}) {
    auto F = Field::make(r);
    QuantumGroup U(F);
    // values
    CHECK(U.integral_lambda(U.monomial(r - 1, r - 1, r - 1)) ==
          F->from_int(r) * F->qfact(r - 1) * F->qfact(r - 1));
    CHECK(U.integral_lambda(U.unit()).is_zero());
    // xi = r^3/{1}^{2r-2}
    Cyc xi = U.integral_lambda(U.monomial(r - 1, r - 1, r - 1));
    CHECK(xi == F->from_int(r * r * r) / F->qbrace(1).pow(2 * r - 2));

    // left integral property on the whole PBW basis:
    // lambda(x_(2)) x_(1) = lambda(x) 1
    const int n = r * r * r;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) {
          PBWElement x = U.monomial(a, b, c);
          TensorElement d = U.coproduct(x);
          PBWElement acc(U.field());
          for (const auto& [k, v] : d.terms) {
            int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
            acc = acc + from_index(U, i) * (v * U.integral_lambda(from_index(U, j)));
          }
          CHECK(acc == U.unit() * U.integral_lambda(x));
        }

    // quantum character property on random pairs
    std::mt19937 rng(5 * r);
    for (int t = 0; t < 6; ++t) {
      PBWElement x = random_pbw(U, rng), y = random_pbw(U, rng);
      CHECK(U.integral_lambda(U.mul(x, y)) ==
            U.integral_lambda(U.mul(y, U.antipode(U.antipode(x)))));
    }

    // stabilization: lambda(v_-+) = Delta_+-
    auto [dp, dm] = F->gauss_constants();
    CHECK(U.integral_lambda(U.ribbon_minus()) == dp);
    CHECK(U.integral_lambda(U.ribbon_plus()) == dm);
  }
}

TEST_CASE("regular representation evaluations") {
  for (int r : {3, 5}) {
    auto F = Field::make(r);
    QuantumGroup U(F);
    Cyc fact2 = F->qfact(r - 1) * F->qfact(r - 1);
    PBWElement Kinv = U.gen_K(-1);
    // lambda(a_j^{r-1,n} K^{-1} e_{r-1}) = ([r-1]!)^2 delta_{j,n}
    for (int j = 0; j < r; ++j)
      for (int nn = 0; nn < r; ++nn) {
        PBWElement a = U.monomial(0, j, 0);                      // F^j
        a = U.mul(a, U.monomial(r - 1, 0, 0));                   // E^{r-1}
        a = U.mul(a, U.monomial(0, r - 1 - nn, 0));              // F^{r-n-1}
        a = U.mul(a, U.k_projector(-2 * nn - 1));
        Cyc got = U.integral_lambda(U.mul(U.mul(a, Kinv), U.central_e(r - 1)));
        CHECK(got == (j == nn ? fact2 : F->zero()));
      }
    // the four families for r <= m <= 2r-2
    for (int m = r; m <= 2 * r - 2; ++m) {
      Cyc m1sq = F->qint(m + 1) * F->qint(m + 1);
      for (int j = 0; j <= 2 * r - m - 2; ++j)
        for (int nn = 0; nn <= 2 * r - m - 2; ++nn) {
          PBWElement proj = U.k_projector(-m - 2 * nn - 2);
          // a_j^{m,n} = F^j E^{r-1} F^{r-n-1} v_{-m-2n-2}
          PBWElement a = U.monomial(0, j, 0);
          a = U.mul(a, U.monomial(r - 1, 0, 0));
          a = U.mul(a, U.monomial(0, r - 1 - nn, 0));
          a = U.mul(a, proj);
          Cyc va = U.integral_lambda(U.mul(U.mul(a, Kinv), U.central_e(m)));
          // A_j^{m,n} = [m+1]^2/([r-1]!)^2 a_j^{m,n}:
          // lambda(A K^{-1} e_m) = [m+1]^2 delta_{j,n}
          Cyc gotA = va * m1sq / fact2;
          CHECK(gotA == (j == nn ? m1sq : F->zero()));
          // b_j^{m,n} = sum_h [m-r]![h]!/[m-h-r]! F^j E^{r-h-2} F^{r-n-h-2} v
          PBWElement bsum(U.field());
          for (int h = 0; h <= m - r; ++h) {
            if (r - nn - h - 2 < 0 || r - h - 2 < 0) continue;
            Cyc coef = F->qfact(m - r) * F->qfact(h) / F->qfact(m - h - r);
            PBWElement bterm = U.monomial(0, j, 0);
            bterm = U.mul(bterm, U.monomial(r - h - 2, 0, 0));
            bterm = U.mul(bterm, U.monomial(0, r - nn - h - 2, 0));
            bsum = bsum + U.mul(bterm, proj) * coef;
          }
          Cyc vb = U.integral_lambda(U.mul(U.mul(bsum, Kinv), U.central_e(m)));
          CHECK(vb.is_zero());
          // B_j = [m+1]^2/f2 b_j + {m+1}'/f2 a_j:
          // lambda(B K^{-1} e_m) = {m+1}' delta_{j,n}
          Cyc gotB = (vb * m1sq + va * F->qbrace_prime(m + 1)) / fact2;
          CHECK(gotB == (j == nn ? F->qbrace_prime(m + 1) : F->zero()));
        }
      // x_k and y_k families vanish
      for (int k = 0; k <= m - r; ++k)
        for (int nn = 0; nn <= 2 * r - m - 2; ++nn) {
          PBWElement proj = U.k_projector(-m - 2 * nn - 2);
          PBWElement x(U.field());
          for (int h = 0; h <= m - r; ++h) {
            if (m - k - h - 1 < 0 || r - nn - h - 2 < 0) continue;
            if (m - k - r < 0 || m - h - r < 0) continue;
            Cyc coef = F->qfact(k) * F->qfact(h) /
                       (F->qfact(m - k - r) * F->qfact(m - h - r));
            PBWElement t = U.monomial(m - k - h - 1, 0, 0);
            t = U.mul(t, U.monomial(0, r - nn - h - 2, 0));
            x = x + U.mul(t, proj) * coef;
          }
          CHECK(U.integral_lambda(U.mul(U.mul(x, Kinv), U.central_e(m))).is_zero());
          PBWElement y(U.field());
          for (int h = 0; h <= m - r; ++h) {
            if (2 * r - m + k - 1 < 0 || r - h - 2 < 0 || r - nn - h - 2 < 0)
              continue;
            Cyc coef = F->qfact(m - r) * F->qfact(h) / F->qfact(m - h - r);
            PBWElement t = U.monomial(0, 2 * r - m + k - 1, 0);
            t = U.mul(t, U.monomial(r - h - 2, 0, 0));
            t = U.mul(t, U.monomial(0, r - nn - h - 2, 0));
            y = y + U.mul(t, proj) * coef;
          }
          CHECK(U.integral_lambda(U.mul(U.mul(y, Kinv), U.central_e(m))).is_zero());
        }
    }
  }
}

TEST_CASE("Drinfeld map") {
  auto F = Field::make(3);
  QuantumGroup U(F);
  CHECK(U.drinfeld_rank() == 27);
  // D(eps) = (eps (x) id)(M) = 1
  const int n = 27;
  PBWElement de(U.field());
  for (const auto& [k, v] : U.m_matrix().terms) {
    int i = static_cast<int>(k / n), j = static_cast<int>(k % n);
    de = de + from_index(U, j) * (v * U.counit(from_index(U, i)));
  }
  CHECK(de == U.unit());
}
