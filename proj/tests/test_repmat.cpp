#include <doctest.h>

#include <random>

#include "nskein/jw.hpp"
#include "nskein/repmat.hpp"

using namespace nsk;

namespace {

TLMorphism random_endo(const Field* F, int w, std::mt19937& rng) {
  std::uniform_int_distribution<int> pos(1, std::max(1, w - 1)), sc(-3, 3);
  TLMorphism acc = tl_id(F, w) * F->from_int(sc(rng));
  for (int t = 0; t < 3 && w >= 2; ++t) {
    TLMorphism cur = tl_e(F, w, pos(rng));
    if (rng() % 2) cur = compose(cur, tl_e(F, w, pos(rng)));
    acc = acc + cur * F->from_int(sc(rng));
  }
  return acc;
}

}  // namespace

TEST_CASE("functor on elementary diagrams") {
  auto Fp = shared_field(3);
  const Field* F = Fp.get();
  TLFunctor FT(Fp);

  CHECK(FT.matrix(tl_id(F, 1)) == RepMat::identity(F, 2));

  // e(c(1)) = -q - q^{-1} = delta
  RepMat cap = FT.matrix(tl_cap(F, 0, 1));
  RepMat cup = FT.matrix(tl_cup(F, 0, 1));
  RepMat loop = cap * cup;
  CHECK(loop.rows() == 1);
  CHECK(loop.at(0, 0) == F->loop_delta());
}

TEST_CASE("functoriality on random morphisms") {
  for (int r : {3, 5}) {
    auto Fp = shared_field(r);
    const Field* F = Fp.get();
    TLFunctor FT(Fp);
    std::mt19937 rng(3 * r);
    for (int t = 0; t < 5; ++t) {
      TLMorphism u = random_endo(F, 3, rng);
      TLMorphism v = random_endo(F, 3, rng);
      CHECK(FT.matrix(compose(u, v)) == FT.matrix(u) * FT.matrix(v));
      TLMorphism w = random_endo(F, 2, rng);
      CHECK(FT.matrix(tensor(u, w)) == FT.matrix(u).kron(FT.matrix(w)));
    }
  }
}

TEST_CASE("braiding matches the Kauffman resolution") {
  for (int r : {3, 5}) {
    auto Fp = shared_field(r);
    QuantumGroup U(Fp);
    TLFunctor FT(Fp);
    CHECK(FT.braiding(U, +1) == FT.matrix(tl_crossing(Fp.get(), +1)));
    CHECK(FT.braiding(U, -1) == FT.matrix(tl_crossing(Fp.get(), -1)));
  }
}

TEST_CASE("sign discrepancy for partial traces") {
  for (int r : {3, 5}) {
    auto Fp = shared_field(r);
    const Field* F = Fp.get();
    TLFunctor FT(Fp);
    JWCache& jw = shared_jw(Fp->level());
    std::mt19937 rng(7 * r);

    // u = id(1), k = 1: diagrammatic delta vs algebraic [2]'= q + q^{-1}
    RepMat alg = FT.algebraic_partial_trace(FT.matrix(tl_id(F, 1)), 1, 1);
    CHECK(alg.at(0, 0) == F->qbrace_prime(1));
    CHECK(F->loop_delta() == -F->qbrace_prime(1));

    for (int w = 1; w <= 4; ++w) {
      for (int k = 0; k <= w; ++k) {
        for (int t = 0; t < 3; ++t) {
          TLMorphism u = random_endo(F, w, rng);
          RepMat lhs = FT.matrix(partial_trace(u, k));
          RepMat rhs = FT.algebraic_partial_trace(FT.matrix(u), w, k);
          if (k % 2 == 1) rhs = rhs * (-F->one());
          CHECK(lhs == rhs);
        }
      }
    }

    // f_{r-1} full closure: both sides vanish
    RepMat lhs = FT.matrix(partial_trace(jw.simple_jw(r - 1), r - 1));
    RepMat rhs =
        FT.algebraic_partial_trace(FT.matrix(jw.simple_jw(r - 1)), r - 1, r - 1);
    CHECK(lhs.at(0, 0).is_zero());
    CHECK(rhs.at(0, 0).is_zero());
  }
}

TEST_CASE("action through coproduct matches functor image of idempotents") {
  auto Fp = shared_field(3);
  QuantumGroup U(Fp);
  TLFunctor FT(Fp);
  // K acts on X^{(x)2} as K (x) K
  RepMat kk = FT.action(U, U.gen_K(), 2);
  CHECK(kk == FT.bead_K(1).kron(FT.bead_K(1)));
  // E acts on X (x) X by Delta(E) = E (x) K + 1 (x) E:
  // |01> -> |00> via 1 (x) E, |10> -> q |00> via E (x) K.
  RepMat e2 = FT.action(U, U.gen_E(), 2);
  CHECK(e2.at(0, 1) == Fp->one());
  CHECK(e2.at(0, 2) == Fp->q_pow(1));
}
