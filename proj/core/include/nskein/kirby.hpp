#pragma once

#include <functional>
#include <memory>

#include "nskein/jw.hpp"

namespace nsk {

/// Coupon morphisms and Kirby colors. Components of the non-semisimple
/// Kirby color target g_{2r-2}; semisimple components target 0.
struct KirbyComponent {
  int color_index = 0;      // n
  TLMorphism morphism;      // TL(n (x) n, 2r-2) or TL(n (x) n, 0)
};

class KirbyColors {
public:
  explicit KirbyColors(FieldPtr field);

  JWCache& jw() { return *jw_; }
  const Field* field() const { return jw_->field(); }
  int level() const { return jw_->field()->level(); }

  /// t_{r-1} = g_{2r-2} (f_{r-1} (x) f_{r-1}); for r <= m <= 2r-2,
  /// t_m = g_{2r-2} (id (x) capnest (x) id) (g_m (x) g_m*).
  /// Materializes the idempotent walls; at the top widths of level 5 this
  /// is very large, so prefer the reduced/closed forms below.
  const TLMorphism& t_map(int m);
  /// t'_m = t_m (h_m (x) g_m*).
  const TLMorphism& t_prime_map(int m);
  /// Semisimple coupon: capnest_m (f_m (x) f_m) in TL(2m, 0), 0 <= m <= r-2.
  const TLMorphism& t_map_ss(int m);

  /// Wall-free reduced coupon g_{2r-2} (id (x) capnest (x) id) in
  /// TL(2m, 2r-2). Equal to t_m after (g_m (x) g_m*)-precomposition.
  const TLMorphism& t_reduced(int m);

  /// omega_m = [m+1] t^ss_m for even m, zero for odd m.
  KirbyComponent omega_ss(int n);
  /// Omega_{r-1} = t_{r-1};
  /// Omega_m = (-1)^m {m+1}'/2 t_m - (-1)^m [m+1] t'_m.
  KirbyComponent omega_ns(int n);

  /// Plat-closed, wall-free coupon forms for the evaluation pipeline.
  /// They agree with capnest_{r-1} o Omega_n (resp. omega_n) on any input
  /// whose red cable already carries its idempotent.
  /// closed_omega_ns(n) in TL(2n, 0).
  const TLMorphism& closed_omega_ns(int n);
  /// closed_omega_ss(n) in TL(2n, 0): [n+1] capnest_n for even n, else zero.
  const TLMorphism& closed_omega_ss(int n);

private:
  const TLMorphism& memo(const std::string& key,
                         const std::function<TLMorphism()>& build);

  JWCache* jw_;
  std::mutex mu_;
  std::map<std::string, TLMorphism> cache_;
};

/// Bent closure of u in TL(a (x) a, T): u composed with the nested cup
/// bridge joining the two input blocks. The slide move
/// u (v (x) id) ~ u (id (x) v*) preserves it.
TLMorphism bent_closure(const TLMorphism& u);

/// Complete invariant comparison for the slide equivalence on
/// TL(m (x) m, 2r-2): equal bent closures.
bool kirby_equivalent(const TLMorphism& x, const TLMorphism& y);

/// Explicit one-slide witness: checks x = u (v (x) id_m) and
/// y = u (id_n (x) rotate_dual(v)) for u in TL(n (x) m, T), v in TL(m, n).
bool kirby_slide_pair(const TLMorphism& u, const TLMorphism& v,
                      const TLMorphism& x, const TLMorphism& y);

/// Process-wide shared instance per level (shares the level's JWCache).
KirbyColors& shared_kirby(int r);

}  // namespace nsk
