#include "nskein/kirby.hpp"

#include <functional>

namespace nsk {

KirbyColors::KirbyColors(FieldPtr field) : jw_(&shared_jw(field->level())) {}

const TLMorphism& KirbyColors::memo(const std::string& key,
                                    const std::function<TLMorphism()>& build) {
  {
    std::lock_guard lk(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  TLMorphism v = build();
  std::lock_guard lk(mu_);
  return cache_.emplace(key, std::move(v)).first->second;
}

const TLMorphism& KirbyColors::t_reduced(int m) {
  const Field* F = field();
  const int r = level();
  if (m < r - 1 || m > 2 * r - 2) throw std::out_of_range("t_reduced: index");
  return memo("tr:" + std::to_string(m), [&] {
    if (m == r - 1) return jw_->nonss_jw(2 * r - 2);
    const int j = m - r + 1;
    TLMorphism mid =
        tensor(tl_id(F, r - 1), tensor(nested_caps(F, j), tl_id(F, r - 1)));
    return compose(jw_->nonss_jw(2 * r - 2), mid);
  });
}

const TLMorphism& KirbyColors::t_map(int m) {
  const Field* F = field();
  const int r = level();
  if (m < r - 1 || m > 2 * r - 2) throw std::out_of_range("t_map: index");
  return memo("t:" + std::to_string(m), [&] {
    if (m == r - 1) {
      return compose(jw_->nonss_jw(2 * r - 2),
                     tensor(jw_->simple_jw(r - 1), jw_->simple_jw(r - 1)));
    }
    // apply the two walls one at a time; cheaper than the full tensor
    TLMorphism left = compose(t_reduced(m), tensor(jw_->nonss_jw(m), tl_id(F, m)));
    return compose(left, tensor(tl_id(F, m), rotate_dual(jw_->nonss_jw(m))));
  });
}

const TLMorphism& KirbyColors::t_prime_map(int m) {
  const int r = level();
  if (m < r || m > 2 * r - 2) throw std::out_of_range("t_prime_map: index");
  return memo("t':" + std::to_string(m), [&] {
    return compose(t_map(m), tensor(jw_->nilpotent_h(m),
                                    rotate_dual(jw_->nonss_jw(m))));
  });
}

const TLMorphism& KirbyColors::t_map_ss(int m) {
  const Field* F = field();
  const int r = level();
  if (m < 0 || m > r - 2) throw std::out_of_range("t_map_ss: index");
  return memo("ts:" + std::to_string(m), [&] {
    return compose(nested_caps(F, m),
                   tensor(jw_->simple_jw(m), jw_->simple_jw(m)));
  });
}

KirbyComponent KirbyColors::omega_ss(int n) {
  const Field* F = field();
  const int r = level();
  if (n < 0 || n > r - 2) throw std::out_of_range("omega_ss: index");
  if (n % 2 == 1) return {n, TLMorphism(F, 2 * n, 0)};
  return {n, t_map_ss(n) * F->qint(n + 1)};
}

KirbyComponent KirbyColors::omega_ns(int n) {
  const Field* F = field();
  const int r = level();
  if (n < r - 1 || n > 2 * r - 2) throw std::out_of_range("omega_ns: index");
  if (n == r - 1) return {n, t_map(n)};
  Cyc sign = n % 2 == 0 ? F->one() : -F->one();
  Cyc half = F->one() / F->from_int(2);
  Cyc c1 = sign * F->qbrace_prime(n + 1) * half;
  Cyc c2 = -(sign * F->qint(n + 1));
  return {n, t_map(n) * c1 + t_prime_map(n) * c2};
}

const TLMorphism& KirbyColors::closed_omega_ns(int n) {
  const Field* F = field();
  const int r = level();
  if (n < r - 1 || n > 2 * r - 2)
    throw std::out_of_range("closed_omega_ns: index");
  return memo("co:" + std::to_string(n), [&]() -> TLMorphism {
    // capnest_{r-1} o g_{2r-2} is small; the walls are dropped because
    // the red cable carries its own idempotent coupon.
    TLMorphism cap_g =
        compose(nested_caps(F, r - 1), jw_->nonss_jw(2 * r - 2));
    if (n == r - 1) return cap_g;
    const int j = n - r + 1;
    TLMorphism mid =
        tensor(tl_id(F, r - 1), tensor(nested_caps(F, j), tl_id(F, r - 1)));
    TLMorphism closed_t = compose(cap_g, mid);
    TLMorphism closed_tp =
        compose(closed_t, tensor(jw_->nilpotent_h(n), tl_id(F, n)));
    Cyc sign = n % 2 == 0 ? F->one() : -F->one();
    Cyc c1 = sign * F->qbrace_prime(n + 1) / F->from_int(2);
    Cyc c2 = -(sign * F->qint(n + 1));
    return closed_t * c1 + closed_tp * c2;
  });
}

const TLMorphism& KirbyColors::closed_omega_ss(int n) {
  const Field* F = field();
  const int r = level();
  if (n < 0 || n > r - 2) throw std::out_of_range("closed_omega_ss: index");
  return memo("cos:" + std::to_string(n), [&]() -> TLMorphism {
    if (n % 2 == 1) return TLMorphism(F, 2 * n, 0);
    return nested_caps(F, n) * F->qint(n + 1);
  });
}

TLMorphism bent_closure(const TLMorphism& u) {
  if (u.src() % 2 != 0)
    throw std::invalid_argument("bent_closure: even source width required");
  return compose(u, nested_cups(u.field(), u.src() / 2));
}

bool kirby_equivalent(const TLMorphism& x, const TLMorphism& y) {
  return bent_closure(x) == bent_closure(y);
}

bool kirby_slide_pair(const TLMorphism& u, const TLMorphism& v,
                      const TLMorphism& x, const TLMorphism& y) {
  const Field* F = u.field();
  const int m = v.src(), n = v.dst();
  if (u.src() != n + m) return false;
  TLMorphism lhs = compose(u, tensor(v, tl_id(F, m)));
  TLMorphism rhs = compose(u, tensor(tl_id(F, n), rotate_dual(v)));
  return lhs == x && rhs == y;
}

KirbyColors& shared_kirby(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<KirbyColors>> table;
  std::lock_guard lk(mu);
  auto it = table.find(r);
  if (it == table.end())
    it = table.emplace(r, std::make_unique<KirbyColors>(shared_field(r))).first;
  return *it->second;
}

}  // namespace nsk
