#include "nskein/jw.hpp"

#include <sstream>

namespace nsk {

std::string JWLabel::name() const {
  std::ostringstream os;
  os << (kind == F ? "f" : "g") << ":" << m;
  return os.str();
}

namespace {

// f_m = f_{m-1} (x) 1 + ([m-1]/[m]) (f_{m-1} (x) 1) e_{m-1} (f_{m-1} (x) 1)
TLMorphism build_f(JWCache& cache, int m) {
  const Field* F = cache.field();
  const int r = F->level();
  if (m < 0 || m > r - 1)
    throw std::out_of_range("simple_jw: need 0 <= m <= r-1");
  if (m == 0) return tl_id(F, 0);
  if (m == 1) return tl_id(F, 1);
  TLMorphism big = tensor(cache.simple_jw(m - 1), tl_id(F, 1));
  Cyc coef = F->qint(m - 1) / F->qint(m);
  TLMorphism corr = compose(big, compose(tl_e(F, m, m - 1), big));
  return big + corr * coef;
}

// Nested cup/cap rainbow of depth j (arcs over strand positions
// m-2j+1 .. m) as an endomorphism of m strands, with the leftmost m-2j
// strands passing through.
TLMorphism nested_e(const Field* F, int m, int j) {
  TLMorphism mid = compose(nested_cups(F, j), nested_caps(F, j));
  return tensor(tl_id(F, m - 2 * j), mid);
}

// h_m = (-1)^{m+1} [m+1] (f_{r-1} (x) id_j) N_j (f_{r-1} (x) id_j)
// with j = m-r+1 and N_j the nested rainbow on the rightmost 2j strands.
TLMorphism build_h(JWCache& cache, int m) {
  const Field* F = cache.field();
  const int r = F->level();
  if (m < r || m > 2 * r - 2)
    throw std::out_of_range("nilpotent_h: need r <= m <= 2r-2");
  const int j = m - r + 1;
  TLMorphism wall = tensor(cache.simple_jw(r - 1), tl_id(F, j));
  TLMorphism core = compose(wall, compose(nested_e(F, m, j), wall));
  Cyc pref = F->qint(m + 1);
  if (m % 2 == 0) pref = -pref;  // (-1)^{m+1}
  return core * pref;
}

// g_r = f_{r-1} (x) 1
// g_{r+1} = g_r (x) 1 - (g (x) 1) e_r (h (x) 1) - (h (x) 1) e_r (g (x) 1)
//           - [2] (h (x) 1) e_r (h (x) 1)
// g_m = g_{m-1} (x) 1 + ([m-1]/[m]) (g (x) 1) e_{m-1} (g (x) 1)
//       - (2/[m]^2) (g (x) 1) e_{m-1} (h (x) 1)
TLMorphism build_g(JWCache& cache, int m) {
  const Field* F = cache.field();
  const int r = F->level();
  if (m < r || m > 2 * r - 2)
    throw std::out_of_range("nonss_jw: need r <= m <= 2r-2");
  if (m == r) return tensor(cache.simple_jw(r - 1), tl_id(F, 1));
  TLMorphism G = tensor(cache.nonss_jw(m - 1), tl_id(F, 1));
  TLMorphism H = tensor(cache.nilpotent_h(m - 1), tl_id(F, 1));
  TLMorphism e = tl_e(F, m, m - 1);
  if (m == r + 1) {
    TLMorphism mixed = compose(G, compose(e, H)) + compose(H, compose(e, G));
    TLMorphism hh = compose(H, compose(e, H)) * F->qint(2);
    return G - mixed - hh;
  }
  Cyc cg = F->qint(m - 1) / F->qint(m);
  Cyc ch = F->from_int(2) / (F->qint(m) * F->qint(m));
  TLMorphism gg = compose(G, compose(e, G)) * cg;
  TLMorphism gh = compose(G, compose(e, H)) * ch;
  return G + gg - gh;
}

}  // namespace

const TLMorphism& JWCache::get_or_build(const std::string& key,
                                        TLMorphism (*build)(JWCache&, int),
                                        int m) {
  {
    std::lock_guard lk(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  TLMorphism v = build(*this, m);
  // On-insert verification: idempotency or nilpotency.
  if (key[0] == 'f' || key[0] == 'g') {
    if (!(compose(v, v) == v))
      throw std::runtime_error("JWCache: " + key + " failed idempotency");
  } else if (key[0] == 'h') {
    if (!compose(v, v).is_zero())
      throw std::runtime_error("JWCache: " + key + " failed nilpotency");
  }
  std::lock_guard lk(mu_);
  auto [it, inserted] = cache_.emplace(key, std::move(v));
  return it->second;
}

const TLMorphism& JWCache::simple_jw(int m) {
  return get_or_build("f:" + std::to_string(m), &build_f, m);
}

const TLMorphism& JWCache::nonss_jw(int m) {
  return get_or_build("g:" + std::to_string(m), &build_g, m);
}

const TLMorphism& JWCache::nilpotent_h(int m) {
  return get_or_build("h:" + std::to_string(m), &build_h, m);
}

const TLMorphism& JWCache::idempotent(const JWLabel& l) {
  return l.kind == JWLabel::F ? simple_jw(l.m) : nonss_jw(l.m);
}

namespace {
std::mutex g_shared_mu;
std::map<int, std::pair<FieldPtr, std::unique_ptr<JWCache>>> g_shared;

std::pair<FieldPtr, JWCache*> shared_entry(int r) {
  std::lock_guard lk(g_shared_mu);
  auto it = g_shared.find(r);
  if (it == g_shared.end()) {
    FieldPtr f = Field::make(r);
    auto cache = std::make_unique<JWCache>(f);
    it = g_shared.emplace(r, std::make_pair(f, std::move(cache))).first;
  }
  return {it->second.first, it->second.second.get()};
}
}  // namespace

JWCache& shared_jw(int r) { return *shared_entry(r).second; }

FieldPtr shared_field(int r) { return shared_entry(r).first; }

std::pair<size_t, std::map<std::string, int>> JWCache::expansion_stats(
    const std::string& which, int m) {
  const TLMorphism* u = nullptr;
  if (which == "f")
    u = &simple_jw(m);
  else if (which == "g")
    u = &nonss_jw(m);
  else if (which == "h")
    u = &nilpotent_h(m);
  else
    throw std::invalid_argument("expansion_stats: which must be f, g or h");
  std::map<std::string, int> multiset;
  for (const auto& [d, c] : u->terms()) multiset[c.to_string()] += 1;
  return {u->term_count(), multiset};
}

}  // namespace nsk
