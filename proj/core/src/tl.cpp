#include "nskein/tl.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace nsk {

// ---------------------------------------------------------------------------
// Intern table

struct DiagKey {
  int src, dst;
  std::vector<int> pair;
  bool operator==(const DiagKey& o) const {
    return src == o.src && dst == o.dst && pair == o.pair;
  }
};

struct DiagKeyHash {
  size_t operator()(const DiagKey& k) const {
    size_t h = std::hash<int>()(k.src * 131 + k.dst);
    for (int p : k.pair) h = h * 1000003u + static_cast<size_t>(p + 1);
    return h;
  }
};

struct DiagTable::Impl {
  std::shared_mutex mu;
  std::unordered_map<DiagKey, DiagId, DiagKeyHash> index;
  // Deque-like storage so references stay valid across inserts.
  std::vector<std::unique_ptr<DiagData>> data;
};

DiagTable& DiagTable::instance() {
  static DiagTable t = [] {
    DiagTable tt;
    tt.impl_ = new Impl();
    return tt;
  }();
  return t;
}

DiagId DiagTable::intern(const DiagData& d) {
  DiagKey key{d.src, d.dst, d.pair};
  {
    std::shared_lock lk(impl_->mu);
    auto it = impl_->index.find(key);
    if (it != impl_->index.end()) return it->second;
  }
  std::unique_lock lk(impl_->mu);
  auto it = impl_->index.find(key);
  if (it != impl_->index.end()) return it->second;
  DiagId id = static_cast<DiagId>(impl_->data.size());
  impl_->data.push_back(std::make_unique<DiagData>(d));
  impl_->index.emplace(std::move(key), id);
  return id;
}

const DiagData& DiagTable::get(DiagId id) const {
  std::shared_lock lk(impl_->mu);
  return *impl_->data[id];
}

DiagId intern_diagram(int src, int dst, std::vector<int> pairing) {
  DiagData d;
  d.src = src;
  d.dst = dst;
  d.pair = std::move(pairing);
  return DiagTable::instance().intern(d);
}

const DiagData& diagram(DiagId id) { return DiagTable::instance().get(id); }

bool is_planar_pairing(int src, int dst, const std::vector<int>& pair) {
  const int n = src + dst;
  if (static_cast<int>(pair.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (pair[i] < 0 || pair[i] >= n || pair[i] == i || pair[pair[i]] != i)
      return false;
  }
  // Map to circle order: bottom left-to-right, then top right-to-left.
  auto circ = [&](int p) { return p < src ? p : src + dst - 1 - (p - src); };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int a = circ(i), b = circ(pair[i]), c = circ(j), d = circ(pair[j]);
      if (a > b) std::swap(a, b);
      if (c > d) std::swap(c, d);
      bool c_in = (a < c && c < b), d_in = (a < d && d < b);
      if (c_in != d_in) return false;
    }
  }
  return true;
}

long planar_pairing_count(int m, int mp) {
  if ((m + mp) % 2 != 0) return 0;
  // Non-crossing perfect matchings of m+mp boundary points = Catalan((m+mp)/2).
  int n = (m + mp) / 2;
  mpz_class num = 1, den = 1;
  for (int k = 1; k <= n; ++k) {
    num *= (n + k);
    den *= k;
  }
  mpz_class res = (num / den) / (n + 1);
  return res.get_si();
}

// ---------------------------------------------------------------------------
// TLMorphism basics

void TLMorphism::add_term(DiagId d, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyc TLMorphism::coeff(DiagId d) const {
  auto it = terms_.find(d);
  if (it == terms_.end()) return field_ ? field_->zero() : Cyc();
  return it->second;
}

bool TLMorphism::operator==(const TLMorphism& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (src_ != o.src_ || dst_ != o.dst_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [d, c] : terms_) {
    auto it = o.terms_.find(d);
    if (it == o.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

TLMorphism TLMorphism::operator+(const TLMorphism& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (src_ != o.src_ || dst_ != o.dst_)
    throw std::invalid_argument("TLMorphism: shape mismatch in +");
  TLMorphism r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

TLMorphism TLMorphism::operator-(const TLMorphism& o) const {
  return *this + (-o);
}

TLMorphism TLMorphism::operator-() const {
  TLMorphism r(field_, src_, dst_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

TLMorphism TLMorphism::operator*(const Cyc& s) const {
  if (s.is_zero()) return TLMorphism(field_, src_, dst_);
  TLMorphism r(field_, src_, dst_);
  for (const auto& [d, c] : terms_) {
    Cyc v = c * s;
    if (!v.is_zero()) r.terms_.emplace(d, v);
  }
  return r;
}

std::vector<std::pair<DiagId, Cyc>> TLMorphism::sorted_terms() const {
  std::vector<std::pair<DiagId, Cyc>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto& da = diagram(a.first);
    const auto& db = diagram(b.first);
    return da.pair < db.pair;
  });
  return out;
}

std::string TLMorphism::diagram_string(DiagId id) {
  const auto& d = diagram(id);
  std::ostringstream os;
  os << "[";
  bool first = true;
  auto name = [&](int p) {
    std::ostringstream n;
    if (p < d.src)
      n << "b" << (p + 1);
    else
      n << "t" << (p - d.src + 1);
    return n.str();
  };
  for (int i = 0; i < d.src + d.dst; ++i) {
    if (d.pair[i] > i) {
      if (!first) os << ",";
      os << "(" << name(i) << "," << name(d.pair[i]) << ")";
      first = false;
    }
  }
  os << "]";
  return os.str();
}

std::string TLMorphism::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : sorted_terms()) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ") " << diagram_string(d);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Generators

TLMorphism tl_id(const Field* f, int m) {
  std::vector<int> pair(2 * m);
  for (int i = 0; i < m; ++i) {
    pair[i] = m + i;
    pair[m + i] = i;
  }
  TLMorphism u(f, m, m);
  u.add_term(intern_diagram(m, m, std::move(pair)), f->one());
  return u;
}

TLMorphism tl_cup(const Field* f, int m, int i) {
  if (i < 1 || i > m + 1) throw std::out_of_range("tl_cup: index");
  int dst = m + 2;
  std::vector<int> pair(m + dst);
  // bottom j (0-based) -> top position, skipping the cup at top i-1, i.
  for (int j = 0; j < m; ++j) {
    int t = j < i - 1 ? j : j + 2;
    pair[j] = m + t;
    pair[m + t] = j;
  }
  pair[m + (i - 1)] = m + i;
  pair[m + i] = m + (i - 1);
  TLMorphism u(f, m, dst);
  u.add_term(intern_diagram(m, dst, std::move(pair)), f->one());
  return u;
}

TLMorphism tl_cap(const Field* f, int m, int i) {
  if (i < 1 || i > m + 1) throw std::out_of_range("tl_cap: index");
  int src = m + 2;
  std::vector<int> pair(src + m);
  for (int j = 0; j < m; ++j) {
    int b = j < i - 1 ? j : j + 2;
    pair[b] = src + j;
    pair[src + j] = b;
  }
  pair[i - 1] = i;
  pair[i] = i - 1;
  TLMorphism u(f, src, m);
  u.add_term(intern_diagram(src, m, std::move(pair)), f->one());
  return u;
}

TLMorphism tl_e(const Field* f, int m, int i) {
  if (i < 1 || i > m - 1) throw std::out_of_range("tl_e: index");
  std::vector<int> pair(2 * m);
  for (int j = 0; j < m; ++j) {
    if (j == i - 1 || j == i) continue;
    pair[j] = m + j;
    pair[m + j] = j;
  }
  pair[i - 1] = i;
  pair[i] = i - 1;
  pair[m + i - 1] = m + i;
  pair[m + i] = m + i - 1;
  TLMorphism u(f, m, m);
  u.add_term(intern_diagram(m, m, std::move(pair)), f->one());
  return u;
}

TLMorphism tl_crossing(const Field* f, int sign) {
  Cyc A = f->kauffman_A();
  Cyc Ai = f->q_pow(-(f->level() + 1) / 2);
  TLMorphism u = tl_id(f, 2) * (sign > 0 ? A : Ai);
  TLMorphism e = tl_e(f, 2, 1) * (sign > 0 ? Ai : A);
  return u + e;
}

// ---------------------------------------------------------------------------
// Structural operations

namespace {

// Stack diagram g (m -> k) below diagram f (k -> n); returns (diagram, loops).
// Scratch buffers are reused across calls on the same thread.
std::pair<DiagId, int> stack_diagrams(DiagId fid, DiagId gid) {
  const DiagData& f = diagram(fid);
  const DiagData& g = diagram(gid);
  const int m = g.src, k = g.dst, n = f.dst;
  // Node layout for traversal: g-bottom 0..m-1, middle 0..k-1 shared,
  // f-top 0..n-1. Walk from each external point through middle links.
  std::vector<int> pair(m + n, -1);
  thread_local std::vector<char> mid_seen_buf;
  mid_seen_buf.assign(k, 0);
  auto& mid_seen = mid_seen_buf;

  auto trace_from = [&](int ext) {
    // ext in [0, m+n): g-bottom if < m else f-top index ext-m.
    int side;   // 0 = in g, 1 = in f
    int point;  // point index within that diagram
    if (ext < m) {
      side = 0;
      point = ext;
    } else {
      side = 1;
      point = f.src + (ext - m);
    }
    for (;;) {
      int partner = (side == 0) ? g.pair[point] : f.pair[point];
      if (side == 0) {
        if (partner < m) return partner;  // g-bottom endpoint
        int mid = partner - m;            // g-top = middle node
        mid_seen[mid] = 1;
        side = 1;
        point = mid;  // f-bottom index
      } else {
        if (partner >= f.src) return m + (partner - f.src);  // f-top endpoint
        int mid = partner;  // f-bottom = middle node
        mid_seen[mid] = 1;
        side = 0;
        point = m + mid;  // g-top index
      }
    }
  };

  for (int ext = 0; ext < m + n; ++ext) {
    if (pair[ext] >= 0) continue;
    int other = trace_from(ext);
    pair[ext] = other;
    pair[other] = ext;
  }
  // Count closed loops: middle nodes not visited by any external path.
  int loops = 0;
  thread_local std::vector<char> used_buf;
  used_buf.assign(k, 0);
  auto& used = used_buf;
  for (int s = 0; s < k; ++s) {
    if (mid_seen[s] || used[s]) continue;
    // follow the cycle through alternating g-top / f-bottom links
    int cur = s;
    int side = 0;  // enter via g side first
    do {
      used[cur] = 1;
      int nxt;
      if (side == 0) {
        nxt = g.pair[m + cur] - m;  // g connects middle cur to middle nxt
        side = 1;
      } else {
        nxt = f.pair[cur];  // f connects middle cur to middle nxt
        side = 0;
      }
      cur = nxt;
    } while (cur != s || side != 0);
    ++loops;
  }
  return {intern_diagram(m, n, std::move(pair)), loops};
}

}  // namespace

TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
  if (f.is_zero() || g.is_zero()) {
    const Field* fd = f.field() ? f.field() : g.field();
    return TLMorphism(fd, g.src(), f.dst());
  }
  if (f.src() != g.dst())
    throw std::invalid_argument("compose: width mismatch");
  const Field* fd = f.field();
  Cyc delta = fd->loop_delta();
  // Loop powers cache
  std::vector<Cyc> dpow{fd->one()};
  auto delta_pow = [&](int k) {
    while (static_cast<int>(dpow.size()) <= k) dpow.push_back(dpow.back() * delta);
    return dpow[k];
  };
  TLMorphism out(fd, g.src(), f.dst());
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      auto [d, loops] = stack_diagrams(df, dg);
      Cyc coef = cf * cg;
      if (loops > 0) coef *= delta_pow(loops);
      out.add_term(d, coef);
    }
  }
  return out;
}

TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) {
  if (f.is_zero() || g.is_zero()) {
    const Field* fd = f.field() ? f.field() : g.field();
    return TLMorphism(fd, f.src() + g.src(), f.dst() + g.dst());
  }
  const Field* fd = f.field();
  TLMorphism out(fd, f.src() + g.src(), f.dst() + g.dst());
  const int ms = f.src() + g.src();
  for (const auto& [df, cf] : f.terms()) {
    const auto& a = diagram(df);
    for (const auto& [dg, cg] : g.terms()) {
      const auto& b = diagram(dg);
      std::vector<int> pair(ms + f.dst() + g.dst());
      auto remap_a = [&](int p) {
        return p < a.src ? p : ms + (p - a.src);
      };
      auto remap_b = [&](int p) {
        return p < b.src ? f.src() + p : ms + f.dst() + (p - b.src);
      };
      for (int i = 0; i < a.src + a.dst; ++i) {
        pair[remap_a(i)] = remap_a(a.pair[i]);
      }
      for (int i = 0; i < b.src + b.dst; ++i) {
        pair[remap_b(i)] = remap_b(b.pair[i]);
      }
      out.add_term(intern_diagram(ms, f.dst() + g.dst(), std::move(pair)),
                   cf * cg);
    }
  }
  return out;
}

TLMorphism rotate_dual(const TLMorphism& u) {
  const Field* fd = u.field();
  TLMorphism out(fd, u.dst(), u.src());
  const int m = u.src(), n = u.dst();
  // pi-rotation: bottom i (0-based) -> top position m-1-i of the rotated
  // diagram; top j -> bottom position n-1-j.
  auto remap = [&](int p) {
    if (p < m) return n + (m - 1 - p);
    return n - 1 - (p - m);
  };
  for (const auto& [d, c] : u.terms()) {
    const auto& a = diagram(d);
    std::vector<int> pair(m + n);
    for (int i = 0; i < m + n; ++i) pair[remap(i)] = remap(a.pair[i]);
    out.add_term(intern_diagram(n, m, std::move(pair)), c);
  }
  return out;
}

TLMorphism partial_trace(const TLMorphism& u, int k) {
  if (u.src() != u.dst())
    throw std::invalid_argument("partial_trace: endomorphism required");
  if (k < 0 || k > u.src()) throw std::out_of_range("partial_trace: k");
  if (k == 0) return u;
  const Field* fd = u.field();
  const int m = u.src();
  const int res = m - k;
  Cyc delta = fd->loop_delta();
  TLMorphism out(fd, res, res);
  for (const auto& [d, c] : u.terms()) {
    const auto& a = diagram(d);
    // Connect bottom m-k+j to top m-k+j for j in 0..k-1, trace paths.
    // Remaining external points: bottom 0..res-1, top 0..res-1.
    std::vector<int> pair(2 * res, -1);
    auto is_closed = [&](int p) {
      if (p < m) return p >= res;
      return (p - m) >= res;
    };
    auto close_partner = [&](int p) {
      // the closure connects bottom res+j <-> top res+j
      if (p < m) return m + p;  // bottom -> top same offset
      return p - m;             // top -> bottom
    };
    auto ext_index = [&](int p) {
      if (p < m) return p;
      return res + (p - m);
    };
    std::vector<bool> visited(2 * m, false);
    int loops = 0;
    for (int start = 0; start < 2 * m; ++start) {
      if (visited[start] || is_closed(start)) continue;
      // walk: diagram edge, then closure edges as needed
      int cur = start;
      visited[cur] = true;
      int p = a.pair[cur];
      while (is_closed(p)) {
        visited[p] = true;
        int q = close_partner(p);
        visited[q] = true;
        p = a.pair[q];
      }
      visited[p] = true;
      pair[ext_index(start)] = ext_index(p);
      pair[ext_index(p)] = ext_index(start);
    }
    // loops among closed points
    for (int start = 0; start < 2 * m; ++start) {
      if (visited[start] || !is_closed(start)) continue;
      int cur = start;
      do {
        visited[cur] = true;
        int p = a.pair[cur];
        visited[p] = true;
        cur = close_partner(p);
      } while (cur != start);
      ++loops;
    }
    Cyc coef = c;
    for (int l = 0; l < loops; ++l) coef *= delta;
    out.add_term(intern_diagram(res, res, std::move(pair)), coef);
  }
  return out;
}

TLMorphism nested_cups(const Field* f, int k) {
  std::vector<int> pair(2 * k);
  for (int i = 0; i < k; ++i) {
    pair[i] = 2 * k - 1 - i;
    pair[2 * k - 1 - i] = i;
  }
  TLMorphism u(f, 0, 2 * k);
  u.add_term(intern_diagram(0, 2 * k, std::move(pair)), f->one());
  return u;
}

TLMorphism nested_caps(const Field* f, int k) {
  std::vector<int> pair(2 * k);
  for (int i = 0; i < k; ++i) {
    pair[i] = 2 * k - 1 - i;
    pair[2 * k - 1 - i] = i;
  }
  TLMorphism u(f, 2 * k, 0);
  u.add_term(intern_diagram(2 * k, 0, std::move(pair)), f->one());
  return u;
}

}  // namespace nsk
