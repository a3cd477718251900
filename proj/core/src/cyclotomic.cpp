#include "nskein/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace nsk {

namespace {

// Divide a by b in Z[x], both monic-leading exact division. Used only for
// the cyclotomic polynomial recursion, where division is exact.
std::vector<mpz_class> exact_poly_div(std::vector<mpz_class> a,
                                      const std::vector<mpz_class>& b) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  std::vector<mpz_class> q(da - db + 1, 0);
  for (int d = da; d >= db; --d) {
    mpz_class coef = a[d] / b[db];
    q[d - db] = coef;
    if (coef != 0) {
      for (int j = 0; j <= db; ++j) a[d - db + j] -= coef * b[j];
    }
  }
  return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = exact_poly_div(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

// ---------------------------------------------------------------------------
// Cyc

Cyc::Cyc(const Field* f, std::vector<mpq_class> coeffs)
    : field_(f), c_(std::move(coeffs)) {}

bool Cyc::is_zero() const {
  if (!field_) return true;
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::operator==(const Cyc& o) const {
  if (field_ == nullptr || o.field_ == nullptr) return is_zero() && o.is_zero();
  if (field_ != o.field_)
    throw std::invalid_argument("Cyc: mixed fields in comparison");
  return c_ == o.c_;
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  r += o;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  if (field_ != o.field_) throw std::invalid_argument("Cyc: mixed fields");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc& Cyc::operator-=(const Cyc& o) {
  *this += -o;
  return *this;
}

Cyc Cyc::operator-() const {
  if (is_zero()) return *this;
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {
// True if only the degree-0 coefficient may be nonzero.
inline bool is_constant_vec(const std::vector<mpq_class>& c) {
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}
}  // namespace

Cyc Cyc::operator*(const Cyc& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  if (field_ != o.field_) throw std::invalid_argument("Cyc: mixed fields");
  const int n = field_->phi();
  // Rational-constant fast path: no convolution, no reduction.
  if (is_constant_vec(c_)) {
    if (c_[0] == 1) return o;
    Cyc out = o;
    for (auto& x : out.c_)
      if (x != 0) x *= c_[0];
    return out;
  }
  if (is_constant_vec(o.c_)) {
    if (o.c_[0] == 1) return *this;
    Cyc out = *this;
    for (auto& x : out.c_)
      if (x != 0) x *= o.c_[0];
    return out;
  }
  std::vector<mpq_class> raw(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      raw[i + j] += c_[i] * o.c_[j];
    }
  }
  return Cyc(field_, field_->reduce(std::move(raw)));
}

Cyc& Cyc::operator*=(const Cyc& o) {
  *this = *this * o;
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
  // Extended Euclid in Q[x] against Phi_{4r}. Small degrees, exact.
  const int n = field_->phi();
  std::vector<mpq_class> a(n + 1);  // Phi
  {
    auto phi_int = cyclotomic_polynomial(4 * field_->level());
    for (int i = 0; i <= n; ++i) a[i] = mpq_class(phi_int[i]);
  }
  std::vector<mpq_class> b = c_;
  while (!b.empty() && b.back() == 0) b.pop_back();
  // Invariant: s_a * this = a (mod Phi), s_b * this = b (mod Phi)
  std::vector<mpq_class> s_a{}, s_b{mpq_class(1)};
  auto deg = [](const std::vector<mpq_class>& p) {
    return static_cast<int>(p.size()) - 1;
  };
  while (!b.empty()) {
    // divide a by b: a = q*b + rem
    std::vector<mpq_class> rem = a, q(std::max(0, deg(a) - deg(b)) + 1, 0);
    for (int d = deg(rem); d >= deg(b) && d >= 0; --d) {
      if (rem[d] == 0) continue;
      mpq_class coef = rem[d] / b[deg(b)];
      q[d - deg(b)] = coef;
      for (int j = 0; j <= deg(b); ++j) rem[d - deg(b) + j] -= coef * b[j];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s_rem = s_a - q * s_b
    std::vector<mpq_class> s_rem = s_a;
    s_rem.resize(std::max(s_a.size(), q.size() + s_b.size()), 0);
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s_b.size(); ++j) s_rem[i + j] -= q[i] * s_b[j];
    }
    while (!s_rem.empty() && s_rem.back() == 0) s_rem.pop_back();
    a = std::move(b);
    b = std::move(rem);
    s_a = std::move(s_b);
    s_b = std::move(s_rem);
  }
  // Now a is the gcd; it must be a nonzero constant, and s_a * this = a.
  if (a.empty() || deg(a) != 0 || a[0] == 0)
    throw std::domain_error("Cyc: inverse failed (non-unit gcd)");
  std::vector<mpq_class> raw(2 * n - 1, 0);
  for (size_t i = 0; i < s_a.size() && i < raw.size(); ++i)
    raw[i] = s_a[i] / a[0];
  return Cyc(field_, field_->reduce(std::move(raw)));
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc acc = field_ ? field_->one() : Cyc();
  Cyc base = *this;
  if (!field_) {
    if (e == 0) throw std::domain_error("Cyc: 0^0 of detached zero");
    return *this;
  }
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::complex<double> Cyc::to_complex() const {
  if (!field_) return {0.0, 0.0};
  return field_->eval_complex(*this);
}

std::vector<std::string> Cyc::coeff_strings() const {
  std::vector<std::string> out;
  for (const auto& x : c_) {
    mpq_class y = x;
    y.canonicalize();
    out.push_back(y.get_str());
  }
  return out;
}

std::string Cyc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class y = c_[i];
    y.canonicalize();
    if (!first) os << " + ";
    os << y.get_str();
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Field

Field::Field(int r) : r_(r), fourr_(4 * r) {
  if (r < 3 || r % 2 == 0)
    throw std::invalid_argument("Field: level must be odd and >= 3");
  auto phi_poly = cyclotomic_polynomial(fourr_);
  phi_ = static_cast<int>(phi_poly.size()) - 1;

  // Rows for x^{phi}, ..., x^{2 phi - 2} reduced mod Phi.
  // x^phi = -sum_{j<phi} phi_poly[j] x^j (Phi is monic).
  phi_poly_rows_.resize(phi_ - 1);
  std::vector<mpq_class> cur(phi_);
  for (int j = 0; j < phi_; ++j) cur[j] = mpq_class(-phi_poly[j]);
  phi_poly_rows_[0] = cur;
  for (int d = 1; d < phi_ - 1; ++d) {
    std::vector<mpq_class> nxt(phi_, 0);
    // multiply cur by x
    mpq_class top = cur[phi_ - 1];
    for (int j = phi_ - 1; j > 0; --j) nxt[j] = cur[j - 1];
    nxt[0] = 0;
    if (top != 0)
      for (int j = 0; j < phi_; ++j) nxt[j] += top * phi_poly_rows_[0][j];
    phi_poly_rows_[d] = nxt;
    cur = std::move(nxt);
  }

  // zeta^k table for k in 0..4r-1.
  zeta_pow_table_.resize(fourr_);
  for (int k = 0; k < fourr_; ++k) {
    std::vector<mpq_class> raw(2 * phi_ - 1, 0);
    if (k < static_cast<int>(raw.size())) {
      raw[k] = 1;
      zeta_pow_table_[k] = reduce(std::move(raw));
    } else {
      // zeta^k = zeta^{k-1} * zeta
      std::vector<mpq_class> prev = zeta_pow_table_[k - 1];
      std::vector<mpq_class> shifted(2 * phi_ - 1, 0);
      for (int j = 0; j < phi_; ++j) shifted[j + 1] = prev[j];
      zeta_pow_table_[k] = reduce(std::move(shifted));
    }
  }

  zeta_complex_.resize(phi_);
  for (int j = 0; j < phi_; ++j) {
    double ang = 2.0 * std::numbers::pi * j / fourr_;
    zeta_complex_[j] = {std::cos(ang), std::sin(ang)};
  }

  // Gauss sum and sqrt(r) branch.
  std::vector<mpq_class> acc(phi_, 0);
  for (int k = 0; k < r_; ++k) {
    long e = (4L * k * k) % fourr_;  // q^{k^2} = zeta^{4 k^2}
    for (int j = 0; j < phi_; ++j) acc[j] += zeta_pow_table_[e][j];
  }
  gauss_ = Cyc(this, acc);
  verify_gauss_branch();
}

void Field::verify_gauss_branch() const {
  // G^2 = (-1)^{(r-1)/2} r exactly.
  Cyc g2 = gauss_ * gauss_;
  Cyc expect = from_int(((r_ - 1) / 2) % 2 == 0 ? r_ : -r_);
  if (!(g2 == expect))
    throw std::runtime_error("Field: Gauss sum square check failed");
  // Pick unit u in {1,-1,i,-i} with u*G close to +sqrt(r).
  double target = std::sqrt(static_cast<double>(r_));
  std::complex<double> gf = eval_complex(gauss_);
  const Cyc units[4] = {one(), -one(), i_pow(1), i_pow(3)};
  for (const Cyc& u : units) {
    std::complex<double> v = eval_complex(u) * gf;
    if (std::abs(v.real() - target) < 1e-9 && std::abs(v.imag()) < 1e-9) {
      const_cast<Field*>(this)->sqrt_r_ = u * gauss_;
      return;
    }
  }
  throw std::runtime_error("Field: no Gauss branch matches +sqrt(r)");
}

FieldPtr Field::make(int r) { return FieldPtr(new Field(r)); }

std::vector<mpq_class> Field::reduce(std::vector<mpq_class> raw) const {
  std::vector<mpq_class> out(phi_, 0);
  int top = static_cast<int>(raw.size()) - 1;
  if (top > 2 * phi_ - 2)
    throw std::invalid_argument("Field::reduce: degree too large");
  for (int d = 0; d <= top && d < phi_; ++d) out[d] = raw[d];
  for (int d = phi_; d <= top; ++d) {
    if (raw[d] == 0) continue;
    const auto& row = phi_poly_rows_[d - phi_];
    for (int j = 0; j < phi_; ++j) out[j] += raw[d] * row[j];
  }
  for (auto& x : out) x.canonicalize();
  return out;
}

Cyc Field::zero() const { return Cyc(this, std::vector<mpq_class>(phi_, 0)); }

Cyc Field::one() const {
  std::vector<mpq_class> c(phi_, 0);
  c[0] = 1;
  return Cyc(this, c);
}

Cyc Field::from_int(long n) const {
  std::vector<mpq_class> c(phi_, 0);
  c[0] = n;
  return Cyc(this, c);
}

Cyc Field::from_rational(const mpq_class& q) const {
  std::vector<mpq_class> c(phi_, 0);
  c[0] = q;
  return Cyc(this, c);
}

Cyc Field::zeta_pow(long k) const {
  long e = k % fourr_;
  if (e < 0) e += fourr_;
  return Cyc(this, zeta_pow_table_[e]);
}

Cyc Field::q_pow(long k) const { return zeta_pow(4 * (k % r_)); }

Cyc Field::i_pow(long k) const {
  long e = k % 4;
  if (e < 0) e += 4;
  return zeta_pow(e * r_);
}

Cyc Field::loop_delta() const { return -(q_pow(1) + q_pow(-1)); }

Cyc Field::qbrace(long k) const { return q_pow(k) - q_pow(-k); }

Cyc Field::qbrace_prime(long k) const { return q_pow(k) + q_pow(-k); }

Cyc Field::qint(long k) const {
  // [k] = {k}/{1}; exact division avoided via the closed Laurent form
  // [k] = q^{k-1} + q^{k-3} + ... + q^{1-k} for k >= 0, [-k] = -[k].
  if (k == 0) return zero();
  if (k < 0) return -qint(-k);
  Cyc acc = zero();
  for (long j = 0; j < k; ++j) acc += q_pow(k - 1 - 2 * j);
  return acc;
}

Cyc Field::qfact(long k) const {
  if (k < 0 || k > r_ - 1)
    throw std::out_of_range("qfact: k must satisfy 0 <= k <= r-1");
  Cyc acc = one();
  for (long j = 1; j <= k; ++j) acc *= qint(j);
  return acc;
}

Cyc Field::qint_sub(long k, long a) const {
  long am = a % r_;
  if (am == 0) return from_int(k);
  return qint(a * k) / qint(a);
}

Cyc Field::qbrace_prime_sub(long k, long a) const { return qbrace_prime(a * k); }

Cyc Field::gauss_sum() const { return gauss_; }

Cyc Field::sqrt_r() const { return sqrt_r_; }

std::pair<Cyc, Cyc> Field::gauss_constants() const {
  Cyc r32 = from_int(r_) * sqrt_r_;
  Cyc dp = i_pow(-(r_ - 1) / 2) * r32 * q_pow((r_ - 3) / 2);
  Cyc dm = i_pow((r_ - 1) / 2) * r32 * q_pow((r_ + 3) / 2);
  return {dp, dm};
}

std::pair<Cyc, Cyc> Field::gauss_constants_scaled() const {
  auto [dp, dm] = gauss_constants();
  Cyc denom = from_int(r_) * qbrace(1);
  return {dp / denom, -(dm / denom)};
}

std::complex<double> Field::eval_complex(const Cyc& x) const {
  std::complex<double> acc{0.0, 0.0};
  const auto& c = x.coeffs();
  for (int j = 0; j < phi_ && j < static_cast<int>(c.size()); ++j) {
    if (c[j] == 0) continue;
    acc += c[j].get_d() * zeta_complex_[j];
  }
  return acc;
}

}  // namespace nsk
