#include "greenfn/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "greenfn/errors.hpp"

namespace greenfn {

namespace {

std::mutex& cyclo_mutex() {
  static std::mutex m;
  return m;
}

// Exact division of integer polynomials (ascending), divisor monic.
std::vector<long> divide_monic(std::vector<long> a, const std::vector<long>& b) {
  std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    long f = a[k];
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
  }
  return q;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

template <typename T>
void reduce_in_place(int N, std::vector<T>& raw) {
  const std::vector<long>& phi = cyclotomic_polynomial(N);
  std::size_t deg = phi.size() - 1;
  for (std::size_t k = raw.size(); k-- > deg;) {
    if (raw[k] == T()) continue;
    T top = raw[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) raw[k - deg + j] -= top * mpq_class(phi[j]);
    }
    raw[k] = T();
  }
  raw.resize(deg);
}

void check_same(int a, int b) {
  if (a != b) throw ValidationError("cyclotomic fields of different orders mixed");
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int N) {
  if (N < 1) throw ValidationError("cyclotomic order must be positive");
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex());
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(N)] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(cyclo_mutex());
  return cache.emplace(N, std::move(p)).first->second;
}

int euler_phi(int N) { return static_cast<int>(cyclotomic_polynomial(N).size()) - 1; }

std::vector<mpq_class> Cyclotomic::reduce(int N, std::vector<mpq_class> raw) {
  reduce_in_place(N, raw);
  return raw;
}

Cyclotomic::Cyclotomic(int N, const mpq_class& c) : n_(N), c_(static_cast<std::size_t>(euler_phi(N))) {
  c_[0] = c;
  c_[0].canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(int N, long k) {
  Cyclotomic r(N);
  std::vector<mpq_class> raw(static_cast<std::size_t>(N));
  raw[static_cast<std::size_t>(mod(k, N))] = 1;
  if (N == 1) raw.assign(1, 1);
  r.c_ = reduce(N, std::move(raw));
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same(n_, o.n_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  check_same(a.n_, b.n_);
  std::vector<mpq_class> raw(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) raw[i + j] += a.c_[i] * b.c_[j];
  }
  Cyclotomic r(a.n_);
  r.c_ = Cyclotomic::reduce(a.n_, std::move(raw));
  return r;
}

Cyclotomic Cyclotomic::galois(long t) const {
  if (std::gcd(mod(t, n_), static_cast<long>(n_)) != 1 && n_ > 1) {
    throw ValidationError("galois exponent is not a unit");
  }
  Cyclotomic r(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Cyclotomic z = root_of_unity(n_, t * static_cast<long>(i));
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] += c_[i] * z.c_[j];
  }
  return r;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    os << c_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  return first ? "0" : os.str();
}

CycloPoly::CycloPoly(int N) : n_(N), parts_(static_cast<std::size_t>(euler_phi(N))) {}

CycloPoly::CycloPoly(int N, const LaurentPoly& rational) : CycloPoly(N) { parts_[0] = rational; }

CycloPoly::CycloPoly(const Cyclotomic& c, const LaurentPoly& p) : CycloPoly(c.order()) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (c.coeffs()[i] != 0) parts_[i] = p * LaurentPoly(c.coeffs()[i]);
  }
}

bool CycloPoly::is_zero() const {
  for (const auto& p : parts_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool CycloPoly::is_rational() const {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (!parts_[i].is_zero()) return false;
  }
  return true;
}

CycloPoly& CycloPoly::operator+=(const CycloPoly& o) {
  check_same(n_, o.n_);
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += o.parts_[i];
  return *this;
}

CycloPoly& CycloPoly::operator-=(const CycloPoly& o) {
  check_same(n_, o.n_);
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] -= o.parts_[i];
  return *this;
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
  check_same(a.n_, b.n_);
  std::vector<LaurentPoly> raw(a.parts_.size() + b.parts_.size() - 1);
  for (std::size_t i = 0; i < a.parts_.size(); ++i) {
    if (a.parts_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.parts_.size(); ++j) raw[i + j] += a.parts_[i] * b.parts_[j];
  }
  reduce_in_place(a.n_, raw);
  CycloPoly r(a.n_);
  r.parts_ = std::move(raw);
  return r;
}

CycloPoly operator*(const CycloPoly& a, const LaurentPoly& p) {
  CycloPoly r = a;
  for (auto& part : r.parts_) part = part * p;
  return r;
}

CycloPoly CycloPoly::substitute_neg_q() const {
  CycloPoly r = *this;
  for (auto& part : r.parts_) part = part.substitute_neg_q();
  return r;
}

CycloPoly CycloPoly::galois(long t) const {
  CycloPoly r(n_);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].is_zero()) continue;
    r += CycloPoly(Cyclotomic::root_of_unity(n_, t * static_cast<long>(i)), parts_[i]);
  }
  return r;
}

Cyclotomic CycloPoly::coefficient(int e) const {
  Cyclotomic c(n_);
  for (std::size_t i = 0; i < parts_.size(); ++i) c.c_[i] = parts_[i].coeff(e);
  return c;
}

Cyclotomic CycloPoly::evaluate(const mpq_class& q0) const {
  Cyclotomic c(n_);
  for (std::size_t i = 0; i < parts_.size(); ++i) c.c_[i] = parts_[i].evaluate(q0);
  return c;
}

int CycloPoly::low() const {
  bool any = false;
  int lo = 0;
  for (const auto& p : parts_) {
    if (p.is_zero()) continue;
    lo = any ? std::min(lo, p.low()) : p.low();
    any = true;
  }
  return lo;
}

int CycloPoly::high() const {
  bool any = false;
  int hi = 0;
  for (const auto& p : parts_) {
    if (p.is_zero()) continue;
    hi = any ? std::max(hi, p.high()) : p.high();
    any = true;
  }
  return hi;
}

std::string CycloPoly::to_string() const {
  if (is_rational()) return RatQ(parts_[0]).to_string();
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int e = high(); e >= low(); --e) {
    Cyclotomic c = coefficient(e);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (c.is_rational()) {
      os << c.rational_part().get_str();
    } else {
      os << "(" << c.to_string() << ")";
    }
    os << "*q^" << e;
  }
  os << ")/(1*q^0)";
  return os.str();
}

}  // namespace greenfn
