#include "greenfn/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "greenfn/errors.hpp"

namespace greenfn {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(mpq_class(c), 0) {}

LaurentPoly::LaurentPoly(const mpq_class& c, int exponent) {
  if (c != 0) {
    low_ = exponent;
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpq_class& c) { return LaurentPoly(c, exponent); }

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<mpq_class> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  for (auto& x : p.c_) x.canonicalize();
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

mpq_class LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

bool LaurentPoly::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x.get_den() == 1; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  std::vector<mpq_class> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
  low_ = lo;
  c_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly::from_coeffs(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpq_class& s) {
  if (s == 0) return *this = LaurentPoly();
  for (auto& x : c_) x *= s;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::substitute_neg_q() const {
  LaurentPoly r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if ((r.low_ + static_cast<int>(i)) % 2 != 0) r.c_[i] = -r.c_[i];
  }
  return r;
}

mpq_class LaurentPoly::evaluate(const mpq_class& x) const {
  if (is_zero()) return 0;
  mpq_class q0 = x;
  q0.canonicalize();
  if (q0 == 0 && low_ < 0) throw ValidationError("evaluate: pole at q = 0");
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q0 + c_[i];
  if (low_ >= 0) {
    for (int k = 0; k < low_; ++k) acc *= q0;
  } else {
    for (int k = 0; k < -low_; ++k) acc /= q0;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str() << "*q^" << (low_ + static_cast<int>(i));
  }
  return os.str();
}

namespace {

class TermScanner {
 public:
  explicit TermScanner(const std::string& s) {
    for (char ch : s) {
      if (!std::isspace(static_cast<unsigned char>(ch))) t_.push_back(ch);
    }
  }

  LaurentPoly run() {
    if (t_.empty()) fail("empty polynomial");
    LaurentPoly out;
    bool first = true;
    while (pos_ < t_.size()) {
      int sign = 1;
      if (t_[pos_] == '+' || t_[pos_] == '-') {
        sign = t_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      while (pos_ < t_.size() && (t_[pos_] == '+' || t_[pos_] == '-')) {
        if (t_[pos_] == '-') sign = -sign;
        ++pos_;
      }
      out += term(sign);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse polynomial '" + t_ + "': " + why);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    return t_.substr(start, pos_ - start);
  }

  LaurentPoly term(int sign) {
    mpq_class c = 1;
    std::string whole = digits();
    if (!whole.empty()) {
      c = mpq_class(whole);
      if (pos_ < t_.size() && t_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty() || mpz_class(den) == 0) fail("bad denominator");
        c = mpq_class(mpz_class(whole), mpz_class(den));
        c.canonicalize();
      }
      if (pos_ < t_.size() && t_[pos_] == '*') ++pos_;
    }
    int e = 0;
    if (pos_ < t_.size() && t_[pos_] == 'q') {
      ++pos_;
      e = 1;
      if (pos_ < t_.size() && t_[pos_] == '^') {
        ++pos_;
        int esign = 1;
        if (pos_ < t_.size() && t_[pos_] == '-') {
          esign = -1;
          ++pos_;
        }
        std::string ex = digits();
        if (ex.empty()) fail("missing exponent");
        e = esign * std::stoi(ex);
      }
    } else if (whole.empty()) {
      fail("expected coefficient or q");
    }
    return LaurentPoly(sign > 0 ? c : mpq_class(-c), e);
  }

  std::string t_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) { return TermScanner(text).run(); }

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  if (!a.is_polynomial() || !b.is_polynomial()) throw ValidationError("poly_divmod needs ordinary polynomials");
  int db = b.degree();
  std::vector<mpq_class> rem(static_cast<std::size_t>(std::max(a.is_zero() ? 0 : a.degree() + 1, 0)));
  for (int e = 0; e < static_cast<int>(rem.size()); ++e) rem[static_cast<std::size_t>(e)] = a.coeff(e);
  std::vector<mpq_class> bc(static_cast<std::size_t>(db + 1));
  for (int e = 0; e <= db; ++e) bc[static_cast<std::size_t>(e)] = b.coeff(e);
  int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {LaurentPoly(), a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(da - db + 1));
  for (int k = da; k >= db; --k) {
    const mpq_class& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    mpq_class f = top / bc[static_cast<std::size_t>(db)];
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  return {LaurentPoly::from_coeffs(0, std::move(quot)), LaurentPoly::from_coeffs(0, std::move(rem))};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  a *= mpq_class(1) / a.leading();
  return a;
}

RatQ::RatQ(long c) : num_(c) {}
RatQ::RatQ(const mpq_class& c) : num_(c) {}
RatQ::RatQ(LaurentPoly num) : num_(std::move(num)) {}

RatQ::RatQ(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw ValidationError("RatQ with zero denominator");
  normalize();
}

void RatQ::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Move the q-power of the denominator into the numerator.
  int shift = den_.low();
  den_ = den_.shifted(-shift);
  num_ = num_.shifted(-shift);
  if (!den_.is_constant()) {
    int nshift = num_.low();
    LaurentPoly n0 = num_.shifted(-nshift);
    LaurentPoly g = poly_gcd(n0, den_);
    if (!g.is_constant()) {
      n0 = poly_divmod(n0, g).first;
      den_ = poly_divmod(den_, g).first;
    }
    num_ = n0.shifted(nshift);
  }
  mpq_class lc = den_.leading();
  if (lc != 1) {
    mpq_class inv = mpq_class(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

const LaurentPoly& RatQ::as_laurent() const {
  if (!is_laurent()) throw ConsistencyError("expected a Laurent polynomial, got " + to_string());
  return num_;
}

RatQ RatQ::operator-() const {
  RatQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQ& RatQ::operator+=(const RatQ& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatQ& RatQ::operator-=(const RatQ& o) { return *this += -o; }

RatQ& RatQ::operator*=(const RatQ& o) {
  num_ = num_ * o.num_;
  if (o.is_laurent() && is_laurent()) {
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatQ& RatQ::operator/=(const RatQ& o) {
  if (o.is_zero()) throw ValidationError("RatQ division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatQ RatQ::substitute_neg_q() const { return RatQ(num_.substitute_neg_q(), den_.substitute_neg_q()); }

mpq_class RatQ::evaluate(const mpq_class& q0) const {
  mpq_class d = den_.evaluate(q0);
  if (d == 0) throw ValidationError("evaluate: pole at q = " + q0.get_str());
  return num_.evaluate(q0) / d;
}

std::string RatQ::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

RatQ RatQ::parse(const std::string& text) {
  std::size_t cut = text.find(")/(");
  if (cut == std::string::npos) return RatQ(LaurentPoly::parse(text));
  std::size_t open = text.find('(');
  std::size_t close = text.rfind(')');
  if (open == std::string::npos || open > cut || close == std::string::npos || close < cut + 2) {
    throw ValidationError("cannot parse rational function '" + text + "'");
  }
  LaurentPoly n = LaurentPoly::parse(text.substr(open + 1, cut - open - 1));
  LaurentPoly d = LaurentPoly::parse(text.substr(cut + 3, close - cut - 3));
  return RatQ(n, d);
}

RatQ arith(const RatQ& a, const RatQ& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw ValidationError("unknown arithmetic operation");
}

}  // namespace greenfn
