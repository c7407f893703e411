#include "liebax/scalar.hpp"

#include <cctype>
#include <sstream>

namespace liebax {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("square-free discriminant does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error("invalid rational '" + std::string(text) + "'");
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> rational_sqrt(const Rational& input) {
  Rational q = input;
  q.canonicalize();
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

SquarefreeSplit squarefree_part(const Rational& q) {
  if (sgn(q) == 0) throw Error("squarefree_part of zero");
  // q = num/den = (num*den) / den^2
  Integer m = abs(q.get_num() * q.get_den());
  Integer core = 1;
  Integer root = 1;
  for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      root *= Integer(sqrt(m));
      m = 1;
      break;
    }
    if (mpz_probab_prime_p(m.get_mpz_t(), 25) != 0) break;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) root *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= m;
  if (sgn(q) < 0) core = -core;
  Rational factor(root, q.get_den());
  factor.canonicalize();
  return {to_int64(core), factor};
}

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  return squarefree_part(Rational(d)).d == d;
}

Field::Field(std::int64_t d) : d_(d) {
  if (d != 1 && (d == 0 || !is_squarefree(d)))
    throw Error("field discriminant must be a square-free integer, got " + std::to_string(d));
}

std::string Field::to_string() const {
  return d_ == 1 ? "Q" : "Q(sqrt(" + std::to_string(d_) + "))";
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw Error("quadratic scalar needs a square-free d other than 0 and 1, got " + std::to_string(d));
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

std::int64_t Scalar::join(std::int64_t d1, std::int64_t d2) {
  if (d1 == 1) return d2;
  if (d2 == 1 || d1 == d2) return d1;
  throw Error("cannot mix scalars from Q(sqrt(" + std::to_string(d1) + ")) and Q(sqrt(" +
              std::to_string(d2) + "))");
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational Scalar::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  Rational n = norm();
  // d square-free and z != 0 imply a nonzero norm.
  if (sgn(n) == 0) throw Error("zero norm for a nonzero quadratic scalar");
  Scalar r = conjugate();
  r.a_ /= n;
  r.b_ /= n;
  r.normalize();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_rational()) {
    a_ += o.a_;
    return *this;
  }
  d_ = join(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (o.is_rational()) {
    a_ -= o.a_;
    return *this;
  }
  d_ = join(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    normalize();
    return *this;
  }
  if (is_rational()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    d_ = o.d_;
    normalize();
    return *this;
  }
  d_ = join(d_, o.d_);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw Error("division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (is_rational()) return liebax::to_string(a_);
  std::string s = sgn(a_) == 0 ? "" : liebax::to_string(a_);
  Rational b = b_;
  if (!s.empty()) {
    s += sgn(b) < 0 ? "-" : "+";
    b = abs(b);
  } else if (sgn(b) < 0) {
    s += "-";
    b = abs(b);
  }
  if (b != 1) s += liebax::to_string(b) + "*";
  return s + "sqrt(" + std::to_string(d_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar quad_inverse(const Scalar& z) { return z.inverse(); }

std::optional<Scalar> sqrt_in_field(const Scalar& z, const Field& field) {
  if (z.is_zero()) return Scalar(0);
  const std::int64_t d = field.d();
  if (z.is_rational()) {
    if (auto s = rational_sqrt(z.a())) return Scalar(*s);
    if (d == 1) return std::nullopt;
    if (auto t = rational_sqrt(z.a() / Rational(d))) return Scalar(Rational(0), *t, d);
    return std::nullopt;
  }
  if (z.d() != d) throw Error("scalar " + z.to_string() + " does not lie in " + field.to_string());
  // (x + y sqrt d)^2 = a + b sqrt d  <=>  x^2 + d y^2 = a, 2xy = b, so
  // x^2 = (a +- sqrt(a^2 - d b^2)) / 2.
  auto s = rational_sqrt(z.norm());
  if (!s) return std::nullopt;
  for (const Rational& candidate : {Rational((z.a() + *s) / 2), Rational((z.a() - *s) / 2)}) {
    auto x = rational_sqrt(candidate);
    if (!x || sgn(*x) == 0) continue;
    Rational y = z.b() / (2 * *x);
    return Scalar(*x, y, d);
  }
  return std::nullopt;
}

}  // namespace liebax
