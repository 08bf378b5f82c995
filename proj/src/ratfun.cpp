#include "skewnorm/ratfun.hpp"

#include "skewnorm/error.hpp"

namespace skewnorm {

Mobius Mobius::make(Rat a, Rat b, Rat c, Rat d) {
  if (a * d - b * c == 0) fail(ErrorCode::MalformedAutomorphism, "singular Mobius map");
  Rat s = c != 0 ? c : d;
  return {a / s, b / s, c / s, d / s};
}

Mobius Mobius::from_ratfun(const RatFun& g) {
  const QPoly& n = g.num();
  const QPoly& d = g.den();
  if (n.degree() > 1 || d.degree() > 1)
    fail(ErrorCode::MalformedAutomorphism, "image of x is not a Mobius expression: " + g.str());
  return make(n.coeff(1), n.coeff(0), d.coeff(1), d.coeff(0));
}

RatFun Mobius::image_of_x() const {
  return RatFun(QPoly({b, a}), QPoly({d, c}));
}

Mobius compose(const Mobius& l, const Mobius& r) {
  return Mobius::make(l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                      l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d);
}

Mobius inverse(const Mobius& m) { return Mobius::make(m.d, -m.b, -m.c, m.a); }

Mobius pow(const Mobius& m, long k) {
  Mobius base = k < 0 ? inverse(m) : m;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Mobius result = Mobius::identity();
  while (e) {
    if (e & 1ul) result = compose(result, base);
    e >>= 1ul;
    if (e) base = compose(base, base);
  }
  return result;
}

RatFun::RatFun(QPoly num, QPoly den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  if (den.degree() == 0) {
    num_ = num.scaled(Rat(1) / den.lead());
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Rat lead = den.lead();
  num_ = num.scaled(Rat(1) / lead);
  den_ = den.monic();
}

std::optional<Rat> RatFun::as_rational() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatFun(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatFun(a.num_ * b.num_);
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in Q(x)");
  return RatFun(den_, num_);
}

namespace {

// p(m(x)) * (c x + d)^deg p, as a polynomial.
QPoly homogenized_image(const QPoly& p, const Mobius& m, long deg) {
  const QPoly top({m.b, m.a});
  const QPoly bottom({m.d, m.c});
  QPoly acc;
  for (long k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    acc = acc + (pow(top, static_cast<unsigned>(k)) *
                 pow(bottom, static_cast<unsigned>(deg - k))).scaled(p.coeff(k));
  }
  return acc;
}

}  // namespace

RatFun RatFun::substitute(const Mobius& m) const {
  if (m.is_identity() || is_constant()) return *this;
  if (m.c == 0) {
    // Affine maps keep polynomials polynomial.
    const QPoly lin({m.b / m.d, m.a / m.d});
    auto image = [&](const QPoly& p) {
      QPoly acc;
      for (long k = p.degree(); k >= 0; --k) acc = acc * lin + QPoly::constant(p.coeff(k));
      return acc;
    };
    return RatFun(image(num_), image(den_));
  }
  const long dn = num_.degree(), dd = den_.degree();
  QPoly n = homogenized_image(num_, m, dn);
  QPoly d = homogenized_image(den_, m, dd);
  const QPoly bottom({m.d, m.c});
  if (dn > dd) d = d * pow(bottom, static_cast<unsigned>(dn - dd));
  else if (dd > dn) n = n * pow(bottom, static_cast<unsigned>(dd - dn));
  return RatFun(std::move(n), std::move(d));
}

std::string RatFun::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace skewnorm
