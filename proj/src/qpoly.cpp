#include "skewnorm/qpoly.hpp"

#include <sstream>

#include "skewnorm/error.hpp"

namespace skewnorm {

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }

QPoly QPoly::x() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat QPoly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(c_.size())) return Rat(0);
  return c_[static_cast<size_t>(k)];
}

Rat QPoly::eval(const Rat& at) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::scaled(const Rat& s) const {
  if (s == 0) return {};
  QPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rat(1) / lead());
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(static_cast<size_t>(a.degree() - b.degree() + 1));
  const Rat inv_lead = Rat(1) / b.lead();
  const auto& bc = b.coeffs();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    const Rat q = rem[static_cast<size_t>(k + b.degree())] * inv_lead;
    quo[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (size_t j = 0; j < bc.size(); ++j) rem[static_cast<size_t>(k) + j] -= q * bc[j];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

namespace {

using ZPoly = std::vector<BigInt>;

// Clears denominators and removes the content; sign of the lead kept positive.
ZPoly primitive_part(const QPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, BigInt(c.get_den()));
  ZPoly z;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    z.push_back(BigInt(c.get_num() * (l / c.get_den())));
    g = gcd(g, z.back());
  }
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

void trim(ZPoly& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
}

// Pseudo-remainder of a by b, made primitive.
ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const BigInt la = a.back(), lb = b.back();
    const size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  if (a.empty()) return a;
  BigInt g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Degree of gcd(a, b) mod p, or -1 when p divides a leading coefficient.
long modular_gcd_degree(const ZPoly& a, const ZPoly& b, unsigned long p) {
  auto reduce = [p](const ZPoly& z) {
    std::vector<unsigned long> out;
    for (const auto& c : z) {
      BigInt r = c % p;
      if (r < 0) r += p;
      out.push_back(r.get_ui());
    }
    return out;
  };
  auto u = reduce(a), v = reduce(b);
  if (u.back() == 0 || v.back() == 0) return -1;
  auto inv = [p](unsigned long x) {
    unsigned long r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<unsigned long>((unsigned __int128)r * x % p);
      x = static_cast<unsigned long>((unsigned __int128)x * x % p);
      e >>= 1;
    }
    return r;
  };
  auto strip = [](std::vector<unsigned long>& w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
  };
  while (!v.empty()) {
    const unsigned long il = inv(v.back());
    while (u.size() >= v.size()) {
      const unsigned long q = static_cast<unsigned long>((unsigned __int128)u.back() * il % p);
      const size_t shift = u.size() - v.size();
      for (size_t j = 0; j < v.size(); ++j)
        u[shift + j] = static_cast<unsigned long>((u[shift + j] + p - (unsigned __int128)q * v[j] % p) % p);
      strip(u);
    }
    std::swap(u, v);
  }
  return static_cast<long>(u.size()) - 1;
}

}  // namespace

QPoly gcd(QPoly a, QPoly b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return QPoly::constant(1);
  ZPoly za = primitive_part(a), zb = primitive_part(b);
  for (unsigned long p : {2147483647UL, 2147483629UL, 2147483587UL}) {
    const long dg = modular_gcd_degree(za, zb, p);
    if (dg == 0) return QPoly::constant(1);
    if (dg > 0) break;
  }
  if (za.size() < zb.size()) std::swap(za, zb);
  while (!zb.empty()) {
    ZPoly r = primitive_prem(za, zb);
    za = std::move(zb);
    zb = std::move(r);
  }
  std::vector<Rat> c;
  for (const auto& x : za) c.emplace_back(x);
  return QPoly(std::move(c)).monic();
}

QPoly pow(const QPoly& p, unsigned k) {
  QPoly result = QPoly::constant(1), base = p;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::string QPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    if (k == 0 || mag != 1) out << to_string(mag);
    if (k > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace skewnorm
