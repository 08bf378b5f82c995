#include "skewnorm/quaternion.hpp"

#include <sstream>

#include "skewnorm/error.hpp"

namespace skewnorm {

Quat Quat::unit(int index) {
  Quat q;
  switch (index) {
    case 0: q.a = 1; break;
    case 1: q.b = 1; break;
    case 2: q.c = 1; break;
    case 3: q.d = 1; break;
    default: fail(ErrorCode::InternalCheckFailed, "quaternion basis index out of range");
  }
  return q;
}

const Rat& Quat::component(int index) const {
  switch (index) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    case 3: return d;
    default: fail(ErrorCode::InternalCheckFailed, "quaternion component index out of range");
  }
}

Quat Quat::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero quaternion");
  return conj().scaled(Rat(1) / norm());
}

Quat operator*(const Quat& x, const Quat& y) {
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

std::string Quat::str() const {
  static const char* names[4] = {"", "i", "j", "k"};
  std::ostringstream out;
  bool first = true;
  for (int idx = 0; idx < 4; ++idx) {
    const Rat& v = component(idx);
    if (v == 0) continue;
    Rat mag = abs(v);
    if (!first) out << (v < 0 ? " - " : " + ");
    else if (v < 0) out << "-";
    first = false;
    if (idx == 0 || mag != 1) out << to_string(mag);
    if (idx > 0) {
      if (mag != 1) out << "*";
      out << names[idx];
    }
  }
  return first ? "0" : out.str();
}

}  // namespace skewnorm
