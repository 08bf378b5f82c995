#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewnorm/delem.hpp"

namespace skewnorm {

/// Reduced form of an automorphism. Identity is algebra-neutral; Inner only
/// occurs on HQ and carries a unit whose first nonzero component is 1;
/// Mobius only occurs on QX and is never the identity map.
struct AutoCanon {
  enum class Kind { Identity, Inner, Mobius };
  Kind kind = Kind::Identity;
  Quat unit;
  skewnorm::Mobius map;
};

/// A finitely presented automorphism of H(Q) or Q(x). The presentation tree
/// is kept for printing; every query goes through the canonical form, which
/// is computed once at construction.
class AutoDesc {
 public:
  enum class Kind { Identity, Inner, GenImage, Power, Compose };

  AutoDesc();  // identity
  static AutoDesc identity() { return AutoDesc(); }
  /// r -> u r u^{-1}. Nonzero u required; on QX this is the identity.
  static AutoDesc inner(const DElem& u);
  /// The Q-automorphism of Q(x) sending x to g.
  static AutoDesc gen_image(const RatFun& g);
  static AutoDesc shift(const Rat& by) { return gen_image(Mobius::shift(by).image_of_x()); }
  static AutoDesc power(const AutoDesc& base, long k);
  /// parts[0] o parts[1] o ... (rightmost applied first).
  static AutoDesc compose(std::vector<AutoDesc> parts);
  static AutoDesc from_canon(const AutoCanon& canon);

  Kind kind() const;
  const DElem& unit() const;        // Inner
  const RatFun& image() const;      // GenImage
  const AutoDesc& base() const;     // Power
  long exponent() const;            // Power
  const std::vector<AutoDesc>& parts() const;  // Compose

  const AutoCanon& canon() const { return canon_; }
  /// Algebra the descriptor is tied to, if any.
  std::optional<AlgebraTag> algebra() const;
  bool is_identity() const { return canon_.kind == AutoCanon::Kind::Identity; }
  AutoDesc canonical() const { return from_canon(canon_); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  AutoCanon canon_;
};

DElem auto_apply(const AutoDesc& sigma, const DElem& r);
/// Images of the generating set agree.
bool auto_equal(const AutoDesc& sigma, const AutoDesc& tau);
bool auto_commute(const AutoDesc& sigma, const AutoDesc& tau);
bool is_fixed(const AutoDesc& sigma, const DElem& r);

AutoDesc compose2(const AutoDesc& outer, const AutoDesc& inner);
AutoDesc auto_pow(const AutoDesc& sigma, long k);
AutoDesc auto_inverse(const AutoDesc& sigma);
/// The inner automorphism r -> u r u^{-1} on the algebra of u.
AutoDesc inner_twist(const DElem& u);

/// Least k in [1, bound] with sigma^k inner, if any. ZeroBound when bound = 0.
std::optional<long> inner_order(const AutoDesc& sigma, long bound);
/// sigma is inner on the given algebra (QX: identity).
bool is_inner(const AutoDesc& sigma);

std::string describe(const AutoDesc& sigma);

}  // namespace skewnorm
