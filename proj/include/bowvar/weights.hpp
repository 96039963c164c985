#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "bowvar/checked_int.hpp"

namespace bowvar {

// A torus weight: the Laurent monomial u_1^{a_1}...u_m^{a_m} h^{f}.  The
// ordering (u exponents lexicographically, then h) is the canonical order all
// deterministic output relies on.
struct Weight {
  std::vector<i64> u;  // one exponent per D5 brane
  i64 h = 0;

  static Weight one(int m) { return Weight{std::vector<i64>(static_cast<size_t>(m), 0), 0}; }
  static Weight u_var(int m, int j);  // u_j, 1-based
  static Weight h_var(int m) {
    Weight w = one(m);
    w.h = 1;
    return w;
  }

  Weight times(const Weight& other) const;
  Weight reciprocal() const;
  // w -> h * w^{-1}; tangent weights of a holomorphic symplectic space pair up
  // under this involution.
  Weight symplectic_dual() const;

  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.h <=> b.h;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
};

// Substitutes u_j -> u_j * h^{sigma_j}; this maps weights computed in a
// separated diagram's coordinates back to the original torus frame.
Weight apply_twist(const Weight& w, const std::vector<int>& sigma);

// "u1^2*u3^-1*h^2" style; factors with exponent 0 are dropped, exponent 1 is
// written bare, and the trivial weight prints as "1".
std::string to_string(const Weight& w);

// An integer combination of weights: an element of the representation ring of
// the torus.  Exact integer arithmetic throughout.
class KClass {
 public:
  explicit KClass(int m) : m_(m) {}
  static KClass from_weight(const Weight& w, i64 coeff = 1);

  int arity() const { return m_; }
  const std::map<Weight, i64>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  i64 rank() const;  // sum of coefficients

  KClass& add(const Weight& w, i64 coeff);
  KClass plus(const KClass& other) const;
  KClass minus(const KClass& other) const;
  KClass times(const KClass& other) const;
  KClass scaled(i64 factor) const;
  // Negates every exponent (the dual representation).
  KClass dual() const;

  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  int m_;
  std::map<Weight, i64> terms_;
};

// Hom(a, b) = b * dual(a).
KClass hom(const KClass& a, const KClass& b);

// Expands a class into its multiset of weights (each repeated by its
// coefficient), in canonical order.  A negative coefficient means the class is
// not an honest representation; that is reported, never truncated.
std::vector<Weight> weights_of(const KClass& k);

// True when the multiset pairs up perfectly under w <-> h*w^{-1}.
bool check_self_dual(const std::vector<Weight>& weights);

}  // namespace bowvar
