#include "bowvar/weights.hpp"

#include <stdexcept>

#include "bowvar/error.hpp"

namespace bowvar {

Weight Weight::u_var(int m, int j) {
  if (j < 1 || j > m) throw std::logic_error("u variable index out of range");
  Weight w = one(m);
  w.u[static_cast<size_t>(j - 1)] = 1;
  return w;
}

Weight Weight::times(const Weight& other) const {
  if (u.size() != other.u.size()) throw std::logic_error("weight arity mismatch");
  Weight out = *this;
  for (size_t j = 0; j < u.size(); ++j) out.u[j] = checked_add(out.u[j], other.u[j]);
  out.h = checked_add(out.h, other.h);
  return out;
}

Weight Weight::reciprocal() const {
  Weight out = *this;
  for (i64& e : out.u) e = checked_negate(e);
  out.h = checked_negate(out.h);
  return out;
}

Weight Weight::symplectic_dual() const {
  Weight out = reciprocal();
  out.h = checked_add(out.h, 1);
  return out;
}

Weight apply_twist(const Weight& w, const std::vector<int>& sigma) {
  if (sigma.size() != w.u.size()) {
    throw Error(ErrorKind::SigmaLengthMismatch,
                "twist vector has " + std::to_string(sigma.size()) + " entries, weight has " +
                    std::to_string(w.u.size()) + " u variables");
  }
  Weight out = w;
  for (size_t j = 0; j < sigma.size(); ++j) {
    out.h = checked_add(out.h, checked_mul(w.u[j], sigma[j]));
  }
  return out;
}

std::string to_string(const Weight& w) {
  std::string out;
  auto append_factor = [&out](const std::string& name, i64 exp) {
    if (exp == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (exp != 1) out += "^" + std::to_string(exp);
  };
  for (size_t j = 0; j < w.u.size(); ++j) {
    append_factor("u" + std::to_string(j + 1), w.u[j]);
  }
  append_factor("h", w.h);
  return out.empty() ? "1" : out;
}

KClass KClass::from_weight(const Weight& w, i64 coeff) {
  KClass k(static_cast<int>(w.u.size()));
  k.add(w, coeff);
  return k;
}

i64 KClass::rank() const {
  i64 total = 0;
  for (const auto& [w, c] : terms_) total = checked_add(total, c);
  return total;
}

KClass& KClass::add(const Weight& w, i64 coeff) {
  if (static_cast<int>(w.u.size()) != m_) throw std::logic_error("KClass arity mismatch");
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(w, 0);
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
  return *this;
}

KClass KClass::plus(const KClass& other) const {
  if (m_ != other.m_) throw std::logic_error("KClass arity mismatch");
  KClass out = *this;
  for (const auto& [w, c] : other.terms_) out.add(w, c);
  return out;
}

KClass KClass::minus(const KClass& other) const {
  if (m_ != other.m_) throw std::logic_error("KClass arity mismatch");
  KClass out = *this;
  for (const auto& [w, c] : other.terms_) out.add(w, checked_negate(c));
  return out;
}

KClass KClass::times(const KClass& other) const {
  if (m_ != other.m_) throw std::logic_error("KClass arity mismatch");
  KClass out(m_);
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : other.terms_) {
      out.add(wa.times(wb), checked_mul(ca, cb));
    }
  }
  return out;
}

KClass KClass::scaled(i64 factor) const {
  KClass out(m_);
  for (const auto& [w, c] : terms_) out.add(w, checked_mul(c, factor));
  return out;
}

KClass KClass::dual() const {
  KClass out(m_);
  for (const auto& [w, c] : terms_) out.add(w.reciprocal(), c);
  return out;
}

KClass hom(const KClass& a, const KClass& b) { return b.times(a.dual()); }

std::vector<Weight> weights_of(const KClass& k) {
  std::vector<Weight> out;
  for (const auto& [w, c] : k.terms()) {
    if (c < 0) {
      throw Error(ErrorKind::NegativeCoefficient,
                  "weight " + to_string(w) + " has coefficient " + std::to_string(c));
    }
    for (i64 i = 0; i < c; ++i) out.push_back(w);
  }
  return out;
}

bool check_self_dual(const std::vector<Weight>& weights) {
  std::map<Weight, i64> count;
  for (const Weight& w : weights) ++count[w];
  for (const auto& [w, c] : count) {
    auto it = count.find(w.symplectic_dual());
    if (it == count.end() || it->second != c) return false;
  }
  return true;
}

}  // namespace bowvar
