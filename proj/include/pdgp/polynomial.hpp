#pragma once

#include <map>
#include <string>
#include <utility>

#include "pdgp/coeff.hpp"

namespace pdgp {

/// Sparse polynomial with exact coefficients keyed by an exponent type
/// (an int for one variable, a pair for two). Zero coefficients are never
/// stored, so structural equality is polynomial equality.
template <typename Exponent>
class SparsePoly {
 public:
  using exponent_type = Exponent;
  using term_map = std::map<Exponent, Coeff>;

  SparsePoly() = default;

  static SparsePoly monomial(Exponent e, Coeff c = 1) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Exponent& e, Coeff c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) { return a.scaled(-1); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(Coeff k) const {
    SparsePoly out;
    if (k.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
    return out;
  }

  /// Divides every coefficient exactly; throws if any is not divisible.
  SparsePoly divided_exactly(Coeff k) const {
    SparsePoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.exact_div(k));
    return out;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  static int add_exponents(int a, int b) { return a + b; }
  static std::pair<int, int> add_exponents(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return {a.first + b.first, a.second + b.second};
  }

  term_map terms_;
};

/// Polynomial in one variable (z unless stated otherwise).
using UniPoly = SparsePoly<int>;
/// Polynomial in (w, z); exponent pairs are (w-exponent, z-exponent).
using BiPoly = SparsePoly<std::pair<int, int>>;

inline UniPoly add(const UniPoly& p, const UniPoly& q) { return p + q; }
inline UniPoly mul(const UniPoly& p, const UniPoly& q) { return p * q; }
inline UniPoly scale(const UniPoly& p, Coeff c) { return p.scaled(c); }
inline UniPoly negate(const UniPoly& p) { return -p; }

inline UniPoly constant(Coeff c) { return UniPoly::monomial(0, c); }

template <typename E>
Coeff coefficient_sum(const SparsePoly<E>& p) {
  Coeff s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

/// Sets w = 1.
inline UniPoly eval_w_at_one(const BiPoly& p) {
  UniPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.second, c);
  return out;
}

/// Coefficient of z^z_exponent, as a polynomial in w.
inline UniPoly z_slice(const BiPoly& p, int z_exponent) {
  UniPoly out;
  for (const auto& [e, c] : p.terms())
    if (e.second == z_exponent) out.add_term(e.first, c);
  return out;
}

/// p^k for k >= 0.
inline UniPoly power(const UniPoly& p, int k) {
  UniPoly out = constant(1);
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

// ---- rendering ------------------------------------------------------------
// Terms ascend by exponent (bivariate: by (w, z)), e.g. "2 + 10*z^2 + 4*z^4".

namespace detail {

inline std::string render_power(char var, int e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

inline void append_term(std::string& out, Coeff c, const std::string& monomial) {
  const bool negative = c < Coeff(0);
  const Coeff mag = negative ? -c : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (monomial.empty())
    out += mag.to_string();
  else if (mag == Coeff(1))
    out += monomial;
  else
    out += mag.to_string() + "*" + monomial;
}

}  // namespace detail

inline std::string to_string(const UniPoly& p, char var = 'z') {
  std::string out;
  for (const auto& [e, c] : p.terms()) detail::append_term(out, c, detail::render_power(var, e));
  return out.empty() ? "0" : out;
}

inline std::string to_string(const BiPoly& p) {
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = detail::render_power('w', e.first);
    const std::string zpart = detail::render_power('z', e.second);
    if (!mono.empty() && !zpart.empty()) mono += "*";
    mono += zpart;
    detail::append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

}  // namespace pdgp
