#ifndef CRN_POLYNOMIAL_HPP
#define CRN_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

/// Ring variables: concentrations x_1..x_M and rate parameters k_1..k_R.
/// Rate parameters are first-class symbolic variables, never floats.
enum class VarKind : std::uint8_t { Concentration = 0, RateParam = 1 };

struct Var {
  VarKind kind;
  int index;

  static Var x(int i) { return {VarKind::Concentration, i}; }
  static Var k(int i) { return {VarKind::RateParam, i}; }

  auto operator<=>(const Var&) const = default;
};

using VarNamer = std::function<std::string(Var)>;

/// "x3" / "k2", 1-based.
std::string default_var_name(Var v);

/// Product of variables with positive integer exponents; the empty
/// monomial is 1. Factors are kept sorted by variable.
class Monomial {
 public:
  Monomial() = default;

  /// x^alpha over the concentration variables.
  static Monomial from_exponents(const std::vector<int>& alpha);

  Monomial& multiply_by(Var v, int exponent);
  Monomial operator*(const Monomial& other) const;

  int exponent_of(Var v) const;
  int total_degree() const;
  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<Var, int>> factors_;
};

/// Graded lexicographic order by variable id: total degree first, then the
/// exponent at the earliest differing variable decides.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Total assignment of exact rationals to every x and k variable.
struct RationalPoint {
  std::vector<Rational> x;
  std::vector<Rational> k;

  bool operator==(const RationalPoint&) const = default;
};

/// Sparse exact-rational multivariate polynomial. No zero coefficients are
/// stored; the term map keeps the canonical ordering, so equality is
/// structural and printing is deterministic. Immutable-style value type.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Polynomial() = default;  // zero
  static Polynomial constant(const Rational& c);
  static Polynomial variable(Var v);
  static Polynomial term(Monomial m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& c) const;

  /// Formal partial derivative.
  Polynomial derivative(Var v) const;

  Rational evaluate(const RationalPoint& point) const;

  /// Stable text form, leading term first, e.g. "-2*k2*x1*x2" or "x2^2 - 1/3".
  std::string str(const VarNamer& namer = default_var_name) const;

  bool operator==(const Polynomial&) const = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

/// M polynomials, one per species; houses g_r, the drift f and all brackets.
struct PolyVectorField {
  std::vector<Polynomial> component;

  int dimension() const { return static_cast<int>(component.size()); }
  bool is_zero() const;
  PolyVectorField& operator+=(const PolyVectorField& other);
  PolyVectorField scaled(const Rational& c) const;
  bool operator==(const PolyVectorField&) const = default;
};

PolyVectorField zero_field(int dimension);

/// Entry (m,n) = d component[m] / d x_n.
std::vector<std::vector<Polynomial>> jacobian(const PolyVectorField& vf);

/// [v,w] = w'v - v'w, exact and symbolic.
PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w);

std::vector<Rational> evaluate(const PolyVectorField& vf, const RationalPoint& point);

std::string str(const PolyVectorField& vf, const VarNamer& namer = default_var_name);

}  // namespace crn

#endif
