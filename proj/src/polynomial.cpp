#include "crn/polynomial.hpp"

#include <stdexcept>

namespace crn {

std::string default_var_name(Var v) {
  return (v.kind == VarKind::Concentration ? "x" : "k") + std::to_string(v.index + 1);
}

Monomial Monomial::from_exponents(const std::vector<int>& alpha) {
  Monomial m;
  for (int i = 0; i < static_cast<int>(alpha.size()); ++i)
    if (alpha[i] != 0) m.factors_.emplace_back(Var::x(i), alpha[i]);
  return m;
}

Monomial& Monomial::multiply_by(Var v, int exponent) {
  if (exponent <= 0) throw std::invalid_argument("monomial exponents must be positive");
  auto it = factors_.begin();
  while (it != factors_.end() && it->first < v) ++it;
  if (it != factors_.end() && it->first == v)
    it->second += exponent;
  else
    factors_.insert(it, {v, exponent});
  return *this;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto ia = factors_.begin();
  auto ib = other.factors_.begin();
  while (ia != factors_.end() || ib != other.factors_.end()) {
    if (ib == other.factors_.end() || (ia != factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

int Monomial::exponent_of(Var v) const {
  for (const auto& [var, exp] : factors_)
    if (var == v) return exp;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [var, exp] : factors_) d += exp;
  return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree();
  int db = b.total_degree();
  if (da != db) return da < db;
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  while (ia != a.factors().end() && ib != b.factors().end()) {
    if (ia->first != ib->first) {
      // The side holding the earlier variable has a positive exponent where
      // the other has zero, which ranks it higher under graded lex.
      return ib->first < ia->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;  // equal degree with an identical prefix forces equality
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(Var v) {
  Polynomial p;
  p.add_term(Monomial().multiply_by(v, 1), Rational(1));
  return p;
}

Polynomial Polynomial::term(Monomial m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

int Polynomial::total_degree() const {
  // The map is graded, so the last term carries the total degree.
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Polynomial Polynomial::derivative(Var v) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    int exp = m.exponent_of(v);
    if (exp == 0) continue;
    Monomial reduced;
    for (const auto& [var, e] : m.factors()) {
      if (var == v) {
        if (e > 1) reduced.multiply_by(var, e - 1);
      } else {
        reduced.multiply_by(var, e);
      }
    }
    out.add_term(reduced, c * exp);
  }
  return out;
}

Rational Polynomial::evaluate(const RationalPoint& point) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [var, exp] : m.factors()) {
      const std::vector<Rational>& slot =
          (var.kind == VarKind::Concentration) ? point.x : point.k;
      if (var.index < 0 || var.index >= static_cast<int>(slot.size()))
        throw std::out_of_range("evaluation point does not bind " + default_var_name(var));
      value *= pow(slot[var.index], static_cast<unsigned>(exp));
    }
    sum += value;
  }
  return sum;
}

std::string Polynomial::str(const VarNamer& namer) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Leading (highest) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational abs_c = negative ? Rational(-c) : c;
    std::string factors;
    // Rate parameters print before concentrations: -2*k2*x1*x2.
    for (auto kind : {VarKind::RateParam, VarKind::Concentration}) {
      for (const auto& [var, exp] : m.factors()) {
        if (var.kind != kind) continue;
        if (!factors.empty()) factors += "*";
        factors += namer(var);
        if (exp > 1) factors += "^" + std::to_string(exp);
      }
    }
    if (factors.empty()) {
      out += to_string(abs_c);
    } else if (abs_c == 1) {
      out += factors;
    } else {
      out += to_string(abs_c) + "*" + factors;
    }
  }
  return out;
}

bool PolyVectorField::is_zero() const {
  for (const Polynomial& p : component)
    if (!p.is_zero()) return false;
  return true;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& other) {
  if (component.size() != other.component.size())
    throw std::invalid_argument("vector field dimension mismatch");
  for (std::size_t m = 0; m < component.size(); ++m) component[m] += other.component[m];
  return *this;
}

PolyVectorField PolyVectorField::scaled(const Rational& c) const {
  PolyVectorField out;
  out.component.reserve(component.size());
  for (const Polynomial& p : component) out.component.push_back(p.scaled(c));
  return out;
}

PolyVectorField zero_field(int dimension) {
  return PolyVectorField{std::vector<Polynomial>(static_cast<std::size_t>(dimension))};
}

std::vector<std::vector<Polynomial>> jacobian(const PolyVectorField& vf) {
  const int dim = vf.dimension();
  std::vector<std::vector<Polynomial>> j(dim, std::vector<Polynomial>(dim));
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) j[m][n] = vf.component[m].derivative(Var::x(n));
  return j;
}

PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w) {
  const int dim = v.dimension();
  if (dim != w.dimension())
    throw std::invalid_argument("lie_bracket: vector field dimension mismatch");
  auto jv = jacobian(v);
  auto jw = jacobian(w);
  PolyVectorField out = zero_field(dim);
  for (int m = 0; m < dim; ++m) {
    Polynomial sum;
    for (int n = 0; n < dim; ++n) {
      sum += jw[m][n] * v.component[n];
      sum -= jv[m][n] * w.component[n];
    }
    out.component[m] = std::move(sum);
  }
  return out;
}

std::vector<Rational> evaluate(const PolyVectorField& vf, const RationalPoint& point) {
  std::vector<Rational> out;
  out.reserve(vf.component.size());
  for (const Polynomial& p : vf.component) out.push_back(p.evaluate(point));
  return out;
}

std::string str(const PolyVectorField& vf, const VarNamer& namer) {
  std::string out = "(";
  for (std::size_t m = 0; m < vf.component.size(); ++m) {
    if (m) out += ", ";
    out += vf.component[m].str(namer);
  }
  return out + ")";
}

}  // namespace crn
