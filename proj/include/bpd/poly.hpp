#pragma once

// Exact polynomials in two alphabets x_1, x_2, ... and y_1, y_2, ...

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace bpd {

using Coefficient = boost::multiprecision::cpp_int;

/// Exponent vectors with trailing zeros trimmed, so equal monomials
/// compare equal and the default ordering is padded lexicographic order
/// (x exponents first, then y exponents).
struct Monomial {
  std::vector<int> x;
  std::vector<int> y;

  Monomial() = default;
  Monomial(std::vector<int> x_exponents, std::vector<int> y_exponents = {});

  int degree() const;
  int x_exponent(int i) const;
  int y_exponent(int j) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

class SparsePoly {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  SparsePoly() = default;
  SparsePoly(Coefficient constant);  // NOLINT(google-explicit-constructor)
  SparsePoly(const Monomial& m, Coefficient c = 1);

  static SparsePoly x(int i);
  static SparsePoly y(int j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const Monomial& m) const;
  /// Adds c * m in place; drops the term if it cancels.
  void add_term(const Monomial& m, const Coefficient& c);

  /// Largest index of an x (resp. y) variable that occurs.
  int x_vars() const;
  int y_vars() const;
  bool has_y() const { return y_vars() > 0; }
  bool is_homogeneous() const;
  /// Degree of the leading-degree part; -1 for the zero polynomial.
  int degree() const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const SparsePoly& other);
  SparsePoly operator-() const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

  bool operator==(const SparsePoly&) const = default;

 private:
  Terms terms_;
};

/// s_i f: exchange x_i and x_{i+1}.
SparsePoly swap_x(const SparsePoly& f, int i);
/// Sets every y_j to zero.
SparsePoly drop_y(const SparsePoly& f);
/// Keeps only terms in x_1..x_m (and no y).
SparsePoly restrict_x(const SparsePoly& f, int m);
/// Keeps only terms of total degree d.
SparsePoly homogeneous_part(const SparsePoly& f, int d);
/// Symmetric under every swap of x_i, x_{i+1} with i < m.
bool is_symmetric(const SparsePoly& f, int m);

/// (f - s_i f) / (x_i - x_{i+1}) by exact division; InternalError if the
/// division leaves a remainder.
SparsePoly divided_difference(const SparsePoly& f, int i);

/// Terms by descending total degree, then descending lexicographic
/// exponent; x variables print before y variables, e.g. `x1^2*x2 - x1*y1`.
std::string to_string(const SparsePoly& f);
std::string to_string(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const SparsePoly& f);

}  // namespace bpd
