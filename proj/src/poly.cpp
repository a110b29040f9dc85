#include "bpd/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "bpd/error.hpp"

namespace bpd {

namespace {

void trim(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int get(const std::vector<int>& v, int i) {
  return i >= 1 && i <= static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i - 1)] : 0;
}

void set(std::vector<int>& v, int i, int value) {
  if (static_cast<int>(v.size()) < i) v.resize(static_cast<std::size_t>(i), 0);
  v[static_cast<std::size_t>(i - 1)] = value;
  trim(v);
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

}  // namespace

Monomial::Monomial(std::vector<int> x_exponents, std::vector<int> y_exponents)
    : x(std::move(x_exponents)), y(std::move(y_exponents)) {
  for (int e : x) require(e >= 0, "negative exponent");
  for (int e : y) require(e >= 0, "negative exponent");
  trim(x);
  trim(y);
}

int Monomial::degree() const {
  return std::accumulate(x.begin(), x.end(), 0) + std::accumulate(y.begin(), y.end(), 0);
}

int Monomial::x_exponent(int i) const { return get(x, i); }
int Monomial::y_exponent(int j) const { return get(y, j); }

Monomial operator*(const Monomial& a, const Monomial& b) { return Monomial(add(a.x, b.x), add(a.y, b.y)); }

// ---------------------------------------------------------------------------

SparsePoly::SparsePoly(Coefficient constant) {
  if (constant != 0) terms_.emplace(Monomial(), std::move(constant));
}

SparsePoly::SparsePoly(const Monomial& m, Coefficient c) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

SparsePoly SparsePoly::x(int i) {
  require(i >= 1, "variable index must be positive");
  std::vector<int> e(static_cast<std::size_t>(i), 0);
  e.back() = 1;
  return SparsePoly(Monomial(std::move(e)));
}

SparsePoly SparsePoly::y(int j) {
  require(j >= 1, "variable index must be positive");
  std::vector<int> e(static_cast<std::size_t>(j), 0);
  e.back() = 1;
  return SparsePoly(Monomial({}, std::move(e)));
}

Coefficient SparsePoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int SparsePoly::x_vars() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.x.size());
  return static_cast<int>(n);
}

int SparsePoly::y_vars() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.y.size());
  return static_cast<int>(n);
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& term) { return term.first.degree() == d; });
}

int SparsePoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) { return *this = *this * other; }

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

// ---------------------------------------------------------------------------

SparsePoly swap_x(const SparsePoly& f, int i) {
  require(i >= 1, "variable index must be positive");
  SparsePoly out;
  for (const auto& [m, c] : f.terms()) {
    Monomial swapped = m;
    const int a = m.x_exponent(i);
    const int b = m.x_exponent(i + 1);
    set(swapped.x, i, b);
    set(swapped.x, i + 1, a);
    out.add_term(swapped, c);
  }
  return out;
}

SparsePoly drop_y(const SparsePoly& f) {
  SparsePoly out;
  for (const auto& [m, c] : f.terms())
    if (m.y.empty()) out.add_term(m, c);
  return out;
}

SparsePoly restrict_x(const SparsePoly& f, int m) {
  SparsePoly out;
  for (const auto& [mono, c] : f.terms())
    if (mono.y.empty() && static_cast<int>(mono.x.size()) <= m) out.add_term(mono, c);
  return out;
}

SparsePoly homogeneous_part(const SparsePoly& f, int d) {
  SparsePoly out;
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) out.add_term(m, c);
  return out;
}

bool is_symmetric(const SparsePoly& f, int m) {
  if (f.x_vars() > m) return false;
  for (int i = 1; i < m; ++i)
    if (swap_x(f, i) != f) return false;
  return true;
}

SparsePoly divided_difference(const SparsePoly& f, int i) {
  SparsePoly numerator = f - swap_x(f, i);
  SparsePoly quotient;
  // Divide by x_i - x_{i+1}, always cancelling the term with the largest
  // power of x_i; its removal only creates terms with smaller x_i powers.
  while (!numerator.is_zero()) {
    auto best = numerator.terms().begin();
    for (auto it = numerator.terms().begin(); it != numerator.terms().end(); ++it)
      if (it->first.x_exponent(i) > best->first.x_exponent(i)) best = it;
    const Monomial m = best->first;
    const Coefficient c = best->second;
    ensure(m.x_exponent(i) > 0, "divided difference left a remainder");
    Monomial lowered = m;
    set(lowered.x, i, m.x_exponent(i) - 1);
    quotient.add_term(lowered, c);
    Monomial shifted = lowered;
    set(shifted.x, i + 1, lowered.x_exponent(i + 1) + 1);
    numerator.add_term(m, -c);
    numerator.add_term(shifted, c);
  }
  return quotient;
}

// ---------------------------------------------------------------------------

std::string to_string(const Monomial& m) {
  std::string out;
  auto emit = [&out](char name, const std::vector<int>& exps) {
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      if (!out.empty()) out += '*';
      out += name + std::to_string(k + 1);
      if (exps[k] > 1) out += '^' + std::to_string(exps[k]);
    }
  };
  emit('x', m.x);
  emit('y', m.y);
  return out.empty() ? "1" : out;
}

std::string to_string(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Coefficient>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const Coefficient magnitude = negative ? Coefficient(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool constant = m.degree() == 0;
    if (magnitude != 1 || constant) {
      out += magnitude.str();
      if (!constant) out += '*';
    }
    if (!constant) out += to_string(m);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& f) { return os << to_string(f); }

}  // namespace bpd
