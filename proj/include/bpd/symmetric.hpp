#pragma once

// Stanley symmetric functions, Schubert polynomials, Schur polynomials and
// Edelman-Greene coefficients.

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "bpd/perm.hpp"
#include "bpd/poly.hpp"

namespace bpd {

/// F_w restricted to x_1..x_m: the sum over reduced words a and weakly
/// increasing b in 1..m, strictly increasing wherever a ascends, of x_b.
SparsePoly stanley_truncated(const Permutation& w, int m);

/// Billey-Jockusch-Stanley formula: as above with the extra bound b_i <= a_i.
SparsePoly schubert_bjs(const Permutation& w);

/// Which ascent the divided-difference recursion descends through.
enum class AscentChoice { First, Last };

/// Schubert polynomial from x_1^{n-1} x_2^{n-2} ... x_{n-1} by divided
/// differences.
SparsePoly schubert_recursive(const Permutation& w, AscentChoice choice = AscentChoice::First);

/// Double Schubert polynomial from prod_{i+j<=n} (x_i - y_j) by divided
/// differences in x.
SparsePoly double_schubert(const Permutation& w, AscentChoice choice = AscentChoice::First);

/// s_lambda(x_1..x_m) as a sum over semistandard tableaux.
SparsePoly schur_poly(const Partition& lambda, int m);

/// Partitions in descending order, so the largest shape prints first.
using SchurExpansion = std::map<Partition, Coefficient, std::greater<>>;

/// Expansion of a symmetric homogeneous polynomial in x_1..x_m into Schur
/// polynomials by repeatedly removing the lexicographically leading
/// monomial.  Throws InvalidInput for non-symmetric input or a negative
/// leading coefficient.
SchurExpansion schur_expand(const SparsePoly& f, int m);

/// Sum of c_lambda s_lambda(x_1..x_m).
SparsePoly schur_sum(const SchurExpansion& expansion, int m);

enum class EgMethod { Tableaux, Pipedreams, MlsLeaves, Monomial };

/// Edelman-Greene coefficients c^w_lambda, the Schur coefficients of F_w,
/// by one of four independent routes:
///   Tableaux    shapes of the reduced word tableaux of w
///   Pipedreams  shapes of the EG-pipedreams among all bumpless pipedreams
///   MlsLeaves   Lehmer codes of the leaves of the modified LS-tree
///   Monomial    Schur expansion of F_w in max(l(w), 1) variables
SchurExpansion eg_coeffs(const Permutation& w, EgMethod method);

EgMethod parse_eg_method(std::string_view name);
std::string to_string(EgMethod method);

/// One `(4,2): 1` line per partition, largest first.
std::string to_string(const SchurExpansion& expansion);

}  // namespace bpd
