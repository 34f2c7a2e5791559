#pragma once

#include <map>
#include <vector>

#include "mvdef/gla.hpp"

namespace mvdef {

using Tuple = std::vector<int>; // strictly increasing basis indices

// Skew multilinear q-cochain of internal degree g with values in the adjoint
// module or in a graded module: coefficient of value-basis element m in
// phi(e_{i_1},...,e_{i_q}), keyed on ((i_1 < ... < i_q), m). Internal degree
// convention: deg(value) = deg(e_{i_1}) + ... + deg(e_{i_q}) - g.
struct Cochain {
    int arity = 0;
    int degree = 0;
    std::map<std::pair<Tuple, int>, Rational> coeff;

    bool is_zero() const { return coeff.empty(); }
    void add_term(const Tuple& t, int target, const Rational& c);
    Cochain& axpy(const Rational& c, const Cochain& other); // this += c*other
    Cochain scaled(const Rational& c) const;
    bool operator==(const Cochain& o) const = default;
};

// Ordered basis of one graded component C^q_(g): (tuple, value index) pairs
// in lexicographic order.
//
// With `window` set, the component is the quotient of C^q_(g) by the
// subcomplex of cochains supported on value degrees > window. For a
// positively graded algebra that subspace is closed under delta, so the
// window complexes are genuine quotient complexes; they avoid the boundary
// artifacts of plain index truncation provided the backing algebra extends
// at least `window + g` in degree.
struct ComponentBasis {
    int arity = 0;
    int degree = 0;
    std::optional<int> window;
    std::vector<std::pair<Tuple, int>> elems;
    std::map<std::pair<Tuple, int>, int> index;

    int dim() const { return (int)elems.size(); }
    SparseVec coordinates(const Cochain& c) const; // throws if c has terms outside the basis
    Cochain cochain(const SparseVec& coords) const;
};

ComponentBasis cochain_basis(const GradedLieAlgebra& L, int q, int g,
                             std::optional<int> window = std::nullopt);
ComponentBasis cochain_basis(const GradedLieAlgebra& L, const GradedModule& M, int q, int g,
                             std::optional<int> window = std::nullopt);

// Differential, sign convention (arity 1):
//   (delta c)(x,y) = [x, c(y)] - [y, c(x)] - c([x,y]).
Cochain apply_differential(const GradedLieAlgebra& L, const Cochain& c,
                           std::optional<int> window = std::nullopt);
Cochain apply_differential(const GradedLieAlgebra& L, const GradedModule& M, const Cochain& c,
                           std::optional<int> window = std::nullopt);

// Matrix of delta: C^q_(g) -> C^{q+1}_(g) in the bases above.
Matrix differential_matrix(const GradedLieAlgebra& L, int q, int g,
                           std::optional<int> window = std::nullopt);
Matrix differential_matrix(const GradedLieAlgebra& L, const GradedModule& M, int q, int g,
                           std::optional<int> window = std::nullopt);

// Graded bracket of adjoint cochains (arities p, q -> p+q-1, degrees add).
// With a window, the result is the bracket's image in the window quotient;
// it is exact provided the inputs' values are exact up to value degree
// window + (the other factor's internal degree).
Cochain cochain_bracket(const GradedLieAlgebra& L, const Cochain& a, const Cochain& b,
                        std::optional<int> window = std::nullopt);

// mu_k in C^1_(k)(L1; W): mu_k(e_i) = (-1)^{i+1} binom(k-1, i-2) e_{i-k}.
Cochain mu_cochain(int k, const GradedLieAlgebra& L, const GradedModule& W);

// Reinterpret a module-valued cochain as adjoint-valued by matching value
// labels against algebra labels; throws if some value lies outside L.
Cochain module_to_adjoint(const GradedLieAlgebra& L, const GradedModule& M, const Cochain& c);

} // namespace mvdef
