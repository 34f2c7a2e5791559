#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mvdef/matrix.hpp"

namespace mvdef {

// Graded Lie algebra with a fixed ordered basis. Brackets are stored for
// index pairs i < j only; [e_i, e_i] = 0 and [e_j, e_i] = -[e_i, e_j] are
// implied. Degrees live in Z. Bracket tables produced by deformation
// families need not be degree-additive, so additivity is a separate check.
struct GradedLieAlgebra {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::map<std::pair<int, int>, SparseVec> table; // key i < j

    int dim() const { return (int)labels.size(); }
    SparseVec bracket(int i, int j) const;
    SparseVec bracket(const SparseVec& a, const SparseVec& b) const;
    int label_index(const std::string& label) const; // -1 if absent
};

// Graded module over a graded Lie algebra: action[e_i](m_j) stored densely
// keyed on the (algebra index, module index) pair.
struct GradedModule {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::map<std::pair<int, int>, SparseVec> action;

    int dim() const { return (int)labels.size(); }
    SparseVec act(int i, int m) const;
    SparseVec act(int i, const SparseVec& v) const;
};

// One-parameter bracket family: base table plus polynomial-in-t corrections.
// correction[(i,j)] lists (target k, coefficients of t^1, t^2, ...).
struct FormalBracketFamily {
    std::string param = "t";
    GradedLieAlgebra base;
    std::map<std::pair<int, int>, std::vector<std::pair<int, std::vector<Rational>>>> correction;

    GradedLieAlgebra at(const Rational& t) const;
    // cochain data of the coefficient of t^1, grouped by internal degree
    // (degree of inputs minus degree of output): list of (degree g, terms).
    struct LinearPart {
        int degree;
        std::map<std::pair<int, int>, SparseVec> terms;
    };
    std::vector<LinearPart> linear_parts() const;
};

// Nilpotent truncation of the Lie algebra of vector fields x^{i+1} d/dx:
// basis e_1..e_N with deg e_i = i and [e_i, e_j] = (j-i) e_{i+j} (0 past N).
GradedLieAlgebra l1_truncated(int N);

// Module with basis e_j for low_bound <= j <= N (j may be <= 0) and action
// e_i(e_j) = (j-i) e_{i+j}, truncated outside the index window.
GradedModule w_module_truncated(int N, int low_bound);

// Three one-parameter deformation families of l1_truncated(N).
FormalBracketFamily l1_formal_family(int id, int N);
GradedLieAlgebra deformation_family(int id, const Rational& t, int N);

// All index triples i < j < k violating the Jacobi identity (empty == pass).
std::vector<std::array<int, 3>> check_jacobi(const GradedLieAlgebra& L);
// Pairs (i, j) whose bracket has a component off degree deg(i)+deg(j).
std::vector<std::pair<int, int>> check_degree_additive(const GradedLieAlgebra& L);
// Triples (i, j, m) violating e_i(e_j(m)) - e_j(e_i(m)) = [e_i,e_j](m).
// With degree_cap set, triples whose combined degrees exceed the cap are
// skipped: for truncated algebras the identity only holds inside the
// truncation window.
std::vector<std::array<int, 3>> check_module(const GradedLieAlgebra& L, const GradedModule& M,
                                             std::optional<int> degree_cap = std::nullopt);

} // namespace mvdef
