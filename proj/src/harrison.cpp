#include "mvdef/harrison.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvdef {

SparseVec LocalAlgebra::product(int i, int j) const {
    auto it = table.find({std::min(i, j), std::max(i, j)});
    if (it == table.end()) return {};
    return it->second;
}

SparseVec LocalAlgebra::product(const SparseVec& x, const SparseVec& y) const {
    SparseVec acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) acc = sv_axpy(acc, a * b, product(i, j));
    return acc;
}

std::vector<std::string> check_local_algebra(const LocalAlgebra& A) {
    std::vector<std::string> bad;
    const int n = A.dim();
    for (int i = 0; i < n; ++i) {
        SparseVec ui = A.product(A.unit, i);
        if (!(ui == SparseVec{{i, Rational(1)}}))
            bad.push_back("unit fails on " + A.labels[i]);
    }
    for (int i = 0; i < n && bad.size() < 8; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                SparseVec lhs = A.product(A.product(i, j), SparseVec{{k, Rational(1)}});
                SparseVec rhs = A.product(SparseVec{{i, Rational(1)}}, A.product(j, k));
                if (!(lhs == rhs)) {
                    bad.push_back("associativity fails on (" + A.labels[i] + "," +
                                  A.labels[j] + "," + A.labels[k] + ")");
                    if (bad.size() >= 8) break;
                }
            }
    // the ideal must be nilpotent: m^n = 0 in an n-dim local algebra
    std::vector<SparseVec> power;
    for (int i = 0; i < n; ++i)
        if (i != A.unit) power.push_back({{i, Rational(1)}});
    for (int step = 1; step < n && !power.empty(); ++step) {
        std::vector<SparseVec> next;
        for (const auto& v : power)
            for (int i = 0; i < n; ++i)
                if (i != A.unit) {
                    SparseVec p = A.product(v, SparseVec{{i, Rational(1)}});
                    if (!p.empty()) next.push_back(std::move(p));
                }
        power = std::move(next);
    }
    if (!power.empty()) bad.push_back("maximal ideal is not nilpotent");
    return bad;
}

std::vector<std::pair<int, int>> sym_pair_basis(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.emplace_back(i, j);
    return out;
}

namespace {

int pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    // row-major over (i<=j)
    return i * n - i * (i - 1) / 2 + (j - i);
}

Rational sym_eval(const SymFunctional& phi, int i, int j) {
    auto it = phi.find({std::min(i, j), std::max(i, j)});
    return it == phi.end() ? Rational(0) : it->second;
}

Rational sym_eval(const SymFunctional& phi, const SparseVec& x, int j) {
    Rational acc(0);
    for (const auto& [i, c] : x) acc += c * sym_eval(phi, i, j);
    return acc;
}

} // namespace

Matrix harrison_d1_matrix(const LocalAlgebra& A) {
    const int n = A.dim();
    auto pairs = sym_pair_basis(n);
    Matrix d((int)pairs.size(), n);
    for (int r = 0; r < (int)pairs.size(); ++r) {
        auto [i, j] = pairs[r];
        d.add(r, j, A.aug(i));
        d.add(r, i, A.aug(j));
        for (const auto& [k, c] : A.product(i, j)) d.add(r, k, -c);
    }
    return d;
}

Matrix harrison_d2_matrix(const LocalAlgebra& A) {
    const int n = A.dim();
    auto pairs = sym_pair_basis(n);
    Matrix d(n * n * n, (int)pairs.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int row = (a * n + b) * n + c;
                d.add(row, pair_index(n, b, c), A.aug(a));
                for (const auto& [m, v] : A.product(a, b)) d.add(row, pair_index(n, m, c), -v);
                for (const auto& [m, v] : A.product(b, c)) d.add(row, pair_index(n, a, m), v);
                d.add(row, pair_index(n, a, b), -A.aug(c));
            }
    return d;
}

int harrison_h1_dim(const LocalAlgebra& A) {
    Matrix d1 = harrison_d1_matrix(A);
    return d1.cols() - rank(d1);
}

HarrisonH2 harrison_h2(const LocalAlgebra& A) {
    const int n = A.dim();
    auto pairs = sym_pair_basis(n);
    Matrix d1 = harrison_d1_matrix(A);
    Matrix d2 = harrison_d2_matrix(A);
    std::vector<SparseVec> kernel = kernel_basis(d2);

    std::vector<SparseVec> cols;
    for (int c = 0; c < d1.cols(); ++c) cols.push_back(d1.column(c));
    const int img_block = (int)cols.size();
    for (const auto& k : kernel) cols.push_back(k);
    RrefResult red = rref(Matrix::from_columns((int)pairs.size(), cols));

    HarrisonH2 H;
    for (int p : red.pivots)
        if (p >= img_block) {
            SymFunctional rep;
            for (const auto& [idx, v] : kernel[p - img_block]) rep[pairs[idx]] = v;
            H.reps.push_back(std::move(rep));
        }
    H.dimension = (int)H.reps.size();
    return H;
}

std::vector<std::string> check_presentation(const AlgebraPresentation& P) {
    std::vector<std::string> bad;
    for (const auto& g : P.gens) {
        if (!homogeneous_weight(P.ring, g))
            bad.push_back("generator not weight-homogeneous: " + poly_to_string(P.ring, g));
        for (const auto& [e, c] : g.terms)
            if (total_degree(e) < 2)
                bad.push_back("generator has a term outside the ideal square: " +
                              monomial_to_string(P.ring, e));
    }
    if (P.truncation < 0) bad.push_back("negative truncation order");
    return bad;
}

namespace {

// rows spanning the weight-w part of the ideal generated by gens, with
// minimum multiplier degree minDeg (0 for I itself, 1 for m*I).
std::vector<SparseVec> ideal_rows(const AlgebraPresentation& P,
                                  const std::map<Exponents, int>& col, int w, int minDeg) {
    std::vector<SparseVec> rows;
    for (const auto& g : P.gens) {
        auto wg = homogeneous_weight(P.ring, g);
        if (!wg || *wg > w) continue;
        for (const auto& p : monomials_of_weight(P.ring, w - *wg)) {
            if (total_degree(p) < minDeg) continue;
            Polynomial prod = g.times_monomial(p);
            SparseVec row;
            for (const auto& [e, c] : prod.terms) row.emplace_back(col.at(e), c);
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace

PresentationH2 presentation_h2(const AlgebraPresentation& P) {
    PresentationH2 out;
    for (int w = 2; w <= P.truncation; ++w) {
        std::vector<Exponents> mons = monomials_of_weight(P.ring, w);
        std::map<Exponents, int> col;
        for (int i = 0; i < (int)mons.size(); ++i) col[mons[i]] = i;

        std::vector<SparseVec> mI = ideal_rows(P, col, w, 1);
        std::vector<SparseVec> I = ideal_rows(P, col, w, 0);
        std::vector<SparseVec> cols;
        for (auto& r : mI) cols.push_back(std::move(r));
        const int img_block = (int)cols.size();
        for (auto& r : I) cols.push_back(std::move(r));
        RrefResult red = rref(Matrix::from_columns((int)mons.size(), cols));
        for (int p : red.pivots)
            if (p >= img_block) {
                Polynomial rep;
                for (const auto& [idx, v] : cols[p]) rep.add_term(mons[idx], v);
                out.reps.push_back(std::move(rep));
            }
    }
    out.dimension = (int)out.reps.size();
    return out;
}

LocalAlgebra algebra_of(const AlgebraPresentation& P) {
    // per weight: rref of the ideal component; non-pivot monomials form the
    // quotient basis, pivot rows define the reduction map
    struct WeightData {
        std::vector<Exponents> mons;
        std::map<Exponents, int> col;
        RrefResult red;
    };
    std::map<int, WeightData> data;
    LocalAlgebra A;
    A.name = P.name.empty() ? "quotient" : P.name;
    std::map<Exponents, int> basis_index;
    std::vector<Exponents> basis;
    for (int w = 0; w <= P.truncation; ++w) {
        WeightData d;
        d.mons = monomials_of_weight(P.ring, w);
        for (int i = 0; i < (int)d.mons.size(); ++i) d.col[d.mons[i]] = i;
        std::vector<SparseVec> rows = ideal_rows(P, d.col, w, 0);
        d.red = rref(Matrix::from_rows((int)d.mons.size(), std::move(rows)));
        std::vector<bool> pivot(d.mons.size(), false);
        for (int p : d.red.pivots) pivot[p] = true;
        for (int i = 0; i < (int)d.mons.size(); ++i)
            if (!pivot[i]) {
                basis_index[d.mons[i]] = (int)basis.size();
                basis.push_back(d.mons[i]);
                A.labels.push_back(monomial_to_string(P.ring, d.mons[i]));
            }
        data[w] = std::move(d);
    }
    A.unit = basis_index.at(Exponents(P.ring.nvars(), 0));

    auto reduce_to_basis = [&](const Polynomial& poly) {
        SparseVec out;
        std::map<int, SparseVec> by_weight; // weight -> coords over mons
        for (const auto& [e, c] : poly.terms) {
            int w = P.ring.weight(e);
            if (w > P.truncation) continue; // inside the ideal by convention
            by_weight[w].emplace_back(data.at(w).col.at(e), c);
        }
        for (auto& [w, vec] : by_weight) {
            std::sort(vec.begin(), vec.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            const WeightData& d = data.at(w);
            SparseVec v = vec;
            for (int r = 0; r < (int)d.red.pivots.size(); ++r) {
                Rational c = sv_get(v, d.red.pivots[r]);
                if (c != 0) v = sv_axpy(v, -c, d.red.reduced.row(r));
            }
            for (const auto& [idx, c] : v) out.emplace_back(basis_index.at(d.mons[idx]), c);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    };

    for (int i = 0; i < (int)basis.size(); ++i)
        for (int j = i; j < (int)basis.size(); ++j) {
            Exponents prod(basis[i].size());
            for (size_t k = 0; k < prod.size(); ++k) prod[k] = basis[i][k] + basis[j][k];
            SparseVec v = reduce_to_basis(Polynomial::monomial(prod));
            if (!v.empty()) A.table[{i, j}] = std::move(v);
        }
    return A;
}

LocalAlgebra extension_from_cocycle(const LocalAlgebra& A, const SymFunctional& phi) {
    // cocycle check: pair phi against d2's rows
    const int n = A.dim();
    auto pairs = sym_pair_basis(n);
    SparseVec coords;
    for (int idx = 0; idx < (int)pairs.size(); ++idx) {
        Rational v = sym_eval(phi, pairs[idx].first, pairs[idx].second);
        if (v != 0) coords.emplace_back(idx, v);
    }
    if (!harrison_d2_matrix(A).apply(coords).empty())
        throw std::invalid_argument("extension_from_cocycle: d2(phi) != 0");

    // unit-restoring shift: psi supported on the unit with psi(1) = phi(1,1)
    Rational psi1 = sym_eval(phi, A.unit, A.unit);
    auto phi_shifted = [&](int i, int j) {
        Rational v = sym_eval(phi, i, j);
        v -= A.aug(i) * (j == A.unit ? psi1 : Rational(0));
        v -= A.aug(j) * (i == A.unit ? psi1 : Rational(0));
        for (const auto& [k, c] : A.product(i, j))
            if (k == A.unit) v += c * psi1;
        return v;
    };

    LocalAlgebra B;
    B.name = A.name + "+K";
    B.labels = A.labels;
    B.labels.push_back("theta");
    B.unit = A.unit;
    const int theta = n;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            SparseVec v = A.product(i, j);
            Rational c = phi_shifted(i, j);
            if (c != 0) v.emplace_back(theta, c);
            if (!v.empty()) B.table[{i, j}] = std::move(v);
        }
    for (int i = 0; i < n; ++i)
        if (A.aug(i) != 0) B.table[{i, theta}] = {{theta, A.aug(i)}};
    return B;
}

bool tables_match(const LocalAlgebra& A, const LocalAlgebra& B, const std::vector<int>& perm) {
    if (A.dim() != B.dim() || (int)perm.size() != A.dim()) return false;
    if (perm[A.unit] != B.unit) return false;
    for (int i = 0; i < A.dim(); ++i)
        for (int j = i; j < A.dim(); ++j) {
            SparseVec mapped;
            for (const auto& [k, c] : A.product(i, j)) mapped.emplace_back(perm[k], c);
            std::sort(mapped.begin(), mapped.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            if (!(mapped == B.product(perm[i], perm[j]))) return false;
        }
    return true;
}

} // namespace mvdef
