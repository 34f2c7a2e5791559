#include "mvdef/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvdef {

void Cochain::add_term(const Tuple& t, int target, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(t, target);
    auto it = coeff.find(key);
    if (it == coeff.end()) {
        coeff.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }
}

Cochain& Cochain::axpy(const Rational& c, const Cochain& other) {
    if (c == 0) return *this;
    for (const auto& [key, v] : other.coeff) add_term(key.first, key.second, c * v);
    return *this;
}

Cochain Cochain::scaled(const Rational& c) const {
    Cochain out;
    out.arity = arity;
    out.degree = degree;
    if (c != 0)
        for (const auto& [key, v] : coeff) out.coeff.emplace(key, c * v);
    return out;
}

SparseVec ComponentBasis::coordinates(const Cochain& c) const {
    SparseVec out;
    for (const auto& [key, v] : c.coeff) {
        auto it = index.find(key);
        if (it == index.end())
            throw std::runtime_error("cochain term outside component basis");
        out.emplace_back(it->second, v);
    }
    // map iteration follows the lexicographic key order used to build elems
    return out;
}

Cochain ComponentBasis::cochain(const SparseVec& coords) const {
    Cochain c;
    c.arity = arity;
    c.degree = degree;
    for (const auto& [i, v] : coords) c.coeff.emplace(elems[i], v);
    return c;
}

namespace {

// Adjoint and module coefficients handled uniformly.
struct Coeffs {
    const GradedLieAlgebra& L;
    const GradedModule* M; // nullptr -> adjoint

    int dim() const { return M ? M->dim() : L.dim(); }
    int deg(int m) const { return M ? M->degrees[m] : L.degrees[m]; }
    SparseVec act(int i, int m) const {
        if (M) return M->act(i, m);
        return L.bracket(i, m);
    }
};

ComponentBasis make_basis(const GradedLieAlgebra& L, const Coeffs& C, int q, int g,
                          std::optional<int> window) {
    ComponentBasis B;
    B.arity = q;
    B.degree = g;
    B.window = window;
    std::map<int, std::vector<int>> values_by_degree;
    for (int m = 0; m < C.dim(); ++m)
        if (!window || C.deg(m) <= *window) values_by_degree[C.deg(m)].push_back(m);

    const int n = L.dim();
    Tuple t(q);
    auto visit = [&](auto&& self, int pos, int start, int degsum) -> void {
        if (pos == q) {
            auto it = values_by_degree.find(degsum - g);
            if (it == values_by_degree.end()) return;
            for (int m : it->second) B.elems.emplace_back(t, m);
            return;
        }
        for (int i = start; i < n; ++i) {
            t[pos] = i;
            self(self, pos + 1, i + 1, degsum + L.degrees[i]);
        }
    };
    visit(visit, 0, 0, 0);
    std::sort(B.elems.begin(), B.elems.end());
    for (int i = 0; i < (int)B.elems.size(); ++i) B.index.emplace(B.elems[i], i);
    return B;
}

// Shared driver for the differential. For every (q+1)-tuple U of the target
// component it walks the terms of
//   (delta c)(U) = (-1)^{q+1} [ sum_{s<t} (-1)^{s+t} c([u_s,u_t], U \ {s,t})
//                             + sum_u (-1)^{u+1} u_u . c(U \ {u}) ]
// and hands each contribution to a sink. `get` returns the stored values of
// the source object on a tuple (value index, payload) or nullptr; `emit`
// receives (target row, payload, scalar factor).
template <typename Get, typename Emit>
void delta_accumulate(const GradedLieAlgebra& L, const Coeffs& C, int q,
                      const ComponentBasis& target, Get&& get, Emit&& emit) {
    auto outside = [&](int m) { return target.window && C.deg(m) > *target.window; };
    const Rational pref((q + 1) % 2 == 0 ? 1 : -1); // (-1)^{q+1}
    size_t lo = 0;
    while (lo < target.elems.size()) {
        const Tuple& U = target.elems[lo].first;
        size_t hi = lo;
        std::map<int, int> row_of; // value index -> row in target basis
        while (hi < target.elems.size() && target.elems[hi].first == U) {
            row_of[target.elems[hi].second] = (int)hi;
            ++hi;
        }

        Tuple rest(q - 1 >= 0 ? q - 1 : 0), merged(q);
        // substitution terms
        for (int ps = 0; ps < q + 1; ++ps)
            for (int pt = ps + 1; pt < q + 1; ++pt) {
                SparseVec br = L.bracket(U[ps], U[pt]);
                if (br.empty()) continue;
                rest.clear();
                for (int r = 0; r < q + 1; ++r)
                    if (r != ps && r != pt) rest.push_back(U[r]);
                Rational pair_sign((ps + pt) % 2 == 0 ? 1 : -1);
                for (const auto& [k, c] : br) {
                    auto ins = std::lower_bound(rest.begin(), rest.end(), k);
                    if (ins != rest.end() && *ins == k) continue; // repeated argument
                    int pos = (int)(ins - rest.begin());
                    merged = rest;
                    merged.insert(merged.begin() + pos, k);
                    auto* src = get(merged);
                    if (!src) continue;
                    Rational factor = pref * pair_sign * c * Rational(pos % 2 == 0 ? 1 : -1);
                    for (const auto& [m, payload] : *src) {
                        auto it = row_of.find(m);
                        if (it == row_of.end()) {
                            if (outside(m)) continue; // quotient by the window
                            throw std::runtime_error("differential image outside component");
                        }
                        emit(it->second, payload, factor);
                    }
                }
            }
        // action terms
        for (int pu = 0; pu < q + 1; ++pu) {
            rest.clear();
            for (int r = 0; r < q + 1; ++r)
                if (r != pu) rest.push_back(U[r]);
            auto* src = get(rest);
            if (!src) continue;
            Rational u_sign(pu % 2 == 0 ? 1 : -1);
            for (const auto& [m, payload] : *src) {
                for (const auto& [k, c] : C.act(U[pu], m)) {
                    auto it = row_of.find(k);
                    if (it == row_of.end()) {
                        if (outside(k)) continue;
                        throw std::runtime_error("differential image outside component");
                    }
                    emit(it->second, payload, pref * u_sign * c);
                }
            }
        }
        lo = hi;
    }
}

template <typename V>
std::map<Tuple, std::vector<std::pair<int, V>>> group_by_tuple(
    const std::map<std::pair<Tuple, int>, V>& entries) {
    std::map<Tuple, std::vector<std::pair<int, V>>> out;
    for (const auto& [key, v] : entries) out[key.first].emplace_back(key.second, v);
    return out;
}

Cochain apply_delta(const GradedLieAlgebra& L, const Coeffs& C, const Cochain& c,
                    std::optional<int> window) {
    ComponentBasis target = make_basis(L, C, c.arity + 1, c.degree, window);
    auto grouped = group_by_tuple(c.coeff);
    Cochain out;
    out.arity = c.arity + 1;
    out.degree = c.degree;
    delta_accumulate(
        L, C, c.arity, target,
        [&](const Tuple& t) -> const std::vector<std::pair<int, Rational>>* {
            auto it = grouped.find(t);
            return it == grouped.end() ? nullptr : &it->second;
        },
        [&](int row, const Rational& payload, const Rational& factor) {
            out.add_term(target.elems[row].first, target.elems[row].second, payload * factor);
        });
    return out;
}

Matrix delta_matrix(const GradedLieAlgebra& L, const Coeffs& C, int q, int g,
                    std::optional<int> window) {
    ComponentBasis source = make_basis(L, C, q, g, window);
    ComponentBasis target = make_basis(L, C, q + 1, g, window);
    std::map<std::pair<Tuple, int>, int> cols;
    for (const auto& [key, col] : source.index) cols.emplace(key, col);
    auto grouped = group_by_tuple(cols);
    Matrix M(target.dim(), source.dim());
    delta_accumulate(
        L, C, q, target,
        [&](const Tuple& t) -> const std::vector<std::pair<int, int>>* {
            auto it = grouped.find(t);
            return it == grouped.end() ? nullptr : &it->second;
        },
        [&](int row, int col, const Rational& factor) { M.add(row, col, factor); });
    return M;
}

// a composed with b: sum over q-element argument subsets, b's value fed as
// the first argument of a. Sign (-1)^{sum_s (j_s - s)} per subset.
Cochain compose(const GradedLieAlgebra& L, const Cochain& a, const Cochain& b,
                std::optional<int> window) {
    const int p = a.arity, q = b.arity, r = p + q - 1;
    Cochain out;
    out.arity = r;
    out.degree = a.degree + b.degree;
    ComponentBasis result = cochain_basis(L, r, out.degree, window);
    auto ga = group_by_tuple(a.coeff);
    auto gb = group_by_tuple(b.coeff);

    std::vector<int> sel(q);
    Tuple S(q), rest(p - 1 >= 0 ? p - 1 : 0), T(p);
    size_t lo = 0;
    while (lo < result.elems.size()) {
        const Tuple& U = result.elems[lo].first;
        size_t hi = lo;
        while (hi < result.elems.size() && result.elems[hi].first == U) ++hi;

        for (int i = 0; i < q; ++i) sel[i] = i;
        while (true) {
            int parity = 0;
            S.clear();
            rest.clear();
            for (int i = 0; i < q; ++i) {
                parity += sel[i] - i;
                S.push_back(U[sel[i]]);
            }
            {
                int si = 0;
                for (int i = 0; i < r; ++i) {
                    if (si < q && sel[si] == i) ++si;
                    else rest.push_back(U[i]);
                }
            }
            auto itb = gb.find(S);
            if (itb != gb.end()) {
                Rational subset_sign(parity % 2 == 0 ? 1 : -1);
                for (const auto& [m, vb] : itb->second) {
                    auto ins = std::lower_bound(rest.begin(), rest.end(), m);
                    if (ins != rest.end() && *ins == m) continue;
                    int pos = (int)(ins - rest.begin());
                    T = rest;
                    T.insert(T.begin() + pos, m);
                    auto ita = ga.find(T);
                    if (ita == ga.end()) continue;
                    Rational f = subset_sign * vb * Rational(pos % 2 == 0 ? 1 : -1);
                    for (const auto& [n, va] : ita->second) out.add_term(U, n, f * va);
                }
            }
            // next q-combination of {0..r-1}
            int i = q - 1;
            while (i >= 0 && sel[i] == r - q + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < q; ++j) sel[j] = sel[j - 1] + 1;
        }
        lo = hi;
    }
    return out;
}

} // namespace

ComponentBasis cochain_basis(const GradedLieAlgebra& L, int q, int g, std::optional<int> window) {
    return make_basis(L, Coeffs{L, nullptr}, q, g, window);
}

ComponentBasis cochain_basis(const GradedLieAlgebra& L, const GradedModule& M, int q, int g,
                             std::optional<int> window) {
    return make_basis(L, Coeffs{L, &M}, q, g, window);
}

Cochain apply_differential(const GradedLieAlgebra& L, const Cochain& c, std::optional<int> window) {
    return apply_delta(L, Coeffs{L, nullptr}, c, window);
}

Cochain apply_differential(const GradedLieAlgebra& L, const GradedModule& M, const Cochain& c,
                           std::optional<int> window) {
    return apply_delta(L, Coeffs{L, &M}, c, window);
}

Matrix differential_matrix(const GradedLieAlgebra& L, int q, int g, std::optional<int> window) {
    return delta_matrix(L, Coeffs{L, nullptr}, q, g, window);
}

Matrix differential_matrix(const GradedLieAlgebra& L, const GradedModule& M, int q, int g,
                           std::optional<int> window) {
    return delta_matrix(L, Coeffs{L, &M}, q, g, window);
}

Cochain cochain_bracket(const GradedLieAlgebra& L, const Cochain& a, const Cochain& b,
                        std::optional<int> window) {
    Cochain out = compose(L, a, b, window);
    Rational sign(((a.arity - 1) * (b.arity - 1)) % 2 == 0 ? -1 : 1);
    out.axpy(sign, compose(L, b, a, window));
    return out;
}

Cochain mu_cochain(int k, const GradedLieAlgebra& L, const GradedModule& W) {
    if (k < 2) throw std::invalid_argument("mu_cochain: k must be >= 2");
    Cochain mu;
    mu.arity = 1;
    mu.degree = k;
    for (int i = 2; i <= std::min(k + 1, L.dim()); ++i) {
        Rational c = binomial(k - 1, i - 2);
        if (i % 2 == 0) c = -c; // (-1)^{i+1}
        // value e_{i-k} in W's index window
        int target = -1;
        for (int m = 0; m < W.dim(); ++m)
            if (W.degrees[m] == i - k) { target = m; break; }
        if (target < 0) throw std::invalid_argument("mu_cochain: W window too small");
        mu.add_term({i - 1}, target, c);
    }
    return mu;
}

Cochain module_to_adjoint(const GradedLieAlgebra& L, const GradedModule& M, const Cochain& c) {
    Cochain out;
    out.arity = c.arity;
    out.degree = c.degree;
    for (const auto& [key, v] : c.coeff) {
        int li = L.label_index(M.labels[key.second]);
        if (li < 0) throw std::runtime_error("module value outside the algebra: " + M.labels[key.second]);
        out.add_term(key.first, li, v);
    }
    return out;
}

} // namespace mvdef
