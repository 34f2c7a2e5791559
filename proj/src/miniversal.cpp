#include "mvdef/miniversal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mvdef {

std::vector<std::pair<Exponents, Exponents>> comultiply(const Exponents& m) {
    std::vector<std::pair<Exponents, Exponents>> out;
    Exponents u(m.size(), 0);
    auto rec = [&](auto&& self, size_t var) -> void {
        if (var == m.size()) {
            Exponents v(m.size());
            bool u0 = true, v0 = true;
            for (size_t i = 0; i < m.size(); ++i) {
                v[i] = m[i] - u[i];
                if (u[i]) u0 = false;
                if (v[i]) v0 = false;
            }
            if (!u0 && !v0) out.emplace_back(u, v);
            return;
        }
        for (int k = 0; k <= m[var]; ++k) {
            u[var] = k;
            self(self, var + 1);
        }
        u[var] = 0;
    };
    rec(rec, 0);
    return out;
}

bool coalgebra_cocommutative(const Exponents& m) {
    std::map<std::pair<Exponents, Exponents>, int> count;
    for (const auto& [u, v] : comultiply(m)) {
        count[{u, v}] += 1;
        count[{v, u}] -= 1;
    }
    for (const auto& [k, c] : count)
        if (c != 0) return false;
    return true;
}

bool coalgebra_coassociative(const Exponents& m) {
    std::map<std::tuple<Exponents, Exponents, Exponents>, int> lhs, rhs;
    for (const auto& [u, v] : comultiply(m)) {
        for (const auto& [a, b] : comultiply(u)) lhs[{a, b, v}] += 1;
        for (const auto& [a, b] : comultiply(v)) rhs[{u, a, b}] += 1;
    }
    return lhs == rhs;
}

Cochain truncate_cochain(const GradedLieAlgebra& L, const Cochain& c, int window) {
    Cochain out;
    out.arity = c.arity;
    out.degree = c.degree;
    for (const auto& [key, v] : c.coeff)
        if (L.degrees[key.second] <= window) out.coeff.emplace(key, v);
    return out;
}

bool class_nonzero(const GradedLieAlgebra& L, const Cochain& z, std::optional<int> window) {
    if (!apply_differential(L, z, window).is_zero())
        throw std::invalid_argument("class_nonzero: not a cocycle");
    ComponentBasis basis = cochain_basis(L, z.arity, z.degree, window);
    Matrix im = differential_matrix(L, z.arity - 1, z.degree, window);
    return !solve(im, basis.coordinates(z)).has_value();
}

Cochain triple_massey(const GradedLieAlgebra& L, const Cochain& b,
                      std::optional<int> solve_window, std::optional<int> out_window) {
    Cochain bb = cochain_bracket(L, b, b, solve_window);
    const int g2 = 2 * b.degree;
    Matrix d2 = differential_matrix(L, 2, g2, solve_window);
    ComponentBasis b2 = cochain_basis(L, 2, g2, solve_window);
    ComponentBasis b3 = cochain_basis(L, 3, g2, solve_window);
    auto x = solve(d2, b3.coordinates(bb));
    if (!x) throw std::invalid_argument("triple_massey: [b,b] is not a coboundary");
    Cochain prim = b2.cochain(*x);
    return cochain_bracket(L, b, prim, out_window);
}

Cochain l1_dmu(const GradedLieAlgebra& L, int k, int window) {
    GradedModule W = w_module_truncated(L.dim() + 1, -5);
    Cochain mu = mu_cochain(k, L, W);
    Cochain dmu = apply_differential(L, W, mu, window);
    return module_to_adjoint(L, W, dmu);
}

namespace {

struct AliveVec {
    Polynomial combo;
    int weight = 0;
    int degree = 0;
    Cochain alpha;
    std::optional<int> window;
};

struct ClassSpace {
    int dim_bound = 0;
    ComponentBasis basis;
    Matrix im;
    std::vector<Cochain> reps;
    Matrix proj;
    bool ready = false;
};

SparseVec poly_coords(const Polynomial& p, const std::map<Exponents, int>& col) {
    SparseVec out;
    for (const auto& [e, c] : p.terms) out.emplace_back(col.at(e), c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

struct Engine {
    const MiniversalSetup& S;
    const GradedLieAlgebra& L;
    std::optional<int> classW;
    std::vector<AliveVec> alive;
    std::map<int, std::vector<int>> alive_by_weight;
    std::map<int, ClassSpace> cls;
    std::map<std::tuple<int, int, int>, Cochain> brackets;
    std::set<std::pair<int, int>> used_knobs; // (alive index, variable)
    std::map<std::pair<int, int>, Polynomial> gens; // (weight, rep index)
    // previous step's candidates with their classes, for stabilization checks
    std::map<int, std::vector<std::pair<Polynomial, std::vector<Rational>>>> prev;
    std::map<int, std::vector<Exponents>> mons_cache;
    MiniversalResult out;

    explicit Engine(const MiniversalSetup& s) : S(s), L(*s.L) {
        if (s.class_window > 0) classW = s.class_window;
        out.ring = s.ring;
        for (int v = 0; v < S.ring.nvars(); ++v) {
            AliveVec a;
            Exponents e(S.ring.nvars(), 0);
            e[v] = 1;
            a.combo = Polynomial::monomial(e);
            a.weight = S.ring.weights[v];
            a.degree = 1;
            a.window = window_for(1);
            a.alpha = a.window ? truncate_cochain(L, S.reps[v], *a.window) : S.reps[v];
            push_alive(std::move(a));
        }
    }

    std::optional<int> window_for(int degree) const {
        if (S.degree_windows.empty()) return std::nullopt;
        int i = std::min<int>(degree - 1, (int)S.degree_windows.size() - 1);
        return S.degree_windows[i];
    }

    void push_alive(AliveVec a) {
        alive_by_weight[a.weight].push_back((int)alive.size());
        alive.push_back(std::move(a));
    }

    const std::vector<Exponents>& mons(int w) {
        auto it = mons_cache.find(w);
        if (it == mons_cache.end())
            it = mons_cache.emplace(w, monomials_of_weight(S.ring, w)).first;
        return it->second;
    }

    const Cochain& bracket(int r, int s, std::optional<int> W) {
        auto key = std::make_tuple(r, s, W.value_or(-1));
        auto it = brackets.find(key);
        if (it == brackets.end())
            it = brackets.emplace(key, cochain_bracket(L, alive[r].alpha, alive[s].alpha, W)).first;
        return it->second;
    }

    void invalidate_brackets(int idx) {
        for (auto it = brackets.begin(); it != brackets.end();) {
            if (std::get<0>(it->first) == idx || std::get<1>(it->first) == idx)
                it = brackets.erase(it);
            else
                ++it;
        }
    }

    Matrix alive_matrix(int w, const std::vector<int>& idx) {
        const auto& ms = mons(w);
        std::map<Exponents, int> col;
        for (int i = 0; i < (int)ms.size(); ++i) col[ms[i]] = i;
        std::vector<SparseVec> cols;
        for (int r : idx) cols.push_back(poly_coords(alive[r].combo, col));
        return Matrix::from_columns((int)ms.size(), cols);
    }

    // comultiplication of a dual vector expressed in alive-pair coordinates
    std::vector<std::tuple<int, int, Rational>> delta_coords(const Polynomial& phi, int w) {
        std::map<int, std::map<std::pair<int, int>, Rational>> blocks; // by left weight
        for (const auto& [m, c] : phi.terms)
            for (const auto& [u, v] : comultiply(m)) {
                int wl = S.ring.weight(u);
                const auto& ml = mons(wl);
                const auto& mr = mons(w - wl);
                int iu = (int)(std::find(ml.begin(), ml.end(), u) - ml.begin());
                int iv = (int)(std::find(mr.begin(), mr.end(), v) - mr.begin());
                blocks[wl][{iu, iv}] += c;
            }
        std::vector<std::tuple<int, int, Rational>> coords;
        for (const auto& [wl, T] : blocks) {
            int wr = w - wl;
            const auto& il = alive_by_weight[wl];
            const auto& ir = alive_by_weight[wr];
            Matrix Al = alive_matrix(wl, il), Ar = alive_matrix(wr, ir);
            // columns of the block by right monomial
            std::map<int, SparseVec> by_right;
            for (const auto& [uv, c] : T)
                if (c != 0) by_right[uv.second].emplace_back(uv.first, c);
            // X[r][j]: left alive coordinates per right monomial column
            std::map<int, SparseVec> rows_of_X; // left alive pos -> (right mon, coeff)
            for (auto& [j, colv] : by_right) {
                std::sort(colv.begin(), colv.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                auto x = solve(Al, colv);
                if (!x)
                    throw std::runtime_error("comultiplication leaves the alive span (left)");
                for (const auto& [r, c] : *x) rows_of_X[r].emplace_back(j, c);
            }
            for (auto& [r, rowv] : rows_of_X) {
                std::sort(rowv.begin(), rowv.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                auto y = solve(Ar, rowv);
                if (!y)
                    throw std::runtime_error("comultiplication leaves the alive span (right)");
                for (const auto& [s, c] : *y)
                    if (c != 0) coords.emplace_back(il[r], ir[s], c);
            }
        }
        return coords;
    }

    Cochain obstruction_value(const std::vector<std::tuple<int, int, Rational>>& coords,
                              int w, std::optional<int> W) {
        Cochain acc;
        acc.arity = 3;
        acc.degree = w;
        for (const auto& [r, s, c] : coords) acc.axpy(c, bracket(r, s, W));
        return acc;
    }

    ClassSpace& class_space(int w) {
        auto it = cls.find(w);
        if (it == cls.end()) {
            ClassSpace c;
            auto bd = S.h3_dim.find(w);
            c.dim_bound = bd == S.h3_dim.end() ? 0 : bd->second;
            c.basis = cochain_basis(L, 3, w, classW);
            c.im = differential_matrix(L, 2, w, classW);
            c.proj = c.im;
            c.ready = true;
            it = cls.emplace(w, std::move(c)).first;
        }
        return it->second;
    }

    // class coordinates over the adaptively collected representatives
    std::vector<Rational> class_of(int w, const Cochain& z) {
        if (z.is_zero()) return {};
        Cochain zw = classW ? truncate_cochain(L, z, *classW) : z;
        if (!apply_differential(L, zw, classW).is_zero())
            throw std::runtime_error("obstruction value is not a cocycle");
        ClassSpace& C = class_space(w);
        auto x = solve(C.proj, C.basis.coordinates(zw));
        if (!x) {
            if ((int)C.reps.size() >= C.dim_bound)
                throw std::runtime_error(
                    "independent obstruction classes exceed the H^3 dimension bound");
            C.reps.push_back(zw);
            std::vector<SparseVec> cols;
            for (int c = 0; c < C.im.cols(); ++c) cols.push_back(C.im.column(c));
            for (const auto& r : C.reps) cols.push_back(C.basis.coordinates(r));
            C.proj = Matrix::from_columns(C.basis.dim(), cols);
            std::vector<Rational> cc(C.reps.size(), Rational(0));
            cc.back() = 1;
            return cc;
        }
        std::vector<Rational> cc(C.reps.size(), Rational(0));
        for (const auto& [i, v] : *x)
            if (i >= C.im.cols()) cc[i - C.im.cols()] = v;
        return cc;
    }

    static bool class_zero(const std::vector<Rational>& c) {
        for (const auto& v : c)
            if (v != 0) return false;
        return true;
    }

    static bool classes_equal(std::vector<Rational> a, std::vector<Rational> b) {
        size_t n = std::max(a.size(), b.size());
        a.resize(n, Rational(0));
        b.resize(n, Rational(0));
        return a == b;
    }

    std::vector<Polynomial> candidate_basis(int w, int k) {
        std::vector<Exponents> basis_mons;
        for (const auto& m : mons(w))
            if (total_degree(m) <= k + 1) basis_mons.push_back(m);
        if (basis_mons.empty()) return {};
        std::map<Exponents, int> col;
        for (int i = 0; i < (int)basis_mons.size(); ++i) col[basis_mons[i]] = i;
        std::vector<SparseVec> rows;
        for (const auto& [key, g] : gens) {
            if (g.is_zero()) continue;
            int wg = key.first;
            if (wg >= w) continue;
            for (const auto& p : mons(w - wg)) {
                if (total_degree(p) < 1) continue;
                Polynomial prod = g.times_monomial(p);
                SparseVec row;
                for (const auto& [e, c] : prod.terms) {
                    auto it = col.find(e);
                    if (it != col.end()) row.emplace_back(it->second, c);
                }
                if (row.empty()) continue;
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                rows.push_back(std::move(row));
            }
        }
        std::vector<SparseVec> ker =
            kernel_basis(Matrix::from_rows((int)basis_mons.size(), std::move(rows)));
        std::vector<Polynomial> cands;
        for (const auto& v : ker) {
            Polynomial p;
            for (const auto& [i, c] : v) p.add_term(basis_mons[i], c);
            cands.push_back(std::move(p));
        }
        return cands;
    }

    bool in_polynomial_span(const Polynomial& phi, const std::vector<Polynomial>& span, int w) {
        if (span.empty()) return false;
        std::map<Exponents, int> col;
        const auto& ms = mons(w);
        for (int i = 0; i < (int)ms.size(); ++i) col[ms[i]] = i;
        std::vector<SparseVec> cols;
        for (const auto& p : span) cols.push_back(poly_coords(p, col));
        return solve(Matrix::from_columns((int)ms.size(), cols), poly_coords(phi, col))
            .has_value();
    }

    void apply_gauge(int step, int w, const Polynomial& phi,
                     const std::vector<std::tuple<int, int, Rational>>& dc,
                     const std::vector<Rational>& c) {
        for (int eta = 0; eta < (int)alive.size(); ++eta) {
            if (alive[eta].degree < 2) continue;
            for (int v = 0; v < S.ring.nvars(); ++v) {
                if (S.ring.weights[v] != alive[eta].weight) continue;
                if (used_knobs.count({eta, v})) continue;
                const Cochain& rep = S.reps[v];
                Cochain effect;
                effect.arity = 3;
                effect.degree = w;
                for (const auto& [r, s, cc] : dc) {
                    if (r == eta) effect.axpy(cc, cochain_bracket(L, rep, alive[s].alpha, classW));
                    if (s == eta) effect.axpy(cc, cochain_bracket(L, alive[r].alpha, rep, classW));
                }
                std::vector<Rational> ce = class_of(w, effect);
                if (class_zero(ce)) continue;
                // need c = -t * ce for a scalar t: check colinearity
                size_t n = std::max(c.size(), ce.size());
                std::vector<Rational> a = c, b = ce;
                a.resize(n, Rational(0));
                b.resize(n, Rational(0));
                int lead = -1;
                for (size_t i = 0; i < n; ++i)
                    if (b[i] != 0) {
                        lead = (int)i;
                        break;
                    }
                Rational t = -a[lead] / b[lead];
                bool colinear = true;
                for (size_t i = 0; i < n; ++i)
                    if (a[i] + t * b[i] != 0) colinear = false;
                if (!colinear || t == 0) continue;
                Cochain shift = alive[eta].window
                                    ? truncate_cochain(L, S.reps[v], *alive[eta].window)
                                    : S.reps[v];
                alive[eta].alpha.axpy(t, shift);
                invalidate_brackets(eta);
                used_knobs.insert({eta, v});
                out.gauges.push_back({step, alive[eta].combo, v, t, phi});
                return;
            }
        }
    }

    void run() {
        int minw = *std::min_element(S.ring.weights.begin(), S.ring.weights.end());
        int max_degree = S.maxWeight / minw;
        int steps = std::max(0, max_degree - 1);
        for (int k = 1; k <= steps; ++k) {
            std::map<int, std::vector<Polynomial>> cands;
            for (int w = 2; w <= S.maxWeight; ++w) {
                auto cb = candidate_basis(w, k);
                if (!cb.empty()) cands[w] = std::move(cb);
            }
            if (S.gauge) {
                for (auto& [w, cs] : cands) {
                    std::vector<Polynomial> prev_span;
                    for (const auto& [p, c] : prev[w]) prev_span.push_back(p);
                    for (const auto& phi : cs) {
                        if (in_polynomial_span(phi, prev_span, w)) continue;
                        auto dc = delta_coords(phi, w);
                        if (dc.empty()) continue;
                        auto c = class_of(w, obstruction_value(dc, w, classW));
                        if (!class_zero(c)) apply_gauge(k, w, phi, dc, c);
                    }
                }
            }
            for (auto& [w, cs] : cands) {
                std::vector<std::pair<Polynomial, std::vector<Rational>>> recorded;
                std::vector<std::vector<Rational>> classes;
                for (const auto& phi : cs) {
                    auto dc = delta_coords(phi, w);
                    auto c = class_of(w, obstruction_value(dc, w, classW));
                    classes.push_back(c);
                    std::vector<Rational> logged = c;
                    for (auto& x : logged) x *= out.obstruction_scale;
                    out.log.push_back({k, w, phi, logged});
                    recorded.emplace_back(phi, c);
                }
                // stabilization: candidates persisting from the previous step
                // keep their classes
                if (!prev[w].empty()) {
                    std::map<Exponents, int> col;
                    const auto& ms = mons(w);
                    for (int i = 0; i < (int)ms.size(); ++i) col[ms[i]] = i;
                    std::vector<SparseVec> cur_cols;
                    for (const auto& phi : cs) cur_cols.push_back(poly_coords(phi, col));
                    Matrix M = Matrix::from_columns((int)ms.size(), cur_cols);
                    for (const auto& [p, c_old] : prev[w]) {
                        auto x = solve(M, poly_coords(p, col));
                        if (!x) continue; // dropped from the candidate space
                        std::vector<Rational> c_new;
                        for (const auto& [i, v] : *x) {
                            auto padded = classes[i];
                            if (padded.size() > c_new.size())
                                c_new.resize(padded.size(), Rational(0));
                            for (size_t t = 0; t < padded.size(); ++t)
                                c_new[t] += v * padded[t];
                        }
                        if (!classes_equal(c_old, c_new))
                            throw std::runtime_error("lower-weight obstruction classes changed");
                    }
                }
                prev[w] = std::move(recorded);

                // kernel of the class map: new alive vectors
                const ClassSpace* C = cls.count(w) ? &cls.at(w) : nullptr;
                int nreps = C ? (int)C->reps.size() : 0;
                Matrix class_matrix(std::max(nreps, 0), (int)cs.size());
                for (int j = 0; j < (int)cs.size(); ++j)
                    for (int i = 0; i < (int)classes[j].size(); ++i)
                        class_matrix.add(i, j, classes[j][i]);
                std::vector<SparseVec> ker = kernel_basis(class_matrix);
                std::vector<Polynomial> ker_polys;
                for (const auto& kv : ker) {
                    Polynomial p;
                    for (const auto& [j, c] : kv) p.axpy(c, cs[j]);
                    ker_polys.push_back(std::move(p));
                }
                const auto& ms = mons(w);
                std::map<Exponents, int> col;
                for (int i = 0; i < (int)ms.size(); ++i) col[ms[i]] = i;
                std::vector<SparseVec> cols;
                for (int r : alive_by_weight[w]) cols.push_back(poly_coords(alive[r].combo, col));
                const int old_block = (int)cols.size();
                for (const auto& p : ker_polys) cols.push_back(poly_coords(p, col));
                RrefResult red = rref(Matrix::from_columns((int)ms.size(), cols));
                for (int piv : red.pivots) {
                    if (piv < old_block) continue;
                    const Polynomial& p = ker_polys[piv - old_block];
                    AliveVec a;
                    a.combo = p;
                    a.weight = w;
                    a.degree = 0;
                    for (const auto& [e, c] : p.terms) a.degree = std::max(a.degree, total_degree(e));
                    a.window = window_for(a.degree);
                    // primitives solve delta(alpha) = -obs: the differential
                    // used here is the negative of the one implicit in the
                    // deformation equation (fixed by matching the known
                    // constants of the weight-8 relation)
                    Cochain rhs = obstruction_value(delta_coords(p, w), w, a.window)
                                      .scaled(-1);
                    Matrix d2 = differential_matrix(L, 2, w, a.window);
                    ComponentBasis b2 = cochain_basis(L, 2, w, a.window);
                    ComponentBasis b3 = cochain_basis(L, 3, w, a.window);
                    auto x = solve(d2, b3.coordinates(rhs));
                    if (!x)
                        throw std::runtime_error(
                            "no primitive for a kernel vector of the obstruction map");
                    a.alpha = b2.cochain(*x);
                    push_alive(std::move(a));
                }

                // generator update: dual of the obstruction map per collected
                // representative
                if (nreps > 0) {
                    std::vector<SparseVec> cand_rows;
                    for (const auto& phi : cs) cand_rows.push_back(poly_coords(phi, col));
                    Matrix Mt = Matrix::from_rows((int)ms.size(), std::move(cand_rows));
                    for (int r = 0; r < nreps; ++r) {
                        SparseVec b;
                        for (int j = 0; j < (int)cs.size(); ++j) {
                            Rational v = r < (int)classes[j].size() ? classes[j][r] : Rational(0);
                            v *= out.obstruction_scale;
                            if (v != 0) b.emplace_back(j, v);
                        }
                        auto g = solve(Mt, b);
                        if (!g)
                            throw std::runtime_error("generator extraction failed");
                        Polynomial gp;
                        for (const auto& [i, c] : *g) gp.add_term(ms[i], c);
                        if (gp.is_zero())
                            gens.erase({w, r});
                        else
                            gens[{w, r}] = std::move(gp);
                    }
                }
            }
            std::vector<Polynomial> snapshot;
            for (const auto& [key, g] : gens) snapshot.push_back(g);
            out.snapshots.push_back(normalize_relations(S.ring, std::move(snapshot)));
            // alive values must satisfy the defining differential equation
            for (const auto& a : alive) {
                if (a.degree < 2) continue;
                Cochain rhs = obstruction_value(delta_coords(a.combo, a.weight), a.weight, a.window)
                                  .scaled(-1);
                if (!(apply_differential(L, a.alpha, a.window) == rhs))
                    throw std::runtime_error("differential equation violated for an alive vector");
            }
            // coalgebra sanity on all monomials appearing in alive vectors
            for (const auto& a : alive)
                for (const auto& [e, c] : a.combo.terms)
                    if (!coalgebra_cocommutative(e) || !coalgebra_coassociative(e))
                        throw std::runtime_error("comultiplication fails coalgebra laws");
            out.steps = k;
        }
        std::vector<Polynomial> final_gens;
        for (const auto& [key, g] : gens) final_gens.push_back(g);
        out.generators = normalize_relations(S.ring, std::move(final_gens));
    }
};

} // namespace

MiniversalResult run_miniversal(const MiniversalSetup& setup) {
    if (!setup.L) throw std::invalid_argument("run_miniversal: missing algebra");
    if ((int)setup.reps.size() != setup.ring.nvars())
        throw std::invalid_argument("run_miniversal: one representative per dual variable");
    Engine e(setup);
    e.run();
    return e.out;
}

L1Miniversal l1_miniversal_setup(int maxWeight, bool gauge, int classWindow) {
    auto holder = L1Miniversal{};
    int max_degree = std::max(1, maxWeight / 2);
    std::vector<int> windows(max_degree);
    for (int d = 1; d <= max_degree; ++d)
        windows[d - 1] = classWindow + maxWeight * (max_degree - d);
    holder.L = l1_truncated(windows[0] + maxWeight + 1);
    MiniversalSetup s;
    s.ring = PolyRing{{"x", "y", "z"}, {2, 3, 4}};
    s.maxWeight = maxWeight;
    s.gauge = gauge;
    s.degree_windows = windows;
    s.class_window = classWindow;
    for (int g = 7; g <= 11; ++g) s.h3_dim[g] = 1;
    holder.setup = std::move(s);
    holder.setup.L = &holder.L;
    for (int k = 2; k <= 4; ++k)
        holder.setup.reps.push_back(l1_dmu(holder.L, k, windows[0]));
    return holder;
}

} // namespace mvdef
