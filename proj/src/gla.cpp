#include "mvdef/gla.hpp"

#include <map>
#include <stdexcept>

namespace mvdef {

SparseVec GradedLieAlgebra::bracket(int i, int j) const {
    if (i == j) return {};
    if (i > j) return sv_scale(bracket(j, i), Rational(-1));
    auto it = table.find({i, j});
    if (it == table.end()) return {};
    return it->second;
}

SparseVec GradedLieAlgebra::bracket(const SparseVec& a, const SparseVec& b) const {
    std::map<int, Rational> acc;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            for (const auto& [k, c] : bracket(i, j)) acc[k] += x * y * c;
    SparseVec out;
    for (const auto& [k, v] : acc)
        if (v != 0) out.emplace_back(k, v);
    return out;
}

int GradedLieAlgebra::label_index(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (labels[i] == label) return i;
    return -1;
}

SparseVec GradedModule::act(int i, int m) const {
    auto it = action.find({i, m});
    if (it == action.end()) return {};
    return it->second;
}

SparseVec GradedModule::act(int i, const SparseVec& v) const {
    std::map<int, Rational> acc;
    for (const auto& [m, x] : v)
        for (const auto& [k, c] : act(i, m)) acc[k] += x * c;
    SparseVec out;
    for (const auto& [k, v2] : acc)
        if (v2 != 0) out.emplace_back(k, v2);
    return out;
}

GradedLieAlgebra l1_truncated(int N) {
    if (N < 2) throw std::invalid_argument("l1_truncated: N must be >= 2");
    GradedLieAlgebra L;
    L.name = "l1_truncated(" + std::to_string(N) + ")";
    for (int i = 1; i <= N; ++i) {
        L.labels.push_back("e" + std::to_string(i));
        L.degrees.push_back(i);
    }
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (i + j <= N)
                L.table[{i - 1, j - 1}] = {{i + j - 1, Rational(j - i)}};
    return L;
}

GradedModule w_module_truncated(int N, int low_bound) {
    if (low_bound > -3) throw std::invalid_argument("w_module_truncated: low_bound must be <= -3");
    if (N < 2) throw std::invalid_argument("w_module_truncated: N must be >= 2");
    GradedModule M;
    M.name = "w_module";
    for (int j = low_bound; j <= N; ++j) {
        M.labels.push_back("e" + std::to_string(j));
        M.degrees.push_back(j);
    }
    for (int i = 1; i <= N; ++i)
        for (int j = low_bound; j <= N; ++j) {
            if (i + j > N || j == i) continue;
            M.action[{i - 1, j - low_bound}] = {{i + j - low_bound, Rational(j - i)}};
        }
    return M;
}

GradedLieAlgebra FormalBracketFamily::at(const Rational& t) const {
    GradedLieAlgebra L = base;
    for (const auto& [key, terms] : correction) {
        SparseVec v = key.first < key.second ? L.bracket(key.first, key.second) : SparseVec{};
        for (const auto& [target, coeffs] : terms) {
            Rational tp = t, total(0);
            for (const Rational& c : coeffs) {
                total += c * tp;
                tp *= t;
            }
            if (total != 0) v = sv_axpy(v, Rational(1), SparseVec{{target, total}});
        }
        if (v.empty()) L.table.erase(key);
        else L.table[key] = v;
    }
    return L;
}

std::vector<FormalBracketFamily::LinearPart> FormalBracketFamily::linear_parts() const {
    std::map<int, std::map<std::pair<int, int>, SparseVec>> by_degree;
    for (const auto& [key, terms] : correction)
        for (const auto& [target, coeffs] : terms) {
            if (coeffs.empty() || coeffs[0] == 0) continue;
            int g = base.degrees[key.first] + base.degrees[key.second] - base.degrees[target];
            by_degree[g][key].emplace_back(target, coeffs[0]);
        }
    std::vector<LinearPart> out;
    for (auto& [g, terms] : by_degree) out.push_back({g, std::move(terms)});
    return out;
}

FormalBracketFamily l1_formal_family(int id, int N) {
    if (N < 4) throw std::invalid_argument("l1_formal_family: N must be >= 4");
    FormalBracketFamily F;
    F.base = l1_truncated(N);
    F.base.name = "l1_family" + std::to_string(id);
    switch (id) {
    case 1:
        // [e_i,e_j] = (j-i)(e_{i+j} + t e_{i+j-1})
        for (int i = 1; i < N; ++i)
            for (int j = i + 1; j <= N; ++j)
                if (i + j - 1 <= N && j - i != 0)
                    F.correction[{i - 1, j - 1}].emplace_back(
                        i + j - 2, std::vector<Rational>{Rational(j - i)});
        break;
    case 2:
        // [e_1,e_j] = (j-1) e_{j+1} + t j e_j
        for (int j = 2; j <= N; ++j)
            F.correction[{0, j - 1}].emplace_back(j - 1, std::vector<Rational>{Rational(j)});
        break;
    case 3:
        // [e_2,e_j] = (j-2) e_{j+2} + t j e_j for j != 2;
        // the stored pair (e_1,e_2) picks up -t e_1 by antisymmetry.
        for (int j = 3; j <= N; ++j)
            F.correction[{1, j - 1}].emplace_back(j - 1, std::vector<Rational>{Rational(j)});
        F.correction[{0, 1}].emplace_back(0, std::vector<Rational>{Rational(-1)});
        break;
    default:
        throw std::invalid_argument("l1_formal_family: id must be 1, 2 or 3");
    }
    return F;
}

GradedLieAlgebra deformation_family(int id, const Rational& t, int N) {
    GradedLieAlgebra L = l1_formal_family(id, N).at(t);
    L.name = "l1_family" + std::to_string(id) + "(t=" + rat_to_string(t) + ")";
    return L;
}

std::vector<std::array<int, 3>> check_jacobi(const GradedLieAlgebra& L) {
    std::vector<std::array<int, 3>> bad;
    const int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVec bij = L.bracket(i, j);
            for (int k = j + 1; k < n; ++k) {
                SparseVec s = L.bracket(bij, SparseVec{{k, Rational(1)}});
                s = sv_axpy(s, Rational(1), L.bracket(L.bracket(j, k), SparseVec{{i, Rational(1)}}));
                s = sv_axpy(s, Rational(1), L.bracket(L.bracket(k, i), SparseVec{{j, Rational(1)}}));
                if (!s.empty()) bad.push_back({i, j, k});
            }
        }
    return bad;
}

std::vector<std::pair<int, int>> check_degree_additive(const GradedLieAlgebra& L) {
    std::vector<std::pair<int, int>> bad;
    for (const auto& [key, v] : L.table) {
        int want = L.degrees[key.first] + L.degrees[key.second];
        for (const auto& [k, c] : v)
            if (L.degrees[k] != want) {
                bad.push_back(key);
                break;
            }
    }
    return bad;
}

std::vector<std::array<int, 3>> check_module(const GradedLieAlgebra& L, const GradedModule& M,
                                             std::optional<int> degree_cap) {
    std::vector<std::array<int, 3>> bad;
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            if (degree_cap && L.degrees[i] + L.degrees[j] > *degree_cap) continue;
            SparseVec bij = L.bracket(i, j);
            for (int m = 0; m < M.dim(); ++m) {
                SparseVec lhs = M.act(i, M.act(j, m));
                lhs = sv_axpy(lhs, Rational(-1), M.act(j, M.act(i, m)));
                SparseVec rhs;
                for (const auto& [k, c] : bij)
                    rhs = sv_axpy(rhs, c, M.act(k, m));
                if (lhs != rhs) bad.push_back({i, j, m});
            }
        }
    return bad;
}

} // namespace mvdef
