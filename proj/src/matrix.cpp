#include "mvdef/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>

namespace mvdef {

SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    if (c == 0) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sv_scale(const SparseVec& a, const Rational& c) {
    if (c == 0) return {};
    SparseVec out = a;
    for (auto& [idx, v] : out) v *= c;
    return out;
}

Rational sv_dot(const SparseVec& a, const SparseVec& b) {
    Rational acc(0);
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else acc += a[i++].second * b[j++].second;
    }
    return acc;
}

Rational sv_get(const SparseVec& a, int idx) {
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != a.end() && it->first == idx) return it->second;
    return Rational(0);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.row_[i] = {{i, Rational(1)}};
    return m;
}

Matrix Matrix::from_rows(int cols, std::vector<SparseVec> rows) {
    Matrix m((int)rows.size(), cols);
    m.row_ = std::move(rows);
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<SparseVec>& cols) {
    Matrix m(rows, (int)cols.size());
    for (int c = 0; c < (int)cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) m.row_[r].emplace_back(c, v);
    return m; // each row already sorted because columns were visited in order
}

long Matrix::nnz() const {
    long n = 0;
    for (const auto& r : row_) n += (long)r.size();
    return n;
}

void Matrix::add(int r, int c, const Rational& v) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    if (v == 0) return;
    auto& row = row_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.emplace(it, c, v);
    }
}

void Matrix::set(int r, int c, const Rational& v) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    auto& row = row_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != row.end() && it->first == c) {
        if (v == 0) row.erase(it);
        else it->second = v;
    } else if (v != 0) {
        row.emplace(it, c, v);
    }
}

Rational Matrix::at(int r, int c) const { return sv_get(row_[r], c); }

SparseVec Matrix::column(int c) const {
    SparseVec out;
    for (int r = 0; r < rows_; ++r) {
        Rational v = at(r, c);
        if (v != 0) out.emplace_back(r, v);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_[r]) t.row_[c].emplace_back(r, v);
    return t;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    assert(cols_ == rhs.rows_);
    Matrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::map<int, Rational> acc;
        for (const auto& [k, v] : row_[r])
            for (const auto& [c, w] : rhs.row_[k]) acc[c] += v * w;
        for (const auto& [c, v] : acc)
            if (v != 0) out.row_[r].emplace_back(c, v);
    }
    return out;
}

SparseVec Matrix::apply(const SparseVec& x) const {
    SparseVec out;
    for (int r = 0; r < rows_; ++r) {
        Rational v = sv_dot(row_[r], x);
        if (v != 0) out.emplace_back(r, v);
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& r : row_)
        if (!r.empty()) return false;
    return true;
}

namespace {

// Forward elimination. Returns pivot rows in pivot-column order; pivots[i]
// is the leading column of echelon[i]. Pivot choice within a column prefers
// the sparsest candidate row to limit fill-in.
struct Echelon {
    std::vector<SparseVec> rows;
    std::vector<int> pivots;
};

Echelon echelonize(const Matrix& m) {
    std::vector<SparseVec> work;
    work.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) work.push_back(m.row(r));

    // rows bucketed by current leading column
    std::vector<std::vector<int>> by_lead(m.cols());
    for (int i = 0; i < (int)work.size(); ++i) by_lead[work[i][0].first].push_back(i);

    Echelon ech;
    for (int col = 0; col < m.cols(); ++col) {
        auto& bucket = by_lead[col];
        if (bucket.empty()) continue;
        int piv = bucket[0];
        for (int cand : bucket)
            if (work[cand].size() < work[piv].size()) piv = cand;
        const Rational piv_lead = work[piv][0].second;
        for (int other : bucket) {
            if (other == piv) continue;
            Rational factor = -work[other][0].second / piv_lead;
            work[other] = sv_axpy(work[other], factor, work[piv]);
            if (!work[other].empty()) by_lead[work[other][0].first].push_back(other);
        }
        ech.rows.push_back(std::move(work[piv]));
        ech.pivots.push_back(col);
        work[piv].clear();
        bucket.clear();
    }
    return ech;
}

} // namespace

// Rank only: pivot order is free, so use a min-degree heuristic (sparsest
// column, then sparsest row within it) to limit fill-in. Considerably faster
// than ordered elimination on the large differential matrices.
int rank(const Matrix& m) {
    std::vector<SparseVec> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) rows.push_back(m.row(r));

    const int C = m.cols();
    std::vector<std::set<int>> col_rows(C);
    for (int r = 0; r < (int)rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);

    auto update_sets = [&](int r, const SparseVec& before, const SparseVec& after) {
        size_t i = 0, j = 0;
        while (i < before.size() || j < after.size()) {
            if (j == after.size() || (i < before.size() && before[i].first < after[j].first)) {
                col_rows[before[i].first].erase(r);
                ++i;
            } else if (i == before.size() || after[j].first < before[i].first) {
                col_rows[after[j].first].insert(r);
                ++j;
            } else {
                ++i;
                ++j;
            }
        }
    };

    int rk = 0;
    while (true) {
        int pc = -1;
        size_t best = SIZE_MAX;
        for (int c = 0; c < C; ++c) {
            size_t n = col_rows[c].size();
            if (n > 0 && n < best) {
                best = n;
                pc = c;
                if (n == 1) break;
            }
        }
        if (pc < 0) break;
        int pr = -1;
        size_t rbest = SIZE_MAX;
        for (int r : col_rows[pc])
            if (rows[r].size() < rbest) {
                rbest = rows[r].size();
                pr = r;
            }
        ++rk;
        const Rational lead = sv_get(rows[pr], pc);
        std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (int r : targets) {
            if (r == pr) continue;
            Rational factor = -sv_get(rows[r], pc) / lead;
            SparseVec next = sv_axpy(rows[r], factor, rows[pr]);
            update_sets(r, rows[r], next);
            rows[r] = std::move(next);
        }
        update_sets(pr, rows[pr], {});
        rows[pr].clear();
    }
    return rk;
}

RrefResult rref(const Matrix& m) {
    Echelon ech = echelonize(m);
    const int nr = (int)ech.rows.size();
    // normalize leading entries, then clear above each pivot right-to-left
    for (int i = 0; i < nr; ++i) {
        Rational lead = ech.rows[i][0].second;
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            for (auto& [c, v] : ech.rows[i]) v *= inv;
        }
    }
    for (int i = nr - 1; i >= 0; --i) {
        int col = ech.pivots[i];
        for (int j = 0; j < i; ++j) {
            Rational v = sv_get(ech.rows[j], col);
            if (v != 0) ech.rows[j] = sv_axpy(ech.rows[j], -v, ech.rows[i]);
        }
    }
    RrefResult res;
    res.reduced = Matrix::from_rows(m.cols(), std::move(ech.rows));
    res.pivots = std::move(ech.pivots);
    return res;
}

std::vector<SparseVec> kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    std::vector<int> pivot_row(m.cols(), -1);
    for (int i = 0; i < (int)r.pivots.size(); ++i) {
        is_pivot[r.pivots[i]] = true;
        pivot_row[r.pivots[i]] = i;
    }
    std::vector<SparseVec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        for (int i = 0; i < (int)r.pivots.size(); ++i) {
            Rational e = sv_get(r.reduced.row(i), f);
            if (e != 0) v.emplace_back(r.pivots[i], -e);
        }
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<SparseVec> solve(const Matrix& m, const SparseVec& b) {
    Matrix aug(m.rows(), m.cols() + 1);
    std::vector<SparseVec> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    for (const auto& [r, v] : b) rows[r].emplace_back(m.cols(), v);
    aug = Matrix::from_rows(m.cols() + 1, std::move(rows));
    RrefResult red = rref(aug);
    SparseVec x;
    for (int i = 0; i < (int)red.pivots.size(); ++i) {
        if (red.pivots[i] == m.cols()) return std::nullopt; // inconsistent
        Rational v = sv_get(red.reduced.row(i), m.cols());
        if (v != 0) x.emplace_back(red.pivots[i], v);
    }
    return x;
}

std::pair<bool, std::optional<SparseVec>> image_membership(const Matrix& m, const SparseVec& b) {
    auto x = solve(m, b);
    if (x) return {true, x};
    return {false, std::nullopt};
}

} // namespace mvdef
