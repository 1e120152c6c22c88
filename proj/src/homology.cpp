#include "omflat/homology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace omflat {

namespace {

const std::vector<Simplex> kNoSimplices;

struct Overflow {};

std::int64_t add_scaled(std::int64_t a, std::int64_t k, std::int64_t b) {
    std::int64_t product = 0, sum = 0;
    if (__builtin_mul_overflow(k, b, &product) || __builtin_add_overflow(a, product, &sum))
        throw Overflow{};
    return sum;
}

Integer add_scaled(const Integer& a, const Integer& k, const Integer& b) { return a + k * b; }

bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
bool is_unit(const Integer& v) { return v == 1 || v == -1; }
Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
Integer to_integer(const Integer& v) { return v; }

template <class T>
SparseSmith eliminate(const SparseMatrix& m, const Budget* budget) {
    using Column = std::vector<std::pair<std::size_t, T>>;
    std::vector<Column> cols(m.cols);
    std::vector<std::unordered_set<std::size_t>> row_cols(m.rows);
    for (std::size_t j = 0; j < m.cols; ++j) {
        for (const auto& [r, v] : m.columns[j]) {
            if (v == 0) continue;
            cols[j].emplace_back(r, T(v));
            row_cols[r].insert(j);
        }
    }
    std::vector<bool> alive(m.cols, true);
    SparseSmith result;
    std::size_t ticks = 0;

    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < m.cols; ++j)
            if (alive[j] && !cols[j].empty()) order.push_back(j);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return cols[a].size() < cols[b].size();
        });
        for (std::size_t j : order) {
            if (!alive[j] || cols[j].empty()) continue;
            if ((++ticks & 1023) == 0) poll(budget, "sparse elimination");
            std::size_t pivot_row = m.rows;
            T pivot_value{};
            for (const auto& [r, v] : cols[j]) {
                if (!is_unit(v)) continue;
                if (pivot_row == m.rows || row_cols[r].size() < row_cols[pivot_row].size()) {
                    pivot_row = r;
                    pivot_value = v;
                }
            }
            if (pivot_row == m.rows) continue;

            const Column pivot_col = cols[j];
            std::vector<std::size_t> others(row_cols[pivot_row].begin(), row_cols[pivot_row].end());
            std::sort(others.begin(), others.end());
            for (std::size_t c : others) {
                if (c == j) continue;
                Column& target = cols[c];
                const auto hit = std::lower_bound(
                    target.begin(), target.end(), pivot_row,
                    [](const auto& entry, std::size_t r) { return entry.first < r; });
                // col_c += factor * col_j clears the pivot row, since pivot_value is a unit
                const T factor = -(hit->second * pivot_value);
                Column merged;
                merged.reserve(target.size() + pivot_col.size());
                std::size_t a = 0, b = 0;
                while (a < target.size() || b < pivot_col.size()) {
                    if (b == pivot_col.size() ||
                        (a < target.size() && target[a].first < pivot_col[b].first)) {
                        merged.push_back(target[a++]);
                    } else if (a == target.size() || pivot_col[b].first < target[a].first) {
                        const std::size_t r = pivot_col[b].first;
                        merged.emplace_back(r, add_scaled(T(0), factor, pivot_col[b].second));
                        row_cols[r].insert(c);
                        ++b;
                    } else {
                        const std::size_t r = target[a].first;
                        T value = add_scaled(target[a].second, factor, pivot_col[b].second);
                        if (value == 0) row_cols[r].erase(c);
                        else merged.emplace_back(r, std::move(value));
                        ++a;
                        ++b;
                    }
                }
                target = std::move(merged);
            }
            for (const auto& [r, v] : pivot_col) row_cols[r].erase(j);
            cols[j].clear();
            alive[j] = false;
            ++result.rank;
            progress = true;
        }
    }

    std::vector<std::size_t> rest_cols, rest_rows;
    std::vector<std::size_t> row_slot(m.rows, m.rows);
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (!alive[j] || cols[j].empty()) continue;
        rest_cols.push_back(j);
        for (const auto& [r, v] : cols[j]) {
            if (row_slot[r] == m.rows) {
                row_slot[r] = rest_rows.size();
                rest_rows.push_back(r);
            }
        }
    }
    if (!rest_cols.empty()) {
        std::vector<std::vector<Integer>> dense(rest_rows.size(),
                                                std::vector<Integer>(rest_cols.size()));
        for (std::size_t k = 0; k < rest_cols.size(); ++k)
            for (const auto& [r, v] : cols[rest_cols[k]]) dense[row_slot[r]][k] = to_integer(v);
        poll(budget, "dense smith normal form");
        for (Integer& d : smith_normal_form(std::move(dense))) {
            ++result.rank;
            if (d != 1) result.nonunit_factors.push_back(d);
        }
    }
    return result;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(int vertex_count,
                                                  const std::vector<Simplex>& faces) {
    std::vector<std::set<Simplex>> sets;
    for (Simplex f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) continue;
        for (int v : f)
            if (v < 0 || v >= vertex_count) throw InputError("simplex vertex out of range");
        const std::size_t k = f.size();
        if (sets.size() < k) sets.resize(k);
        for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ULL << i)) sub.push_back(f[i]);
            sets[sub.size() - 1].insert(std::move(sub));
        }
    }
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    for (auto& s : sets) c.by_dim_.emplace_back(s.begin(), s.end());
    c.finalize();
    return c;
}

void SimplicialComplex::finalize() {
    for (auto& level : by_dim_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return kNoSimplices;
    return by_dim_[dim];
}

std::size_t SimplicialComplex::total() const {
    std::size_t t = 0;
    for (const auto& level : by_dim_) t += level.size();
    return t;
}

std::int64_t SimplicialComplex::index_of(const Simplex& s) const {
    if (s.empty()) return -1;
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    const auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return -1;
    return it - level.begin();
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < by_dim_.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(by_dim_[k].size());
    return chi;
}

SimplicialComplex order_complex(const FinitePoset& p, const Budget* budget) {
    SimplicialComplex c;
    c.vertex_count_ = static_cast<int>(p.size());
    std::vector<std::vector<std::size_t>> above(p.size());
    for (std::size_t a = 0; a < p.size(); ++a)
        p.up_set(a).for_each([&](std::size_t b) {
            if (b != a) above[a].push_back(b);
        });
    std::vector<int> chain;
    std::size_t ticks = 0;
    auto record = [&]() {
        Simplex s(chain.begin(), chain.end());
        std::sort(s.begin(), s.end());
        if (c.by_dim_.size() < s.size()) c.by_dim_.resize(s.size());
        c.by_dim_[s.size() - 1].push_back(std::move(s));
        if ((++ticks & 4095) == 0) poll(budget, "order complex");
    };
    auto extend = [&](auto&& self, std::size_t x) -> void {
        record();
        for (std::size_t y : above[x]) {
            chain.push_back(static_cast<int>(y));
            self(self, y);
            chain.pop_back();
        }
    };
    for (std::size_t x = 0; x < p.size(); ++x) {
        chain.assign(1, static_cast<int>(x));
        extend(extend, x);
    }
    c.finalize();
    return c;
}

bool SparseMatrix::is_zero() const {
    for (const auto& col : columns)
        for (const auto& entry : col)
            if (entry.second != 0) return false;
    return true;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols != other.rows) throw InputError("sparse product dimension mismatch");
    SparseMatrix out;
    out.rows = rows;
    out.cols = other.cols;
    out.columns.resize(other.cols);
    for (std::size_t j = 0; j < other.cols; ++j) {
        std::vector<std::int64_t> acc(rows, 0);
        std::vector<bool> touched(rows, false);
        for (const auto& [k, b] : other.columns[j])
            for (const auto& [i, a] : columns[k]) {
                acc[i] = add_scaled(acc[i], a, b);
                touched[i] = true;
            }
        for (std::size_t i = 0; i < rows; ++i)
            if (touched[i] && acc[i] != 0) out.columns[j].emplace_back(i, acc[i]);
    }
    return out;
}

std::vector<SparseMatrix> boundary_matrices(const SimplicialComplex& k) {
    const int dim = k.dimension();
    std::vector<SparseMatrix> out(std::max(dim + 1, 1));
    for (int d = 1; d <= dim; ++d) {
        SparseMatrix& m = out[d];
        m.rows = k.count(d - 1);
        m.cols = k.count(d);
        m.columns.resize(m.cols);
        const auto& level = k.simplices(d);
        for (std::size_t j = 0; j < level.size(); ++j) {
            const Simplex& s = level[j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t t = 0; t < s.size(); ++t)
                    if (t != i) face.push_back(s[t]);
                const std::int64_t row = k.index_of(face);
                if (row < 0) throw std::logic_error("complex is not closed under faces");
                m.columns[j].emplace_back(static_cast<std::size_t>(row), i % 2 == 0 ? 1 : -1);
            }
            std::sort(m.columns[j].begin(), m.columns[j].end());
        }
    }
    return out;
}

std::vector<Integer> smith_normal_form(std::vector<std::vector<Integer>> a) {
    std::vector<Integer> factors;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& row : a) std::swap(row[x], row[y]);
    };
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        std::swap(a[t], a[pi]);
        swap_cols(t, pj);
        for (;;) {
            bool changed = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                changed |= a[i][t] != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                changed |= a[t][j] != 0;
            }
            if (changed) {
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
                        bi = t;
                        bj = j;
                    }
                if (bi != t) std::swap(a[t], a[bi]);
                if (bj != t) swap_cols(t, bj);
                continue;
            }
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        fixed = true;
                    }
            if (!fixed) break;
        }
        factors.push_back(abs(a[t][t]));
    }
    return factors;
}

SparseSmith sparse_smith(const SparseMatrix& m, const Budget* budget) {
    try {
        return eliminate<std::int64_t>(m, budget);
    } catch (const Overflow&) {
        return eliminate<Integer>(m, budget);
    }
}

bool HomologyResult::is_trivial() const {
    if (empty_complex || euler_characteristic != 1) return false;
    for (auto b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

HomologyResult reduced_homology(const SimplicialComplex& k, const Budget* budget) {
    HomologyResult result;
    if (k.empty()) {
        result.empty_complex = true;
        return result;
    }
    const int dim = k.dimension();
    const auto boundaries = boundary_matrices(k);
    // rank[d] = rank of the boundary out of dimension d; the augmentation has rank 1.
    std::vector<std::size_t> rank(dim + 2, 0);
    std::vector<std::vector<Integer>> factors(dim + 2);
    rank[0] = 1;
    for (int d = 1; d <= dim; ++d) {
        SparseSmith s = sparse_smith(boundaries[d], budget);
        rank[d] = s.rank;
        factors[d] = std::move(s.nonunit_factors);
    }
    result.betti.resize(dim + 1);
    result.torsion.resize(dim + 1);
    std::int64_t alternating = 0;
    for (int d = 0; d <= dim; ++d) {
        result.betti[d] = static_cast<std::int64_t>(k.count(d)) -
                          static_cast<std::int64_t>(rank[d]) -
                          static_cast<std::int64_t>(rank[d + 1]);
        result.torsion[d] = factors[d + 1];
        alternating += (d % 2 == 0 ? 1 : -1) * result.betti[d];
    }
    result.euler_characteristic = k.euler_characteristic();
    if (alternating != result.euler_characteristic - 1)
        throw std::logic_error("Euler characteristic disagrees with reduced Betti numbers");
    return result;
}

CollapseResult greedy_collapse(const SimplicialComplex& k, const Budget* budget) {
    CollapseResult result;
    const int dim = k.dimension();
    std::vector<std::size_t> offset(dim + 2, 0);
    for (int d = 0; d <= dim; ++d) offset[d + 1] = offset[d] + k.count(d);
    const std::size_t total = offset[dim + 1];
    auto ref_of = [&](std::size_t id) {
        int d = 0;
        while (offset[d + 1] <= id) ++d;
        return SimplexRef{d, static_cast<std::uint32_t>(id - offset[d])};
    };

    std::vector<std::vector<std::uint32_t>> faces(total), cofaces(total);
    for (int d = 1; d <= dim; ++d) {
        const auto& level = k.simplices(d);
        for (std::size_t j = 0; j < level.size(); ++j) {
            const std::size_t id = offset[d] + j;
            for (std::size_t i = 0; i < level[j].size(); ++i) {
                Simplex face;
                for (std::size_t t = 0; t < level[j].size(); ++t)
                    if (t != i) face.push_back(level[j][t]);
                const auto fid = offset[d - 1] + static_cast<std::size_t>(k.index_of(face));
                faces[id].push_back(static_cast<std::uint32_t>(fid));
                cofaces[fid].push_back(static_cast<std::uint32_t>(id));
            }
        }
    }
    std::vector<bool> alive(total, true);
    std::vector<std::uint32_t> live_cofaces(total);
    std::deque<std::uint32_t> queue;
    for (std::size_t id = 0; id < total; ++id) {
        live_cofaces[id] = static_cast<std::uint32_t>(cofaces[id].size());
        if (live_cofaces[id] == 1) queue.push_back(static_cast<std::uint32_t>(id));
    }
    std::size_t ticks = 0;
    while (!queue.empty()) {
        const std::uint32_t sigma = queue.front();
        queue.pop_front();
        if (!alive[sigma] || live_cofaces[sigma] != 1) continue;
        if ((++ticks & 4095) == 0) poll(budget, "greedy collapse");
        std::uint32_t tau = 0;
        for (auto c : cofaces[sigma])
            if (alive[c]) tau = c;
        alive[sigma] = false;
        alive[tau] = false;
        result.steps.emplace_back(ref_of(sigma), ref_of(tau));
        for (auto f : faces[tau]) {
            if (f == sigma) continue;
            if (--live_cofaces[f] == 1 && alive[f]) queue.push_back(f);
        }
        for (auto f : faces[sigma])
            if (--live_cofaces[f] == 1 && alive[f]) queue.push_back(f);
    }
    result.residual.vertex_count_ = k.vertex_count();
    for (int d = 0; d <= dim; ++d) {
        std::vector<Simplex> level;
        for (std::size_t j = 0; j < k.count(d); ++j)
            if (alive[offset[d] + j]) level.push_back(k.simplices(d)[j]);
        result.residual.by_dim_.push_back(std::move(level));
    }
    result.residual.finalize();
    return result;
}

ContractibilityCertificate certify_contractible(const FinitePoset& p, const Budget* budget) {
    const SimplicialComplex k = order_complex(p, budget);
    ContractibilityCertificate cert;
    if (!k.empty()) {
        const CollapseResult collapse = greedy_collapse(k, budget);
        cert.collapsible = collapse.collapsible();
        cert.collapse_steps = collapse.steps.size();
    }
    cert.homology = reduced_homology(k, budget);
    return cert;
}

}  // namespace omflat
