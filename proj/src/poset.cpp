#include "omflat/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace omflat {

std::size_t BitRow::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

BitRow& BitRow::operator|=(const BitRow& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BitRow& BitRow::and_not(const BitRow& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool weak_leq(const Chirotope& n, const Chirotope& m) {
    if (n.rank() != m.rank() || n.ground() != m.ground())
        throw InputError("weak_leq needs equal rank and ground size");
    const auto a = n.signs();
    const auto b = m.signs();
    bool same = true, opposite = true;
    for (std::size_t i = 0; i < a.size() && (same || opposite); ++i) {
        same = same && sign_leq(a[i], b[i]);
        opposite = opposite && sign_leq(a[i], negate(b[i]));
    }
    return same || opposite;
}

bool weak_leq(const OrientedMatroid& n, const OrientedMatroid& m) {
    return weak_leq(n.chirotope(), m.chirotope());
}

FinitePoset::FinitePoset(std::vector<std::string> labels, const Relation& leq)
    : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    up_.assign(n, BitRow(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a == b || leq(a, b)) up_[a].set(b);
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq(a, a)) throw DomainError("relation is not reflexive at '" + labels_[a] + "'");
        for (std::size_t b = a + 1; b < n; ++b)
            if (up_[a].test(b) && up_[b].test(a))
                throw DomainError("antisymmetry violated by '" + labels_[a] + "' and '" +
                                  labels_[b] + "'");
    }
    for (std::size_t a = 0; a < n; ++a) {
        bool ok = true;
        up_[a].for_each([&](std::size_t b) {
            BitRow extra = up_[b];
            extra.and_not(up_[a]);
            if (extra.count() != 0) ok = false;
        });
        if (!ok) throw DomainError("relation is not transitive at '" + labels_[a] + "'");
    }
    compute_hasse();
}

void FinitePoset::compute_hasse() {
    hasse_.clear();
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        BitRow strict = up_[a];
        strict.reset(a);
        BitRow covers = strict;
        strict.for_each([&](std::size_t z) {
            BitRow above = up_[z];
            above.reset(z);
            covers.and_not(above);
        });
        covers.for_each([&](std::size_t b) { hasse_.emplace_back(a, b); });
    }
}

std::vector<std::size_t> FinitePoset::minimal() const {
    std::vector<bool> has_lower(size(), false);
    for (const auto& [a, b] : hasse_) has_lower[b] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (!has_lower[i]) out.push_back(i);
    return out;
}

std::vector<std::size_t> FinitePoset::maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (up_[i].count() == 1) out.push_back(i);
    return out;
}

std::size_t FinitePoset::find(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    return static_cast<std::size_t>(it - labels_.begin());
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& elements) const {
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (auto e : elements) labels.push_back(labels_.at(e));
    return FinitePoset(std::move(labels), [&](std::size_t a, std::size_t b) {
        return leq(elements[a], elements[b]);
    });
}

WeakMapPoset build_weak_map_poset(std::vector<OrientedMatroid> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (const auto& m : elements) labels.push_back(m.key());
    FinitePoset poset(std::move(labels), [&](std::size_t a, std::size_t b) {
        return weak_leq(elements[a], elements[b]);
    });
    return {std::move(elements), std::move(poset)};
}

bool MonotoneMap::is_monotone() const {
    const std::size_t n = poset->size();
    for (std::size_t a = 0; a < n; ++a) {
        bool ok = true;
        poset->up_set(a).for_each([&](std::size_t b) {
            if (!poset->leq(assignment[a], assignment[b])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool MonotoneMap::is_idempotent() const {
    for (std::size_t a = 0; a < assignment.size(); ++a)
        if (assignment[assignment[a]] != assignment[a]) return false;
    return true;
}

std::vector<std::size_t> MonotoneMap::image() const {
    std::vector<std::size_t> out = assignment;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_descending_homotopy(const MonotoneMap& f) {
    if (!f.is_monotone()) return false;
    for (std::size_t a = 0; a < f.assignment.size(); ++a)
        if (!f.poset->leq(f.assignment[a], a)) return false;
    return true;
}

bool is_ascending_homotopy(const MonotoneMap& f) {
    if (!f.is_monotone()) return false;
    for (std::size_t a = 0; a < f.assignment.size(); ++a)
        if (!f.poset->leq(a, f.assignment[a])) return false;
    return true;
}

bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q,
                          const std::vector<std::size_t>& map) {
    if (p.size() != q.size() || map.size() != p.size()) return false;
    std::vector<bool> hit(q.size(), false);
    for (auto y : map) {
        if (y >= q.size() || hit[y]) return false;
        hit[y] = true;
    }
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.leq(a, b) != q.leq(map[a], map[b])) return false;
    return true;
}

namespace {

// Colour refinement over the Hasse diagram, computed jointly so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const FinitePoset& p,
                                                             const FinitePoset& q) {
    auto neighbours = [](const FinitePoset& x) {
        std::vector<std::vector<std::size_t>> ups(x.size()), downs(x.size());
        for (const auto& [a, b] : x.hasse()) {
            ups[a].push_back(b);
            downs[b].push_back(a);
        }
        return std::make_pair(ups, downs);
    };
    const auto [p_up, p_down] = neighbours(p);
    const auto [q_up, q_down] = neighbours(q);

    auto initial = [](const FinitePoset& x, std::size_t a) {
        std::size_t below = 0;
        for (std::size_t b = 0; b < x.size(); ++b) below += x.leq(b, a) ? 1 : 0;
        return std::vector<int>{static_cast<int>(below), static_cast<int>(x.up_set(a).count())};
    };
    std::vector<int> pc(p.size()), qc(q.size());
    {
        std::map<std::vector<int>, int> ids;
        for (std::size_t a = 0; a < p.size(); ++a)
            pc[a] = ids.emplace(initial(p, a), static_cast<int>(ids.size())).first->second;
        for (std::size_t a = 0; a < q.size(); ++a)
            qc[a] = ids.emplace(initial(q, a), static_cast<int>(ids.size())).first->second;
    }
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<int>, int> ids;
        auto signature = [](int own, const std::vector<std::size_t>& ups,
                            const std::vector<std::size_t>& downs, const std::vector<int>& col) {
            std::vector<int> up_cols, down_cols;
            for (auto u : ups) up_cols.push_back(col[u]);
            for (auto d : downs) down_cols.push_back(col[d]);
            std::sort(up_cols.begin(), up_cols.end());
            std::sort(down_cols.begin(), down_cols.end());
            std::vector<int> sig{own, -1};
            sig.insert(sig.end(), up_cols.begin(), up_cols.end());
            sig.push_back(-2);
            sig.insert(sig.end(), down_cols.begin(), down_cols.end());
            return sig;
        };
        std::vector<int> npc(p.size()), nqc(q.size());
        for (std::size_t a = 0; a < p.size(); ++a)
            npc[a] = ids.emplace(signature(pc[a], p_up[a], p_down[a], pc), static_cast<int>(ids.size()))
                         .first->second;
        for (std::size_t a = 0; a < q.size(); ++a)
            nqc[a] = ids.emplace(signature(qc[a], q_up[a], q_down[a], qc), static_cast<int>(ids.size()))
                         .first->second;
        pc = std::move(npc);
        qc = std::move(nqc);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {pc, qc};
}

}  // namespace

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q, std::vector<std::size_t>* witness) {
    if (p.size() != q.size() || p.hasse().size() != q.hasse().size()) return false;
    const std::size_t n = p.size();
    const auto [pc, qc] = refine_colours(p, q);
    {
        std::vector<int> a = pc, b = qc;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::unordered_map<int, std::vector<std::size_t>> by_colour;
    for (std::size_t y = 0; y < n; ++y) by_colour[qc[y]].push_back(y);

    // Breadth-first order over the Hasse diagram, each component rooted at its rarest
    // colour; a non-root element may only go to a cover-neighbour of its parent's image.
    std::vector<std::vector<std::size_t>> p_up(n), p_down(n), q_up(n), q_down(n);
    for (const auto& [a, b] : p.hasse()) {
        p_up[a].push_back(b);
        p_down[b].push_back(a);
    }
    for (const auto& [a, b] : q.hasse()) {
        q_up[a].push_back(b);
        q_down[b].push_back(a);
    }
    std::vector<std::size_t> order;
    std::vector<std::size_t> parent(n, n);
    std::vector<bool> parent_below(n, false);
    {
        std::vector<std::size_t> roots(n);
        std::iota(roots.begin(), roots.end(), 0);
        std::stable_sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
            return by_colour[pc[a]].size() < by_colour[pc[b]].size();
        });
        std::vector<bool> seen(n, false);
        for (std::size_t root : roots) {
            if (seen[root]) continue;
            seen[root] = true;
            std::size_t head = order.size();
            order.push_back(root);
            while (head < order.size()) {
                const std::size_t a = order[head++];
                for (int dir = 0; dir < 2; ++dir)
                    for (std::size_t b : dir == 0 ? p_up[a] : p_down[a]) {
                        if (seen[b]) continue;
                        seen[b] = true;
                        parent[b] = a;
                        parent_below[b] = dir == 0;
                        order.push_back(b);
                    }
            }
        }
    }
    auto candidates_for = [&](std::size_t x, const std::vector<std::size_t>& map) {
        if (parent[x] == n) return by_colour[pc[x]];
        const std::size_t image = map[parent[x]];
        std::vector<std::size_t> out;
        for (std::size_t y : parent_below[x] ? q_up[image] : q_down[image])
            if (qc[y] == pc[x]) out.push_back(y);
        return out;
    };

    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> cursor(n, 0);
    std::size_t depth = 0;
    while (depth < n) {
        const std::size_t x = order[depth];
        const std::vector<std::size_t> candidates = candidates_for(x, map);
        bool placed = false;
        if (map[x] != n) {
            used[map[x]] = false;
            map[x] = n;
        }
        while (cursor[depth] < candidates.size()) {
            const std::size_t y = candidates[cursor[depth]++];
            if (used[y]) continue;
            bool consistent = true;
            for (std::size_t k = 0; k < depth && consistent; ++k) {
                const std::size_t xp = order[k];
                const std::size_t yp = map[xp];
                consistent = p.leq(xp, x) == q.leq(yp, y) && p.leq(x, xp) == q.leq(y, yp);
            }
            if (!consistent) continue;
            map[x] = y;
            used[y] = true;
            placed = true;
            break;
        }
        if (placed) {
            ++depth;
            if (depth < n) cursor[depth] = 0;
        } else {
            cursor[depth] = 0;
            if (depth == 0) return false;
            --depth;
        }
    }
    if (witness != nullptr) *witness = map;
    return true;
}

std::string poset_to_dot(const FinitePoset& p, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
    for (const auto& [a, b] : p.hasse()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace omflat
