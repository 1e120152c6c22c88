#include "omflat/sphere.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "omflat/errors.hpp"

namespace omflat {

namespace {

constexpr const char* kGrammar = "expected \"cycle:n\" (n>=3), \"simplex:m\" (m>=1) or \"join:a,b\" (a,b>=1)";

int parse_positive(std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw InputError(std::string("malformed sphere descriptor: ") + kGrammar);
    return value;
}

}  // namespace

SimplicialSphere::SimplicialSphere(int dim, int vertex_count,
                                   std::vector<std::vector<int>> facets, SphereFamily family,
                                   std::string descriptor)
    : dim_(dim), vertex_count_(vertex_count), facets_(std::move(facets)), family_(family),
      descriptor_(std::move(descriptor)) {
    std::vector<bool> seen(vertex_count_ + 1, false);
    for (auto& f : facets_) {
        std::sort(f.begin(), f.end());
        if (static_cast<int>(f.size()) != dim_ + 1 ||
            std::adjacent_find(f.begin(), f.end()) != f.end())
            throw InputError("facet does not have dim+1 distinct vertices");
        for (int v : f) {
            if (v < 1 || v > vertex_count_) throw InputError("facet vertex out of range");
            seen[v] = true;
        }
    }
    for (int v = 1; v <= vertex_count_; ++v)
        if (!seen[v]) throw InputError("vertex " + std::to_string(v) + " lies in no facet");
    std::sort(facets_.begin(), facets_.end());
}

SimplicialSphere SimplicialSphere::cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<std::vector<int>> facets;
    for (int i = 1; i < n; ++i) facets.push_back({i, i + 1});
    facets.push_back({1, n});
    return SimplicialSphere(1, n, std::move(facets), SphereFamily::cycle,
                            "cycle:" + std::to_string(n));
}

SimplicialSphere SimplicialSphere::simplex_boundary(int m) {
    if (m < 1) throw InputError("simplex boundary needs m >= 1");
    std::vector<std::vector<int>> facets;
    for (int skip = 1; skip <= m + 1; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= m + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialSphere(m - 1, m + 1, std::move(facets), SphereFamily::simplex_boundary,
                            "simplex:" + std::to_string(m));
}

SimplicialSphere SimplicialSphere::join(const SimplicialSphere& a, const SimplicialSphere& b) {
    std::vector<std::vector<int>> facets;
    for (const auto& fa : a.facets_)
        for (const auto& fb : b.facets_) {
            std::vector<int> f = fa;
            for (int v : fb) f.push_back(v + a.vertex_count_);
            facets.push_back(std::move(f));
        }
    std::string descriptor;
    if (a.family_ == SphereFamily::simplex_boundary && b.family_ == SphereFamily::simplex_boundary)
        descriptor = "join:" + a.descriptor_.substr(8) + "," + b.descriptor_.substr(8);
    else
        descriptor = "join(" + a.descriptor_ + "," + b.descriptor_ + ")";
    return SimplicialSphere(a.dim_ + b.dim_ + 1, a.vertex_count_ + b.vertex_count_,
                            std::move(facets), SphereFamily::join, std::move(descriptor));
}

SimplicialSphere SimplicialSphere::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw InputError(std::string("malformed sphere descriptor: ") + kGrammar);
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view args = spec.substr(colon + 1);
    if (kind == "cycle") return cycle(parse_positive(args));
    if (kind == "simplex") return simplex_boundary(parse_positive(args));
    if (kind == "join") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw InputError(std::string("malformed sphere descriptor: ") + kGrammar);
        return join(simplex_boundary(parse_positive(args.substr(0, comma))),
                    simplex_boundary(parse_positive(args.substr(comma + 1))));
    }
    throw InputError(std::string("unknown sphere kind: ") + kGrammar);
}

std::vector<std::vector<int>> SimplicialSphere::faces() const {
    std::set<std::vector<int>> all;
    for (const auto& f : facets_) {
        const std::size_t k = f.size();
        for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ULL << i)) sub.push_back(f[i]);
            all.insert(std::move(sub));
        }
    }
    return {all.begin(), all.end()};
}

std::vector<int> SimplicialSphere::cyclic_order() const {
    if (dim_ != 1) throw InputError("cyclic order is only defined for 1-spheres");
    std::vector<std::vector<int>> neighbours(vertex_count_ + 1);
    for (const auto& f : facets_) {
        neighbours[f[0]].push_back(f[1]);
        neighbours[f[1]].push_back(f[0]);
    }
    for (int v = 1; v <= vertex_count_; ++v) {
        if (neighbours[v].size() != 2) throw InputError("not a 1-sphere: vertex degree != 2");
        std::sort(neighbours[v].begin(), neighbours[v].end());
    }
    std::vector<int> order{1};
    int previous = 1;
    int current = neighbours[1][0];
    while (current != 1) {
        order.push_back(current);
        const int next = neighbours[current][0] == previous ? neighbours[current][1]
                                                            : neighbours[current][0];
        previous = current;
        current = next;
        if (static_cast<int>(order.size()) > vertex_count_)
            throw InputError("not a 1-sphere: facet graph is not a single cycle");
    }
    if (static_cast<int>(order.size()) != vertex_count_)
        throw InputError("not a 1-sphere: facet graph is disconnected");
    return order;
}

}  // namespace omflat
