#include "omflat/flattening.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <map>
#include "json.hpp"

#include "omflat/errors.hpp"
#include "omflat/random.hpp"

namespace omflat {

namespace {

void validate_shape(const Flattening& f) {
    const int k = f.sphere.dim();
    if (static_cast<int>(f.coords.size()) != f.sphere.vertex_count())
        throw InputError("flattening needs one vector per vertex");
    for (std::size_t v = 0; v < f.coords.size(); ++v) {
        if (static_cast<int>(f.coords[v].size()) != k + 1)
            throw InputError("vertex " + std::to_string(v + 1) + " has a vector of wrong dimension");
        if (std::all_of(f.coords[v].begin(), f.coords[v].end(), [](const Rational& x) { return x == 0; }))
            throw InputError("vertex " + std::to_string(v + 1) + " is mapped to the origin");
    }
}

Sign det_sign_of(const Flattening& f, const std::vector<int>& vertices, const RationalVector* extra) {
    std::vector<const RationalVector*> cols;
    for (int v : vertices) cols.push_back(&f.coords[v - 1]);
    if (extra != nullptr) cols.push_back(extra);
    return determinant_sign(cols);
}

FlatteningVerdict generic_fan_check(const Flattening& f) {
    const auto& facets = f.sphere.facets();
    std::vector<Sign> orientation(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        orientation[i] = det_sign_of(f, facets[i], nullptr);
        if (orientation[i] == Sign::zero) return {false, "facet cone is degenerate"};
    }

    std::map<std::vector<int>, std::vector<int>> walls;  // ridge -> opposite vertices
    for (const auto& facet : facets)
        for (std::size_t i = 0; i < facet.size(); ++i) {
            std::vector<int> ridge;
            for (std::size_t j = 0; j < facet.size(); ++j)
                if (j != i) ridge.push_back(facet[j]);
            walls[ridge].push_back(facet[i]);
        }
    for (const auto& [ridge, opposite] : walls) {
        if (opposite.size() != 2)
            throw std::logic_error("non-simplicial wall data: ridge not shared by two facets");
        const Sign a = det_sign_of(f, ridge, &f.coords[opposite[0] - 1]);
        const Sign b = det_sign_of(f, ridge, &f.coords[opposite[1] - 1]);
        if (a == Sign::zero || b == Sign::zero || a == b)
            return {false, "adjacent facet cones overlap across a wall"};
    }

    // Degree of the fan along a generic ray d(t) = (1, t, t^2, ...).
    const int dim = f.sphere.dim() + 1;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        const Rational t(attempt + 3, 2 * attempt + 7);
        RationalVector d(dim);
        Rational power = 1;
        for (int i = 0; i < dim; ++i) {
            d[i] = power;
            power *= t;
        }
        bool generic = true;
        int hits = 0;
        for (std::size_t fi = 0; fi < facets.size() && generic; ++fi) {
            bool inside = true;
            for (std::size_t i = 0; i < facets[fi].size(); ++i) {
                std::vector<const RationalVector*> cols;
                for (std::size_t j = 0; j < facets[fi].size(); ++j)
                    cols.push_back(j == i ? &d : &f.coords[facets[fi][j] - 1]);
                const Sign coefficient = determinant_sign(cols) * orientation[fi];
                if (coefficient == Sign::zero) {
                    generic = false;
                    break;
                }
                inside = inside && coefficient == Sign::plus;
            }
            if (generic && inside) ++hits;
        }
        if (generic) {
            if (hits == 1) return {true, ""};
            return {false, "generic ray meets " + std::to_string(hits) + " facet cones"};
        }
    }
    throw std::logic_error("no generic ray found");
}

FlatteningVerdict planar_check(const Flattening& f) {
    if (f.sphere.dim() != 1) throw InputError("planar check needs a 1-sphere");
    const std::vector<int> order = f.sphere.cyclic_order();
    std::vector<RationalVector> ring;
    for (int v : order) ring.push_back(f.coords[v - 1]);
    const std::size_t n = ring.size();
    Sign common = Sign::zero;
    for (std::size_t i = 0; i < n; ++i) {
        const RationalVector& a = ring[i];
        const RationalVector& b = ring[(i + 1) % n];
        const Sign s = sign_of(a[0] * b[1] - a[1] * b[0]);
        if (s == Sign::zero) return {false, "consecutive vectors are parallel"};
        if (common == Sign::zero) common = s;
        if (s != common) return {false, "consecutive determinants have mixed signs"};
    }
    const int w = winding_number(ring);
    if (w != 1 && w != -1) return {false, "winding number " + std::to_string(w)};
    return {true, ""};
}

int quadrant(const RationalVector& v) {
    if (v[0] > 0 && v[1] >= 0) return 0;
    if (v[0] <= 0 && v[1] > 0) return 1;
    if (v[0] < 0 && v[1] <= 0) return 2;
    return 3;
}

// Roughly equiangular points: the parameter is tan of half the angle, rounded to 1/64.
std::vector<RationalVector> cycle_base(int n) {
    std::vector<RationalVector> out;
    for (int i = 0; i < n; ++i) {
        const double half_angle = std::numbers::pi * ((i + 0.5) / n - 0.5);
        Rational t(std::lround(std::tan(half_angle) * 64), 64UL);
        t.canonicalize();
        out.push_back(circle_point(t));
    }
    return out;
}

}  // namespace

int winding_number(const std::vector<RationalVector>& ring) {
    int quarters = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RationalVector& a = ring[i];
        const RationalVector& b = ring[(i + 1) % n];
        const int delta = (quadrant(b) - quadrant(a) + 4) % 4;
        if (delta == 1) quarters += 1;
        else if (delta == 3) quarters -= 1;
        else if (delta == 2) quarters += sign_of(a[0] * b[1] - a[1] * b[0]) == Sign::minus ? -2 : 2;
    }
    return quarters / 4;
}

RationalVector circle_point(const Rational& t) {
    const Rational denominator = 1 + t * t;
    return {(1 - t * t) / denominator, 2 * t / denominator};
}

FlatteningVerdict check_flattening(const Flattening& f, FanTest test) {
    validate_shape(f);
    if (test == FanTest::planar || (test == FanTest::automatic && f.sphere.dim() == 1))
        return planar_check(f);
    return generic_fan_check(f);
}

OrientedMatroid mu0(const Flattening& f) {
    const FlatteningVerdict verdict = check_flattening(f);
    if (!verdict.valid) throw DomainError("mu0 needs a flattening: " + verdict.reason);
    return OrientedMatroid::trusted(chirotope_from_vectors(f.coords));
}

Flattening canonical_form(const Flattening& f) {
    if (!is_flattening(f)) throw DomainError("canonical_form needs a flattening");
    const std::vector<int>& least = f.sphere.facets().front();
    std::vector<RationalVector> basis;
    for (int v : least) basis.push_back(f.coords[v - 1]);
    const RationalMatrix g = RationalMatrix::from_columns(basis).inverse();
    Flattening out{f.sphere, {}};
    for (const auto& v : f.coords) out.coords.push_back(g * v);
    return out;
}

Flattening base_flattening(const SimplicialSphere& sphere) {
    if (sphere.dim() == 1 && sphere.family() != SphereFamily::other) {
        const std::vector<int> order = sphere.cyclic_order();
        const auto ring = cycle_base(sphere.vertex_count());
        Flattening f{sphere, std::vector<RationalVector>(sphere.vertex_count())};
        for (std::size_t i = 0; i < order.size(); ++i) f.coords[order[i] - 1] = ring[i];
        return f;
    }
    auto simplex_fan = [](int m) {
        std::vector<RationalVector> out;
        for (int i = 0; i < m; ++i) {
            RationalVector e(m);
            e[i] = 1;
            out.push_back(e);
        }
        out.push_back(RationalVector(m, Rational(-1)));
        return out;
    };
    if (sphere.family() == SphereFamily::simplex_boundary)
        return {sphere, simplex_fan(sphere.vertex_count() - 1)};
    if (sphere.family() == SphereFamily::join && sphere.descriptor().rfind("join:", 0) == 0) {
        const std::string args = sphere.descriptor().substr(5);
        const int a = std::stoi(args.substr(0, args.find(',')));
        const int b = std::stoi(args.substr(args.find(',') + 1));
        const auto left = simplex_fan(a);
        const auto right = simplex_fan(b);
        Flattening f{sphere, {}};
        for (const auto& v : left) {
            RationalVector w(a + b);
            std::copy(v.begin(), v.end(), w.begin());
            f.coords.push_back(w);
        }
        for (const auto& v : right) {
            RationalVector w(a + b);
            std::copy(v.begin(), v.end(), w.begin() + a);
            f.coords.push_back(w);
        }
        return f;
    }
    throw InputError("no base flattening for sphere " + sphere.descriptor() +
                     ": out of supported family");
}

SampleResult sample_flattenings(const SimplicialSphere& sphere, std::size_t count,
                                std::uint64_t seed) {
    SampleResult result;
    if (count == 0) return result;
    const std::size_t max_attempts = 1000 * count + 1000;
    const SplitMix64 root(seed);
    const int n = sphere.vertex_count();
    const int dim = sphere.dim() + 1;
    const Flattening base = sphere.dim() == 1 ? Flattening{sphere, {}} : base_flattening(sphere);
    const std::vector<int> order = sphere.dim() == 1 ? sphere.cyclic_order() : std::vector<int>{};

    while (result.flattenings.size() < count && result.attempts < max_attempts) {
        SplitMix64 rng = root.split(result.attempts++);
        Flattening f{sphere, std::vector<RationalVector>(n)};
        if (sphere.dim() == 1) {
            std::vector<Rational> ts;
            for (int i = 0; i < n; ++i) ts.push_back(rng.rational(4, 3));
            std::sort(ts.begin(), ts.end());
            const auto offset = static_cast<std::size_t>(rng.uniform(0, n - 1));
            const bool reverse = rng.coin();
            for (int i = 0; i < n; ++i) {
                const std::size_t slot = (static_cast<std::size_t>(i) + offset) % n;
                RationalVector v = circle_point(ts[reverse ? n - 1 - slot : slot]);
                const Rational scale(static_cast<long>(rng.uniform(1, 4)),
                                     static_cast<unsigned long>(rng.uniform(1, 3)));
                for (auto& x : v) x *= scale;
                f.coords[order[i] - 1] = std::move(v);
            }
        } else {
            for (int v = 0; v < n; ++v) {
                f.coords[v] = base.coords[v];
                for (auto& x : f.coords[v])
                    if (rng.coin()) x += rng.rational(1, 4);
            }
            RationalMatrix g(dim, dim);
            do {
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) g(i, j) = Rational(static_cast<long>(rng.uniform(-2, 2)));
            } while (g.determinant() == 0);
            for (auto& v : f.coords) v = g * v;
        }
        bool zero_vector = false;
        for (const auto& v : f.coords)
            zero_vector |= std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
        if (zero_vector || !is_flattening(f)) continue;
        result.flattenings.push_back(std::move(f));
    }
    result.exhausted = result.flattenings.size() < count;
    return result;
}

std::string flattening_to_json(const Flattening& f) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& v : f.coords) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : v) row.push_back(format_rational(x));
        coords.push_back(row);
    }
    nlohmann::json j;
    j["sphere"] = f.sphere.descriptor();
    j["coordinates"] = coords;
    return j.dump(2) + "\n";
}

Flattening flattening_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("flattening file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("sphere") || !j.contains("coordinates") ||
        !j["sphere"].is_string() || !j["coordinates"].is_array())
        throw InputError("flattening file needs a \"sphere\" string and a \"coordinates\" array");
    Flattening f{SimplicialSphere::parse(j["sphere"].get<std::string>()), {}};
    for (const auto& row : j["coordinates"]) {
        if (!row.is_array()) throw InputError("each coordinate entry must be an array");
        RationalVector v;
        for (const auto& x : row) {
            if (!x.is_string()) throw InputError("coordinates must be rational strings \"p/q\"");
            v.push_back(parse_rational(x.get<std::string>()));
        }
        f.coords.push_back(std::move(v));
    }
    validate_shape(f);
    return f;
}

}  // namespace omflat
