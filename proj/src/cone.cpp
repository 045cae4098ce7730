#include "mdsgit/cone.hpp"

#include "mdsgit/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace mdsgit {

namespace {

using Bits = boost::dynamic_bitset<>;

void sort_unique(std::vector<IntVector>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void check_dims(std::size_t dim, std::span<const IntVector> vs) {
    for (const auto& v : vs)
        if (v.size() != dim) throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                                                     " in R^" + std::to_string(dim));
}

struct DdRay {
    IntVector t;
    Bits zero;
};

// Extreme rays of the pointed cone {t : B t >= 0} in R^k, rank(B) = k (double description).
std::vector<IntVector> double_description(const std::vector<IntVector>& b, std::size_t k) {
    const std::size_t m = b.size();
    // Initial simplicial cone from the first k independent rows.
    std::vector<std::size_t> basis;
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < m && basis.size() < k; ++i) {
        chosen.push_back(b[i]);
        if (rank(std::span<const IntVector>(chosen)) == chosen.size())
            basis.push_back(i);
        else
            chosen.pop_back();
    }
    if (basis.size() != k) throw Error("double description: constraint matrix is rank deficient");

    std::vector<DdRay> rays;
    for (std::size_t j = 0; j < k; ++j) {
        RatVector rhs(k);
        rhs[j] = 1;
        RatVector x;
        solve_rational(chosen, rhs, x, k);
        DdRay r{primitive(x), Bits(m)};
        for (std::size_t a = 0; a < k; ++a)
            if (a != j) r.zero.set(basis[a]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> in_basis(m, false);
    for (auto i : basis) in_basis[i] = true;

    for (std::size_t i = 0; i < m; ++i) {
        if (in_basis[i]) continue;
        std::vector<Integer> s(rays.size());
        bool any_negative = false;
        for (std::size_t a = 0; a < rays.size(); ++a) {
            s[a] = dot(b[i], rays[a].t);
            if (s[a] < 0) any_negative = true;
        }
        if (!any_negative) {
            for (std::size_t a = 0; a < rays.size(); ++a)
                if (s[a] == 0) rays[a].zero.set(i);
            continue;
        }
        std::vector<DdRay> next;
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (s[p] <= 0) continue;
            for (std::size_t n = 0; n < rays.size(); ++n) {
                if (s[n] >= 0) continue;
                Bits common = rays[p].zero & rays[n].zero;
                if (k >= 2 && common.count() < k - 2) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != p && o != n && common.is_subset_of(rays[o].zero)) adjacent = false;
                if (!adjacent) continue;
                IntVector t(k);
                for (std::size_t c = 0; c < k; ++c) t[c] = s[p] * rays[n].t[c] - s[n] * rays[p].t[c];
                common.set(i);
                next.push_back({primitive(std::move(t)), std::move(common)});
            }
        }
        for (std::size_t a = 0; a < rays.size(); ++a) {
            if (s[a] < 0) continue;
            if (s[a] == 0) rays[a].zero.set(i);
            next.push_back(std::move(rays[a]));
        }
        rays = std::move(next);
    }
    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.t));
    return out;
}

struct VRep {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

// Canonical generators of {x : A x >= 0, E x = 0}.
VRep hrep_to_vrep(std::size_t dim, std::span<const IntVector> ineqs,
                  std::span<const IntVector> eqs) {
    std::vector<IntVector> all;
    for (const auto& a : ineqs)
        if (!is_zero(a)) all.push_back(a);
    std::vector<IntVector> nonzero_ineqs = all;
    for (const auto& e : eqs) all.push_back(e);

    VRep out;
    out.lineality = orthogonal_complement(all, dim);

    std::vector<IntVector> constraints(eqs.begin(), eqs.end());
    for (const auto& l : out.lineality) constraints.push_back(l);
    std::vector<IntVector> z = orthogonal_complement(constraints, dim);
    const std::size_t k = z.size();
    if (k == 0) return out;

    std::vector<IntVector> b;
    for (const auto& a : nonzero_ineqs) {
        IntVector row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(a, z[j]);
        if (!is_zero(row)) b.push_back(std::move(row));
    }
    for (const auto& t : double_description(b, k)) {
        IntVector x(dim);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < dim; ++c) x[c] += t[j] * z[j][c];
        out.rays.push_back(primitive(std::move(x)));
    }
    sort_unique(out.rays);
    return out;
}

}  // namespace

const char* to_string(Location loc) {
    switch (loc) {
        case Location::Outside: return "outside";
        case Location::Boundary: return "boundary";
        case Location::Interior: return "interior";
    }
    return "?";
}

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Integer& x, const Integer& y) { return x < y; });
}

bool ConeLess::operator()(const Cone& a, const Cone& b) const {
    auto key = [](const Cone& c) { return std::tie(c.rays(), c.lineality()); };
    auto vec_less = [](const std::vector<IntVector>& x, const std::vector<IntVector>& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), lex_less);
    };
    if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
    auto [ar, al] = key(a);
    auto [br, bl] = key(b);
    if (vec_less(ar, br)) return true;
    if (vec_less(br, ar)) return false;
    return vec_less(al, bl);
}

Cone::Cone(std::size_t dim) : ambient_(dim) {
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim);
        e[i] = 1;
        equations_.push_back(std::move(e));
    }
}

Cone Cone::from_generators(std::size_t dim, std::span<const IntVector> generators,
                           std::span<const IntVector> lineality) {
    check_dims(dim, generators);
    check_dims(dim, lineality);
    VRep d = hrep_to_vrep(dim, generators, lineality);
    Cone c(dim);
    c.facets_ = std::move(d.rays);
    c.equations_ = std::move(d.lineality);
    VRep p = hrep_to_vrep(dim, c.facets_, c.equations_);
    c.rays_ = std::move(p.rays);
    c.lineality_ = std::move(p.lineality);
    return c;
}

Cone Cone::from_generators(std::size_t dim, std::span<const IntVector> generators) {
    return from_generators(dim, generators, {});
}

Cone Cone::from_generators(std::size_t dim, std::span<const RatVector> generators) {
    std::vector<IntVector> ints;
    ints.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.size() != dim) throw DimensionMismatch("generator dimension mismatch");
        ints.push_back(primitive(g));
    }
    return from_generators(dim, std::span<const IntVector>(ints));
}

Cone Cone::from_inequalities(std::size_t dim, std::span<const IntVector> inequalities,
                             std::span<const IntVector> equations) {
    check_dims(dim, inequalities);
    check_dims(dim, equations);
    VRep p = hrep_to_vrep(dim, inequalities, equations);
    Cone c(dim);
    c.rays_ = std::move(p.rays);
    c.lineality_ = std::move(p.lineality);
    VRep d = hrep_to_vrep(dim, c.rays_, c.lineality_);
    c.facets_ = std::move(d.rays);
    c.equations_ = std::move(d.lineality);
    return c;
}

Cone Cone::whole_space(std::size_t dim) { return from_inequalities(dim, {}, {}); }

Cone Cone::halfspace(const IntVector& normal) {
    std::vector<IntVector> h{normal};
    return from_inequalities(normal.size(), h);
}

std::vector<IntVector> Cone::generators() const {
    std::vector<IntVector> g = rays_;
    for (const auto& l : lineality_) {
        g.push_back(l);
        g.push_back(-l);
    }
    return g;
}

std::string Cone::to_string() const {
    std::string s = "pos{";
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (i) s += ",";
        s += mdsgit::to_string(rays_[i]);
    }
    s += "}";
    if (!lineality_.empty()) {
        s += "+lin{";
        for (std::size_t i = 0; i < lineality_.size(); ++i) {
            if (i) s += ",";
            s += mdsgit::to_string(lineality_[i]);
        }
        s += "}";
    }
    return s;
}

Cone cone_from_generators(std::size_t dim, std::span<const RatVector> vectors) {
    return Cone::from_generators(dim, vectors);
}

Cone dual(const Cone& c) {
    // The canonical form is symmetric under duality: swap the two descriptions.
    Cone d(c.ambient_dim());
    d.rays_ = c.facets_;
    d.lineality_ = c.equations_;
    d.facets_ = c.rays_;
    d.equations_ = c.lineality_;
    return d;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersecting cones of different ambient dimension");
    std::vector<IntVector> ineqs = a.facets();
    ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
    std::vector<IntVector> eqs = a.equations();
    eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
    return Cone::from_inequalities(a.ambient_dim(), ineqs, eqs);
}

Cone minkowski_sum(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("adding cones of different ambient dimension");
    std::vector<IntVector> gens = a.rays();
    gens.insert(gens.end(), b.rays().begin(), b.rays().end());
    std::vector<IntVector> lin = a.lineality();
    lin.insert(lin.end(), b.lineality().begin(), b.lineality().end());
    return Cone::from_generators(a.ambient_dim(), gens, lin);
}

Location contains(const Cone& c, const RatVector& x) {
    if (x.size() != c.ambient_dim()) throw DimensionMismatch("point dimension mismatch");
    for (const auto& e : c.equations())
        if (dot(e, x) != 0) return Location::Outside;
    bool strict = true;
    for (const auto& h : c.facets()) {
        int s = sign(dot(h, x));
        if (s < 0) return Location::Outside;
        if (s == 0) strict = false;
    }
    return strict ? Location::Interior : Location::Boundary;
}

Location contains(const Cone& c, const IntVector& x) { return contains(c, to_rational(x)); }

RatVector relative_interior_point(const Cone& c) {
    if (c.is_zero()) throw Error("relative interior point of the zero cone");
    RatVector p(c.ambient_dim());
    for (const auto& r : c.rays())
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += r[i];
    return p;
}

bool is_subcone(const Cone& inner, const Cone& outer) {
    for (const auto& g : inner.generators())
        if (contains(outer, g) == Location::Outside) return false;
    return true;
}

Cone face(const Cone& c, const IntVector& normal) {
    std::vector<IntVector> gens;
    for (const auto& r : c.rays())
        if (dot(normal, r) == 0) gens.push_back(r);
    return Cone::from_generators(c.ambient_dim(), gens, c.lineality());
}

std::pair<std::optional<Cone>, std::optional<Cone>> split(const Cone& c, const IntVector& normal) {
    if (normal.size() != c.ambient_dim()) throw DimensionMismatch("hyperplane dimension mismatch");
    if (!c.is_full_dimensional()) throw Error("split requires a full-dimensional cone");
    const std::size_t d = c.ambient_dim();

    if (!c.is_pointed()) {
        std::optional<Cone> pos = intersect(c, Cone::halfspace(normal));
        std::optional<Cone> neg = intersect(c, Cone::halfspace(-normal));
        if (pos->dim() < d) pos.reset();
        if (neg->dim() < d) neg.reset();
        return {std::move(pos), std::move(neg)};
    }

    const auto& rays = c.rays();
    std::vector<int> s(rays.size());
    bool has_pos = false, has_neg = false;
    for (std::size_t a = 0; a < rays.size(); ++a) {
        s[a] = sign(dot(normal, rays[a]));
        has_pos |= s[a] > 0;
        has_neg |= s[a] < 0;
    }
    if (!has_neg) return {c, std::nullopt};
    if (!has_pos) return {std::nullopt, c};
    const IntVector cut = primitive(normal);

    // One double description step against the existing facet incidences.
    const auto& facets = c.facets();
    std::vector<Bits> zero(rays.size(), Bits(facets.size()));
    for (std::size_t a = 0; a < rays.size(); ++a)
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (dot(facets[f], rays[a]) == 0) zero[a].set(f);

    std::vector<IntVector> fresh;
    for (std::size_t p = 0; p < rays.size(); ++p) {
        if (s[p] <= 0) continue;
        for (std::size_t n = 0; n < rays.size(); ++n) {
            if (s[n] >= 0) continue;
            Bits common = zero[p] & zero[n];
            if (d >= 2 && common.count() < d - 2) continue;
            bool adjacent = true;
            for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                if (o != p && o != n && common.is_subset_of(zero[o])) adjacent = false;
            if (!adjacent) continue;
            Integer sp = dot(normal, rays[p]);
            Integer sn = dot(normal, rays[n]);
            IntVector t(d);
            for (std::size_t i = 0; i < d; ++i) t[i] = sp * rays[n][i] - sn * rays[p][i];
            fresh.push_back(primitive(std::move(t)));
        }
    }

    auto build = [&](int side) {
        Cone part(d);
        part.equations_.clear();
        for (std::size_t a = 0; a < rays.size(); ++a)
            if (s[a] * side >= 0) part.rays_.push_back(rays[a]);
        part.rays_.insert(part.rays_.end(), fresh.begin(), fresh.end());
        sort_unique(part.rays_);

        std::vector<IntVector> candidates = facets;
        candidates.push_back(side > 0 ? cut : IntVector(-cut));
        std::vector<Bits> inc(candidates.size(), Bits(part.rays_.size()));
        for (std::size_t f = 0; f < candidates.size(); ++f)
            for (std::size_t a = 0; a < part.rays_.size(); ++a)
                if (dot(candidates[f], part.rays_[a]) == 0) inc[f].set(a);
        // A candidate is a facet iff its incidence set is maximal among the candidates.
        for (std::size_t f = 0; f < candidates.size(); ++f) {
            if (inc[f].count() == part.rays_.size()) continue;
            bool maximal = true;
            for (std::size_t g = 0; g < candidates.size() && maximal; ++g)
                if (g != f && inc[f].is_proper_subset_of(inc[g])) maximal = false;
            if (maximal) part.facets_.push_back(candidates[f]);
        }
        sort_unique(part.facets_);
        return part;
    };
    return {build(+1), build(-1)};
}

}  // namespace mdsgit
