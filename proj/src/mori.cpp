#include "mdsgit/mori.hpp"

#include "mdsgit/error.hpp"

#include <algorithm>

namespace mdsgit {

namespace {

std::vector<std::size_t> set_difference(const std::vector<std::size_t>& a,
                                        const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::size_t quotient_dimension(const Chamber& ch) { return ch.quotient.fan.dim(); }

WallCrossing compare_sides(const Chamber& before, const Chamber& after) {
    WallCrossing x;
    x.from = before.id;
    x.to = after.id;
    x.rays_before = before.quotient.columns;
    x.rays_after = after.quotient.columns;
    x.picard_delta = static_cast<long>(x.rays_after.size()) - static_cast<long>(x.rays_before.size());
    x.dimension_before = quotient_dimension(before);
    x.dimension_after = quotient_dimension(after);
    auto lost = set_difference(x.rays_before, x.rays_after);
    auto gained = set_difference(x.rays_after, x.rays_before);
    if (lost.empty() && gained.empty()) {
        x.kind = CrossingKind::Small;
    } else if (lost.size() == 1 && gained.empty()) {
        x.kind = CrossingKind::Divisorial;
        x.divisor = lost.front();
    } else if (gained.size() == 1 && lost.empty()) {
        x.kind = CrossingKind::Divisorial;
        x.divisor = gained.front();
    } else {
        x.kind = CrossingKind::Irregular;
    }
    return x;
}

}  // namespace

const char* to_string(CrossingKind kind) {
    switch (kind) {
        case CrossingKind::Small: return "small";
        case CrossingKind::Divisorial: return "divisorial";
        case CrossingKind::FibrationBoundary: return "fibration-boundary";
        case CrossingKind::Boundary: return "boundary";
        case CrossingKind::Irregular: return "irregular";
    }
    return "?";
}

Cone effective_cone(const ChamberComplex& cc) { return cc.g_ample(); }

std::size_t nef_chamber(const ChamberComplex& cc, const Fan& reference) {
    const std::size_t r = cc.weights().r();
    if (reference.rays().size() == r &&
        normalize_weight_matrix(cox_weights(reference).matrix()) == normalize_weight_matrix(cc.weights().matrix())) {
        for (const auto& ch : cc.chambers())
            if (ch.quotient.dropped.empty() && ch.quotient.column_cones == reference.cones())
                return ch.id;
    }
    throw ValidationError("no chamber reproduces the reference fan");
}

std::optional<std::size_t> reference_chamber(const ChamberComplex& cc) {
    for (const auto& ch : cc.chambers())
        if (ch.quotient.dropped.empty()) return ch.id;
    return std::nullopt;
}

std::vector<std::size_t> enumerate_sqms(const ChamberComplex& cc, std::size_t reference) {
    const auto& columns = cc.chamber(reference).quotient.columns;
    std::vector<std::size_t> out;
    for (const auto& ch : cc.chambers())
        if (ch.quotient.columns == columns) out.push_back(ch.id);
    return out;
}

std::vector<std::size_t> enumerate_sqms(const ChamberComplex& cc, const Fan& reference) {
    return enumerate_sqms(cc, nef_chamber(cc, reference));
}

Cone moving_cone_oracle(const WeightSystem& w) {
    const std::size_t rho = w.rho();
    Cone result = Cone::whole_space(rho);
    for (std::size_t i = 0; i < w.r(); ++i) {
        std::vector<IntVector> others;
        for (std::size_t j = 0; j < w.r(); ++j)
            if (j != i) others.push_back(w.column(j));
        result = intersect(result, Cone::from_generators(rho, others));
    }
    return result;
}

MovingCone moving_cone(const ChamberComplex& cc, std::size_t reference) {
    const std::size_t rho = cc.weights().rho();
    MovingCone mov;
    mov.chambers = enumerate_sqms(cc, reference);
    std::vector<IntVector> gens;
    for (auto id : mov.chambers)
        for (const auto& g : cc.chamber(id).cone.rays()) gens.push_back(g);
    mov.hull = Cone::from_generators(rho, gens);
    mov.convex = true;
    for (const auto& ch : cc.chambers()) {
        if (std::find(mov.chambers.begin(), mov.chambers.end(), ch.id) != mov.chambers.end()) continue;
        if (intersect(ch.cone, mov.hull).dim() == rho) {
            mov.convex = false;
            break;
        }
    }
    mov.oracle = moving_cone_oracle(cc.weights());
    mov.matches_oracle = mov.convex && mov.hull == mov.oracle;
    return mov;
}

MovingCone moving_cone(const ChamberComplex& cc, const Fan& reference) {
    return moving_cone(cc, nef_chamber(cc, reference));
}

WallCrossing classify_wall(const ChamberComplex& cc, std::size_t wall) {
    const Wall& w = cc.walls().at(wall);
    WallCrossing x = compare_sides(cc.chamber(w.left), cc.chamber(w.right));
    x.wall = wall;
    return x;
}

std::size_t facet_quotient_dimension(const WeightSystem& w, const IntVector& facet_normal) {
    std::vector<IntVector> on;
    for (const auto& c : w.columns())
        if (dot(facet_normal, c) == 0) on.push_back(c);
    return on.size() - rank(std::span<const IntVector>(on));
}

WallCrossing classify_boundary(const ChamberComplex& cc, std::size_t boundary) {
    const BoundaryFacet& b = cc.boundary().at(boundary);
    const Chamber& ch = cc.chamber(b.chamber);
    WallCrossing x;
    x.boundary = boundary;
    x.from = ch.id;
    x.rays_before = ch.quotient.columns;
    x.dimension_before = quotient_dimension(ch);
    x.dimension_after = facet_quotient_dimension(cc.weights(), b.normal);
    x.kind = x.dimension_after < x.dimension_before ? CrossingKind::FibrationBoundary
                                                    : CrossingKind::Boundary;
    return x;
}

std::optional<long> picard_number(const Chamber& ch) {
    if (!ch.quotient.report.valid_complete()) return std::nullopt;
    return static_cast<long>(ch.quotient.fan.rays().size()) - static_cast<long>(ch.quotient.fan.dim());
}

MoriChamberData mori_chamber_data(const ChamberComplex& cc, std::size_t chamber) {
    const Chamber& ch = cc.chamber(chamber);
    const WeightSystem& w = cc.weights();
    const std::size_t rho = w.rho();
    MoriChamberData data;
    data.chamber = chamber;
    data.exceptional_columns = ch.quotient.dropped;

    const Quotient& q = ch.quotient;
    if (!q.report.valid_complete()) {
        if (!q.dropped.empty())
            throw ValidationError("chamber " + std::to_string(chamber) +
                                  ": incomplete quotient with contracted divisors");
        // Nothing is contracted: the chamber is the pulled back nef cone of its own quotient.
        data.pulled_back_nef = ch.cone;
    } else {
        const Fan& fan = q.fan;
        const std::size_t n = fan.dim();
        WeightSystem wq = cox_weights(fan);

        // Nef(Q) = intersection over maximal cones of pos(classes of rays outside the cone).
        Cone nef = Cone::whole_space(wq.rho());
        for (const auto& sigma : fan.cones()) {
            std::vector<IntVector> outside;
            for (std::size_t s = 0; s < fan.rays().size(); ++s)
                if (!std::binary_search(sigma.begin(), sigma.end(), s)) outside.push_back(wq.column(s));
            nef = intersect(nef, Cone::from_generators(wq.rho(), outside));
        }

        IntegerMatrix gale = gale_dual(w);
        std::vector<IntVector> wq_rows = wq.matrix().row_list();

        // Linear function of each maximal cone for a divisor c on Q.
        auto cone_functional = [&](const IndexSet& sigma, const RatVector& c) {
            std::vector<IntVector> rows;
            RatVector rhs;
            for (auto s : sigma) {
                rows.push_back(fan.rays()[s]);
                rhs.push_back(-c[s]);
            }
            RatVector m;
            solve_rational(rows, rhs, m, n);
            return m;
        };
        auto containing_cone = [&](const IntVector& u) -> const IndexSet& {
            for (const auto& sigma : fan.cones()) {
                std::vector<IntVector> rays;
                for (auto s : sigma) rays.push_back(fan.rays()[s]);
                if (contains(Cone::from_generators(n, rays), u) != Location::Outside) return sigma;
            }
            throw Error("ray not covered by the quotient fan");
        };

        std::vector<RatVector> pulled;
        for (const auto& v : nef.generators()) {
            RatVector c;
            if (!solve_rational(wq_rows, to_rational(v), c, fan.rays().size()))
                throw Error("class not representable on the quotient");
            RatVector cls(rho);
            for (std::size_t pos = 0; pos < q.columns.size(); ++pos)
                for (std::size_t k = 0; k < rho; ++k)
                    cls[k] += c[pos] * Rational(w.column(q.columns[pos])[k]);
            for (auto j : q.dropped) {
                IntVector u = primitive(gale.column(j));
                RatVector m = cone_functional(containing_cone(u), c);
                Rational coeff = -dot(u, m);
                for (std::size_t k = 0; k < rho; ++k) cls[k] += coeff * Rational(w.column(j)[k]);
            }
            pulled.push_back(std::move(cls));
        }
        data.pulled_back_nef = Cone::from_generators(rho, std::span<const RatVector>(pulled));
    }

    std::vector<IntVector> exceptional;
    for (auto j : data.exceptional_columns) exceptional.push_back(w.column(j));
    data.sum = minkowski_sum(data.pulled_back_nef, Cone::from_generators(rho, exceptional));
    data.identity_holds = data.sum == ch.cone;
    return data;
}

std::size_t separating_hyperplanes(const ChamberComplex& cc, std::size_t from, std::size_t to) {
    const RatVector& a = cc.chamber(from).representative;
    const RatVector& b = cc.chamber(to).representative;
    std::size_t count = 0;
    for (const auto& h : cc.hyperplanes())
        if (sign(dot(h, a)) * sign(dot(h, b)) < 0) ++count;
    return count;
}

std::vector<WallCrossing> factor_contraction(const ChamberComplex& cc, std::size_t from,
                                             std::size_t to) {
    const Chamber& start = cc.chamber(from);
    const Chamber& goal = cc.chamber(to);
    if (from == to) return {};
    const std::size_t rho = cc.weights().rho();

    Integer bound = 1;
    for (const auto& h : cc.hyperplanes())
        for (const auto& x : h) bound = std::max(bound, Integer(abs(x)));

    for (unsigned attempt = 1; attempt <= 24; ++attempt) {
        // Lexicographic nudge (1, 1/B, 1/B^2, ...) scaled by 2^-(4 attempt).
        const Integer base = 2 * bound * Integer(static_cast<unsigned long>(rho)) + attempt;
        RatVector nudge(rho);
        Rational scale(1, 1);
        scale /= Rational(Integer(1) << (4 * attempt));
        for (std::size_t k = 0; k < rho; ++k) {
            nudge[k] = scale;
            scale /= Rational(base);
        }
        RatVector a = start.representative, b = goal.representative;
        for (std::size_t k = 0; k < rho; ++k) {
            a[k] += nudge[k];
            b[k] += nudge[k];
        }
        if (contains(start.cone, a) != Location::Interior || contains(goal.cone, b) != Location::Interior)
            continue;

        std::vector<Rational> ts;
        bool generic = true;
        for (const auto& h : cc.hyperplanes()) {
            Rational sa = dot(h, a), sb = dot(h, b);
            if (sa == 0 || sb == 0) {
                generic = false;
                break;
            }
            if (sign(sa) == sign(sb)) continue;
            ts.push_back(sa / (sa - sb));
        }
        if (!generic) continue;
        std::sort(ts.begin(), ts.end());
        if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) continue;

        std::vector<std::size_t> path{from};
        std::vector<Rational> cuts{Rational(0)};
        cuts.insert(cuts.end(), ts.begin(), ts.end());
        cuts.push_back(Rational(1));
        for (std::size_t i = 1; i + 1 < cuts.size(); ++i) {
            Rational mid = (cuts[i] + cuts[i + 1]) / 2;
            RatVector p(rho);
            for (std::size_t k = 0; k < rho; ++k) p[k] = a[k] + mid * (b[k] - a[k]);
            ChamberLocation loc = chamber_of(cc, p);
            if (loc.kind != ChamberLocation::Kind::Interior) {
                generic = false;
                break;
            }
            if (*loc.chamber != path.back()) path.push_back(*loc.chamber);
        }
        if (!generic || path.back() != to) continue;

        std::vector<WallCrossing> steps;
        for (std::size_t i = 0; i + 1 < path.size() && generic; ++i) {
            auto wall = cc.wall_between(path[i], path[i + 1]);
            if (!wall) {
                generic = false;
                break;
            }
            WallCrossing x = compare_sides(cc.chamber(path[i]), cc.chamber(path[i + 1]));
            x.wall = *wall;
            steps.push_back(std::move(x));
        }
        if (generic) return steps;
    }
    throw Error("could not realize a generic segment between chambers " + std::to_string(from) +
                " and " + std::to_string(to));
}

}  // namespace mdsgit
