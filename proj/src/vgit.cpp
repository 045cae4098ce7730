#include "mdsgit/vgit.hpp"

#include "mdsgit/error.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mdsgit {

Subdivision subdivide(const Cone& support, std::span<const IntVector> hyperplanes) {
    if (!support.is_full_dimensional()) throw Error("subdivide: support must be full dimensional");
    std::vector<Cone> cells{support};
    for (const auto& h : hyperplanes) {
        std::vector<Cone> next;
        next.reserve(cells.size() * 2);
        for (const auto& c : cells) {
            auto [pos, neg] = split(c, h);
            if (pos) next.push_back(std::move(*pos));
            if (neg) next.push_back(std::move(*neg));
        }
        cells = std::move(next);
    }
    std::sort(cells.begin(), cells.end(), ConeLess{});
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    Subdivision sub;
    sub.cells = std::move(cells);
    std::map<Cone, std::vector<std::pair<std::size_t, IntVector>>, ConeLess> owners;
    for (std::size_t id = 0; id < sub.cells.size(); ++id)
        for (const auto& f : sub.cells[id].facets()) owners[face(sub.cells[id], f)].emplace_back(id, f);
    for (auto& [facet, who] : owners) {
        if (who.size() == 1) {
            sub.boundary.push_back({who[0].first, facet, who[0].second});
        } else if (who.size() == 2) {
            std::sort(who.begin(), who.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            sub.walls.push_back({who[0].first, who[1].first, facet, who[1].second});
        } else {
            throw Error("subdivide: facet " + facet.to_string() + " shared by " +
                        std::to_string(who.size()) + " cells");
        }
    }
    std::sort(sub.walls.begin(), sub.walls.end(), [](const auto& a, const auto& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    std::stable_sort(sub.boundary.begin(), sub.boundary.end(),
                     [](const auto& a, const auto& b) { return a.cell < b.cell; });
    return sub;
}

ChamberComplex::ChamberComplex(WeightSystem weights, Cone g_ample, std::vector<Chamber> chambers,
                               std::vector<Wall> walls, std::vector<BoundaryFacet> boundary,
                               std::vector<IntVector> hyperplanes)
    : weights_(std::move(weights)),
      g_ample_(std::move(g_ample)),
      chambers_(std::move(chambers)),
      walls_(std::move(walls)),
      boundary_(std::move(boundary)),
      hyperplanes_(std::move(hyperplanes)) {}

std::optional<std::size_t> ChamberComplex::wall_between(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < walls_.size(); ++i)
        if (walls_[i].left == a && walls_[i].right == b) return i;
    return std::nullopt;
}

std::vector<std::size_t> ChamberComplex::neighbours(std::size_t id) const {
    std::vector<std::size_t> out;
    for (const auto& w : walls_) {
        if (w.left == id) out.push_back(w.right);
        if (w.right == id) out.push_back(w.left);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ChamberComplex ChamberComplex::without_chamber(std::size_t id) const {
    auto renumber = [id](std::size_t x) { return x > id ? x - 1 : x; };
    std::vector<Chamber> chambers;
    for (const auto& c : chambers_) {
        if (c.id == id) continue;
        Chamber copy = c;
        copy.id = renumber(c.id);
        chambers.push_back(std::move(copy));
    }
    std::vector<Wall> walls;
    for (const auto& w : walls_)
        if (w.left != id && w.right != id)
            walls.push_back({renumber(w.left), renumber(w.right), w.facet, w.normal});
    std::vector<BoundaryFacet> boundary;
    for (const auto& b : boundary_)
        if (b.chamber != id) boundary.push_back({renumber(b.chamber), b.facet, b.normal});
    return ChamberComplex(weights_, g_ample_, std::move(chambers), std::move(walls),
                          std::move(boundary), hyperplanes_);
}

Cone g_ample_cone(const WeightSystem& w) { return Cone::from_generators(w.rho(), w.columns()); }

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

ChamberComplex enumerate_chambers(const WeightSystem& w) {
    Cone g_ample = g_ample_cone(w);
    if (!g_ample.is_full_dimensional()) throw ValidationError("weight system is rank deficient");
    std::vector<IntVector> hyperplanes = wall_hyperplanes(w);
    Subdivision sub = subdivide(g_ample, hyperplanes);

    // Arrangement cells on both sides of a hyperplane can share one semistable locus; those
    // are a single chamber, so glue them.
    const std::size_t cells = sub.cells.size();
    std::vector<std::vector<IndexSet>> unstable(cells);
    for (std::size_t id = 0; id < cells; ++id)
        unstable[id] = unstable_locus(w, relative_interior_point(sub.cells[id])).strata;
    std::vector<std::size_t> parent(cells);
    for (std::size_t id = 0; id < cells; ++id) parent[id] = id;
    for (const auto& a : sub.walls)
        if (unstable[a.left] == unstable[a.right])
            parent[find_root(parent, a.left)] = find_root(parent, a.right);

    std::map<std::size_t, std::vector<IntVector>> rays_of;
    for (std::size_t id = 0; id < cells; ++id) {
        auto& acc = rays_of[find_root(parent, id)];
        acc.insert(acc.end(), sub.cells[id].rays().begin(), sub.cells[id].rays().end());
    }
    std::vector<Cone> merged;
    for (auto& [root, rays] : rays_of) merged.push_back(Cone::from_generators(w.rho(), rays));
    std::sort(merged.begin(), merged.end(), ConeLess{});
    auto chamber_id = [&](std::size_t cell) {
        const Cone& c = Cone::from_generators(w.rho(), rays_of.at(find_root(parent, cell)));
        return static_cast<std::size_t>(
            std::lower_bound(merged.begin(), merged.end(), c, ConeLess{}) - merged.begin());
    };
    std::vector<std::size_t> cell_chamber(cells);
    for (std::size_t id = 0; id < cells; ++id) cell_chamber[id] = chamber_id(id);

    // The representative comes from the first cell of each chamber, so it avoids every
    // hyperplane and quotient() accepts it.
    std::vector<std::optional<RatVector>> reps(merged.size());
    for (std::size_t id = 0; id < cells; ++id)
        if (!reps[cell_chamber[id]]) reps[cell_chamber[id]] = relative_interior_point(sub.cells[id]);
    std::vector<Chamber> chambers;
    for (std::size_t id = 0; id < merged.size(); ++id) {
        const Cone& cone = merged[id];
        if (!cone.is_pointed())
            throw ValidationError("chamber " + cone.to_string() + " is not pointed");
        chambers.push_back({id, cone, *reps[id], quotient(w, *reps[id])});
    }

    // Pieces of one wall (or boundary facet) coming from different cells are glued as well.
    std::map<std::tuple<std::size_t, std::size_t, IntVector>, std::vector<IntVector>> wall_rays;
    for (const auto& a : sub.walls) {
        std::size_t l = cell_chamber[a.left], r = cell_chamber[a.right];
        if (l == r) continue;
        IntVector normal = l < r ? a.normal : IntVector(-a.normal);
        auto& acc = wall_rays[{std::min(l, r), std::max(l, r), normal}];
        acc.insert(acc.end(), a.facet.rays().begin(), a.facet.rays().end());
    }
    std::vector<Wall> walls;
    for (auto& [key, rays] : wall_rays) {
        const auto& [l, r, normal] = key;
        if (!walls.empty() && walls.back().left == l && walls.back().right == r)
            throw Error("chambers " + std::to_string(l) + " and " + std::to_string(r) +
                        " meet along two hyperplanes");
        walls.push_back({l, r, Cone::from_generators(w.rho(), rays), normal});
    }
    std::map<std::pair<std::size_t, IntVector>, std::vector<IntVector>> boundary_rays;
    for (const auto& b : sub.boundary) {
        auto& acc = boundary_rays[{cell_chamber[b.cell], b.normal}];
        acc.insert(acc.end(), b.facet.rays().begin(), b.facet.rays().end());
    }
    std::vector<BoundaryFacet> boundary;
    for (auto& [key, rays] : boundary_rays)
        boundary.push_back({key.first, Cone::from_generators(w.rho(), rays), key.second});
    return ChamberComplex(w, std::move(g_ample), std::move(chambers), std::move(walls),
                          std::move(boundary), std::move(hyperplanes));
}

const char* to_string(ChamberLocation::Kind kind) {
    switch (kind) {
        case ChamberLocation::Kind::Interior: return "interior";
        case ChamberLocation::Kind::Wall: return "wall";
        case ChamberLocation::Kind::Boundary: return "boundary";
        case ChamberLocation::Kind::LowerFace: return "lower-face";
    }
    return "?";
}

ChamberLocation chamber_of(const ChamberComplex& cc, const RatVector& chi) {
    if (contains(cc.g_ample(), chi) == Location::Outside)
        throw EmptySemistableLocus("linearization " + to_string(chi) +
                                   " lies outside the G-ample cone: empty semistable locus");
    ChamberLocation loc;
    for (const auto& c : cc.chambers()) {
        Location l = contains(c.cone, chi);
        if (l == Location::Interior) {
            loc.kind = ChamberLocation::Kind::Interior;
            loc.chamber = c.id;
            return loc;
        }
        if (l == Location::Boundary && !loc.chamber) loc.chamber = c.id;
    }
    for (std::size_t i = 0; i < cc.walls().size(); ++i)
        if (contains(cc.walls()[i].facet, chi) == Location::Interior) {
            loc.kind = ChamberLocation::Kind::Wall;
            loc.wall = i;
            return loc;
        }
    for (std::size_t i = 0; i < cc.boundary().size(); ++i)
        if (contains(cc.boundary()[i].facet, chi) == Location::Interior) {
            loc.kind = ChamberLocation::Kind::Boundary;
            loc.boundary = i;
            return loc;
        }
    loc.kind = ChamberLocation::Kind::LowerFace;
    return loc;
}

std::vector<RatVector> dyadic_samples(const Cone& c, std::size_t count) {
    std::vector<IntVector> gens = c.generators();
    const std::size_t m = gens.size();
    std::vector<RatVector> out;
    if (m == 0 || count == 0) return out;
    // Smallest level with (2^level + 1)^m >= count.
    std::size_t level = 0;
    Integer total;
    for (;; ++level) {
        Integer side = (Integer(1) << level) + 1;
        mpz_pow_ui(total.get_mpz_t(), side.get_mpz_t(), m);
        if (total >= count) break;
    }
    const Integer side = (Integer(1) << level) + 1;
    const Rational denom(Integer(1) << level);
    for (std::size_t i = 0; i < count; ++i) {
        Integer index = total * i / count;
        RatVector p(c.ambient_dim());
        for (std::size_t g = 0; g < m; ++g) {
            Integer digit = index % side;
            index /= side;
            Rational coeff = Rational(digit) / denom;
            for (std::size_t k = 0; k < p.size(); ++k) p[k] += coeff * Rational(gens[g][k]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

CoverReport verify_disjoint_cover(const ChamberComplex& cc, std::size_t samples) {
    CoverReport rep;
    for (const auto& p : dyadic_samples(cc.g_ample(), samples)) {
        ++rep.samples;
        std::size_t interior = 0;
        bool on_face = false;
        for (const auto& c : cc.chambers()) {
            Location l = contains(c.cone, p);
            if (l == Location::Interior) ++interior;
            if (l == Location::Boundary) on_face = true;
        }
        if (interior == 1) {
            ++rep.interior_hits;
        } else if (interior > 1) {
            rep.violations.push_back("point " + to_string(p) + " lies in " +
                                     std::to_string(interior) + " chamber interiors");
        } else if (on_face) {
            ++rep.face_hits;
        } else {
            rep.violations.push_back("point " + to_string(p) + " is not covered by any chamber");
        }
    }
    return rep;
}

}  // namespace mdsgit
