#include "mdsgit/toric.hpp"

#include "mdsgit/error.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace mdsgit {

namespace {

std::string index_set_string(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::vector<IntVector> pick(const std::vector<IntVector>& vs, const IndexSet& idx) {
    std::vector<IntVector> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(vs[i]);
    return out;
}

IntVector sign_normalized(IntVector v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0) v = -v;
        break;
    }
    return v;
}

}  // namespace

std::vector<IndexSet> combinations(std::size_t n, std::size_t k) {
    std::vector<IndexSet> out;
    if (k > n) return out;
    IndexSet c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

Fan::Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<IndexSet> cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(cones)) {
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (rays_[i].size() != dim_)
            throw ValidationError("ray " + std::to_string(i) + " has length " +
                                  std::to_string(rays_[i].size()) + ", expected " +
                                  std::to_string(dim_));
        if (is_zero(rays_[i])) throw ValidationError("ray " + std::to_string(i) + " is zero");
        IntVector p = primitive(rays_[i]);
        if (p != rays_[i]) {
            normalized_.push_back(i);
            rays_[i] = std::move(p);
        }
    }
    for (auto& c : cones_) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (auto i : c)
            if (i >= rays_.size())
                throw ValidationError("cone " + index_set_string(c) + " references ray " +
                                      std::to_string(i) + " but only " +
                                      std::to_string(rays_.size()) + " rays exist");
    }
    std::sort(cones_.begin(), cones_.end());
    cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
}

IntegerMatrix Fan::ray_matrix() const { return IntegerMatrix::from_rows(rays_, dim_); }

Fan Fan::normalized() const {
    IntegerMatrix cols = IntegerMatrix::from_columns(rays_, dim_);
    IntegerMatrix h = hermite_normal_form(cols).h;
    return Fan(dim_, h.column_list(), cones_);
}

FanReport validate_fan(const Fan& f) {
    FanReport rep;
    const auto& rays = f.rays();
    const std::size_t n = f.dim();

    for (const auto& c : f.cones()) {
        auto vs = pick(rays, c);
        if (rank(std::span<const IntVector>(vs)) != c.size()) {
            rep.simplicial = false;
            rep.violations.push_back("cone " + index_set_string(c) + " is not simplicial");
        }
    }

    if (rep.simplicial) {
        std::vector<Cone> cones;
        for (const auto& c : f.cones()) cones.push_back(Cone::from_generators(n, pick(rays, c)));
        for (std::size_t a = 0; a < f.cones().size(); ++a)
            for (std::size_t b = a + 1; b < f.cones().size(); ++b) {
                IndexSet common;
                std::set_intersection(f.cones()[a].begin(), f.cones()[a].end(),
                                      f.cones()[b].begin(), f.cones()[b].end(),
                                      std::back_inserter(common));
                if (intersect(cones[a], cones[b]) != Cone::from_generators(n, pick(rays, common))) {
                    rep.intersections_ok = false;
                    rep.violations.push_back("cones " + index_set_string(f.cones()[a]) + " and " +
                                             index_set_string(f.cones()[b]) +
                                             " do not meet in a common face");
                }
            }
    }

    // Completeness.
    if (f.cones().empty()) {
        rep.complete = false;
        rep.violations.push_back("fan has no cones");
        return rep;
    }
    for (const auto& c : f.cones())
        if (c.size() != n) {
            rep.complete = false;
            rep.violations.push_back("cone " + index_set_string(c) + " is not full dimensional");
        }
    if (!rep.complete || n == 0) {
        if (n == 0 && f.cones().size() != 1) rep.complete = false;
        return rep;
    }
    std::map<IndexSet, std::vector<std::size_t>> ridges;
    for (std::size_t a = 0; a < f.cones().size(); ++a) {
        const auto& c = f.cones()[a];
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            IndexSet r;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) r.push_back(c[i]);
            ridges[r].push_back(a);
        }
    }
    std::vector<std::vector<std::size_t>> adj(f.cones().size());
    for (const auto& [ridge, owners] : ridges) {
        if (owners.size() != 2) {
            rep.complete = false;
            rep.violations.push_back("ridge " + index_set_string(ridge) + " lies in " +
                                     std::to_string(owners.size()) + " maximal cone(s), expected 2");
            continue;
        }
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    std::vector<bool> seen(f.cones().size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        auto a = q.front();
        q.pop();
        for (auto b : adj[a])
            if (!seen[b]) {
                seen[b] = true;
                ++reached;
                q.push(b);
            }
    }
    if (reached != f.cones().size()) {
        rep.complete = false;
        rep.violations.push_back("dual graph of the maximal cones is disconnected");
    }
    return rep;
}

WeightSystem::WeightSystem(std::size_t rho, std::vector<IntVector> columns,
                           std::vector<Integer> torsion)
    : rho_(rho), columns_(std::move(columns)), torsion_(std::move(torsion)) {
    if (rho_ == 0) throw ValidationError("weight system needs rho >= 1");
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].size() != rho_)
            throw ValidationError("character " + std::to_string(i) + " has length " +
                                  std::to_string(columns_[i].size()) + ", expected " +
                                  std::to_string(rho_));
        if (is_zero(columns_[i]))
            throw ValidationError("character " + std::to_string(i) + " is zero");
    }
    if (columns_.size() < rho_) throw ValidationError("fewer characters than rho");
    if (rank(std::span<const IntVector>(columns_)) != rho_)
        throw ValidationError("characters do not span a space of dimension rho = " +
                              std::to_string(rho_));
}

IntegerMatrix WeightSystem::matrix() const { return IntegerMatrix::from_columns(columns_, rho_); }

IntegerMatrix normalize_weight_matrix(const IntegerMatrix& w) {
    const std::size_t m = w.rows(), r = w.cols();
    IntegerMatrix rot(m, r);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < r; ++j) rot(i, j) = w(m - 1 - i, r - 1 - j);
    IntegerMatrix h = hermite_normal_form(rot).h;
    IntegerMatrix out(m, r);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < r; ++j) out(i, j) = h(m - 1 - i, r - 1 - j);
    return out;
}

WeightSystem cox_weights(const Fan& f) {
    FanReport rep = validate_fan(f);
    if (!rep.valid_complete()) {
        std::string msg = "fan is not a complete simplicial fan:";
        for (const auto& v : rep.violations) msg += " " + v + ";";
        throw ValidationError(msg);
    }
    const std::size_t r = f.rays().size(), n = f.dim();
    IntegerMatrix rays = f.ray_matrix();  // r x n: m -> (<m, u_i>)_i
    SmithForm s = smith_normal_form(rays);
    if (s.rank != n) throw ValidationError("rays do not span the lattice");
    std::vector<Integer> torsion;
    for (const auto& d : s.elementary_divisors())
        if (d > 1) torsion.push_back(d);
    IntegerMatrix free_part = normalize_weight_matrix(s.u.select_rows(n, r));
    return WeightSystem(r - n, free_part.column_list(), std::move(torsion));
}

IntegerMatrix gale_dual(const WeightSystem& w) { return saturated_kernel_basis(w.matrix()); }

std::vector<IntVector> wall_hyperplanes(const WeightSystem& w) {
    const std::size_t rho = w.rho();
    std::vector<IntVector> out;
    if (rho == 1) {
        out.push_back(IntVector{Integer(1)});
        return out;
    }
    for (const auto& subset : combinations(w.r(), rho - 1)) {
        auto vs = pick(w.columns(), subset);
        auto perp = orthogonal_complement(vs, rho);
        if (perp.size() != 1) continue;
        out.push_back(sign_normalized(perp.front()));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_generic(const WeightSystem& w, const RatVector& chi) {
    if (chi.size() != w.rho())
        throw DimensionMismatch("linearization has length " + std::to_string(chi.size()) +
                                ", expected rho = " + std::to_string(w.rho()));
    Cone g_ample = Cone::from_generators(w.rho(), w.columns());
    if (contains(g_ample, chi) == Location::Outside)
        throw EmptySemistableLocus("linearization " + to_string(chi) +
                                   " lies outside the G-ample cone: empty semistable locus");
    for (const auto& h : wall_hyperplanes(w))
        if (dot(h, chi) == 0)
            throw DegenerateLinearization("degenerate linearization on a wall: " + to_string(chi) +
                                          " lies on the hyperplane with normal " + to_string(h));
}

Quotient quotient(const WeightSystem& w, const RatVector& chi) {
    check_generic(w, chi);
    const std::size_t r = w.r(), rho = w.rho();
    IntegerMatrix gale = gale_dual(w);
    const std::size_t n = gale.rows();

    Quotient q;
    std::vector<bool> used(r, false);
    for (const auto& basis : combinations(r, rho)) {
        IntegerMatrix wj = IntegerMatrix::from_columns(pick(w.columns(), basis), rho);
        if (determinant(wj) == 0) continue;
        RatVector lambda;
        solve_rational(wj.row_list(), chi, lambda, rho);
        if (!std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x > 0; }))
            continue;
        IndexSet complement;
        std::size_t k = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (k < basis.size() && basis[k] == j) {
                ++k;
                continue;
            }
            complement.push_back(j);
            used[j] = true;
        }
        q.column_cones.push_back(std::move(complement));
    }
    std::sort(q.column_cones.begin(), q.column_cones.end());

    std::vector<std::size_t> position(r, 0);
    std::vector<IntVector> rays;
    for (std::size_t j = 0; j < r; ++j) {
        if (!used[j]) {
            q.dropped.push_back(j);
            continue;
        }
        position[j] = q.columns.size();
        q.columns.push_back(j);
        rays.push_back(gale.column(j));
    }
    std::vector<IndexSet> cones;
    for (const auto& c : q.column_cones) {
        IndexSet idx;
        for (auto j : c) idx.push_back(position[j]);
        cones.push_back(std::move(idx));
    }
    q.fan = Fan(n, std::move(rays), std::move(cones));
    q.report = validate_fan(q.fan);
    return q;
}

Fan quotient_fan(const WeightSystem& w, const RatVector& chi) { return quotient(w, chi).fan; }

UnstableLocus unstable_locus(const WeightSystem& w, const RatVector& chi) {
    if (chi.size() != w.rho()) throw DimensionMismatch("linearization dimension mismatch");
    std::set<IndexSet> supports;
    for (const auto& normal : wall_hyperplanes(w))
        for (int orientation : {+1, -1}) {
            IntVector h = orientation > 0 ? normal : -normal;
            if (dot(h, chi) >= 0) continue;
            IndexSet j;
            for (std::size_t c = 0; c < w.r(); ++c)
                if (dot(h, w.column(c)) >= 0) j.push_back(c);
            supports.insert(std::move(j));
        }
    UnstableLocus out;
    for (const auto& j : supports) {
        bool maximal = true;
        for (const auto& k : supports)
            if (k.size() > j.size() && std::includes(k.begin(), k.end(), j.begin(), j.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.strata.push_back(j);
    }
    std::size_t largest = 0;
    for (const auto& j : out.strata) largest = std::max(largest, j.size());
    out.min_codimension = out.strata.empty() ? w.r() + 1 : w.r() - largest;
    return out;
}

}  // namespace mdsgit
