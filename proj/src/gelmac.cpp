#include "mdsgit/gelmac.hpp"

#include "mdsgit/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace mdsgit {

namespace {

struct Edge {
    std::size_t other = 0;
    Subset subset = 0;
};

std::vector<long> to_longs(const IntVector& x) {
    std::vector<long> out;
    out.reserve(x.size());
    for (const auto& v : x) {
        if (!v.fits_slong_p()) throw ValidationError("linearization entry too large");
        out.push_back(v.get_si());
    }
    return out;
}

std::vector<std::vector<Edge>> stable_graph(const GelMacConfig& cfg) {
    std::vector<std::vector<Edge>> adj(cfg.chambers.size());
    for (const auto& a : cfg.complex.walls) {
        if (!cfg.chambers[a.left].stable || !cfg.chambers[a.right].stable) continue;
        Subset s = cfg.walls[cfg.wall_of(a)].subset;
        adj[a.left].push_back({a.right, s});
        adj[a.right].push_back({a.left, s});
    }
    for (auto& edges : adj)
        std::sort(edges.begin(), edges.end(),
                  [](const Edge& x, const Edge& y) { return x.other < y.other; });
    return adj;
}

// rho(to) given rho(from) across W_S.
long step(const GelMacConfig& cfg, std::size_t from, Subset s, long rho_from) {
    std::vector<long> x = to_longs(cfg.chambers[from].representative);
    long jump = picard_jump(cfg.n, s);
    // jump = rho(side with l_S < 0) - rho(side with l_S > 0)
    return subset_functional(x, s) < 0 ? rho_from - jump : rho_from + jump;
}

std::vector<std::size_t> trace(const std::vector<std::optional<std::size_t>>& parent,
                               std::size_t id) {
    std::vector<std::size_t> path{id};
    while (parent[path.back()]) path.push_back(*parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

Subset subset_between(const std::vector<std::vector<Edge>>& adj, std::size_t a, std::size_t b) {
    for (const auto& e : adj[a])
        if (e.other == b) return e.subset;
    throw Error("chambers are not adjacent");
}

// Shortest path from `from` to `to` not using the undirected edge `banned`; empty if none.
std::vector<std::size_t> avoiding_path(const std::vector<std::vector<Edge>>& adj, std::size_t from,
                                       std::size_t to, std::pair<std::size_t, std::size_t> banned) {
    auto is_banned = [&](std::size_t a, std::size_t b) {
        return (a == banned.first && b == banned.second) || (a == banned.second && b == banned.first);
    };
    std::vector<std::optional<std::size_t>> parent(adj.size());
    std::vector<bool> seen(adj.size(), false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        if (c == to) return trace(parent, to);
        for (const auto& e : adj[c]) {
            if (seen[e.other] || is_banned(c, e.other)) continue;
            seen[e.other] = true;
            parent[e.other] = c;
            queue.push_back(e.other);
        }
    }
    return {};
}

}  // namespace

long m0n_picard_number(std::size_t n) {
    return (1L << (n - 1)) - static_cast<long>(n * (n - 1) / 2) - 1;
}

long subset_functional(const std::vector<long>& x, Subset s) {
    long v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v += (s >> i) & 1U ? x[i] : -x[i];
    return v;
}

std::string subset_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < 32; ++i)
        if ((s >> i) & 1U) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

std::size_t GelMacConfig::wall_of(const Subdivision::Adjacency& a) const {
    for (std::size_t i = 0; i < walls.size(); ++i)
        if (walls[i].functional == a.normal || walls[i].functional == -a.normal) return i;
    throw Error("adjacency normal is not a wall functional");
}

GelMacConfig build_config(std::size_t n, std::size_t max_n) {
    if (n < 4) throw ValidationError("need at least 4 points, got " + std::to_string(n));
    if (n > max_n || n > 31)
        throw ValidationError("n = " + std::to_string(n) + " exceeds the configured limit " +
                              std::to_string(std::min<std::size_t>(max_n, 31)));
    GelMacConfig cfg;
    cfg.n = n;
    for (std::size_t k = 1; 2 * k <= n; ++k)
        for (const auto& c : combinations(n, k)) {
            if (2 * k == n && c.front() != 0) continue;
            Subset s = 0;
            for (auto i : c) s |= Subset{1} << i;
            IntVector l(n);
            for (std::size_t i = 0; i < n; ++i) l[i] = (s >> i) & 1U ? 1 : -1;
            cfg.walls.push_back({s, std::move(l)});
        }

    std::vector<IntVector> axes;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = 1;
        axes.push_back(std::move(e));
    }
    Cone orthant = Cone::from_inequalities(n, axes);
    std::vector<IntVector> hyperplanes;
    for (const auto& w : cfg.walls) hyperplanes.push_back(w.functional);
    cfg.complex = subdivide(orthant, hyperplanes);

    IntVector seed_point(n, Integer(1));
    seed_point[0] = static_cast<long>(n) - 2;
    bool seed_found = false;
    for (std::size_t id = 0; id < cfg.complex.cells.size(); ++id) {
        GelMacChamber ch;
        ch.id = id;
        ch.cone = cfg.complex.cells[id];
        ch.representative = primitive(clear_denominators(relative_interior_point(ch.cone)));
        std::vector<long> x = to_longs(ch.representative);
        ch.stable = true;
        for (std::size_t i = 0; i < n; ++i)
            if (subset_functional(x, Subset{1} << i) >= 0) ch.stable = false;
        if (contains(ch.cone, seed_point) == Location::Interior) {
            cfg.seed = id;
            seed_found = true;
        }
        cfg.chambers.push_back(std::move(ch));
    }
    if (!seed_found) throw Error("seed linearization not interior to a chamber");
    return cfg;
}

std::size_t exceptional_count(const GelMacConfig& cfg, const IntVector& x) {
    if (x.size() != cfg.n) throw DimensionMismatch("linearization has wrong length");
    std::vector<long> v = to_longs(x);
    const Subset full = (Subset{1} << cfg.n) - 1;
    std::size_t count = 0;
    for (Subset s = 1; s < full; ++s) {
        long l = subset_functional(v, s);
        if (l == 0)
            throw DegenerateLinearization("degenerate linearization on a wall: l_" +
                                          subset_string(s) + " vanishes");
        auto size = static_cast<std::size_t>(std::popcount(s));
        if (size >= 3 && size + 2 <= cfg.n && l < 0) ++count;
    }
    return count;
}

long picard_jump(std::size_t n, Subset s) {
    auto k = static_cast<std::size_t>(std::popcount(s));
    return (k == 2 ? 1L : 0L) - (n - k == 2 ? 1L : 0L);
}

PicardPropagation propagate_picard(const GelMacConfig& cfg) {
    const std::size_t m = cfg.chambers.size();
    auto adj = stable_graph(cfg);
    PicardPropagation out;
    out.rho.assign(m, std::nullopt);
    out.rho_second.assign(m, std::nullopt);
    out.first_path.assign(m, {});
    out.second_path.assign(m, {});

    // Breadth first, ascending neighbour order.
    std::vector<std::optional<std::size_t>> parent(m);
    std::deque<std::size_t> queue{cfg.seed};
    out.rho[cfg.seed] = 1;
    while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        for (const auto& e : adj[c]) {
            if (out.rho[e.other]) continue;
            out.rho[e.other] = step(cfg, c, e.subset, *out.rho[c]);
            parent[e.other] = c;
            queue.push_back(e.other);
        }
    }
    for (std::size_t id = 0; id < m; ++id)
        if (out.rho[id]) out.first_path[id] = trace(parent, id);

    // Second route: a shortest path that avoids the last edge of the first one. For the seed
    // it leaves along the first edge and comes back another way.
    for (std::size_t id = 0; id < m; ++id) {
        if (!out.rho[id]) continue;
        std::vector<std::size_t> route;
        if (id == cfg.seed) {
            if (adj[id].empty()) continue;
            std::size_t first = adj[id].front().other;
            route = avoiding_path(adj, first, id, {first, id});
            if (!route.empty()) route.insert(route.begin(), id);
        } else {
            const auto& p = out.first_path[id];
            route = avoiding_path(adj, cfg.seed, id, {p[p.size() - 2], id});
        }
        if (route.empty()) continue;
        long rho = 1;
        for (std::size_t k = 0; k + 1 < route.size(); ++k)
            rho = step(cfg, route[k], subset_between(adj, route[k], route[k + 1]), rho);
        out.rho_second[id] = rho;
        out.second_path[id] = std::move(route);
    }

    for (std::size_t c = 0; c < m; ++c)
        for (const auto& e : adj[c])
            if (c < e.other && out.rho[c] && out.rho[e.other] &&
                step(cfg, c, e.subset, *out.rho[c]) != *out.rho[e.other])
                ++out.inconsistent_walls;
    return out;
}

long quotient_picard(const GelMacConfig& cfg, const IntVector& x) {
    for (const auto& ch : cfg.chambers) {
        if (contains(ch.cone, x) != Location::Interior) continue;
        if (!ch.stable)
            throw ValidationError("linearization " + to_string(x) + " has an empty stable locus");
        auto prop = propagate_picard(cfg);
        if (!prop.rho[ch.id]) throw Error("chamber unreachable from the seed");
        return *prop.rho[ch.id];
    }
    throw DegenerateLinearization("degenerate linearization on a wall: " + to_string(x));
}

RhoReport verify_rho_formula(const GelMacConfig& cfg) {
    RhoReport rep;
    rep.n = cfg.n;
    rep.expected = m0n_picard_number(cfg.n);
    rep.chambers = cfg.chambers.size();
    auto prop = propagate_picard(cfg);
    rep.inconsistent_walls = prop.inconsistent_walls;
    rep.seed_rho = prop.rho[cfg.seed].value_or(0);
    bool ok = rep.inconsistent_walls == 0 && rep.seed_rho == 1;
    for (const auto& ch : cfg.chambers) {
        RhoRow row;
        row.chamber = ch.id;
        row.representative = ch.representative;
        row.stable = ch.stable;
        if (ch.stable) {
            ++rep.stable_chambers;
            row.exceptional = exceptional_count(cfg, ch.representative);
            row.rho = prop.rho[ch.id].value_or(-1);
            row.rho_second_path = prop.rho_second[ch.id].value_or(-1);
            row.first_path_length = prop.first_path[ch.id].size();
            row.second_path_length = prop.second_path[ch.id].size();
            row.distinct_paths = prop.first_path[ch.id] != prop.second_path[ch.id];
            row.passed = prop.rho[ch.id] && prop.rho_second[ch.id] &&
                         row.rho == row.rho_second_path &&
                         row.rho + static_cast<long>(row.exceptional) == rep.expected;
            ok = ok && row.passed;
        }
        rep.rows.push_back(std::move(row));
    }
    rep.passed = ok && rep.stable_chambers > 0;
    return rep;
}

}  // namespace mdsgit
