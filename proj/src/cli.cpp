#include "mdsgit/cli.hpp"

#include "mdsgit/error.hpp"
#include "mdsgit/mori.hpp"
#include "mdsgit/vgit.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace mdsgit::cli {

namespace {

const std::vector<std::string> kCommands = {"chambers", "nef",   "mov",    "eff",         "walls",
                                            "sqms",     "quotient", "factor", "check-cover", "m0n"};

Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(j.get<long>());
    }
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) == 0) return x;
    }
    throw ParseError(where + ": expected an integer, got " + j.dump());
}

IntVector vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

std::vector<IntVector> vectors_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of vectors");
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(vector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

void require_equal_lengths(const std::vector<IntVector>& vs, const std::string& where) {
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (vs[i].size() != vs[0].size())
            throw ValidationError(where + "[" + std::to_string(i) + "] has length " +
                                  std::to_string(vs[i].size()) + ", expected " +
                                  std::to_string(vs[0].size()));
}

Fan fan_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rays") || !j.contains("cones"))
        throw ParseError("fan: expected an object with \"rays\" and \"cones\"");
    auto rays = vectors_from_json(j["rays"], "fan.rays");
    if (rays.empty()) throw ValidationError("fan.rays: no rays given");
    require_equal_lengths(rays, "fan.rays");
    const Json& cj = j["cones"];
    if (!cj.is_array()) throw ParseError("fan.cones: expected an array of index lists");
    std::vector<IndexSet> cones;
    for (std::size_t c = 0; c < cj.size(); ++c) {
        const std::string where = "fan.cones[" + std::to_string(c) + "]";
        IntVector idx = vector_from_json(cj[c], where);
        IndexSet set;
        for (const auto& i : idx) {
            if (sgn(i) < 0 || i >= Integer(static_cast<unsigned long>(rays.size())))
                throw ValidationError(where + " " + cj[c].dump() + " references ray " + i.get_str() +
                                      ", but only " + std::to_string(rays.size()) + " rays exist");
            set.push_back(i.get_ui());
        }
        cones.push_back(std::move(set));
    }
    const std::size_t dim = rays[0].size();
    return Fan(dim, std::move(rays), std::move(cones));
}

WeightSystem weights_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("weights: expected an object");
    const bool has_cols = j.contains("columns"), has_rows = j.contains("rows");
    if (has_cols == has_rows) throw ParseError("weights: give exactly one of \"columns\" and \"rows\"");
    std::vector<IntVector> columns;
    if (has_cols) {
        columns = vectors_from_json(j["columns"], "weights.columns");
        require_equal_lengths(columns, "weights.columns");
    } else {
        auto rows = vectors_from_json(j["rows"], "weights.rows");
        require_equal_lengths(rows, "weights.rows");
        const std::size_t r = rows.empty() ? 0 : rows[0].size();
        columns.assign(r, IntVector(rows.size()));
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (std::size_t i = 0; i < r; ++i) columns[i][k] = rows[k][i];
    }
    if (columns.empty()) throw ValidationError("weights: no characters given");
    const std::size_t rho = columns[0].size();
    return WeightSystem(rho, std::move(columns));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string index_list(const std::vector<std::size_t>& xs) {
    std::vector<std::string> parts;
    for (auto x : xs) parts.push_back(std::to_string(x));
    return "[" + join(parts, ",") + "]";
}

using cli::to_json;

Json to_json(const std::vector<IntVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

Json quotient_json(const Quotient& q) {
    Json j;
    j["dim"] = q.fan.dim();
    j["rays"] = to_json(q.fan.rays());
    j["columns"] = q.columns;
    j["cones"] = q.fan.cones();
    j["column_cones"] = q.column_cones;
    j["dropped"] = q.dropped;
    j["complete"] = q.report.valid_complete();
    return j;
}

Json optional_json(const std::optional<long>& x) { return x ? Json(*x) : Json(nullptr); }

Json chamber_json(const Chamber& ch) {
    Json j;
    j["id"] = ch.id;
    j["cone"] = to_json(ch.cone);
    j["representative"] = to_json(clear_denominators(ch.representative));
    j["quotient"] = quotient_json(ch.quotient);
    j["picard_number"] = optional_json(picard_number(ch));
    return j;
}

Json crossing_json(const WallCrossing& x) {
    Json j;
    if (x.wall) j["wall"] = *x.wall;
    if (x.boundary) j["boundary"] = *x.boundary;
    j["from"] = x.from;
    j["to"] = x.to ? Json(*x.to) : Json(nullptr);
    j["kind"] = to_string(x.kind);
    j["rays_before"] = x.rays_before;
    j["rays_after"] = x.rays_after;
    j["picard_delta"] = x.picard_delta;
    j["divisor"] = x.divisor ? Json(*x.divisor) : Json(nullptr);
    j["dimension_before"] = x.dimension_before;
    j["dimension_after"] = x.dimension_after;
    return j;
}

std::string crossing_text(const WallCrossing& x) {
    std::ostringstream t;
    if (x.wall)
        t << "wall " << *x.wall << ": chamber " << x.from << " -> " << *x.to;
    else
        t << "boundary " << *x.boundary << ": chamber " << x.from;
    t << "  " << to_string(x.kind);
    if (x.to) t << "  picard_delta " << x.picard_delta;
    if (x.divisor) t << "  divisor column " << *x.divisor;
    if (x.dimension_before != x.dimension_after)
        t << "  dimension " << x.dimension_before << " -> " << x.dimension_after;
    return t.str();
}

std::size_t reference_of(const ChamberComplex& cc, const InputDocument& doc) {
    if (doc.fan) return nef_chamber(cc, *doc.fan);
    auto ref = reference_chamber(cc);
    if (!ref) throw ValidationError("no chamber has a quotient using every column");
    return *ref;
}

std::size_t endpoint(const ChamberComplex& cc, const std::string& arg, const std::string& flag) {
    if (arg.rfind("id:", 0) == 0) {
        std::size_t id = 0;
        try {
            std::size_t used = 0;
            id = std::stoul(arg.substr(3), &used);
            if (used != arg.size() - 3) throw std::invalid_argument(arg);
        } catch (const std::logic_error&) {
            throw ParseError(flag + ": malformed chamber id '" + arg + "'");
        }
        if (id >= cc.chambers().size())
            throw ValidationError(flag + ": chamber " + std::to_string(id) + " does not exist (" +
                                  std::to_string(cc.chambers().size()) + " chambers)");
        return id;
    }
    RatVector chi = parse_vector(arg);
    if (chi.size() != cc.weights().rho())
        throw DimensionMismatch(flag + ": expected " + std::to_string(cc.weights().rho()) +
                                " coordinates, got " + std::to_string(chi.size()));
    ChamberLocation loc = chamber_of(cc, chi);
    if (loc.kind != ChamberLocation::Kind::Interior)
        throw DegenerateLinearization("degenerate linearization on a wall: " + flag + " " +
                                      to_string(chi) + " is not interior to a chamber");
    return *loc.chamber;
}

Json input_json(const InputDocument& doc) {
    Json j;
    j["name"] = doc.name;
    j["kind"] = doc.fan ? "fan" : "weights";
    j["digest"] = doc.digest;
    return j;
}

Json weights_json(const WeightSystem& w) {
    Json j;
    j["rho"] = w.rho();
    j["columns"] = to_json(w.columns());
    Json t = Json::array();
    for (const auto& x : w.torsion()) t.push_back(to_json(x));
    j["torsion"] = t;
    return j;
}

std::string weights_text(const WeightSystem& w) {
    std::vector<std::string> cols;
    for (const auto& c : w.columns()) cols.push_back(to_string(c));
    return "weights: rho " + std::to_string(w.rho()) + ", columns " + join(cols, " ");
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

InputDocument parse_input(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("input must be a JSON object");

    InputDocument out;
    out.digest = fnv1a_hex(text);
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("name: expected a string");
        out.name = doc["name"].get<std::string>();
    }
    const bool bare_fan = doc.contains("rays");
    const bool bare_weights = doc.contains("columns") || doc.contains("rows");
    const bool has_fan = doc.contains("fan") || bare_fan;
    const bool has_weights = doc.contains("weights") || bare_weights;
    if (has_fan == has_weights) throw ParseError("input must contain exactly one of \"fan\" and \"weights\"");

    if (has_fan) {
        Fan fan = fan_from_json(bare_fan ? doc : doc["fan"]);
        FanReport report = validate_fan(fan);
        if (!report.valid_complete())
            throw ValidationError("fan is not a complete simplicial fan: " + join(report.violations, "; "));
        for (auto i : fan.normalized_rays())
            out.warnings.push_back("ray " + std::to_string(i) + " was not primitive; normalized to " +
                                   to_string(fan.rays()[i]));
        out.weights = cox_weights(fan);
        out.fan = std::move(fan);
    } else {
        out.weights = weights_from_json(bare_weights ? doc : doc["weights"]);
    }
    if (!out.weights.torsion().empty()) {
        std::vector<std::string> parts;
        for (const auto& t : out.weights.torsion()) parts.push_back("Z/" + t.get_str());
        out.warnings.push_back("class group torsion " + join(parts, " + ") +
                               " ignored: the grading uses the free part only");
    }
    return out;
}

InputDocument load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str());
}

RatVector parse_vector(std::string_view text) {
    RatVector out;
    std::string s(text);
    std::replace(s.begin(), s.end(), ' ', ',');
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        Rational q;
        if (q.set_str(item, 10) != 0 || (item.find('/') != std::string::npos && q.get_den() == 0))
            throw ParseError("malformed vector entry '" + item + "' in '" + std::string(text) + "'");
        q.canonicalize();
        out.push_back(q);
    }
    if (out.empty()) throw ParseError("empty vector '" + std::string(text) + "'");
    return out;
}

Json to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const Cone& c) {
    Json j;
    j["dim"] = c.ambient_dim();
    j["rays"] = to_json(c.rays());
    j["lineality"] = to_json(c.lineality());
    j["inequalities"] = to_json(c.facets());
    j["equations"] = to_json(c.equations());
    return j;
}

Cone cone_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rays"))
        throw ParseError("cone: expected an object with \"dim\" and \"rays\"");
    if (!j["dim"].is_number_unsigned()) throw ParseError("cone.dim: expected a count");
    const auto dim = j["dim"].get<std::size_t>();
    auto rays = vectors_from_json(j["rays"], "cone.rays");
    std::vector<IntVector> lineality;
    if (j.contains("lineality")) lineality = vectors_from_json(j["lineality"], "cone.lineality");
    for (const auto& v : rays)
        if (v.size() != dim) throw DimensionMismatch("cone.rays: vector of wrong length");
    for (const auto& v : lineality)
        if (v.size() != dim) throw DimensionMismatch("cone.lineality: vector of wrong length");
    return Cone::from_generators(dim, rays, lineality);
}

Report dispatch(const Options& opts, const InputDocument* doc) {
    Report rep;
    Json& body = rep.body;
    std::ostringstream text;
    body["command"] = opts.command;

    if (opts.command == "m0n") {
        if (!opts.n) throw ParseError("m0n needs --n");
        body["input"] = doc ? input_json(*doc) : Json(nullptr);
        GelMacConfig cfg = build_config(*opts.n, opts.max_n);
        RhoReport r = verify_rho_formula(cfg);
        Json res;
        res["n"] = r.n;
        res["expected"] = r.expected;
        res["walls"] = cfg.walls.size();
        res["chambers"] = r.chambers;
        res["stable_chambers"] = r.stable_chambers;
        res["seed"] = cfg.seed;
        res["seed_rho"] = r.seed_rho;
        res["inconsistent_walls"] = r.inconsistent_walls;
        std::size_t distinct = 0;
        Json rows = Json::array();
        for (const auto& row : r.rows) {
            if (!row.stable) continue;
            if (row.distinct_paths) ++distinct;
            Json jr;
            jr["chamber"] = row.chamber;
            jr["representative"] = to_json(row.representative);
            jr["rho"] = row.rho;
            jr["rho_second_path"] = row.rho_second_path;
            jr["exceptional"] = row.exceptional;
            jr["distinct_paths"] = row.distinct_paths;
            jr["passed"] = row.passed;
            rows.push_back(std::move(jr));
        }
        res["distinct_path_chambers"] = distinct;
        res["rows"] = std::move(rows);
        body["result"] = std::move(res);
        rep.passed = r.passed;

        text << "n = " << r.n << ": " << cfg.walls.size() << " walls, " << r.chambers << " chambers, "
             << r.stable_chambers << " with nonempty stable locus\n";
        text << "seed chamber " << cfg.seed << " has rho = " << r.seed_rho << "\n";
        text << "rho agreed along two paths; the paths differ for " << distinct << " chambers\n";
        for (const auto& row : r.rows)
            if (row.stable && !row.passed)
                text << "FAILED chamber " << row.chamber << " " << to_string(row.representative)
                     << ": rho " << row.rho << " (second path " << row.rho_second_path << ") + e_U "
                     << row.exceptional << " != " << r.expected << "\n";
        if (r.passed)
            text << "all " << r.stable_chambers << " chambers satisfy rho + e_U = " << r.expected << "\n";
        else
            text << "verification failed (" << r.inconsistent_walls << " inconsistent walls)\n";
    } else {
        if (!doc) throw ParseError(opts.command + " needs an input file");
        body["input"] = input_json(*doc);
        const WeightSystem& w = doc->weights;
        body["weights"] = weights_json(w);
        text << "input: " << (doc->name.empty() ? "(unnamed)" : doc->name) << " ("
             << (doc->fan ? "fan" : "weights") << ", digest " << doc->digest << ")\n";
        text << weights_text(w) << "\n";
        ChamberComplex cc = enumerate_chambers(w);
        Json res;

        if (opts.command == "chambers") {
            res["g_ample"] = to_json(cc.g_ample());
            Json chambers = Json::array();
            for (const auto& ch : cc.chambers()) chambers.push_back(chamber_json(ch));
            res["chambers"] = std::move(chambers);
            Json walls = Json::array();
            for (std::size_t i = 0; i < cc.walls().size(); ++i) {
                const auto& wl = cc.walls()[i];
                walls.push_back({{"index", i}, {"left", wl.left}, {"right", wl.right},
                                 {"facet", to_json(wl.facet)}, {"normal", to_json(wl.normal)}});
            }
            res["walls"] = std::move(walls);
            Json boundary = Json::array();
            for (const auto& b : cc.boundary())
                boundary.push_back({{"chamber", b.chamber}, {"facet", to_json(b.facet)},
                                    {"normal", to_json(b.normal)}});
            res["boundary"] = std::move(boundary);

            text << "G-ample cone: " << cc.g_ample().to_string() << "\n";
            text << cc.chambers().size() << " chambers, " << cc.walls().size() << " walls, "
                 << cc.boundary().size() << " boundary facets\n";
            for (const auto& ch : cc.chambers()) {
                auto pn = picard_number(ch);
                text << "chamber " << ch.id << ": " << ch.cone.to_string() << "  representative "
                     << to_string(clear_denominators(ch.representative)) << "  quotient columns "
                     << index_list(ch.quotient.columns) << "  picard "
                     << (pn ? std::to_string(*pn) : std::string("undefined")) << "\n";
            }
            for (std::size_t i = 0; i < cc.walls().size(); ++i) {
                const auto& wl = cc.walls()[i];
                text << "wall " << i << ": " << wl.left << " | " << wl.right << "  facet "
                     << wl.facet.to_string() << "  normal " << to_string(wl.normal) << "\n";
            }
        } else if (opts.command == "nef") {
            std::size_t ref = reference_of(cc, *doc);
            const Chamber& ch = cc.chamber(ref);
            res["chamber"] = ref;
            res["cone"] = to_json(ch.cone);
            res["quotient"] = quotient_json(ch.quotient);
            text << "nef cone: chamber " << ref << " " << ch.cone.to_string() << "\n";
        } else if (opts.command == "eff") {
            Cone eff = effective_cone(cc);
            res["cone"] = to_json(eff);
            text << "effective cone: " << eff.to_string() << "\n";
        } else if (opts.command == "sqms") {
            std::size_t ref = reference_of(cc, *doc);
            auto sqms = enumerate_sqms(cc, ref);
            res["reference"] = ref;
            res["chambers"] = sqms;
            Json cones = Json::array();
            for (auto id : sqms) cones.push_back(to_json(cc.chamber(id).cone));
            res["cones"] = std::move(cones);
            text << sqms.size() << " small modifications of chamber " << ref << ": "
                 << index_list(sqms) << "\n";
            for (auto id : sqms) text << "chamber " << id << ": " << cc.chamber(id).cone.to_string() << "\n";
        } else if (opts.command == "mov") {
            std::size_t ref = reference_of(cc, *doc);
            MovingCone mv = moving_cone(cc, ref);
            const bool checked = cc.chamber(ref).quotient.report.valid_complete();
            res["reference"] = ref;
            res["chambers"] = mv.chambers;
            res["convex"] = mv.convex;
            res["cone"] = mv.convex ? to_json(mv.hull) : Json(nullptr);
            res["hull"] = to_json(mv.hull);
            res["oracle"] = to_json(mv.oracle);
            res["matches_oracle"] = mv.matches_oracle;
            rep.passed = !checked || mv.matches_oracle;
            text << "moving cone: union of chambers " << index_list(mv.chambers) << "\n";
            text << (mv.convex ? "convex: " : "not convex; hull ") << mv.hull.to_string() << "\n";
            text << "oracle intersection: " << mv.oracle.to_string() << "  "
                 << (mv.matches_oracle ? "matches" : "DIFFERS") << "\n";
        } else if (opts.command == "walls") {
            Json walls = Json::array(), boundary = Json::array();
            for (std::size_t i = 0; i < cc.walls().size(); ++i) {
                WallCrossing x = classify_wall(cc, i);
                if (x.kind == CrossingKind::Irregular) rep.passed = false;
                walls.push_back(crossing_json(x));
                text << crossing_text(x) << "\n";
            }
            for (std::size_t i = 0; i < cc.boundary().size(); ++i) {
                WallCrossing x = classify_boundary(cc, i);
                boundary.push_back(crossing_json(x));
                text << crossing_text(x) << "\n";
            }
            res["walls"] = std::move(walls);
            res["boundary"] = std::move(boundary);
        } else if (opts.command == "quotient") {
            if (!opts.chi) throw ParseError("quotient needs --chi");
            RatVector chi = parse_vector(*opts.chi);
            if (chi.size() != w.rho())
                throw DimensionMismatch("--chi: expected " + std::to_string(w.rho()) + " coordinates, got " +
                                        std::to_string(chi.size()));
            ChamberLocation loc = chamber_of(cc, chi);
            if (loc.kind != ChamberLocation::Kind::Interior)
                throw DegenerateLinearization("degenerate linearization on a wall: " + to_string(chi) + " lies on a " +
                                              to_string(loc.kind) + " face of the chamber decomposition");
            // GIT equivalent to the chamber representative, which also avoids non-wall hyperplanes.
            const Chamber& ch = cc.chamber(*loc.chamber);
            const Quotient& q = ch.quotient;
            UnstableLocus ul = unstable_locus(w, ch.representative);
            res["chi"] = to_json(clear_denominators(chi));
            res["chamber"] = ch.id;
            res["quotient"] = quotient_json(q);
            res["picard_number"] = optional_json(picard_number(ch));
            res["unstable_strata"] = ul.strata;
            res["min_codimension"] = ul.min_codimension;
            text << "chi " << to_string(chi) << " lies in chamber " << ch.id << " " << ch.cone.to_string() << "\n";
            text << "quotient fan in dimension " << q.fan.dim() << ", rays from columns "
                 << index_list(q.columns) << ", dropped " << index_list(q.dropped) << "\n";
            for (std::size_t i = 0; i < q.fan.rays().size(); ++i)
                text << "  ray " << i << ": " << to_string(q.fan.rays()[i]) << "\n";
            for (const auto& c : q.fan.cones()) text << "  cone " << index_list(c) << "\n";
            text << "unstable supports:";
            for (const auto& s : ul.strata) text << " " << index_list(s);
            text << "\nminimum codimension of the unstable locus: " << ul.min_codimension << "\n";
        } else if (opts.command == "factor") {
            if (!opts.from || !opts.to) throw ParseError("factor needs --from and --to");
            std::size_t from = endpoint(cc, *opts.from, "--from");
            std::size_t to = endpoint(cc, *opts.to, "--to");
            auto crossings = factor_contraction(cc, from, to);
            std::size_t separating = separating_hyperplanes(cc, from, to);
            res["from"] = from;
            res["to"] = to;
            Json xs = Json::array();
            for (const auto& x : crossings) xs.push_back(crossing_json(x));
            res["crossings"] = std::move(xs);
            res["separating_hyperplanes"] = separating;
            std::vector<std::size_t> visited{from};
            for (const auto& x : crossings) visited.push_back(x.to.value_or(from));
            std::sort(visited.begin(), visited.end());
            rep.passed = crossings.size() <= separating &&
                         std::adjacent_find(visited.begin(), visited.end()) == visited.end() &&
                         (crossings.empty() || crossings.back().to == to);
            text << "chamber " << from << " -> chamber " << to << ": " << crossings.size()
                 << " crossing(s), " << separating << " separating hyperplane(s)\n";
            for (const auto& x : crossings) text << crossing_text(x) << "\n";
        } else if (opts.command == "check-cover") {
            CoverReport cover = verify_disjoint_cover(cc, opts.samples);
            res["samples"] = cover.samples;
            res["interior_hits"] = cover.interior_hits;
            res["face_hits"] = cover.face_hits;
            res["violations"] = cover.violations;
            rep.passed = cover.passed();
            text << cover.samples << " samples: " << cover.interior_hits << " in one chamber interior, "
                 << cover.face_hits << " on faces, " << cover.violations.size() << " violations\n";
            for (const auto& v : cover.violations) text << "  " << v << "\n";
        } else {
            throw ParseError("unknown command '" + opts.command + "'");
        }
        body["result"] = std::move(res);
    }

    body["warnings"] = doc ? doc->warnings : std::vector<std::string>{};
    body["passed"] = rep.passed;
    if (doc)
        for (const auto& wmsg : doc->warnings) text << "warning: " << wmsg << "\n";
    text << (rep.passed ? "passed" : "FAILED") << "\n";
    rep.text = text.str();
    return rep;
}

std::string render_json(const Report& r) { return r.body.dump(2) + "\n"; }

std::string render_text(const Report& r) { return r.text; }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{
        "Exact GIT / Mori chamber decompositions for torus actions on affine space.\n"
        "Input documents hold either a fan {\"rays\": [...], \"cones\": [...]} or weights\n"
        "{\"columns\": [...]}: each listed column is one character chi_i in Z^rho\n"
        "(\"rows\" gives the rho x r matrix row by row instead).",
        "mdsgit"};
    app.add_option("command", opts.command, "One of: " + join(kCommands, ", "))->required();
    app.add_option("input", opts.input, "Input JSON document (not needed for m0n)");
    app.add_option("--chi", opts.chi, "Linearization for quotient, e.g. \"2,-1\"");
    app.add_option("--from", opts.from, "Start of factor: a vector or id:N");
    app.add_option("--to", opts.to, "End of factor: a vector or id:N");
    app.add_option("--n", opts.n, "Number of points for m0n");
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-n", opts.max_n, "Largest n accepted by m0n")->capture_default_str();
    app.add_option("--samples", opts.samples, "Sample count for check-cover")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "mdsgit: " << e.what() << "\n" << "run 'mdsgit --help' for usage\n";
        return kUsage;
    }
    if (std::find(kCommands.begin(), kCommands.end(), opts.command) == kCommands.end()) {
        err << "mdsgit: unknown command '" << opts.command << "'\n";
        return kUsage;
    }

    try {
        std::optional<InputDocument> doc;
        if (!opts.input.empty()) doc = load_input(opts.input);
        Report rep = dispatch(opts, doc ? &*doc : nullptr);
        out << (opts.format == "json" ? render_json(rep) : render_text(rep));
        return rep.passed ? kOk : kVerificationFailed;
    } catch (const ParseError& e) {
        err << "mdsgit: " << e.what() << "\n";
        return kUsage;
    } catch (const DegenerateLinearization& e) {
        err << "mdsgit: " << e.what() << "\n";
        return kDegenerate;
    } catch (const ValidationError& e) {
        err << "mdsgit: validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const EmptySemistableLocus& e) {
        err << "mdsgit: validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const DimensionMismatch& e) {
        err << "mdsgit: validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        err << "mdsgit: internal error: " << e.what() << "\n";
        return kVerificationFailed;
    }
}

}  // namespace mdsgit::cli
