#include "cactoidlab/io.hpp"

#include <json.hpp>

#include <sstream>

namespace cactoidlab {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

void check_version(const Json& j, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": top level must be an object");
    auto it = j.find("format_version");
    if (it == j.end() || !it->is_number_integer()) {
        throw ParseError(std::string(what) + ": missing format_version");
    }
    if (it->get<int>() != kFormatVersion) {
        throw ParseError(std::string(what) + ": unsupported format_version " +
                         it->dump());
    }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

Rational scalar_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_string()) throw ParseError(where + ": '" + key + "' must be a scalar string");
    try {
        return parse_scalar(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": '" + key + "': " + e.what());
    }
}

Json invariants_to_json(const SurfaceInvariants& c) {
    Json j;
    j["orientable"] = c.orientable;
    j["euler_char"] = c.euler_char;
    j["boundary_count"] = c.boundary_count;
    j["connectivity"] = c.connectivity;
    j["reduced_connectivity"] = c.reduced_connectivity;
    return j;
}

SurfaceInvariants invariants_from_json(const Json& j, const std::string& where) {
    SurfaceInvariants c;
    c.orientable = field(j, "orientable", where).get<bool>();
    c.euler_char = field(j, "euler_char", where).get<int>();
    c.boundary_count = field(j, "boundary_count", where).get<int>();
    c.connectivity = field(j, "connectivity", where).get<int>();
    c.reduced_connectivity = field(j, "reduced_connectivity", where).get<int>();
    return c;
}

Json surface_to_json(const TriSurface& s) {
    Json j;
    j["vertices"] = s.vertices;
    Json edges = Json::array();
    for (const auto& e : s.edges) {
        edges.push_back(Json::array({e.u, e.v, scalar_to_string(e.length)}));
    }
    j["edges"] = std::move(edges);
    Json faces = Json::array();
    for (const auto& f : s.faces) faces.push_back(Json::array({f.a, f.b, f.c}));
    j["faces"] = std::move(faces);
    return j;
}

TriSurface surface_from_json(const Json& j, const std::string& where) {
    std::vector<std::string> vertices;
    for (const auto& v : field(j, "vertices", where)) vertices.push_back(v.get<std::string>());
    std::vector<TriSurface::Edge> edges;
    for (const auto& e : field(j, "edges", where)) {
        if (!e.is_array() || e.size() != 3) throw ParseError(where + ": edge must be [u,v,length]");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), parse_scalar(e[2].get<std::string>())});
    }
    std::vector<TriSurface::Face> faces;
    for (const auto& f : field(j, "faces", where)) {
        if (!f.is_array() || f.size() != 3) throw ParseError(where + ": face must be [a,b,c]");
        faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    return make_surface(std::move(vertices), std::move(edges), std::move(faces));
}

Json end_to_json(const AttachmentEnd& e) {
    Json j;
    j["on"] = e.is_tree ? "tree" : "piece";
    j["owner"] = e.owner;
    j["point"] = e.point;
    j["circle"] = e.circle;
    return j;
}

AttachmentEnd end_from_json(const Json& j, const std::string& where) {
    AttachmentEnd e;
    std::string on = field(j, "on", where).get<std::string>();
    if (on != "tree" && on != "piece") throw ParseError(where + ": 'on' must be piece or tree");
    e.is_tree = on == "tree";
    e.owner = field(j, "owner", where).get<int>();
    e.point = field(j, "point", where).get<std::string>();
    e.circle = field(j, "circle", where).get<int>();
    return e;
}

const char* step_kind_name(GluingStep::Kind k) {
    switch (k) {
        case GluingStep::Kind::wedge: return "wedge";
        case GluingStep::Kind::two_point: return "two_point";
        case GluingStep::Kind::arc_glue: return "arc_glue";
    }
    return "";
}

GluingStep::Kind step_kind_from(const std::string& name, const std::string& where) {
    if (name == "wedge") return GluingStep::Kind::wedge;
    if (name == "two_point") return GluingStep::Kind::two_point;
    if (name == "arc_glue") return GluingStep::Kind::arc_glue;
    throw ParseError(where + ": unknown step kind '" + name + "'");
}

}  // namespace

std::string metric_to_json(const FiniteMetricSpace& x) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["labels"] = x.labels();
    Json dist = Json::array();
    for (int i = 0; i < x.size(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < x.size(); ++k) row.push_back(scalar_to_string(x.dist(i, k)));
        dist.push_back(std::move(row));
    }
    j["dist"] = std::move(dist);
    return j.dump(2) + "\n";
}

FiniteMetricSpace metric_from_json(const std::string& text) {
    Json j = parse_json(text);
    check_version(j, "metric");
    std::vector<std::string> labels;
    for (const auto& l : field(j, "labels", "metric")) labels.push_back(l.get<std::string>());
    const Json& dj = field(j, "dist", "metric");
    if (!dj.is_array() || dj.size() != labels.size()) {
        throw ParseError("metric: dist must be a " + std::to_string(labels.size()) +
                         "-row matrix");
    }
    std::vector<std::vector<Rational>> dist;
    for (size_t i = 0; i < dj.size(); ++i) {
        const Json& row = dj[i];
        if (!row.is_array() || row.size() != labels.size()) {
            throw ParseError("metric: dist row " + std::to_string(i) + " has wrong length");
        }
        std::vector<Rational> r;
        for (size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_string()) {
                throw ParseError("metric: dist[" + std::to_string(i) + "][" +
                                 std::to_string(k) + "] must be a scalar string");
            }
            r.push_back(parse_scalar(row[k].get<std::string>()));
        }
        dist.push_back(std::move(r));
    }
    if (auto why = FiniteMetricSpace::check_axioms(labels, dist)) {
        throw ParseError("metric: " + *why);
    }
    return FiniteMetricSpace::create_unchecked(std::move(labels), std::move(dist));
}

std::string surface_to_text(const TriSurface& s) {
    std::ostringstream out;
    out << "loff " << kFormatVersion << "\n";
    out << s.vertices.size() << " " << s.edges.size() << " " << s.faces.size() << "\n";
    for (const auto& v : s.vertices) out << "v " << v << "\n";
    for (const auto& e : s.edges) {
        out << "e " << e.u << " " << e.v << " " << scalar_to_string(e.length) << "\n";
    }
    for (const auto& f : s.faces) out << "f " << f.a << " " << f.b << " " << f.c << "\n";
    return out.str();
}

TriSurface surface_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("surface line " + std::to_string(lineno) + ": " + why);
    };
    auto next = [&]() -> std::istringstream {
        while (std::getline(in, line)) {
            ++lineno;
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                return std::istringstream(line);
            }
        }
        throw fail("unexpected end of file");
    };

    auto header = next();
    std::string magic;
    int version = -1;
    header >> magic >> version;
    if (magic != "loff") throw fail("expected 'loff' header");
    if (version != kFormatVersion) throw fail("unsupported version");
    auto counts = next();
    size_t nv = 0, ne = 0, nf = 0;
    if (!(counts >> nv >> ne >> nf)) throw fail("expected '<nv> <ne> <nf>'");

    std::vector<std::string> vertices;
    for (size_t i = 0; i < nv; ++i) {
        auto row = next();
        std::string tag, label;
        if (!(row >> tag >> label) || tag != "v") throw fail("expected 'v <label>'");
        vertices.push_back(label);
    }
    std::vector<TriSurface::Edge> edges;
    for (size_t i = 0; i < ne; ++i) {
        auto row = next();
        std::string tag, len;
        int u = 0, v = 0;
        if (!(row >> tag >> u >> v >> len) || tag != "e") throw fail("expected 'e <u> <v> <length>'");
        try {
            edges.push_back({u, v, parse_scalar(len)});
        } catch (const ParseError& e) {
            throw fail(e.what());
        }
    }
    std::vector<TriSurface::Face> faces;
    for (size_t i = 0; i < nf; ++i) {
        auto row = next();
        std::string tag;
        int a = 0, b = 0, c = 0;
        if (!(row >> tag >> a >> b >> c) || tag != "f") throw fail("expected 'f <a> <b> <c>'");
        faces.push_back({a, b, c});
    }
    try {
        return make_surface(std::move(vertices), std::move(edges), std::move(faces));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("surface: ") + e.what());
    }
}

std::string cactoid_to_json(const CactoidGraph& g, const GluingHistory& h) {
    Json j;
    j["format_version"] = kFormatVersion;
    Json pieces = Json::array();
    for (const auto& p : g.pieces) {
        Json pj;
        pj["name"] = p.name;
        pj["class"] = invariants_to_json(p.cls);
        pj["diameter"] = scalar_to_string(p.diameter);
        pj["shrinking_family"] = p.shrinking_family;
        if (p.realization) pj["realization"] = surface_to_json(*p.realization);
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    Json trees = Json::array();
    for (const auto& t : g.trees) {
        Json tj;
        tj["name"] = t.name;
        tj["nodes"] = t.nodes;
        Json edges = Json::array();
        for (const auto& e : t.edges) {
            edges.push_back(Json::array({e.u, e.v, scalar_to_string(e.length)}));
        }
        tj["edges"] = std::move(edges);
        trees.push_back(std::move(tj));
    }
    j["trees"] = std::move(trees);
    Json incidences = Json::array();
    for (const auto& a : g.attachments) {
        Json aj;
        aj["name"] = a.name;
        aj["a"] = end_to_json(a.a);
        aj["b"] = end_to_json(a.b);
        incidences.push_back(std::move(aj));
    }
    j["incidences"] = std::move(incidences);
    Json grouping = Json::array();
    for (const auto& c : g.grouping) {
        Json cj;
        cj["name"] = c.name;
        Json circles = Json::array();
        for (auto [p, ci] : c.circles) circles.push_back(Json::array({p, ci}));
        cj["circles"] = std::move(circles);
        cj["wedges"] = c.wedges;
        cj["trees"] = c.trees;
        grouping.push_back(std::move(cj));
    }
    j["grouping"] = std::move(grouping);
    Json steps = Json::array();
    for (const auto& s : h.steps) {
        Json sj;
        sj["kind"] = step_kind_name(s.kind);
        sj["arguments"] = s.arguments;
        sj["boundary_flag"] = s.boundary_flag;
        steps.push_back(std::move(sj));
    }
    j["history"] = Json{{"steps", std::move(steps)}};
    return j.dump(2) + "\n";
}

std::pair<CactoidGraph, GluingHistory> cactoid_from_json(const std::string& text) {
    Json j = parse_json(text);
    check_version(j, "cactoid");
    CactoidGraph g;
    size_t i = 0;
    for (const auto& pj : field(j, "pieces", "cactoid")) {
        std::string where = "cactoid piece " + std::to_string(i++);
        CactoidPiece p;
        p.name = field(pj, "name", where).get<std::string>();
        p.cls = invariants_from_json(field(pj, "class", where), where);
        p.diameter = scalar_field(pj, "diameter", where);
        p.shrinking_family = field(pj, "shrinking_family", where).get<bool>();
        if (pj.contains("realization")) {
            p.realization = surface_from_json(pj["realization"], where);
        }
        g.pieces.push_back(std::move(p));
    }
    i = 0;
    for (const auto& tj : field(j, "trees", "cactoid")) {
        std::string where = "cactoid tree " + std::to_string(i++);
        MetricTree t;
        t.name = field(tj, "name", where).get<std::string>();
        for (const auto& n : field(tj, "nodes", where)) t.nodes.push_back(n.get<std::string>());
        for (const auto& e : field(tj, "edges", where)) {
            if (!e.is_array() || e.size() != 3) {
                throw ParseError(where + ": edge must be [u,v,length]");
            }
            t.edges.push_back(
                {e[0].get<int>(), e[1].get<int>(), parse_scalar(e[2].get<std::string>())});
        }
        g.trees.push_back(std::move(t));
    }
    i = 0;
    for (const auto& aj : field(j, "incidences", "cactoid")) {
        std::string where = "cactoid incidence " + std::to_string(i++);
        Attachment a;
        a.name = field(aj, "name", where).get<std::string>();
        a.a = end_from_json(field(aj, "a", where), where);
        a.b = end_from_json(field(aj, "b", where), where);
        g.attachments.push_back(std::move(a));
    }
    i = 0;
    for (const auto& cj : field(j, "grouping", "cactoid")) {
        std::string where = "cactoid continuum " + std::to_string(i++);
        Continuum c;
        c.name = field(cj, "name", where).get<std::string>();
        for (const auto& pr : field(cj, "circles", where)) {
            if (!pr.is_array() || pr.size() != 2) {
                throw ParseError(where + ": circle must be [piece,circle]");
            }
            c.circles.emplace_back(pr[0].get<int>(), pr[1].get<int>());
        }
        for (const auto& w : field(cj, "wedges", where)) c.wedges.push_back(w.get<std::string>());
        for (const auto& t : field(cj, "trees", where)) c.trees.push_back(t.get<std::string>());
        g.grouping.push_back(std::move(c));
    }
    GluingHistory h;
    const Json& hist = field(j, "history", "cactoid");
    i = 0;
    for (const auto& sj : field(hist, "steps", "cactoid history")) {
        std::string where = "history step " + std::to_string(i++);
        GluingStep s;
        s.kind = step_kind_from(field(sj, "kind", where).get<std::string>(), where);
        s.arguments = field(sj, "arguments", where).get<std::string>();
        s.boundary_flag = field(sj, "boundary_flag", where).get<bool>();
        h.steps.push_back(std::move(s));
    }
    return {std::move(g), std::move(h)};
}

std::string certificate_to_json(const ConvergenceCertificate& cert) {
    Json j;
    j["format_version"] = kFormatVersion;
    Json main;
    main["c_target"] = cert.main.c_target;
    main["c0"] = cert.main.c0;
    main["k"] = cert.main.k;
    main["k0"] = cert.main.k0;
    main["verdict"] = cert.main.verdict;
    j["main"] = std::move(main);
    Json records = Json::array();
    for (const auto& r : cert.records) {
        Json rj;
        rj["n"] = r.n;
        rj["gh_upper_bound"] = scalar_to_string(r.gh_upper_bound);
        rj["net_radius_built"] = scalar_to_string(r.net_radius_built);
        rj["net_radius_target"] = scalar_to_string(r.net_radius_target);
        rj["invariants"] = invariants_to_json(r.inv);
        records.push_back(std::move(rj));
    }
    j["records"] = std::move(records);
    return j.dump(2) + "\n";
}

ConvergenceCertificate certificate_from_json(const std::string& text) {
    Json j = parse_json(text);
    check_version(j, "certificate");
    ConvergenceCertificate cert;
    const Json& main = field(j, "main", "certificate");
    cert.main.c_target = field(main, "c_target", "certificate main").get<int>();
    cert.main.c0 = field(main, "c0", "certificate main").get<int>();
    cert.main.k = field(main, "k", "certificate main").get<int>();
    cert.main.k0 = field(main, "k0", "certificate main").get<int>();
    cert.main.verdict = field(main, "verdict", "certificate main").get<bool>();
    size_t i = 0;
    for (const auto& rj : field(j, "records", "certificate")) {
        std::string where = "certificate record " + std::to_string(i++);
        CertificateRecord r;
        r.n = field(rj, "n", where).get<int>();
        r.gh_upper_bound = scalar_field(rj, "gh_upper_bound", where);
        r.net_radius_built = scalar_field(rj, "net_radius_built", where);
        r.net_radius_target = scalar_field(rj, "net_radius_target", where);
        r.inv = invariants_from_json(field(rj, "invariants", where), where);
        cert.records.push_back(std::move(r));
    }
    return cert;
}

}  // namespace cactoidlab
