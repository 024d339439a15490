#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cactoidlab/curves.hpp"
#include "cactoidlab/io.hpp"
#include "cactoidlab/mesh_builders.hpp"

// Exit codes: 0 success, 1 unexpected error, 2 parse/usage error,
// 3 size cap exceeded, 4 validation error, 5 no admissible boundary.

namespace {

using namespace cactoidlab;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

int thread_cap() {
    const char* env = std::getenv("CACTOID_LAB_THREADS");
    if (!env) return 0;  // no cap requested
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || v < 1) {
        throw ParseError("CACTOID_LAB_THREADS must be a positive integer");
    }
    return static_cast<int>(v);
}

const char* orientation_name(OrientationConstraint o) {
    switch (o) {
        case OrientationConstraint::orientable: return "orientable";
        case OrientationConstraint::non_orientable: return "non-orientable";
        case OrientationConstraint::unconstrained: return "unconstrained";
    }
    return "";
}

const char* cut_kind_name(CutKind k) {
    switch (k) {
        case CutKind::wedge_split: return "wedge_split";
        case CutKind::two_point_identified: return "two_point_identified";
        case CutKind::plain_surface: return "plain_surface";
    }
    return "";
}

std::string invariants_line(const SurfaceInvariants& inv) {
    std::ostringstream out;
    out << "connectivity " << inv.connectivity << ", boundary circles " << inv.boundary_count
        << ", euler characteristic " << inv.euler_char << ", "
        << (inv.orientable ? "orientable" : "non-orientable");
    return out.str();
}

int cmd_ghdist(const std::string& file_a, const std::string& file_b, bool bounds, int cap,
               const std::string& json_out) {
    auto x = metric_from_json(slurp(file_a));
    auto y = metric_from_json(slurp(file_b));
    std::ostringstream payload;
    if (!bounds) {
        Rational d = gh_exact(x, y, cap);
        std::cout << "gh distance (exact, branch and bound): " << scalar_to_string(d) << "\n";
        payload << "{\n  \"format_version\": 1,\n  \"method\": \"exact\",\n  \"value\": \""
                << scalar_to_string(d) << "\"\n}\n";
    } else {
        Rational lo = gh_lower(x, y);
        auto nx = net_sample(x, cap);
        auto ny = net_sample(y, cap);
        Rational core = gh_exact(x.restrict(nx.indices), y.restrict(ny.indices), cap);
        Rational hi = core + nx.net_radius + ny.net_radius;
        std::cout << "gh distance in [" << scalar_to_string(lo) << ", " << scalar_to_string(hi)
                  << "] (diameter/radius lower bound; net-of-" << cap
                  << " upper bound incl. net radii)\n";
        payload << "{\n  \"format_version\": 1,\n  \"method\": \"bounds\",\n  \"lower\": \""
                << scalar_to_string(lo) << "\",\n  \"upper\": \"" << scalar_to_string(hi)
                << "\"\n}\n";
    }
    if (!json_out.empty()) spill(json_out, payload.str());
    return 0;
}

int cmd_surface_info(const std::string& file, const std::string& json_out) {
    auto s = surface_from_text(slurp(file));
    auto inv = invariants(s);
    auto diam = mesh_diameter(s);
    std::cout << file << ": " << s.vertices.size() << " vertices, " << s.edges.size()
              << " edges, " << s.faces.size() << " faces\n"
              << invariants_line(inv) << "\n"
              << "edge-graph diameter " << scalar_to_string(diam) << "\n";
    if (!json_out.empty()) {
        std::ostringstream payload;
        payload << "{\n  \"format_version\": 1,\n  \"vertices\": " << s.vertices.size()
                << ",\n  \"edges\": " << s.edges.size() << ",\n  \"faces\": " << s.faces.size()
                << ",\n  \"connectivity\": " << inv.connectivity
                << ",\n  \"boundary_count\": " << inv.boundary_count
                << ",\n  \"euler_char\": " << inv.euler_char << ",\n  \"orientable\": "
                << (inv.orientable ? "true" : "false") << ",\n  \"diameter\": \""
                << scalar_to_string(diam) << "\"\n}\n";
        spill(json_out, payload.str());
    }
    return 0;
}

std::string outcomes_json(const std::vector<CutOutcome>& outs) {
    std::ostringstream payload;
    payload << "{\n  \"format_version\": 1,\n  \"outcomes\": [";
    for (size_t i = 0; i < outs.size(); ++i) {
        const auto& o = outs[i];
        payload << (i ? ",\n    " : "\n    ") << "{\"kind\": \"" << cut_kind_name(o.kind)
                << "\", \"parts\": [";
        for (size_t p = 0; p < o.parts.size(); ++p) {
            payload << (p ? ", " : "") << "{\"connectivity\": " << o.parts[p].connectivity
                    << ", \"orientation\": \"" << orientation_name(o.parts[p].orientation)
                    << "\"}";
        }
        payload << "], \"boundary_identification\": "
                << (o.boundary_identification ? "true" : "false") << ", \"note\": \""
                << o.orientability_note << "\"}";
    }
    payload << "\n  ]\n}\n";
    return payload.str();
}

int cmd_cut(bool jordan, bool separating, bool nonseparating, int c, int b, bool non_orientable,
            const std::string& json_out) {
    if (jordan + separating + nonseparating != 1) {
        throw ParseError("pick exactly one of --jordan, --separating, --nonseparating");
    }
    SurfaceInvariants s;
    s.connectivity = c;
    s.boundary_count = b >= 0 ? b : (jordan ? 0 : 1);
    s.euler_char = 2 - c;
    s.reduced_connectivity = c - s.boundary_count;
    s.orientable = !non_orientable;

    std::vector<CutOutcome> outs;
    if (jordan) {
        outs = cut_jordan(s);
    } else if (separating) {
        outs = cut_separating_arc(s);
    } else {
        outs = {cut_nonseparating_arc(s)};
    }
    std::cout << "source: " << invariants_line(s) << "\n";
    std::cout << "kind                  parts        boundary_identification  note\n";
    for (const auto& o : outs) {
        std::ostringstream parts;
        for (size_t p = 0; p < o.parts.size(); ++p) {
            parts << (p ? "+" : "") << "c" << o.parts[p].connectivity << "("
                  << orientation_name(o.parts[p].orientation)[0] << ")";
        }
        std::cout << cut_kind_name(o.kind);
        for (size_t k = std::string(cut_kind_name(o.kind)).size(); k < 22; ++k) std::cout << ' ';
        std::string ps = parts.str();
        std::cout << ps;
        for (size_t k = ps.size(); k < 13; ++k) std::cout << ' ';
        std::cout << (o.boundary_identification ? "yes" : "no ") << "                      "
                  << o.orientability_note << "\n";
    }
    if (!json_out.empty()) spill(json_out, outcomes_json(outs));
    return 0;
}

int cmd_cactoid_validate(const std::string& file) {
    auto [g, h] = cactoid_from_json(slurp(file));
    (void)h;
    auto report = validate(g);
    if (!report.ok()) {
        for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
        return 4;
    }
    std::cout << "valid: " << g.pieces.size() << " pieces, " << g.trees.size() << " trees, "
              << g.attachments.size() << " incidences, " << g.grouping.size()
              << " boundary continua\n"
              << "connectivity number " << connectivity_number(g) << "\n";
    return 0;
}

int cmd_cactoid_preboundary(const std::string& file, const std::string& out) {
    auto [g, h] = cactoid_from_json(slurp(file));
    g.grouping = minimal_preboundary(g);
    std::cout << "minimal boundary: " << g.grouping.size() << " continua\n";
    for (const auto& c : g.grouping) {
        std::cout << "  " << c.name << ": " << c.circles.size() << " circles, "
                  << c.wedges.size() << " wedge points, " << c.trees.size() << " trees\n";
    }
    auto text = cactoid_to_json(g, h);
    if (!out.empty()) spill(out, text);
    return 0;
}

int cmd_certify(const std::string& file, int c, int k, int k0) {
    auto [g, h] = cactoid_from_json(slurp(file));
    if (k >= 0 || k0 >= 0) {
        h.steps.clear();
        for (int i = 0; i < std::max(k, 0); ++i) {
            h.steps.push_back({GluingStep::Kind::two_point, "", i < std::max(k0, 0)});
        }
    }
    auto cert = certify(c, g, h);
    std::cout << "c0 = " << cert.c0 << ", k = " << cert.k << ", k0 = " << cert.k0
              << ", target c = " << cert.c_target << "\n"
              << "c0 <= c + k0 - 2k: " << (cert.verdict ? "true" : "false") << "\n";
    return 0;
}

int cmd_approximate(const std::string& input, int target_c, const std::string& schedule_arg,
                    const std::string& orientability, const std::string& out,
                    const std::string& csv, int refine, int sample) {
    auto [g, h] = cactoid_from_json(slurp(input));
    std::vector<int> schedule;
    std::stringstream ss(schedule_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int n = 0;
        try {
            n = std::stoi(tok);
        } catch (...) {
            throw ParseError("bad schedule entry '" + tok + "'");
        }
        if (n < 1) throw ParseError("schedule entries must be >= 1");
        schedule.push_back(n);
    }
    if (schedule.empty()) throw ParseError("empty schedule");
    PipelineConfig cfg;
    cfg.refine = refine;
    cfg.sample_size = sample;
    if (orientability == "orientable") {
        cfg.target = PipelineConfig::Orientability::orientable;
    } else if (orientability == "non-orientable") {
        cfg.target = PipelineConfig::Orientability::non_orientable;
    } else if (orientability == "free") {
        cfg.target = PipelineConfig::Orientability::free_choice;
    } else {
        throw ParseError("orientability must be orientable, non-orientable or free");
    }
    auto cert = run_pipeline(g, h, schedule, target_c, cfg);
    std::cout << "certificate: c0 = " << cert.main.c0 << ", k = " << cert.main.k
              << ", k0 = " << cert.main.k0 << ", verdict "
              << (cert.main.verdict ? "true" : "false") << "\n";
    for (const auto& r : cert.records) {
        std::cout << "  n = " << r.n << ": gh upper bound " << scalar_to_string(r.gh_upper_bound)
                  << ", built " << invariants_line(r.inv) << "\n";
    }
    if (!out.empty()) spill(out, certificate_to_json(cert));
    if (!csv.empty()) spill(csv, certificate_csv(cert));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cactoid-lab: surfaces, cactoids and certified approximations"};
    app.require_subcommand(1);

    std::string file_a, file_b, json_out, out_file, csv_file;
    bool bounds = false;
    int cap = 8;
    auto* ghdist = app.add_subcommand("ghdist", "Gromov-Hausdorff distance of two metric files");
    ghdist->add_option("fileA", file_a)->required();
    ghdist->add_option("fileB", file_b)->required();
    ghdist->add_flag("--bounds", bounds, "interval mode for spaces above the exact-search cap");
    ghdist->add_option("--cap", cap, "exact-search size cap (default 8)");
    ghdist->add_option("--json", json_out, "write machine payload here");

    auto* surface = app.add_subcommand("surface", "surface file queries");
    std::string surface_file, surface_json;
    auto* surface_info = surface->add_subcommand("info", "invariants of a surface file");
    surface_info->add_option("file", surface_file)->required();
    surface_info->add_option("--json", surface_json, "write machine payload here");

    auto* cut = app.add_subcommand("cut", "cut-and-paste outcome table");
    bool jordan = false, separating = false, nonseparating = false, non_orientable = false,
         orientable_flag = false;
    int cut_c = 0, cut_b = -1;
    cut->add_flag("--jordan", jordan, "cut along a Jordan curve");
    cut->add_flag("--separating", separating, "cut along a separating arc");
    cut->add_flag("--nonseparating", nonseparating, "cut along a non-separating arc");
    cut->add_option("--c", cut_c, "source connectivity number")->required();
    cut->add_option("--b", cut_b, "source boundary circles (default 0 jordan, 1 arcs)");
    cut->add_flag("--orientable", orientable_flag, "orientable source (default)");
    cut->add_flag("--non-orientable", non_orientable, "non-orientable source");
    std::string cut_json;
    cut->add_option("--json", cut_json, "write machine payload here");

    auto* cactoid = app.add_subcommand("cactoid", "cactoid file operations");
    std::string cactoid_file, cactoid_out;
    auto* cvalidate = cactoid->add_subcommand("validate", "check all structural invariants");
    cvalidate->add_option("file", cactoid_file)->required();
    auto* cpre = cactoid->add_subcommand("preboundary", "recompute the minimal boundary");
    cpre->add_option("file", cactoid_file)->required();
    cpre->add_option("--out", cactoid_out, "write the regrouped cactoid here");

    auto* certify_cmd = app.add_subcommand("certify", "main-inequality certificate");
    std::string certify_file;
    int certify_c = 0, certify_k = -1, certify_k0 = -1;
    certify_cmd->add_option("--cactoid", certify_file)->required();
    certify_cmd->add_option("--c", certify_c, "target connectivity")->required();
    certify_cmd->add_option("--k", certify_k, "override: identification count");
    certify_cmd->add_option("--k0", certify_k0, "override: boundary identification count");

    auto* approx = app.add_subcommand("approximate", "build the approximation schedule");
    std::string ap_input, ap_schedule = "2,4,8,16", ap_orient = "free";
    int ap_c = 0, ap_refine = 0, ap_sample = 0;
    approx->add_option("--input", ap_input, "cactoid json file")->required();
    approx->add_option("--target-c", ap_c, "target connectivity")->required();
    approx->add_option("--schedule", ap_schedule, "comma-separated scale indices");
    approx->add_option("--orientability", ap_orient, "orientable | non-orientable | free");
    approx->add_option("--out", out_file, "certificate json path");
    approx->add_option("--csv", csv_file, "convergence table path");
    approx->add_option("--refine", ap_refine, "mesh refinement level for gh sampling");
    approx->add_option("--sample", ap_sample, "net size per side (0: full correspondence)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        thread_cap();  // validated here; all current code paths are sequential
        if (*ghdist) return cmd_ghdist(file_a, file_b, bounds, cap, json_out);
        if (*surface_info) return cmd_surface_info(surface_file, surface_json);
        if (*cut) return cmd_cut(jordan, separating, nonseparating, cut_c, cut_b,
                                 non_orientable, cut_json);
        if (*cvalidate) return cmd_cactoid_validate(cactoid_file);
        if (*cpre) return cmd_cactoid_preboundary(cactoid_file, cactoid_out);
        if (*certify_cmd) return cmd_certify(certify_file, certify_c, certify_k, certify_k0);
        if (*approx) return cmd_approximate(ap_input, ap_c, ap_schedule, ap_orient, out_file,
                                            csv_file, ap_refine, ap_sample);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cactoidlab::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n"
                  << "hint: rerun with --bounds for an interval\n";
        return 3;
    } catch (const cactoidlab::NoPreBoundary& e) {
        std::cerr << "no admissible boundary: " << e.what() << "\n";
        return 5;
    } catch (const cactoidlab::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
