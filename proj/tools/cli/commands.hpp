#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclic/cyclic.hpp"
#include "stable_json.hpp"

namespace cyclic::cli {

using nlohmann::json;

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,       // usage or parse error
    exit_infeasible = 2,  // no configuration with the requested data
    exit_fails = 3,       // identity verification failed
};

class UsageError : public Error {
public:
    using Error::Error;
};

inline std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Comma-separated reals; scientific notation allowed.
inline std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        double v = 0.0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
            throw UsageError("cannot parse '" + std::string(token) + "' as a real number");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

inline Geometry require_geometry(const std::string& text) {
    if (text.empty()) throw UsageError("--geometry is required (euclidean, hyperbolic, spherical)");
    const auto g = parse_geometry(text);
    if (!g) throw UsageError("unknown geometry '" + text + "'");
    return *g;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline json polygon_document(const CyclicPolygon& p) {
    json doc;
    doc["geometry"] = std::string(name(p.geometry()));
    doc["radius"] = p.radius();
    doc["angles"] = p.angles();
    return doc;
}

inline json point_json(const ModelPoint& p) {
    if (p.geometry() == Geometry::Spherical) return json::array({p.x(), p.y(), p.z()});
    return json::array({p.x(), p.y()});
}

/// Geometry and sides from either --sides or a PolygonDocument file. A
/// document without "sides" contributes the sides of its (radius, angles)
/// polygon.
struct SidesInput {
    Geometry geometry = Geometry::Euclidean;
    std::vector<double> sides;
};

inline SidesInput load_sides(const std::string& geometry_text, const std::string& sides_text,
                             const std::string& input_path) {
    SidesInput in;
    if (!input_path.empty()) {
        json doc;
        try {
            doc = json::parse(read_file(input_path));
            const auto g = parse_geometry(doc.at("geometry").get<std::string>());
            if (!g) throw UsageError("unknown geometry in '" + input_path + "'");
            in.geometry = *g;
            if (doc.contains("sides")) {
                in.sides = doc.at("sides").get<std::vector<double>>();
            } else {
                const auto angles = doc.at("angles").get<std::vector<double>>();
                const auto p = CyclicPolygon::from_angles(in.geometry, doc.at("radius").get<double>(), angles);
                in.sides = side_lengths(p);
            }
        } catch (const json::exception& e) {
            throw UsageError("malformed polygon document: " + std::string(e.what()));
        } catch (const UsageError&) {
            throw;
        } catch (const Error& e) {
            throw UsageError("invalid polygon document: " + std::string(e.what()));
        }
        if (!geometry_text.empty() && require_geometry(geometry_text) != in.geometry) {
            throw UsageError("--geometry disagrees with the polygon document");
        }
    } else {
        in.geometry = require_geometry(geometry_text);
        if (sides_text.empty()) throw UsageError("--sides or --input is required");
        in.sides = parse_real_list(sides_text);
    }
    if (in.sides.size() < 3) throw UsageError("at least 3 sides are required");
    for (double l : in.sides) {
        if (!(l > 0.0) || !std::isfinite(l)) throw UsageError("side lengths must be finite and > 0");
    }
    return in;
}

struct Settings {
    bool json_output = false;
    std::optional<double> tol;
    std::uint64_t seed = 42;
};

inline void emit(std::ostream& out, const json& report) { out << stable_json(report); }

inline int cmd_solve(const Settings& s, const SidesInput& in, std::ostream& out) {
    const double tol = s.tol.value_or(default_solver_tolerance);
    const auto r = circumradius_from_sides(in.geometry, in.sides, tol);
    json report;
    report["command"] = "solve";
    report["inputs"] = {{"geometry", std::string(name(in.geometry))}, {"sides", in.sides}};
    report["outputs"] = {{"radius", r.radius},
                         {"rho_hat", r.rho},
                         {"center_inside", r.center_inside},
                         {"iterations", r.iterations},
                         {"residual", r.residual},
                         {"feasible", r.feasible}};
    report["tolerance"] = tol;
    report["verdict"] = r.feasible ? "solved" : "unconverged";
    if (s.json_output) {
        emit(out, report);
    } else {
        out << "geometry     " << name(in.geometry) << "\n"
            << "radius       " << format_real(r.radius) << "\n"
            << "rho_hat      " << format_real(r.rho) << "\n"
            << "branch       " << (r.center_inside ? "center-inside" : "center-outside") << "\n"
            << "iterations   " << r.iterations << "\n"
            << "residual     " << format_real(r.residual) << "\n";
    }
    return exit_ok;
}

inline int cmd_diagonals(const Settings& s, const SidesInput& in, std::ostream& out) {
    const double tol = s.tol.value_or(default_solver_tolerance);
    const auto polygon = polygon_from_sides(in.geometry, in.sides, tol);
    const std::size_t n = polygon.size();
    json diagonals = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            diagonals.push_back({{"i", i}, {"j", j}, {"length", chord_length(polygon, i, j)}});
        }
    }
    json report;
    report["command"] = "diagonals";
    report["inputs"] = {{"geometry", std::string(name(in.geometry))}, {"sides", in.sides}};
    report["outputs"] = {{"radius", polygon.radius()},
                         {"center_inside", polygon.center_inside()},
                         {"diagonals", diagonals}};
    report["tolerance"] = tol;
    report["verdict"] = "solved";
    if (s.json_output) {
        emit(out, report);
    } else {
        out << "geometry     " << name(in.geometry) << "\n"
            << "radius       " << format_real(polygon.radius()) << "\n";
        for (const auto& d : diagonals) {
            out << "d(" << d["i"].get<std::size_t>() << "," << d["j"].get<std::size_t>() << ")       "
                << format_real(d["length"].get<double>()) << "\n";
        }
    }
    return exit_ok;
}

struct VerifyRequest {
    std::string identity;
    std::string poly_file;
    std::size_t trials = 1000;
    std::optional<std::size_t> n;
    unsigned threads = 1;
};

inline json geometry_json(const GeometryVerification& g) {
    json j;
    j["trials"] = g.trials;
    j["max_rel_residual"] = g.max_rel_residual;
    j["verdict"] = g.holds ? "holds" : "fails";
    if (g.first_counterexample) {
        json c = polygon_document(*g.first_counterexample);
        c["rel_residual"] = g.counterexample_residual;
        j["counterexample"] = c;
    }
    return j;
}

inline int cmd_verify(const Settings& s, const VerifyRequest& req, std::ostream& out) {
    const double tol = s.tol.value_or(1e-9);
    VerifyOptions options;
    options.threads = req.threads;
    if (req.trials == 0) throw UsageError("--trials must be >= 1");

    struct Entry {
        std::string name;
        std::string polynomial;
        std::size_t vertices;
        std::optional<unsigned> degree;
        VerificationReport report;
    };
    std::vector<Entry> entries;

    const auto add_identity = [&](const std::string& label, const ChordIdentity& f) {
        entries.push_back({label, f.to_string(), f.vertex_count(), f.homogeneous_degree(),
                           cross_geometry_verify(f, req.trials, s.seed, tol, options)});
    };

    if (!req.poly_file.empty()) {
        if (!req.identity.empty()) throw UsageError("give either an identity name or --poly-file");
        ChordIdentity f(3);
        try {
            f = ChordIdentity::parse(read_file(req.poly_file), req.n);
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
        add_identity(req.poly_file, f);
    } else if (req.identity == "gregorac") {
        const std::size_t half = req.n.value_or(4);
        if (half < 4) throw UsageError("gregorac needs --n >= 4");
        entries.push_back({"gregorac", "det(a_ij) over a cyclic " + std::to_string(2 * half) + "-gon",
                           2 * half, std::nullopt,
                           verify_gregorac(half, req.trials, s.seed, tol, options)});
    } else if (req.identity == "quad-diagonals") {
        for (const auto& b : builtin_identities()) {
            if (b.name.rfind("quad-diagonal-", 0) == 0) add_identity(b.name, b.identity);
        }
    } else {
        bool found = false;
        for (const auto& b : builtin_identities()) {
            if (b.name == req.identity) {
                add_identity(b.name, b.identity);
                found = true;
            }
        }
        if (!found) {
            throw UsageError(req.identity.empty()
                                 ? "an identity name or --poly-file is required"
                                 : "unknown identity '" + req.identity + "'");
        }
    }

    bool holds = true;
    json list = json::array();
    for (const auto& e : entries) {
        json item;
        item["name"] = e.name;
        item["polynomial"] = e.polynomial;
        item["vertices"] = e.vertices;
        item["degree"] = e.degree ? json(*e.degree) : json(nullptr);
        json geos = json::object();
        for (const auto& g : e.report.geometries) geos[std::string(name(g.geometry))] = geometry_json(g);
        item["geometries"] = geos;
        item["verdict"] = e.report.holds() ? "holds" : "fails";
        holds = holds && e.report.holds();
        list.push_back(item);
    }

    json report;
    report["command"] = "verify";
    report["inputs"] = {{"identity", req.poly_file.empty() ? req.identity : req.poly_file},
                        {"trials", req.trials}};
    report["outputs"] = {{"identities", list}};
    report["seed"] = s.seed;
    report["tolerance"] = tol;
    report["verdict"] = holds ? "holds" : "fails";

    if (s.json_output) {
        emit(out, report);
    } else {
        for (const auto& e : entries) {
            out << e.name << ": " << e.polynomial << "\n";
            for (const auto& g : e.report.geometries) {
                out << "  " << name(g.geometry) << "  max_rel_residual " << format_real(g.max_rel_residual)
                    << "  " << (g.holds ? "holds" : "fails") << "\n";
                if (g.first_counterexample) {
                    const auto& p = *g.first_counterexample;
                    out << "    counterexample: radius " << format_real(p.radius()) << " angles [";
                    for (std::size_t k = 0; k < p.size(); ++k) {
                        out << (k ? ", " : "") << format_real(p.angles()[k]);
                    }
                    out << "] rel_residual " << format_real(g.counterexample_residual) << "\n";
                }
            }
        }
        out << "verdict: " << (holds ? "holds" : "fails") << "\n";
    }
    return holds ? exit_ok : exit_fails;
}

inline int cmd_sample(const Settings& s, Geometry g, std::size_t n, std::optional<double> radius,
                      std::ostream& out) {
    if (n < 3) throw UsageError("--n must be >= 3");
    SplitMix64 rng(s.seed);
    double r = 0.0;
    if (radius) {
        try {
            check_radius(*radius, g);
        } catch (const DomainError& e) {
            throw UsageError(std::string("invalid radius: ") + e.what());
        }
        r = *radius;
    } else {
        r = random_radius(g, rng);
    }
    const auto p = random_polygon(g, n, r, rng);
    json doc = polygon_document(p);
    doc["sides"] = side_lengths(p);
    json vertices = json::array();
    for (const auto& v : p.vertices()) vertices.push_back(point_json(v));
    doc["vertices"] = vertices;
    doc["seed"] = s.seed;
    emit(out, doc);
    return exit_ok;
}

inline int cmd_project(const Settings& s, const std::string& direction, const std::string& points_text,
                       std::ostream& out) {
    const bool to_plane = direction == "sphere-to-plane";
    if (!to_plane && direction != "plane-to-sphere") {
        throw UsageError("--direction must be sphere-to-plane or plane-to-sphere");
    }
    json points;
    try {
        points = json::parse(points_text);
    } catch (const json::exception& e) {
        throw UsageError("malformed --points: " + std::string(e.what()));
    }
    if (!points.is_array() || points.empty()) throw UsageError("--points must be a non-empty JSON list");

    std::vector<ModelPoint> inputs;
    std::vector<ModelPoint> images;
    try {
        for (const auto& pt : points) {
            const auto c = pt.get<std::vector<double>>();
            if (to_plane) {
                if (c.size() != 3) throw UsageError("sphere points need 3 coordinates");
                inputs.push_back(ModelPoint::spherical(c[0], c[1], c[2]));
                images.push_back(stereographic(inputs.back()));
            } else {
                if (c.size() != 2) throw UsageError("plane points need 2 coordinates");
                inputs.push_back(ModelPoint::euclidean(c[0], c[1]));
                images.push_back(stereographic_inverse(inputs.back()));
            }
        }
    } catch (const json::exception& e) {
        throw UsageError("malformed point: " + std::string(e.what()));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    json report;
    report["command"] = "project";
    report["inputs"] = {{"direction", direction}, {"points", points}};
    json mapped = json::array();
    for (const auto& p : images) mapped.push_back(point_json(p));
    report["outputs"] = {{"points", mapped}};

    // A sample of a canonical circle (about the south pole, radius <= pi/2,
    // or about the origin with radius <= 1) also reports the image radius.
    const auto& first = inputs.front();
    bool circle = true;
    for (const auto& p : inputs) {
        if (to_plane) {
            circle = circle && std::abs(p.z() - first.z()) <= 1e-12;
        } else {
            const double r0 = std::hypot(first.x(), first.y());
            circle = circle && std::abs(std::hypot(p.x(), p.y()) - r0) <= 1e-12 * std::max(1.0, r0);
        }
    }
    if (to_plane && circle && first.z() <= 0.0 && first.z() > -1.0) {
        const double rs = std::atan2(std::hypot(first.x(), first.y()), -first.z());
        report["outputs"]["circle"] = {{"spherical_radius", rs}, {"planar_radius", std::tan(0.5 * rs)}};
    } else if (!to_plane && circle) {
        const double re = std::hypot(first.x(), first.y());
        if (re > 0.0 && re <= 1.0) {
            report["outputs"]["circle"] = {{"planar_radius", re}, {"spherical_radius", 2.0 * std::atan(re)}};
        }
    }

    if (s.json_output) {
        emit(out, report);
    } else {
        for (std::size_t k = 0; k < images.size(); ++k) {
            const auto& q = images[k];
            out << format_real(q.x()) << " " << format_real(q.y());
            if (q.geometry() == Geometry::Spherical) out << " " << format_real(q.z());
            out << "\n";
        }
        if (report["outputs"].contains("circle")) {
            const auto& c = report["outputs"]["circle"];
            out << "circle: spherical radius " << format_real(c["spherical_radius"].get<double>())
                << " planar radius " << format_real(c["planar_radius"].get<double>()) << "\n";
        }
    }
    return exit_ok;
}

/// Entry point shared by the executable and the tests. `args` includes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic polygons in Euclidean, hyperbolic and spherical geometry"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_flag("--json", settings.json_output, "Print a JSON report");
    app.add_option("--tol", settings.tol, "Tolerance (solver width or residual bound)");
    app.add_option("--seed", settings.seed, "Random seed");

    std::string geometry_text;
    std::string sides_text;
    std::string input_path;

    auto* solve = app.add_subcommand("solve", "Circumradius from side lengths");
    auto* diagonals = app.add_subcommand("diagonals", "All diagonals from side lengths");
    for (auto* sub : {solve, diagonals}) {
        sub->add_option("--geometry,-g", geometry_text, "euclidean, hyperbolic or spherical");
        sub->add_option("--sides", sides_text, "Comma-separated side lengths in cyclic order");
        sub->add_option("--input", input_path, "Polygon document (JSON)");
    }

    VerifyRequest verify_req;
    auto* verify = app.add_subcommand("verify", "Check a polynomial identity in all three geometries");
    verify->add_option("identity", verify_req.identity,
                       "ptolemy, fuhrmann, gregorac, triangle-radius, quad-radius or quad-diagonals");
    verify->add_option("--poly-file", verify_req.poly_file, "Polynomial in the chord-identity text format");
    verify->add_option("--trials", verify_req.trials, "Random configurations per geometry");
    verify->add_option("--n", verify_req.n, "gregorac: half vertex count; poly-file: vertex count");
    verify->add_option("--threads", verify_req.threads, "Worker threads");

    std::size_t sample_n = 0;
    std::optional<double> sample_radius;
    auto* sample = app.add_subcommand("sample", "Random cyclic polygon document");
    sample->add_option("--geometry,-g", geometry_text, "euclidean, hyperbolic or spherical");
    sample->add_option("--n", sample_n, "Vertex count")->required();
    sample->add_option("--radius", sample_radius, "Circumradius (random when omitted)");

    std::string direction;
    std::string points_text;
    auto* project = app.add_subcommand("project", "Stereographic projection from the north pole");
    project->add_option("--direction", direction, "sphere-to-plane or plane-to-sphere")->required();
    project->add_option("--points", points_text, "JSON list of points")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (solve->parsed() || diagonals->parsed()) {
            const auto in = load_sides(geometry_text, sides_text, input_path);
            if (settings.tol && !(*settings.tol > 0.0)) throw UsageError("--tol must be > 0");
            try {
                return solve->parsed() ? cmd_solve(settings, in, out) : cmd_diagonals(settings, in, out);
            } catch (const InfeasibleSides& e) {
                err << "infeasible: " << e.what() << "\n";
                return exit_infeasible;
            } catch (const DomainError& e) {
                err << "infeasible: " << e.what() << "\n";
                return exit_infeasible;
            } catch (const NotConverged& e) {
                err << "infeasible: " << e.what() << "\n";
                return exit_infeasible;
            }
        }
        if (verify->parsed()) return cmd_verify(settings, verify_req, out);
        if (sample->parsed()) {
            return cmd_sample(settings, require_geometry(geometry_text), sample_n, sample_radius, out);
        }
        if (project->parsed()) return cmd_project(settings, direction, points_text, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace cyclic::cli
