#pragma once

// Command-line front end. `run` is kept separate from main() so the test
// suite can drive it with captured streams.

#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "duval/cycles.hpp"
#include "duval/dynkin.hpp"
#include "duval/germ_parser.hpp"
#include "duval/json.hpp"
#include "duval/lct.hpp"
#include "duval/rigidity.hpp"
#include "duval/surfaces.hpp"

namespace duval::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

namespace detail {

struct ConfigArgs {
    std::string type;
    std::string variant;
    std::string smooth;
};

inline void add_config_args(CLI::App* sub, ConfigArgs& args) {
    sub->add_option("type", args.type, "Dynkin label of the point D passes through (A1..A8, D4..D8, E6..E8)");
    sub->add_option("--variant", args.variant, "transverse|tangential|two-points|one-point|standard");
    sub->add_option("--smooth", args.smooth, "elliptic|nodal|cuspidal (D misses the singular points)");
}

inline AnticanonicalConfiguration make_config(const ConfigArgs& a) {
    if (a.type.empty() == a.smooth.empty()) {
        throw CLI::ValidationError("config", "give exactly one of <type> or --smooth");
    }
    if (!a.smooth.empty()) {
        if (!a.variant.empty()) throw CLI::ValidationError("--variant", "not used with --smooth");
        return build_smooth_configuration(parse_smooth_contact(a.smooth));
    }
    const DynkinType t = parse_dynkin(a.type);
    const Contact c = a.variant.empty() ? default_contact(t) : parse_contact(a.variant);
    return build_configuration(t, c);
}

inline std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

inline std::string component_name(const Component& c) {
    return c.kind == ComponentKind::StrictTransform ? "D~" : "E" + std::to_string(c.id);
}

inline void print_config(std::ostream& out, const AnticanonicalConfiguration& c) {
    out << "components:";
    for (const auto& comp : c.components) out << " " << component_name(comp) << "*" << comp.multiplicity;
    out << "\n";
    for (const auto& rec : c.incidence) {
        out << "  ";
        switch (rec.kind) {
            case IncidenceKind::SelfNode: out << "node on D~"; break;
            case IncidenceKind::SelfCusp: out << "cusp on D~"; break;
            case IncidenceKind::Crossing: {
                for (std::size_t i = 0; i < rec.components.size(); ++i)
                    out << (i ? " " : "") << component_name(c.component(rec.components[i]));
                out << " meet, contact " << rec.contact;
                break;
            }
        }
        out << "\n";
    }
}

}  // namespace detail

/// Runs one command; returns the process exit status.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Du Val fundamental cycles, log canonical thresholds and the degree-1 rigidity gate", "duval"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "print JSON instead of text");

    std::string type_label;
    auto* matrix = app.add_subcommand("matrix", "intersection matrix (E_i.E_j) of a Du Val type");
    matrix->add_option("type", type_label)->required();

    bool attachment = false;
    auto* cycle = app.add_subcommand("cycle", "fundamental cycle coefficients (Laufer)");
    cycle->add_option("type", type_label)->required();
    cycle->add_flag("--attachment", attachment, "print D~.E_j instead of the cycle");

    detail::ConfigArgs config_args;
    auto* config = app.add_subcommand("config", "anticanonical configuration pi^*(D) = D~ + Gamma");
    detail::add_config_args(config, config_args);
    auto* kodaira = app.add_subcommand("kodaira", "Kodaira fibre type of a configuration");
    detail::add_config_args(kodaira, config_args);
    auto* lct_config_cmd = app.add_subcommand("lct-config", "log canonical threshold of a configuration");
    detail::add_config_args(lct_config_cmd, config_args);

    std::string poly_text;
    bool quasi = false;
    auto* lct_germ_cmd = app.add_subcommand("lct-germ", "log canonical threshold of a plane curve germ at 0");
    lct_germ_cmd->add_option("poly", poly_text, "polynomial in x, y, e.g. \"y^2 - x^3\"")->required();
    lct_germ_cmd->add_flag("--quasihomogeneous", quasi, "use the weighted-homogeneous formula");
    auto* classify = app.add_subcommand("classify", "smooth / node / cusp / other");
    classify->add_option("poly", poly_text)->required();

    std::string sings, cusp = "none";
    auto* tlct_cmd = app.add_subcommand("tlct", "total log canonical threshold of a degree-1 surface");
    tlct_cmd->add_option("--sings", sings, "comma-separated Dynkin labels, empty for a smooth surface");
    tlct_cmd->add_option("--cusp", cusp, "none|smooth|A1|A2");
    auto* validate_cmd = app.add_subcommand("validate", "check the necessary conditions on a singularity set");
    validate_cmd->add_option("--sings", sings);
    validate_cmd->add_option("--cusp", cusp);

    std::string x_json, y_json;
    auto* rigidity = app.add_subcommand("rigidity", "biregularity gate for two degree-1 fibrations");
    rigidity->add_option("--x", x_json, "fibration JSON")->required();
    rigidity->add_option("--y", y_json, "fibration JSON")->required();
    auto* targets = app.add_subcommand("targets", "possible special fibres of a non-biregular target");
    targets->add_option("--x", x_json, "fibration JSON")->required();

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return exit_usage_error;
    }

    try {
        if (matrix->parsed()) {
            const DynkinType t = parse_dynkin(type_label);
            const IntegerMatrix m = intersection_matrix(t);
            if (as_json) {
                out << matrix_to_json(t, m).dump() << "\n";
            } else {
                for (std::size_t i = 0; i < m.size(); ++i) out << detail::join(m.row(i)) << "\n";
            }
        } else if (cycle->parsed()) {
            const DynkinType t = parse_dynkin(type_label);
            if (attachment) {
                const auto a = attachment_vector(t);
                out << (as_json ? json(a).dump() : detail::join(a.d)) << "\n";
            } else {
                const auto c = fundamental_cycle(t);
                out << (as_json ? json(c).dump() : detail::join(c.coeffs)) << "\n";
            }
        } else if (config->parsed()) {
            const auto c = detail::make_config(config_args);
            if (as_json) out << json(c).dump() << "\n";
            else detail::print_config(out, c);
        } else if (kodaira->parsed()) {
            const auto label = kodaira_type(detail::make_config(config_args));
            out << (as_json ? json{{"kodaira", label.str()}}.dump() : label.str()) << "\n";
        } else if (lct_config_cmd->parsed()) {
            const auto t = lct_config(detail::make_config(config_args));
            out << (as_json ? json{{"lct", t.str()}}.dump() : t.str()) << "\n";
        } else if (lct_germ_cmd->parsed()) {
            const CurveGerm g(parse_polynomial(poly_text));
            const auto t = quasi ? lct_quasihomogeneous(g) : lct_germ(g);
            out << (as_json ? json{{"germ", g.poly().str()}, {"lct", t.str()}}.dump() : t.str()) << "\n";
        } else if (classify->parsed()) {
            const CurveGerm g(parse_polynomial(poly_text));
            const auto c = to_string(classify_germ(g));
            out << (as_json ? json{{"germ", g.poly().str()}, {"class", c}}.dump() : c) << "\n";
        } else if (tlct_cmd->parsed()) {
            const SurfaceSpec s(parse_singularity_list(sings), parse_cusp_data(cusp));
            const auto r = tlct(s);
            out << (as_json ? json(r).dump() : r.value.str() + " (" + r.kodaira.str() + ")") << "\n";
        } else if (validate_cmd->parsed()) {
            const SurfaceSpec s(parse_singularity_list(sings), parse_cusp_data(cusp));
            const auto report = validate(s);
            if (as_json) {
                out << json(report).dump() << "\n";
            } else if (report.ok()) {
                out << "valid\n";
            } else {
                out << "invalid\n";
                for (const auto& v : report.violations) out << "  (" << to_string(v.clause) << ") " << v.message << "\n";
            }
        } else if (rigidity->parsed()) {
            const auto v = rigidity_gate(fibration_from_json_text(x_json), fibration_from_json_text(y_json));
            if (as_json) {
                out << json(v).dump() << "\n";
            } else {
                out << to_string(v.outcome) << " (tlct sum " << to_fraction_string(v.tlct_sum) << ")\n";
                for (const auto& u : v.unasserted) out << "  not asserted: " << u << "\n";
                for (const auto& c : v.targets)
                    out << "  " << to_fraction_string(c.tlct_value) << " " << slug(c.kind) << ": " << c.description << "\n";
            }
        } else if (targets->parsed()) {
            const auto list = possible_targets(fibration_from_json_text(x_json));
            if (as_json) {
                out << json{{"targets", list}}.dump() << "\n";
            } else if (list.empty()) {
                out << "none\n";
            } else {
                for (const auto& c : list)
                    out << to_fraction_string(c.tlct_value) << " " << slug(c.kind) << ": " << c.description << "\n";
            }
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return exit_domain_error;
    } catch (const std::exception& e) {
        err << "InternalError: " << e.what() << "\n";
        return exit_domain_error;
    }
    return exit_ok;
}

}  // namespace duval::cli
