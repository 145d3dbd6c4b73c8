// Command-line front door for the synaptica library.
//
//   synaptica analyze <file> [--json] [--full]
//   synaptica lattice <p> <q> --op meet|join|sasaki|compatible [--json]
//   synaptica audit [--model matrix|setfn] [--dim n]... [--trials t]
//                   [--seed s] [--json] [--allow-tol-scale]
//
// Exit codes: 0 success, 1 audit law failure, 2 parse error,
// 3 non-symmetric input, 4 non-projection input.
//
// The environment variable SYNAPTICA_TOL_SCALE multiplies every tolerance
// for exploratory runs; `audit` ignores it unless --allow-tol-scale is set,
// so a loosened environment can never silently pass the gate.

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <synaptica/synaptica.hpp>

namespace {

using namespace synaptica;

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotSymmetric = 3;
constexpr int kExitNotProjection = 4;

std::size_t projection_rank(const Element& p) {
    if (p.is_matrix())
        return static_cast<std::size_t>(std::llround(p.as_matrix().trace()));
    std::size_t r = 0;
    for (double v : p.as_setfn().values)
        if (v > 0.5) ++r;
    return r;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

void print_matrix(std::ostream& os, const Matrix& m, const char* indent) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.dim(); ++j)
            os << (j ? ", " : " ") << fmt(m(i, j));
        os << " ]\n";
    }
}

void print_element(std::ostream& os, const Element& e, const char* indent) {
    if (e.is_matrix()) {
        print_matrix(os, e.as_matrix(), indent);
    } else {
        os << indent << "values: [";
        const auto& v = e.as_setfn().values;
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? ", " : " ") << fmt(v[i]);
        os << " ]\n";
    }
}

// --- analyze -------------------------------------------------------------

int cmd_analyze(const std::string& path, bool as_json, bool full) {
    const Element a = load_element_file(path);
    const auto bounds = spectral_bounds(a);
    const double norm = order_unit_norm(a);
    const Element car = carrier(a);
    const PolarForm pf = polar(a);
    const double r_abs =
        order_unit_norm(into_algebra(mul(pf.signum, a)) - pf.absolute);
    const double r_carrier =
        order_unit_norm(into_algebra(mul(pf.signum, pf.signum)) - car);
    const double r_original =
        order_unit_norm(into_algebra(mul(pf.signum, pf.absolute)) - a);
    const SpectralResolution res = spectral_resolution(a);
    const SimpleDecomposition dec = simple_decompose(a);

    if (as_json) {
        Json j;
        j["model"] = a.model_tag();
        j["lower"] = bounds.lower;
        j["upper"] = bounds.upper;
        j["norm"] = norm;
        j["spectrum"] = res.breakpoints;
        j["carrier_rank"] = projection_rank(car);
        j["polar_residuals"] = {{"signum_times_a_vs_abs", r_abs},
                                {"signum_squared_vs_carrier", r_carrier},
                                {"signum_times_abs_vs_a", r_original}};
        Json table = Json::array();
        for (std::size_t i = 0; i < res.breakpoints.size(); ++i) {
            Json row;
            row["lambda"] = res.breakpoints[i];
            row["p_rank"] = projection_rank(res.projections_at[i]);
            row["d_rank"] = projection_rank(res.eigenprojections_at[i]);
            if (full) {
                row["p"] = element_to_json(res.projections_at[i]);
                row["d"] = element_to_json(res.eigenprojections_at[i]);
            }
            table.push_back(row);
        }
        j["breakpoints"] = table;
        Json simple = Json::array();
        for (std::size_t i = 0; i < dec.coefficients.size(); ++i) {
            Json row;
            row["coefficient"] = dec.coefficients[i];
            row["rank"] = projection_rank(dec.projections[i]);
            if (full) row["projection"] = element_to_json(dec.projections[i]);
            simple.push_back(row);
        }
        j["decomposition"] = simple;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "model:        " << a.model_tag() << "\n";
    std::cout << "bounds:       L = " << fmt(bounds.lower)
              << ", U = " << fmt(bounds.upper) << "\n";
    std::cout << "norm:         " << fmt(norm) << "\n";
    std::cout << "spectrum:     {";
    for (std::size_t i = 0; i < res.breakpoints.size(); ++i)
        std::cout << (i ? ", " : " ") << fmt(res.breakpoints[i]);
    std::cout << " }\n";
    std::cout << "carrier rank: " << projection_rank(car) << "\n";
    std::cout << "polar residuals: sgn(a)a=|a| " << fmt(r_abs)
              << "   sgn(a)^2=a deg " << fmt(r_carrier)
              << "   sgn(a)|a|=a " << fmt(r_original) << "\n";
    std::cout << "breakpoints (lambda, rank p_lambda, rank d_lambda):\n";
    for (std::size_t i = 0; i < res.breakpoints.size(); ++i) {
        std::cout << "  " << std::setw(12) << fmt(res.breakpoints[i]) << "  "
                  << std::setw(6) << projection_rank(res.projections_at[i])
                  << "  " << std::setw(6)
                  << projection_rank(res.eigenprojections_at[i]) << "\n";
        if (full) print_element(std::cout, res.projections_at[i], "    ");
    }
    std::cout << "simple decomposition (coefficient, rank):\n";
    for (std::size_t i = 0; i < dec.coefficients.size(); ++i) {
        std::cout << "  " << std::setw(12) << fmt(dec.coefficients[i]) << "  "
                  << std::setw(6) << projection_rank(dec.projections[i]) << "\n";
        if (full) print_element(std::cout, dec.projections[i], "    ");
    }
    return kExitOk;
}

// --- lattice ---------------------------------------------------------------

int cmd_lattice(const std::string& p_path, const std::string& q_path,
                const std::string& op, bool as_json) {
    const Element p = load_element_file(p_path);
    const Element q = load_element_file(q_path);
    if (!is_projection(p) || !is_projection(q)) {
        std::cerr << "lattice: both inputs must be projections\n";
        return kExitNotProjection;
    }

    // phi_p(q) = p AND (p-perp OR q): report how tightly the identity holds.
    const Element sas = sasaki_projection(p, q);
    const double sasaki_residual =
        order_unit_norm(sas - meet(p, join(ortho(p), q)));

    Json j;
    j["op"] = op;
    std::ostringstream text;
    if (op == "compatible") {
        const bool c = compatible(p, q);
        j["compatible"] = c;
        text << "compatible:       " << (c ? "true" : "false") << "\n";
    } else {
        const Element r = op == "meet"   ? meet(p, q)
                          : op == "join" ? join(p, q)
                                         : sas;
        j["rank"] = projection_rank(r);
        j["result"] = element_to_json(r);
        text << "result rank:      " << projection_rank(r) << "\n";
        if (r.is_matrix()) print_element(text, r, "  ");
    }
    j["sasaki_identity_residual"] = sasaki_residual;
    text << "sasaki identity:  residual " << fmt(sasaki_residual) << "\n";

    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text.str();
    return kExitOk;
}

// --- audit -------------------------------------------------------------

int cmd_audit(const audit::AuditConfig& cfg, bool as_json) {
    const audit::AuditReport report = audit::audit_all(cfg);
    if (as_json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << "model=" << report.model << " trials=" << report.trials
                  << " seed=" << report.seed << "\n";
        std::cout << std::left << std::setw(8) << "law" << std::setw(6)
                  << "pass" << std::setw(6) << "fail" << std::setw(14)
                  << "worst" << std::setw(12) << "bound"
                  << "anchor\n";
        for (const auto& l : report.laws) {
            std::ostringstream w;
            if (std::isfinite(l.worst_residual))
                w << std::setprecision(3) << l.worst_residual;
            else
                w << "inf";
            std::cout << std::left << std::setw(8) << l.id << std::setw(6)
                      << l.pass << std::setw(6) << l.fail << std::setw(14)
                      << w.str() << std::setw(12) << l.bound << l.anchor
                      << "\n";
        }
    }
    if (!report.all_passed()) {
        for (const auto& l : report.laws)
            if (l.fail > 0) std::cerr << "audit: law " << l.id << " failed\n";
        return kExitLawFailure;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("SYNAPTICA_TOL_SCALE")) {
        char* end = nullptr;
        const double s = std::strtod(env, &end);
        if (end != env && s > 0.0) synaptica::tol::scale() = s;
    }

    CLI::App app{"synaptic-algebra desk calculator"};
    app.require_subcommand(1);

    std::string fault; // undocumented: used by the fault-injection gate
    app.add_option("--inject-fault", fault)->group("");

    std::string analyze_path;
    bool analyze_json = false, analyze_full = false;
    auto* analyze = app.add_subcommand("analyze", "spectral/polar report");
    analyze->add_option("file", analyze_path, "element file (JSON)")->required();
    analyze->add_flag("--json", analyze_json, "machine-readable output");
    analyze->add_flag("--full", analyze_full, "include projection matrices");
    analyze->fallthrough();

    std::string lat_p, lat_q, lat_op;
    bool lat_json = false;
    auto* lattice = app.add_subcommand("lattice", "projection lattice ops");
    lattice->add_option("p", lat_p, "projection file")->required();
    lattice->add_option("q", lat_q, "projection file")->required();
    lattice->add_option("--op", lat_op, "meet|join|sasaki|compatible")
        ->required()
        ->check(CLI::IsMember({"meet", "join", "sasaki", "compatible"}));
    lattice->add_flag("--json", lat_json, "machine-readable output");
    lattice->fallthrough();

    synaptica::audit::AuditConfig cfg;
    bool audit_json = false, allow_tol_scale = false;
    auto* audit = app.add_subcommand("audit", "run the law suite");
    audit->add_option("--model", cfg.model, "matrix|setfn")
        ->check(CLI::IsMember({"matrix", "setfn"}));
    audit->add_option("--dim", cfg.dims,
                      "dimension / universe size (repeatable)");
    audit->add_option("--trials", cfg.trials, "trials per law");
    audit->add_option("--seed", cfg.seed, "RNG seed");
    audit->add_flag("--json", audit_json, "machine-readable report");
    audit->add_flag("--allow-tol-scale", allow_tol_scale,
                    "honor SYNAPTICA_TOL_SCALE during the audit");
    audit->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (!fault.empty()) {
        if (!synaptica::faults::is_known(fault)) {
            std::cerr << "unknown fault id: " << fault << "\n";
            return kExitParse;
        }
        synaptica::faults::inject(fault);
    }

    try {
        if (*analyze) return cmd_analyze(analyze_path, analyze_json, analyze_full);
        if (*lattice) return cmd_lattice(lat_p, lat_q, lat_op, lat_json);
        if (*audit) {
            if (!allow_tol_scale) synaptica::tol::scale() = 1.0;
            return cmd_audit(cfg, audit_json);
        }
    } catch (const synaptica::NotSymmetricError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotSymmetric;
    } catch (const synaptica::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
