// Command-line front end. Talks to the library exclusively through the C API
// in hulthen/hulthen.h; parsing and serialization live here.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hulthen/hulthen.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int EXIT_USAGE = 2;
constexpr int EXIT_IO = 3;
constexpr int EXIT_VERIFY = 4;

struct cli_error : std::runtime_error {
    int code;
    cli_error(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] void fail_status(hul_status st, const std::string& where) {
    const int code = (st == HUL_ERR_DOMAIN || st == HUL_ERR_INVALID) ? EXIT_USAGE : EXIT_IO;
    throw cli_error(code, where + ": " + hul_last_error());
}

void check(hul_status st, const std::string& where) {
    if (st != HUL_OK) fail_status(st, where);
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// ---- shared configuration -------------------------------------------------

struct Options {
    double Z = 1.0;
    double alpha = 0.2;
    double mu0 = 1.0;
    std::string nr = "0";
    std::string ell = "0";
    std::string dim = "3";
    std::string alignment = "unaligned";
    std::string branch = "minus";
    std::string delta_policy = "default";
    std::string formula = "dirac";
    std::string grid;
    std::string format = "csv";
    bool plot = false;
    std::string out = "-";
    std::string axis = "alpha";
    bool alpha_given = false;
};

std::vector<int> parse_int_list(const std::string& spec, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const auto dash = tok.find('-', 1);
        try {
            if (dash == std::string::npos) {
                out.push_back(std::stoi(tok));
            } else {
                const int lo = std::stoi(tok.substr(0, dash));
                const int hi = std::stoi(tok.substr(dash + 1));
                if (hi < lo) throw std::invalid_argument("descending range");
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::exception&) {
            throw cli_error(EXIT_USAGE, flag + ": cannot parse '" + tok + "' (want e.g. 0,2 or 0-3)");
        }
    }
    if (out.empty()) throw cli_error(EXIT_USAGE, flag + ": empty list");
    return out;
}

struct GridSpec {
    double lo, hi;
    std::size_t n;
    bool log;
};

GridSpec parse_grid(const std::string& spec, GridSpec fallback) {
    if (spec.empty()) return fallback;
    GridSpec g = fallback;
    std::stringstream ss(spec);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    try {
        if (parts.size() < 3 || parts.size() > 4) throw std::invalid_argument("field count");
        g.lo = std::stod(parts[0]);
        g.hi = std::stod(parts[1]);
        const long n = std::stol(parts[2]);
        if (n < 2 || g.hi <= g.lo) throw std::invalid_argument("bounds");
        g.n = static_cast<std::size_t>(n);
        if (parts.size() == 4) {
            if (parts[3] == "log")
                g.log = true;
            else if (parts[3] == "lin")
                g.log = false;
            else
                throw std::invalid_argument("scale");
        }
    } catch (const std::exception&) {
        throw cli_error(EXIT_USAGE, "--grid: cannot parse '" + spec + "' (want lo:hi:n[:log|lin])");
    }
    if (g.log && g.lo <= 0.0) throw cli_error(EXIT_USAGE, "--grid: log scale needs lo > 0");
    return g;
}

std::vector<double> materialize(const GridSpec& g) {
    std::vector<double> v(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(g.n - 1);
        v[i] = g.log ? std::exp(std::log(g.lo) + t * (std::log(g.hi) - std::log(g.lo)))
                     : g.lo + t * (g.hi - g.lo);
    }
    v.front() = g.lo;
    v.back() = g.hi;
    return v;
}

hul_alignment parse_alignment(const std::string& s) {
    if (s == "aligned") return HUL_ALIGNED;
    if (s == "unaligned") return HUL_UNALIGNED;
    throw cli_error(EXIT_USAGE, "--alignment: want 'aligned' or 'unaligned', got '" + s + "'");
}

hul_branch parse_branch(const std::string& s) {
    if (s == "plus") return HUL_BRANCH_PLUS;
    if (s == "minus") return HUL_BRANCH_MINUS;
    throw cli_error(EXIT_USAGE, "--branch: want 'plus' or 'minus', got '" + s + "'");
}

hul_delta_policy parse_policy(const std::string& s) {
    if (s == "default") return HUL_DELTA_DEFAULT;
    if (s == "literal") return HUL_DELTA_LITERAL;
    throw cli_error(EXIT_USAGE, "--delta-policy: want 'default' or 'literal', got '" + s + "'");
}

// RAII wrappers for the C handles.
using model_ptr = std::unique_ptr<hul_model, decltype(&hul_model_destroy)>;
using state_ptr = std::unique_ptr<hul_state, decltype(&hul_state_destroy)>;

model_ptr make_model(const Options& o) {
    hul_model* m = nullptr;
    check(hul_model_create(o.Z, o.alpha, o.mu0, &m), "model");
    return model_ptr(m, hul_model_destroy);
}

state_ptr make_state(int nr, int ell, int D, hul_alignment align) {
    hul_state* s = nullptr;
    check(hul_state_create(nr, ell, D, align, &s), "state");
    return state_ptr(s, hul_state_destroy);
}

// ---- output sinks ---------------------------------------------------------

struct OutputFile {
    std::ofstream file;
    std::ostream* os;
    explicit OutputFile(const std::string& path) {
        if (path == "-") {
            os = &std::cout;
        } else {
            file.open(path);
            if (!file) throw cli_error(EXIT_IO, "cannot open output file '" + path + "'");
            os = &file;
        }
    }
    void finish(const std::string& path) {
        os->flush();
        if (os != &std::cout && !*os) throw cli_error(EXIT_IO, "write failure on '" + path + "'");
    }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;       // rendered values (CSV view)
    std::vector<json> json_rows;                      // typed values (JSON view)
    std::map<std::string, std::string> metadata;

    void add_row(const std::vector<std::pair<std::string, json>>& cells) {
        std::vector<std::string> rendered;
        json jr = json::object();
        for (const auto& [name, value] : cells) {
            jr[name] = value;
            if (value.is_number_float())
                rendered.push_back(fmt17(value.get<double>()));
            else if (value.is_null())
                rendered.push_back("nan");
            else if (value.is_string())
                rendered.push_back(csv_quote(value.get<std::string>()));
            else
                rendered.push_back(value.dump());
        }
        rows.push_back(std::move(rendered));
        json_rows.push_back(std::move(jr));
    }

    void write(const Options& o, const std::string& path) const {
        OutputFile sink(path);
        if (o.format == "json") {
            json j;
            j["metadata"] = metadata;
            j["rows"] = json_rows;
            *sink.os << j.dump(2) << "\n";
        } else if (o.format == "csv") {
            for (const auto& [k, v] : metadata) *sink.os << "# " << k << "=" << v << "\n";
            for (std::size_t i = 0; i < columns.size(); ++i)
                *sink.os << (i ? "," : "") << csv_quote(columns[i]);
            *sink.os << "\n";
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) *sink.os << (i ? "," : "") << row[i];
                *sink.os << "\n";
            }
        } else {
            throw cli_error(EXIT_USAGE, "--format: want 'csv' or 'json', got '" + o.format + "'");
        }
        sink.finish(path);
    }
};

// ---- SVG plotting ---------------------------------------------------------

struct PlotCurve {
    std::string label;
    std::vector<std::pair<double, double>> points;  // NaN y = gap
};

void write_svg(const std::string& path, const std::string& x_label, const std::string& y_label,
               const std::vector<PlotCurve>& curves) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& c : curves)
        for (const auto& [x, y] : c.points) {
            if (!std::isfinite(y)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmin > xmax) throw cli_error(EXIT_USAGE, "plot '" + path + "': no finite points");
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;

    const double W = 640, H = 480, ML = 70, MR = 20, MT = 20, MB = 50;
    const auto px = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
    const auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    OutputFile sink(path);
    std::ostream& os = *sink.os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
       << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
       << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // axes
    os << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
       << H - MB << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
       << "\" stroke=\"black\"/>\n";
    char buf[64];
    const auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };
    os << "<text x=\"" << ML << "\" y=\"" << H - MB + 20 << "\" font-size=\"12\">" << num(xmin)
       << "</text>\n"
       << "<text x=\"" << W - MR - 40 << "\" y=\"" << H - MB + 20 << "\" font-size=\"12\">"
       << num(xmax) << "</text>\n"
       << "<text x=\"5\" y=\"" << H - MB << "\" font-size=\"12\">" << num(ymin) << "</text>\n"
       << "<text x=\"5\" y=\"" << MT + 12 << "\" font-size=\"12\">" << num(ymax) << "</text>\n"
       << "<text x=\"" << (W / 2 - 20) << "\" y=\"" << H - 10 << "\" font-size=\"14\">" << x_label
       << "</text>\n"
       << "<text x=\"15\" y=\"" << (H / 2) << "\" font-size=\"14\" transform=\"rotate(-90 15 "
       << (H / 2) << ")\">" << y_label << "</text>\n";

    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const char* color = palette[ci % 8];
        bool open = false;
        std::ostringstream poly;
        const auto flush_poly = [&] {
            if (open) os << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\""
                         << poly.str() << "\"/>\n";
            poly.str("");
            open = false;
        };
        for (const auto& [x, y] : curves[ci].points) {
            if (!std::isfinite(y)) {
                flush_poly();  // imaginary-status region: break the line
                continue;
            }
            poly << px(x) << "," << py(y) << " ";
            open = true;
        }
        flush_poly();
        os << "<text x=\"" << W - MR - 150 << "\" y=\"" << MT + 16 + 16 * ci
           << "\" font-size=\"12\" fill=\"" << color << "\">" << curves[ci].label << "</text>\n";
    }
    os << "</svg>\n";
    sink.finish(path);
}

// ---- energy evaluation by formula name ------------------------------------

struct FormulaRequest {
    std::string formula;  // dirac | kg | coulomb | kg-simplified | dirac-simplified
    hul_branch branch;
};

hul_energy eval_energy(const FormulaRequest& fr, const Options& o, double alpha, int nr, int ell,
                       int D) {
    hul_energy e{};
    if (fr.formula == "dirac" || fr.formula == "kg" || fr.formula == "coulomb") {
        auto state = make_state(nr, ell, D, parse_alignment(o.alignment));
        if (fr.formula == "coulomb") {
            double v = 0.0;
            check(hul_coulomb_limit_energy(state.get(), o.Z, o.mu0, &v), "coulomb energy");
            e = {v, 0.0, 1, HUL_BRANCH_MINUS, HUL_SOURCE_COULOMB};
        } else if (fr.formula == "dirac") {
            hul_model* m = nullptr;
            check(hul_model_create(o.Z, alpha, o.mu0, &m), "model");
            model_ptr mp(m, hul_model_destroy);
            check(hul_dirac_energy(state.get(), mp.get(), fr.branch, &e), "dirac energy");
        } else {
            check(hul_kg_energy(state.get(), o.Z, o.mu0, alpha, fr.branch, &e), "kg energy");
        }
    } else if (fr.formula == "kg-simplified") {
        const int n = nr + ell + 1;
        check(hul_kg_energy_simplified(n, D, alpha, &e), "kg-simplified energy");
    } else if (fr.formula == "dirac-simplified") {
        const int n = nr + ell + 1;
        check(hul_dirac_energy_simplified(n, D, alpha, &e), "dirac-simplified energy");
    } else {
        throw cli_error(EXIT_USAGE, "--formula: unknown formula '" + fr.formula + "'");
    }
    return e;
}

// ---- subcommands ----------------------------------------------------------

int cmd_spectrum(const Options& o) {
    const auto nrs = parse_int_list(o.nr, "--nr");
    const auto ells = parse_int_list(o.ell, "--ell");
    const auto dims = parse_int_list(o.dim, "--dim");
    const FormulaRequest fr{o.formula, parse_branch(o.branch)};

    Table t;
    t.columns = {"source", "n_r", "ell", "D", "kappa", "alpha", "branch", "energy", "status"};
    t.metadata = {{"command", "spectrum"}, {"Z", fmt17(o.Z)}, {"mu0", fmt17(o.mu0)},
                  {"formula", o.formula},  {"alignment", o.alignment}};
    for (int D : dims)
        for (int ell : ells)
            for (int nr : nrs) {
                const auto e = eval_energy(fr, o, o.alpha, nr, ell, D);
                auto state = make_state(nr, ell, D, parse_alignment(o.alignment));
                double kappa = 0.0;
                check(hul_kappa(state.get(), &kappa), "kappa");
                t.add_row({{"source", o.formula},
                           {"n_r", nr},
                           {"ell", ell},
                           {"D", D},
                           {"kappa", kappa},
                           {"alpha", o.alpha},
                           {"branch", e.branch == HUL_BRANCH_PLUS ? "plus" : "minus"},
                           {"energy", e.is_real ? json(e.value) : json()},
                           {"status", e.is_real ? "real" : "imaginary"}});
            }
    t.write(o, o.out);
    return 0;
}

int cmd_wavefunction(const Options& o) {
    const auto nrs = parse_int_list(o.nr, "--nr");
    const auto ells = parse_int_list(o.ell, "--ell");
    const auto dims = parse_int_list(o.dim, "--dim");
    if (nrs.size() != 1 || ells.size() != 1 || dims.size() != 1)
        throw cli_error(EXIT_USAGE, "wavefunction: --nr/--ell/--dim must each select one state");

    std::size_t n_points = 2000;
    if (!o.grid.empty()) {
        try {
            const long n = std::stol(o.grid);
            if (n < 8) throw std::invalid_argument("too few");
            n_points = static_cast<std::size_t>(n);
        } catch (const std::exception&) {
            throw cli_error(EXIT_USAGE, "--grid: wavefunction takes a point count, got '" + o.grid + "'");
        }
    }

    auto model = make_model(o);
    auto state = make_state(nrs[0], ells[0], dims[0], parse_alignment(o.alignment));

    hul_wavefn* w = nullptr;
    const hul_status st =
        hul_wavefn_create(state.get(), model.get(), parse_policy(o.delta_policy), n_points, 1, &w);
    if (st == HUL_ERR_DOMAIN) {
        // No real closed-form energy here; report where the radicand flips.
        double kappa = 0.0;
        check(hul_kappa(state.get(), &kappa), "kappa");
        const double n_principal = nrs[0] + std::fabs(kappa) + 1.0;
        double thresh = 0.0;
        check(hul_alpha_threshold(HUL_THRESHOLD_DIRAC, n_principal, dims[0], &thresh), "threshold");
        std::cerr << "error: no real-status energy for this state at alpha=" << fmt17(o.alpha)
                  << " (" << hul_last_error() << ")\n"
                  << "threshold: alpha=" << fmt17(thresh) << " for n=" << fmt17(n_principal)
                  << ", D=" << dims[0] << " (Z=mu0=1 scale)\n";
        return EXIT_USAGE;
    }
    check(st, "wavefunction");
    std::unique_ptr<hul_wavefn, decltype(&hul_wavefn_destroy)> wp(w, hul_wavefn_destroy);

    const std::size_t n = hul_wavefn_size(w);
    std::vector<double> r(n), F(n), G(n);
    check(hul_wavefn_copy(w, r.data(), F.data(), G.data()), "wavefunction copy");
    double E = 0.0, C = 0.0, eps = 0.0, del = 0.0;
    check(hul_wavefn_info(w, &E, &C, &eps, &del), "wavefunction info");

    Table t;
    t.columns = {"r", "F", "G"};
    t.metadata = {{"command", "wavefunction"},
                  {"C", fmt17(C)},
                  {"epsilon", fmt17(eps)},
                  {"delta", fmt17(del)},
                  {"E", fmt17(E)},
                  {"Z", fmt17(o.Z)},
                  {"alpha", fmt17(o.alpha)},
                  {"mu0", fmt17(o.mu0)}};
    for (std::size_t i = 0; i < n; ++i)
        t.add_row({{"r", r[i]}, {"F", F[i]}, {"G", G[i]}});
    t.write(o, o.out);

    if (o.plot) {
        PlotCurve cf{"F(r)", {}}, cg{"G(r)", {}};
        for (std::size_t i = 0; i < n; ++i) {
            cf.points.emplace_back(r[i], F[i]);
            cg.points.emplace_back(r[i], G[i]);
        }
        const std::string svg = o.out == "-" ? "wavefunction.svg" : o.out + ".svg";
        write_svg(svg, "r", "component", {cf, cg});
    }
    return 0;
}

int cmd_scan(const Options& o) {
    const auto nrs = parse_int_list(o.nr, "--nr");
    const auto ells = parse_int_list(o.ell, "--ell");
    const FormulaRequest fr{o.formula, parse_branch(o.branch)};

    Table t;
    t.columns = {"label", "x", "energy", "radicand", "status"};
    t.metadata = {{"command", "scan"}, {"axis", o.axis}, {"formula", o.formula},
                  {"Z", fmt17(o.Z)},   {"mu0", fmt17(o.mu0)}};
    std::vector<PlotCurve> curves;

    if (o.axis == "alpha") {
        const auto grid = materialize(parse_grid(o.grid, {1e-3, 1.5, 512, true}));
        const auto dims = parse_int_list(o.dim, "--dim");
        for (int D : dims)
            for (int ell : ells)
                for (int nr : nrs) {
                    std::ostringstream label;
                    label << o.formula << " nr=" << nr << " l=" << ell << " D=" << D;
                    PlotCurve curve{label.str(), {}};
                    for (double a : grid) {
                        const auto e = eval_energy(fr, o, a, nr, ell, D);
                        t.add_row({{"label", label.str()},
                                   {"x", a},
                                   {"energy", e.is_real ? json(e.value) : json()},
                                   {"radicand", e.radicand},
                                   {"status", e.is_real ? "real" : "imaginary"}});
                        curve.points.emplace_back(a, e.is_real ? e.value : NAN);
                    }
                    curves.push_back(std::move(curve));
                }
    } else if (o.axis == "dim") {
        if (fr.formula != "kg-simplified" && fr.formula != "dirac-simplified")
            throw cli_error(EXIT_USAGE, "scan --axis dim needs a simplified formula (continuous D)");
        const auto grid = materialize(parse_grid(o.grid, {2.0, 12.0, 256, false}));
        for (int ell : ells)
            for (int nr : nrs) {
                const int n = nr + ell + 1;
                std::ostringstream label;
                label << o.formula << " n=" << n << " alpha=" << o.alpha;
                PlotCurve curve{label.str(), {}};
                for (double D : grid) {
                    hul_energy e{};
                    if (fr.formula == "kg-simplified")
                        check(hul_kg_energy_simplified(n, D, o.alpha, &e), "kg-simplified energy");
                    else
                        check(hul_dirac_energy_simplified(n, D, o.alpha, &e),
                              "dirac-simplified energy");
                    t.add_row({{"label", label.str()},
                               {"x", D},
                               {"energy", e.is_real ? json(e.value) : json()},
                               {"radicand", e.radicand},
                               {"status", e.is_real ? "real" : "imaginary"}});
                    curve.points.emplace_back(D, e.is_real ? e.value : NAN);
                }
                curves.push_back(std::move(curve));
            }
    } else {
        throw cli_error(EXIT_USAGE, "--axis: want 'alpha' or 'dim', got '" + o.axis + "'");
    }

    t.write(o, o.out);
    if (o.plot) {
        const std::string svg = o.out == "-" ? "scan.svg" : o.out + ".svg";
        write_svg(svg, o.axis == "alpha" ? "alpha" : "D", "E", curves);
    }
    return 0;
}

int cmd_intersect(const Options& o) {
    hul_source src;
    if (o.formula == "kg-simplified")
        src = HUL_SOURCE_KG_SIMPLIFIED;
    else if (o.formula == "dirac-simplified")
        src = HUL_SOURCE_DIRAC_SIMPLIFIED;
    else
        throw cli_error(EXIT_USAGE, "intersect: --formula must be kg-simplified or dirac-simplified");

    // Curves are (n, D) pairs built from the nr/ell/dim selectors: every
    // distinct (n = nr+ell+1, D) combination, compared pairwise.
    const auto nrs = parse_int_list(o.nr, "--nr");
    const auto ells = parse_int_list(o.ell, "--ell");
    const auto dims = parse_int_list(o.dim, "--dim");
    std::vector<std::pair<int, int>> levels;
    for (int nr : nrs)
        for (int ell : ells)
            for (int D : dims) {
                const std::pair<int, int> lev{nr + ell + 1, D};
                bool dup = false;
                for (const auto& l : levels) dup |= l == lev;
                if (!dup) levels.push_back(lev);
            }
    if (levels.size() < 2)
        throw cli_error(EXIT_USAGE, "intersect: selectors must produce at least two distinct levels");

    const auto grid = parse_grid(o.grid, {1e-3, 1.5, 512, true});

    Table t;
    t.columns = {"n_a", "D_a", "n_b", "D_b", "alpha_star", "energy", "gap"};
    t.metadata = {{"command", "intersect"},
                  {"formula", o.formula},
                  {"alpha_lo", fmt17(grid.lo)},
                  {"alpha_hi", fmt17(grid.hi)}};
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t j = i + 1; j < levels.size(); ++j) {
            double a_star[32], energy[32];
            size_t found = 0;
            const hul_status st = hul_intersections_simplified(
                src, levels[i].first, levels[i].second, levels[j].first, levels[j].second, grid.lo,
                grid.hi, grid.n, a_star, energy, 32, &found);
            if (st == HUL_ERR_INVALID) continue;  // identical curves: nothing to report
            check(st, "intersect");
            for (size_t k = 0; k < found && k < 32; ++k) {
                hul_energy ea{}, eb{};
                if (src == HUL_SOURCE_KG_SIMPLIFIED) {
                    check(hul_kg_energy_simplified(levels[i].first, levels[i].second, a_star[k], &ea),
                          "kg-simplified energy");
                    check(hul_kg_energy_simplified(levels[j].first, levels[j].second, a_star[k], &eb),
                          "kg-simplified energy");
                } else {
                    check(hul_dirac_energy_simplified(levels[i].first, levels[i].second, a_star[k],
                                                      &ea),
                          "dirac-simplified energy");
                    check(hul_dirac_energy_simplified(levels[j].first, levels[j].second, a_star[k],
                                                      &eb),
                          "dirac-simplified energy");
                }
                t.add_row({{"n_a", levels[i].first},
                           {"D_a", levels[i].second},
                           {"n_b", levels[j].first},
                           {"D_b", levels[j].second},
                           {"alpha_star", a_star[k]},
                           {"energy", energy[k]},
                           {"gap", std::fabs(ea.value - eb.value)}});
            }
        }
    t.write(o, o.out);
    return 0;
}

int cmd_threshold(const Options& o) {
    const auto nrs = parse_int_list(o.nr, "--nr");
    const auto ells = parse_int_list(o.ell, "--ell");
    const auto dims = parse_int_list(o.dim, "--dim");

    hul_threshold_kind kind;
    if (o.formula == "kg" || o.formula == "kg-simplified")
        kind = HUL_THRESHOLD_KG;
    else if (o.formula == "dirac" || o.formula == "dirac-simplified")
        kind = HUL_THRESHOLD_DIRAC;
    else
        throw cli_error(EXIT_USAGE, "threshold: --formula must name a kg or dirac family");

    Table t;
    t.columns = {"n", "D", "alpha_threshold"};
    t.metadata = {{"command", "threshold"},
                  {"kind", kind == HUL_THRESHOLD_KG ? "kg" : "dirac"}};
    for (int D : dims)
        for (int ell : ells)
            for (int nr : nrs) {
                const int n = nr + ell + 1;
                double a = 0.0;
                check(hul_alpha_threshold(kind, n, D, &a), "threshold");
                t.add_row({{"n", n}, {"D", D}, {"alpha_threshold", a}});
            }
    t.write(o, o.out);
    return 0;
}

std::string out_prefix(const Options& o) {
    if (o.out == "-") return "";
    return o.out.back() == '/' ? o.out : o.out + "/";
}

int cmd_figures(const Options& o) {
    const std::string prefix = out_prefix(o);
    const double d_axis_alpha = o.alpha_given ? o.alpha : 1e-6;

    // fig1/fig2: E vs alpha for some dimensions and excited states.
    // fig3/fig4: E vs continuous D for n = 3, 4, 5.
    struct FigSpec {
        std::string name;
        bool dirac;
        bool vs_alpha;
    };
    const FigSpec figs[] = {{"fig1", false, true},
                            {"fig2", true, true},
                            {"fig3", false, false},
                            {"fig4", true, false}};
    for (const auto& fig : figs) {
        Table t;
        t.columns = {"label", "x", "energy", "status"};
        t.metadata = {{"command", "figures"},
                      {"figure", fig.name},
                      {"formula", fig.dirac ? "dirac-simplified" : "kg-simplified"},
                      {"axis", fig.vs_alpha ? "alpha" : "D"}};
        if (!fig.vs_alpha) t.metadata["alpha"] = fmt17(d_axis_alpha);
        std::vector<PlotCurve> curves;

        if (fig.vs_alpha) {
            const auto grid = materialize(parse_grid(o.grid, {1e-3, 1.5, 512, true}));
            for (int D : {3, 4, 5})
                for (int n : {2, 3}) {
                    std::ostringstream label;
                    label << "n=" << n << " D=" << D;
                    PlotCurve curve{label.str(), {}};
                    for (double a : grid) {
                        hul_energy e{};
                        if (fig.dirac)
                            check(hul_dirac_energy_simplified(n, D, a, &e), "dirac-simplified");
                        else
                            check(hul_kg_energy_simplified(n, D, a, &e), "kg-simplified");
                        t.add_row({{"label", label.str()},
                                   {"x", a},
                                   {"energy", e.is_real ? json(e.value) : json()},
                                   {"status", e.is_real ? "real" : "imaginary"}});
                        curve.points.emplace_back(a, e.is_real ? e.value : NAN);
                    }
                    curves.push_back(std::move(curve));
                }
        } else {
            const auto grid = materialize(parse_grid(o.grid, {2.0, 12.0, 256, false}));
            for (int n : {3, 4, 5}) {
                std::ostringstream label;
                label << "n=" << n;
                PlotCurve curve{label.str(), {}};
                for (double D : grid) {
                    hul_energy e{};
                    if (fig.dirac)
                        check(hul_dirac_energy_simplified(n, D, d_axis_alpha, &e),
                              "dirac-simplified");
                    else
                        check(hul_kg_energy_simplified(n, D, d_axis_alpha, &e), "kg-simplified");
                    t.add_row({{"label", label.str()},
                               {"x", D},
                               {"energy", e.is_real ? json(e.value) : json()},
                               {"status", e.is_real ? "real" : "imaginary"}});
                    curve.points.emplace_back(D, e.is_real ? e.value : NAN);
                }
                curves.push_back(std::move(curve));
            }
        }

        const std::string ext = o.format == "json" ? ".json" : ".csv";
        t.write(o, prefix + fig.name + ext);
        if (o.plot)
            write_svg(prefix + fig.name + ".svg", fig.vs_alpha ? "alpha" : "D", "E", curves);
    }
    return 0;
}

int cmd_verify(const Options& o) {
    const std::string prefix = out_prefix(o);
    bool ok = true;
    json summary;
    summary["checks"] = json::array();
    const auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        summary["checks"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
        std::cout << (pass ? "PASS" : "FAIL") << " " << name << ": " << detail << "\n";
        ok = ok && pass;
    };

    // 1. Oracle vs closed form on the default fixture set.
    struct Fixture {
        int nr, ell, D;
    };
    const Fixture fixtures[] = {{0, 0, 3}, {1, 0, 3}, {0, 1, 3}, {0, 0, 4}};
    json oracle_report = json::array();
    for (const auto& fx : fixtures) {
        auto model = make_model(o);
        auto state = make_state(fx.nr, fx.ell, fx.D, HUL_UNALIGNED);
        hul_energy closed{};
        check(hul_dirac_energy(state.get(), model.get(), HUL_BRANCH_MINUS, &closed), "dirac energy");

        hul_energy found_e[8];
        int found_nodes[8];
        int found = 0;
        char diag[256] = {0};
        check(hul_oracle_find(state.get(), model.get(), HUL_CENTRIFUGAL_APPROXIMATED, 8, found_e,
                              found_nodes, &found, diag, sizeof(diag)),
              "oracle");

        json row{{"n_r", fx.nr}, {"ell", fx.ell},  {"D", fx.D},
                 {"alpha", o.alpha}, {"diagnostic", diag}, {"oracle_count", found}};
        row["E_closed_form"] = closed.is_real ? json(closed.value) : json();
        std::ostringstream name;
        name << "oracle-agreement nr=" << fx.nr << " l=" << fx.ell << " D=" << fx.D;
        std::optional<double> match;
        for (int i = 0; i < found; ++i)
            if (found_nodes[i] == fx.nr) match = found_e[i].value;
        if (match) row["E_oracle"] = *match;
        if (closed.is_real && match) {
            const double gap = std::fabs(*match - closed.value);
            row["gap"] = gap;
            record(name.str(), gap < 1e-6,
                   "closed=" + fmt17(closed.value) + " oracle=" + fmt17(*match) +
                       " gap=" + fmt17(gap));
        } else {
            record(name.str(), false,
                   std::string(closed.is_real ? "closed-form real" : "closed-form imaginary") +
                       ", oracle found " + std::to_string(found) + " eigenvalue(s); " + diag);
        }
        oracle_report.push_back(std::move(row));
    }

    // 2. Claimed-equivalent formula pairs.
    char* cons_json = nullptr;
    check(hul_consistency_report_json(&cons_json), "consistency report");
    const json cons = json::parse(cons_json);
    hul_string_free(cons_json);
    for (const char* key : {"kg_pair", "dirac_pair_n_from_ell", "dirac_pair_n_from_kappa"}) {
        const auto& fit = cons.at(key);
        const double ratio = fit.at("fitted_ratio").get<double>();
        const bool constant = fit.at("constant_ratio").get<bool>();
        const bool pass = constant && std::fabs(ratio - 1.0) < 1e-9;
        record(std::string("formula-pair ") + key,
               pass,
               "fitted_ratio=" + fmt17(ratio) + " max_deviation=" +
                   fmt17(fit.at("max_deviation").get<double>()) +
                   (constant ? " (constant)" : " (not constant)"));
    }

    // 3. Approximation-error report (informational rows + written file).
    auto model = make_model(o);
    const int nr[] = {0, 1};
    const int ell[] = {0, 0};
    const int dim[] = {3, 3};
    const double alphas[] = {o.alpha};
    char* approx_json = nullptr;
    check(hul_approximation_report_json(model.get(), nr, ell, dim, 2, alphas, 1, &approx_json),
          "approximation report");
    const json approx = json::parse(approx_json);
    hul_string_free(approx_json);

    const auto write_json = [&](const std::string& name, const json& j) {
        OutputFile sink(prefix.empty() ? name : prefix + name);
        *sink.os << j.dump(2) << "\n";
        sink.finish(name);
    };
    write_json("oracle_report.json", oracle_report);
    write_json("consistency_report.json", cons);
    write_json("approximation_report.json", approx);
    summary["pass"] = ok;
    write_json("verify_summary.json", summary);

    if (!ok) {
        std::cout << "verification failed\n";
        return EXIT_VERIFY;
    }
    std::cout << "verification passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound-state energies and spinor wavefunctions of the D-dimensional "
                 "Dirac/Klein-Gordon equations with a screened (Hulthen) potential and "
                 "position-dependent mass"};
    app.fallthrough();

    Options o;
    app.add_option("--Z", o.Z, "potential strength (> 0)");
    auto* alpha_opt = app.add_option("--alpha", o.alpha, "screening parameter (> 0)");
    app.add_option("--mu0", o.mu0, "mass integration constant (>= 0)");
    app.add_option("--nr", o.nr, "radial quantum number list, e.g. 0,1 or 0-3");
    app.add_option("--ell", o.ell, "orbital quantum number list");
    app.add_option("--dim", o.dim, "spatial dimension list");
    app.add_option("--alignment", o.alignment, "spin alignment: aligned|unaligned");
    app.add_option("--branch", o.branch, "energy branch: plus|minus");
    app.add_option("--delta-policy", o.delta_policy, "exponent policy: default|literal");
    app.add_option("--formula", o.formula,
                   "dirac|kg|coulomb|kg-simplified|dirac-simplified");
    app.add_option("--grid", o.grid, "scan grid lo:hi:n[:log|lin]; wavefunction: point count");
    app.add_option("--format", o.format, "output format: csv|json");
    app.add_flag("--plot", o.plot, "also write SVG plots");
    app.add_option("--out", o.out, "output file ('-' = stdout) or directory prefix");
    app.add_option("--axis", o.axis, "scan axis: alpha|dim");
    app.set_config("--config", "", "flat key=value config file")->envname("HULTHEN_CONFIG");

    app.require_subcommand(1);
    auto* spectrum = app.add_subcommand("spectrum", "closed-form energy table");
    auto* wavefunction = app.add_subcommand("wavefunction", "normalized (r, F, G) samples");
    auto* scan = app.add_subcommand("scan", "energy curve against alpha or D");
    auto* intersect = app.add_subcommand("intersect", "level crossings between curves");
    auto* threshold = app.add_subcommand("threshold", "alpha beyond which energies turn imaginary");
    auto* verify = app.add_subcommand("verify", "closed form vs numerical oracle; exit 4 on failure");
    auto* figures = app.add_subcommand("figures", "write fig1..fig4 data (and plots)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_USAGE;
    }

    o.alpha_given = alpha_opt->count() > 0;

    try {
        if (*spectrum) return cmd_spectrum(o);
        if (*wavefunction) return cmd_wavefunction(o);
        if (*scan) return cmd_scan(o);
        if (*intersect) return cmd_intersect(o);
        if (*threshold) return cmd_threshold(o);
        if (*verify) return cmd_verify(o);
        if (*figures) return cmd_figures(o);
    } catch (const cli_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
