#include "esa/cli.hpp"

#include "esa/config.hpp"
#include "esa/frobenius.hpp"
#include "esa/oracles.hpp"
#include "esa/parallel.hpp"
#include "esa/serialize.hpp"
#include "esa/selfadjoint.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace esa {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(std::complex<double> z) {
    if (z.imag() == 0) return fmt(z.real());
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

std::string cell(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Rational rational_arg(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError&) {
        throw UsageError("malformed rational for " + name + ": '" + text + "'");
    }
}

Json certification(const Config& cfg, std::optional<long> precision_used, int lmax, const std::string& oracle) {
    Json ladder = Json::array();
    for (auto b : cfg.precision_ladder) ladder.push_back(static_cast<long>(b));
    return Json{{"precision_ladder", ladder},
                {"max_precision_bits", static_cast<long>(cfg.max_precision_bits)},
                {"precision_used", precision_used ? Json(*precision_used) : Json(nullptr)},
                {"lmax", lmax},
                {"oracle", oracle}};
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string oracle_status(const std::optional<bool>& agrees, bool applicable) {
    if (!applicable) return "not applicable";
    if (!agrees) return "unavailable";
    return *agrees ? "agrees" : "disagrees";
}

// ---- decide

struct DecideArgs {
    int m = 0, n = 0, l = 0;
    std::string c;
    bool json = false;
};

int cmd_decide(const DecideArgs& a, const Config& cfg, std::ostream& out) {
    IndicialSpec spec{a.m, a.n, a.l, rational_arg("--c", a.c)};
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    EsaVerdict v = esa_decide_radial(spec, cfg);
    if (a.json) {
        Json input{{"m", a.m}, {"n", a.n}, {"l", a.l}, {"c", to_string(spec.c)}};
        std::optional<long> used;
        if (v.count.precision > 0) used = static_cast<long>(v.count.precision);
        print_json(out, envelope("decide", input, to_json(v), certification(cfg, used, a.l, "not applicable")));
    } else {
        out << to_string(v.verdict) << '\n';
        out << "spec: m=" << a.m << " n=" << a.n << " l=" << a.l << " c=" << to_string(spec.c) << '\n';
        out << "roots with Re < -1/2: " << v.count.left << ", on Re = -1/2: " << v.count.axis
            << ", with Re > -1/2: " << v.count.right << '\n';
        out << "hurwitz determinant: " << to_string(v.det_h) << '\n';
        out << "roots on the line: " << v.axis.count() << '\n';
        out << "precision: " << (v.count.precision > 0 ? std::to_string(v.count.precision) + " bits" : "exact")
            << '\n';
    }
    return v.verdict == Verdict::ESA ? kExitOk : kExitNotEsa;
}

// ---- region

struct RegionArgs {
    int m = 0, n = 0, l = 0;
    bool all_l = false;
    int lmax = -1;
    int digits = 5;
    bool json = false;
};

int cmd_region(const RegionArgs& a, Config cfg, std::ostream& out) {
    if (a.m < 1 || a.n < 2 || a.l < 0) throw UsageError("region: need m >= 1, n >= 2, l >= 0");
    if (a.digits < 1 || a.digits > 60) throw UsageError("region: --digits must be in 1..60");
    if (a.lmax >= 0) cfg.lmax = a.lmax;
    EsaRegion r = a.all_l ? esa_region_full(a.m, a.n, cfg.lmax, cfg) : esa_region_radial(a.m, a.n, a.l, cfg);
    if (a.json) {
        Json input{{"m", a.m}, {"n", a.n}, {"digits", a.digits}};
        if (a.all_l)
            input["lmax"] = cfg.lmax;
        else
            input["l"] = a.l;
        int lmax = a.all_l ? cfg.lmax : a.l;
        print_json(out, envelope("region", input, to_json(r, a.digits),
                                 certification(cfg, std::nullopt, lmax, oracle_status(r.oracle_agrees, a.all_l))));
        return kExitOk;
    }
    out << render(r.set, a.digits) << '\n';
    out << "mode: " << to_string(r.mode);
    if (a.all_l) {
        out << " (l <= " << r.certified_up_to_l << ", oracle " << oracle_status(r.oracle_agrees, true) << ")";
    } else {
        out << " (l = " << a.l << ")";
    }
    out << '\n';
    out << "boundary candidates:";
    if (r.boundary_candidates.empty()) out << " none";
    out << '\n';
    for (const auto& c : r.boundary_candidates)
        out << "  c = " << c.value.to_decimal(a.digits) << " (l = " << c.l << ", multiplicity " << c.multiplicity
            << ")\n";
    out << "indeterminate:";
    if (r.indeterminate.empty()) out << " none";
    out << '\n';
    for (const auto& c : r.indeterminate) out << "  c = " << c.value.to_decimal(a.digits) << " (l = " << c.l << ")\n";
    return kExitOk;
}

// ---- table

struct TableArgs {
    std::string which;
    std::string golden;
    bool json = false;
};

std::vector<std::string> read_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read golden file " + path);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

int cmd_table(const TableArgs& a, const Config& cfg, std::ostream& out) {
    Json rows = Json::array();
    std::vector<std::string> diff;
    if (a.which == "gamma2") {
        std::vector<Rational> golden = table1_golden();
        if (!a.golden.empty()) {
            golden.clear();
            for (const auto& t : read_tokens(a.golden)) golden.push_back(rational_arg("golden entry", t));
            if (golden.size() != 11) throw UsageError("gamma2 golden file needs 11 entries");
        }
        auto engine = parallel_map(11, [&](std::size_t i) {
            auto g = gamma_threshold(2, static_cast<int>(i) + 2, 0, cfg);
            if (!g) throw std::runtime_error("gamma2: ESA for every c");
            auto q = g->value.as_rational();
            if (!q) throw std::runtime_error("gamma2: irrational threshold");
            return *q;
        });
        std::string head = "n", vals = "gamma";
        for (std::size_t i = 0; i < 11; ++i) {
            int n = static_cast<int>(i) + 2;
            head += "\t" + std::to_string(n);
            vals += "\t" + to_string(engine[i]);
            rows.push_back(Json{{"n", n}, {"gamma", to_string(engine[i])}});
            if (engine[i] != golden[i])
                diff.push_back("n=" + std::to_string(n) + ": engine " + to_string(engine[i]) + ", golden " +
                               to_string(golden[i]));
        }
        if (!a.json) out << head << '\n' << vals << '\n';
    } else if (a.which == "signs520") {
        std::array<std::string, 3> golden = table2_golden();
        if (!a.golden.empty()) {
            auto t = read_tokens(a.golden);
            if (t.size() != 3) throw UsageError("signs520 golden file needs 3 rows");
            for (std::size_t i = 0; i < 3; ++i) golden[i] = t[i];
        }
        auto invariants = parallel_map(31, [](std::size_t l) {
            return quartic_classify(hurwitz_assemble(5, 20, static_cast<int>(l)).q_factor);
        });
        auto sign_char = [](const Rational& q) { return sign(q) > 0 ? '+' : sign(q) < 0 ? '-' : '0'; };
        std::array<std::string, 3> engine;
        for (const auto& inv : invariants) {
            engine[0] += sign_char(inv.disc);
            engine[1] += sign_char(inv.pi);
            engine[2] += sign_char(inv.lambda);
        }
        const char* names[3] = {"Disc", "Pi", "Lambda"};
        for (std::size_t i = 0; i < 3; ++i) {
            rows.push_back(Json{{"quantity", names[i]}, {"signs", engine[i]}});
            if (!a.json) out << names[i] << '\t' << engine[i] << '\n';
            if (engine[i] != golden[i]) {
                std::string line = std::string(names[i]) + ": engine " + engine[i] + ", golden " + golden[i];
                diff.push_back(line);
            }
        }
    } else {
        throw UsageError("table: --which must be gamma2 or signs520");
    }
    if (a.json) {
        Json input{{"which", a.which}, {"golden", a.golden.empty() ? Json("embedded") : Json(a.golden)}};
        Json result{{"which", a.which}, {"rows", rows}, {"matches_golden", diff.empty()}, {"diff", diff}};
        print_json(out, envelope("table", input, result, certification(cfg, std::nullopt, 0, "not applicable")));
    } else if (!diff.empty()) {
        out << "mismatch against golden data:\n";
        for (const auto& d : diff) out << "  " << d << '\n';
    }
    return diff.empty() ? kExitOk : kExitGoldenMismatch;
}

// ---- figure

struct FigureArgs {
    std::string which;
    std::string c1;
    std::string out;
    bool json = false;
};

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path.string());
    return f;
}

long figure1(const Rational& c1, const std::filesystem::path& path) {
    Rational t0 = c1 >= Rational(-11, 4) ? Rational(45 + 12 * c1 + c1 * c1) : Rational(-(105 + 152 * c1) / 16);
    Rational start = Rational(floor(t0)) - 50;
    std::vector<Rational> grid;
    for (int i = 0; i <= 400; ++i) grid.push_back(start + ratio(i, 4));
    auto roots = parallel_map(grid.size(), [&](std::size_t i) {
        ClosedFormRoots r = quartic_roots_closed_form({c1, grid[i]}, 256);
        std::array<double, 4> re{};
        for (std::size_t j = 0; j < 4; ++j) re[j] = r.alpha[j].re.to_double();
        return re;
    });
    auto f = open_csv(path);
    f << "c2,re_alpha1,re_alpha2,re_alpha3,re_alpha4,red_j\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        f << to_string(grid[i]);
        for (double v : roots[i]) f << ',' << cell(v);
        f << ",2\n";
    }
    return static_cast<long>(grid.size());
}

long figure2(const std::filesystem::path& path) {
    auto f = open_csv(path);
    f << "locus,k,c1,c2,esa_flag\n";
    long rows = 0;
    for (const auto& s : figure2_data()) {
        f << s.locus << ',' << s.k << ',' << to_string(s.c1) << ',' << to_string(s.c2) << ',' << (s.esa ? 1 : 0)
          << '\n';
        ++rows;
    }
    return rows;
}

long figure3(const Config& cfg, const std::filesystem::path& path) {
    std::vector<Rational> grid;
    for (int i = 0; i <= 300; ++i) grid.push_back(Rational(-5000000000) + Rational(100000000) * i);
    struct Task {
        int l;
        std::size_t g;
    };
    std::vector<Task> tasks;
    for (int l = 0; l <= 4; ++l)
        for (std::size_t g = 0; g < grid.size(); ++g) tasks.push_back({l, g});
    auto solved = parallel_map(tasks.size(), [&](std::size_t i) {
        IndicialSpec spec{5, 20, tasks[i].l, grid[tasks[i].g]};
        return certified_roots(build_indicial(spec), cfg.precision_ladder.front(), cfg.max_precision_bits);
    });
    auto f = open_csv(path);
    f << "l,c,j,re,im,radius,red\n";
    long rows = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        int j = 0;
        for (const auto& r : solved[i].roots)
            for (int k = 0; k < r.multiplicity; ++k) {
                ++j;
                bool red = tasks[i].l == 0 && j == 5;
                f << tasks[i].l << ',' << to_string(grid[tasks[i].g]) << ',' << j << ',' << cell(r.center.re.to_double())
                  << ',' << cell(r.center.im.to_double()) << ',' << cell(r.radius.to_double()) << ',' << (red ? 1 : 0)
                  << '\n';
                ++rows;
            }
    }
    return rows;
}

int cmd_figure(const FigureArgs& a, const Config& cfg, std::ostream& out) {
    namespace fs = std::filesystem;
    fs::path dir(a.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UsageError("cannot create " + a.out + ": " + ec.message());
    fs::path file = dir / (a.which + ".csv");
    long rows = 0;
    Json input{{"which", a.which}, {"out", a.out}};
    if (a.which == "fig1") {
        if (a.c1.empty()) throw UsageError("figure fig1 needs --c1");
        Rational c1 = rational_arg("--c1", a.c1);
        input["c1"] = to_string(c1);
        rows = figure1(c1, file);
    } else if (a.which == "fig2") {
        rows = figure2(file);
    } else if (a.which == "fig3") {
        rows = figure3(cfg, file);
    } else {
        throw UsageError("figure: --which must be fig1, fig2 or fig3");
    }
    if (a.json) {
        Json result{{"which", a.which}, {"files", Json::array({Json{{"path", file.string()}, {"rows", rows}}})}};
        print_json(out, envelope("figure", input, result, certification(cfg, std::nullopt, 0, "not applicable")));
    } else {
        out << "wrote " << file.string() << " (" << rows << " rows)\n";
    }
    return kExitOk;
}

// ---- basis

struct BasisArgs {
    std::string c1, c2;
    std::string lambda = "1";
    bool json = false;
};

std::string side_text(Side s) {
    switch (s) {
        case Side::Above: return "above pivot";
        case Side::Pivot: return "at pivot";
        case Side::Below: return "below pivot";
    }
    return "";
}

int cmd_basis(const BasisArgs& a, const Config& cfg, std::ostream& out) {
    Rational c1 = rational_arg("--c1", a.c1);
    Rational c2 = rational_arg("--c2", a.c2);
    Rational lre = 0, lim = 0;
    auto comma = a.lambda.find(',');
    lre = rational_arg("--lambda", a.lambda.substr(0, comma));
    if (comma != std::string::npos) lim = rational_arg("--lambda", a.lambda.substr(comma + 1));
    BasisSelection s = select_fundamental_system(c1, c2, {lre.get_d(), lim.get_d()});
    if (a.json) {
        Json input{{"c1", to_string(c1)}, {"c2", to_string(c2)}, {"lambda", {{"re", to_string(lre)}, {"im", to_string(lim)}}}};
        print_json(out, envelope("basis", input, to_json(s), certification(cfg, 256L, 0, "not applicable")));
        return kExitOk;
    }
    out << "case: " << to_string(s.tag) << '\n';
    out << "memberships:";
    if (s.classification.generic()) out << " none";
    out << '\n';
    for (const auto& m : s.classification.memberships)
        out << "  " << (m.locus == Locus::Line ? "L_" : "P_") << m.k << " (" << side_text(m.side) << "): " << m.relation
            << '\n';
    for (std::size_t j = 0; j < 4; ++j) out << "alpha" << j + 1 << " = " << fmt(s.alpha[j]) << '\n';
    if (s.solutions.empty()) {
        out << "solutions: pattern not covered by the displayed cases\n";
        return kExitOk;
    }
    out << "solutions:\n";
    int i = 0;
    for (const auto& d : s.solutions) {
        out << "  y" << ++i << ": ";
        std::string arg = std::string(d.argument_sign < 0 ? "-" : "") + "lambda r^4/256";
        if (d.kind == SolutionKind::SeriesF03) {
            out << "r^alpha" << d.exponent << " 0F3(";
            for (std::size_t k = 0; k < d.order.size(); ++k)
                out << (k ? ", " : "") << "1+(alpha" << d.exponent << "-alpha" << d.order[k] << ")/4";
            out << "; " << arg << ")";
        } else {
            out << to_string(d.kind) << "[";
            for (std::size_t k = 0; k < d.order.size(); ++k) out << (k ? "," : "") << d.order[k];
            out << "](" << arg << ")";
        }
        out << "  parameters:";
        for (const auto& p : d.parameters) out << ' ' << fmt(p);
        out << '\n';
    }
    return kExitOk;
}

// ---- conjecture

struct ConjectureArgs {
    int m_max = 6;
    bool json = false;
};

int cmd_conjecture(const ConjectureArgs& a, const Config& cfg, std::ostream& out) {
    if (a.m_max < 1 || a.m_max > cfg.conjecture_m_max)
        throw UsageError("conjecture: --m-max must be in 1.." + std::to_string(cfg.conjecture_m_max));
    auto rows = conjecture_explore(a.m_max, cfg);
    if (a.json) {
        Json result = Json::array();
        for (const auto& r : rows) result.push_back(to_json(r));
        print_json(out, envelope("conjecture", Json{{"m_max", a.m_max}}, result,
                                 certification(cfg, std::nullopt, 0, "not applicable")));
        return kExitOk;
    }
    out << "m\tgamma_{m,3,0}\t(2m^2/pi)^{2m}\tlog ratio\n";
    for (const auto& r : rows) {
        auto q = r.gamma.as_rational();
        out << r.m << '\t' << (q ? to_string(*q) : r.gamma.to_decimal(12)) << '\t' << fmt(r.asymptotic) << '\t'
            << fmt(r.log_ratio) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Essential self-adjointness of ((-Delta)^m + c|x|^{-2m}) on C_0^inf(R^n \\ {0})", "esa"};
    app.require_subcommand(1);
    bool timing = false;
    long max_bits = 0;
    app.add_flag("--timing", timing, "Print elapsed time to stderr");
    app.add_option("--max-bits", max_bits, "Hard precision limit in bits");

    DecideArgs da;
    auto* decide = app.add_subcommand("decide", "ESA verdict for one radial problem");
    decide->add_option("--m", da.m, "Power of the Laplacian")->required();
    decide->add_option("--n", da.n, "Dimension")->required();
    decide->add_option("--l", da.l, "Harmonic degree");
    decide->add_option("--c", da.c, "Coupling constant (integer, p/q or decimal)")->required();
    decide->add_flag("--json", da.json);

    RegionArgs ra;
    auto* region = app.add_subcommand("region", "ESA region in c");
    region->add_option("--m", ra.m)->required();
    region->add_option("--n", ra.n)->required();
    auto* opt_l = region->add_option("--l", ra.l, "Single harmonic degree");
    auto* opt_all = region->add_flag("--all-l", ra.all_l, "Intersect over l = 0..lmax");
    opt_l->excludes(opt_all);
    region->add_option("--lmax", ra.lmax, "Largest l for --all-l");
    region->add_option("--digits", ra.digits, "Significant digits in the rendering");
    region->add_flag("--json", ra.json);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Regenerate a table and compare with golden data");
    table->add_option("--which", ta.which, "gamma2 or signs520")->required();
    table->add_option("--golden", ta.golden, "Golden data file replacing the embedded copy");
    table->add_flag("--json", ta.json);

    FigureArgs fa;
    auto* figure = app.add_subcommand("figure", "Write figure data as CSV");
    figure->add_option("--which", fa.which, "fig1, fig2 or fig3")->required();
    figure->add_option("--c1", fa.c1, "c1 for fig1");
    figure->add_option("--out", fa.out, "Output directory")->required();
    figure->add_flag("--json", fa.json);

    BasisArgs ba;
    auto* basis = app.add_subcommand("basis", "Frobenius fundamental system of the fourth-order equation");
    basis->add_option("--c1", ba.c1)->required();
    basis->add_option("--c2", ba.c2)->required();
    basis->add_option("--lambda", ba.lambda, "Spectral parameter, 're' or 're,im'");
    basis->add_flag("--json", ba.json);

    ConjectureArgs ca;
    auto* conjecture = app.add_subcommand("conjecture", "gamma_{m,3,0} against (2m^2/pi)^{2m}");
    conjecture->add_option("--m-max", ca.m_max);
    conjecture->add_flag("--json", ca.json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Config cfg;
    try {
        cfg = config_from_environment();
    } catch (const std::exception& e) {
        err << "esa: " << e.what() << '\n';
        return kExitUsage;
    }
    if (max_bits > 0) cfg.max_precision_bits = max_bits;

    auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (decide->parsed()) code = cmd_decide(da, cfg, out);
        else if (region->parsed()) code = cmd_region(ra, cfg, out);
        else if (table->parsed()) code = cmd_table(ta, cfg, out);
        else if (figure->parsed()) code = cmd_figure(fa, cfg, out);
        else if (basis->parsed()) code = cmd_basis(ba, cfg, out);
        else code = cmd_conjecture(ca, cfg, out);
    } catch (const UsageError& e) {
        err << "esa: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "esa: " << e.what() << '\n';
        return kExitInternal;
    }
    if (timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        err << "elapsed: " << ms.count() << " ms\n";
    }
    return code;
}

}  // namespace esa
