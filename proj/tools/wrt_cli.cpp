// Command-line front end: MTC tables, invariant evaluation, level sweeps,
// phase spectra, Borel reports, and the consistency-check suites.

#include <omp.h>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrt/abelian.hpp"
#include "wrt/acceptance.hpp"
#include "wrt/borel.hpp"
#include "wrt/manifold_spec.hpp"
#include "wrt/mtc.hpp"
#include "wrt/spectrum.hpp"
#include "wrt/surgery.hpp"
#include "wrt/sweep.hpp"

namespace {

struct Config {
    unsigned precision = 30;
    std::string family = "su2";
    unsigned level = 1;
    std::string format = "json";
    int threads = 0;
    std::string output;
};

wrt::Family parse_family(const std::string& f) {
    if (f == "su2") return wrt::Family::su2;
    if (f == "u1") return wrt::Family::u1;
    throw std::runtime_error("family must be su2 or u1");
}

std::pair<int, int> parse_range(const std::string& r) {
    auto dots = r.find("..");
    if (dots == std::string::npos) {
        int k = std::stoi(r);
        return {k, k};
    }
    return {std::stoi(r.substr(0, dots)), std::stoi(r.substr(dots + 2))};
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw std::runtime_error("cannot write " + cfg.output);
    out << text;
}

std::string cx_str(std::complex<double> z, unsigned digits) {
    std::ostringstream o;
    o << std::setprecision(static_cast<int>(digits)) << z.real()
      << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return o.str();
}

wrt::MtcData make_mtc(const Config& cfg) {
    return parse_family(cfg.family) == wrt::Family::su2 ? wrt::mtc_su2(cfg.level)
                                                        : wrt::mtc_u1(cfg.level);
}

int cmd_mtc_table(const Config& cfg) {
    wrt::MtcData m = make_mtc(cfg);
    unsigned d = cfg.precision;
    if (cfg.format == "csv") {
        std::ostringstream o;
        o << std::setprecision(static_cast<int>(d));
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                auto v = m.s_unnorm[i][j].eval(d).to_complex() / m.total_dim(d);
                o << (j ? "," : "") << v.real() << (v.imag() < 0 ? "-" : "+")
                  << std::abs(v.imag()) << "i";
            }
            o << "\n";
        }
        emit(cfg, o.str());
        return 0;
    }
    nlohmann::json j;
    j["family"] = cfg.family;
    j["level"] = cfg.level;
    j["root_order"] = m.root_order;
    j["labels"] = m.labels;
    j["central_charge"] = m.central_charge.get_str();
    j["total_dim_sq"] = {{"exact", m.total_dim_sq.str()},
                         {"value", m.total_dim_sq.eval(d).to_complex().real()}};
    j["kappa"] = {{"unnormalized_exact", m.kappa_unnorm.str()},
                  {"value", cx_str(m.kappa(d), d)}};
    for (std::size_t i = 0; i < m.size(); ++i) {
        j["qdims"].push_back({{"exact", m.qdims[i].str()},
                              {"value", m.qdims[i].eval(d).to_complex().real()}});
        j["twists"].push_back({{"exact", m.twists[i].str()},
                               {"value", cx_str(m.twists[i].eval(d).to_complex(), d)}});
        j["t_diag"].push_back(cx_str(m.t_diag[i].eval(d).to_complex(), d));
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t jj = 0; jj < m.size(); ++jj)
            row.push_back({{"exact", m.s_unnorm[i][jj].str()},
                           {"value", cx_str(m.s_unnorm[i][jj].eval(d).to_complex() / m.total_dim(d), d)}});
        j["s_matrix"].push_back(row);
    }
    wrt::FusionTensor f = wrt::fusion(m, d);
    for (std::size_t i = 0; i < m.size(); ++i) {
        nlohmann::json plane = nlohmann::json::array();
        for (std::size_t jj = 0; jj < m.size(); ++jj) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t l = 0; l < m.size(); ++l) row.push_back(f.at(i, jj, l));
            plane.push_back(row);
        }
        j["fusion"].push_back(plane);
    }
    emit(cfg, j.dump(2));
    return 0;
}

int cmd_rt(const Config& cfg, const std::string& manifold, bool force_exact) {
    wrt::PlumbingGraph g = wrt::parse_manifold(manifold);
    wrt::Family fam = parse_family(cfg.family);
    bool exact = force_exact || cfg.level <= 16;

    wrt::RtResult r;
    std::string f_exact;
    if (exact) {
        wrt::MtcData m = make_mtc(cfg);
        f_exact = wrt::colored_sum_F(m, g).str();
        r = wrt::rt_invariant(m, g, cfg.precision);
    } else {
        r = wrt::rt_invariant_fp(wrt::tables_fp(fam, cfg.level), g);
    }

    if (cfg.format == "csv") {
        std::ostringstream o;
        o << "manifold,k,re,im,signature,b1,m\n"
          << manifold << "," << cfg.level << ","
          << std::setprecision(static_cast<int>(cfg.precision)) << r.z.real() << ","
          << r.z.imag() << "," << r.signature << "," << r.b1 << "," << r.m << "\n";
        emit(cfg, o.str());
        return 0;
    }
    nlohmann::json j;
    j["manifold"] = manifold;
    j["family"] = cfg.family;
    j["k"] = cfg.level;
    j["Z"] = cx_str(r.z, cfg.precision);
    j["signature"] = r.signature;
    j["b1"] = r.b1;
    j["components"] = r.m;
    if (!f_exact.empty()) j["F_exact"] = f_exact;
    emit(cfg, j.dump(2));
    return 0;
}

int cmd_check(const Config& cfg, const std::string& suite, bool verbose) {
    auto list = wrt::criteria_for_suite(suite);
    if (list.empty()) {
        std::cerr << "unknown suite '" << suite << "'; available:";
        for (const auto& c : wrt::acceptance_criteria()) std::cerr << " " << c.id;
        std::cerr << " all\n";
        return 2;
    }
    if (verbose && (suite == "modular" || suite == "all")) {
        std::cout << "# per-level modularity residuals (su2)\n"
                  << "# k  unitarity  symmetry  S^4  (ST)^3  |kappa|  arg-kappa\n";
        for (unsigned k = 1; k <= 16; ++k) {
            auto rep = wrt::check_modular(wrt::mtc_su2(k), cfg.precision);
            std::cout << "  " << k << "  " << rep.unitarity_defect << "  " << rep.symmetry_defect
                      << "  " << rep.s4_defect << "  " << rep.st3_residual << "  "
                      << rep.kappa_modulus_defect << "  " << rep.kappa_arg_defect << "\n";
        }
    }
    int failures = 0, warnings = 0;
    for (const auto* c : list) {
        wrt::CheckResult r = c->run();
        const char* tag = r.passed ? (r.warned ? "WARN" : "PASS") : "FAIL";
        std::cout << "[" << tag << "] " << c->id << ": " << r.detail << "\n";
        if (!r.passed) ++failures;
        if (r.warned) ++warnings;
    }
    std::cout << list.size() - failures << "/" << list.size() << " checks passed";
    if (warnings) std::cout << " (" << warnings << " warning" << (warnings > 1 ? "s" : "") << ")";
    std::cout << "\n";
    return failures ? 1 : 0;
}

int cmd_sweep(const Config& cfg, const std::string& manifold, const std::string& range,
              const std::string& norm) {
    auto [k0, k1] = parse_range(range);
    wrt::SweepNorm n = norm == "raw" ? wrt::SweepNorm::raw : wrt::SweepNorm::divided_by_s3;
    wrt::KSweep s =
        wrt::k_sweep(parse_family(cfg.family), wrt::parse_manifold(manifold), k0, k1, n);
    emit(cfg, wrt::sweep_to_csv(s, cfg.precision));
    return 0;
}

int cmd_spectrum(const Config& cfg, const std::string& input, const std::string& manifold,
                 const std::string& range, double threshold, unsigned snap_den) {
    wrt::KSweep s;
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot read " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        s = wrt::sweep_from_csv(buf.str());
    } else {
        if (manifold.empty()) throw std::runtime_error("spectrum: need --input or a manifold");
        auto [k0, k1] = parse_range(range);
        s = wrt::k_sweep(parse_family(cfg.family), wrt::parse_manifold(manifold), k0, k1,
                         wrt::SweepNorm::divided_by_s3);
    }
    if (snap_den == 0 && manifold.rfind("lens:", 0) == 0) {
        auto comma = manifold.find(',');
        unsigned p = std::stoul(manifold.substr(5, comma - 5));
        snap_den = 4 * p;
    }
    std::optional<unsigned> snap;
    if (snap_den > 0) snap = snap_den;
    wrt::PhaseSpectrum ps = wrt::phase_spectrum(s, threshold, snap);
    emit(cfg, wrt::spectrum_to_json(ps));
    return 0;
}

int cmd_abelian(const Config& cfg, const std::string& input) {
    if (cfg.level % 2 != 0) throw std::runtime_error("abelian: level must be even");
    wrt::IntMat b = wrt::parse_linking_input(input);
    wrt::HomologyData h = wrt::homology_data(b, cfg.level);
    auto zl = wrt::linking_form_invariant(b, cfg.level, cfg.precision);
    auto zs = wrt::u1_surgery_invariant(b, cfg.level, cfg.precision);
    nlohmann::json j;
    j["input"] = input;
    j["k"] = cfg.level;
    j["b1"] = h.b1;
    j["torsion"] = nlohmann::json::array();
    for (const auto& d : h.torsion) j["torsion"].push_back(d.get_str());
    j["h1_mod_k"] = nlohmann::json::array();
    for (const auto& d : h.h1_mod_k) j["h1_mod_k"].push_back(d.get_str());
    j["linking_form"] = nlohmann::json::array();
    for (const auto& row : h.linking_form) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        j["linking_form"].push_back(r);
    }
    j["Z_linking_form"] = cx_str(zl, cfg.precision);
    j["Z_u1_surgery"] = cx_str(zs, cfg.precision);
    emit(cfg, j.dump(2));
    return 0;
}

int cmd_borel(const Config& cfg, const std::string& synthetic, const std::string& coeff_file,
              unsigned n_terms, const std::string& cs_list) {
    wrt::FormalSeries s;
    s.variable = wrt::SeriesVariable::hbar;
    if (!synthetic.empty()) {
        std::complex<double> omega;
        if (synthetic == "factorial") omega = 1;
        else if (synthetic == "alt-factorial") omega = -1;
        else if (synthetic.rfind("planted:", 0) == 0) {
            auto rest = synthetic.substr(8);
            auto comma = rest.find(',');
            omega = {std::stod(rest.substr(0, comma)),
                     comma == std::string::npos ? 0.0 : std::stod(rest.substr(comma + 1))};
        } else {
            throw std::runtime_error("unknown synthetic series '" + synthetic + "'");
        }
        double fact = 1;
        std::complex<double> pw = 1;
        for (unsigned n = 0; n < n_terms; ++n) {
            if (n > 0) fact *= n;
            s.coeffs.push_back(fact / pw);
            pw *= omega;
        }
    } else if (!coeff_file.empty()) {
        std::ifstream in(coeff_file);
        if (!in) throw std::runtime_error("cannot read " + coeff_file);
        nlohmann::json j;
        in >> j;
        for (const auto& c : j.at("coeffs"))
            s.coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    } else {
        throw std::runtime_error("borel: need --synthetic or --coeffs");
    }
    wrt::BorelReport rep =
        wrt::borel_poles(s, std::min<unsigned>(n_terms, static_cast<unsigned>(s.coeffs.size())));
    std::vector<mpq_class> cs;
    if (!cs_list.empty()) {
        std::istringstream ls(cs_list);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            mpq_class q(tok);
            q.canonicalize();
            cs.push_back(q);
        }
    }
    auto matches = wrt::stokes_location_check(rep, cs);
    emit(cfg, wrt::borel_report_to_json(rep, matches));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"WRT invariants of plumbed 3-manifolds"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("WRT_PRECISION")) cfg.precision = std::stoul(env);
    app.add_option("--precision,-p", cfg.precision, "working precision in decimal digits")
        ->check(CLI::Range(15u, 10000u));
    app.add_option("--threads", cfg.threads, "worker threads (0 = auto)");
    app.add_option("--output,-o", cfg.output, "output file (default stdout)");

    std::string manifold, range = "20..276", norm = "divided-by-s3";
    std::string suite = "all", input, synthetic, coeff_file, cs_list;
    bool force_exact = false, verbose = false;
    double threshold = 0.05;
    unsigned snap_den = 0, n_terms = 20;

    auto* mtc = app.add_subcommand("mtc-table", "print MTC data tables");
    mtc->add_option("--family", cfg.family, "su2 | u1");
    mtc->add_option("-k,--level", cfg.level, "level")->required();
    mtc->add_option("--format", cfg.format, "json | csv");

    auto* rt = app.add_subcommand("rt", "evaluate the surgery invariant");
    rt->add_option("manifold", manifold,
                   "s3|s1xs2|lens:p,q|seifert:e0;a/b,...|poincare|sigma235|@file.json")
        ->required();
    rt->add_option("--family", cfg.family, "su2 | u1");
    rt->add_option("-k,--level", cfg.level, "level")->required();
    rt->add_option("--format", cfg.format, "json | csv");
    rt->add_flag("--exact", force_exact, "force the exact cyclotomic path");

    auto* check = app.add_subcommand("check", "run a consistency suite");
    check->add_option("suite", suite, "suite name or 'all'");
    check->add_flag("--verbose", verbose, "print per-level residual tables");
    check->add_option("-k,--level", cfg.level, "level (informational)");

    auto* sweep = app.add_subcommand("sweep", "level sweep to CSV");
    sweep->add_option("manifold", manifold)->required();
    sweep->add_option("--family", cfg.family, "su2 | u1");
    sweep->add_option("--k", range, "level range min..max");
    sweep->add_option("--norm", norm, "raw | divided-by-s3");

    auto* spectrum = app.add_subcommand("spectrum", "DFT phase spectrum to JSON");
    spectrum->add_option("--input", input, "sweep CSV produced by 'sweep'");
    spectrum->add_option("manifold", manifold, "manifold (when no --input)");
    spectrum->add_option("--k", range, "level range min..max");
    spectrum->add_option("--family", cfg.family, "su2 | u1");
    spectrum->add_option("--threshold", threshold, "peak threshold as a fraction of max");
    spectrum->add_option("--snap-den", snap_den, "snap denominator bound (0 = auto)");

    auto* abelian = app.add_subcommand("abelian", "U(1)_k invariants from a linking matrix");
    abelian->add_option("input", manifold, "manifold shorthand or @file (plumbing or matrix JSON)")
        ->required();
    abelian->add_option("-k,--level", cfg.level, "even level")->required();

    auto* borel = app.add_subcommand("borel", "Borel-Pade pole report to JSON");
    borel->add_option("--synthetic", synthetic, "factorial | alt-factorial | planted:re,im");
    borel->add_option("--coeffs", coeff_file, "JSON file with {\"coeffs\": [[re,im],...]}");
    borel->add_option("--terms", n_terms, "number of series terms");
    borel->add_option("--cs", cs_list, "comma-separated rational CS values for the Stokes table");

    // global flags may follow the subcommand name
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

    try {
        if (mtc->parsed()) return cmd_mtc_table(cfg);
        if (rt->parsed()) return cmd_rt(cfg, manifold, force_exact);
        if (check->parsed()) return cmd_check(cfg, suite, verbose);
        if (sweep->parsed()) return cmd_sweep(cfg, manifold, range, norm);
        if (spectrum->parsed()) return cmd_spectrum(cfg, input, manifold, range, threshold, snap_den);
        if (abelian->parsed()) return cmd_abelian(cfg, manifold);
        if (borel->parsed()) return cmd_borel(cfg, synthetic, coeff_file, n_terms, cs_list);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
