// coherent: batch front end over the cochain/twist/geometry/walk library.
// Exit codes: 0 success, 1 domain error (JSON report on stderr), 2 usage.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coherent/cochain.hpp"
#include "coherent/geometry.hpp"
#include "coherent/json_io.hpp"
#include "coherent/semigroup.hpp"
#include "coherent/simplicial.hpp"
#include "coherent/twist.hpp"
#include "coherent/walk.hpp"

namespace {

using coherent::Json;
using coherent::Rat;

std::string fmt(double x) {
    if (x == 0) x = 0;  // avoid "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

struct Options {
    std::string input, output, format = "csv";
    std::string p, v, h = "1", t_max = "1", prob, hbar, tau;
    std::string left, right;
    std::string shape = "octahedral";
    int max_degree = 2, steps = 64, cells = 1;
    long long trials = 0;
    unsigned long long seed = 0;
    double tol = 1e-12, colat = 0, lambda_max = std::numbers::pi;
    bool cc0_zero = false;
};

void emit(const Options& o, const std::string& text) {
    if (o.output.empty())
        std::cout << text;
    else
        coherent::write_file(o.output, text);
}

Json input_json(const Options& o) {
    return coherent::parse_json(coherent::read_file(o.input));
}

// Accepts a semigroup table, a poset (interval semigroup), or a quiver
// (path semigroup); the document kind is sniffed from its fields.
std::pair<std::string, coherent::SemigroupTable> load_any_semigroup(const Json& j) {
    if (j.is_object() && j.contains("table"))
        return {"semigroup", coherent::load_semigroup(j)};
    if (j.is_object() && j.contains("relations"))
        return {"poset", coherent::poset_semigroup(coherent::load_poset(j))};
    if (j.is_object() && j.contains("arrows"))
        return {"quiver", coherent::quiver_path_semigroup(coherent::load_quiver(j))};
    throw coherent::DomainError("SchemaError",
                                "expected a semigroup, poset, or quiver document");
}

// Accepts a poset, or a simplicial complex via its face poset.
coherent::Poset load_any_poset(const Json& j) {
    if (j.is_object() && j.contains("relations")) return coherent::load_poset(j);
    if (j.is_object() && j.contains("maximal_simplices"))
        return coherent::barycentric_subdivision(coherent::load_complex(j));
    throw coherent::DomainError("SchemaError",
                                "expected a poset or simplicial-complex document");
}

// Optional parameter overrides for a loaded twist: --hbar re-scales a real
// twist within its one-parameter family, --tau re-reduces a circle twist's
// exponent modulo a new period (which re-checks the cocycle identity).
coherent::Twist apply_overrides(const coherent::LoadedTwist& lt, const Options& o) {
    using coherent::Twist;
    if (!o.hbar.empty()) {
        if (lt.twist.mode() != Twist::Mode::RealExponential)
            throw coherent::DomainError("CoefficientMismatch",
                                        "--hbar applies to real-mode twists only");
        return coherent::exp_twist(lt.twist.exponent(), coherent::parse_rational(o.hbar));
    }
    if (!o.tau.empty()) {
        if (lt.twist.mode() != Twist::Mode::Circle)
            throw coherent::DomainError("CoefficientMismatch",
                                        "--tau applies to circle-mode twists only");
        const Rat tau = coherent::parse_rational(o.tau);
        coherent::Cochain f(lt.semigroup, 2, coherent::CoefficientGroup::mod(tau));
        for (const auto& [key, val] : lt.twist.exponent().values()) f.set(key, val);
        return coherent::circle_twist(f);
    }
    return lt.twist;
}

void run_semigroup_validate(const Options& o) {
    auto [kind, sg] = load_any_semigroup(input_json(o));
    Json j;
    j["kind"] = kind;
    j["valid"] = true;
    j["elements"] = sg.size();
    j["nonzero"] = sg.size() - 1;
    j["zero"] = sg.element(sg.zero());
    j["objects"] =
        sg.has_objects() ? Json(sg.object_indices().size()) : Json(nullptr);
    j["composable_pairs"] = sg.composable_tuples(2).size();
    emit(o, j.dump(2) + "\n");
}

void run_cohomology_ranks(const Options& o) {
    auto [kind, sg] = load_any_semigroup(input_json(o));
    auto shared = std::make_shared<const coherent::SemigroupTable>(std::move(sg));
    std::vector<coherent::RankReport> rows;
    for (int n = 0; n <= o.max_degree; ++n)
        rows.push_back(coherent::cohomology_rank(shared, n, o.cc0_zero));
    if (o.format == "json") {
        Json out = Json::array();
        for (int n = 0; n <= o.max_degree; ++n) {
            Json r;
            r["degree"] = n;
            r["dim_Z"] = rows[n].dim_cocycles;
            r["dim_B"] = rows[n].dim_coboundaries;
            r["dim_H"] = rows[n].dim_cohomology;
            out.push_back(std::move(r));
        }
        emit(o, out.dump(2) + "\n");
        return;
    }
    std::ostringstream csv;
    csv << "degree,dim_Z,dim_B,dim_H\n";
    for (int n = 0; n <= o.max_degree; ++n)
        csv << n << ',' << rows[n].dim_cocycles << ',' << rows[n].dim_coboundaries
            << ',' << rows[n].dim_cohomology << '\n';
    emit(o, csv.str());
}

void run_nerve_compare(const Options& o) {
    coherent::Poset p = load_any_poset(input_json(o));
    auto rows = coherent::compare_poset_cohomology(p, o.max_degree, o.cc0_zero);
    if (o.format == "json") {
        Json out = Json::array();
        for (const auto& r : rows) {
            Json x;
            x["degree"] = r.degree;
            x["semigroup_rank"] = r.semigroup_rank;
            x["simplicial_rank"] = r.simplicial_rank;
            x["match"] = r.match;
            out.push_back(std::move(x));
        }
        emit(o, out.dump(2) + "\n");
        return;
    }
    std::ostringstream csv;
    csv << "degree,semigroup_rank,simplicial_rank,match\n";
    for (const auto& r : rows)
        csv << r.degree << ',' << r.semigroup_rank << ',' << r.simplicial_rank << ','
            << (r.match ? "true" : "false") << '\n';
    emit(o, csv.str());
}

void run_twist_verify(const Options& o) {
    auto loaded = coherent::load_twist(input_json(o));
    coherent::Twist t = apply_overrides(loaded, o);
    const auto& sg = t.semigroup();
    const auto pairs = sg.composable_tuples(2);
    std::map<std::pair<int, int>, std::complex<double>> values;
    for (const auto& pr : pairs) values[{pr[0], pr[1]}] = t.value(pr[0], pr[1]);
    Json j;
    j["mode"] = t.mode() == coherent::Twist::Mode::RealExponential ? "real" : "circle";
    j["cocycle_identity"] = coherent::verify_twist(t);
    j["value_identity"] = coherent::verify_twist_values(sg, values, o.tol);
    j["tol"] = o.tol;
    j["composable_pairs"] = pairs.size();
    j["composable_triples"] = sg.composable_tuples(3).size();
    emit(o, j.dump(2) + "\n");
}

void run_twist_trivial(const Options& o) {
    auto loaded = coherent::load_twist(input_json(o));
    coherent::Twist t = apply_overrides(loaded, o);
    auto result = coherent::triviality_check(t);
    Json j;
    j["trivial"] = result.trivial;
    if (result.witness)
        j["witness"] = coherent::save_cochain(*result.witness);
    emit(o, j.dump(2) + "\n");
}

void run_star_eval(const Options& o) {
    auto loaded = coherent::load_twist(input_json(o));
    coherent::Twist t = apply_overrides(loaded, o);
    auto u = coherent::AlgebraElement::basis(t.semigroup_ptr(), o.left);
    auto v = coherent::AlgebraElement::basis(t.semigroup_ptr(), o.right);
    auto w = coherent::star(t, u, v);
    Json j;
    j["left"] = o.left;
    j["right"] = o.right;
    Json terms = Json::array();
    for (const auto& [elem, coeff] : w.terms()) {
        Json term;
        term["element"] = t.semigroup().element(elem);
        term["re"] = coeff.real();
        term["im"] = coeff.imag();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    emit(o, j.dump(2) + "\n");
}

void run_debroglie(const Options& o) {
    const Rat p = coherent::parse_rational(o.p);
    const Rat v = coherent::parse_rational(o.v);
    const Rat h = coherent::parse_rational(o.h);
    const Rat t_max = coherent::parse_rational(o.t_max);
    if (p <= 0 || v <= 0 || h <= 0 || t_max <= 0 || o.steps < 1)
        throw coherent::DomainError("NonpositiveParameter",
                                    "p, v, h, t-max, and steps must be positive");
    const Rat wavelength = coherent::de_broglie_wavelength(h, p);
    struct Row {
        double t, area, re, im;
    };
    std::vector<Row> rows;
    for (int k = 0; k <= o.steps; ++k) {
        const Rat t = t_max * k / o.steps;
        const Rat area = coherent::mod_tau(p * v * t, h);  // exact
        const double angle =
            2 * std::numbers::pi * coherent::as_double(area / h);
        rows.push_back({coherent::as_double(t), coherent::as_double(area),
                        std::cos(angle), std::sin(angle)});
    }
    if (o.format == "json") {
        Json j;
        j["wavelength"] = coherent::rational_string(wavelength);
        Json samples = Json::array();
        for (const auto& r : rows) {
            Json s;
            s["t"] = r.t;
            s["area_mod_h"] = r.area;
            s["phase_re"] = r.re;
            s["phase_im"] = r.im;
            samples.push_back(std::move(s));
        }
        j["samples"] = std::move(samples);
        emit(o, j.dump(2) + "\n");
        return;
    }
    std::ostringstream csv;
    csv << "# wavelength = " << coherent::rational_string(wavelength) << '\n';
    csv << "t,area_mod_h,phase_re,phase_im\n";
    for (const auto& r : rows)
        csv << fmt(r.t) << ',' << fmt(r.area) << ',' << fmt(r.re) << ',' << fmt(r.im)
            << '\n';
    emit(o, csv.str());
}

void run_sphere_phase(const Options& o) {
    if (o.steps < 1)
        throw coherent::DomainError("NonpositiveParameter", "steps must be positive");
    std::vector<double> lambdas;
    for (int k = 0; k <= o.steps; ++k)
        lambdas.push_back(o.lambda_max * k / o.steps);
    auto scan = coherent::equator_scenario(o.colat, lambdas);
    if (o.format == "json") {
        Json j;
        j["slope"] = scan.slope;
        j["nonlinearity"] = scan.nonlinearity;
        j["excluded"] = scan.excluded;
        Json samples = Json::array();
        for (const auto& s : scan.samples) {
            Json x;
            x["lambda"] = s.lambda;
            x["area"] = s.area;
            x["phase_re"] = s.phase.real();
            x["phase_im"] = s.phase.imag();
            x["linear_fit_residual"] = s.fit_deviation;
            samples.push_back(std::move(x));
        }
        j["samples"] = std::move(samples);
        emit(o, j.dump(2) + "\n");
        return;
    }
    std::ostringstream csv;
    csv << "# slope = " << fmt(scan.slope) << '\n';
    csv << "# nonlinearity = " << fmt(scan.nonlinearity) << '\n';
    for (double x : scan.excluded) csv << "# excluded lambda = " << fmt(x) << '\n';
    csv << "lambda,area,phase_re,phase_im,linear_fit_residual\n";
    for (const auto& s : scan.samples)
        csv << fmt(s.lambda) << ',' << fmt(s.area) << ',' << fmt(s.phase.real()) << ','
            << fmt(s.phase.imag()) << ',' << fmt(s.fit_deviation) << '\n';
    emit(o, csv.str());
}

void run_sphere_twist_export(const Options& o) {
    coherent::SphereTriangulation tri;
    if (o.shape == "octahedral")
        tri = coherent::SphereTriangulation::Octahedral;
    else if (o.shape == "tetrahedral")
        tri = coherent::SphereTriangulation::Tetrahedral;
    else
        throw coherent::DomainError("SchemaError",
                                    "--shape must be octahedral or tetrahedral");
    auto exported = coherent::export_sphere_twist(tri);
    emit(o, coherent::save_twist(exported.twist).dump(2) + "\n");
}

std::string distribution_csv(const coherent::LatticeDistribution& d) {
    std::ostringstream csv;
    csv << "position,probability,probability_exact\n";
    for (const auto& [k, prob] : d.pmf)
        csv << fmt(static_cast<double>(k) / static_cast<double>(d.denominator)) << ','
            << fmt(coherent::as_double(prob)) << ',' << coherent::rational_string(prob)
            << '\n';
    return csv.str();
}

Json distribution_json(const coherent::LatticeDistribution& d) {
    Json j;
    j["denominator"] = d.denominator;
    j["mean"] = coherent::rational_string(d.mean());
    j["variance"] = coherent::rational_string(d.variance());
    j["total"] = coherent::rational_string(d.total());
    Json rows = Json::array();
    for (const auto& [k, prob] : d.pmf) {
        Json r;
        r["position"] = static_cast<double>(k) / static_cast<double>(d.denominator);
        r["probability"] = coherent::as_double(prob);
        r["probability_exact"] = coherent::rational_string(prob);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

void emit_distribution(const Options& o, const coherent::LatticeDistribution& d) {
    if (o.format == "json")
        emit(o, distribution_json(d).dump(2) + "\n");
    else
        emit(o, distribution_csv(d));
}

void run_walk_pmf(const Options& o) {
    const Rat prob = coherent::parse_rational(o.prob);
    auto d = o.cells == 1 ? coherent::exact_walk_pmf(o.steps, prob)
                          : coherent::n_cell_mean_pmf(o.steps, prob, o.cells);
    emit_distribution(o, d);
}

void run_walk_mc(const Options& o) {
    coherent::WalkParams params;
    params.steps = o.steps;
    params.prob = coherent::parse_rational(o.prob);
    params.cells = o.cells;
    params.seed = o.seed;
    emit_distribution(o, coherent::monte_carlo_walk(params, o.trials));
}

void run_walk_compare(const Options& o) {
    const Rat prob = coherent::parse_rational(o.prob);
    auto report = coherent::gaussian_compare(o.steps, prob);
    Json j;
    j["steps"] = o.steps;
    j["prob"] = coherent::rational_string(prob);
    Json g;
    g["mean"] = report.mean;
    g["sigma"] = report.sigma;
    g["sup_gap"] = report.sup_gap;
    g["sup_gap_within_2sigma"] = report.sup_gap_within_2sigma;
    g["gaussian_tail_outside_cone"] = report.gaussian_tail_outside_cone;
    g["walk_tail_outside_cone"] = coherent::rational_string(report.walk_tail_outside_cone);
    j["gaussian"] = std::move(g);
    if (o.trials > 0) {
        auto exact = coherent::exact_walk_pmf(o.steps, prob);
        coherent::WalkParams params;
        params.steps = o.steps;
        params.prob = prob;
        params.cells = 1;
        params.seed = o.seed;
        auto mc = coherent::monte_carlo_walk(params, o.trials);
        long long total = 0, within = 0, outside_support = 0;
        double max_z = 0;
        for (const auto& [pos, pe] : exact.pmf) {
            const double p = coherent::as_double(pe);
            const double sigma =
                std::sqrt(p * (1 - p) / static_cast<double>(o.trials));
            const auto it = mc.pmf.find(pos);
            const double phat = it == mc.pmf.end() ? 0.0 : coherent::as_double(it->second);
            double z = 0;
            if (sigma > 0)
                z = std::abs(phat - p) / sigma;
            else if (phat != p)
                z = std::numeric_limits<double>::infinity();
            ++total;
            if (z <= 3.0) ++within;
            max_z = std::max(max_z, z);
        }
        for (const auto& [pos, pm] : mc.pmf)
            if (!exact.pmf.count(pos)) ++outside_support;
        Json m;
        m["trials"] = o.trials;
        m["seed"] = o.seed;
        m["bins_total"] = total;
        m["bins_within_3_sigma"] = within;
        m["fraction_within_3_sigma"] =
            total ? static_cast<double>(within) / static_cast<double>(total) : 1.0;
        m["max_abs_z"] = max_z;
        m["bins_outside_support"] = outside_support;
        j["monte_carlo"] = std::move(m);
    }
    emit(o, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"cochain calculus, twists, and phase-space geometry"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--output", o.output, "write primary output to this file");
        if (with_format)
            cmd->add_option("--format", o.format, "output format")
                ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", o.input, "input JSON file")->required();
    };

    auto* semigroup = app.add_subcommand("semigroup", "semigroup table operations");
    semigroup->require_subcommand(1);
    auto* validate = semigroup->add_subcommand(
        "validate", "check a semigroup/poset/quiver document and summarize it");
    add_input(validate);
    add_io(validate, false);
    validate->callback([&] { run_semigroup_validate(o); });

    auto* cohomology = app.add_subcommand("cohomology", "cochain-complex ranks");
    cohomology->require_subcommand(1);
    auto* ranks = cohomology->add_subcommand(
        "ranks", "exact cocycle/coboundary/cohomology dimensions per degree");
    add_input(ranks);
    add_io(ranks, true);
    ranks->add_option("--max-degree", o.max_degree, "highest degree to report");
    ranks->add_flag("--cc0-zero", o.cc0_zero,
                    "treat the degree-0 cochain group as zero");
    ranks->callback([&] { run_cohomology_ranks(o); });

    auto* nerve = app.add_subcommand("nerve", "order-complex comparisons");
    nerve->require_subcommand(1);
    auto* compare = nerve->add_subcommand(
        "compare", "semigroup cohomology vs simplicial Betti numbers of the nerve");
    add_input(compare);
    add_io(compare, true);
    compare->add_option("--max-degree", o.max_degree, "highest degree to compare");
    compare->add_flag("--cc0-zero", o.cc0_zero,
                      "treat the degree-0 cochain group as zero");
    compare->callback([&] { run_nerve_compare(o); });

    auto* twist = app.add_subcommand("twist", "multiplicative 2-cocycles");
    twist->require_subcommand(1);
    auto* verify = twist->add_subcommand(
        "verify", "check the 2-cocycle identity of a twist document");
    add_input(verify);
    add_io(verify, false);
    verify->add_option("--tol", o.tol, "tolerance for the complex-value check");
    verify->add_option("--hbar", o.hbar, "override hbar of a real-mode twist (p/q)");
    verify->add_option("--tau", o.tau, "override tau of a circle-mode twist (p/q)");
    verify->callback([&] { run_twist_verify(o); });
    auto* trivial = twist->add_subcommand(
        "trivial", "decide whether the twist is a multiplicative coboundary");
    add_input(trivial);
    add_io(trivial, false);
    trivial->add_option("--hbar", o.hbar, "override hbar of a real-mode twist (p/q)");
    trivial->add_option("--tau", o.tau, "override tau of a circle-mode twist (p/q)");
    trivial->callback([&] { run_twist_trivial(o); });

    auto* star = app.add_subcommand("star", "twisted products");
    star->require_subcommand(1);
    auto* eval = star->add_subcommand(
        "eval", "star product of two basis elements under a twist");
    add_input(eval);
    add_io(eval, false);
    eval->add_option("--left", o.left, "left basis element name")->required();
    eval->add_option("--right", o.right, "right basis element name")->required();
    eval->add_option("--hbar", o.hbar, "override hbar of a real-mode twist (p/q)");
    eval->add_option("--tau", o.tau, "override tau of a circle-mode twist (p/q)");
    eval->callback([&] { run_star_eval(o); });

    auto* debroglie = app.add_subcommand(
        "debroglie", "free-particle phase samples and exact wavelength");
    debroglie->set_help_flag("--help", "print help");  // frees -h for --h
    debroglie->add_option("--p", o.p, "momentum (p/q)")->required();
    debroglie->add_option("--v", o.v, "velocity (p/q)")->required();
    debroglie->add_option("--h", o.h, "quantum of area (p/q)");
    debroglie->add_option("--t-max", o.t_max, "end of the time grid (p/q)");
    debroglie->add_option("--steps", o.steps, "number of grid intervals");
    add_io(debroglie, true);
    debroglie->callback([&] { run_debroglie(o); });

    auto* sphere = app.add_subcommand("sphere", "spherical phase-space geometry");
    sphere->require_subcommand(1);
    auto* phase = sphere->add_subcommand(
        "phase", "equator impulse scenario phase scan");
    phase->add_option("--colat", o.colat, "starting colatitude below the equator (rad)")
        ->required();
    phase->add_option("--lambda-max", o.lambda_max, "end of the longitude grid (rad)");
    phase->add_option("--steps", o.steps, "number of grid intervals");
    add_io(phase, true);
    phase->callback([&] { run_sphere_phase(o); });
    auto* twist_export = sphere->add_subcommand(
        "twist-export", "circle twist of a triangulated sphere as a twist document");
    twist_export->add_option("--shape", o.shape, "octahedral or tetrahedral")
        ->check(CLI::IsMember({"octahedral", "tetrahedral"}));
    add_io(twist_export, false);
    twist_export->callback([&] { run_sphere_twist_export(o); });

    auto* walk = app.add_subcommand("walk", "tiled phase-space random walk");
    walk->require_subcommand(1);
    auto* pmf = walk->add_subcommand("pmf", "exact position distribution");
    pmf->add_option("--steps", o.steps, "number of steps")->required();
    pmf->add_option("--prob", o.prob, "right-step probability (p/q)")->required();
    pmf->add_option("--cells", o.cells, "average over this many independent cells");
    add_io(pmf, true);
    pmf->callback([&] { run_walk_pmf(o); });
    auto* mc = walk->add_subcommand("mc", "Monte Carlo position distribution");
    mc->add_option("--steps", o.steps, "number of steps")->required();
    mc->add_option("--prob", o.prob, "right-step probability (p/q)")->required();
    mc->add_option("--trials", o.trials, "number of trials")->required();
    mc->add_option("--cells", o.cells, "average over this many independent cells");
    mc->add_option("--seed", o.seed, "RNG seed")->envname("COHERENT_SEED");
    add_io(mc, true);
    mc->callback([&] { run_walk_mc(o); });
    auto* wcompare = walk->add_subcommand(
        "compare", "exact walk vs Gaussian (and optional Monte Carlo) report");
    wcompare->add_option("--steps", o.steps, "number of steps")->required();
    wcompare->add_option("--prob", o.prob, "right-step probability (p/q)")->required();
    wcompare->add_option("--trials", o.trials,
                         "Monte Carlo trials (0 skips the Monte Carlo section)");
    wcompare->add_option("--seed", o.seed, "RNG seed")->envname("COHERENT_SEED");
    add_io(wcompare, false);
    wcompare->callback([&] { run_walk_compare(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const coherent::DomainError& e) {
        Json j;
        j["error"] = e.variant();
        j["message"] = e.what();
        Json details = Json::object();
        for (const auto& [k, v] : e.details()) details[k] = v;
        j["details"] = std::move(details);
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = "Internal";
        j["message"] = e.what();
        std::cerr << j.dump() << "\n";
        return 1;
    }
    return 0;
}
