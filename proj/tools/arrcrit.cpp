// arrcrit: command-line front end. Reports go to stdout as JSON, diagnostics to stderr.
// Exit status: 0 computed and affirmative, 1 computed and negative, 2 usage or input error.

#include "arrcrit/arrangement.hpp"
#include "arrcrit/critical.hpp"
#include "arrcrit/error.hpp"
#include "arrcrit/io.hpp"
#include "arrcrit/os_algebra.hpp"
#include "arrcrit/singular_rank.hpp"
#include "arrcrit/weights.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

using namespace arrcrit;
using io::json;

namespace {

struct Report {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> warnings;
    bool affirmative = true;
};

int emit(const Report& r) {
    json out;
    out["command"] = r.command;
    out["inputs"] = r.inputs;
    out["result"] = r.result;
    out["warnings"] = r.warnings;
    std::cout << out.dump(2) << "\n";
    return r.affirmative ? 0 : 1;
}

std::vector<Scalar> parse_list(const std::vector<std::string>& items, Field f) {
    std::vector<Scalar> out;
    for (const auto& s : items) out.push_back(parse_scalar(s, f));
    return out;
}

Arrangement load_arrangement(const std::string& path, Report& r) {
    auto arr = io::parse_arrangement(io::read_json_file(path));
    r.inputs["arrangement"] = {{"file", path}, {"n", arr.n()}, {"ell", arr.ell()}, {"data", io::arrangement_to_json(arr)}};
    return arr;
}

WeightBasis load_weights(const std::string& path, const Arrangement& arr, Report& r) {
    auto w = io::parse_weights(io::read_json_file(path), arr.size());
    r.inputs["weights"] = {{"file", path}, {"rows", w.rows()}};
    return w;
}

// A single weight vector from {"lambda": [...]}, or a combination of the rows of {"rows": [...]}.
std::vector<Scalar> load_lambda(const std::string& path, const Arrangement& arr, const std::vector<std::string>& coeffs,
                                Report& r) {
    const json doc = io::read_json_file(path);
    std::vector<Scalar> lambda;
    if (doc.contains("lambda")) {
        if (!coeffs.empty()) throw Error("--coeffs applies only to a weights file with \"rows\"");
        lambda = io::parse_scalar_vector(doc.at("lambda"), arr.field());
    } else {
        const auto w = io::parse_weights(doc, arr.size());
        const auto c = parse_list(coeffs, arr.field());
        if (static_cast<int>(c.size()) != w.q()) throw Error("--coeffs needs one coefficient per weight row");
        lambda.assign(arr.size(), Scalar(0));
        for (int i = 0; i < w.q(); ++i)
            for (int j = 0; j < arr.size(); ++j) lambda[j] += c[i] * Scalar(w.row(i)[j]);
    }
    if (static_cast<int>(lambda.size()) != arr.size()) throw Error("weight vector has the wrong length");
    r.inputs["lambda"] = {{"file", path}, {"values", io::scalars_to_json(lambda)}};
    return lambda;
}

ProjectivePoint load_point(const std::string& path, const Arrangement& arr, Report& r) {
    auto p = io::parse_point(io::read_json_file(path), arr.field());
    r.inputs["point"] = {{"file", path}, {"coords", io::scalars_to_json(p.coords)}};
    return p;
}

json rank_condition_json(const RankCondition& rc) {
    return json{{"singular", rc.is_singular}, {"rank", rc.rank}, {"witness", io::flats_to_json(rc.witness)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for hyperplane arrangements, Orlik-Solomon algebras and master functions"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));

    std::string arr_path, second_path, third_path;
    int degree = 1;
    std::vector<std::string> coeffs, a_values, syzygy_values;
    std::string method = "all";
    std::string point_path, omega_path;
    int samples = 0;
    unsigned long seed = 1;

    auto* matroid = app.add_subcommand("matroid", "Circuits, flats, flags, nested sets and Euler characteristic");
    matroid->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);

    auto* resonance = app.add_subcommand("resonance", "Dimensions of Z^p, B^p and H^p for a one-form");
    resonance->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    resonance->add_option("omega", second_path, "{\"lambda\": [...]} or a weights file with --coeffs")->required()->check(CLI::ExistingFile);
    resonance->add_option("--degree", degree)->capture_default_str();
    resonance->add_option("--coeffs", coeffs)->delimiter(',');

    auto* sing = app.add_subcommand("singular-rank", "Singularity and rank of a rational subspace of A^1");
    sing->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    sing->add_option("weights", second_path)->required()->check(CLI::ExistingFile);
    sing->add_option("--method", method)->check(CLI::IsMember({"flag", "nested", "wedge", "all"}))->capture_default_str();

    auto* homog = app.add_subcommand("homogenize", "Polynomial master functions from a weight basis");
    homog->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    homog->add_option("weights", second_path)->required()->check(CLI::ExistingFile);

    auto* syz = app.add_subcommand("syzygies", "Linear relations among the polynomial master functions");
    syz->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    syz->add_option("weights", second_path, "weights file, or a multinet file with --multinet")->required()->check(CLI::ExistingFile);
    bool from_multinet = false;
    syz->add_flag("--multinet", from_multinet, "Read characteristic vectors from a multinet file");

    auto* mnet = app.add_subcommand("multinet-check", "Verify the multinet axioms");
    mnet->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    mnet->add_option("multinet", second_path)->required()->check(CLI::ExistingFile);

    auto* crit = app.add_subcommand("crit-eqs", "Minor equations of the critical locus");
    crit->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    crit->add_option("--omega", omega_path, "Weights used for evaluation and sampling")->check(CLI::ExistingFile);
    crit->add_option("--point", point_path, "Evaluate every equation at this point")->check(CLI::ExistingFile);
    crit->add_option("--samples", samples, "Random points for the agreement check")->capture_default_str();
    crit->add_option("--seed", seed)->capture_default_str();

    auto* verify = app.add_subcommand("verify-point", "Is the point critical for the master function");
    verify->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    verify->add_option("omega", second_path)->required()->check(CLI::ExistingFile);
    verify->add_option("point", third_path)->required()->check(CLI::ExistingFile);

    auto* fiber = app.add_subcommand("fiber-target", "Fiber of the master map containing the critical set");
    fiber->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    fiber->add_option("weights", second_path)->required()->check(CLI::ExistingFile);
    fiber->add_option("--a", a_values, "Coefficients a_0,...,a_q with zero sum")->required()->delimiter(',');
    fiber->add_option("--syzygy", syzygy_values, "Linear syzygy b; defaults to the unique one")->delimiter(',');
    fiber->add_option("--point", point_path, "Test a point against the level-set equations")->check(CLI::ExistingFile);

    auto* induced = app.add_subcommand("induced-arrangement", "Arrangement induced on the linear image closure");
    induced->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    induced->add_option("weights", second_path)->required()->check(CLI::ExistingFile);

    auto* spoint = app.add_subcommand("sing-point", "Jacobian rank of the master map at a point");
    spoint->add_option("arrangement", arr_path)->required()->check(CLI::ExistingFile);
    spoint->add_option("weights", second_path)->required()->check(CLI::ExistingFile);
    spoint->add_option("point", third_path)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Report r;
    try {
        if (matroid->parsed()) {
            r.command = "matroid";
            const auto arr = load_arrangement(arr_path, r);
            const auto& m = arr.matroid();
            const auto cd = m.characteristic_data();
            json flags = json::array(), nested = json::array(), mobius = json::array();
            if (arr.essential()) {
                for (const auto& f : m.maximal_flags()) flags.push_back(io::flats_to_json(f.chain));
                for (const auto& s : m.maximal_nested_sets()) nested.push_back(io::flats_to_json(s.elements));
            } else {
                r.warnings.push_back("arrangement is not essential; flags and nested sets are omitted");
            }
            for (const auto& [f, mu] : cd.mobius) mobius.push_back(json{{"flat", f.members}, {"rank", f.rank}, {"mu", mu}});
            r.result = {{"rank", m.rank()},
                        {"essential", arr.essential()},
                        {"circuits", m.circuits()},
                        {"connected_flats", io::flats_to_json(m.connected_flats())},
                        {"flats", mobius},
                        {"maximal_flags", flags},
                        {"maximal_nested_sets", nested},
                        {"poincare", cd.poincare},
                        {"euler_characteristic", cd.euler_characteristic}};
        } else if (resonance->parsed()) {
            r.command = "resonance";
            const auto arr = load_arrangement(arr_path, r);
            const auto lambda = load_lambda(second_path, arr, coeffs, r);
            r.inputs["degree"] = degree;
            OSAlgebra os(arr);
            const auto d = os.cohomology_dimension(os.one_form(lambda), degree);
            r.result = {{"z", d.z}, {"b", d.b}, {"h", d.h}};
            r.affirmative = d.h > 0;
        } else if (sing->parsed()) {
            r.command = "singular-rank";
            const auto arr = load_arrangement(arr_path, r);
            const auto w = load_weights(second_path, arr, r);
            r.inputs["method"] = method;
            json per = json::object();
            std::optional<std::pair<bool, int>> verdict;
            bool agree = true;
            auto record = [&](bool s, int p) {
                if (verdict && (verdict->first != s || verdict->second != p)) agree = false;
                if (!verdict) verdict = {s, p};
            };
            json witness;
            if (method == "flag" || method == "all") {
                const auto rc = flag_rank_condition(arr, w);
                per["flag"] = rank_condition_json(rc);
                witness = io::flats_to_json(rc.witness);
                record(rc.is_singular, rc.rank);
            }
            if (method == "nested" || method == "all") {
                const auto rc = nested_rank_condition(arr, w);
                per["nested"] = rank_condition_json(rc);
                if (witness.is_null()) witness = io::flats_to_json(rc.witness);
                record(rc.is_singular, rc.rank);
            }
            if (method == "wedge" || method == "all") {
                const auto wr = OSAlgebra(arr).subspace_wedge_rank(w);
                per["wedge"] = {{"singular", wr.is_singular}, {"rank", wr.rank}};
                record(wr.is_singular, wr.rank);
            }
            if (!agree) throw Error("methods disagree: " + per.dump());
            r.result = {{"singular", verdict->first}, {"rank", verdict->second}, {"dimension", w.q()}};
            if (!witness.is_null()) r.result["witness_flag"] = witness;
            r.result["methods"] = per;
            r.affirmative = verdict->first;
        } else if (homog->parsed()) {
            r.command = "homogenize";
            const auto arr = load_arrangement(arr_path, r);
            const auto w = load_weights(second_path, arr, r);
            const auto h = homogenize(w);
            const auto ess = essential_check(h, arr.size());
            json polys = json::array();
            for (const auto& nu : h.nu) polys.push_back(io::polynomial_to_json(expand_master_polynomial(arr, nu)));
            r.result = {{"nu", h.nu}, {"degree", h.degree}, {"essential", ess.essential}, {"uncovered", ess.uncovered},
                        {"polynomials", polys}};
            r.affirmative = ess.essential;
        } else if (syz->parsed()) {
            r.command = "syzygies";
            const auto arr = load_arrangement(arr_path, r);
            HomogenizedWeights h;
            if (from_multinet) {
                const auto net = io::parse_multinet(io::read_json_file(second_path), arr.size());
                r.inputs["multinet"] = {{"file", second_path}, {"blocks", net.blocks}, {"mult", net.mult}};
                h = characteristic_vectors(arr, net);
            } else {
                h = homogenize(load_weights(second_path, arr, r));
            }
            const auto k = linear_syzygies(arr, h);
            json rows = json::array();
            for (const auto& v : k) rows.push_back(io::scalars_to_json(v));
            r.result = {{"nu", h.nu}, {"degree", h.degree}, {"dimension", k.size()}, {"basis", rows}};
            r.affirmative = !k.empty();
        } else if (mnet->parsed()) {
            r.command = "multinet-check";
            const auto arr = load_arrangement(arr_path, r);
            const auto net = io::parse_multinet(io::read_json_file(second_path), arr.size());
            r.inputs["multinet"] = {{"file", second_path}, {"blocks", net.blocks}, {"mult", net.mult}};
            const auto rep = multinet_check(arr, net);
            json base = json::array();
            for (const auto& b : rep.base_locus) base.push_back(json{{"flat", b.flat.members}, {"n_X", b.n_x}});
            r.result = {{"pass", rep.passed()},
                        {"d", rep.d},
                        {"block_degrees", rep.block_degrees},
                        {"base_locus", base},
                        {"axioms", {{"degree", rep.axiom1}, {"base_locus", rep.axiom2}, {"connectivity", rep.axiom3}}},
                        {"block_connected", rep.block_connected},
                        {"messages", rep.messages}};
            r.warnings.push_back("connectivity uses the graph of each block with edges at points off the base locus");
            r.affirmative = rep.passed();
        } else if (crit->parsed()) {
            r.command = "crit-eqs";
            const auto arr = load_arrangement(arr_path, r);
            const auto eqs = critical_equations(arr);
            json list = json::array();
            for (const auto& e : eqs) list.push_back(io::equation_to_json(e));
            r.result = {{"count", eqs.size()}, {"minor_size", arr.n() - arr.ell() + 1}, {"equations", list}};
            if ((!point_path.empty() || samples > 0) && omega_path.empty())
                throw Error("--point and --samples need --omega");
            if (!omega_path.empty()) {
                const auto lambda = load_lambda(omega_path, arr, {}, r);
                if (!point_path.empty()) {
                    const auto x = load_point(point_path, arr, r);
                    json values = json::array();
                    bool all_zero = true;
                    for (const auto& e : eqs) {
                        const auto v = evaluate_equation(arr, e, lambda, x);
                        all_zero = all_zero && v.is_zero();
                        values.push_back(v.str());
                    }
                    r.result["values"] = values;
                    r.result["all_vanish"] = all_zero;
                    r.affirmative = all_zero;
                }
                if (samples > 0) {
                    r.inputs["samples"] = samples;
                    r.inputs["seed"] = seed;
                    std::mt19937_64 rng(seed);
                    int agree = 0, critical = 0;
                    for (int s = 0; s < samples; ++s) {
                        const auto x = random_complement_point(arr, rng);
                        const bool v = verify_critical_point(arr, lambda, x);
                        const auto g = dlog_evaluate(arr, lambda, x);
                        const bool d = std::all_of(g.begin(), g.end(), [](const Scalar& c) { return c.is_zero(); });
                        bool e = true;
                        for (const auto& eq : eqs) e = e && evaluate_equation(arr, eq, lambda, x).is_zero();
                        agree += (v == d && d == e);
                        critical += v;
                    }
                    r.result["sampling"] = {{"agreements", agree}, {"samples", samples}, {"critical", critical}};
                    r.affirmative = r.affirmative && agree == samples;
                }
            }
        } else if (verify->parsed()) {
            r.command = "verify-point";
            const auto arr = load_arrangement(arr_path, r);
            const auto lambda = load_lambda(second_path, arr, {}, r);
            const auto x = load_point(third_path, arr, r);
            const bool ok = verify_critical_point(arr, lambda, x);
            r.result = {{"critical", ok}, {"dlog", io::scalars_to_json(dlog_evaluate(arr, lambda, x))}};
            r.affirmative = ok;
        } else if (fiber->parsed()) {
            r.command = "fiber-target";
            const auto arr = load_arrangement(arr_path, r);
            const auto w = load_weights(second_path, arr, r);
            const auto h = homogenize(w);
            std::vector<Scalar> b;
            if (syzygy_values.empty()) {
                const auto k = linear_syzygies(arr, h);
                if (k.size() != 1)
                    throw Error("expected a unique linear syzygy, found " + std::to_string(k.size()) + "; pass --syzygy");
                b = k[0];
            } else {
                b = parse_list(syzygy_values, arr.field());
            }
            const auto a = parse_list(a_values, arr.field());
            r.inputs["a"] = io::scalars_to_json(a);
            r.inputs["syzygy"] = io::scalars_to_json(b);
            const auto t = fiber_target(b, a);
            json eqs = json::array();
            for (const auto& e : t.equations)
                eqs.push_back(json{{"i", e.i}, {"j", e.j}, {"coeff_i", t.target[e.j].str()}, {"coeff_j", t.target[e.i].str()}});
            r.result = {{"target", io::scalars_to_json(t.target)}, {"in_torus", t.in_torus}, {"level_equations", eqs}};
            if (!t.in_torus) r.warnings.push_back("target lies outside the torus; the critical set meets only the singular locus of the master map");
            r.warnings.push_back("assumed, not checked: the image closure has the dimension of its image under the coordinate-scaling map");
            r.warnings.push_back("assumed, not checked: the master map is onto the torus part of its image closure");
            if (!point_path.empty()) {
                const auto x = load_point(point_path, arr, r);
                r.result["point_on_fiber"] = on_fiber(arr, h, t, x);
            }
            r.affirmative = t.in_torus;
        } else if (induced->parsed()) {
            r.command = "induced-arrangement";
            const auto arr = load_arrangement(arr_path, r);
            const auto w = load_weights(second_path, arr, r);
            const auto ia = induced_arrangement(arr, w);
            r.result = {{"p", ia.p},
                        {"arrangement", io::arrangement_to_json(ia.arrangement)},
                        {"euler_characteristic", ia.euler_characteristic},
                        {"expected_count", ia.expected_count}};
            r.warnings.push_back("the count assumes generic exponents a on the induced arrangement");
        } else if (spoint->parsed()) {
            r.command = "sing-point";
            const auto arr = load_arrangement(arr_path, r);
            const auto w = load_weights(second_path, arr, r);
            const auto x = load_point(third_path, arr, r);
            const auto res = singular_point_test(arr, w, x);
            r.result = {{"jacobian_rank", res.jacobian_rank},
                        {"subspace_rank", res.subspace_rank},
                        {"singular_point", res.is_singular_point}};
            r.affirmative = res.is_singular_point;
        }
    } catch (const std::exception& e) {
        std::cerr << "arrcrit " << r.command << ": " << e.what() << "\n";
        return 2;
    }
    return emit(r);
}
