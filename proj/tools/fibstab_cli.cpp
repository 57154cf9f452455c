// Command-line front end: parses geometries, classes, lattices and
// parameters from files and flags, dispatches to the library, and prints
// one exact JSON document per invocation. Exit codes: 0 success, 1 domain
// error (named in the output document), 2 usage or malformed input.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fibstab/fibstab.hpp"

namespace {

using namespace fibstab;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json_output = true;
    std::string geometry_path;
    std::string class_path;
    std::string other_path;
    std::string candidates_path;
    std::string lattice_path;
    std::string bounds_path;
    std::string coeffs_path;
    std::string alpha_sq;
    std::string beta;
    std::string t = "0";
    std::string t0 = "0";
    std::string l;
    std::string kind;
    std::string beta_range;
    std::string direction = "below";
    std::string c_torsion;
    bool from_main2 = false;
    bool plot = false;
    int precision = 6;
};

Rational need_rational(const std::string& value, const char* flag) {
    if (value.empty()) throw UsageError(std::string("missing required flag ") + flag);
    return Rational::parse(value);
}

FibredGeometry load_geometry(const Options& opt) {
    if (opt.geometry_path.empty()) throw UsageError("missing required flag --geometry");
    return geometry_from_json(read_json_file(opt.geometry_path));
}

ContractedClass load_class(const std::string& path, const FibredGeometry& geom) {
    if (path.empty()) throw UsageError("missing required flag --class/--other");
    return any_class_from_json(read_json_file(path), geom);
}

std::optional<bool> torsion_hint(const Options& opt) {
    if (opt.c_torsion.empty()) return std::nullopt;
    if (opt.c_torsion == "true" || opt.c_torsion == "1") return true;
    if (opt.c_torsion == "false" || opt.c_torsion == "0") return false;
    throw UsageError("--c-torsion expects true or false");
}

json geometry_warnings(const FibredGeometry& geom) {
    json warnings = json::array();
    if (geom.ample_normalization_warning())
        warnings.push_back("H^3 <= 0: outside the ample normalization deg E >= 1");
    return warnings;
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

void run_geometry(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    json doc;
    doc["geometry"] = geometry_to_json(geom);
    doc["warnings"] = geometry_warnings(geom);
    emit(doc);
}

void run_twist(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    Rational beta = need_rational(opt.beta, "--beta");
    json doc;
    doc["twisted"] = twisted_to_json(twist(v, beta, geom));
    emit(doc);
}

void run_slope(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    Slope s = Slope::infinite();
    if (opt.kind == "base") {
        s = mu_hf(v, geom);
    } else if (opt.kind == "base-torsion") {
        s = mu_c(v, geom, torsion_hint(opt));
    } else if (opt.kind == "relative") {
        TiltParams p = TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                        need_rational(opt.beta, "--beta"));
        s = nu_relative(v, p.alpha_sq, p.beta, geom);
    } else if (opt.kind == "mixed") {
        s = nu_mixed(v,
                     TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                      need_rational(opt.beta, "--beta"),
                                      need_rational(opt.t, "--t")),
                     geom);
    } else if (opt.kind == "c-alpha-beta") {
        TiltParams p = TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                        need_rational(opt.beta, "--beta"));
        s = nu_c_alpha_beta(v, p.alpha_sq, p.beta, geom, torsion_hint(opt));
    } else {
        throw UsageError("unknown slope kind '" + opt.kind + "'");
    }
    json doc;
    doc["slope"] = slope_to_json(s);
    emit(doc);
}

void run_charge(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    ChargeValue z{0, 0};
    if (opt.kind == "base") {
        z = z_base(v, geom);
    } else if (opt.kind == "base-torsion") {
        z = z_base_torsion(v);
    } else if (opt.kind == "relative") {
        TiltParams p = TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                        need_rational(opt.beta, "--beta"));
        z = z_relative(v, p.alpha_sq, p.beta, geom);
    } else if (opt.kind == "mixed") {
        z = z_mixed(v,
                    TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                     need_rational(opt.beta, "--beta"),
                                     need_rational(opt.t, "--t")),
                    geom);
    } else if (opt.kind == "relative-torsion") {
        TiltParams p = TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                        need_rational(opt.beta, "--beta"));
        z = z_relative_torsion(v, p.alpha_sq, p.beta, geom);
    } else {
        throw UsageError("unknown charge kind '" + opt.kind + "'");
    }
    json doc;
    doc["charge"] = charge_to_json(z);
    emit(doc);
}

void run_disc(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    Rational beta = need_rational(opt.beta, "--beta");
    Rational t = need_rational(opt.t, "--t");
    json doc;
    doc["beta"] = beta.str();
    doc["t"] = t.str();
    doc["delta_bar"] = delta_bar(v, beta, geom).str();
    doc["delta_tilde"] = delta_tilde(v, beta, geom).str();
    doc["delta_tilde_t"] = delta_tilde_t(v, beta, t, geom).str();
    doc["support_q"] = support_q_form(v, beta, geom).str();
    emit(doc);
}

void run_membership(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    json doc;
    doc["membership"] =
        membership_to_json(heart_membership_necessary(v, need_rational(opt.beta, "--beta"), geom));
    emit(doc);
}

void run_chi(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    json doc;
    doc["chi"] = euler_char(v, geom).str();
    emit(doc);
}

void run_hn(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    if (opt.lattice_path.empty()) throw UsageError("missing required flag --lattice");
    SubobjectLattice lat = lattice_from_json(read_json_file(opt.lattice_path));
    SlopeFunction f;
    if (opt.kind == "mu_hf") {
        f = slope_function_mu_hf(geom);
    } else if (opt.kind == "mu_c") {
        f = slope_function_mu_c(geom);
    } else if (opt.kind == "nu_relative") {
        TiltParams p = TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                        need_rational(opt.beta, "--beta"));
        f = slope_function_nu_relative(p.alpha_sq, p.beta, geom);
    } else if (opt.kind == "nu_mixed") {
        f = slope_function_nu_mixed(TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                                     need_rational(opt.beta, "--beta"),
                                                     need_rational(opt.t, "--t")),
                                    geom);
    } else {
        throw UsageError("unknown HN slope kind '" + opt.kind + "'");
    }
    json doc = hn_to_json(hn_filtration(lat, f));
    doc["slope_kind"] = opt.kind;
    emit(doc);
}

void run_wall_solve(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    ContractedClass w = load_class(opt.other_path, geom);
    WallSolution sol = wall_alpha_sq(v, w, need_rational(opt.beta, "--beta"),
                                     need_rational(opt.t, "--t"), geom);
    json doc;
    doc["wall"] = wall_solution_to_json(sol);
    emit(doc);
}

void run_wall_first(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    if (opt.candidates_path.empty()) throw UsageError("missing required flag --candidates");
    std::vector<ContractedClass> candidates =
        candidates_from_json(read_json_file(opt.candidates_path));
    WallDirection dir;
    if (opt.direction == "below") dir = WallDirection::below;
    else if (opt.direction == "above") dir = WallDirection::above;
    else throw UsageError("--direction expects below or above");
    FirstWall fw = first_wall(v, candidates, need_rational(opt.beta, "--beta"),
                              need_rational(opt.t, "--t"),
                              need_rational(opt.alpha_sq, "--alpha-sq"), geom, dir);
    json doc;
    if (fw.found) {
        json inner;
        inner["alpha_sq"] = fw.alpha_sq.str();
        json witnesses = json::array();
        for (const ContractedClass& w : fw.witnesses) witnesses.push_back(class_to_json(w));
        inner["witnesses"] = witnesses;
        doc["first_wall"] = inner;
    } else {
        doc["first_wall"] = nullptr;
    }
    emit(doc);
}

void run_wall_enum(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    if (opt.bounds_path.empty()) throw UsageError("missing required flag --bounds");
    EnumerationBounds bounds = bounds_from_json(read_json_file(opt.bounds_path));
    std::vector<ContractedClass> found = enumerate_destabilizer_classes(
        v, need_rational(opt.beta, "--beta"), need_rational(opt.t, "--t"), geom, bounds);
    json classes = json::array();
    for (const ContractedClass& w : found) classes.push_back(class_to_json(w));
    json doc;
    doc["count"] = found.size();
    doc["classes"] = classes;
    emit(doc);
}

void run_wall_scan(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    ContractedClass w = load_class(opt.other_path, geom);
    if (opt.beta_range.empty()) throw UsageError("missing required flag --beta-range");
    auto first_colon = opt.beta_range.find(':');
    auto second_colon =
        first_colon == std::string::npos ? std::string::npos
                                         : opt.beta_range.find(':', first_colon + 1);
    if (second_colon == std::string::npos)
        throw UsageError("--beta-range expects the form a:b:steps");
    Rational lo = Rational::parse(opt.beta_range.substr(0, first_colon));
    Rational hi = Rational::parse(opt.beta_range.substr(first_colon + 1, second_colon - first_colon - 1));
    Rational steps_r = Rational::parse(opt.beta_range.substr(second_colon + 1));
    if (!steps_r.is_integer() || steps_r <= Rational(0))
        throw UsageError("--beta-range steps must be a positive integer");
    long steps = steps_r.num().get_si();

    WallCurve curve = wall_curve_sample(v, w, need_rational(opt.t, "--t"), lo, hi, steps, geom);

    if (opt.plot) {
        // two-column plot data; the second column is approximate by design
        std::printf("# beta  sqrt_alpha_sq  (second column approximate, %d digits)\n",
                    opt.precision);
        for (const WallCurvePoint& pt : curve.points)
            std::printf("%s %.*f\n", pt.beta.str().c_str(), opt.precision,
                        std::sqrt(pt.alpha_sq.approx()));
        return;
    }
    json points = json::array();
    for (const WallCurvePoint& pt : curve.points) {
        json p;
        p["beta"] = pt.beta.str();
        p["alpha_sq"] = pt.alpha_sq.str();
        points.push_back(p);
    }
    json doc;
    doc["points"] = points;
    doc["all_alpha_seen"] = curve.all_alpha_seen;
    emit(doc);
}

void run_pb_coeffs(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    BmtCoefficients c = bmt_coefficients(need_rational(opt.beta, "--beta"), geom);
    json doc;
    doc["beta"] = c.beta.str();
    doc["a0"] = c.a0.str();
    doc["a1"] = c.a1.str();
    doc["a2"] = c.a2.str();
    emit(doc);
}

void run_pb_region(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    bool t0_defaulted = opt.t0 == "0";
    RegionReport rep =
        region_check(need_rational(opt.alpha_sq, "--alpha-sq"), need_rational(opt.beta, "--beta"),
                     need_rational(opt.t, "--t"), need_rational(opt.t0, "--t0"), geom, t0_defaulted);
    emit(region_to_json(rep));
}

ConjectureCoefficients load_coefficients(const Options& opt, const Rational& beta,
                                         const FibredGeometry& geom, std::string& source) {
    if (opt.from_main2 && !opt.coeffs_path.empty())
        throw UsageError("--from-main2 and --conjecture-coeffs are mutually exclusive");
    if (opt.from_main2) {
        source = "main2";
        return main2_specialization(beta, geom);
    }
    if (!opt.coeffs_path.empty()) {
        source = "file";
        return coefficients_from_json(read_json_file(opt.coeffs_path));
    }
    throw UsageError("one of --from-main2 or --conjecture-coeffs is required");
}

void run_pb_margin(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    TiltParams p = TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                    need_rational(opt.beta, "--beta"), need_rational(opt.t, "--t"));
    std::string source;
    ConjectureCoefficients coeffs = load_coefficients(opt, p.beta, geom, source);
    // the (6.1) evaluator is unconditional; explicit conjecture coefficients
    // must satisfy the conjecture's a1 > 0
    Rational margin = opt.from_main2 ? main2_margin(v, p.beta, geom)
                                     : conjecture_margin(v, p, coeffs, geom);
    json doc;
    doc["margin"] = margin.str();
    doc["holds"] = margin >= Rational(0);
    doc["coefficients"] = coefficients_to_json(coeffs);
    doc["source"] = source;
    emit(doc);
}

void run_pb_zl(const Options& opt) {
    FibredGeometry geom = load_geometry(opt);
    ContractedClass v = load_class(opt.class_path, geom);
    TiltParams p = TiltParams::make(need_rational(opt.alpha_sq, "--alpha-sq"),
                                    need_rational(opt.beta, "--beta"), need_rational(opt.t, "--t"));
    Rational l = need_rational(opt.l, "--l");
    std::string source;
    ConjectureCoefficients coeffs = load_coefficients(opt, p.beta, geom, source);
    json doc;
    doc["l"] = l.str();
    doc["charge"] = charge_to_json(z_l(v, p, l, coeffs, geom));
    doc["l_above_max_b1_0"] = z_l_advisory_ok(l, coeffs);
    doc["source"] = source;
    emit(doc);
}

void run_validate(const Options& opt) {
    if (opt.class_path.empty() && opt.lattice_path.empty() && opt.geometry_path.empty())
        throw UsageError("validate needs at least one of --class, --lattice, --geometry");
    json doc;
    std::optional<FibredGeometry> geom;
    if (!opt.geometry_path.empty()) {
        geom = load_geometry(opt);
        doc["geometry_valid"] = true;
        doc["warnings"] = geometry_warnings(*geom);
    }
    if (!opt.class_path.empty()) {
        json cj = read_json_file(opt.class_path);
        ContractedClass v;
        if (cj.is_object() && cj.contains("c1")) {
            if (!geom) throw UsageError("Chow class validation needs --geometry");
            v = contract(chow_from_json(cj), *geom);
        } else {
            v = class_from_json(cj);
        }
        doc["integral"] = validate_integrality(v);
        doc["class"] = class_to_json(v);
    }
    if (!opt.lattice_path.empty()) {
        validate_lattice(lattice_from_json(read_json_file(opt.lattice_path)));
        doc["lattice_valid"] = true;
    }
    emit(doc);
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--geometry", opt.geometry_path, "geometry JSON file");
    cmd->add_flag("--json", opt.json_output, "JSON output (the default)");
}

void add_params(CLI::App* cmd, Options& opt, bool with_t = true) {
    cmd->add_option("--alpha-sq", opt.alpha_sq, "alpha^2 as an exact rational");
    cmd->add_option("--beta", opt.beta, "beta as an exact rational");
    if (with_t) cmd->add_option("--t", opt.t, "t as an exact rational (default 0)");
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact stability-condition calculator for threefolds fibred over a curve"};
    app.require_subcommand(1);

    CLI::App* geometry = app.add_subcommand("geometry", "validate and echo a geometry file");
    add_common(geometry, opt);
    geometry->callback([&] { run_geometry(opt); });

    CLI::App* twist_cmd = app.add_subcommand("twist", "twisted Chern character contractions");
    add_common(twist_cmd, opt);
    twist_cmd->add_option("--class", opt.class_path, "class JSON file");
    twist_cmd->add_option("--beta", opt.beta, "twist parameter");
    twist_cmd->callback([&] { run_twist(opt); });

    CLI::App* slope = app.add_subcommand("slope", "slope of a class");
    add_common(slope, opt);
    slope->add_option("--class", opt.class_path, "class JSON file");
    slope->add_option("--kind", opt.kind, "base | base-torsion | relative | mixed | c-alpha-beta")
        ->required();
    slope->add_option("--c-torsion", opt.c_torsion, "C-torsion hint (true/false)");
    add_params(slope, opt);
    slope->callback([&] { run_slope(opt); });

    CLI::App* charge = app.add_subcommand("charge", "central charge of a class");
    add_common(charge, opt);
    charge->add_option("--class", opt.class_path, "class JSON file");
    charge
        ->add_option("--kind", opt.kind,
                     "base | base-torsion | relative | mixed | relative-torsion")
        ->required();
    add_params(charge, opt);
    charge->callback([&] { run_charge(opt); });

    CLI::App* disc = app.add_subcommand("disc", "generalized discriminants of a class");
    add_common(disc, opt);
    disc->add_option("--class", opt.class_path, "class JSON file");
    disc->add_option("--beta", opt.beta, "twist parameter");
    disc->add_option("--t", opt.t, "H_t = H + tF parameter (default 0)");
    disc->callback([&] { run_disc(opt); });

    CLI::App* membership = app.add_subcommand("membership", "tilted-heart membership conditions");
    add_common(membership, opt);
    membership->add_option("--class", opt.class_path, "class JSON file");
    membership->add_option("--beta", opt.beta, "twist parameter");
    membership->callback([&] { run_membership(opt); });

    CLI::App* chi = app.add_subcommand("chi", "Euler characteristic via GRR on P(E)");
    add_common(chi, opt);
    chi->add_option("--class", opt.class_path, "class JSON file");
    chi->callback([&] { run_chi(opt); });

    CLI::App* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration over a lattice");
    add_common(hn, opt);
    hn->add_option("--lattice", opt.lattice_path, "subobject lattice JSON file");
    hn->add_option("--kind", opt.kind, "mu_hf | mu_c | nu_relative | nu_mixed")->required();
    add_params(hn, opt);
    hn->callback([&] { run_hn(opt); });

    CLI::App* wall = app.add_subcommand("wall", "wall computations for the mixed charge");
    wall->require_subcommand(1);

    CLI::App* wall_solve = wall->add_subcommand("solve", "solve for the wall in alpha^2");
    add_common(wall_solve, opt);
    wall_solve->add_option("--class", opt.class_path, "class JSON file");
    wall_solve->add_option("--other", opt.other_path, "second class JSON file");
    wall_solve->add_option("--beta", opt.beta, "twist parameter");
    wall_solve->add_option("--t", opt.t, "mixing parameter (default 0)");
    wall_solve->callback([&] { run_wall_solve(opt); });

    CLI::App* wall_first = wall->add_subcommand("first", "first wall from a start value");
    add_common(wall_first, opt);
    wall_first->add_option("--class", opt.class_path, "class JSON file");
    wall_first->add_option("--candidates", opt.candidates_path, "candidate classes JSON file");
    wall_first->add_option("--direction", opt.direction, "below (default) or above");
    add_params(wall_first, opt);
    wall_first->callback([&] { run_wall_first(opt); });

    CLI::App* wall_enum = wall->add_subcommand("enum", "enumerate destabilizer classes");
    add_common(wall_enum, opt);
    wall_enum->add_option("--class", opt.class_path, "ambient class JSON file");
    wall_enum->add_option("--bounds", opt.bounds_path, "enumeration bounds JSON file");
    wall_enum->add_option("--beta", opt.beta, "twist parameter");
    wall_enum->add_option("--t", opt.t, "mixing parameter (default 0)");
    wall_enum->callback([&] { run_wall_enum(opt); });

    CLI::App* wall_scan = wall->add_subcommand("scan", "trace the wall locus over a beta range");
    add_common(wall_scan, opt);
    wall_scan->add_option("--class", opt.class_path, "class JSON file");
    wall_scan->add_option("--other", opt.other_path, "second class JSON file");
    wall_scan->add_option("--beta-range", opt.beta_range, "a:b:steps with exact rationals");
    wall_scan->add_option("--t", opt.t, "mixing parameter (default 0)");
    wall_scan->add_flag("--plot", opt.plot, "emit two-column plot text instead of JSON");
    wall_scan->add_option("--precision", opt.precision, "digits for the approximate column");
    wall_scan->callback([&] { run_wall_scan(opt); });

    CLI::App* pbundle = app.add_subcommand("pbundle", "projective-bundle specific computations");
    pbundle->require_subcommand(1);

    CLI::App* pb_coeffs = pbundle->add_subcommand("coeffs", "derived inequality coefficients");
    add_common(pb_coeffs, opt);
    pb_coeffs->add_option("--beta", opt.beta, "twist parameter");
    pb_coeffs->callback([&] { run_pb_coeffs(opt); });

    CLI::App* pb_region = pbundle->add_subcommand("region", "parameter-region check");
    add_common(pb_region, opt);
    add_params(pb_region, opt);
    pb_region->add_option("--t0", opt.t0, "stability threshold t0 (default 0, optimistic)");
    pb_region->callback([&] { run_pb_region(opt); });

    CLI::App* pb_margin = pbundle->add_subcommand("margin", "inequality margin of a class");
    add_common(pb_margin, opt);
    pb_margin->add_option("--class", opt.class_path, "class JSON file");
    pb_margin->add_option("--conjecture-coeffs", opt.coeffs_path, "coefficients JSON file");
    pb_margin->add_flag("--from-main2", opt.from_main2, "use the derived specialization");
    add_params(pb_margin, opt);
    pb_margin->callback([&] { run_pb_margin(opt); });

    CLI::App* pb_zl = pbundle->add_subcommand("zl", "the z_l central charge");
    add_common(pb_zl, opt);
    pb_zl->add_option("--class", opt.class_path, "class JSON file");
    pb_zl->add_option("--l", opt.l, "the l parameter");
    pb_zl->add_option("--conjecture-coeffs", opt.coeffs_path, "coefficients JSON file");
    pb_zl->add_flag("--from-main2", opt.from_main2, "use the derived specialization");
    add_params(pb_zl, opt);
    pb_zl->callback([&] { run_pb_zl(opt); });

    CLI::App* validate = app.add_subcommand("validate", "validate inputs and lattice integrality");
    add_common(validate, opt);
    validate->add_option("--class", opt.class_path, "class JSON file");
    validate->add_option("--lattice", opt.lattice_path, "lattice JSON file");
    validate->callback([&] { run_validate(opt); });

    // "tilt charge ..." and friends are accepted as spelled in the docs
    std::vector<const char*> args;
    args.push_back(argv[0]);
    int start = 1;
    if (argc > 1 && std::string(argv[1]) == "tilt") start = 2;
    for (int i = start; i < argc; ++i) args.push_back(argv[i]);

    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        json doc;
        json err;
        err["name"] = e.name();
        err["message"] = e.what();
        doc["error"] = err;
        std::cout << doc.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        // anything else that escapes is malformed input (odd JSON shapes)
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
