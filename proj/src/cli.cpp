#include "trig/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "trig/accept.hpp"
#include "trig/jsonio.hpp"
#include "trig/parse.hpp"

namespace trig::cli {

namespace {

struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;
};

FieldSpec parse_field(const std::string& s) {
    if (s.empty() || s == "q") return FieldSpec{true, 0};
    if (s.rfind("p=", 0) == 0) {
        FieldSpec f;
        f.rational = false;
        try {
            f.p = std::stoull(s.substr(2));
        } catch (const std::exception&) {
            throw Error(ErrorKind::usage, "bad --field value '" + s + "'");
        }
        Fp::check_modulus(f.p);
        return f;
    }
    throw Error(ErrorKind::usage,
                "--field must be 'q' or 'p=<prime>', got '" + s + "'");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::usage, "cannot open file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::parse,
                    "bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

std::string polyq_str(const PolyQ& p) { return to_string(p, "g"); }

// ---- chow ---------------------------------------------------------------

int cmd_chow_class_w(std::ostream& out, const std::string& format) {
    auto w = class_of_W();
    if (format == "json") {
        Json j;
        j["class_w"] = w.final_class.str();
        j["intermediate"] = w.intermediate.str();
        emit(out, j);
    } else {
        out << w.final_class.str() << "\n";
    }
    return 0;
}

int cmd_chow_class_y(std::ostream& out, bool symbolic, long genus) {
    auto y = class_of_Y();
    Json j;
    if (symbolic) {
        j["delta1"] = polyq_str(y.y.delta1);
        j["gamma1"] = polyq_str(y.y.gamma1);
        j["sigma1"] = polyq_str(y.y.sigma1);
        j["restriction_check"] = polyq_str(restriction_to_gm(y.y));
    } else {
        Rat gr(genus);
        j["g"] = genus;
        j["delta1"] = to_string(y.y.delta1.eval(gr));
        j["gamma1"] = to_string(y.y.gamma1.eval(gr));
        j["sigma1"] = to_string(y.y.sigma1.eval(gr));
        j["restriction_check"] =
            to_string(restriction_to_gm(y.y).eval(gr));
        auto kc = kernel_coordinates(y.y, genus);
        j["kernel_coords"] = Json::array({kc.a.get_str(), kc.b.get_str()});
    }
    emit(out, j);
    return 0;
}

int cmd_chow_picard(std::ostream& out, long from, long to,
                    const std::string& format) {
    if (from < 2)
        throw Error(ErrorKind::usage, "picard needs --from >= 2");
    if (to < from)
        throw Error(ErrorKind::usage, "picard needs --to >= --from");
    auto rows = picard_table(from, to);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(picard_row_json(r));
        emit(out, arr);
    } else if (format == "csv") {
        out << "g,a,b,group\n";
        for (const auto& r : rows)
            out << r.g << "," << r.a.get_str() << "," << r.b.get_str()
                << "," << group_string(r.free_rank, r.torsion) << "\n";
    } else {
        out << std::left << std::setw(6) << "g" << std::setw(8) << "a"
            << std::setw(8) << "b"
            << "group\n";
        for (const auto& r : rows)
            out << std::left << std::setw(6) << r.g << std::setw(8)
                << r.a.get_str() << std::setw(8) << r.b.get_str()
                << group_string(r.free_rank, r.torsion) << "\n";
    }
    return 0;
}

// ---- cover --------------------------------------------------------------

int cmd_cover_singular(std::ostream& out, const std::string& f_str,
                       const std::string& g_str, const FieldSpec& field) {
    if (field.rational) {
        auto f = parse_form_q(f_str, "x1", "x2", 3);
        auto g = parse_form_q(g_str, "x1", "x2", 3);
        emit(out, singular_verdict_json(in_W(DualCubic<Rat>(f, g))));
    } else {
        auto f = parse_form_fp(f_str, field.p, "x1", "x2", 3);
        auto g = parse_form_fp(g_str, field.p, "x1", "x2", 3);
        emit(out, singular_verdict_json(in_W(DualCubic<Fp>(f, g))));
    }
    return 0;
}

int cmd_cover_build(std::ostream& out, const std::string& cubic,
                    const FieldSpec& field) {
    if (field.rational) {
        auto f = parse_form_q(cubic, "x1", "x2", 3);
        Json j = algebra_json(form_to_algebra(f));
        j["fiber_type"] = to_string(fiber_type(f));
        j["discriminant"] = to_string(cubic_discriminant(f));
        emit(out, j);
    } else {
        auto f = parse_form_fp(cubic, field.p, "x1", "x2", 3);
        Json j = algebra_json(form_to_algebra(f));
        j["fiber_type"] = to_string(fiber_type(f));
        j["discriminant"] = to_string(cubic_discriminant(f));
        emit(out, j);
    }
    return 0;
}

int cmd_cover_smooth(std::ostream& out, const std::string& input,
                     const FieldSpec& field) {
    Json j = load_json_file(input);
    if (field.rational) {
        auto datum = datum_from_json_q(j);
        emit(out, smooth_verdict_json(smooth_check(datum)));
    } else {
        auto datum = datum_from_json_fp(j, field.p);
        emit(out, smooth_verdict_json(smooth_check(datum)));
    }
    return 0;
}

// ---- bundle ---------------------------------------------------------------

int cmd_bundle_split(std::ostream& out, const std::string& input,
                     const FieldSpec& field) {
    Json j = load_json_file(input);
    std::vector<int> s;
    if (field.rational) {
        s = splitting_type(matrix_from_json_q(j));
    } else {
        s = splitting_type(matrix_from_json_fp(j, field.p));
    }
    Json o;
    o["splitting"] = s;
    emit(out, o);
    return 0;
}

int cmd_bundle_degeneracy(std::ostream& out, const std::string& input,
                          const FieldSpec& field) {
    Json j = load_json_file(input);
    bool nondeg = field.rational
                      ? degeneracy_check(matrix_from_json_q(j))
                      : degeneracy_check(matrix_from_json_fp(j, field.p));
    Json o;
    o["nondegenerate"] = nondeg;
    emit(out, o);
    return 0;
}

int cmd_bundle_probe(std::ostream& out, int r, int d, std::uint64_t p,
                     long trials, std::uint64_t seed, bool exhaustive) {
    auto res = codim_probe(r, d, p, trials, seed, exhaustive);
    emit(out, probe_json(res));
    return 0;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(std::ostream& out, const std::string& only) {
    auto results = accept::run_all(only);
    if (results.empty())
        throw Error(ErrorKind::usage, "no check matches '" + only + "'");
    accept::print_report(results, out);
    return accept::all_passed(results) ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact computations for triple covers of the line"};
    app.name("trig");
    app.require_subcommand(1);

    // chow --------------------------------------------------------------
    auto* chow = app.add_subcommand("chow", "equivariant class pipeline");
    chow->require_subcommand(1);

    std::string cw_format = "json";
    auto* cw = chow->add_subcommand("class-w", "class of the W locus");
    cw->add_option("--format", cw_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    bool cy_symbolic = false;
    long cy_genus = -1;
    auto* cy = chow->add_subcommand("class-y", "class of Y_g");
    cy->add_flag("--symbolic", cy_symbolic, "keep g symbolic");
    cy->add_option("--genus", cy_genus, "instantiate at this genus");

    long pic_from = 2, pic_to = 200;
    std::string pic_format = "json";
    auto* pic = chow->add_subcommand("picard", "Picard group table");
    pic->add_option("--from", pic_from, "first genus (>= 2)");
    pic->add_option("--to", pic_to, "last genus");
    pic->add_option("--format", pic_format, "json|text|csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));

    // cover ---------------------------------------------------------------
    auto* cover = app.add_subcommand("cover", "triple covers and cubics");
    cover->require_subcommand(1);

    std::string sing_f, sing_g = "0", sing_field = "q";
    auto* sing = cover->add_subcommand(
        "singular", "first-order singularity test (W membership)");
    sing->add_option("--f", sing_f, "binary cubic in x1, x2")->required();
    sing->add_option("--g", sing_g, "first-order term, binary cubic");
    sing->add_option("--field", sing_field, "q or p=<prime>");

    std::string build_cubic, build_field = "q";
    auto* build = cover->add_subcommand(
        "build", "structure constants of the cubic algebra");
    build->add_option("--cubic", build_cubic, "binary cubic in x1, x2")
        ->required();
    build->add_option("--field", build_field, "q or p=<prime>");

    std::string smooth_input, smooth_field = "q";
    auto* smooth = cover->add_subcommand(
        "smooth", "global smoothness of a trigonal datum");
    smooth->add_option("--input", smooth_input, "datum JSON file")
        ->required();
    smooth->add_option("--field", smooth_field, "q or p=<prime>");

    // bundle --------------------------------------------------------------
    auto* bundle =
        app.add_subcommand("bundle", "matrices of linear forms on P^1");
    bundle->require_subcommand(1);

    std::string split_input, split_field = "q";
    auto* split = bundle->add_subcommand("split", "splitting type");
    split->add_option("--input", split_input, "matrix JSON file")
        ->required();
    split->add_option("--field", split_field, "q or p=<prime>");

    std::string deg_input, deg_field = "q";
    auto* degsub = bundle->add_subcommand("degeneracy",
                                          "full-rank-everywhere test");
    degsub->add_option("--input", deg_input, "matrix JSON file")
        ->required();
    degsub->add_option("--field", deg_field, "q or p=<prime>");

    int probe_r = 2, probe_d = 4;
    std::uint64_t probe_p = 101, probe_seed = 0;
    long probe_trials = 1000;
    bool probe_exhaustive = false;
    auto* probe =
        bundle->add_subcommand("probe", "degeneracy statistics over F_p");
    probe->add_option("--r", probe_r, "cokernel rank")->required();
    probe->add_option("--d", probe_d, "cokernel degree")->required();
    probe->add_option("--p", probe_p, "prime > 3")->required();
    probe->add_option("--trials", probe_trials, "sample count");
    probe->add_option("--seed", probe_seed, "random seed");
    probe->add_flag("--exhaustive", probe_exhaustive,
                    "enumerate the whole space");

    // verify ---------------------------------------------------------------
    std::string verify_only;
    auto* verify =
        app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--only", verify_only, "filter by check id");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        Json j;
        j["error"] = {{"kind", "usage"}, {"message", e.what()}};
        err << j.dump() << "\n";
        return 2;
    }

    try {
        if (cw->parsed()) return cmd_chow_class_w(out, cw_format);
        if (cy->parsed()) {
            if (!cy_symbolic && cy_genus < 0) cy_symbolic = true;
            if (!cy_symbolic && cy_genus < 2)
                throw Error(ErrorKind::usage, "--genus must be >= 2");
            return cmd_chow_class_y(out, cy_symbolic, cy_genus);
        }
        if (pic->parsed())
            return cmd_chow_picard(out, pic_from, pic_to, pic_format);
        if (sing->parsed())
            return cmd_cover_singular(out, sing_f, sing_g,
                                      parse_field(sing_field));
        if (build->parsed())
            return cmd_cover_build(out, build_cubic,
                                   parse_field(build_field));
        if (smooth->parsed())
            return cmd_cover_smooth(out, smooth_input,
                                    parse_field(smooth_field));
        if (split->parsed())
            return cmd_bundle_split(out, split_input,
                                    parse_field(split_field));
        if (degsub->parsed())
            return cmd_bundle_degeneracy(out, deg_input,
                                         parse_field(deg_field));
        if (probe->parsed())
            return cmd_bundle_probe(out, probe_r, probe_d, probe_p,
                                    probe_trials, probe_seed,
                                    probe_exhaustive);
        if (verify->parsed()) return cmd_verify(out, verify_only);
        throw Error(ErrorKind::usage, "no subcommand given");
    } catch (const Error& e) {
        const char* kind = "domain";
        int code = 1;
        switch (e.kind()) {
            case ErrorKind::usage:
            case ErrorKind::parse:
                kind = e.kind() == ErrorKind::usage ? "usage" : "parse";
                code = 2;
                break;
            case ErrorKind::contract: kind = "contract"; break;
            case ErrorKind::config: kind = "config"; break;
            case ErrorKind::not_in_kernel: kind = "not_in_kernel"; break;
            case ErrorKind::domain: kind = "domain"; break;
        }
        Json j;
        j["error"] = {{"kind", kind}, {"message", e.what()}};
        err << j.dump() << "\n";
        return code;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = {{"kind", "internal"}, {"message", e.what()}};
        err << j.dump() << "\n";
        return 1;
    }
}

} // namespace trig::cli
