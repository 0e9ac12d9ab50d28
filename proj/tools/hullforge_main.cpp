// Command-line front end: construct, analyze, transform, search, and emit
// EAQEC tables for linear codes over small finite fields.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hullforge/acceptance.hpp"
#include "hullforge/constructions.hpp"
#include "hullforge/eaqec.hpp"
#include "hullforge/hull_analysis.hpp"
#include "hullforge/io.hpp"

namespace hf = hullforge;

namespace {

const hf::Field& field_from_q(uint32_t q) {
    if (q < 2) throw hf::InvalidField("q must be >= 2");
    uint32_t p = 2;
    while (q % p != 0) ++p;
    int m = 0;
    uint32_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw hf::InvalidField("q = " + std::to_string(q) + " is not a prime power");
    return hf::Field::get(static_cast<int>(p), m);
}

// "1..7" (inclusive range of reps) or "1,5,2" (explicit list).
std::vector<uint32_t> parse_reps(const std::string& text) {
    std::vector<uint32_t> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        uint32_t lo = static_cast<uint32_t>(std::stoul(text.substr(0, dots)));
        uint32_t hi = static_cast<uint32_t>(std::stoul(text.substr(dots + 2)));
        if (hi < lo) throw hf::ParseError("empty range " + text);
        for (uint32_t v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(static_cast<uint32_t>(std::stoul(item)));
    if (out.empty()) throw hf::ParseError("empty element list");
    return out;
}

std::string join_reps(const std::vector<uint32_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

hf::LinearCode load_code(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hf::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return hf::parse_code_file(ss.str());
}

void emit_code(const hf::LinearCode& code, const std::string& out_path, const std::string& comment) {
    std::string text;
    if (!comment.empty()) text += "# " + comment + "\n";
    text += hf::serialize_code_file(code);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw hf::ParseError("cannot open " + out_path + " for writing");
        out << text;
    }
}

hf::Kind parse_kind(const std::string& s) {
    if (s == "euclidean") return hf::Kind::euclidean;
    if (s == "hermitian") return hf::Kind::hermitian;
    throw hf::ParseError("--kind must be euclidean or hermitian");
}

hf::Poly parse_poly(const hf::Field& f, const std::string& coeffs) {
    return hf::Poly(f, parse_reps(coeffs));
}

std::string params_line(const hf::EaqecParams& p) {
    std::ostringstream out;
    out << "[[" << p.n << ", " << p.k << ", " << (p.d_is_lower_bound ? ">=" : "") << p.d << ", "
        << p.c << "]]_" << p.q << "\tsingleton=";
    auto s = hf::singleton_k_max(p);
    if (s)
        out << *s;
    else
        out << "n/a";
    out << "\tclass=" << hf::to_string(hf::classify(p));
    return out.str();
}

void analyze(const hf::LinearCode& c) {
    const hf::Field& f = c.field();
    std::cout << "field GF(" << f.q() << ") p=" << f.p() << " m=" << f.m() << "\n";
    std::cout << "n=" << c.n() << " k=" << c.k() << "\n";
    try {
        std::cout << "d=" << c.distance() << "\n";
        std::cout << "dual_d=" << c.dual_distance() << "\n";
    } catch (const hf::TooLargeToEnumerate&) {
        std::cout << "d=unknown (enumeration beyond 2^24)\n";
    }
    std::cout << "euclidean_hull=" << c.hull_dim(hf::Kind::euclidean) << "\n";
    std::cout << "lcd=" << (c.predicate(hf::Predicate::lcd) ? "true" : "false") << "\n";
    std::cout << "self_dual=" << (c.predicate(hf::Predicate::self_dual) ? "true" : "false") << "\n";
    std::cout << "self_orthogonal=" << (c.predicate(hf::Predicate::self_orthogonal) ? "true" : "false")
              << "\n";
    if (f.has_hermitian()) {
        std::cout << "hermitian_hull=" << c.hull_dim(hf::Kind::hermitian) << "\n";
        std::cout << "hermitian_lcd=" << (c.predicate(hf::Predicate::hermitian_lcd) ? "true" : "false")
                  << "\n";
        std::cout << "hermitian_self_dual="
                  << (c.predicate(hf::Predicate::hermitian_self_dual) ? "true" : "false") << "\n";
    }
    if (c.n() % 2 == 0) {
        try {
            bool ok = hf::macwilliams_selfdual_check(c.weight_distribution(), f.q());
            std::cout << "macwilliams_selfdual=" << (ok ? "pass" : "fail") << "\n";
        } catch (const hf::TooLargeToEnumerate&) {
            std::cout << "macwilliams_selfdual=unknown\n";
        }
    }
}

int dispatch(int argc, char** argv) {
    CLI::App app{"linear-code hull toolkit"};
    app.require_subcommand(1);

    std::string kind_str = "euclidean";
    app.add_option("--kind", kind_str, "inner product: euclidean or hermitian")
        ->check(CLI::IsMember({"euclidean", "hermitian"}));

    // ------------------------------------------------------------ construct
    auto* construct = app.add_subcommand("construct", "build a code and print its file");
    construct->require_subcommand(1);
    uint32_t q = 0;
    size_t n_opt = 0, k_opt = 0;
    std::string points_str, mult_str, gen_str, out_path;
    int hull_l = -1;
    uint32_t eta = 0;
    uint64_t delta = 2, b = 1;

    auto* cgrs = construct->add_subcommand("grs", "generalized Reed-Solomon code");
    cgrs->add_option("--q", q, "field order")->required();
    cgrs->add_option("--points", points_str, "evaluation points, `1..7` or `1,5,2`")->required();
    cgrs->add_option("--k", k_opt, "dimension")->required();
    cgrs->add_option("--hull", hull_l, "exact Euclidean hull dimension (char 2)");
    cgrs->add_option("--multipliers", mult_str, "column multipliers (default all 1)");
    cgrs->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* ctrs = construct->add_subcommand("trs", "twisted Reed-Solomon code on a subgroup");
    ctrs->add_option("--q", q, "field order")->required();
    ctrs->add_option("--n", n_opt, "subgroup order (divides q-1)")->required();
    ctrs->add_option("--k", k_opt, "dimension")->required();
    ctrs->add_option("--eta", eta, "twist element rep")->required();
    ctrs->add_option("--hull", hull_l, "exact Euclidean hull dimension (char 2)");
    ctrs->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* ccyc = construct->add_subcommand("cyclic", "cyclic code from a generator polynomial");
    ccyc->add_option("--q", q, "field order")->required();
    ccyc->add_option("--n", n_opt, "length")->required();
    ccyc->add_option("--generator", gen_str, "ascending coefficients c0,c1,...")->required();
    ccyc->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* cneg = construct->add_subcommand("negacyclic", "negacyclic code from a generator polynomial");
    cneg->add_option("--q", q, "field order")->required();
    cneg->add_option("--n", n_opt, "length")->required();
    cneg->add_option("--generator", gen_str, "ascending coefficients c0,c1,...")->required();
    cneg->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* cbch = construct->add_subcommand("bch", "BCH code with designed distance delta");
    cbch->add_option("--q", q, "field order")->required();
    cbch->add_option("--n", n_opt, "length (coprime to q)")->required();
    cbch->add_option("--delta", delta, "designed distance")->required();
    cbch->add_option("--b", b, "first consecutive root exponent (default 1)");
    cbch->add_option("-o,--output", out_path, "output file (default stdout)");

    // -------------------------------------------------------------- analyze
    std::string in_path;
    auto* an = app.add_subcommand("analyze", "parameters, hulls, predicates of a code file");
    an->add_option("file", in_path, "code file")->required();

    // ------------------------------------------------------------ transform
    auto* transform = app.add_subcommand("transform", "equivalence transforms");
    transform->require_subcommand(1);
    std::string vec_str;
    size_t hull_h = 0;
    int position = -1;

    auto* tscale = transform->add_subcommand("scale", "coordinatewise scaling v . C");
    tscale->add_option("file", in_path)->required();
    tscale->add_option("--v", vec_str, "full-weight vector, comma-separated reps")->required();
    tscale->add_option("-o,--output", out_path);

    auto* tdist = transform->add_subcommand("lambda-disturb",
                                            "single-coordinate scaling of an LCD code to hull 1");
    tdist->add_option("file", in_path)->required();
    tdist->add_option("--position", position, "coordinate (default: first admissible)");
    tdist->add_option("-o,--output", out_path);

    auto* tsd = transform->add_subcommand("selfdual-to-hull",
                                          "equivalent code with hull exactly h from a self-dual code");
    tsd->add_option("file", in_path)->required();
    tsd->add_option("--hull", hull_h, "target hull dimension")->required();
    tsd->add_option("-o,--output", out_path);

    auto* tneg = transform->add_subcommand("negate-variable", "x -> -x on a cyclic code");
    tneg->add_option("--q", q)->required();
    tneg->add_option("--n", n_opt)->required();
    tneg->add_option("--generator", gen_str, "ascending coefficients c0,c1,...")->required();
    tneg->add_option("-o,--output", out_path);

    auto* teta = transform->add_subcommand("eta", "x -> eta*x with eta^n = +-1");
    teta->add_option("--q", q)->required();
    teta->add_option("--n", n_opt)->required();
    teta->add_option("--generator", gen_str)->required();
    teta->add_option("--eta", eta)->required();
    teta->add_option("-o,--output", out_path);

    // --------------------------------------------------------------- search
    auto* search = app.add_subcommand("search", "maximal hull search");
    search->require_subcommand(1);
    bool exhaustive = false;
    uint64_t trials = 1000, seed = 1;
    auto* smax = search->add_subcommand("maxhull", "maximal hull dimension over scalings");
    smax->add_option("file", in_path)->required();
    smax->add_flag("--exhaustive", exhaustive, "exact search over square/norm classes");
    smax->add_option("--trials", trials, "randomized trial count (default 1000)");
    smax->add_option("--seed", seed, "PRNG seed (default 1)");

    // ---------------------------------------------------------------- eaqec
    auto* eaqec = app.add_subcommand("eaqec", "entanglement-assisted quantum code derivation");
    eaqec->require_subcommand(1);
    auto* ederive = eaqec->add_subcommand("derive", "CSS parameters from a code file");
    ederive->add_option("file", in_path)->required();

    std::string table_in;
    bool symbolic = false;
    auto* etable = eaqec->add_subcommand("table", "emit the table for self-dual input rows");
    etable->add_option("--input", table_in, "rows `q0 n d`, `#` comments")->required();
    etable->add_flag("--symbolic", symbolic, "keep h symbolic, one line per row");

    std::string family_str;
    unsigned s_param = 2;
    auto* efam = eaqec->add_subcommand("family", "closed-form MDS / almost-MDS families");
    efam->add_option("--family", family_str, "cor72 or cor73")
        ->required()
        ->check(CLI::IsMember({"cor72", "cor73"}));
    efam->add_option("--n", n_opt)->required();
    efam->add_option("--k", k_opt, "classical dimension (cor72 only)");
    efam->add_option("--hull", hull_h, "hull dimension h")->required();
    efam->add_option("--s", s_param, "field exponent, q = 2^s")->required();

    // --------------------------------------------------------------- verify
    std::string data_dir = "data";
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--data", data_dir, "directory with the table data files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    hf::Kind kind = parse_kind(kind_str);

    if (cgrs->parsed()) {
        const hf::Field& f = field_from_q(q);
        std::vector<uint32_t> pts = parse_reps(points_str);
        if (hull_l >= 0) {
            if (!mult_str.empty())
                throw hf::PreconditionFailed("--hull and --multipliers are mutually exclusive");
            hf::HullCodeWitness r = hf::grs_with_hull(f, pts, k_opt, static_cast<size_t>(hull_l));
            emit_code(r.code, out_path, "witness_v " + join_reps(r.witness_v));
        } else {
            std::vector<uint32_t> mult =
                mult_str.empty() ? std::vector<uint32_t>(pts.size(), 1) : parse_reps(mult_str);
            emit_code(hf::grs({&f, pts, mult, k_opt}), out_path, "");
        }
    } else if (ctrs->parsed()) {
        const hf::Field& f = field_from_q(q);
        hf::TrsSpec spec{&f, hf::multiplicative_subgroup(f, n_opt), eta, k_opt};
        if (hull_l >= 0) {
            hf::HullCodeWitness r = hf::trs_with_hull(spec, static_cast<size_t>(hull_l));
            emit_code(r.code, out_path, "witness_v " + join_reps(r.witness_v));
        } else {
            emit_code(hf::trs(spec), out_path, "");
        }
    } else if (ccyc->parsed() || cneg->parsed()) {
        const hf::Field& f = field_from_q(q);
        hf::Poly g = parse_poly(f, gen_str);
        uint32_t lambda = ccyc->parsed() ? 1 : f.neg(1);
        emit_code(hf::constacyclic_code(g, lambda, n_opt), out_path, "");
    } else if (cbch->parsed()) {
        const hf::Field& f = field_from_q(q);
        hf::Poly g = hf::bch_generator(f, n_opt, delta, b);
        std::vector<uint32_t> coeffs = g.coeffs();
        emit_code(hf::constacyclic_code(g, 1, n_opt), out_path, "generator " + join_reps(coeffs));
    } else if (an->parsed()) {
        analyze(load_code(in_path));
    } else if (tscale->parsed()) {
        emit_code(load_code(in_path).scale(parse_reps(vec_str)), out_path, "");
    } else if (tdist->parsed()) {
        hf::LinearCode c = load_code(in_path);
        hf::LambdaDisturbResult r = position >= 0
                                        ? hf::lambda_disturb(c, static_cast<size_t>(position))
                                        : hf::lambda_disturb_search(c);
        emit_code(r.code, out_path,
                  "lambda " + std::to_string(r.lambda) + " position " + std::to_string(r.position));
    } else if (tsd->parsed()) {
        hf::ScaledCodeWitness r = hf::selfdual_to_hull(load_code(in_path), hull_h, kind);
        emit_code(r.code, out_path,
                  "lambda " + std::to_string(r.lambda) + " witness_v " + join_reps(r.witness_v));
    } else if (tneg->parsed() || teta->parsed()) {
        const hf::Field& f = field_from_q(q);
        hf::Poly g = parse_poly(f, gen_str);
        hf::ConstacyclicTransform t =
            tneg->parsed() ? hf::negate_variable(g, n_opt) : hf::eta_transform(g, n_opt, eta);
        emit_code(t.code, out_path,
                  "lambda " + std::to_string(t.lambda) + " witness_v " + join_reps(t.witness_v));
    } else if (smax->parsed()) {
        hf::LinearCode c = load_code(in_path);
        hf::MaxHullReport r = exhaustive ? hf::max_hull_exhaustive(c, kind)
                                         : hf::max_hull_randomized(c, kind, trials, seed);
        std::cout << "best_h=" << r.best_h << " exhaustive=" << (r.exhaustive ? "true" : "false")
                  << " candidates=" << r.candidates_tried << " witness_v=" << join_reps(r.witness_v)
                  << "\n";
    } else if (ederive->parsed()) {
        auto [a, bparams] = hf::css_from_hull(load_code(in_path), kind);
        std::cout << params_line(a) << "\n" << params_line(bparams) << "\n";
    } else if (etable->parsed()) {
        std::ifstream in(table_in, std::ios::binary);
        if (!in) throw hf::ParseError("cannot open " + table_in);
        std::vector<hf::TableRow> rows;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            uint32_t q0;
            size_t nn, dd;
            if (!(ls >> q0 >> nn >> dd)) throw hf::ParseError("bad table row: " + line);
            rows.push_back({nn, nn / 2, dd, q0});
        }
        std::cout << hf::table_emit(rows, symbolic);
    } else if (efam->parsed()) {
        hf::Family fam = family_str == "cor72" ? hf::Family::cor72 : hf::Family::cor73;
        std::cout << params_line(hf::family_params(fam, n_opt, k_opt, hull_h, s_param)) << "\n";
    } else if (verify->parsed()) {
        return hf::run_acceptance_and_report(data_dir, std::cout) ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const hf::ParseError& e) {
        std::cerr << "error " << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const hf::Error& e) {
        std::cerr << "error " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
