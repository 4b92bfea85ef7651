// Command-line front end: build, verify, solve, analyze, roots.
//
// Exit codes: 0 success (and "holds" for verify), 1 CYBE failure,
// 2 invalid input, 3 solver inconsistency.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cybe/builders.hpp"
#include "cybe/dual.hpp"
#include "cybe/roots.hpp"
#include "cybe/serialize.hpp"
#include "cybe/tensor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCybeFails = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSolverInconsistent = 3;

std::vector<cybe::Rational> parse_rationals(const std::string& csv) {
    std::vector<cybe::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(cybe::Rational::parse(item));
    return out;
}

void emit(const cybe::json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        f << doc.dump(2) << "\n";
    }
}

cybe::json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
    cybe::json j;
    f >> j;
    return j;
}

int cmd_build(const std::string& kind_name, int n, const std::string& xi_csv,
              const std::string& zeta_csv, const std::string& out_path) {
    cybe::ChainSpec spec;
    spec.kind = cybe::kind_from_name(kind_name);
    if (spec.kind == cybe::ChainKind::Dj3) {
        if (n != 0 && n != 3) throw std::invalid_argument("dj3 is fixed to n = 3");
        n = 3;
    }
    if (n == 0) throw std::invalid_argument("--n is required");
    spec.n = n;
    const int m = (n - 1) / 2;
    const bool uses_zeta =
        spec.kind == cybe::ChainKind::RJ || spec.kind == cybe::ChainKind::Ech;
    const bool uses_xi = spec.kind != cybe::ChainKind::Dj3;
    if (!uses_zeta && !zeta_csv.empty())
        throw std::invalid_argument("--zeta does not apply to kind " + kind_name);
    if (!uses_xi && !xi_csv.empty())
        throw std::invalid_argument("--xi does not apply to kind " + kind_name);
    if (uses_xi) spec.xi = xi_csv.empty() ? cybe::chain::ones(m) : parse_rationals(xi_csv);
    if (uses_zeta) spec.zeta = zeta_csv.empty() ? cybe::chain::ones(m) : parse_rationals(zeta_csv);

    const cybe::BiTensor t = cybe::build_from_spec(spec);
    const cybe::Carrier car = cybe::carrier(t);
    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "terms=" << t.term_count() << " carrier_dim=" << car.dim
         << " contains_borel=" << (car.contains_borel ? "true" : "false")
         << " neg_dim=" << car.negative_intersection_dim << "\n";
    emit(cybe::build_file_to_json(spec, t), out_path);
    return kExitOk;
}

int cmd_verify(const std::string& in_path) {
    const cybe::BuildFile f = cybe::build_file_from_json(load_json(in_path));
    const cybe::TriTensor residual = cybe::schouten(f.tensor);
    cybe::json report{{"holds", residual.is_zero()},
                      {"residual_term_count", residual.term_count()}};
    if (!residual.is_zero()) {
        cybe::json first = cybe::json::array();
        std::size_t shown = 0;
        for (const auto& [key, c] : residual.terms()) {
            if (shown++ == 10) break;
            first.push_back(cybe::json{{"legs", {key[0], key[1], key[2], key[3], key[4], key[5]}},
                                       {"c", c.str()}});
        }
        report["first_residual_terms"] = first;
    }
    std::cout << report.dump(2) << "\n";
    return residual.is_zero() ? kExitOk : kExitCybeFails;
}

int cmd_solve(int n, bool exploratory, const std::string& out_path) {
    if (n < 3) throw std::invalid_argument("--n must be >= 3");
    cybe::EnlargementSolution sol;
    if (n % 2 == 1) {
        sol = cybe::solve_enlargement(n);
    } else {
        if (!exploratory)
            throw std::invalid_argument("n is even; pass --exploratory for the non-normative run");
        sol = cybe::solve_enlargement_exploratory(n);
    }
    emit(cybe::enlargement_to_json(sol), out_path);
    return kExitOk;
}

int cmd_analyze(const std::string& in_path, const std::string& out_path) {
    const cybe::BuildFile f = cybe::build_file_from_json(load_json(in_path));
    if (!f.spec)
        throw std::invalid_argument("analyze needs a build artifact with a provenance header");
    // Integrity: the stored tensor must be what the header builds.
    if (!(cybe::build_from_spec(*f.spec) == f.tensor))
        throw std::invalid_argument("tensor does not match its provenance header");

    const cybe::Carrier car = cybe::carrier(f.tensor);
    cybe::DualStructure dual(f.tensor);
    cybe::json report{{"carrier_dim", car.dim},
                      {"contains_borel", car.contains_borel},
                      {"neg_dim", car.negative_intersection_dim},
                      {"abelian_ideal_ok", dual.abelian_ideal_ok()}};

    const bool graded_family =
        f.spec->kind == cybe::ChainKind::Fch || f.spec->kind == cybe::ChainKind::Rch;
    if (graded_family) {
        cybe::ChainDual chain(f.tensor, *f.spec);
        report["grading_violations"] = chain.grading_violations().size();
        report["primitive"] = chain.primitive_set();
        report["quasiprimitive"] = chain.quasiprimitive_set_table();
    } else {
        report["grading_violations"] = nullptr;
        report["primitive"] = dual.primitive_set();
        report["quasiprimitive"] = nullptr;
    }
    emit(report, out_path);
    return kExitOk;
}

int cmd_roots(const std::string& series_str, int rank, const std::string& out_path) {
    if (series_str.size() != 1)
        throw std::invalid_argument("--series expects one of A, B, C, D");
    const cybe::Series s = cybe::series_from_letter(series_str[0]);
    emit(cybe::filtration_to_json(s, rank), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for chain r-matrices over sl(n): "
                 "construction, CYBE verification, enlargement solving, and "
                 "Lie bialgebra analysis"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized spot checks (commands are deterministic)");

    std::string kind, xi_csv, zeta_csv, out_path, in_path, series;
    int n = 0, rank = 0;
    bool exploratory = false;

    auto* build = app.add_subcommand("build", "construct an r-matrix and write it as JSON");
    build->add_option("--kind", kind, "fch | rotation | rch | rJ | ech | dj3")->required();
    build->add_option("--n", n, "matrix dimension (odd, >= 3)");
    build->add_option("--xi", xi_csv, "comma-separated link scales, e.g. 1,1/2,-3");
    build->add_option("--zeta", zeta_csv, "comma-separated Jordanian scales");
    build->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "check the CYBE by exact Schouten bracket");
    verify->add_option("--in", in_path, "tensor file (bare or build artifact)")->required();

    auto* solve = app.add_subcommand("solve", "derive the enlargement Cartans");
    solve->add_option("--n", n, "matrix dimension")->required();
    solve->add_flag("--exploratory", exploratory, "allow even n (non-normative output)");
    solve->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* analyze = app.add_subcommand("analyze", "dual algebra and carrier report");
    analyze->add_option("--in", in_path, "build artifact with provenance header")->required();
    analyze->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* roots = app.add_subcommand("roots", "root-system filtration and type classification");
    roots->add_option("--series", series, "A | B | C | D")->required();
    roots->add_option("--rank", rank, "rank of the series")->required();
    roots->add_option("--out", out_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (build->parsed()) return cmd_build(kind, n, xi_csv, zeta_csv, out_path);
        if (verify->parsed()) return cmd_verify(in_path);
        if (solve->parsed()) return cmd_solve(n, exploratory, out_path);
        if (analyze->parsed()) return cmd_analyze(in_path, out_path);
        if (roots->parsed()) return cmd_roots(series, rank, out_path);
    } catch (const cybe::SolverInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolverInconsistent;
    } catch (const cybe::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
