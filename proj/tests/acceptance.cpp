// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all tolerances are exact zero) and prints one pass/fail line per
// criterion. Returns the number of failed criteria.
//
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cybe/builders.hpp"
#include "cybe/dual.hpp"
#include "cybe/rng.hpp"
#include "cybe/roots.hpp"
#include "cybe/serialize.hpp"

using namespace cybe;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_tmp;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

int run_cli(const std::string& args) {
    const std::string cmd = "'" + g_cli + "' " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    require(status != -1 && WIFEXITED(status), "could not run CLI: " + cmd);
    return WEXITSTATUS(status);
}

std::string run_cli_capture(const std::string& args) {
    const fs::path out = g_tmp / "capture.out";
    const std::string cmd = "'" + g_cli + "' " + args + " > '" + out.string() + "' 2>/dev/null";
    const int status = std::system(cmd.c_str());
    require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
            "CLI failed: " + cmd);
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string write_tensor(const std::string& name, const BiTensor& t) {
    const fs::path p = g_tmp / name;
    std::ofstream f(p);
    f << bitensor_to_json(t).dump(2) << "\n";
    return p.string();
}

std::vector<Rational> draw_nonzero(SplitMix64& rng, int m) {
    std::vector<Rational> v;
    for (int i = 0; i < m; ++i) v.push_back(rng.nonzero_rational());
    return v;
}

std::vector<Rational> draw_any(SplitMix64& rng, int m) {
    std::vector<Rational> v;
    for (int i = 0; i < m; ++i) v.push_back(rng.rational());
    return v;
}

// 1. CYBE for full chains at unit scales, n = 3..11 odd.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    for (int n : {3, 5, 7, 9, 11}) {
        const TriTensor s = schouten(build_fch(n, chain::ones(chain::links(n))));
        require(s.is_zero(), "fch(" + std::to_string(n) + ") residual has " +
                                 std::to_string(s.term_count()) + " terms");
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double sec = std::chrono::duration<double>(t1 - t0).count();
    require(sec < 10.0, "full-chain verification took " + std::to_string(sec) + "s");
}

// 2. Rotation and rotated chain solve the CYBE, including seeded random
//    link scales.
void criterion2() {
    SplitMix64 rng(20240201);
    for (int n : {3, 5, 7, 9, 11}) {
        const int m = chain::links(n);
        require(schouten(build_rotation(n, chain::ones(m))).is_zero(), "rotation at unit scales");
        require(schouten(build_rch(n, chain::ones(m))).is_zero(), "rch at unit scales");
        for (int t = 0; t < 20; ++t) {
            const auto xi = draw_nonzero(rng, m);
            require(schouten(build_rotation(n, xi)).is_zero(),
                    "rotation(" + std::to_string(n) + ") random draw");
            require(schouten(build_rch(n, xi)).is_zero(),
                    "rch(" + std::to_string(n) + ") random draw");
        }
    }
}

// 3. The sl(3) trio, with CYBE verdicts observed through the CLI exit codes.
void criterion3() {
    const BiTensor rch3 = build_rch(3, {Rational(1)});
    const BiTensor rj3 = build_rJ(3, {Rational(1)}, {Rational(1)});
    require(run_cli("verify --in '" + write_tensor("rch_rj.json", rch3 + rj3) + "'") == 1,
            "rch(3)+rJ(3) must exit 1");
    require(run_cli("verify --in '" + write_tensor("rch_dj.json", rch3 + build_dj_sl3()) + "'") == 0,
            "rch(3)+dj3 must exit 0");
    const BiTensor expected = wedge(cartan_H(3, 1, 2), matrix_unit(3, 1, 3)) +
                              wedge(matrix_unit(3, 1, 2), matrix_unit(3, 2, 3));
    require(rch3 == expected, "rch(3) term-for-term form");
}

// 4. Orthogonality conditions at n = 11.
void criterion4() {
    const auto ehat = build_E_hat(11, chain::ones(5));
    for (int k = 1; k <= 5; ++k) {
        for (int l = 1; l <= 5; ++l) {
            const LieElement b = bracket(h_perp(11, k), ehat[static_cast<std::size_t>(l - 1)]);
            if (k == l)
                require(b == ehat[static_cast<std::size_t>(l - 1)], "eigenvalue at k=l");
            else
                require(b.is_zero(), "eigenvalue at k!=l");
        }
        for (int s = 1; s <= 5; ++s)
            require(root_eval(theta_root(11, s), h_perp(11, k)).is_zero(), "theta orthogonality");
    }
}

// 5. The sl(11) golden data: unique solution matching the golden Cartans,
//    and the assembled enlarged chain solves the CYBE.
void criterion5() {
    const EnlargementSolution sol = solve_enlargement(11);
    require(sol.unique && sol.solution_space_dim == 0, "solution must be unique");
    require(sol.normalization_c == Rational(1), "recorded normalization");
    auto golden = [&](int lo, int hi) {
        LieElement h(11);
        for (int i = lo; i <= hi; ++i)
            h += cartan_H(11, 2 * i - 1, 2 * i) + Rational(2) * h_perp(11, i);
        return h;
    };
    const std::vector<std::pair<int, int>> ranges{{1, 5}, {2, 5}, {2, 4}, {3, 4}, {3, 3}};
    for (int k = 0; k < 5; ++k)
        require(sol.hat_H[static_cast<std::size_t>(k)] ==
                    golden(ranges[static_cast<std::size_t>(k)].first,
                           ranges[static_cast<std::size_t>(k)].second),
                "hat_H[" + std::to_string(k + 1) + "] against the golden form");
    require(sol.closed_form_match, "closed form agreement");
    require(schouten(build_ech(11, chain::ones(5), chain::ones(5))).is_zero(), "ech(11) CYBE");
}

// 6. Parameterized enlarged chains: seeded draws, the zeta -> 0 limit, and
//    sequential switch-off of the links.
void criterion6() {
    SplitMix64 rng(20240206);
    for (int n : {5, 7, 11}) {
        const int m = chain::links(n);
        for (int t = 0; t < 20; ++t) {
            const auto xi = draw_nonzero(rng, m);
            const auto zeta = draw_any(rng, m);
            require(schouten(build_ech(n, xi, zeta)).is_zero(),
                    "ech(" + std::to_string(n) + ") random draw");
        }
        const auto xi = draw_nonzero(rng, m);
        const EnlargementSolution sol = solve_enlargement(n);
        BiTensor rotated(n);
        for (int l = 1; l <= m; ++l)
            rotated += xi[static_cast<std::size_t>(l - 1)] *
                       (wedge(sol.hat_H[static_cast<std::size_t>(l - 1)], matrix_unit(n, l, n - l + 1)) +
                        extension_terms(n, l));
        require(build_ech(n, xi, chain::zeros(m)) == rotated, "zeta -> 0 limit");
        // Switch links off from the first onward; the verdict must hold at
        // every step.
        std::vector<Rational> partial = draw_nonzero(rng, m);
        for (int j = 0; j < m; ++j) {
            partial[static_cast<std::size_t>(j)] = Rational(0);
            require(schouten(build_ech(n, partial, chain::ones(m))).is_zero(),
                    "switch-off step " + std::to_string(j + 1));
        }
    }
}

// 7. Carrier claims, observed through the analyze command.
void criterion7() {
    const std::string ech_path = (g_tmp / "ech11.json").string();
    require(run_cli("build --kind ech --n 11 --out '" + ech_path + "'") == 0, "build ech");
    const json ech_report = json::parse(run_cli_capture("analyze --in '" + ech_path + "'"));
    require(ech_report.at("contains_borel").get<bool>(), "ech carrier contains b_+");
    require(ech_report.at("neg_dim").get<int>() == 5, "ech negative intersection");
    require(ech_report.at("carrier_dim").get<int>() == 70, "ech carrier dimension");

    const std::string fch_path = (g_tmp / "fch11.json").string();
    require(run_cli("build --kind fch --n 11 --out '" + fch_path + "'") == 0, "build fch");
    const json fch_report = json::parse(run_cli_capture("analyze --in '" + fch_path + "'"));
    require(!fch_report.at("contains_borel").get<bool>(), "fch carrier lacks the Cartan part");
}

// 8. Bialgebra structure: the carrier-complement duals form an exactly
//    abelian ideal; the dual Jacobi identity holds.
void criterion8() {
    for (int n : {3, 5, 7}) {
        const int m = chain::links(n);
        for (auto kind : {ChainKind::Fch, ChainKind::Rch}) {
            const DualStructure d(build_from_spec({kind, n, chain::ones(m), {}}));
            require(d.abelian_ideal_ok(),
                    kind_name(kind) + "(" + std::to_string(n) + ") abelian ideal");
            require(d.jacobi_ok(20240208, n == 3 ? 0 : 200),
                    kind_name(kind) + "(" + std::to_string(n) + ") dual Jacobi");
        }
    }
}

// 9. Quasiprimitivity: the rotated chain carries exactly the m predicted
//    generators, and the two criteria agree on every chain-family input.
void criterion9() {
    for (int n : {3, 5, 7, 11}) {
        const int m = chain::links(n);
        std::set<std::string> predicted;
        for (int k = 1; k <= m; ++k)
            predicted.insert("E(" + std::to_string(2 * k) + "," + std::to_string(2 * k - 1) + ")*");
        for (auto kind : {ChainKind::Fch, ChainKind::Rch}) {
            const ChainSpec spec{kind, n, chain::ones(m), {}};
            const ChainDual cd(build_from_spec(spec), spec);
            const auto qa = cd.quasiprimitive_set_table();
            const auto qb = cd.quasiprimitive_set_diagram();
            require(qa == qb, kind_name(kind) + "(" + std::to_string(n) + ") criteria agree");
            std::set<std::string> found;
            for (const auto& s : qa)
                if (predicted.count(s)) found.insert(s);
            if (kind == ChainKind::Rch)
                require(found == predicted, "rch(" + std::to_string(n) + ") predicted set");
            else
                require(found.empty(), "fch(" + std::to_string(n) + ") has no quasiprimitive tail");
        }
    }
}

// 10. The classification table for ranks up to 10.
void criterion10() {
    for (int rank = 2; rank <= 10; ++rank) {
        const TypeReport r = classify_type(Series::A, rank);
        const int n = rank + 1;
        require(r.type_tag == FiltrationType::I, "A type");
        require(r.dim_last == (n % 2 == 0 ? n / 2 - 1 : n / 2), "A residual dimension");
    }
    for (int rank = 1; rank <= 10; ++rank) {
        require(classify_type(Series::B, rank).type_tag == FiltrationType::II, "B type");
        require(classify_type(Series::C, rank).type_tag == FiltrationType::II, "C type");
    }
    for (int rank = 2; rank <= 10; ++rank) {
        const TypeReport r = classify_type(Series::D, rank);
        if (rank % 2 == 0) {
            require(r.type_tag == FiltrationType::II, "D even type");
        } else {
            require(r.type_tag == FiltrationType::I, "D odd type");
            require(r.dim_last == 1, "D odd residual dimension");
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 64;
    }
    g_cli = argv[1];
    char tmpl[] = "/tmp/cybe-acceptance-XXXXXX";
    const char* dir = mkdtemp(tmpl);
    if (!dir) {
        std::cerr << "cannot create temp dir\n";
        return 64;
    }
    g_tmp = dir;

    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria{
        {"full chains solve the CYBE exactly (n = 3,5,7,9,11)", criterion1},
        {"rotation and rotated chains solve the CYBE, incl. 20 seeded draws per n", criterion2},
        {"sl(3) trio: rch+rJ fails, rch+dj holds, rch matches the worked form", criterion3},
        {"orthogonality conditions at n = 11", criterion4},
        {"sl(11) golden solution: unique Cartans, closed form, ech CYBE", criterion5},
        {"parameterized variety: draws, zeta->0 limit, sequential switch-off", criterion6},
        {"carrier claims via analyze: ech has b_+, dim 70, neg 5; fch does not", criterion7},
        {"bialgebra: abelian ideal and dual Jacobi (n = 3,5,7)", criterion8},
        {"quasiprimitivity: predicted sets and criteria agreement", criterion9},
        {"series classification table up to rank 10", criterion10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i].run();
            std::cout << "[PASS] criterion " << (i + 1) << ": " << criteria[i].name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] criterion " << (i + 1) << ": " << criteria[i].name << " -- "
                      << e.what() << "\n";
        }
    }
    std::error_code ec;
    fs::remove_all(g_tmp, ec);
    if (failures == 0) std::cout << "all 10 acceptance criteria passed\n";
    return failures;
}
