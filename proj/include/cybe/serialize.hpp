#ifndef CYBE_SERIALIZE_HPP
#define CYBE_SERIALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cybe/builders.hpp"
#include "cybe/lie.hpp"
#include "cybe/roots.hpp"
#include "cybe/tensor.hpp"

namespace cybe {

// Object keys sort alphabetically and term lists are emitted in key order,
// so byte equality of two documents equals semantic equality.
using json = nlohmann::json;

/// Canonical JSON for a LieElement: records sorted by (i, j), coefficients
/// as lowest-terms "p/q" strings (denominator omitted when 1).
inline json lie_to_json(const LieElement& x) {
    json arr = json::array();
    for (const auto& [ij, c] : x.entries())
        arr.push_back(json{{"i", ij.first}, {"j", ij.second}, {"c", c.str()}});
    return arr;
}

inline LieElement lie_from_json(const json& j, int n) {
    LieElement x(n);
    for (const auto& rec : j)
        x.add(rec.at("i").get<int>(), rec.at("j").get<int>(),
              Rational::parse(rec.at("c").get<std::string>()));
    return x;
}

/// Canonical JSON for a BiTensor: terms sorted lexicographically by
/// (left.i, left.j, right.i, right.j); skew tensors are serialized in full.
inline json bitensor_to_json(const BiTensor& t) {
    json terms = json::array();
    for (const auto& [key, c] : t.terms())
        terms.push_back(json{{"left", {{"i", key[0]}, {"j", key[1]}}},
                             {"right", {{"i", key[2]}, {"j", key[3]}}},
                             {"c", c.str()}});
    return json{{"n", t.n()}, {"terms", terms}};
}

inline BiTensor bitensor_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    BiTensor t(n);
    for (const auto& rec : j.at("terms"))
        t.add(rec.at("left").at("i").get<int>(), rec.at("left").at("j").get<int>(),
              rec.at("right").at("i").get<int>(), rec.at("right").at("j").get<int>(),
              Rational::parse(rec.at("c").get<std::string>()));
    return t;
}

inline json rationals_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
}

inline std::vector<Rational> rationals_from_json(const json& j) {
    std::vector<Rational> out;
    for (const auto& s : j) out.push_back(Rational::parse(s.get<std::string>()));
    return out;
}

/// Build artifact: provenance header plus the tensor itself.
inline json build_file_to_json(const ChainSpec& spec, const BiTensor& t) {
    return json{{"kind", kind_name(spec.kind)},
                {"n", spec.n},
                {"xi", rationals_to_json(spec.xi)},
                {"zeta", rationals_to_json(spec.zeta)},
                {"normalization_c", 1},
                {"tensor", bitensor_to_json(t)}};
}

struct BuildFile {
    std::optional<ChainSpec> spec;  // present when the provenance header is
    BiTensor tensor{1};
};

/// Accepts either a bare BiTensor document or a build artifact with header.
inline BuildFile build_file_from_json(const json& j) {
    BuildFile f;
    if (j.contains("tensor")) {
        f.tensor = bitensor_from_json(j.at("tensor"));
        if (j.contains("kind")) {
            ChainSpec spec;
            spec.kind = kind_from_name(j.at("kind").get<std::string>());
            spec.n = j.at("n").get<int>();
            if (j.contains("xi") && !j.at("xi").is_null()) spec.xi = rationals_from_json(j.at("xi"));
            if (j.contains("zeta") && !j.at("zeta").is_null())
                spec.zeta = rationals_from_json(j.at("zeta"));
            f.spec = std::move(spec);
        }
    } else {
        f.tensor = bitensor_from_json(j);
    }
    return f;
}

inline json enlargement_to_json(const EnlargementSolution& sol) {
    json gamma = json::array();
    for (const auto& row : sol.gamma) gamma.push_back(rationals_to_json(row));
    json hats = json::array();
    for (const auto& h : sol.hat_H) hats.push_back(lie_to_json(h));
    json perp = json::array();
    for (const auto& h : sol.perp_cartans) perp.push_back(lie_to_json(h));
    json ehat = json::array();
    for (const auto& e : sol.e_hats) ehat.push_back(lie_to_json(e));
    json out{{"n", sol.n},
             {"exploratory", sol.exploratory},
             {"unique", sol.unique},
             {"solution_space_dim", sol.solution_space_dim},
             {"normalization_c", sol.normalization_c.str()},
             {"hat_H", hats},
             {"perp_cartans", perp},
             {"e_hats", ehat}};
    if (sol.exploratory) {
        out["gamma"] = nullptr;
        out["closed_form_match"] = nullptr;
        out["closed_form_scale"] = nullptr;
    } else {
        out["gamma"] = sol.gamma_span_ok ? gamma : json(nullptr);
        out["gamma_span_ok"] = sol.gamma_span_ok;
        out["closed_form_match"] = sol.closed_form_match;
        out["closed_form_scale"] =
            sol.closed_form_scale ? json(sol.closed_form_scale->str()) : json(nullptr);
    }
    return out;
}

inline json filtration_to_json(Series series, int rank) {
    const RootSystem rs = root_system(series, rank);
    const ThetaFiltration f = theta_filtration(rs);
    const TypeReport rep = classify_type(series, rank);
    json thetas = json::array();
    for (const auto& t : f.thetas) {
        json v = json::array();
        for (long c : t.coords) v.push_back(c);
        thetas.push_back(v);
    }
    json dims = json::array();
    for (int d : f.subspace_dims) dims.push_back(d);
    return json{{"series", std::string(1, series_letter(series))},
                {"rank", rank},
                {"type", rep.type_tag == FiltrationType::I ? "I" : "II"},
                {"f", rep.f},
                {"thetas", thetas},
                {"dims", dims},
                {"dim_V_f", rep.dim_last},
                {"dim_V_f_minus_1", rep.dim_prev}};
}

}  // namespace cybe

#endif
