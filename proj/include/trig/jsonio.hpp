#pragma once

#include <string>

#include "json.hpp"

#include "trig/bundle.hpp"
#include "trig/chow.hpp"
#include "trig/cubic_lab.hpp"
#include "trig/miranda.hpp"
#include "trig/trigonal.hpp"

namespace trig {

using Json = nlohmann::json;

/// Matrix schema: {"r": int, "d": int, "entries": [[[c1, c2], ...], ...]}
/// with [c1, c2] meaning c1*x1 + c2*x2 and coefficients as decimal strings
/// (rationals over Q, integers mod p over a prime field).
LinearMatrix<Rat> matrix_from_json_q(const Json& j);
LinearMatrix<Fp> matrix_from_json_fp(const Json& j, std::uint64_t p);
Json matrix_to_json(const LinearMatrix<Rat>& l);

/// Datum schema: {"m": int, "n": int, "phi": [form-string x4]} with forms
/// in the variables t0, t1.
TrigonalDatum<Rat> datum_from_json_q(const Json& j);
TrigonalDatum<Fp> datum_from_json_fp(const Json& j, std::uint64_t p);

template <class K>
Json singular_verdict_json(const WVerdict<K>& w) {
    Json out;
    out["in_W"] = w.in_w;
    if (w.witness.has_value())
        out["witness"] = w.witness->str();
    else
        out["witness"] = nullptr;
    Json all = Json::array();
    for (const auto& p : w.witnesses) all.push_back(p.str());
    out["witnesses"] = all;
    return out;
}

template <class K>
Json smooth_verdict_json(const SmoothVerdict<K>& v) {
    Json out;
    out["smooth"] = v.smooth;
    out["everywhere_singular"] = v.everywhere_singular;
    Json pts = Json::array();
    for (const auto& p : v.points) {
        Json entry;
        entry["base"] = p.base.str();
        Json fib = Json::array();
        for (const auto& q : p.fiber) fib.push_back(q.str());
        entry["fiber"] = fib;
        pts.push_back(entry);
    }
    out["singular_points"] = pts;
    return out;
}

template <class K>
Json algebra_json(const CubicAlgebra<K>& alg) {
    auto vec = [](const typename CubicAlgebra<K>::Vec3& v) {
        using trig::to_string;
        return Json::array(
            {to_string(v[0]), to_string(v[1]), to_string(v[2])});
    };
    Json out;
    out["basis"] = {"1", "omega", "theta"};
    out["omega_sq"] = vec(alg.omega_sq);
    out["omega_theta"] = vec(alg.omega_theta);
    out["theta_sq"] = vec(alg.theta_sq);
    return out;
}

Json probe_json(const ProbeResult& r);
Json picard_row_json(const PicardRow& r);

} // namespace trig
