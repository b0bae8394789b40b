#pragma once

#include "wsr/harness.hpp"
#include "wsr/version.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wsr {

// Keys keep insertion order so reports are byte-identical across runs.
using json = nlohmann::ordered_json;

// Integers in documents are JSON numbers, or decimal strings once they risk
// exceeding 64 bits (reports always use strings).  Doubles are rejected: a
// parsed double has already lost precision.
inline BigInt bigint_from_json(const json& v) {
    if (v.is_number_unsigned()) // before is_number_integer, which is also true here
        return BigInt(v.get<unsigned long long>());
    if (v.is_number_integer())
        return BigInt(v.get<long long>());
    if (v.is_string())
        return bigint_from_decimal(v.get<std::string>());
    throw error("expected an integer or decimal string, got " + v.dump());
}

inline json to_json(const BigInt& v) { return to_decimal(v); }

inline json to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_decimal(x));
    return a;
}

inline json to_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

inline json to_json(const std::vector<IntVec>& rows) {
    json a = json::array();
    for (const auto& r : rows)
        a.push_back(to_json(r));
    return a;
}

inline json lambdas_json(const std::vector<CharVector>& v) {
    json a = json::array();
    for (const auto& c : v)
        a.push_back(json::array({to_decimal(c.a), to_decimal(c.b)}));
    return a;
}

// {"lambda": [[a_1, b_1], ..., [a_m, b_m]]}
inline std::vector<CharVector> parse_pair_document(const json& doc) {
    if (!doc.is_object() || !doc.contains("lambda"))
        throw error("pair document must be an object with a \"lambda\" key");
    const json& l = doc["lambda"];
    if (!l.is_array())
        throw error("\"lambda\" must be an array of [a, b] pairs");
    std::vector<CharVector> out;
    out.reserve(l.size());
    for (const json& e : l) {
        if (!e.is_array() || e.size() != 2)
            throw error("each lambda entry must be a two-element array");
        out.push_back({bigint_from_json(e[0]), bigint_from_json(e[1])});
    }
    return out;
}

// {"linear": [c_1..c_m]}  or  {"terms": [{"coeff": k, "exp": [e_1..e_m]}]}
inline SRPolynomial parse_polynomial_document(const json& doc, std::size_t nvars) {
    if (!doc.is_object())
        throw error("polynomial document must be an object");
    if (doc.contains("linear") == doc.contains("terms"))
        throw error("polynomial document needs exactly one of \"linear\" or \"terms\"");
    if (doc.contains("linear")) {
        const json& l = doc["linear"];
        if (!l.is_array() || l.size() != nvars)
            throw error("\"linear\" must list exactly " + std::to_string(nvars) +
                        " coefficients");
        IntVec c;
        for (const json& e : l)
            c.push_back(bigint_from_json(e));
        return SRPolynomial::linear(c);
    }
    const json& terms = doc["terms"];
    if (!terms.is_array())
        throw error("\"terms\" must be an array");
    SRPolynomial p(nvars);
    for (const json& t : terms) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
            throw error("each term needs \"coeff\" and \"exp\"");
        const json& exp = t["exp"];
        if (!exp.is_array() || exp.size() != nvars)
            throw error("\"exp\" must list exactly " + std::to_string(nvars) +
                        " exponents");
        SRPolynomial::Exponents e;
        for (const json& x : exp) {
            if (!x.is_number_integer() && !x.is_number_unsigned())
                throw error("exponents must be plain nonnegative integers");
            long long v = x.get<long long>();
            if (v < 0)
                throw error("exponents must be nonnegative");
            e.push_back(static_cast<std::uint32_t>(v));
        }
        p.add_term(e, bigint_from_json(t["coeff"]));
    }
    return p;
}

inline json to_json(const SRPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exp = json::array();
        for (std::uint32_t x : e)
            exp.push_back(x);
        terms.push_back(json{{"coeff", to_decimal(c)}, {"exp", exp}});
    }
    return json{{"terms", terms}};
}

inline json to_json(const Violation& v) {
    json o;
    o["kind"] = kind_string(v.kind);
    if (v.index > 0)
        o["index"] = v.index;
    o["message"] = to_string(v);
    return o;
}

inline json validation_json(const CharacteristicPair::Validation& v) {
    json o;
    o["ok"] = v.ok();
    json arr = json::array();
    for (const Violation& x : v.violations)
        arr.push_back(to_json(x));
    o["violations"] = arr;
    return o;
}

inline json topology_json(const TopologyReport& t) {
    json o;
    o["minor_gcd"] = to_decimal(t.minor_gcd);
    json arr = json::array();
    for (const BigInt& d : t.h3_invariants)
        arr.push_back(to_decimal(d));
    o["h3_invariants"] = arr;
    o["even_cohomology"] = t.even_cohomology;
    return o;
}

inline json wsr2_json(const CharacteristicPair& pair, const Wsr2Basis& b) {
    json o;
    o["a_form"] = to_json(b.a_form);
    o["b_form"] = to_json(b.b_form);
    o["kernel"] = to_json(b.kernel);
    o["phi_images"] = to_json(b.phi_images);
    Lattice l = b.lattice();
    o["basis_hnf"] = to_json(l.basis());
    o["index"] = l.rank() == pair.size() ? json(to_decimal(lattice_index(l))) : json();
    o["even_cohomology"] = b.even_cohomology;
    return o;
}

inline json picard_json(const PicardReport& r) {
    json o;
    o["cartier_basis"] = to_json(r.cartier_basis);
    o["picard_basis"] = to_json(r.picard_basis);
    o["class_free_rank"] = r.class_free_rank;
    json arr = json::array();
    for (const BigInt& d : r.class_torsion)
        arr.push_back(to_decimal(d));
    o["class_torsion"] = arr;
    o["index"] = to_decimal(r.index);
    o["hypothesis_satisfied"] = r.hypothesis_satisfied;
    return o;
}

inline json cellular_json(const CellularBasis& c) {
    json o;
    o["u"] = to_json(c.u);
    o["xi"] = to_json(c.xi);
    o["v"] = to_json(c.v);
    return o;
}

inline json normalization_json(const SmoothNormalization& n) {
    json o;
    o["rotation"] = n.rotation;
    o["g"] = to_json(n.g);
    o["lambda"] = lambdas_json(n.pair.lambdas());
    return o;
}

inline json report_header(const std::vector<CharVector>& raw) {
    json o;
    o["tool"] = "wsrtool";
    o["version"] = version;
    o["input"] = json{{"lambda", lambdas_json(raw)}};
    return o;
}

// The full analysis: validation, topology, degree-two basis, divisor data,
// and (when the input is already in standard position) the cellular basis.
inline json analysis_report(const std::vector<CharVector>& raw) {
    json o = report_header(raw);
    auto val = CharacteristicPair::validate(raw);
    o["validation"] = validation_json(val);
    if (!val.ok())
        return o;
    const CharacteristicPair& pair = *val.pair;
    o["topology"] = topology_json(even_cohomology_check(pair));
    o["wsr2"] = wsr2_json(pair, wsr2_basis(pair));
    o["picard"] = picard_json(picard_report(pair));
    o["cellular"] = in_standard_position(pair) ? cellular_json(cellular_basis(pair))
                                               : json();
    return o;
}

} // namespace wsr
