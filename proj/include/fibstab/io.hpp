#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibstab/chern.hpp"
#include "fibstab/geometry.hpp"
#include "fibstab/pbundle.hpp"
#include "fibstab/slopes.hpp"
#include "fibstab/tilt.hpp"
#include "fibstab/values.hpp"
#include "fibstab/walls.hpp"

namespace fibstab {

// Emission uses ordered_json throughout: fixed key order and reduced
// fractions make every output document byte-reproducible.
using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON in '" + path + "'");
    return doc;
}

inline Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError(what + " must be a rational string or integer");
}

inline const json& field(const json& j, const std::string& key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(what + " is missing field '" + key + "'");
    return *it;
}

inline std::string string_from_json(const json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + " must be a string");
    return j.get<std::string>();
}

inline long integer_from_json(const json& j, const std::string& what) {
    Rational r = rational_from_json(j, what);
    if (!r.is_integer()) throw ParseError(what + " must be an integer");
    return r.num().get_si();
}

// geometry files:
//   {"kind":"projective_bundle","genus":0,"deg_e":0}
//   {"kind":"generic","genus":1,"h3":"5/2","h2f":"1"}
inline FibredGeometry geometry_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("geometry document must be an object");
    std::string kind = string_from_json(field(j, "kind", "geometry"), "geometry kind");
    long genus = integer_from_json(field(j, "genus", "geometry"), "genus");
    if (kind == "projective_bundle") {
        long deg_e = integer_from_json(field(j, "deg_e", "geometry"), "deg_e");
        return FibredGeometry::projective_bundle(genus, deg_e);
    }
    if (kind == "generic") {
        return FibredGeometry::generic(genus, rational_from_json(field(j, "h3", "geometry"), "h3"),
                                       rational_from_json(field(j, "h2f", "geometry"), "h2f"));
    }
    throw ParseError("unknown geometry kind '" + kind + "'");
}

inline json geometry_to_json(const FibredGeometry& geom) {
    json j;
    if (geom.is_projective_bundle()) {
        j["kind"] = "projective_bundle";
        j["genus"] = geom.genus();
        j["deg_e"] = geom.deg_e().num().get_si();
    } else {
        j["kind"] = "generic";
        j["genus"] = geom.genus();
        j["h3"] = geom.h3().str();
        j["h2f"] = geom.h2f().str();
    }
    return j;
}

// class files: {"ch0":"1","h2_ch1":"0","hf_ch1":"0","h_ch2":"0","f_ch2":"0","ch3":"0"};
// Chow-class files replace the contraction fields by c1/c2 coefficient pairs.
inline ContractedClass class_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("class document must be an object");
    ContractedClass v;
    v.ch0 = rational_from_json(field(j, "ch0", "class"), "ch0");
    v.h2_ch1 = rational_from_json(field(j, "h2_ch1", "class"), "h2_ch1");
    v.hf_ch1 = rational_from_json(field(j, "hf_ch1", "class"), "hf_ch1");
    v.h_ch2 = rational_from_json(field(j, "h_ch2", "class"), "h_ch2");
    v.f_ch2 = rational_from_json(field(j, "f_ch2", "class"), "f_ch2");
    v.ch3 = rational_from_json(field(j, "ch3", "class"), "ch3");
    return v;
}

inline json class_to_json(const ContractedClass& v) {
    json j;
    j["ch0"] = v.ch0.str();
    j["h2_ch1"] = v.h2_ch1.str();
    j["hf_ch1"] = v.hf_ch1.str();
    j["h_ch2"] = v.h_ch2.str();
    j["f_ch2"] = v.f_ch2.str();
    j["ch3"] = v.ch3.str();
    return j;
}

inline ChowClass chow_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("Chow class document must be an object");
    const json& c1 = field(j, "c1", "Chow class");
    const json& c2 = field(j, "c2", "Chow class");
    if (!c1.is_array() || c1.size() != 2 || !c2.is_array() || c2.size() != 2)
        throw ParseError("Chow class c1/c2 must be two-element arrays");
    ChowClass v;
    v.ch0 = rational_from_json(field(j, "ch0", "Chow class"), "ch0");
    v.c1_h = rational_from_json(c1[0], "c1[0]");
    v.c1_f = rational_from_json(c1[1], "c1[1]");
    v.c2_h2 = rational_from_json(c2[0], "c2[0]");
    v.c2_hf = rational_from_json(c2[1], "c2[1]");
    v.ch3 = rational_from_json(field(j, "ch3", "Chow class"), "ch3");
    return v;
}

inline json chow_to_json(const ChowClass& v) {
    json j;
    j["ch0"] = v.ch0.str();
    j["c1"] = json::array({v.c1_h.str(), v.c1_f.str()});
    j["c2"] = json::array({v.c2_h2.str(), v.c2_hf.str()});
    j["ch3"] = v.ch3.str();
    return j;
}

// Accepts either class shape; Chow-class input is contracted against the
// geometry (projective bundles only).
inline ContractedClass any_class_from_json(const json& j, const FibredGeometry& geom) {
    if (j.is_object() && j.contains("c1")) return contract(chow_from_json(j), geom);
    return class_from_json(j);
}

// lattice files: {"root":"E","nodes":{"E":{...},"A":{...}},"edges":[["A","E"]]}
inline SubobjectLattice lattice_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("lattice document must be an object");
    SubobjectLattice lat;
    lat.root = string_from_json(field(j, "root", "lattice"), "lattice root");
    const json& nodes = field(j, "nodes", "lattice");
    if (!nodes.is_object()) throw ParseError("lattice nodes must be an object");
    for (auto it = nodes.begin(); it != nodes.end(); ++it)
        lat.nodes.emplace(it.key(), class_from_json(it.value()));
    const json& edges = field(j, "edges", "lattice");
    if (!edges.is_array()) throw ParseError("lattice edges must be an array");
    for (const json& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("lattice edge must be a [sub, super] pair");
        lat.edges.emplace_back(string_from_json(e[0], "lattice edge"),
                               string_from_json(e[1], "lattice edge"));
    }
    return lat;
}

// bounds files: {"max_abs":{"ch0":"2",...,"ch3":"2"},"lattice":true}
inline EnumerationBounds bounds_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("bounds document must be an object");
    const json& m = field(j, "max_abs", "bounds");
    EnumerationBounds b;
    const char* keys[6] = {"ch0", "h2_ch1", "hf_ch1", "h_ch2", "f_ch2", "ch3"};
    for (int i = 0; i < 6; ++i) b.max_abs[i] = rational_from_json(field(m, keys[i], "bounds"), keys[i]);
    b.lattice = j.value("lattice", true);
    return b;
}

// candidates files: {"candidates":[{class},...]} or a bare array
inline std::vector<ContractedClass> candidates_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object()) arr = &field(j, "candidates", "candidates");
    if (!arr->is_array()) throw ParseError("candidates must be an array of classes");
    std::vector<ContractedClass> out;
    for (const json& c : *arr) out.push_back(class_from_json(c));
    return out;
}

// conjecture coefficient files: {"a1":"1","b1":"0","a2":"0","b2":"0","c":"0"}
inline ConjectureCoefficients coefficients_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("coefficients document must be an object");
    return ConjectureCoefficients{rational_from_json(field(j, "a1", "coefficients"), "a1"),
                                  rational_from_json(field(j, "b1", "coefficients"), "b1"),
                                  rational_from_json(field(j, "a2", "coefficients"), "a2"),
                                  rational_from_json(field(j, "b2", "coefficients"), "b2"),
                                  rational_from_json(field(j, "c", "coefficients"), "c")};
}

inline json coefficients_to_json(const ConjectureCoefficients& c) {
    json j;
    j["a1"] = c.a1.str();
    j["b1"] = c.b1.str();
    j["a2"] = c.a2.str();
    j["b2"] = c.b2.str();
    j["c"] = c.c.str();
    return j;
}

inline json charge_to_json(const ChargeValue& z) {
    json j;
    j["re"] = z.re.str();
    j["im"] = z.im.str();
    return j;
}

inline json slope_to_json(const Slope& s) { return s.str(); }

inline Slope slope_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return Slope::infinite();
    return Slope::finite(rational_from_json(j, "slope"));
}

inline json twisted_to_json(const TwistedComponents& t) {
    json j;
    j["beta"] = t.beta.str();
    j["ch0"] = t.ch0.str();
    j["h2_ch1b"] = t.h2_ch1b.str();
    j["hf_ch1b"] = t.hf_ch1b.str();
    j["h_ch2b"] = t.h_ch2b.str();
    j["f_ch2b"] = t.f_ch2b.str();
    j["ch3b"] = t.ch3b.str();
    return j;
}

inline json membership_to_json(const MembershipReport& r) {
    json j;
    switch (r.status) {
        case MembershipReport::Status::violates: j["status"] = "violates"; break;
        case MembershipReport::Status::consistent: j["status"] = "consistent"; break;
        case MembershipReport::Status::consistent_degenerate:
            j["status"] = "consistent_degenerate";
            break;
    }
    if (r.violates()) {
        j["reason"] = r.reason;
    } else if (r.status == MembershipReport::Status::consistent_degenerate) {
        json flags;
        flags["hf_ch1b_zero"] = r.hf_ch1b_zero;
        flags["ch0_zero"] = r.ch0_zero;
        flags["h_ch2b_zero"] = r.h_ch2b_zero;
        flags["f_ch2b_zero"] = r.f_ch2b_zero;
        flags["ch3b_zero"] = r.ch3b_zero;
        j["equalities"] = flags;
    }
    return j;
}

inline json wall_solution_to_json(const WallSolution& s) {
    switch (s.kind) {
        case WallSolution::Kind::at_alpha_sq: {
            json j;
            j["at_alpha_sq"] = s.alpha_sq.str();
            return j;
        }
        case WallSolution::Kind::all_alpha: return json("all_alpha");
        case WallSolution::Kind::no_wall: return json("no_wall");
    }
    return json();  // unreachable
}

inline json region_to_json(const RegionReport& r) {
    json j;
    j["ok"] = r.ok;
    j["alpha_positive"] = r.alpha_positive;
    j["t_nonnegative"] = r.t_nonnegative;
    j["condition1"] = r.condition1;
    j["condition2"] = r.condition2;
    if (r.threshold_defined) j["threshold"] = r.threshold.str();
    else j["threshold"] = nullptr;
    j["t0"] = r.t0.str();
    if (r.t0_defaulted)
        j["note"] = "t0 defaulted to 0; the stability threshold it stands for is "
                    "not effectively computable, so this default is optimistic";
    return j;
}

inline json hn_to_json(const HnFiltration& hn) {
    json factors = json::array();
    for (const HnFactor& f : hn.factors) {
        json jf;
        jf["node"] = f.node;
        jf["class"] = class_to_json(f.cls);
        jf["slope"] = slope_to_json(f.slope);
        factors.push_back(jf);
    }
    json j;
    j["factors"] = factors;
    j["mu_plus"] = slope_to_json(hn.mu_plus());
    j["mu_minus"] = slope_to_json(hn.mu_minus());
    return j;
}

} // namespace fibstab
