#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fibstab/chern.hpp"
#include "fibstab/geometry.hpp"
#include "fibstab/values.hpp"

namespace fibstab {

// mu_{H,F}: +infinity on rank zero, else (HF ch1) / (H^2F ch0).
inline Slope mu_hf(const ContractedClass& v, const FibredGeometry& geom) {
    if (v.ch0.is_zero()) return Slope::infinite();
    return Slope::finite(v.hf_ch1 / (geom.h2f() * v.ch0));
}

// Z_{K(C)} = -HF ch1 + i H^2F ch0.
inline ChargeValue z_base(const ContractedClass& v, const FibredGeometry& geom) {
    return ChargeValue{-v.hf_ch1, geom.h2f() * v.ch0};
}

// Z_{C-tor} = -H ch2 + i H^2 ch1.
inline ChargeValue z_base_torsion(const ContractedClass& v) {
    return ChargeValue{-v.h_ch2, v.h2_ch1};
}

namespace detail {
// "E_{K(C)} = 0" is categorical; ch0 = 0 and HF ch1 = 0 is the numerical
// proxy (necessary, not sufficient). An explicit hint overrides inference
// but must not contradict the class data.
inline bool c_torsion_proxy(const ContractedClass& v, std::optional<bool> hint) {
    if (hint.has_value()) {
        if (*hint && (!v.ch0.is_zero() || !v.hf_ch1.is_zero()))
            throw InconsistentHintError(
                "c_torsion hint set on a class with ch0 != 0 or HF ch1 != 0");
        return *hint;
    }
    return v.ch0.is_zero() && v.hf_ch1.is_zero();
}
} // namespace detail

// mu_C: the relative slope on positive rank, (H ch2)/(H^2 ch1) on C-torsion
// classes with H^2 ch1 != 0, and +infinity otherwise.
inline Slope mu_c(const ContractedClass& v, const FibredGeometry& geom,
                  std::optional<bool> c_torsion_hint = std::nullopt) {
    bool torsion = detail::c_torsion_proxy(v, c_torsion_hint);
    if (!v.ch0.is_zero()) return Slope::finite(v.hf_ch1 / (geom.h2f() * v.ch0));
    if (torsion && !v.h2_ch1.is_zero()) return Slope::finite(v.h_ch2 / v.h2_ch1);
    return Slope::infinite();
}

// Z_C: Z_{K(C)} away from C-torsion classes, Z_{C-tor} on them.
inline ChargeValue z_c(const ContractedClass& v, const FibredGeometry& geom,
                       std::optional<bool> c_torsion_hint = std::nullopt) {
    if (detail::c_torsion_proxy(v, c_torsion_hint) && v.ch0.is_zero())
        return z_base_torsion(v);
    return z_base(v, geom);
}

// A slope function together with its central charge; the charge's imaginary
// part feeds the Harder-Narasimhan tie-break.
struct SlopeFunction {
    std::string name;
    std::function<Slope(const ContractedClass&)> slope;
    std::function<ChargeValue(const ContractedClass&)> charge;
};

inline SlopeFunction slope_function_mu_hf(const FibredGeometry& geom) {
    return SlopeFunction{
        "mu_hf",
        [geom](const ContractedClass& v) { return mu_hf(v, geom); },
        [geom](const ContractedClass& v) { return z_base(v, geom); }};
}

inline SlopeFunction slope_function_mu_c(const FibredGeometry& geom) {
    return SlopeFunction{
        "mu_c",
        [geom](const ContractedClass& v) { return mu_c(v, geom); },
        [geom](const ContractedClass& v) { return z_c(v, geom); }};
}

// Finite proxy for "all non-zero subobjects of E": nodes are candidate
// subobject classes, an edge (a, b) records that a is an admissible
// subobject class of b, and the root carries the total class.
struct SubobjectLattice {
    std::string root;
    std::map<std::string, ContractedClass> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
};

namespace detail {

inline std::map<std::string, std::set<std::string>> lattice_reachability(
    const SubobjectLattice& lat) {
    std::map<std::string, std::set<std::string>> up;
    for (const auto& [sub, super] : lat.edges) up[sub].insert(super);
    // transitive closure; lattices are small by construction
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [node, reach] : up) {
            std::set<std::string> extra;
            for (const auto& r : reach) {
                auto it = up.find(r);
                if (it == up.end()) continue;
                for (const auto& rr : it->second)
                    if (!reach.count(rr) && rr != node) extra.insert(rr);
            }
            if (!extra.empty()) {
                reach.insert(extra.begin(), extra.end());
                changed = true;
            }
        }
    }
    return up;
}

} // namespace detail

inline void validate_lattice(const SubobjectLattice& lat) {
    if (lat.nodes.find(lat.root) == lat.nodes.end())
        throw InvalidLatticeError("root node '" + lat.root + "' is not in the lattice");
    for (const auto& [sub, super] : lat.edges) {
        if (!lat.nodes.count(sub) || !lat.nodes.count(super))
            throw InvalidLatticeError("edge (" + sub + ", " + super + ") references unknown node");
        if (sub == super) throw InvalidLatticeError("self-edge on node '" + sub + "'");
    }
    auto up = detail::lattice_reachability(lat);
    for (const auto& [sub, super] : lat.edges)
        if (up.count(super) && up.at(super).count(sub))
            throw InvalidLatticeError("inclusion cycle through '" + sub + "'");
    for (const auto& [id, cls] : lat.nodes) {
        if (id == lat.root) continue;
        auto it = up.find(id);
        if (it == up.end() || !it->second.count(lat.root))
            throw InvalidLatticeError("node '" + id + "' does not reach the root");
    }
}

struct HnFactor {
    std::string node;        // the subobject E_i this step reached
    ContractedClass cls;     // quotient class G_i = E_i - E_{i-1}
    Slope slope;
};

struct HnFiltration {
    std::vector<HnFactor> factors;
    const Slope& mu_plus() const { return factors.front().slope; }
    const Slope& mu_minus() const { return factors.back().slope; }
};

// Greedy Harder-Narasimhan search over the lattice: at each step, among the
// nodes above the current subobject, pick the quotient class of maximal
// slope, tie-broken by maximal Im of the associated charge, then by
// inclusion-maximality, then by node id. The result must come out strictly
// decreasing; anything else is reported, never silently repaired.
inline HnFiltration hn_filtration(const SubobjectLattice& lat, const SlopeFunction& f) {
    validate_lattice(lat);
    if (lat.nodes.at(lat.root).is_zero())
        throw InvalidLatticeError("root class is zero");
    auto up = detail::lattice_reachability(lat);
    auto reachable = [&](const std::string& a, const std::string& b) {
        auto it = up.find(a);
        return it != up.end() && it->second.count(b) > 0;
    };

    HnFiltration result;
    std::string current;                          // empty = the zero subobject
    ContractedClass current_class{0, 0, 0, 0, 0, 0};

    while (current != lat.root) {
        auto quotient = [&](const std::string& id) { return lat.nodes.at(id) - current_class; };

        std::vector<std::string> candidates;
        for (const auto& [id, cls] : lat.nodes)
            if (id != current && (current.empty() || reachable(current, id)) &&
                !quotient(id).is_zero())  // zero subquotients contribute nothing
                candidates.push_back(id);
        if (candidates.empty())
            throw InvalidLatticeError("no path from '" + current + "' to the root");

        std::string best;
        Slope best_slope = Slope::infinite();
        Rational best_im;
        for (const auto& id : candidates) {
            ContractedClass q = quotient(id);
            Slope s = f.slope(q);
            Rational im = f.charge(q).im;
            if (best.empty() || s > best_slope || (s == best_slope && im > best_im)) {
                best = id;
                best_slope = s;
                best_im = im;
                continue;
            }
            if (s == best_slope && im == best_im) {
                // prefer the inclusion-larger node; fall back to id order
                if (reachable(best, id) || (!reachable(id, best) && id < best)) {
                    best = id;
                }
            }
        }

        result.factors.push_back(HnFactor{best, quotient(best), best_slope});
        current_class = lat.nodes.at(best);
        current = best;
    }

    for (std::size_t i = 1; i < result.factors.size(); ++i)
        if (!(result.factors[i - 1].slope > result.factors[i].slope))
            throw NotAFiltrationError(
                "no strictly decreasing filtration through '" + result.factors[i].node + "'");
    return result;
}

} // namespace fibstab
