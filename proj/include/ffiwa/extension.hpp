/*
   Copyright 2026 The ffiwa authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFIWA_EXTENSION_HPP
#define FFIWA_EXTENSION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "place.hpp"

namespace ffiwa {

/// Structure of the unit group (A/f)^x computed by full enumeration and
/// Smith normal form, with discrete logarithms for every residue.
struct UnitGroupInfo {
    FieldSpec field;
    Poly modulus;                   // monic; degree 0 gives the trivial group
    AbelianGroup group;
    std::vector<Poly> generators;   // one residue per elementary divisor
    std::map<Poly, GrpElem> dlog;   // residue (coprime to f, deg < deg f) -> coords

    GrpElem dlog_of(const FieldSpec& F, const Poly& a) const {
        Poly r = modulus.deg() > 0 ? poly_mod(F, a, modulus) : Poly::zero();
        auto it = dlog.find(r);
        if (it == dlog.end()) throw UsageError("residue not coprime to the modulus");
        return it->second;
    }
};

/// Enumerates (A/f)^x and computes generators and elementary divisors.
/// Bounded at 10^6 residues.
inline UnitGroupInfo unit_group_structure(const FieldSpec& F, const Poly& f) {
    UnitGroupInfo info;
    info.field = F;
    info.modulus = f.is_zero() ? Poly::one() : f;
    const int df = info.modulus.deg();
    if (df < 0) throw UsageError("zero modulus");
    if (df == 0) {
        info.group = AbelianGroup::trivial();
        info.dlog[Poly::zero()] = {};
        return info;
    }
    Int size_bound = int_pow(Int(F.q), uint32_t(df));
    if (size_bound > 1000000) throw ResourceError("modulus too large for enumeration");

    std::vector<Poly> residues;
    std::map<Poly, size_t> index_of;
    Int total = size_bound;
    for (Int enc = 0; enc < total; ++enc) {
        std::vector<GF> c(size_t(df), 0);
        Int t = enc;
        for (int i = 0; i < df; ++i) { c[size_t(i)] = GF(t % F.q); t /= F.q; }
        Poly r(std::move(c));
        if (poly_gcd(F, r, info.modulus).is_one()) {
            index_of[r] = residues.size();
            residues.push_back(std::move(r));
        }
    }
    auto mul = [&](size_t i, size_t j) {
        Poly pr = poly_mod(F, poly_mul(F, residues[i], residues[j]), info.modulus);
        return index_of.at(pr);
    };
    size_t id = index_of.at(Poly::one());
    auto st = group_structure_from_mul(residues.size(), mul, id);
    info.group = st.group;
    // turn exponent rows over the raw generators into residue generators
    uint64_t order = uint64_t(residues.size());
    for (const auto& row : st.generator_exponents) {
        Poly g = Poly::one();
        for (size_t j = 0; j < row.size(); ++j) {
            Int e = mod_pos(row[j], Int(order));
            if (e == 0) continue;
            Poly pw = poly_pow_mod(F, residues[st.raw_gen_indices[j]], e, info.modulus);
            g = poly_mod(F, poly_mul(F, g, pw), info.modulus);
        }
        info.generators.push_back(g);
    }
    for (size_t i = 0; i < residues.size(); ++i) info.dlog[residues[i]] = st.dlog[i];
    return info;
}

/// A finite abelian extension K/k of k = F_q(T), unramified outside the
/// support of a finite modulus f (and, when infinity_tame is set, tamely
/// ramified at infinity), presented by a surjection from the ray class group
///
///   [(A/f)^x  x  F_q^x(at infinity)  x  Z(degree)] / (diagonal constants)
///
/// onto a finite abelian group G.  Frobenius elements are computed by
/// reduction modulo f: a monic prime P coprime to f maps to the class of
/// (P mod f, 1, deg P).
struct ExtensionDatum {
    FieldSpec base;
    Poly modulus_f = Poly::one();
    bool infinity_tame = false;
    AbelianGroup G;
    UnitGroupInfo units;
    std::vector<GrpElem> unit_gen_images;  // images of units.generators
    GrpElem tame_image;                    // image of the fixed primitive root (if tame)
    GrpElem degree_img;                    // image of the pure degree-1 class

    /// Image of a residue class under the (A/f)^x part of the reciprocity map.
    GrpElem unit_image(const Poly& a) const {
        GrpElem coords = units.dlog_of(base, a);
        GrpElem img = G.identity();
        for (size_t i = 0; i < coords.size(); ++i)
            img = G.add(img, G.smul(Int(coords[i]), unit_gen_images[i]));
        return img;
    }

    /// Image of the pure degree-1 class (the Frobenius direction of the
    /// constant-field tower).
    const GrpElem& degree_image() const { return degree_img; }

    /// The designated degree-1 place coprime to f whose Frobenius pins the
    /// degree component of the presentation, when one exists.
    std::optional<Place> aux_place() const {
        for (Int enc = 0; enc < Int(base.q); ++enc) {
            Poly cand = poly_from_encoding(base, 1, enc);
            if (modulus_f.deg() == 0 || !poly_mod(base, modulus_f, cand).is_zero())
                return Place::finite(cand);
        }
        return std::nullopt;
    }

    /// Generators of the inertia subgroup at a place.
    std::vector<GrpElem> inertia(const Place& v) const {
        std::vector<GrpElem> gens;
        if (v.infinite) {
            if (infinity_tame && !G.is_identity(tame_image)) gens.push_back(tame_image);
            return gens;
        }
        if (modulus_f.deg() == 0) return gens;
        auto [q0, r0] = poly_divmod(base, modulus_f, v.prime);
        if (!r0.is_zero()) return gens;  // v does not divide f: unramified
        // CRT factor at v: residues congruent to 1 modulo the complement
        Poly complement = modulus_f;
        while (true) {
            auto [q, r] = poly_divmod(base, complement, v.prime);
            if (!r.is_zero()) break;
            complement = q;
        }
        for (const auto& [res, coords] : units.dlog) {
            (void)coords;
            if (complement.deg() == 0 ||
                poly_mod(base, poly_sub(base, res, Poly::one()), complement).is_zero()) {
                GrpElem img = unit_image(res);
                if (!G.is_identity(img)) gens.push_back(img);
            }
        }
        return gens;
    }

    bool is_ramified(const Place& v) const { return !inertia(v).empty(); }

    std::vector<Place> ramified_places() const {
        std::vector<Place> out;
        if (infinity_tame && !G.is_identity(tame_image)) out.push_back(Place::infinity());
        if (modulus_f.deg() > 0)
            for (const auto& [P, e] : poly_factor(base, modulus_f)) {
                (void)e;
                Place v = Place::finite(P);
                if (is_ramified(v)) out.push_back(v);
            }
        return out;
    }

    /// A representative of the Frobenius class at v; for ramified v the value
    /// is well-defined only modulo inertia.
    GrpElem frobenius_lift(const Place& v) const {
        if (v.infinite) return degree_image();
        const Poly& P = v.prime;
        if (modulus_f.deg() == 0)
            return G.smul(Int(v.degree()), degree_image());
        if (!poly_mod(base, modulus_f, P).is_zero()) {
            GrpElem img = unit_image(P);
            return G.add(img, G.smul(Int(v.degree()), degree_image()));
        }
        // P divides f: use the CRT complement (x = 1 at the P-part, x = P elsewhere)
        Poly ppart = Poly::one();
        Poly complement = modulus_f;
        while (true) {
            auto [q, r] = poly_divmod(base, complement, P);
            if (!r.is_zero()) break;
            complement = q;
            ppart = poly_mul(base, ppart, P);
        }
        GrpElem img;
        if (complement.deg() == 0) {
            img = G.identity();  // f is a power of P; the complement part is trivial
        } else {
            auto [g, s, t] = poly_xgcd(base, ppart, complement);
            if (!g.is_one()) throw Error("CRT failure");
            // x = 1 * (t * complement) ... construct x = P*s*ppart + 1*t*complement?
            // We want x = 1 mod ppart and x = P mod complement:
            // x = 1*(t*complement) + P*(s*ppart) since s*ppart + t*complement = 1.
            Poly x = poly_add(base, poly_mul(base, t, complement),
                              poly_mul(base, poly_mul(base, P, s), ppart));
            x = poly_mod(base, x, modulus_f);
            img = unit_image(x);
        }
        return G.add(img, G.smul(Int(v.degree()), degree_image()));
    }

    /// Frobenius at an unramified place.
    GrpElem frobenius(const Place& v) const {
        if (is_ramified(v)) throw UsageError("Frobenius undefined at ramified place");
        return frobenius_lift(v);
    }

    /// Splitting data (e, f, g) of a place: ramification index, residue
    /// degree of the Frobenius in G/I, and the number of places above.
    struct Splitting {
        uint64_t e = 1, f = 1, g = 1;
    };
    Splitting splitting(const Place& v) const {
        Splitting s;
        auto inert = inertia(v);
        auto I = subgroup_closure(G, inert);
        s.e = I.size();
        auto P = quotient_by(G, inert);
        GrpElem fr = P.apply(frobenius_lift(v));
        s.f = P.target.element_order(fr);
        s.g = G.order() / (s.e * s.f);
        return s;
    }

    /// Degree of the constant-field subextension: index of the subgroup
    /// generated by all unit and tame images.
    uint64_t constant_degree() const {
        std::vector<GrpElem> gens = unit_gen_images;
        if (infinity_tame) gens.push_back(tame_image);
        return G.order() / subgroup_closure(G, gens).size();
    }

    /// Checks that the stored images define a homomorphism on the ray class
    /// presentation and that it is surjective.
    void validate() const {
        if (unit_gen_images.size() != units.generators.size())
            throw UsageError("generator image table has wrong size");
        for (size_t i = 0; i < unit_gen_images.size(); ++i)
            if (!G.is_identity(G.smul(Int(units.group.divisors[i]), unit_gen_images[i])))
                throw UsageError("unit generator image has incompatible order");
        if (base.q > 2) {
            GF c = gf_primitive_element(base);
            Poly cpoly = Poly::constant(c);
            GrpElem diag;
            if (modulus_f.deg() > 0)
                diag = unit_image(cpoly);
            else
                diag = G.identity();
            if (infinity_tame) {
                if (!G.is_identity(G.smul(Int(base.q - 1), tame_image)))
                    throw UsageError("tame image has incompatible order");
                diag = G.add(diag, tame_image);
            }
            if (!G.is_identity(diag))
                throw UsageError("diagonal constant relation violated");
        }
        std::vector<GrpElem> gens = unit_gen_images;
        if (infinity_tame) gens.push_back(tame_image);
        gens.push_back(degree_img);
        if (subgroup_closure(G, gens).size() != G.order())
            throw UsageError("reciprocity map is not surjective");
    }
};

/// The trivial extension K = k.
inline ExtensionDatum make_trivial_datum(const FieldSpec& F) {
    ExtensionDatum D;
    D.base = F;
    D.modulus_f = Poly::one();
    D.units = unit_group_structure(F, D.modulus_f);
    D.G = AbelianGroup::trivial();
    D.tame_image = D.G.identity();
    D.degree_img = D.G.identity();
    D.validate();
    return D;
}

/// The constant-field extension of degree m: G = Z/m generated by the
/// Frobenius, [v] = Fr^{deg v}, unramified everywhere.
inline ExtensionDatum make_constant_datum(const FieldSpec& F, uint64_t m) {
    if (m < 1) throw UsageError("constant extension degree must be >= 1");
    if (m == 1) return make_trivial_datum(F);
    ExtensionDatum D;
    D.base = F;
    D.modulus_f = Poly::one();
    D.units = unit_group_structure(F, D.modulus_f);
    D.G = AbelianGroup::cyclic(m);
    D.tame_image = D.G.identity();
    D.degree_img = GrpElem{1};  // Fr
    D.validate();
    return D;
}

/// The Carlitz cyclotomic extension of conductor f: G = (A/f)^x with the
/// standard reciprocity (Frobenius at P is the class of P mod f; at infinity
/// the ramification is tame with inertia the constants F_q^x).
inline ExtensionDatum make_carlitz_datum(const FieldSpec& F, const Poly& f) {
    if (f.deg() < 1) throw UsageError("Carlitz modulus must have degree >= 1");
    if (!f.is_monic()) throw UsageError("Carlitz modulus must be monic");
    ExtensionDatum D;
    D.base = F;
    D.modulus_f = f;
    D.units = unit_group_structure(F, f);
    D.G = D.units.group;
    // unit part maps by the identity in SNF coordinates
    for (size_t i = 0; i < D.units.generators.size(); ++i) {
        GrpElem e = D.G.identity();
        if (!e.empty()) e[i] = 1;
        D.unit_gen_images.push_back(e);
    }
    D.infinity_tame = F.q > 2;
    if (D.infinity_tame) {
        GF c = gf_primitive_element(F);
        D.tame_image = D.G.neg(D.units.dlog_of(F, Poly::constant(c)));
    } else {
        D.tame_image = D.G.identity();
    }
    D.degree_img = D.G.identity();  // the degree component dies in (A/f)^x
    D.validate();
    return D;
}

/// Quotient datum K^H/k for a subgroup generated by hgens, together with the
/// projection (for functoriality checks).
inline std::pair<ExtensionDatum, GroupProjection> quotient_datum(
    const ExtensionDatum& D, const std::vector<GrpElem>& hgens) {
    GroupProjection P = quotient_by(D.G, hgens);
    ExtensionDatum Q;
    Q.base = D.base;
    Q.modulus_f = D.modulus_f;
    Q.infinity_tame = D.infinity_tame;
    Q.G = P.target;
    Q.units = D.units;
    for (const auto& img : D.unit_gen_images) Q.unit_gen_images.push_back(P.apply(img));
    Q.tame_image = P.apply(D.tame_image);
    Q.degree_img = P.apply(D.degree_img);
    Q.validate();
    return {std::move(Q), std::move(P)};
}

}  // namespace ffiwa

#endif
