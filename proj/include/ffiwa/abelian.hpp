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

#ifndef FFIWA_ABELIAN_HPP
#define FFIWA_ABELIAN_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "linalg.hpp"

namespace ffiwa {

/// Element of a finite abelian group in elementary-divisor coordinates.
using GrpElem = std::vector<uint64_t>;

/// Finite abelian group presented by its elementary divisors
/// d_1 | d_2 | ... | d_m (each >= 2; the trivial group has none).
struct AbelianGroup {
    std::vector<uint64_t> divisors;

    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<uint64_t> d) : divisors(std::move(d)) {
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (divisors[i] < 2) throw UsageError("elementary divisor < 2");
            if (i + 1 < divisors.size() && divisors[i + 1] % divisors[i] != 0)
                throw UsageError("elementary divisors must form a divisibility chain");
        }
    }
    static AbelianGroup trivial() { return AbelianGroup(); }
    static AbelianGroup cyclic(uint64_t n) {
        return n <= 1 ? trivial() : AbelianGroup({n});
    }

    size_t rank() const { return divisors.size(); }
    uint64_t order() const {
        uint64_t o = 1;
        for (auto d : divisors) o *= d;
        return o;
    }
    uint64_t exponent() const { return divisors.empty() ? 1 : divisors.back(); }

    GrpElem identity() const { return GrpElem(divisors.size(), 0); }
    bool is_identity(const GrpElem& a) const {
        for (auto x : a)
            if (x) return false;
        return true;
    }
    GrpElem add(const GrpElem& a, const GrpElem& b) const {
        GrpElem c(divisors.size());
        for (size_t i = 0; i < divisors.size(); ++i) c[i] = (a[i] + b[i]) % divisors[i];
        return c;
    }
    GrpElem neg(const GrpElem& a) const {
        GrpElem c(divisors.size());
        for (size_t i = 0; i < divisors.size(); ++i) c[i] = a[i] ? divisors[i] - a[i] : 0;
        return c;
    }
    GrpElem smul(Int n, const GrpElem& a) const {
        GrpElem c(divisors.size());
        for (size_t i = 0; i < divisors.size(); ++i)
            c[i] = uint64_t(mod_pos(n * Int(a[i]), Int(divisors[i])));
        return c;
    }
    uint64_t element_order(const GrpElem& a) const {
        uint64_t o = 1;
        for (size_t i = 0; i < divisors.size(); ++i) {
            uint64_t g = gcd_u64(a[i], divisors[i]);
            uint64_t oi = divisors[i] / g;
            o = o / gcd_u64(o, oi) * oi;
        }
        return o;
    }

    /// Flat index <-> coordinate tuple (mixed radix, first divisor fastest).
    uint64_t flat(const GrpElem& a) const {
        uint64_t x = 0;
        for (size_t i = divisors.size(); i-- > 0;) x = x * divisors[i] + a[i];
        return x;
    }
    GrpElem unflat(uint64_t x) const {
        GrpElem a(divisors.size());
        for (size_t i = 0; i < divisors.size(); ++i) {
            a[i] = x % divisors[i];
            x /= divisors[i];
        }
        return a;
    }

    bool operator==(const AbelianGroup& o) const { return divisors == o.divisors; }
};

/// Enumerates a subgroup from generators (closure under the group law).
inline std::set<GrpElem> subgroup_closure(const AbelianGroup& G,
                                          const std::vector<GrpElem>& gens) {
    std::set<GrpElem> H;
    H.insert(G.identity());
    std::vector<GrpElem> frontier{G.identity()};
    while (!frontier.empty()) {
        std::vector<GrpElem> next;
        for (const auto& h : frontier)
            for (const auto& g : gens) {
                GrpElem x = G.add(h, g);
                if (H.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    return H;
}

/// Verifies that an explicit list of tuples is a subgroup (contains the
/// identity and is closed under the group law).
inline bool is_subgroup(const AbelianGroup& G, const std::vector<GrpElem>& elems) {
    std::set<GrpElem> H(elems.begin(), elems.end());
    if (!H.count(G.identity())) return false;
    for (const auto& a : H)
        for (const auto& b : H)
            if (!H.count(G.add(a, b))) return false;
    return true;
}

/// A surjection G -> Q with explicit coordinate data, as produced by
/// quotient_by.
struct GroupProjection {
    AbelianGroup source;
    AbelianGroup target;
    Mat coord_map;            // new coords = (old coords * coord_map) mod target divisors
    std::vector<size_t> keep; // columns of the SNF coordinate space that survived

    GrpElem apply(const GrpElem& a) const {
        Vec x(a.begin(), a.end());
        Vec y = vec_mat_mul(x, coord_map);
        GrpElem out(target.divisors.size());
        for (size_t i = 0; i < keep.size(); ++i)
            out[i] = uint64_t(mod_pos(y[keep[i]], Int(target.divisors[i])));
        return out;
    }
};

/// Quotient of G by the subgroup generated by `hgens`, with the projection.
inline GroupProjection quotient_by(const AbelianGroup& G, const std::vector<GrpElem>& hgens) {
    const size_t m = G.divisors.size();
    Mat rel;
    for (size_t i = 0; i < m; ++i) {
        Vec row(m, 0);
        row[i] = Int(G.divisors[i]);
        rel.push_back(std::move(row));
    }
    for (const auto& h : hgens) {
        if (h.size() != m) throw UsageError("subgroup generator has wrong arity");
        Vec row(m, 0);
        for (size_t i = 0; i < m; ++i) row[i] = Int(h[i]);
        rel.push_back(std::move(row));
    }
    SnfResult s = smith_normal_form(rel);
    GroupProjection P;
    P.source = G;
    P.coord_map = s.V;
    std::vector<uint64_t> divs;
    auto diag = s.diagonal();
    for (size_t i = 0; i < m; ++i) {
        Int d = i < diag.size() ? diag[i] : Int(0);
        if (d == 0) throw Error("quotient of finite group produced a free part");
        if (d > 1) {
            divs.push_back(uint64_t(d));
            P.keep.push_back(i);
        }
    }
    P.target = AbelianGroup(divs);
    return P;
}

/// Character of a finite abelian group: sends the i-th standard generator to
/// zeta_N^{exps[i]} where N = target_order.
struct Character {
    uint64_t target_order = 1;
    std::vector<uint64_t> exps;  // exps[i] multiple of N / d_i

    /// Exponent k with phi(a) = zeta_N^k.
    uint64_t exponent_on(const AbelianGroup& G, const GrpElem& a) const {
        if (target_order == 1) return 0;
        uint64_t k = 0;
        for (size_t i = 0; i < exps.size(); ++i)
            k = (k + (__uint128_t(exps[i]) * a[i]) % target_order) % target_order;
        return k;
    }
    /// Order of the character.
    uint64_t order() const {
        uint64_t g = target_order;
        for (auto e : exps) g = gcd_u64(g, e);
        return target_order / (g == 0 ? target_order : g);
    }
    bool is_trivial() const {
        for (auto e : exps)
            if (e) return false;
        return true;
    }
    /// Whether the character kills the subgroup generated by the given tuples.
    bool trivial_on(const AbelianGroup& G, const std::vector<GrpElem>& gens) const {
        for (const auto& g : gens)
            if (exponent_on(G, g) != 0) return false;
        return true;
    }
};

/// All |G| characters, indexed deterministically: character j sends gen_i to
/// zeta_N^{a_i * N/d_i} where (a_i) is the coordinate tuple of flat index j.
inline std::vector<Character> characters(const AbelianGroup& G) {
    const uint64_t N = G.exponent();
    std::vector<Character> out;
    out.reserve(G.order());
    for (uint64_t j = 0; j < G.order(); ++j) {
        GrpElem a = G.unflat(j);
        Character c;
        c.target_order = N;
        c.exps.resize(G.divisors.size());
        for (size_t i = 0; i < G.divisors.size(); ++i)
            c.exps[i] = a[i] * (N / G.divisors[i]);
        out.push_back(std::move(c));
    }
    return out;
}

/// Structure of a finite abelian group given by black-box multiplication.
/// `elements` must list the whole group; `mul` is the group law, `id` the
/// identity.  Returns elementary divisors, generators (as indices into
/// `elements`), and a discrete-log table mapping each element index to its
/// coordinate tuple.
struct EnumeratedGroupStructure {
    AbelianGroup group;
    std::vector<Vec> generator_exponents;  // rows: new generators in terms of the raw gens
    std::vector<size_t> raw_gen_indices;   // indices of the raw generators used
    std::vector<GrpElem> dlog;             // per element index
};

template <class MulFn>
EnumeratedGroupStructure group_structure_from_mul(size_t count, MulFn&& mul, size_t id_index) {
    // incremental coset enumeration: dlog over the raw generator list
    std::map<size_t, Vec> dlog_raw;
    dlog_raw[id_index] = {};
    std::vector<size_t> raw_gens;
    Mat relations;

    for (size_t cand = 0; cand < count; ++cand) {
        if (dlog_raw.count(cand)) continue;
        // new generator
        size_t gi = raw_gens.size();
        raw_gens.push_back(cand);
        for (auto& [idx, v] : dlog_raw) v.resize(gi + 1, 0);
        // find order of cand relative to the current subgroup
        size_t k = 1;
        size_t pw = cand;
        std::vector<size_t> powers{cand};
        while (!dlog_raw.count(pw)) {
            pw = mul(pw, cand);
            powers.push_back(pw);
            ++k;
        }
        // relation: k * e_gi - dlog(cand^k) = 0
        Vec rel = dlog_raw[pw];
        for (auto& x : rel) x = -x;
        rel[gi] = Int(k);
        relations.push_back(rel);
        // extend the dlog table with the new cosets
        std::vector<std::pair<size_t, Vec>> snapshot(dlog_raw.begin(), dlog_raw.end());
        for (const auto& [idx, v] : snapshot) {
            size_t cur = idx;
            for (size_t j = 1; j < k; ++j) {
                cur = mul(cur, cand);
                Vec w = v;
                w[gi] += 1 * Int(j);
                dlog_raw[cur] = std::move(w);
            }
        }
    }
    const size_t g = raw_gens.size();
    for (auto& row : relations) row.resize(g, 0);

    EnumeratedGroupStructure out;
    out.raw_gen_indices = raw_gens;
    if (g == 0) {
        out.group = AbelianGroup::trivial();
        out.dlog.assign(count, GrpElem{});
        return out;
    }
    SnfResult s = smith_normal_form(relations);
    auto diag = s.diagonal();
    std::vector<uint64_t> divs;
    std::vector<size_t> keep;
    for (size_t i = 0; i < g; ++i) {
        Int d = i < diag.size() ? diag[i] : Int(0);
        if (d == 0) throw Error("enumerated group has a free part");
        if (d > 1) {
            divs.push_back(uint64_t(d));
            keep.push_back(i);
        }
    }
    out.group = AbelianGroup(divs);
    for (size_t i : keep) out.generator_exponents.push_back(s.Vinv[i]);
    out.dlog.assign(count, out.group.identity());
    for (const auto& [idx, v] : dlog_raw) {
        Vec y = vec_mat_mul(v, s.V);
        GrpElem coords(divs.size());
        for (size_t i = 0; i < keep.size(); ++i)
            coords[i] = uint64_t(mod_pos(y[keep[i]], Int(divs[i])));
        out.dlog[idx] = std::move(coords);
    }
    return out;
}

}  // namespace ffiwa

#endif
