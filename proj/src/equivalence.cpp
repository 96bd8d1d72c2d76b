/*
 *  Copyright (C) 2026  The hexinline authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include "hexinline/equivalence.hpp"

#include <algorithm>
#include <vector>

#include "hexinline/engine.hpp"
#include "hexinline/error.hpp"
#include "hexinline/reduct.hpp"

namespace hexinline {

using engine::AtomIndex;
using engine::Mask;

namespace {

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

struct Ctx {
    AtomIndex idx;
    Mask h = 0;
    Mask b = 0;

    Ctx(const AtomSet& u, const HBContext& ctx) : idx(u), h(idx.mask(ctx.h)), b(idx.mask(ctx.b)) {}

    bool leq(Mask x, Mask x2) const { return subset(x & h, x2 & h) && subset(x2 & b, x & b); }
    bool lt(Mask x, Mask x2) const { return leq(x, x2) && (x & (h | b)) != (x2 & (h | b)); }
};

AtomSet joint_universe(const Program& p, const Program& q, const HBContext& ctx, const AtomSet& universe) {
    AtomSet u = set_union(universe, set_union(ordinary_atoms(p), ordinary_atoms(q)));
    return set_union(u, set_union(ctx.h, ctx.b));
}

void check_cap(const AtomSet& u, std::size_t cap) {
    if (u.size() > cap)
        throw Error(ErrorKind::CapExceeded, "classical-model cap exceeded (" + std::to_string(u.size()) + " atoms, cap " +
                                                std::to_string(cap) + ")");
}

std::vector<Mask> sorted_models(const engine::GroundProgram& gp, const AtomIndex& idx, const engine::Valuation& v) {
    std::vector<Mask> models;
    engine::for_each_model(gp, idx.all(), 0, false, v, [&](Mask y) {
        models.push_back(y);
        return true;
    });
    std::sort(models.begin(), models.end(), [&](Mask a, Mask b) { return idx.set(a) < idx.set(b); });
    return models;
}

// Models of the reduct of gp wrt y that are proper subsets of y.
std::vector<Mask> proper_reduct_models(const engine::GroundProgram& gp, Mask y, const engine::Valuation& v) {
    auto red = engine::reduct(gp, y, v);
    std::vector<Mask> out;
    engine::for_each_model(red, y, 0, false, v, [&](Mask x) {
        if (x != y)
            out.push_back(x);
        return true;
    });
    return out;
}

// First condition of both the witness and the model definition.
bool h_minimal(const engine::GroundProgram& gp, Mask y, const Ctx& c, const engine::Valuation& v) {
    return !engine::smaller_reduct_model(gp, y, y & c.h, v).has_value();
}

} // namespace

bool leq_bh(const AtomSet& x, const AtomSet& x2, const HBContext& ctx) {
    return is_subset(set_intersection(x, ctx.h), set_intersection(x2, ctx.h)) &&
           is_subset(set_intersection(x2, ctx.b), set_intersection(x, ctx.b));
}

bool lt_bh(const AtomSet& x, const AtomSet& x2, const HBContext& ctx) {
    AtomSet hb = set_union(ctx.h, ctx.b);
    return leq_bh(x, x2, ctx) && set_intersection(x, hb) != set_intersection(x2, hb);
}

std::set<HBModel> sigma_models(const Program& p, const HBContext& ctx, const AtomSet& universe, const OracleRegistry& reg,
                               std::size_t cap) {
    AtomSet u = joint_universe(p, {}, ctx, universe);
    check_cap(u, cap);
    Ctx c(u, ctx);
    auto gp = engine::ground(p, c.idx);
    engine::OracleValuation ov(gp, c.idx, reg);
    auto v = ov.fn();
    std::set<HBModel> out;
    for (Mask y : sorted_models(gp, c.idx, v)) {
        if (!h_minimal(gp, y, c, v))
            continue;
        AtomSet ys = c.idx.set(y);
        out.insert({ys, ys});
        std::vector<Mask> proj;
        for (Mask x : proper_reduct_models(gp, y, v))
            proj.push_back(x & (c.h | c.b));
        std::sort(proj.begin(), proj.end());
        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
        for (Mask x : proj) {
            bool maximal = std::none_of(proj.begin(), proj.end(), [&](Mask x2) { return c.lt(x, x2); });
            if (maximal)
                out.insert({c.idx.set(x), ys});
        }
    }
    return out;
}

bool equivalent(const Program& p, const Program& q, const HBContext& ctx, const AtomSet& universe, const OracleRegistry& reg,
                std::size_t cap) {
    AtomSet u = joint_universe(p, q, ctx, universe);
    return sigma_models(p, ctx, u, reg, cap) == sigma_models(q, ctx, u, reg, cap);
}

bool strong_equivalent(const Program& p, const Program& q, const OracleRegistry& reg) {
    AtomSet all = set_union(ordinary_atoms(p), ordinary_atoms(q));
    return equivalent(p, q, HBContext{all, all}, all, reg);
}

bool uniform_equivalent(const Program& p, const Program& q, const OracleRegistry& reg) {
    AtomSet all = set_union(ordinary_atoms(p), ordinary_atoms(q));
    return equivalent(p, q, HBContext{all, {}}, all, reg);
}

std::optional<Witness> find_witness(const Program& p, const Program& q, const HBContext& ctx, const AtomSet& universe,
                                    const OracleRegistry& reg, std::size_t cap) {
    AtomSet u = joint_universe(p, q, ctx, universe);
    check_cap(u, cap);
    Ctx c(u, ctx);
    auto gp = engine::ground(p, c.idx);
    auto gq = engine::ground(q, c.idx);
    engine::OracleValuation ovp(gp, c.idx, reg);
    engine::OracleValuation ovq(gq, c.idx, reg);
    auto vp = ovp.fn();
    auto vq = ovq.fn();
    for (Mask y : sorted_models(gp, c.idx, vp)) {
        if (!h_minimal(gp, y, c, vp))
            continue;
        if (!engine::is_model(gq, y, vq))
            return Witness{{}, c.idx.set(y)};
        auto mp = proper_reduct_models(gp, y, vp);
        auto mq = proper_reduct_models(gq, y, vq);
        std::sort(mq.begin(), mq.end(), [&](Mask a, Mask b) { return c.idx.set(a) < c.idx.set(b); });
        for (Mask x : mq) {
            bool blocked = std::any_of(mp.begin(), mp.end(), [&](Mask x2) { return c.leq(x, x2); });
            if (!blocked)
                return Witness{c.idx.set(x), c.idx.set(y)};
        }
    }
    return std::nullopt;
}

bool is_witness(const Witness& w, const Program& p, const Program& q, const HBContext& ctx, const OracleRegistry& reg) {
    if (!is_subset(w.x, w.y))
        return false;
    AtomSet u = joint_universe(p, q, ctx, w.y);
    check_cap(u, 64);
    Ctx c(u, ctx);
    auto gp = engine::ground(p, c.idx);
    auto gq = engine::ground(q, c.idx);
    engine::OracleValuation ovp(gp, c.idx, reg);
    engine::OracleValuation ovq(gq, c.idx, reg);
    auto vp = ovp.fn();
    auto vq = ovq.fn();
    Mask x = c.idx.mask(w.x);
    Mask y = c.idx.mask(w.y);
    if (!engine::is_model(gp, y, vp) || !h_minimal(gp, y, c, vp))
        return false;
    if (!engine::is_model(gq, y, vq))
        return true;
    if (x == y || !engine::is_model(engine::reduct(gq, y, vq), x, vq))
        return false;
    auto mp = proper_reduct_models(gp, y, vp);
    return std::none_of(mp.begin(), mp.end(), [&](Mask x2) { return c.leq(x, x2); });
}

Program witness_to_counterexample(const Witness& w, const Program& p, const Program& q, const HBContext& ctx,
                                  const OracleRegistry& reg) {
    if (!is_witness(w, p, q, ctx, reg))
        throw Error(ErrorKind::Precondition, "(" + format_atom_set(w.x) + ", " + format_atom_set(w.y) + ") is not a witness");
    Program r;
    if (!satisfies(w.y, q, reg)) {
        for (const auto& a : set_intersection(w.y, ctx.h))
            r.insert(Rule({a}, {}));
        return r;
    }
    for (const auto& a : set_intersection(w.x, ctx.h))
        r.insert(Rule({a}, {}));
    AtomSet rest = set_difference(w.y, w.x);
    for (const auto& a : set_intersection(rest, ctx.h))
        for (const auto& b : set_intersection(rest, ctx.b))
            r.insert(Rule({a}, {BodyLiteral(b)}));
    return r;
}

Program positive_counterexample(const Program& r, const AtomSet& y) { return gl_reduct(r, y); }

std::optional<Separation> find_separation(const Program& p, const Program& q, const HBContext& ctx, const AtomSet& universe,
                                          const OracleRegistry& reg, std::size_t cap) {
    if (auto w = find_witness(p, q, ctx, universe, reg, cap))
        return Separation{*w, true, witness_to_counterexample(*w, p, q, ctx, reg)};
    if (auto w = find_witness(q, p, ctx, universe, reg, cap))
        return Separation{*w, false, witness_to_counterexample(*w, q, p, ctx, reg)};
    return std::nullopt;
}

} // namespace hexinline
