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

#include "hexinline/inconsistency.hpp"

#include <algorithm>
#include <numeric>

#include "hexinline/engine.hpp"
#include "hexinline/error.hpp"

namespace hexinline {

using engine::AtomIndex;
using engine::Mask;

namespace {

AtomSet full_universe(const Program& p, const HBContext& ctx, const AtomSet& universe) {
    AtomSet u = set_union(universe, ordinary_atoms(p));
    u = set_union(u, set_union(ctx.h, ctx.b));
    return u;
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

// Calls f on every nonempty subset of `d`, by size, then lexicographically.
template <typename F>
std::optional<AtomSet> first_subset(const std::vector<Atom>& d, F&& f) {
    for (std::size_t k = 1; k <= d.size(); ++k) {
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        while (true) {
            AtomSet s;
            for (auto i : pick)
                s.insert(d[i]);
            if (f(s))
                return s;
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == d.size() - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace

IncReport persistently_inconsistent(const Program& p, const HBContext& ctx, const AtomSet& universe, const OracleRegistry& reg,
                                    std::size_t cap) {
    AtomSet u = full_universe(p, ctx, universe);
    check_cap(u, cap);
    AtomIndex idx(u);
    auto gp = engine::ground(p, idx);
    engine::OracleValuation ov(gp, idx, reg);
    auto v = ov.fn();
    Mask h = idx.mask(ctx.h);
    IncReport rep;
    rep.inconsistent = true;
    for (Mask y : sorted_models(gp, idx, v)) {
        auto smaller = engine::smaller_reduct_model(gp, y, y & h, v);
        if (!smaller) {
            rep.inconsistent = false;
            rep.refuting_model = idx.set(y);
            break;
        }
        rep.evidence.push_back({idx.set(y), idx.set(*smaller)});
    }
    return rep;
}

IncReport persistently_inconsistent_ufs(const Program& p, const HBContext& ctx, const AtomSet& universe,
                                        const OracleRegistry& reg, std::size_t cap) {
    AtomSet u = full_universe(p, ctx, universe);
    check_cap(u, cap);
    AtomIndex idx(u);
    auto gp = engine::ground(p, idx);
    engine::OracleValuation ov(gp, idx, reg);
    IncReport rep;
    rep.inconsistent = true;
    rep.note = "B is not used by the unfounded-set criterion";
    for (Mask y : sorted_models(gp, idx, ov.fn())) {
        AtomSet ys = idx.set(y);
        AtomSet free = set_difference(ys, ctx.h);
        std::vector<Atom> d(free.begin(), free.end());
        auto ufs = first_subset(d, [&](const AtomSet& s) { return is_unfounded_set(s, p, ys, reg); });
        if (!ufs) {
            rep.inconsistent = false;
            rep.refuting_model = ys;
            break;
        }
        rep.evidence.push_back({ys, *ufs});
    }
    return rep;
}

} // namespace hexinline
