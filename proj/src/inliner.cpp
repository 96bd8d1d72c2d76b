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

#include "hexinline/inliner.hpp"

#include <algorithm>

#include "hexinline/error.hpp"

namespace hexinline {

namespace {

Rule replace_occurrence(const Rule& r, const Occurrence& occ, const Atom& xe) {
    std::vector<BodyLiteral> body;
    for (const auto& l : r.body()) {
        if (l.is_external() && l.negated == occ.negated && l.external() == occ.atom)
            body.emplace_back(xe);
        else
            body.push_back(l);
    }
    return Rule(r.head(), std::move(body));
}

bool uses_predicate(const Program& p, const std::string& pred) {
    for (const auto& a : ordinary_atoms(p))
        if (a.predicate == pred)
            return true;
    for (const auto& e : external_atoms(p)) {
        auto preds = e.input_predicates();
        if (std::find(preds.begin(), preds.end(), pred) != preds.end())
            return true;
    }
    return false;
}

} // namespace

Atom aux_xe(int k) { return Atom("aux__xe_" + std::to_string(k)); }
Atom aux_nxe(int k) { return Atom("aux__nxe_" + std::to_string(k)); }
Atom aux_bar(int k, const Atom& original) {
    return Atom("aux__bar_" + std::to_string(k) + "__" + original.predicate, original.args);
}

InliningResult inline_one(const Program& p, const Occurrence& occ, const SupportFamily& fam, int fresh_index,
                          const AtomSet& universe, const OracleRegistry* reg) {
    const ExternalAtom& e = occ.atom;
    auto occurrences = external_occurrences(p);
    if (!occurrences.count(occ))
        throw Error(ErrorKind::Precondition, occ.str() + " does not occur in the program");
    if (fam.sigma != occurrence_sigma(occ))
        throw Error(ErrorKind::Precondition, std::string("family polarity mismatch: ") + occ.str() + " needs a " +
                                                 sigma_char(occurrence_sigma(occ)) + " family");
    if (!occ.negated && occurrences.count(Occurrence{e, true}))
        throw Error(ErrorKind::Precondition,
                    "positive inlining of " + e.str() + " is unsound while it also occurs negated; inline `not " + e.str() + "` first");

    AtomSet u = set_union(universe, ordinary_atoms(p));
    AtomSet inputs = input_atoms(e, u);
    if (fam.domain != inputs)
        throw Error(ErrorKind::Precondition, "family domain " + format_atom_set(fam.domain) + " differs from I(e,P) = " +
                                                 format_atom_set(inputs) + " for " + e.str());
    if (reg && reg->contains(e.name) && inputs.size() <= kFamilyCap) {
        if (auto bad = family_violation(*reg, fam))
            throw Error(ErrorKind::IncompleteFamily, std::string(1, sigma_char(fam.sigma)) + " family for " + e.str() +
                                                         " disagrees with the oracle on assignment " + format_atom_set(*bad));
    }

    InlinedOccurrence step{occ, fresh_index, aux_xe(fresh_index), aux_nxe(fresh_index), {}};
    for (const auto& a : inputs)
        step.bars.emplace(a, aux_bar(fresh_index, a));

    InliningResult res;
    res.introduced = {step.xe, step.nxe};
    for (const auto& [a, bar] : step.bars)
        res.introduced.insert(bar);
    for (const auto& a : res.introduced)
        if (u.count(a))
            throw Error(ErrorKind::Precondition, "auxiliary atom " + a.str() + " is not fresh");

    for (const auto& s : fam.sets) {
        std::vector<BodyLiteral> body;
        for (const auto& a : s.pos)
            body.emplace_back(a);
        for (const auto& a : s.neg)
            body.emplace_back(step.bars.at(a));
        res.program.insert(Rule({step.xe}, std::move(body)));
    }
    for (const auto& [a, bar] : step.bars) {
        res.program.insert(Rule({bar}, {BodyLiteral(a, true)}));
        res.program.insert(Rule({bar}, {BodyLiteral(step.xe)}));
        res.program.insert(Rule({a, bar}, {BodyLiteral(step.nxe, true)}));
    }
    res.program.insert(Rule({step.nxe}, {BodyLiteral(step.xe, true)}));
    for (const auto& r : p)
        res.program.insert(replace_occurrence(r, occ, step.xe));
    res.steps.push_back(std::move(step));
    return res;
}

InliningResult inline_all(const Program& p, const FamilyMap& families, const AtomSet& universe, const OracleRegistry* reg) {
    std::vector<Occurrence> order;
    for (const auto& occ : external_occurrences(p))
        if (occ.negated)
            order.push_back(occ);
    for (const auto& occ : external_occurrences(p))
        if (!occ.negated)
            order.push_back(occ);

    InliningResult res{p, {}, {}};
    AtomSet u = set_union(universe, ordinary_atoms(p));
    int k = 1;
    for (const auto& occ : order) {
        auto it = families.find(occ);
        if (it == families.end())
            throw Error(ErrorKind::IncompleteFamily, "no support-set family for occurrence " + occ.str());
        while (u.count(aux_xe(k)) || u.count(aux_nxe(k)))
            ++k;
        InliningResult step = inline_one(res.program, occ, it->second, k++, u, reg);
        res.program = std::move(step.program);
        res.introduced.insert(step.introduced.begin(), step.introduced.end());
        u.insert(step.introduced.begin(), step.introduced.end());
        res.steps.push_back(std::move(step.steps.front()));
    }
    return res;
}

AtomSet project(const AtomSet& y, const InliningResult& res) { return set_difference(y, res.introduced); }

RenamedInput rename_input_predicate(const Program& p, const ExternalAtom& e, const std::string& p_i, const std::string& q,
                                    OracleRegistry& reg, const AtomSet& universe) {
    if (uses_predicate(p, q) || std::any_of(universe.begin(), universe.end(), [&](const Atom& a) { return a.predicate == q; }))
        throw Error(ErrorKind::Precondition, "predicate " + q + " is not fresh");
    const Oracle& base = reg.get(e.name);

    std::vector<std::size_t> positions;
    ExternalAtom renamed = e;
    for (std::size_t i = 0; i < e.inputs.size(); ++i) {
        if (e.inputs[i].is_predicate() && e.inputs[i].name == p_i) {
            renamed.inputs[i].name = q;
            positions.push_back(i);
        }
    }
    if (positions.empty())
        throw Error(ErrorKind::Precondition, p_i + " is not an input predicate of " + e.str());
    renamed.name = e.name + "_" + q;

    auto base_eval = base.eval;
    reg.add({renamed.name,
             [base_eval, positions, p_i, q](const AtomSet& y, const ExternalAtom& call) {
                 // Y^q: q(p_i, d) stands for p_i(d).
                 AtomSet mapped;
                 for (const auto& a : y) {
                     if (a.predicate != q)
                         mapped.insert(a);
                     else if (!a.args.empty() && a.args.front() == p_i)
                         mapped.insert(Atom(p_i, {a.args.begin() + 1, a.args.end()}));
                 }
                 ExternalAtom original = call;
                 for (auto i : positions)
                     original.inputs[i].name = p_i;
                 auto name = original.name;
                 original.name = name.substr(0, name.size() - q.size() - 1);
                 return base_eval(mapped, original);
             },
             {}});

    RenamedInput out{{}, renamed};
    for (const auto& r : p) {
        std::vector<BodyLiteral> body;
        for (const auto& l : r.body())
            body.push_back(l.is_external() && l.external() == e ? BodyLiteral(renamed, l.negated) : l);
        out.program.insert(Rule(r.head(), std::move(body)));
    }
    for (const auto& a : set_union(universe, ordinary_atoms(p))) {
        if (a.predicate != p_i)
            continue;
        std::vector<std::string> args{p_i};
        args.insert(args.end(), a.args.begin(), a.args.end());
        out.program.insert(Rule({Atom(q, args)}, {BodyLiteral(a)}));
    }
    return out;
}

} // namespace hexinline
