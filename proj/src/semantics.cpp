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

#include "hexinline/semantics.hpp"

#include <algorithm>
#include <vector>

#include "hexinline/engine.hpp"
#include "hexinline/error.hpp"
#include "hexinline/inliner.hpp"
#include "hexinline/reduct.hpp"

namespace hexinline {

using engine::AtomIndex;
using engine::Mask;

namespace {

void check_model_cap(const AtomSet& u, std::size_t cap) {
    if (u.size() > cap)
        throw Error(ErrorKind::CapExceeded, "classical-model cap exceeded (" + std::to_string(u.size()) + " atoms, cap " +
                                                std::to_string(cap) + ")");
}

// Candidates paired with their projection, in lexicographic order of the projection.
struct Candidate {
    AtomSet projected;
    Mask full = 0;
};

std::vector<Candidate> sorted_candidates(const std::vector<Mask>& models, const AtomIndex& idx, Mask keep) {
    std::vector<Candidate> out;
    for (Mask m : models)
        out.push_back({idx.set(m & keep), m});
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.projected < b.projected; });
    return out;
}

FamilyMap resolve_families(const Program& p, const AtomSet& u, const OracleRegistry& reg, const FamilyMap* given) {
    FamilyMap out;
    for (const auto& occ : external_occurrences(p)) {
        AtomSet inputs = input_atoms(occ.atom, u);
        SupportFamily fam;
        if (given) {
            auto it = given->find(occ);
            if (it == given->end())
                throw Error(ErrorKind::IncompleteFamily, std::string("no ") + sigma_char(occurrence_sigma(occ)) +
                                                             " support-set family for occurrence " + occ.str());
            fam = it->second;
            if (fam.sigma != occurrence_sigma(occ))
                throw Error(ErrorKind::InvalidFamily, "family polarity mismatch for occurrence " + occ.str());
            if (fam.domain != inputs)
                fam = restrict_family(fam, inputs);
        } else {
            fam = family_for(reg, occ.atom, inputs, occurrence_sigma(occ));
        }
        if (reg.contains(occ.atom.name) && inputs.size() <= kFamilyCap) {
            if (auto bad = family_violation(reg, fam))
                throw Error(ErrorKind::IncompleteFamily, std::string(1, sigma_char(fam.sigma)) + " family for " + occ.atom.str() +
                                                             " disagrees with the oracle on assignment " + format_atom_set(*bad));
        }
        out[occ] = std::move(fam);
    }
    return out;
}

EvalResult eval_brute(const Program& p, const AtomSet& u, const OracleRegistry& reg, bool first_only) {
    check_model_cap(u, kModelCap);
    EvalResult res;
    AtomIndex idx(u);
    auto gp = engine::ground(p, idx);
    engine::OracleValuation ov(gp, idx, reg, &res.stats.oracle_calls);
    std::vector<Mask> models;
    engine::for_each_model(gp, idx.all(), 0, false, ov.fn(), [&](Mask y) {
        models.push_back(y);
        return true;
    });
    Mask keep = idx.mask(ordinary_atoms(p));
    for (const auto& c : sorted_candidates(models, idx, idx.all())) {
        ++res.stats.candidates_checked;
        ++res.stats.minimality_checks;
        if (engine::is_minimal(gp, c.full, ov.fn())) {
            res.answer_sets.insert(idx.set(c.full & keep));
            if (first_only)
                break;
        }
    }
    return res;
}

// Shared driver for the traditional and support-set configurations: solve the
// (extended) guessing program, verify every candidate's guesses, then run the
// FLP minimality check on the projection.
template <typename Verify, typename Valuation>
void check_candidates(const Program& p, const Program& guess_prog, const GuessMap& gm, const AtomSet& u, bool first_only,
                      EvalResult& res, Verify&& verify, Valuation&& make_valuation) {
    AtomIndex idx(set_union(u, gm.introduced()));
    auto gph = engine::ground(guess_prog, idx);
    auto gp = engine::ground(p, idx);
    auto cands = engine::answer_sets(gph, idx.all(), true, {});
    Mask universe_mask = idx.mask(u);
    Mask keep = idx.mask(ordinary_atoms(p));
    auto valuation = make_valuation(gp, idx);
    for (const auto& c : sorted_candidates(cands, idx, universe_mask)) {
        ++res.stats.candidates_checked;
        if (!verify(idx, c))
            continue;
        ++res.stats.minimality_checks;
        valuation.reset();
        if (!engine::is_minimal(gp, c.full & universe_mask, valuation.fn()))
            continue;
        res.answer_sets.insert(idx.set(c.full & keep));
        if (first_only)
            break;
    }
}

struct ResettableFamilyValuation {
    engine::FamilyValuation fv;
    void reset() {}
    engine::Valuation fn() const { return fv.fn(); }
};

EvalResult eval_traditional(const Program& p, const AtomSet& u, const OracleRegistry& reg, bool first_only) {
    EvalResult res;
    auto [guess_prog, gm] = guessing_program(p);
    for (const auto& [e, atoms] : gm.atoms)
        reg.get(e.name);
    auto verify = [&](const AtomIndex& idx, const Candidate& c) {
        for (const auto& [e, atoms] : gm.atoms) {
            ++res.stats.oracle_calls;
            bool guessed = c.full & idx.bit(atoms.first);
            if (eval_external(reg, e, c.projected) != guessed)
                return false;
        }
        return true;
    };
    auto make = [&](const engine::GroundProgram& gp, const AtomIndex& idx) {
        return engine::OracleValuation(gp, idx, reg, &res.stats.oracle_calls);
    };
    check_candidates(p, guess_prog, gm, u, first_only, res, verify, make);
    return res;
}

EvalResult eval_support_sets(const Program& p, const AtomSet& u, const OracleRegistry& reg, const FamilyMap* given,
                             bool first_only) {
    EvalResult res;
    FamilyMap fams = resolve_families(p, u, reg, given);
    auto [guess_prog, gm] = guessing_program(p);
    // A matching T set forbids guessing e false; a matching F set forbids guessing it true.
    for (const auto& [occ, fam] : fams) {
        const Atom& e = gm.atoms.at(occ.atom).first;
        for (const auto& s : fam.sets) {
            std::vector<BodyLiteral> body;
            for (const auto& a : s.pos)
                body.emplace_back(a);
            for (const auto& a : s.neg)
                body.emplace_back(a, true);
            body.emplace_back(e, fam.sigma == Sigma::T);
            guess_prog.insert(Rule({}, std::move(body)));
        }
    }
    auto verify = [&](const AtomIndex& idx, const Candidate& c) {
        for (const auto& [e, atoms] : gm.atoms) {
            bool guessed = c.full & idx.bit(atoms.first);
            auto pos = fams.find(Occurrence{e, false});
            bool value = pos != fams.end() ? pos->second.matches(c.projected) : !fams.at(Occurrence{e, true}).matches(c.projected);
            if (value != guessed)
                return false;
        }
        return true;
    };
    auto make = [&](const engine::GroundProgram& gp, const AtomIndex& idx) {
        return ResettableFamilyValuation{engine::FamilyValuation(gp, idx, fams)};
    };
    check_candidates(p, guess_prog, gm, u, first_only, res, verify, make);
    return res;
}

EvalResult eval_inlining(const Program& p, const AtomSet& u, const OracleRegistry& reg, const FamilyMap* given, bool first_only) {
    EvalResult res;
    FamilyMap fams = resolve_families(p, u, reg, given);
    InliningResult inl = inline_all(p, fams, u);
    AtomSet keep = ordinary_atoms(p);
    for (const auto& y : ordinary_answer_sets(inl.program, set_union(u, inl.introduced))) {
        res.answer_sets.insert(set_intersection(project(y, inl), keep));
    }
    if (first_only && res.answer_sets.size() > 1)
        res.answer_sets.erase(std::next(res.answer_sets.begin()), res.answer_sets.end());
    return res;
}

} // namespace

std::set<AtomSet> classical_models(const Program& p, const AtomSet& universe, const OracleRegistry& reg, std::size_t cap) {
    AtomSet u = set_union(universe, ordinary_atoms(p));
    check_model_cap(u, cap);
    AtomIndex idx(u);
    auto gp = engine::ground(p, idx);
    engine::OracleValuation ov(gp, idx, reg);
    std::set<AtomSet> out;
    engine::for_each_model(gp, idx.all(), 0, false, ov.fn(), [&](Mask y) {
        out.insert(idx.set(y));
        return true;
    });
    return out;
}

std::set<AtomSet> answer_sets_brute(const Program& p, const AtomSet& universe, const OracleRegistry& reg, std::size_t cap) {
    AtomSet u = set_union(universe, ordinary_atoms(p));
    check_model_cap(u, cap);
    AtomIndex idx(u);
    auto gp = engine::ground(p, idx);
    engine::OracleValuation ov(gp, idx, reg);
    std::set<AtomSet> out;
    for (Mask y : engine::answer_sets(gp, idx.all(), false, ov.fn()))
        out.insert(idx.set(y));
    return out;
}

std::set<AtomSet> ordinary_answer_sets(const Program& p, const AtomSet& universe) {
    if (!is_ordinary(p))
        throw Error(ErrorKind::Precondition, "ordinary_answer_sets requires a program without external atoms");
    AtomIndex idx(set_union(universe, ordinary_atoms(p)));
    auto gp = engine::ground(p, idx);
    std::set<AtomSet> out;
    for (Mask y : engine::answer_sets(gp, idx.all(), true, {}))
        out.insert(idx.set(y));
    return out;
}

AtomSet GuessMap::introduced() const {
    AtomSet out;
    for (const auto& [e, atoms] : this->atoms) {
        out.insert(atoms.first);
        out.insert(atoms.second);
    }
    return out;
}

std::pair<Program, GuessMap> guessing_program(const Program& p) {
    GuessMap gm;
    int k = 1;
    for (const auto& e : external_atoms(p)) {
        auto suffix = e.name + "_" + std::to_string(k++);
        gm.atoms.emplace(e, std::make_pair(Atom("aux__e_" + suffix), Atom("aux__ne_" + suffix)));
    }
    Program out;
    for (const auto& r : p) {
        std::vector<BodyLiteral> body;
        for (const auto& l : r.body())
            body.push_back(l.is_external() ? BodyLiteral(gm.atoms.at(l.external()).first, l.negated) : l);
        out.insert(Rule(r.head(), std::move(body)));
    }
    for (const auto& [e, atoms] : gm.atoms)
        out.insert(Rule({atoms.first, atoms.second}, {}));
    return {out, gm};
}

std::set<AtomSet> compatible_sets(const Program& p, const AtomSet& universe, const OracleRegistry& reg, std::size_t cap) {
    AtomSet u = set_union(universe, ordinary_atoms(p));
    check_model_cap(u, cap);
    auto [guess_prog, gm] = guessing_program(p);
    std::set<AtomSet> out;
    for (const auto& y : ordinary_answer_sets(guess_prog, set_union(u, gm.introduced()))) {
        AtomSet projected = set_intersection(y, u);
        bool ok = std::all_of(gm.atoms.begin(), gm.atoms.end(), [&](const auto& entry) {
            return eval_external(reg, entry.first, projected) == (y.count(entry.second.first) != 0);
        });
        if (ok)
            out.insert(y);
    }
    return out;
}

bool is_unfounded_set(const AtomSet& u, const Program& p, const AtomSet& y, const OracleRegistry& reg) {
    AtomSet rest = set_difference(y, u);
    for (const auto& r : p) {
        bool touches = std::any_of(r.head().begin(), r.head().end(), [&](const Atom& h) { return u.count(h) != 0; });
        if (!touches)
            continue;
        bool false_in_y = false, false_in_rest = false;
        for (const auto& l : r.body()) {
            false_in_y = false_in_y || !literal_true(y, l, reg);
            false_in_rest = false_in_rest || !literal_true(rest, l, reg);
        }
        bool other_head = std::any_of(r.head().begin(), r.head().end(), [&](const Atom& h) { return !u.count(h) && y.count(h); });
        if (!false_in_y && !false_in_rest && !other_head)
            return false;
    }
    return true;
}

std::string mode_name(Mode m) {
    switch (m) {
    case Mode::Brute:
        return "brute";
    case Mode::Traditional:
        return "traditional";
    case Mode::SupportSets:
        return "supsets";
    case Mode::Inlining:
        return "inlining";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    for (Mode m : {Mode::Brute, Mode::Traditional, Mode::SupportSets, Mode::Inlining})
        if (mode_name(m) == s)
            return m;
    throw Error(ErrorKind::Precondition, "unknown mode '" + s + "' (expected brute, traditional, supsets or inlining)");
}

EvalResult evaluate(const Program& p, const AtomSet& universe, const OracleRegistry& reg, const FamilyMap* families, Mode mode,
                    bool first_only) {
    AtomSet u = set_union(universe, ordinary_atoms(p));
    switch (mode) {
    case Mode::Brute:
        return eval_brute(p, u, reg, first_only);
    case Mode::Traditional:
        return eval_traditional(p, u, reg, first_only);
    case Mode::SupportSets:
        return eval_support_sets(p, u, reg, families, first_only);
    case Mode::Inlining:
        return eval_inlining(p, u, reg, families, first_only);
    }
    return {};
}

} // namespace hexinline
