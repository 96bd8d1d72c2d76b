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

#include "hexinline/engine.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "hexinline/error.hpp"

namespace hexinline::engine {

AtomIndex::AtomIndex(const AtomSet& universe) : atoms_(universe.begin(), universe.end()) {
    if (atoms_.size() > 64)
        throw Error(ErrorKind::CapExceeded, "universe of " + std::to_string(atoms_.size()) + " atoms exceeds the 64-atom solver limit");
}

int AtomIndex::find(const Atom& a) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    if (it == atoms_.end() || *it != a)
        return -1;
    return static_cast<int>(it - atoms_.begin());
}

Mask AtomIndex::bit(const Atom& a) const {
    int i = find(a);
    if (i < 0)
        throw Error(ErrorKind::Precondition, "atom " + a.str() + " is not in the universe");
    return Mask{1} << i;
}

Mask AtomIndex::mask(const AtomSet& s) const {
    Mask m = 0;
    for (const auto& a : s)
        m |= bit(a);
    return m;
}

AtomSet AtomIndex::set(Mask m) const {
    AtomSet out;
    for (; m; m &= m - 1)
        out.insert(atoms_[static_cast<std::size_t>(std::countr_zero(m))]);
    return out;
}

GroundProgram ground(const Program& p, const AtomIndex& idx) {
    GroundProgram gp;
    std::map<ExternalAtom, int> slots;
    for (const auto& r : p) {
        GroundRule g;
        for (const auto& h : r.head())
            g.head |= idx.bit(h);
        for (const auto& l : r.body()) {
            if (!l.is_external()) {
                (l.negated ? g.neg : g.pos) |= idx.bit(l.atom());
                continue;
            }
            auto [it, fresh] = slots.emplace(l.external(), static_cast<int>(gp.externals.size()));
            if (fresh) {
                gp.externals.push_back(l.external());
                gp.ext_inputs.push_back(idx.mask(input_atoms(l.external(), idx.set(idx.all()))));
            }
            g.ext.push_back({it->second, l.negated});
        }
        gp.rules.push_back(std::move(g));
    }
    return gp;
}

namespace {

bool ext_true(const ExtRef& e, Mask y, const Valuation& v) { return v(e.slot, y) != e.negated; }

enum class Status { False, True, Open };

class Search {
public:
    Search(const GroundProgram& gp, Mask vars, bool supported, const Valuation& v, const std::function<bool(Mask)>& visit)
        : gp_(gp), vars_(vars), supported_(supported), v_(v), visit_(visit) {
        if (supported_) {
            head_rules_.resize(64);
            for (std::size_t i = 0; i < gp_.rules.size(); ++i)
                for (Mask m = gp_.rules[i].head; m; m &= m - 1)
                    head_rules_[static_cast<std::size_t>(std::countr_zero(m))].push_back(i);
        }
    }

    bool run(Mask fixed_true) {
        descend(fixed_true, ~(vars_ | fixed_true));
        return !stopped_;
    }

private:
    Status status(const GroundRule& r, Mask t, Mask f, Mask& open_ord, int& ext_open) const {
        ext_open = 0;
        if ((r.pos & f) || (r.neg & t) || (r.pos & r.neg))
            return Status::False;
        for (const auto& e : r.ext) {
            if (gp_.ext_inputs[static_cast<std::size_t>(e.slot)] & ~(t | f)) {
                ++ext_open;
                continue;
            }
            if (!ext_true(e, t, v_))
                return Status::False;
        }
        open_ord = (r.pos & ~t) | (r.neg & ~f);
        return (open_ord == 0 && ext_open == 0) ? Status::True : Status::Open;
    }

    bool propagate(Mask& t, Mask& f) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& r : gp_.rules) {
                Mask open_ord = 0;
                int ext_open = 0;
                Status s = status(r, t, f, open_ord, ext_open);
                if (s == Status::False || (r.head & t))
                    continue;
                Mask open_head = r.head & ~f;
                if (s == Status::True) {
                    if (!open_head)
                        return false;
                    if (std::popcount(open_head) == 1) {
                        t |= open_head;
                        changed = true;
                    }
                } else if (!open_head && ext_open == 0 && std::popcount(open_ord) == 1) {
                    (open_ord & r.pos ? f : t) |= open_ord;
                    changed = true;
                }
                if (t & f)
                    return false;
            }
            if (supported_ && !propagate_support(t, f, changed))
                return false;
            if (t & f)
                return false;
        }
        return true;
    }

    bool propagate_support(Mask& t, Mask& f, bool& changed) const {
        for (Mask m = vars_ & ~f; m; m &= m - 1) {
            Mask a = m & -m;
            int count = 0;
            const GroundRule* only = nullptr;
            for (std::size_t ri : head_rules_[static_cast<std::size_t>(std::countr_zero(a))]) {
                const GroundRule& r = gp_.rules[ri];
                if (r.head & ~a & t)
                    continue;
                Mask open_ord = 0;
                int ext_open = 0;
                if (status(r, t, f, open_ord, ext_open) == Status::False)
                    continue;
                ++count;
                only = &r;
                if (count > 1)
                    break;
            }
            if (count == 0) {
                if (t & a)
                    return false;
                f |= a;
                changed = true;
            } else if (count == 1 && (t & a)) {
                Mask nt = t | only->pos;
                Mask nf = f | only->neg | (only->head & ~a);
                if (nt != t || nf != f) {
                    t = nt;
                    f = nf;
                    changed = true;
                    if (t & f)
                        return false;
                }
            }
        }
        return true;
    }

    void descend(Mask t, Mask f) {
        if (!propagate(t, f))
            return;
        Mask open = vars_ & ~(t | f);
        if (!open) {
            if (!visit_(t))
                stopped_ = true;
            return;
        }
        Mask b = open & -open;
        descend(t, f | b);
        if (stopped_)
            return;
        descend(t | b, f);
    }

    const GroundProgram& gp_;
    Mask vars_;
    bool supported_;
    const Valuation& v_;
    const std::function<bool(Mask)>& visit_;
    std::vector<std::vector<std::size_t>> head_rules_;
    bool stopped_ = false;
};

} // namespace

bool body_true(const GroundProgram&, const GroundRule& r, Mask y, const Valuation& v) {
    if ((r.pos & ~y) || (r.neg & y))
        return false;
    return std::all_of(r.ext.begin(), r.ext.end(), [&](const ExtRef& e) { return ext_true(e, y, v); });
}

bool is_model(const GroundProgram& gp, Mask y, const Valuation& v) {
    return std::all_of(gp.rules.begin(), gp.rules.end(),
                       [&](const GroundRule& r) { return (r.head & y) || !body_true(gp, r, y, v); });
}

GroundProgram reduct(const GroundProgram& gp, Mask y, const Valuation& v) {
    GroundProgram out{{}, gp.externals, gp.ext_inputs};
    for (const auto& r : gp.rules)
        if (body_true(gp, r, y, v))
            out.rules.push_back(r);
    return out;
}

bool for_each_model(const GroundProgram& gp, Mask vars, Mask fixed_true, bool supported, const Valuation& v,
                    const std::function<bool(Mask)>& visit) {
    Search s(gp, vars & ~fixed_true, supported, v, visit);
    return s.run(fixed_true);
}

std::optional<Mask> smaller_reduct_model(const GroundProgram& gp, Mask y, Mask keep, const Valuation& v) {
    GroundProgram red = reduct(gp, y, v);
    GroundRule block;
    block.pos = y;
    red.rules.push_back(block);
    std::optional<Mask> found;
    for_each_model(red, y & ~keep, y & keep, false, v, [&](Mask m) {
        found = m;
        return false;
    });
    return found;
}

bool is_minimal(const GroundProgram& gp, Mask y, const Valuation& v) { return !smaller_reduct_model(gp, y, 0, v); }

std::vector<Mask> answer_sets(const GroundProgram& gp, Mask vars, bool supported, const Valuation& v) {
    std::vector<Mask> out;
    for_each_model(gp, vars, 0, supported, v, [&](Mask y) {
        if (is_minimal(gp, y, v))
            out.push_back(y);
        return true;
    });
    return out;
}

OracleValuation::OracleValuation(const GroundProgram& gp, const AtomIndex& idx, const OracleRegistry& reg, std::size_t* calls)
    : gp_(gp), idx_(idx), reg_(reg), calls_(calls), slot_memo_(gp.externals.size()) {
    for (const auto& e : gp.externals)
        reg.get(e.name);
}

bool OracleValuation::operator()(int slot, Mask y) {
    auto s = static_cast<std::size_t>(slot);
    Mask in = y & gp_.ext_inputs[s];
    auto& memo = slot_memo_[s];
    if (auto it = memo.find(in); it != memo.end())
        return it->second;
    if (calls_)
        ++*calls_;
    bool value = eval_external(reg_, gp_.externals[s], idx_.set(in));
    memo.emplace(in, value);
    return value;
}

FamilyValuation::FamilyValuation(const GroundProgram& gp, const AtomIndex& idx, const FamilyMap& families) {
    for (const auto& e : gp.externals) {
        Slot slot;
        auto it = families.find(Occurrence{e, false});
        if (it == families.end()) {
            it = families.find(Occurrence{e, true});
            slot.positive = false;
        }
        if (it == families.end())
            throw Error(ErrorKind::IncompleteFamily, "no support-set family for " + e.str());
        for (const auto& s : it->second.sets)
            slot.sets.push_back({idx.mask(s.pos), idx.mask(set_intersection(s.neg, idx.set(idx.all())))});
        slots_.push_back(std::move(slot));
    }
}

bool FamilyValuation::operator()(int slot, Mask y) const {
    const Slot& s = slots_[static_cast<std::size_t>(slot)];
    bool matched = std::any_of(s.sets.begin(), s.sets.end(), [y](const Packed& p) { return (y & p.pos) == p.pos && (y & p.neg) == 0; });
    return matched == s.positive;
}

} // namespace hexinline::engine
