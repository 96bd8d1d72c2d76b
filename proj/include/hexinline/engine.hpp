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

#ifndef HEXINLINE_ENGINE_HPP
#define HEXINLINE_ENGINE_HPP

// Bitmask model search shared by the semantic modules. Universes are limited
// to 64 atoms; every public entry point converts from and to AtomSet.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hexinline/oracles.hpp"
#include "hexinline/syntax.hpp"

namespace hexinline::engine {

using Mask = std::uint64_t;

class AtomIndex {
public:
    explicit AtomIndex(const AtomSet& universe);

    int size() const { return static_cast<int>(atoms_.size()); }
    int find(const Atom& a) const;
    Mask bit(const Atom& a) const;
    Mask mask(const AtomSet& s) const;
    AtomSet set(Mask m) const;
    const Atom& atom(int i) const { return atoms_[static_cast<std::size_t>(i)]; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    Mask all() const { return atoms_.size() == 64 ? ~Mask{0} : (Mask{1} << atoms_.size()) - 1; }

private:
    std::vector<Atom> atoms_;
};

struct ExtRef {
    int slot = 0;
    bool negated = false;
};

struct GroundRule {
    Mask head = 0;
    Mask pos = 0;
    Mask neg = 0;
    std::vector<ExtRef> ext;
};

struct GroundProgram {
    std::vector<GroundRule> rules;
    std::vector<ExternalAtom> externals;
    std::vector<Mask> ext_inputs;
};

GroundProgram ground(const Program& p, const AtomIndex& idx);

// Value of external slot `slot` under the full assignment y.
using Valuation = std::function<bool(int slot, Mask y)>;

bool body_true(const GroundProgram& gp, const GroundRule& r, Mask y, const Valuation& v);
bool is_model(const GroundProgram& gp, Mask y, const Valuation& v);
GroundProgram reduct(const GroundProgram& gp, Mask y, const Valuation& v);

// Enumerates the models Y of gp with fixed_true <= Y <= fixed_true | vars.
// With `supported`, only models in which every true var has a rule whose body
// holds and whose head meets Y in that var alone. The visitor returns false to
// stop; the function returns false iff it was stopped.
bool for_each_model(const GroundProgram& gp, Mask vars, Mask fixed_true, bool supported, const Valuation& v,
                    const std::function<bool(Mask)>& visit);

// Some Y' with keep <= Y' < y that satisfies the FLP reduct of gp wrt y.
std::optional<Mask> smaller_reduct_model(const GroundProgram& gp, Mask y, Mask keep, const Valuation& v);

bool is_minimal(const GroundProgram& gp, Mask y, const Valuation& v);

// Answer sets over `vars`; supported=false enumerates every classical model
// before the minimality check.
std::vector<Mask> answer_sets(const GroundProgram& gp, Mask vars, bool supported, const Valuation& v);

// Oracle-backed valuation with a memo that can be reset between checks.
class OracleValuation {
public:
    OracleValuation(const GroundProgram& gp, const AtomIndex& idx, const OracleRegistry& reg, std::size_t* calls = nullptr);

    bool operator()(int slot, Mask y);
    void reset() {
        for (auto& m : slot_memo_)
            m.clear();
    }
    Valuation fn() {
        return [this](int slot, Mask y) { return (*this)(slot, y); };
    }

private:
    const GroundProgram& gp_;
    const AtomIndex& idx_;
    const OracleRegistry& reg_;
    std::size_t* calls_;
    std::vector<std::unordered_map<Mask, bool>> slot_memo_;
};

// Valuation by support-set matching: a T family decides truth directly, an F
// family decides falsity.
class FamilyValuation {
public:
    FamilyValuation(const GroundProgram& gp, const AtomIndex& idx, const FamilyMap& families);

    bool operator()(int slot, Mask y) const;
    Valuation fn() const {
        return [this](int slot, Mask y) { return (*this)(slot, y); };
    }

private:
    struct Packed {
        Mask pos;
        Mask neg;
    };
    struct Slot {
        bool positive = true;
        std::vector<Packed> sets;
    };
    std::vector<Slot> slots_;
};

} // namespace hexinline::engine

#endif
