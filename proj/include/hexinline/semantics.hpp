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

#ifndef HEXINLINE_SEMANTICS_HPP
#define HEXINLINE_SEMANTICS_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "hexinline/oracles.hpp"
#include "hexinline/syntax.hpp"

namespace hexinline {

inline constexpr std::size_t kModelCap = 22;

std::set<AtomSet> classical_models(const Program& p, const AtomSet& universe, const OracleRegistry& reg,
                                   std::size_t cap = kModelCap);

// Ground truth: classical models with no smaller model of the FLP reduct.
std::set<AtomSet> answer_sets_brute(const Program& p, const AtomSet& universe, const OracleRegistry& reg,
                                    std::size_t cap = kModelCap);

// Answer sets of an ordinary program by supported-model search plus the
// minimality check. Not capped beyond the 64-atom solver limit.
std::set<AtomSet> ordinary_answer_sets(const Program& p, const AtomSet& universe);

struct GuessMap {
    // external atom -> (replacement atom e, complement atom ne)
    std::map<ExternalAtom, std::pair<Atom, Atom>> atoms;

    AtomSet introduced() const;
};

std::pair<Program, GuessMap> guessing_program(const Program& p);

// Answer sets of the guessing program whose guesses agree with the oracles.
std::set<AtomSet> compatible_sets(const Program& p, const AtomSet& universe, const OracleRegistry& reg,
                                  std::size_t cap = kModelCap);

bool is_unfounded_set(const AtomSet& u, const Program& p, const AtomSet& y, const OracleRegistry& reg);

enum class Mode { Brute, Traditional, SupportSets, Inlining };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct EvalStats {
    std::size_t oracle_calls = 0;
    std::size_t candidates_checked = 0;
    std::size_t minimality_checks = 0;
};

struct EvalResult {
    std::set<AtomSet> answer_sets;
    EvalStats stats;
};

// All modes return the answer sets of p projected to its ordinary atoms.
// SupportSets and Inlining use `families` (derived from the oracles when null)
// and check each family against its oracle on entry when one is registered.
EvalResult evaluate(const Program& p, const AtomSet& universe, const OracleRegistry& reg, const FamilyMap* families, Mode mode,
                    bool first_only = false);

} // namespace hexinline

#endif
