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

#ifndef HEXINLINE_INLINER_HPP
#define HEXINLINE_INLINER_HPP

#include <map>
#include <string>
#include <vector>

#include "hexinline/oracles.hpp"
#include "hexinline/syntax.hpp"

namespace hexinline {

struct InlinedOccurrence {
    Occurrence occurrence;
    int index = 0;
    Atom xe;
    Atom nxe;
    std::map<Atom, Atom> bars;
};

struct InliningResult {
    Program program;
    std::vector<InlinedOccurrence> steps;
    AtomSet introduced;
};

Atom aux_xe(int k);
Atom aux_nxe(int k);
Atom aux_bar(int k, const Atom& original);

// Rewrites one occurrence (e, or `not e`) with a complete family of the
// matching polarity over I(e,P). When `reg` knows the oracle, the family is
// checked against it first.
InliningResult inline_one(const Program& p, const Occurrence& occ, const SupportFamily& fam, int fresh_index,
                          const AtomSet& universe = {}, const OracleRegistry* reg = nullptr);

// Inlines every occurrence: negated ones first, then positive ones, each group
// in lexicographic order, numbering the auxiliaries 1, 2, ...
InliningResult inline_all(const Program& p, const FamilyMap& families, const AtomSet& universe = {},
                          const OracleRegistry* reg = nullptr);

AtomSet project(const AtomSet& y, const InliningResult& res);

// P' = P with e replaced by e' (input predicate p_i renamed to q) plus the
// copy rules q(p_i, d) <- p_i(d) for every atom p_i(d) of P or the universe.
// Registers the oracle of e' in reg.
struct RenamedInput {
    Program program;
    ExternalAtom renamed;
};

RenamedInput rename_input_predicate(const Program& p, const ExternalAtom& e, const std::string& p_i, const std::string& q,
                                    OracleRegistry& reg, const AtomSet& universe = {});

} // namespace hexinline

#endif
