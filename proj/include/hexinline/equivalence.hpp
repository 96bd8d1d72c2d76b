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

#ifndef HEXINLINE_EQUIVALENCE_HPP
#define HEXINLINE_EQUIVALENCE_HPP

#include <optional>
#include <set>

#include "hexinline/oracles.hpp"
#include "hexinline/semantics.hpp"
#include "hexinline/syntax.hpp"

namespace hexinline {

// (X,Y) with X = Y, or X the H u B projection of some X' strictly below Y.
struct HBModel {
    AtomSet x;
    AtomSet y;
    friend auto operator<=>(const HBModel&, const HBModel&) = default;
};

struct Witness {
    AtomSet x;
    AtomSet y;
    friend auto operator<=>(const Witness&, const Witness&) = default;
};

bool leq_bh(const AtomSet& x, const AtomSet& x2, const HBContext& ctx);
bool lt_bh(const AtomSet& x, const AtomSet& x2, const HBContext& ctx);

std::set<HBModel> sigma_models(const Program& p, const HBContext& ctx, const AtomSet& universe, const OracleRegistry& reg,
                               std::size_t cap = kModelCap);

bool equivalent(const Program& p, const Program& q, const HBContext& ctx, const AtomSet& universe, const OracleRegistry& reg,
                std::size_t cap = kModelCap);
bool strong_equivalent(const Program& p, const Program& q, const OracleRegistry& reg);
bool uniform_equivalent(const Program& p, const Program& q, const OracleRegistry& reg);

// Lexicographically least witness for P not contained in Q (Y first, then X).
std::optional<Witness> find_witness(const Program& p, const Program& q, const HBContext& ctx, const AtomSet& universe,
                                    const OracleRegistry& reg, std::size_t cap = kModelCap);
bool is_witness(const Witness& w, const Program& p, const Program& q, const HBContext& ctx, const OracleRegistry& reg);

// R in P<H,B> with w.y an answer set of P u R but not of Q u R.
Program witness_to_counterexample(const Witness& w, const Program& p, const Program& q, const HBContext& ctx,
                                  const OracleRegistry& reg);

// R^Y; separation by Y is preserved.
Program positive_counterexample(const Program& r, const AtomSet& y);

struct Separation {
    Witness witness;
    bool p_side = true;  // true: Y in AS(P u R) \ AS(Q u R); false: the converse
    Program r;
};

// A counterexample for <H,B>-equivalence, trying P-not-in-Q before Q-not-in-P.
std::optional<Separation> find_separation(const Program& p, const Program& q, const HBContext& ctx, const AtomSet& universe,
                                          const OracleRegistry& reg, std::size_t cap = kModelCap);

} // namespace hexinline

#endif
