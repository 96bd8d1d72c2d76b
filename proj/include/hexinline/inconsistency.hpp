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

#ifndef HEXINLINE_INCONSISTENCY_HPP
#define HEXINLINE_INCONSISTENCY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hexinline/oracles.hpp"
#include "hexinline/semantics.hpp"
#include "hexinline/syntax.hpp"

namespace hexinline {

// For a classical model Y: the smaller reduct model Y' (reduct method) or the
// unfounded set U (ufs method) that rules Y out under every extension.
struct IncEvidence {
    AtomSet y;
    AtomSet witness;
};

struct IncReport {
    bool inconsistent = false;
    std::vector<IncEvidence> evidence;
    std::optional<AtomSet> refuting_model;
    std::string note;
};

IncReport persistently_inconsistent(const Program& p, const HBContext& ctx, const AtomSet& universe, const OracleRegistry& reg,
                                    std::size_t cap = kModelCap);
IncReport persistently_inconsistent_ufs(const Program& p, const HBContext& ctx, const AtomSet& universe,
                                        const OracleRegistry& reg, std::size_t cap = kModelCap);

} // namespace hexinline

#endif
