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

#include "hexinline/reduct.hpp"

#include <algorithm>

#include "hexinline/error.hpp"

namespace hexinline {

bool literal_true(const AtomSet& y, const BodyLiteral& lit, const OracleRegistry& reg) {
    bool v = lit.is_external() ? eval_external(reg, lit.external(), y) : y.count(lit.atom()) != 0;
    return v != lit.negated;
}

bool body_true(const AtomSet& y, const Rule& r, const OracleRegistry& reg) {
    return std::all_of(r.body().begin(), r.body().end(), [&](const BodyLiteral& l) { return literal_true(y, l, reg); });
}

bool satisfies(const AtomSet& y, const Rule& r, const OracleRegistry& reg) {
    for (const auto& h : r.head())
        if (y.count(h))
            return true;
    return !body_true(y, r, reg);
}

bool satisfies(const AtomSet& y, const Program& p, const OracleRegistry& reg) {
    return std::all_of(p.begin(), p.end(), [&](const Rule& r) { return satisfies(y, r, reg); });
}

Program flp_reduct(const Program& p, const AtomSet& y, const OracleRegistry& reg) {
    Program out;
    for (const auto& r : p)
        if (body_true(y, r, reg))
            out.insert(r);
    return out;
}

Program gl_reduct(const Program& r, const AtomSet& y) {
    if (!is_ordinary(r))
        throw Error(ErrorKind::Precondition, "gl-reduct requires ordinary program");
    Program out;
    for (const auto& rule : r) {
        auto neg = rule.negative_body_atoms();
        if (std::any_of(neg.begin(), neg.end(), [&](const Atom& a) { return y.count(a) != 0; }))
            continue;
        std::vector<BodyLiteral> body;
        for (const auto& a : rule.positive_body_atoms())
            body.emplace_back(a);
        out.insert(Rule(rule.head(), std::move(body)));
    }
    return out;
}

} // namespace hexinline
