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

#ifndef HEXINLINE_REDUCT_HPP
#define HEXINLINE_REDUCT_HPP

#include "hexinline/oracles.hpp"
#include "hexinline/syntax.hpp"

namespace hexinline {

bool literal_true(const AtomSet& y, const BodyLiteral& lit, const OracleRegistry& reg);
bool body_true(const AtomSet& y, const Rule& r, const OracleRegistry& reg);
bool satisfies(const AtomSet& y, const Rule& r, const OracleRegistry& reg);
bool satisfies(const AtomSet& y, const Program& p, const OracleRegistry& reg);

// fP^Y: the rules whose whole body is true under Y.
Program flp_reduct(const Program& p, const AtomSet& y, const OracleRegistry& reg);

// R^Y = { H(r) <- B+(r) | no atom of B-(r) is in Y }, for ordinary R.
Program gl_reduct(const Program& r, const AtomSet& y);

} // namespace hexinline

#endif
