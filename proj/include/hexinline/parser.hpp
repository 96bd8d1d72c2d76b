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

#ifndef HEXINLINE_PARSER_HPP
#define HEXINLINE_PARSER_HPP

#include <string>
#include <vector>

#include "hexinline/oracles.hpp"
#include "hexinline/syntax.hpp"

namespace hexinline {

struct ParseOptions {
    // Accept predicates with the reserved aux__ prefix (rewriter output).
    bool allow_reserved = false;
};

Program parse_program(const std::string& text, const ParseOptions& opts = {});
std::string print_program(const Program& p);

std::vector<SupportFamily> parse_family_file(const std::string& text);
std::string print_family(const SupportFamily& fam);

HBContext parse_hb(const std::string& text);
std::string print_hb(const HBContext& ctx);

// "a, p(1,2), q" -> atom set
AtomSet parse_atom_list(const std::string& text);
ExternalAtom parse_external_atom(const std::string& text);

std::string read_file(const std::string& path);

} // namespace hexinline

#endif
