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

#include "hexinline/syntax.hpp"

#include <algorithm>
#include <cctype>

namespace hexinline {

namespace {

bool plain_identifier(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0])) || s == "not" || s.rfind("aux__", 0) == 0)
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool integer_literal(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ",";
        out += parts[i];
    }
    return out;
}

std::string quoted(const std::string& c) {
    std::string out = "\"";
    for (char ch : c) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + "\"";
}

// Input constants that look like identifiers are quoted so they do not read
// back as predicate parameters.
std::string input_constant(const std::string& c) { return integer_literal(c) ? c : quoted(c); }

} // namespace

std::string format_constant(const std::string& c) {
    return plain_identifier(c) || integer_literal(c) ? c : quoted(c);
}

std::string Atom::str() const {
    if (args.empty())
        return predicate;
    std::vector<std::string> parts;
    for (const auto& a : args)
        parts.push_back(format_constant(a));
    return predicate + "(" + join(parts) + ")";
}

std::vector<std::string> ExternalAtom::input_predicates() const {
    std::vector<std::string> out;
    for (const auto& t : inputs)
        if (t.is_predicate())
            out.push_back(t.name);
    return out;
}

std::vector<std::string> ExternalAtom::input_constants() const {
    std::vector<std::string> out;
    for (const auto& t : inputs)
        if (!t.is_predicate())
            out.push_back(t.name);
    return out;
}

std::string ExternalAtom::str() const {
    std::vector<std::string> in, out;
    for (const auto& t : inputs)
        in.push_back(t.is_predicate() ? t.name : input_constant(t.name));
    for (const auto& c : outputs)
        out.push_back(format_constant(c));
    return "&" + name + "[" + join(in) + "](" + join(out) + ")";
}

std::string BodyLiteral::str() const {
    std::string s = is_external() ? external().str() : atom().str();
    return negated ? "not " + s : s;
}

Rule::Rule(std::vector<Atom> head, std::vector<BodyLiteral> body) : head_(std::move(head)), body_(std::move(body)) {
    std::sort(head_.begin(), head_.end());
    head_.erase(std::unique(head_.begin(), head_.end()), head_.end());
    std::sort(body_.begin(), body_.end());
    body_.erase(std::unique(body_.begin(), body_.end()), body_.end());
}

bool Rule::has_external() const {
    return std::any_of(body_.begin(), body_.end(), [](const BodyLiteral& l) { return l.is_external(); });
}

AtomSet Rule::positive_body_atoms() const {
    AtomSet out;
    for (const auto& l : body_)
        if (!l.negated && !l.is_external())
            out.insert(l.atom());
    return out;
}

AtomSet Rule::negative_body_atoms() const {
    AtomSet out;
    for (const auto& l : body_)
        if (l.negated && !l.is_external())
            out.insert(l.atom());
    return out;
}

std::string Rule::str() const {
    std::string s;
    for (std::size_t i = 0; i < head_.size(); ++i) {
        if (i)
            s += " v ";
        s += head_[i].str();
    }
    if (!body_.empty() || head_.empty()) {
        s += head_.empty() ? ":-" : " :-";
        for (std::size_t i = 0; i < body_.size(); ++i)
            s += (i ? ", " : " ") + body_[i].str();
        if (body_.empty())
            s += " ";
    }
    return s + ".";
}

AtomSet ordinary_atoms(const Rule& r) {
    AtomSet out(r.head().begin(), r.head().end());
    for (const auto& l : r.body())
        if (!l.is_external())
            out.insert(l.atom());
    return out;
}

AtomSet ordinary_atoms(const Program& p) {
    AtomSet out;
    for (const auto& r : p) {
        auto a = ordinary_atoms(r);
        out.insert(a.begin(), a.end());
    }
    return out;
}

std::set<ExternalAtom> external_atoms(const Program& p) {
    std::set<ExternalAtom> out;
    for (const auto& r : p)
        for (const auto& l : r.body())
            if (l.is_external())
                out.insert(l.external());
    return out;
}

std::set<Occurrence> external_occurrences(const Program& p) {
    std::set<Occurrence> out;
    for (const auto& r : p)
        for (const auto& l : r.body())
            if (l.is_external())
                out.insert(Occurrence{l.external(), l.negated});
    return out;
}

bool is_ordinary(const Program& p) {
    return std::none_of(p.begin(), p.end(), [](const Rule& r) { return r.has_external(); });
}

AtomSet input_atoms(const ExternalAtom& e, const AtomSet& universe) {
    auto preds = e.input_predicates();
    AtomSet out;
    for (const auto& a : universe)
        if (std::find(preds.begin(), preds.end(), a.predicate) != preds.end())
            out.insert(a);
    return out;
}

AtomSet input_atoms(const ExternalAtom& e, const Program& p, const AtomSet& universe) {
    return input_atoms(e, set_union(universe, ordinary_atoms(p)));
}

AtomSet set_union(const AtomSet& a, const AtomSet& b) {
    AtomSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

AtomSet set_intersection(const AtomSet& a, const AtomSet& b) {
    AtomSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

AtomSet set_difference(const AtomSet& a, const AtomSet& b) {
    AtomSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool is_subset(const AtomSet& sub, const AtomSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::string format_atom_set(const AtomSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& a : s) {
        out += first ? "" : ", ";
        out += a.str();
        first = false;
    }
    return out + "}";
}

} // namespace hexinline
