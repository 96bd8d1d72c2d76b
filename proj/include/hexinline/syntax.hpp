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

#ifndef HEXINLINE_SYNTAX_HPP
#define HEXINLINE_SYNTAX_HPP

#include <compare>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace hexinline {

// Ground ordinary atom p(c1,...,cn); p() and p are the same atom.
struct Atom {
    std::string predicate;
    std::vector<std::string> args;

    Atom() = default;
    Atom(std::string pred, std::vector<std::string> arguments = {})
        : predicate(std::move(pred)), args(std::move(arguments)) {}

    std::string str() const;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

using AtomSet = std::set<Atom>;

struct InputTerm {
    enum class Kind { Predicate, Constant };
    Kind kind = Kind::Predicate;
    std::string name;

    static InputTerm predicate(std::string n) { return {Kind::Predicate, std::move(n)}; }
    static InputTerm constant(std::string n) { return {Kind::Constant, std::move(n)}; }
    bool is_predicate() const { return kind == Kind::Predicate; }

    friend auto operator<=>(const InputTerm&, const InputTerm&) = default;
};

// &g[p1,...,pk](c1,...,cl)
struct ExternalAtom {
    std::string name;
    std::vector<InputTerm> inputs;
    std::vector<std::string> outputs;

    std::vector<std::string> input_predicates() const;
    std::vector<std::string> input_constants() const;
    std::string str() const;
    friend auto operator<=>(const ExternalAtom&, const ExternalAtom&) = default;
};

struct BodyLiteral {
    bool negated = false;
    std::variant<Atom, ExternalAtom> content;

    BodyLiteral() = default;
    BodyLiteral(Atom a, bool neg = false) : negated(neg), content(std::move(a)) {}
    BodyLiteral(ExternalAtom e, bool neg = false) : negated(neg), content(std::move(e)) {}

    bool is_external() const { return content.index() == 1; }
    const Atom& atom() const { return std::get<Atom>(content); }
    const ExternalAtom& external() const { return std::get<ExternalAtom>(content); }
    std::string str() const;

    // Positive literals order before negated ones, ordinary before external.
    friend bool operator==(const BodyLiteral& l, const BodyLiteral& r) {
        return l.negated == r.negated && l.content == r.content;
    }
    friend bool operator<(const BodyLiteral& l, const BodyLiteral& r) {
        if (l.negated != r.negated)
            return !l.negated;
        return l.content < r.content;
    }
};

// The head is kept sorted and duplicate free; the body is kept in canonical
// (sorted, duplicate free) order so that equal rules compare equal.
class Rule {
public:
    Rule() = default;
    Rule(std::vector<Atom> head, std::vector<BodyLiteral> body);

    const std::vector<Atom>& head() const { return head_; }
    const std::vector<BodyLiteral>& body() const { return body_; }
    bool is_constraint() const { return head_.empty(); }
    bool has_external() const;

    AtomSet positive_body_atoms() const;
    AtomSet negative_body_atoms() const;
    std::string str() const;

    friend bool operator==(const Rule& l, const Rule& r) { return l.head_ == r.head_ && l.body_ == r.body_; }
    friend bool operator<(const Rule& l, const Rule& r) {
        if (l.head_ != r.head_)
            return l.head_ < r.head_;
        return l.body_ < r.body_;
    }

private:
    std::vector<Atom> head_;
    std::vector<BodyLiteral> body_;
};

using Program = std::set<Rule>;

// One occurrence class of an external atom: the atom plus the polarity it is
// used with. An atom used both ways yields two occurrences.
struct Occurrence {
    ExternalAtom atom;
    bool negated = false;

    std::string str() const { return (negated ? "not " : "") + atom.str(); }
    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// The <H,B> pair: atoms allowed in heads and in bodies of added programs.
struct HBContext {
    AtomSet h;
    AtomSet b;
    friend auto operator<=>(const HBContext&, const HBContext&) = default;
};

AtomSet ordinary_atoms(const Rule& r);
AtomSet ordinary_atoms(const Program& p);
std::set<ExternalAtom> external_atoms(const Program& p);
std::set<Occurrence> external_occurrences(const Program& p);
bool is_ordinary(const Program& p);

// I(e,P): atoms of the universe whose predicate is an input predicate of e.
AtomSet input_atoms(const ExternalAtom& e, const Program& p, const AtomSet& universe);
AtomSet input_atoms(const ExternalAtom& e, const AtomSet& universe);

AtomSet set_union(const AtomSet& a, const AtomSet& b);
AtomSet set_intersection(const AtomSet& a, const AtomSet& b);
AtomSet set_difference(const AtomSet& a, const AtomSet& b);
bool is_subset(const AtomSet& sub, const AtomSet& super);

std::string format_constant(const std::string& c);
std::string format_atom_set(const AtomSet& s);

} // namespace hexinline

#endif
