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

#include "hexinline/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hexinline/error.hpp"

namespace hexinline {

namespace {

enum class Tok { Ident, Number, String, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(const std::string& src, int first_line = 1) {
    std::vector<Token> out;
    int line = first_line, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        int l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            out.push_back({Tok::Number, src.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (c == '"') {
            std::string text;
            advance(1);
            for (;;) {
                if (i >= src.size() || src[i] == '\n')
                    throw ParseError(l, cl, "unterminated string");
                if (src[i] == '"')
                    break;
                if (src[i] == '\\' && i + 1 < src.size()) {
                    text += src[i + 1];
                    advance(2);
                } else {
                    text += src[i];
                    advance(1);
                }
            }
            advance(1);
            out.push_back({Tok::String, text, l, cl});
        } else if (c == ':' && i + 1 < src.size() && src[i + 1] == '-') {
            out.push_back({Tok::Punct, ":-", l, cl});
            advance(2);
        } else if (std::string(".,()[]{}&|-:").find(c) != std::string::npos) {
            out.push_back({Tok::Punct, std::string(1, c), l, cl});
            advance(1);
        } else {
            throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, ParseOptions opts) : toks_(std::move(toks)), opts_(opts) {}

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at_end() const { return peek().kind == Tok::End; }
    bool is_punct(const std::string& p, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
    }
    bool is_ident(const std::string& s, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Ident && peek(ahead).text == s;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column, msg + ", found " + found);
    }

    void expect(const std::string& p) {
        if (!is_punct(p))
            fail("expected '" + p + "'");
        ++pos_;
    }

    std::string predicate_name() {
        const Token& t = peek();
        if (t.kind != Tok::Ident)
            fail("expected a predicate name");
        check_identifier(t);
        ++pos_;
        return t.text;
    }

    std::string constant() {
        const Token& t = peek();
        if (t.kind == Tok::Number || t.kind == Tok::String) {
            ++pos_;
            return t.text;
        }
        if (t.kind != Tok::Ident)
            fail("expected a constant");
        check_identifier(t);
        ++pos_;
        return t.text;
    }

    Atom atom() {
        Atom a(predicate_name());
        if (is_punct("(")) {
            ++pos_;
            if (!is_punct(")")) {
                a.args.push_back(constant());
                while (is_punct(",")) {
                    ++pos_;
                    a.args.push_back(constant());
                }
            }
            expect(")");
        }
        return a;
    }

    ExternalAtom external() {
        expect("&");
        ExternalAtom e;
        const Token& name = peek();
        if (name.kind != Tok::Ident)
            fail("expected an external predicate name after '&'");
        e.name = name.text;
        ++pos_;
        expect("[");
        if (!is_punct("]")) {
            e.inputs.push_back(input_term());
            while (is_punct(",")) {
                ++pos_;
                e.inputs.push_back(input_term());
            }
        }
        expect("]");
        if (is_punct("(")) {
            ++pos_;
            if (!is_punct(")")) {
                e.outputs.push_back(constant());
                while (is_punct(",")) {
                    ++pos_;
                    e.outputs.push_back(constant());
                }
            }
            expect(")");
        }
        return e;
    }

    // Identifiers are predicate parameters; numbers and strings are constants.
    InputTerm input_term() {
        const Token& t = peek();
        if (t.kind == Tok::Number || t.kind == Tok::String) {
            ++pos_;
            return InputTerm::constant(t.text);
        }
        return InputTerm::predicate(predicate_name());
    }

    BodyLiteral literal() {
        bool negated = false;
        if (is_ident("not") && (peek(1).kind == Tok::Ident || is_punct("&", 1))) {
            negated = true;
            ++pos_;
        }
        if (is_punct("&"))
            return BodyLiteral(external(), negated);
        return BodyLiteral(atom(), negated);
    }

    Rule rule() {
        std::vector<Atom> head;
        std::vector<BodyLiteral> body;
        if (!is_punct(":-") && !is_punct(".")) {
            head.push_back(atom());
            while (is_ident("v") || is_punct("|")) {
                ++pos_;
                head.push_back(atom());
            }
        }
        if (is_punct(":-")) {
            ++pos_;
            if (!is_punct(".")) {
                body.push_back(literal());
                while (is_punct(",")) {
                    ++pos_;
                    body.push_back(literal());
                }
            }
        }
        expect(".");
        return Rule(std::move(head), std::move(body));
    }

    std::size_t pos_ = 0;

private:
    void check_identifier(const Token& t) const {
        if (std::isupper(static_cast<unsigned char>(t.text[0])) || t.text[0] == '_')
            throw ParseError(t.line, t.column, "variable '" + t.text + "' in a ground program (only ground programs are supported)");
        if (t.text == "not")
            throw ParseError(t.line, t.column, "'not' is a keyword and cannot name an atom");
        if (!opts_.allow_reserved && t.text.rfind("aux__", 0) == 0)
            throw ParseError(t.line, t.column, "predicate '" + t.text + "' uses the reserved prefix aux__");
    }

    std::vector<Token> toks_;
    ParseOptions opts_;
};

} // namespace

Program parse_program(const std::string& text, const ParseOptions& opts) {
    Parser p(tokenize(text), opts);
    Program out;
    while (!p.at_end())
        out.insert(p.rule());
    return out;
}

std::string print_program(const Program& p) {
    std::vector<std::string> lines;
    for (const auto& r : p) {
        std::string s = r.str();
        // A later head atom named v would read back as a separator.
        bool clash = r.head().size() > 1 &&
                     std::any_of(r.head().begin() + 1, r.head().end(), [](const Atom& a) { return a.predicate == "v" && a.args.empty(); });
        if (clash) {
            s.clear();
            for (std::size_t i = 0; i < r.head().size(); ++i)
                s += (i ? " | " : "") + r.head()[i].str();
            std::string rest = r.str();
            auto cut = rest.find(" :-");
            s += cut == std::string::npos ? "." : rest.substr(cut);
        }
        lines.push_back(s);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines)
        out += l + "\n";
    return out;
}

std::vector<SupportFamily> parse_family_file(const std::string& text) {
    Parser p(tokenize(text), ParseOptions{true});
    std::vector<SupportFamily> out;
    while (!p.at_end()) {
        if (!p.is_ident("family"))
            p.fail("expected 'family'");
        ++p.pos_;
        SupportFamily fam;
        fam.external = p.external();
        if (p.is_ident("T"))
            fam.sigma = Sigma::T;
        else if (p.is_ident("F"))
            fam.sigma = Sigma::F;
        else
            p.fail("expected polarity T or F");
        ++p.pos_;
        p.expect("{");
        while (p.is_punct("{")) {
            const Token& open = p.peek();
            ++p.pos_;
            SupportSet s;
            if (!p.is_punct("}")) {
                for (;;) {
                    bool neg = p.is_punct("-");
                    if (neg)
                        ++p.pos_;
                    Atom a = p.atom();
                    (neg ? s.neg : s.pos).insert(a);
                    fam.domain.insert(a);
                    if (!p.is_punct(","))
                        break;
                    ++p.pos_;
                }
            }
            p.expect("}");
            if (!s.consistent())
                throw ParseError(open.line, open.column, "inconsistent support set " + s.str());
            fam.sets.insert(std::move(s));
        }
        p.expect("}");
        out.push_back(std::move(fam));
    }
    return out;
}

std::string print_family(const SupportFamily& fam) {
    std::string out = "family " + fam.external.str() + " " + sigma_char(fam.sigma) + " {";
    for (const auto& s : fam.sets)
        out += " " + s.str();
    return out + " }\n";
}

AtomSet parse_atom_list(const std::string& text) {
    Parser p(tokenize(text), ParseOptions{true});
    AtomSet out;
    bool braced = p.is_punct("{");
    if (braced)
        ++p.pos_;
    if (!p.at_end() && !(braced && p.is_punct("}"))) {
        out.insert(p.atom());
        while (p.is_punct(",")) {
            ++p.pos_;
            out.insert(p.atom());
        }
    }
    if (braced) {
        if (!p.is_punct("}"))
            p.fail("expected '}'");
        ++p.pos_;
    }
    if (!p.at_end())
        p.fail("expected ',' or end of list");
    return out;
}

ExternalAtom parse_external_atom(const std::string& text) {
    Parser p(tokenize(text), ParseOptions{});
    ExternalAtom e = p.external();
    if (!p.at_end())
        p.fail("unexpected input after external atom");
    return e;
}

HBContext parse_hb(const std::string& text) {
    HBContext ctx;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool seen_h = false, seen_b = false;
    while (std::getline(in, line)) {
        ++lineno;
        Parser p(tokenize(line, lineno), ParseOptions{});
        if (p.at_end())
            continue;
        bool is_h = p.is_ident("H"), is_b = p.is_ident("B");
        if ((!is_h && !is_b) || !p.is_punct(":", 1))
            p.fail("expected 'H:' or 'B:'");
        if ((is_h && seen_h) || (is_b && seen_b))
            p.fail("duplicate context line");
        (is_h ? seen_h : seen_b) = true;
        p.pos_ += 2;
        AtomSet& target = is_h ? ctx.h : ctx.b;
        if (p.at_end())
            continue;
        target.insert(p.atom());
        while (p.is_punct(",")) {
            ++p.pos_;
            target.insert(p.atom());
        }
        if (!p.at_end())
            p.fail("expected ',' or end of line");
    }
    return ctx;
}

std::string print_hb(const HBContext& ctx) {
    auto list = [](const AtomSet& s) {
        std::string out;
        for (const auto& a : s)
            out += (out.empty() ? " " : ", ") + a.str();
        return out;
    };
    return "H:" + list(ctx.h) + "\nB:" + list(ctx.b) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Precondition, "cannot read file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace hexinline
