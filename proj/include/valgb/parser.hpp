#pragma once

// Input language.
//
// Polynomial expressions:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/' | <juxtaposition>) factor)*
//   factor  := ('+' | '-') factor | primary ('^' NATURAL)?
//   primary := NATURAL | IDENT | '(' expr ')'
//
// Division is only allowed by a nonzero constant. Inside a Qt problem the
// identifier `t` (unless declared as a variable) denotes the field element t.
//
// Problem files are line oriented; '#' starts a comment:
//
//   field Qp(3) | field Q | field Qt
//   vars x,y,z
//   order lex x>y>z | order grevlex z<y<x | order lex
//   weight 3,2,1                (optional; defaults to all zeros)
//   ideal: f1, f2, ...          (may continue on following lines)
//   divide: f                   (optional; dividend for normal forms)

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "valgb/coeff.hpp"
#include "valgb/error.hpp"
#include "valgb/polynomial.hpp"
#include "valgb/worder.hpp"

namespace valgb {

namespace detail {

/// Line/column bookkeeping for a slice of the input file.
struct SourceText {
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

template <CoefficientDomain F>
class ExpressionParser {
public:
    using P = Polynomial<F>;

    ExpressionParser(const F& field, const std::vector<std::string>& names, const SourceText& src)
        : field_(field), names_(names), src_(src) {}

    P parse() {
        P p = expr();
        skip_ws();
        if (pos_ < src_.text.size()) fail("unexpected '" + std::string(1, src_.text[pos_]) + "'");
        return p;
    }

private:
    P expr() {
        P acc = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    P term() {
        P acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                P d = factor();
                if (d.is_zero()) fail_at(at, "division by zero");
                if (d.size() != 1 || !d.terms()[0].mono.is_one()) fail_at(at, "division by a non-constant");
                acc = acc.scale(field_.div(field_.one(), d.terms()[0].coeff));
            } else if (starts_primary()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    P factor() {
        skip_ws();
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        P base = primary();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= src_.text.size() || !std::isdigit(static_cast<unsigned char>(src_.text[pos_]))) {
                fail("expected a natural exponent after '^'");
            }
            const std::string digits = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            if (digits.size() > 6) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    P primary() {
        skip_ws();
        if (pos_ >= src_.text.size()) fail("unexpected end of expression");
        const char c = src_.text[pos_];
        const std::size_t n = names_.size();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string digits = read_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
            return P::constant(field_, n, field_.from_integer(mpz_class(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            const std::string ident = read_while([](char ch) {
                return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
            });
            auto it = std::find(names_.begin(), names_.end(), ident);
            if (it != names_.end()) {
                return P::variable(field_, n, static_cast<std::size_t>(it - names_.begin()));
            }
            if constexpr (std::is_same_v<F, RationalFunctionField>) {
                if (ident == "t") return P::constant(field_, n, field_.t());
            }
            fail_at(at, "unknown variable '" + ident + "'");
        }
        if (accept('(')) {
            P inner = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    bool starts_primary() {
        if (pos_ >= src_.text.size()) return false;
        const char c = src_.text[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    template <class Pred>
    std::string read_while(Pred pred) {
        const std::size_t start = pos_;
        while (pos_ < src_.text.size() && pred(src_.text[pos_])) ++pos_;
        return src_.text.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < src_.text.size() && std::isspace(static_cast<unsigned char>(src_.text[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < src_.text.size() && src_.text[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        std::size_t line = src_.line;
        std::size_t col = src_.column;
        for (std::size_t i = 0; i < at && i < src_.text.size(); ++i) {
            if (src_.text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    const F& field_;
    const std::vector<std::string>& names_;
    const SourceText& src_;
    std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace detail

/// Parses a single polynomial expression in the named variables.
template <CoefficientDomain F>
Polynomial<F> parse_polynomial(const F& field, const std::vector<std::string>& names, std::string_view text,
                               std::size_t line = 1, std::size_t column = 1) {
    detail::SourceText src{std::string(text), line, column};
    return detail::ExpressionParser<F>(field, names, src).parse();
}

enum class FieldKind { QP, QTrivial, QT };

struct FieldSpec {
    FieldKind kind = FieldKind::QTrivial;
    unsigned long prime = 0;  // QP only
};

/// A problem file before its polynomials are interpreted over a field.
struct ProblemFile {
    FieldSpec field;
    std::vector<std::string> vars;
    OrderKind order_kind = OrderKind::Lex;
    std::vector<std::size_t> priority;
    WeightVector weight;
    std::vector<detail::SourceText> generators;
    std::optional<detail::SourceText> dividend;

    TermOrder term_order() const { return {order_kind, priority}; }
    WeightedOrder weighted_order() const { return {weight, term_order()}; }
};

namespace detail {

inline std::vector<SourceText> split_top_level(const SourceText& src) {
    std::vector<SourceText> out;
    int depth = 0;
    std::size_t line = src.line, col = src.column;
    SourceText cur{"", line, col};
    bool started = false;
    for (char c : src.text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ',' || c == ';') && depth == 0) {
            if (!trim(cur.text).empty()) out.push_back(cur);
            cur = SourceText{"", line, col + 1};
            started = false;
        } else {
            if (!started && std::isspace(static_cast<unsigned char>(c))) {
                // Leading whitespace is dropped so reported columns point at the text.
                cur.line = c == '\n' ? line + 1 : line;
                cur.column = c == '\n' ? 1 : col + 1;
            } else {
                started = true;
                cur.text += c;
            }
        }
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    if (!trim(cur.text).empty()) out.push_back(cur);
    return out;
}

inline bool is_keyword_line(std::string_view line) {
    static const char* keywords[] = {"field", "vars", "order", "weight", "ideal", "divide"};
    for (const char* kw : keywords) {
        std::string_view k(kw);
        if (line.substr(0, k.size()) == k &&
            (line.size() == k.size() || line[k.size()] == ' ' || line[k.size()] == ':' || line[k.size()] == '\t')) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Parses the problem-file grammar; polynomials stay unparsed until a field
/// is chosen (see materialize).
inline ProblemFile parse_problem(std::string_view text) {
    ProblemFile pf;
    bool have_field = false, have_vars = false, have_order = false, have_weight = false;
    std::string order_spec;
    std::size_t order_line = 0, weight_line = 0;
    std::string weight_spec;

    // Split into lines, stripping comments.
    std::vector<std::string> lines;
    {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string l(text.substr(start, end - start));
            if (auto hash = l.find('#'); hash != std::string::npos) l.erase(hash);
            lines.push_back(l);
            start = end + 1;
        }
    }

    auto block = [&](std::size_t& i, std::size_t colon_col, const std::string& first) {
        detail::SourceText src{first, i + 1, colon_col};
        while (i + 1 < lines.size() && !detail::is_keyword_line(detail::trim(lines[i + 1]))) {
            ++i;
            src.text += "\n" + lines[i];
        }
        return src;
    };

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string raw = lines[i];
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;
        const std::size_t indent = raw.find_first_not_of(" \t");
        const std::size_t lineno = i + 1;
        auto rest_after = [&](std::size_t n) { return detail::trim(std::string_view(line).substr(n)); };

        if (line.rfind("field", 0) == 0 && detail::is_keyword_line(line)) {
            const std::string f = rest_after(5);
            if (f == "Q" || f == "QTrivial") {
                pf.field = {FieldKind::QTrivial, 0};
            } else if (f == "Qt" || f == "QT") {
                pf.field = {FieldKind::QT, 0};
            } else if (f.rfind("Qp(", 0) == 0 && f.back() == ')') {
                const std::string num = f.substr(3, f.size() - 4);
                if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit) || num.size() > 9 ||
                    !detail::is_prime(std::stoul(num))) {
                    throw ParseError("Qp needs a prime argument", lineno, indent + 7);
                }
                pf.field = {FieldKind::QP, std::stoul(num)};
            } else {
                throw ParseError("unknown field '" + f + "' (expected Qp(p), Q or Qt)", lineno, indent + 7);
            }
            have_field = true;
        } else if (line.rfind("vars", 0) == 0 && detail::is_keyword_line(line)) {
            pf.vars.clear();
            for (const auto& part : detail::split_top_level({rest_after(4), lineno, indent + 6})) {
                std::string name = detail::trim(part.text);
                const bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                                std::all_of(name.begin(), name.end(), [](char c) {
                                    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                                });
                if (!ok) throw ParseError("invalid variable name '" + name + "'", part.line, part.column);
                if (std::find(pf.vars.begin(), pf.vars.end(), name) != pf.vars.end()) {
                    throw ParseError("duplicate variable '" + name + "'", part.line, part.column);
                }
                pf.vars.push_back(name);
            }
            if (pf.vars.empty()) throw ParseError("vars: at least one variable required", lineno, indent + 1);
            have_vars = true;
        } else if (line.rfind("order", 0) == 0 && detail::is_keyword_line(line)) {
            order_spec = rest_after(5);
            order_line = lineno;
            have_order = true;
        } else if (line.rfind("weight", 0) == 0 && detail::is_keyword_line(line)) {
            weight_spec = rest_after(6);
            weight_line = lineno;
            have_weight = true;
        } else if (line.rfind("ideal", 0) == 0 || line.rfind("divide", 0) == 0) {
            const bool is_ideal = line.rfind("ideal", 0) == 0;
            const std::size_t colon = raw.find(':');
            if (colon == std::string::npos) throw ParseError("expected ':' after keyword", lineno, raw.size() + 1);
            std::size_t li = i;
            detail::SourceText src = block(li, colon + 2, raw.substr(colon + 1));
            i = li;
            if (is_ideal) {
                for (auto& g : detail::split_top_level(src)) pf.generators.push_back(std::move(g));
            } else {
                auto parts = detail::split_top_level(src);
                if (parts.size() != 1) throw ParseError("divide: expects exactly one polynomial", lineno, colon + 2);
                pf.dividend = parts.front();
            }
        } else {
            throw ParseError("unrecognised line", lineno, indent + 1);
        }
    }

    if (!have_field) throw ParseError("missing 'field' line", 1, 1);
    if (!have_vars) throw ParseError("missing 'vars' line", 1, 1);
    const std::size_t n = pf.vars.size();

    pf.priority.resize(n);
    for (std::size_t i = 0; i < n; ++i) pf.priority[i] = i;
    if (have_order) {
        std::string spec = order_spec;
        std::string kind = spec.substr(0, spec.find_first_of(" \t"));
        if (kind == "lex") {
            pf.order_kind = OrderKind::Lex;
        } else if (kind == "grevlex") {
            pf.order_kind = OrderKind::GrevLex;
        } else {
            throw ParseError("unknown term order '" + kind + "' (expected lex or grevlex)", order_line, 7);
        }
        std::string chain = detail::trim(spec.substr(kind.size()));
        if (!chain.empty()) {
            const bool ascending = chain.find('<') != std::string::npos;
            if (ascending && chain.find('>') != std::string::npos) {
                throw ParseError("variable chain mixes '<' and '>'", order_line, 7);
            }
            std::vector<std::size_t> prio;
            std::size_t start = 0;
            const char sep = ascending ? '<' : '>';
            while (start <= chain.size()) {
                std::size_t end = chain.find(sep, start);
                if (end == std::string::npos) end = chain.size();
                const std::string name = detail::trim(chain.substr(start, end - start));
                auto it = std::find(pf.vars.begin(), pf.vars.end(), name);
                if (it == pf.vars.end()) throw ParseError("unknown variable '" + name + "' in order", order_line, 7);
                prio.push_back(static_cast<std::size_t>(it - pf.vars.begin()));
                start = end + 1;
            }
            if (ascending) std::reverse(prio.begin(), prio.end());
            std::vector<std::size_t> check = prio;
            std::sort(check.begin(), check.end());
            if (check.size() != n || std::adjacent_find(check.begin(), check.end()) != check.end()) {
                throw ParseError("order must list every variable exactly once", order_line, 7);
            }
            pf.priority = prio;
        }
    }

    pf.weight.assign(n, 0);
    if (have_weight) {
        auto parts = detail::split_top_level({weight_spec, weight_line, 8});
        if (parts.size() != n) {
            throw ParseError("weight has " + std::to_string(parts.size()) + " entries but there are " +
                                 std::to_string(n) + " variables",
                             weight_line, 8);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::string v = detail::trim(parts[i].text);
            try {
                std::size_t used = 0;
                pf.weight[i] = std::stoll(v, &used);
                if (used != v.size()) throw std::invalid_argument(v);
            } catch (const std::exception&) {
                throw ParseError("weight entry '" + v + "' is not an integer", parts[i].line, parts[i].column);
            }
        }
    }
    if (pf.field.kind == FieldKind::QT && std::find(pf.vars.begin(), pf.vars.end(), "t") != pf.vars.end()) {
        throw ParseError("'t' is reserved for the field in Qt problems", 1, 1);
    }
    return pf;
}

/// A problem with its polynomials interpreted over a concrete domain.
template <CoefficientDomain F>
struct Problem {
    F field;
    std::vector<std::string> vars;
    WeightedOrder order;
    std::vector<Polynomial<F>> generators;
    std::optional<Polynomial<F>> dividend;
};

template <CoefficientDomain F>
Problem<F> materialize(const ProblemFile& pf, const F& field, bool allow_inhomogeneous = false) {
    Problem<F> prob{field, pf.vars, pf.weighted_order(), {}, std::nullopt};
    for (const auto& g : pf.generators) {
        auto p = parse_polynomial(field, pf.vars, g.text, g.line, g.column);
        if (!allow_inhomogeneous && !p.is_homogeneous()) {
            throw ParseError("generator is not homogeneous", g.line, g.column);
        }
        prob.generators.push_back(std::move(p));
    }
    if (pf.dividend) {
        auto p = parse_polynomial(field, pf.vars, pf.dividend->text, pf.dividend->line, pf.dividend->column);
        if (!allow_inhomogeneous && !p.is_homogeneous()) {
            throw ParseError("polynomial to divide is not homogeneous", pf.dividend->line, pf.dividend->column);
        }
        prob.dividend = std::move(p);
    }
    return prob;
}

}  // namespace valgb
