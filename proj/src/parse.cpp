#include "liesym/parse.hpp"

#include <cctype>

namespace liesym {

ParseContext default_context() {
    ParseContext c;
    c.variables = {"t", "x", "y"};
    c.constants = {"a", "b", "c", "ahat", "bhat", "chat", "mu",
                   "nu", "nu1", "nu2", "eps", "k", "m", "n"};
    c.dep_vars = {"psi"};
    c.zeta_alias = true;
    c.declare_fn("beta", {"t"});
    c.declare_fn("gamma1", {"t"});
    c.declare_fn("gamma2", {"t"});
    c.declare_fn("sigma", {"t"});
    c.declare_fn("chi", {"t"});
    c.declare_fn("tau", {"t"});
    c.declare_fn("lambda", {"t"});
    c.declare_fn("theta", {"t"});
    c.declare_fn("delta", {"t", "x", "y"}, {1, 2});
    c.declare_fn("rho", {"t", "x", "y"});
    return c;
}

ParseContext equivalence_context() {
    ParseContext c = default_context();
    c.variables.insert("f1");
    c.variables.insert("f2");
    c.dep_vars.insert("zeta");
    c.zeta_alias = false;
    return c;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip();
        if (pos >= s.size()) throw ParseError("unexpected end of expression");
        return s[pos++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' at position " +
                             std::to_string(pos) + " in: " + s);
    }
    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    Int number() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos < s.size() && s[pos] == '.')
            throw ParseError("decimal literals are not supported; use p/q rationals");
        return Int(s.substr(start, pos - start));
    }
};

struct Parser {
    Lexer lex;
    const ParseContext& ctx;

    Expr parse_expr() {
        bool negate = false;
        while (true) {
            if (lex.accept('+')) continue;
            if (lex.accept('-')) {
                negate = !negate;
                continue;
            }
            break;
        }
        Expr e = parse_prod();
        if (negate) e = neg(e);
        while (!lex.eof()) {
            char c = lex.peek();
            if (c == '+') {
                lex.get();
                e = add(e, parse_prod());
            } else if (c == '-') {
                lex.get();
                e = sub(e, parse_prod());
            } else {
                break;
            }
        }
        return e;
    }

    Expr parse_prod() {
        Expr e = parse_power();
        while (!lex.eof()) {
            char c = lex.peek();
            if (c == '*') {
                lex.get();
                e = mul(e, parse_power());
            } else if (c == '/') {
                lex.get();
                e = div(e, parse_power());
            } else {
                break;
            }
        }
        return e;
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (!lex.eof() && lex.peek() == '^') {
            lex.get();
            bool negexp = false;
            while (lex.accept('-')) negexp = !negexp;
            Expr e = parse_power();  // right associative
            if (negexp) e = neg(e);
            if (e.is_rational()) return pow(base, e.rational_value());
            return pow(base, e);
        }
        return base;
    }

    Expr parse_primary() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            Expr e = parse_expr();
            lex.expect(')');
            return e;
        }
        if (c == '-' || c == '+') {
            bool negate = false;
            while (true) {
                if (lex.accept('+')) continue;
                if (lex.accept('-')) {
                    negate = !negate;
                    continue;
                }
                break;
            }
            Expr e = parse_power();
            return negate ? neg(e) : e;
        }
        if (std::isdigit((unsigned char)c)) return rat(Rational(lex.number()));
        if (std::isalpha((unsigned char)c)) return parse_identifier();
        throw ParseError(std::string("unexpected character '") + c + "' in: " + lex.s);
    }

    static const std::set<std::string>& builtins() {
        static const std::set<std::string> b = {"sin", "cos", "exp", "ln", "atan", "sqrt"};
        return b;
    }

    Expr parse_identifier() {
        std::string word = lex.ident();
        if (word.empty()) throw ParseError("expected identifier in: " + lex.s);

        if (builtins().count(word)) {
            lex.expect('(');
            Expr arg = parse_expr();
            lex.expect(')');
            if (word == "sin") return sin_(arg);
            if (word == "cos") return cos_(arg);
            if (word == "exp") return exp_(arg);
            if (word == "ln") return ln_(arg);
            if (word == "atan") return atan_(arg);
            return sqrt_(arg);
        }

        // split a derivative suffix: psi_txx, zeta_x, delta_xy
        std::string base = word, suffix;
        auto us = word.find('_');
        if (us != std::string::npos) {
            base = word.substr(0, us);
            suffix = word.substr(us + 1);
        }

        if (ctx.dep_vars.count(base)) {
            MIdx idx{0, 0, 0};
            apply_letters(suffix, {"t", "x", "y"}, [&](size_t i) { ++idx[i]; });
            return jet(base, idx);
        }
        if (ctx.zeta_alias && base == "zeta") {
            MIdx idx{0, 2, 0};
            Expr e = zero();
            apply_letters(suffix, {"t", "x", "y"}, [&](size_t i) { ++idx[i]; });
            e = jet("psi", idx);
            idx[1] -= 2;
            idx[2] += 2;
            return add(e, jet("psi", idx));
        }

        auto fit = ctx.fns.find(base);
        if (fit != ctx.fns.end()) {
            const auto& decl = fit->second;
            std::vector<int> der(decl.arg_names.size(), 0);
            apply_letters(suffix, decl.arg_names, [&](size_t i) { ++der[i]; });
            while (lex.peek() == '\'') {
                lex.get();
                der[0] += 1;  // primes differentiate the first slot
            }
            // optional explicit slot-derivative counts: name[2,0,1](...)
            if (lex.peek() == '[') {
                lex.get();
                for (size_t i = 0; i < der.size(); ++i) {
                    if (i) lex.expect(',');
                    der[i] += lex.number().convert_to<int>();
                }
                lex.expect(']');
            }
            lex.expect('(');
            std::vector<Expr> args;
            args.push_back(parse_expr());
            while (lex.accept(',')) args.push_back(parse_expr());
            lex.expect(')');
            if (args.size() != decl.arg_names.size())
                throw ParseError(base + " expects " +
                                 std::to_string(decl.arg_names.size()) + " arguments");
            return fn(base, std::move(args), std::move(der), decl.harm);
        }

        if (!suffix.empty())
            throw ParseError("unknown identifier: " + word);
        if (ctx.variables.count(base)) return sym(base);
        if (ctx.constants.count(base)) return cst(base);
        throw ParseError("unknown identifier: " + word);
    }

    template <typename F>
    void apply_letters(const std::string& suffix, const std::vector<std::string>& names,
                       F&& at) {
        for (char ch : suffix) {
            bool found = false;
            for (size_t i = 0; i < names.size(); ++i)
                if (names[i].size() == 1 && names[i][0] == ch) {
                    at(i);
                    found = true;
                    break;
                }
            if (!found)
                throw ParseError(std::string("derivative suffix letter '") + ch +
                                 "' does not name a slot");
        }
    }
};

} // namespace

Expr parse(const std::string& text, const ParseContext& ctx) {
    Parser p{Lexer{text}, ctx};
    Expr e = p.parse_expr();
    if (!p.lex.eof())
        throw ParseError("trailing input at position " + std::to_string(p.lex.pos) +
                         " in: " + text);
    return e;
}

} // namespace liesym
