#ifndef LIESYM_PARSE_HPP
#define LIESYM_PARSE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "liesym/expr.hpp"

namespace liesym {

struct ParseError : SymbolicError {
    using SymbolicError::SymbolicError;
};

/// Declarations visible to the parser.  Identifiers not declared here are
/// rejected, so typos surface as errors instead of silent fresh symbols.
struct ParseContext {
    std::set<std::string> variables;   // base variables (t, x, y, f1, f2, ...)
    std::set<std::string> constants;   // named constants
    std::set<std::string> dep_vars;    // jet-bearing dependent variables

    struct FnDecl {
        std::vector<std::string> arg_names;  // slot names for derivative suffixes
        std::pair<int, int> harm{-1, -1};    // harmonic slot pair, or {-1,-1}
    };
    std::map<std::string, FnDecl> fns;

    /// When true, `zeta` (and its jet suffixes) expands to derivatives of
    /// psi_xx + psi_yy; when `zeta` is listed in dep_vars it stays opaque.
    bool zeta_alias = true;

    void declare_fn(const std::string& name, std::vector<std::string> arg_names,
                    std::pair<int, int> harm = {-1, -1}) {
        fns[name] = FnDecl{std::move(arg_names), harm};
    }
};

/// t, x, y, psi, the zeta alias, the usual parameter functions and a stock
/// of named constants.
ParseContext default_context();

/// Context for the joint space (t, x, y, psi, zeta_x, zeta_y, f1, f2) used by
/// the equivalence algebra; here zeta is an opaque dependent variable.
ParseContext equivalence_context();

Expr parse(const std::string& text, const ParseContext& ctx = default_context());

} // namespace liesym

#endif
