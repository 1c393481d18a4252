#include "opetope/textio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "opetope/coding.hpp"
#include "opetope/errors.hpp"

namespace opetope::textio {

namespace {

// ---- Lexer ----

struct Token {
    enum class Kind { ident, integer, sym, end };
    Kind kind = Kind::end;
    std::string text;
    int line = 0, col = 0;
};

/// Replaces the Unicode aliases accepted on input by their ASCII forms.
std::string asciify(const std::string& in) {
    std::string out;
    for (std::size_t i = 0; i < in.size();) {
        auto starts = [&](const char* u) {
            return in.compare(i, std::string(u).size(), u) == 0;
        };
        if (starts("←")) {  // ←
            out += "<-";
            i += 3;
        } else if (starts("⤳") || starts("⇝")) {  // ⤳ / ⇝
            out += "~>";
            i += 3;
        } else if (starts("∗") || starts("✱")) {  // ∗
            out += "*";
            i += 3;
        } else if (starts("∅")) {  // ∅
            out += "0";
            i += 3;
        } else {
            out += in[i];
            ++i;
        }
    }
    return out;
}

struct Lexer {
    std::string src;
    std::size_t pos = 0;
    int line = 1, col = 1;
    Token tok;

    explicit Lexer(std::string text) : src(std::move(text)) { advance(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok.line, tok.col);
    }

    void bump(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (src[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    void advance() {
        while (pos < src.size()) {
            if (std::isspace(static_cast<unsigned char>(src[pos]))) {
                bump(1);
            } else if (src[pos] == '#' || (src[pos] == '/' && pos + 1 < src.size() &&
                                           src[pos + 1] == '/')) {
                while (pos < src.size() && src[pos] != '\n') bump(1);
            } else {
                break;
            }
        }
        tok.line = line;
        tok.col = col;
        if (pos >= src.size()) {
            tok = Token{Token::Kind::end, "", line, col};
            return;
        }
        char c = src[pos];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
                    src[pos] == '\''))
                bump(1);
            tok = Token{Token::Kind::ident, src.substr(start, pos - start), tok.line, tok.col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) bump(1);
            tok = Token{Token::Kind::integer, src.substr(start, pos - start), tok.line, tok.col};
            return;
        }
        for (const char* sym : {"<-", "~>"}) {
            if (src.compare(pos, 2, sym) == 0) {
                tok = Token{Token::Kind::sym, sym, tok.line, tok.col};
                bump(2);
                return;
            }
        }
        static const std::string singles = "(){}[];:,=*^";
        if (singles.find(c) != std::string::npos) {
            tok = Token{Token::Kind::sym, std::string(1, c), tok.line, tok.col};
            bump(1);
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

    bool at(const std::string& text) const {
        return tok.kind != Token::Kind::end && tok.text == text;
    }
    bool at_ident() const { return tok.kind == Token::Kind::ident; }
    bool at_end() const { return tok.kind == Token::Kind::end; }

    std::string expect_ident(const std::string& what) {
        if (!at_ident()) fail("expected " + what);
        std::string t = tok.text;
        advance();
        return t;
    }

    int expect_int() {
        if (tok.kind != Token::Kind::integer) fail("expected a number");
        int v = std::stoi(tok.text);
        advance();
        return v;
    }

    void expect(const std::string& text) {
        if (!at(text)) fail("expected '" + text + "'");
        advance();
    }

    bool accept(const std::string& text) {
        if (at(text)) {
            advance();
            return true;
        }
        return false;
    }
};

// ---- Addresses ----

struct RawAddr {
    bool star = false;
    std::vector<RawAddr> kids;
    std::optional<int> annotation;
};

RawAddr parse_raw_addr(Lexer& lx, bool top) {
    RawAddr r;
    if (lx.accept("*")) {
        r.star = true;
    } else if (lx.accept("[")) {
        while (!lx.accept("]")) r.kids.push_back(parse_raw_addr(lx, false));
    } else {
        lx.fail("expected an address");
    }
    if (top && lx.at(":")) {
        lx.advance();
        r.annotation = lx.expect_int();
    }
    return r;
}

std::optional<int> infer_dim(const RawAddr& r) {
    if (r.star) return 0;
    if (r.annotation) return r.annotation;
    for (const RawAddr& k : r.kids) {
        if (auto d = infer_dim(k)) return *d + 1;
    }
    return std::nullopt;
}

Address resolve_addr(const RawAddr& r, int dim) {
    if (r.star) {
        if (dim != 0) throw ParseError("* used where a " + std::to_string(dim) +
                                       "-dimensional address is expected");
        return Address::star();
    }
    if (r.annotation && *r.annotation != dim)
        throw ParseError("address annotated :" + std::to_string(*r.annotation) +
                         " used at dimension " + std::to_string(dim));
    if (dim < 1) throw ParseError("bracketed address at dimension 0");
    std::vector<Address> entries;
    for (const RawAddr& k : r.kids) entries.push_back(resolve_addr(k, dim - 1));
    return Address(dim, std::move(entries));
}

// ---- Preopetopes ----

using PreoEnv = std::map<std::string, Preopetope>;

Preopetope parse_preo_expr(Lexer& lx, const PreoEnv& env);

Preopetope parse_preo_nodes(Lexer& lx, const PreoEnv& env) {
    // '{' already consumed: ADDR <- EXPR (';' ADDR <- EXPR)* '}'
    std::vector<std::pair<RawAddr, Preopetope>> raw;
    while (true) {
        RawAddr a = parse_raw_addr(lx, true);
        lx.expect("<-");
        raw.emplace_back(std::move(a), parse_preo_expr(lx, env));
        if (lx.accept(";")) {
            if (lx.accept("}")) break;  // tolerate a trailing separator
            continue;
        }
        lx.expect("}");
        break;
    }
    int dim = raw.front().second.dim() + 1;
    Preopetope::Entries entries;
    for (auto& [a, p] : raw) {
        if (p.dim() + 1 != dim)
            throw ParseError("sources of different dimensions in one preopetope");
        entries.emplace_back(resolve_addr(a, dim - 1), std::move(p));
    }
    return Preopetope::with_nodes(dim, std::move(entries));
}

Preopetope parse_preo_expr(Lexer& lx, const PreoEnv& env) {
    if (lx.accept("{")) return parse_preo_nodes(lx, env);
    std::string name = lx.expect_ident("a preopetope expression");
    if (name == "point") return Preopetope::point();
    if (name == "arrow") return Preopetope::arrow();
    if (name == "degen") {
        lx.expect("{");
        Preopetope base = parse_preo_expr(lx, env);
        lx.expect("}");
        return Preopetope::degenerate(std::move(base));
    }
    auto it = env.find(name);
    if (it == env.end()) lx.fail("unknown name '" + name + "'");
    return it->second;
}

Preopetope parse_preo_document(Lexer& lx) {
    PreoEnv env;
    while (lx.at("let")) {
        lx.advance();
        std::string name = lx.expect_ident("a name");
        lx.expect("=");
        env[name] = parse_preo_expr(lx, env);
    }
    Preopetope p = parse_preo_expr(lx, env);
    if (!lx.at_end()) lx.fail("trailing input after the preopetope");
    return p;
}

// ---- Variables, terms and types (for OCMT literals) ----

/// A variable reference: either the internal form t^k:base or a plain name
/// resolved against the context by display name.
Variable parse_var_decl(Lexer& lx, int dim_placeholder) {
    if (lx.at("t")) {
        // Look ahead for the internal form t^k:base.
        Lexer save = lx;
        lx.advance();
        if (lx.accept("^")) {
            int k = lx.expect_int();
            lx.expect(":");
            std::string base = lx.expect_ident("a variable name");
            return Variable(base, dim_placeholder, k);
        }
        lx = save;
    }
    return Variable(lx.expect_ident("a variable name"), dim_placeholder, 0);
}

Variable resolve_var(Lexer& lx, const NamedContext& ctx) {
    Variable v = parse_var_decl(lx, 0);
    if (v.tdepth > 0) {
        for (const auto& [w, ty] : ctx.items())
            if (w == v) return w;
        lx.fail("unknown variable t^" + std::to_string(v.tdepth) + ":" + v.base);
    }
    auto found = ctx.find_display(v.base);
    if (!found) lx.fail("unknown variable '" + v.base + "'");
    return *found;
}

Variable resolve_var_name(const std::string& name, const NamedContext& ctx) {
    // Accept both the display form and the internal t^k:base form.
    auto caret = name.find("^");
    if (name.size() > 2 && name[0] == 't' && caret == 1) {
        auto colon = name.find(':');
        if (colon == std::string::npos) throw ParseError("malformed variable '" + name + "'");
        Variable v(name.substr(colon + 1), 0, std::stoi(name.substr(2, colon - 2)));
        for (const auto& [w, ty] : ctx.items())
            if (w == v) return w;
        throw RuleError("unknown variable " + name);
    }
    auto found = ctx.find_display(name);
    if (!found) throw RuleError("unknown variable " + name);
    return *found;
}

NamedTerm parse_term(Lexer& lx, const NamedContext& ctx) {
    if (lx.accept("_")) return NamedTerm::degen(resolve_var(lx, ctx));
    Variable head = resolve_var(lx, ctx);
    if (!lx.accept("(")) return NamedTerm::var(head);
    NamedTerm::Args args;
    while (true) {
        Variable key = resolve_var(lx, ctx);
        lx.expect("<-");
        args.emplace_back(key, parse_term(lx, ctx));
        if (lx.accept(",")) continue;
        lx.expect(")");
        break;
    }
    return NamedTerm::apply(head, std::move(args));
}

NamedType parse_type(Lexer& lx, const NamedContext& ctx) {
    NamedType t;
    while (true) {
        if (lx.tok.kind == Token::Kind::integer && lx.tok.text == "0") {
            lx.advance();
            return t;
        }
        t.chain.push_back(parse_term(lx, ctx));
        lx.expect("~>");
    }
}

OpetopicSet parse_ocmt_body(Lexer& lx) {
    lx.expect("ocmt");
    lx.expect("{");
    std::vector<std::pair<std::string, std::string>> raw_eqs;
    OpetopicSet o;
    auto read_raw_var = [&lx]() {
        Variable v = parse_var_decl(lx, 0);
        return v.tdepth > 0 ? "t^" + std::to_string(v.tdepth) + ":" + v.base : v.base;
    };
    while (!lx.accept("}")) {
        if (lx.accept("eq")) {
            lx.expect("{");
            while (!lx.accept("}")) {
                std::string a = read_raw_var();
                lx.expect("=");
                std::string b = read_raw_var();
                raw_eqs.emplace_back(a, b);
                lx.accept(";");
            }
        } else if (lx.accept("ctx")) {
            lx.expect("{");
            while (!lx.accept("}")) {
                Variable v = parse_var_decl(lx, 0);
                lx.expect(":");
                NamedType t = parse_type(lx, o.ctx);
                v.dim = static_cast<int>(t.chain.size());
                o.ctx.add(v, t);
                lx.accept(";");
            }
        } else {
            lx.fail("expected 'eq' or 'ctx'");
        }
    }
    for (const auto& [a, b] : raw_eqs)
        o.theory.add(resolve_var_name(a, o.ctx), resolve_var_name(b, o.ctx));
    return o;
}

// ---- Scripts ----

struct OptBangEnv {
    std::map<std::string, NamedSequent> seqs;
};

NamedSequent parse_optbang_expr(Lexer& lx, const OptBangEnv& env);

NamedSequent parse_optbang_call(Lexer& lx, const OptBangEnv& env, const std::string& name) {
    if (name == "point") {
        lx.expect("(");
        std::string n = lx.expect_ident("a cell name");
        lx.expect(")");
        return n_point(n);
    }
    if (name == "degen") {
        lx.expect("(");
        NamedSequent s = parse_optbang_expr(lx, env);
        lx.expect(")");
        return n_degen(s);
    }
    if (name == "shift" || name == "degenshift") {
        lx.expect("(");
        NamedSequent s = parse_optbang_expr(lx, env);
        lx.expect(",");
        std::string n = lx.expect_ident("a cell name");
        lx.expect(")");
        return name == "shift" ? n_shift(s, n) : n_degen_shift(s, n);
    }
    if (name == "graft") {
        lx.expect("(");
        NamedSequent t = parse_optbang_expr(lx, env);
        lx.expect(",");
        Variable a = resolve_var(lx, t.ctx);
        lx.expect(",");
        NamedSequent x = parse_optbang_expr(lx, env);
        lx.expect(")");
        return n_graft(t, a, x);
    }
    auto it = env.seqs.find(name);
    if (it == env.seqs.end()) lx.fail("unknown name '" + name + "'");
    return it->second;
}

NamedSequent parse_optbang_expr(Lexer& lx, const OptBangEnv& env) {
    std::string name = lx.expect_ident("an expression");
    return parse_optbang_call(lx, env, name);
}

UnnamedSequent parse_optq_expr(Lexer& lx, const std::map<std::string, UnnamedSequent>& env) {
    std::string name = lx.expect_ident("an expression");
    if (name == "point") return rule_point();
    if (name == "arrow") return rule_shift(rule_point());
    if (name == "degen" || name == "shift") {
        lx.expect("(");
        UnnamedSequent s = parse_optq_expr(lx, env);
        lx.expect(")");
        return name == "degen" ? rule_degen(s) : rule_shift(s);
    }
    if (name == "graft") {
        lx.expect("(");
        UnnamedSequent s = parse_optq_expr(lx, env);
        lx.expect(",");
        RawAddr raw = parse_raw_addr(lx, true);
        lx.expect(",");
        UnnamedSequent q = parse_optq_expr(lx, env);
        lx.expect(")");
        int dim = s.source.dim() - 1;
        return rule_graft(s, resolve_addr(raw, dim), q);
    }
    auto it = env.find(name);
    if (it == env.end()) lx.fail("unknown name '" + name + "'");
    return it->second;
}

using SetValue = std::variant<NamedSequent, OpetopicSet>;

SetValue parse_optset_expr(Lexer& lx, std::map<std::string, SetValue>& env, bool mixed);

OpetopicSet expect_set(Lexer& lx, SetValue v) {
    if (!std::holds_alternative<OpetopicSet>(v)) lx.fail("expected an opetopic set");
    return std::get<OpetopicSet>(std::move(v));
}

NamedSequent expect_seq(Lexer& lx, SetValue v) {
    if (!std::holds_alternative<NamedSequent>(v)) lx.fail("expected a pasting diagram");
    return std::get<NamedSequent>(std::move(v));
}

SetValue parse_optset_expr(Lexer& lx, std::map<std::string, SetValue>& env, bool mixed) {
    std::string name = lx.expect_ident("an expression");
    auto args_open = [&] { lx.expect("("); };
    if (name == "zero") return os_zero();
    if (name == "repr" && !mixed) {
        args_open();
        OptBangEnv benv;
        for (const auto& [k, v] : env)
            if (std::holds_alternative<NamedSequent>(v)) benv.seqs.emplace(k, std::get<NamedSequent>(v));
        NamedSequent s = parse_optbang_expr(lx, benv);
        lx.expect(")");
        return os_repr(s);
    }
    if (name == "sum") {
        args_open();
        OpetopicSet a = expect_set(lx, parse_optset_expr(lx, env, mixed));
        lx.expect(",");
        OpetopicSet b = expect_set(lx, parse_optset_expr(lx, env, mixed));
        lx.expect(")");
        return os_sum(a, b);
    }
    if (name == "usum") {
        args_open();
        std::vector<OpetopicSet> parts;
        if (!lx.accept(")")) {
            while (true) {
                parts.push_back(expect_set(lx, parse_optset_expr(lx, env, mixed)));
                if (lx.accept(",")) continue;
                lx.expect(")");
                break;
            }
        }
        return os_usum(parts);
    }
    if (name == "glue") {
        args_open();
        OpetopicSet o = expect_set(lx, parse_optset_expr(lx, env, mixed));
        lx.expect(",");
        Variable a = resolve_var(lx, o.ctx);
        lx.expect(",");
        Variable b = resolve_var(lx, o.ctx);
        lx.expect(")");
        return os_glue(o, a, b);
    }
    if (mixed) {
        if (name == "point" || name == "mpoint") {
            args_open();
            std::string n = lx.expect_ident("a cell name");
            lx.expect(")");
            return m_point(n);
        }
        if (name == "pd" || name == "mpd" || name == "degen" || name == "mdegen") {
            args_open();
            OpetopicSet o = expect_set(lx, parse_optset_expr(lx, env, mixed));
            lx.expect(",");
            Variable x = resolve_var(lx, o.ctx);
            lx.expect(")");
            return (name == "pd" || name == "mpd") ? m_pd(o, x) : m_degen(o, x);
        }
        if (name == "graft" || name == "mgraft") {
            args_open();
            NamedSequent t = expect_seq(lx, parse_optset_expr(lx, env, mixed));
            lx.expect(",");
            Variable a = resolve_var(lx, t.ctx);
            lx.expect(",");
            NamedSequent x = expect_seq(lx, parse_optset_expr(lx, env, mixed));
            lx.expect(")");
            return m_graft(t, a, x);
        }
        if (name == "shift" || name == "mshift") {
            args_open();
            NamedSequent s = expect_seq(lx, parse_optset_expr(lx, env, mixed));
            lx.expect(",");
            std::string n = lx.expect_ident("a cell name");
            lx.expect(")");
            return m_shift(s, n);
        }
    } else {
        // In the plain dialect any named-calculus expression is allowed.
        if (name == "point" || name == "degen" || name == "shift" || name == "degenshift" ||
            name == "graft") {
            OptBangEnv benv;
            for (const auto& [k, v] : env)
                if (std::holds_alternative<NamedSequent>(v))
                    benv.seqs.emplace(k, std::get<NamedSequent>(v));
            return parse_optbang_call(lx, benv, name);
        }
    }
    auto it = env.find(name);
    if (it == env.end()) lx.fail("unknown name '" + name + "'");
    return it->second;
}

ScriptValue run_optq(Lexer& lx) {
    std::map<std::string, UnnamedSequent> env;
    std::optional<UnnamedSequent> last;
    while (!lx.at_end()) {
        if (lx.accept("let")) {
            std::string name = lx.expect_ident("a name");
            lx.expect("=");
            UnnamedSequent v = parse_optq_expr(lx, env);
            last = v;
            env.insert_or_assign(name, std::move(v));
        } else {
            last = parse_optq_expr(lx, env);
        }
        lx.accept(";");
    }
    if (!last) throw ParseError("empty script");
    return *last;
}

ScriptValue run_optbang(Lexer& lx) {
    OptBangEnv env;
    std::optional<NamedSequent> last;
    while (!lx.at_end()) {
        if (lx.accept("let")) {
            std::string name = lx.expect_ident("a name");
            lx.expect("=");
            NamedSequent v = parse_optbang_expr(lx, env);
            last = v;
            env.seqs.insert_or_assign(name, std::move(v));
        } else {
            last = parse_optbang_expr(lx, env);
        }
        lx.accept(";");
    }
    if (!last) throw ParseError("empty script");
    return *last;
}

ScriptValue run_optset(Lexer& lx, bool mixed) {
    std::map<std::string, SetValue> env;
    std::optional<SetValue> last;
    while (!lx.at_end()) {
        if (lx.accept("let")) {
            std::string name = lx.expect_ident("a name");
            lx.expect("=");
            SetValue v = parse_optset_expr(lx, env, mixed);
            last = v;
            env.insert_or_assign(name, std::move(v));
        } else {
            last = parse_optset_expr(lx, env, mixed);
        }
        lx.accept(";");
    }
    if (!last) throw ParseError("empty script");
    if (std::holds_alternative<OpetopicSet>(*last)) return std::get<OpetopicSet>(*last);
    return std::get<NamedSequent>(*last);
}

ScriptValue run_uset(Lexer& lx) {
    UContext ctx;
    std::map<std::string, UPastingDiagram> pds;
    PreoEnv shapes;
    while (!lx.at_end()) {
        if (lx.accept("point")) {
            bool paren = lx.accept("(");
            std::string n = lx.expect_ident("a cell name");
            if (paren) lx.expect(")");
            ctx = u_point(std::move(ctx), n);
        } else if (lx.accept("fill")) {
            lx.expect("(");
            std::string pname = lx.expect_ident("a pasting diagram name");
            auto it = pds.find(pname);
            if (it == pds.end()) lx.fail("unknown pasting diagram '" + pname + "'");
            lx.expect(",");
            std::string target = lx.expect_ident("a target cell");
            lx.expect(",");
            std::string n = lx.expect_ident("a cell name");
            lx.expect(")");
            ctx = u_fill(std::move(ctx), it->second, target, n);
        } else if (lx.accept("let")) {
            std::string name = lx.expect_ident("a name");
            lx.expect("=");
            if (lx.at("pd")) {
                lx.advance();
                lx.expect("(");
                Preopetope shape = parse_preo_expr(lx, shapes);
                lx.expect(",");
                lx.expect("{");
                std::vector<std::pair<Address, std::string>> assignment;
                std::vector<std::pair<RawAddr, std::string>> raw;
                while (!lx.accept("}")) {
                    RawAddr a = parse_raw_addr(lx, true);
                    lx.expect("<-");
                    raw.emplace_back(std::move(a), lx.expect_ident("a cell name"));
                    lx.accept(";");
                }
                for (auto& [a, cell] : raw)
                    assignment.emplace_back(resolve_addr(a, shape.dim() - 1), cell);
                lx.expect(")");
                pds.insert_or_assign(name, u_pd(ctx, shape, std::move(assignment)));
            } else if (lx.at("degen")) {
                lx.advance();
                lx.expect("(");
                std::string cell = lx.expect_ident("a cell name");
                lx.expect(")");
                pds.insert_or_assign(name, u_degen(ctx, cell));
            } else {
                shapes[name] = parse_preo_expr(lx, shapes);
            }
        } else {
            lx.fail("expected 'point', 'let' or 'fill'");
        }
        lx.accept(";");
    }
    std::vector<std::string> violations = u_verify(ctx);
    if (!violations.empty()) throw RuleError(violations.front());
    return ctx;
}

}  // namespace

// ---- Public entry points ----

Address parse_address(const std::string& text) {
    Lexer lx(asciify(text));
    RawAddr raw = parse_raw_addr(lx, true);
    if (!lx.at_end()) lx.fail("trailing input after the address");
    auto dim = infer_dim(raw);
    if (!dim) throw ParseError("dimension-ambiguous address (add a :k annotation)");
    return resolve_addr(raw, *dim);
}

Preopetope parse_preopetope(const std::string& text) {
    Lexer lx(asciify(text));
    return parse_preo_document(lx);
}

OpetopicSet parse_ocmt(const std::string& text) {
    Lexer lx(asciify(text));
    OpetopicSet o = parse_ocmt_body(lx);
    if (!lx.at_end()) lx.fail("trailing input after the OCMT");
    return o;
}

ScriptResult run_script(const std::string& text) {
    std::string src = asciify(text);
    // The dialect header is the first non-blank line.
    std::istringstream in(src);
    std::string line, dialect;
    std::size_t header_end = 0;
    while (std::getline(in, line)) {
        std::size_t consumed = header_end + line.size() + 1;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.empty()) {
            header_end = consumed;
            continue;
        }
        if (trimmed.rfind("#dialect", 0) != 0)
            throw ParseError("the first line of a script must be '#dialect <name>'");
        dialect = trimmed.substr(8);
        dialect.erase(0, dialect.find_first_not_of(" \t"));
        dialect.erase(dialect.find_last_not_of(" \t\r") + 1);
        header_end = consumed;
        break;
    }
    if (dialect.empty()) throw ParseError("missing '#dialect' header");
    Lexer lx(src.substr(std::min(header_end, src.size())));
    if (dialect == "opt?") return {dialect, run_optq(lx)};
    if (dialect == "opt!") return {dialect, run_optbang(lx)};
    if (dialect == "optset!") return {dialect, run_optset(lx, false)};
    if (dialect == "optset!m") return {dialect, run_optset(lx, true)};
    if (dialect == "optset?") return {dialect, run_uset(lx)};
    throw ParseError("unknown dialect '" + dialect + "'");
}

// ---- JSON ----

nlohmann::json to_json(const Preopetope& p) {
    nlohmann::json j;
    j["dim"] = p.dim();
    switch (p.kind()) {
        case Preopetope::Kind::point:
            j["kind"] = "point";
            break;
        case Preopetope::Kind::degenerate:
            j["kind"] = "degenerate";
            j["base"] = to_json(p.degen_base());
            break;
        case Preopetope::Kind::nodes: {
            j["kind"] = "nodes";
            nlohmann::json entries = nlohmann::json::array();
            for (const auto& [a, src] : p.entries())
                entries.push_back({{"address", a.str()}, {"source", to_json(src)}});
            j["entries"] = std::move(entries);
            break;
        }
    }
    return j;
}

nlohmann::json to_json(const UnnamedSequent& s) {
    nlohmann::json j;
    nlohmann::json ctx = nlohmann::json::array();
    for (const auto& [l, n] : s.context) ctx.push_back({{"leaf", l.str()}, {"node", n.str()}});
    j["context"] = std::move(ctx);
    j["source"] = to_json(s.source);
    if (s.target) j["target"] = to_json(*s.target);
    else j["target"] = nullptr;
    return j;
}

nlohmann::json to_json(const NamedSequent& s) {
    nlohmann::json j;
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& [a, b] : s.theory.generators())
        eqs.push_back({a.display(), b.display()});
    j["theory"] = std::move(eqs);
    nlohmann::json ctx = nlohmann::json::array();
    for (const auto& [v, ty] : s.ctx.items())
        ctx.push_back({{"var", v.display()}, {"type", ty.str()}});
    j["context"] = std::move(ctx);
    j["term"] = s.term.str();
    j["type"] = s.type.str();
    return j;
}

nlohmann::json to_json(const OpetopicSet& o) {
    nlohmann::json j;
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& [a, b] : o.theory.generators())
        eqs.push_back({a.display(), b.display()});
    j["theory"] = std::move(eqs);
    nlohmann::json ctx = nlohmann::json::array();
    for (const auto& [v, ty] : o.ctx.items())
        ctx.push_back({{"var", v.display()}, {"type", ty.str()}});
    j["context"] = std::move(ctx);
    return j;
}

nlohmann::json to_json(const Complex& c) {
    nlohmann::json j;
    nlohmann::json cells = nlohmann::json::array();
    for (const MaterializedCell& cell : c.cells) {
        nlohmann::json jc;
        jc["dim"] = cell.dim;
        jc["shape"] = cell.shape.str();
        nlohmann::json members = nlohmann::json::array();
        for (const Variable& v : cell.members) members.push_back(v.display());
        jc["members"] = std::move(members);
        nlohmann::json sources = nlohmann::json::array();
        for (const auto& [p, idx] : cell.sources)
            sources.push_back({{"address", p.str()}, {"cell", idx}});
        jc["sources"] = std::move(sources);
        jc["target"] = cell.target;
        cells.push_back(std::move(jc));
    }
    j["cells"] = std::move(cells);
    j["violations"] = c.violations;
    return j;
}

nlohmann::json to_json(const UContext& c) {
    nlohmann::json j;
    nlohmann::json cells = nlohmann::json::array();
    for (const UCell& cell : c.cells()) {
        nlohmann::json jc;
        jc["name"] = cell.name;
        jc["dim"] = cell.dim();
        jc["shape"] = cell.shape.str();
        nlohmann::json sources = nlohmann::json::array();
        for (const auto& [p, name] : cell.sources)
            sources.push_back({{"address", p.str()}, {"cell", name}});
        jc["sources"] = std::move(sources);
        jc["target"] = cell.target;
        cells.push_back(std::move(jc));
    }
    j["cells"] = std::move(cells);
    return j;
}

nlohmann::json to_json(const ScriptResult& r) {
    nlohmann::json j;
    j["dialect"] = r.dialect;
    std::visit([&](const auto& v) { j["value"] = to_json(v); }, r.value);
    return j;
}

}  // namespace opetope::textio
