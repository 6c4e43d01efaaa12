#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "ndmech/ast.hpp"
#include "ndmech/errors.hpp"
#include "ndmech/parse.hpp"

namespace ndmech {

namespace {

enum class Tok {
    kw_space, kw_if, kw_fi, kw_do, kw_od,
    ident, int_lit,
    lbrace, rbrace, lparen, rparen,
    colon, semicolon, comma, dotdot,
    coloncolon, arrow, assign,
    and_and, or_or, bang,
    eq, ne, lt, le, gt, ge,
    plus, minus, star,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    int line = 0;
    int col = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_ws_and_comments();
            if (pos_ >= text_.size()) break;
            out.push_back(next());
        }
        out.push_back({Tok::end, "<end of input>", 0, line_, col_});
        return out;
    }

private:
    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    bool take(const char* s) {
        const size_t len = std::char_traits<char>::length(s);
        if (text_.compare(pos_, len, s) != 0) return false;
        for (size_t i = 0; i < len; ++i) advance();
        return true;
    }

    Token next() {
        const int line = line_;
        const int col = col_;
        const char c = text_[pos_];

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                word += text_[pos_];
                advance();
            }
            Tok kind = Tok::ident;
            if (word == "space") kind = Tok::kw_space;
            else if (word == "if") kind = Tok::kw_if;
            else if (word == "fi") kind = Tok::kw_fi;
            else if (word == "do") kind = Tok::kw_do;
            else if (word == "od") kind = Tok::kw_od;
            return {kind, std::move(word), 0, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                advance();
            }
            std::int64_t value = 0;
            try {
                value = std::stoll(digits);
            } catch (const std::exception&) {
                throw ParseError("integer literal out of range: " + digits, line, col);
            }
            return {Tok::int_lit, std::move(digits), value, line, col};
        }

        if (take("::")) return {Tok::coloncolon, "::", 0, line, col};
        if (take(":=")) return {Tok::assign, ":=", 0, line, col};
        if (take("->")) return {Tok::arrow, "->", 0, line, col};
        if (take("..")) return {Tok::dotdot, "..", 0, line, col};
        if (take("&&")) return {Tok::and_and, "&&", 0, line, col};
        if (take("||")) return {Tok::or_or, "||", 0, line, col};
        if (take("==")) return {Tok::eq, "==", 0, line, col};
        if (take("!=")) return {Tok::ne, "!=", 0, line, col};
        if (take("<=")) return {Tok::le, "<=", 0, line, col};
        if (take(">=")) return {Tok::ge, ">=", 0, line, col};
        if (take("{")) return {Tok::lbrace, "{", 0, line, col};
        if (take("}")) return {Tok::rbrace, "}", 0, line, col};
        if (take("(")) return {Tok::lparen, "(", 0, line, col};
        if (take(")")) return {Tok::rparen, ")", 0, line, col};
        if (take(":")) return {Tok::colon, ":", 0, line, col};
        if (take(";")) return {Tok::semicolon, ";", 0, line, col};
        if (take(",")) return {Tok::comma, ",", 0, line, col};
        if (take("!")) return {Tok::bang, "!", 0, line, col};
        if (take("<")) return {Tok::lt, "<", 0, line, col};
        if (take(">")) return {Tok::gt, ">", 0, line, col};
        if (take("+")) return {Tok::plus, "+", 0, line, col};
        if (take("-")) return {Tok::minus, "-", 0, line, col};
        if (take("*")) return {Tok::star, "*", 0, line, col};
        if (take("=")) return {Tok::eq, "=", 0, line, col};  // accepted alias of ==

        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Program parse_program() {
        expect(Tok::kw_space, "expected 'space'");
        VarSpace space = parse_space_block();

        Construct construct;
        Tok closer;
        if (peek().kind == Tok::kw_if) {
            construct = Construct::alternative;
            closer = Tok::kw_fi;
        } else if (peek().kind == Tok::kw_do) {
            construct = Construct::repetitive;
            closer = Tok::kw_od;
        } else {
            fail("expected 'if' or 'do'");
        }
        take();

        std::vector<Command> commands;
        while (peek().kind == Tok::coloncolon) {
            commands.push_back(parse_command());
        }
        if (peek().kind != closer) {
            fail(closer == Tok::kw_fi ? "expected '::' or 'fi'" : "expected '::' or 'od'");
        }
        take();
        expect(Tok::end, "trailing input after the construct");

        Program p{std::move(space), construct, std::move(commands)};
        validate_names(p);
        return p;
    }

    PredPtr parse_bare_predicate() {
        PredPtr p = parse_pred();
        expect(Tok::end, "trailing input after the predicate");
        return p;
    }

private:
    const Token& peek(size_t ahead = 0) const {
        const size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        throw ParseError(message + " (found \"" + t.text + "\")", t.line, t.col);
    }

    const Token& expect(Tok kind, const char* message) {
        if (peek().kind != kind) fail(message);
        return take();
    }

    std::int64_t parse_signed_int() {
        bool neg = false;
        if (peek().kind == Tok::minus) {
            take();
            neg = true;
        }
        const Token& t = expect(Tok::int_lit, "expected an integer");
        return neg ? -t.value : t.value;
    }

    VarSpace parse_space_block() {
        expect(Tok::lbrace, "expected '{'");
        std::vector<VarDecl> vars;
        while (peek().kind != Tok::rbrace) {
            const Token& name = expect(Tok::ident, "expected a variable name");
            expect(Tok::colon, "expected ':'");
            const std::int64_t lo = parse_signed_int();
            expect(Tok::dotdot, "expected '..'");
            const std::int64_t hi = parse_signed_int();
            expect(Tok::semicolon, "expected ';'");
            vars.push_back({name.text, lo, hi});
        }
        take();  // rbrace
        if (vars.empty()) fail("the space block declares no variables");
        try {
            return VarSpace::make(std::move(vars));
        } catch (const Error& e) {
            throw ParseError(e.what(), peek().line, peek().col);
        }
    }

    Command parse_command() {
        expect(Tok::coloncolon, "expected '::'");
        PredPtr guard = parse_pred();
        expect(Tok::arrow, "expected '->'");
        std::vector<Assignment> assigns;
        for (;;) {
            const Token& var = expect(Tok::ident, "expected a variable name");
            expect(Tok::assign, "expected ':='");
            ExprPtr value = parse_expr();
            for (const Assignment& a : assigns) {
                if (a.var == var.text) {
                    throw ParseError("variable \"" + var.text + "\" assigned twice in one command",
                                     var.line, var.col);
                }
            }
            assigns.push_back({var.text, std::move(value)});
            if (peek().kind != Tok::comma) break;
            take();
        }
        return {std::move(guard), std::move(assigns)};
    }

    // pred := and ('||' and)* ; and := primary ('&&' primary)*
    PredPtr parse_pred() {
        PredPtr lhs = parse_and();
        while (peek().kind == Tok::or_or) {
            take();
            lhs = make_or(std::move(lhs), parse_and());
        }
        return lhs;
    }

    PredPtr parse_and() {
        PredPtr lhs = parse_pred_primary();
        while (peek().kind == Tok::and_and) {
            take();
            lhs = make_and(std::move(lhs), parse_pred_primary());
        }
        return lhs;
    }

    // primary := '!' primary | comparison | '(' pred ')'
    // A '(' is ambiguous between a parenthesized predicate and a
    // parenthesized arithmetic expression, so the comparison branch is
    // tried first and rolled back on failure.
    PredPtr parse_pred_primary() {
        if (peek().kind == Tok::bang) {
            take();
            return make_not(parse_pred_primary());
        }
        const size_t saved = pos_;
        try {
            return parse_comparison();
        } catch (const ParseError&) {
            pos_ = saved;
        }
        expect(Tok::lparen, "expected a comparison or '('");
        PredPtr inner = parse_pred();
        expect(Tok::rparen, "expected ')'");
        return inner;
    }

    PredPtr parse_comparison() {
        ExprPtr lhs = parse_expr();
        CmpOp op;
        switch (peek().kind) {
            case Tok::eq: op = CmpOp::eq; break;
            case Tok::ne: op = CmpOp::ne; break;
            case Tok::lt: op = CmpOp::lt; break;
            case Tok::le: op = CmpOp::le; break;
            case Tok::gt: op = CmpOp::gt; break;
            case Tok::ge: op = CmpOp::ge; break;
            default: fail("expected a comparison operator");
        }
        take();
        return make_cmp(op, std::move(lhs), parse_expr());
    }

    // expr := term (('+'|'-') term)* ; term := factor ('*' factor)*
    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool add = take().kind == Tok::plus;
            lhs = make_binary(add ? BinaryOp::add : BinaryOp::sub, std::move(lhs), parse_term());
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (peek().kind == Tok::star) {
            take();
            lhs = make_binary(BinaryOp::mul, std::move(lhs), parse_factor());
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::minus:
                take();
                return make_neg(parse_factor());
            case Tok::int_lit:
                take();
                return make_int(t.value);
            case Tok::ident:
                take();
                return make_var(t.text);
            case Tok::lparen: {
                take();
                ExprPtr inner = parse_expr();
                expect(Tok::rparen, "expected ')'");
                return inner;
            }
            default:
                fail("expected an expression");
        }
    }

    static void require_declared(const VarSpace& space, const std::string& name) {
        if (!space.var_index(name)) throw LookupError("unknown variable: " + name);
    }

    static void check_expr_vars(const VarSpace& space, const Expr& e) {
        if (const auto* v = std::get_if<Expr::VarRef>(&e.node)) {
            require_declared(space, v->name);
        } else if (const auto* n = std::get_if<Expr::Neg>(&e.node)) {
            check_expr_vars(space, *n->operand);
        } else if (const auto* b = std::get_if<Expr::Binary>(&e.node)) {
            check_expr_vars(space, *b->lhs);
            check_expr_vars(space, *b->rhs);
        }
    }

    static void check_pred_vars(const VarSpace& space, const Pred& p) {
        if (const auto* c = std::get_if<Pred::Cmp>(&p.node)) {
            check_expr_vars(space, *c->lhs);
            check_expr_vars(space, *c->rhs);
        } else if (const auto* n = std::get_if<Pred::Not>(&p.node)) {
            check_pred_vars(space, *n->operand);
        } else if (const auto* a = std::get_if<Pred::And>(&p.node)) {
            check_pred_vars(space, *a->lhs);
            check_pred_vars(space, *a->rhs);
        } else {
            const auto& o = std::get<Pred::Or>(p.node);
            check_pred_vars(space, *o.lhs);
            check_pred_vars(space, *o.rhs);
        }
    }

    static void validate_names(const Program& p) {
        for (const Command& c : p.commands) {
            check_pred_vars(p.space, *c.guard);
            for (const Assignment& a : c.assignments) {
                require_declared(p.space, a.var);
                check_expr_vars(p.space, *a.value);
            }
        }
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

// Flags literals compared directly against a variable when the literal
// lies outside that variable's declared range.
void literal_range_warnings(const Program& p, std::vector<std::string>* warnings) {
    if (!warnings) return;
    struct Walk {
        const VarSpace& space;
        std::vector<std::string>& out;
        void pred(const Pred& q) {
            if (const auto* c = std::get_if<Pred::Cmp>(&q.node)) {
                note(*c->lhs, *c->rhs);
                note(*c->rhs, *c->lhs);
            } else if (const auto* n = std::get_if<Pred::Not>(&q.node)) {
                pred(*n->operand);
            } else if (const auto* a = std::get_if<Pred::And>(&q.node)) {
                pred(*a->lhs);
                pred(*a->rhs);
            } else {
                const auto& o = std::get<Pred::Or>(q.node);
                pred(*o.lhs);
                pred(*o.rhs);
            }
        }
        void note(const Expr& var_side, const Expr& lit_side) {
            const auto* v = std::get_if<Expr::VarRef>(&var_side.node);
            const auto* l = std::get_if<Expr::IntLit>(&lit_side.node);
            if (!v || !l) return;
            const auto idx = space.var_index(v->name);
            if (!idx) return;
            const VarDecl& d = space.vars()[static_cast<size_t>(*idx)];
            if (l->value < d.lo || l->value > d.hi) {
                out.push_back("literal " + std::to_string(l->value) + " is outside the range of " +
                              d.name + " (" + std::to_string(d.lo) + ".." + std::to_string(d.hi) +
                              ")");
            }
        }
    };
    Walk w{p.space, *warnings};
    for (const Command& c : p.commands) w.pred(*c.guard);
}

}  // namespace

Program parse_program(const std::string& text, std::vector<std::string>* warnings) {
    Parser parser(Lexer(text).run());
    Program p = parser.parse_program();
    literal_range_warnings(p, warnings);
    return p;
}

PredPtr parse_predicate(const std::string& text, const VarSpace& space) {
    Parser parser(Lexer(text).run());
    PredPtr p = parser.parse_bare_predicate();
    // reuse the program-level name validation
    struct Check {
        const VarSpace& space;
        void expr(const Expr& e) {
            if (const auto* v = std::get_if<Expr::VarRef>(&e.node)) {
                if (!space.var_index(v->name)) throw LookupError("unknown variable: " + v->name);
            } else if (const auto* n = std::get_if<Expr::Neg>(&e.node)) {
                expr(*n->operand);
            } else if (const auto* b = std::get_if<Expr::Binary>(&e.node)) {
                expr(*b->lhs);
                expr(*b->rhs);
            }
        }
        void pred(const Pred& q) {
            if (const auto* c = std::get_if<Pred::Cmp>(&q.node)) {
                expr(*c->lhs);
                expr(*c->rhs);
            } else if (const auto* n = std::get_if<Pred::Not>(&q.node)) {
                pred(*n->operand);
            } else if (const auto* a = std::get_if<Pred::And>(&q.node)) {
                pred(*a->lhs);
                pred(*a->rhs);
            } else {
                const auto& o = std::get<Pred::Or>(q.node);
                pred(*o.lhs);
                pred(*o.rhs);
            }
        }
    };
    Check{space}.pred(*p);
    return p;
}

Quilt program_to_quilt(const Program& p, QuiltBuildInfo* info) {
    const VarSpace& vs = p.space;
    const SpacePtr& space = vs.space();
    if (info) info->range_strengthened.clear();

    std::vector<Patch> patches;
    patches.reserve(p.commands.size());
    for (const Command& c : p.commands) {
        StateSet guard_states = predicate_set(vs, *c.guard);
        StateSet domain(space);
        StateSet dropped(space);
        std::vector<std::int32_t> image(static_cast<size_t>(space->size()), -1);
        for (int s : guard_states) {
            std::vector<std::int64_t> values = vs.decode(s);
            std::vector<std::int64_t> next = values;
            bool in_range = true;
            for (const Assignment& a : c.assignments) {
                const int idx = *vs.var_index(a.var);
                const std::int64_t result = eval_expr(*a.value, vs, values);
                const VarDecl& d = vs.vars()[static_cast<size_t>(idx)];
                if (result < d.lo || result > d.hi) {
                    in_range = false;
                    break;
                }
                next[static_cast<size_t>(idx)] = result;
            }
            if (!in_range) {
                dropped.insert(s);
                continue;
            }
            domain.insert(s);
            image[static_cast<size_t>(s)] = static_cast<std::int32_t>(vs.encode(next));
        }
        if (info) info->range_strengthened.push_back(std::move(dropped));
        patches.emplace_back(std::move(domain), std::move(image));
    }
    return Quilt(space, std::move(patches));
}

}  // namespace ndmech
