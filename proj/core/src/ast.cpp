#include "ndmech/ast.hpp"

#include "ndmech/errors.hpp"

namespace ndmech {

ExprPtr make_int(std::int64_t value) { return std::make_shared<Expr>(Expr{Expr::IntLit{value}}); }
ExprPtr make_var(std::string name) {
    return std::make_shared<Expr>(Expr{Expr::VarRef{std::move(name)}});
}
ExprPtr make_neg(ExprPtr operand) { return std::make_shared<Expr>(Expr{Expr::Neg{std::move(operand)}}); }
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<Expr>(Expr{Expr::Binary{op, std::move(lhs), std::move(rhs)}});
}

PredPtr make_cmp(CmpOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<Pred>(Pred{Pred::Cmp{op, std::move(lhs), std::move(rhs)}});
}
PredPtr make_not(PredPtr operand) { return std::make_shared<Pred>(Pred{Pred::Not{std::move(operand)}}); }
PredPtr make_and(PredPtr lhs, PredPtr rhs) {
    return std::make_shared<Pred>(Pred{Pred::And{std::move(lhs), std::move(rhs)}});
}
PredPtr make_or(PredPtr lhs, PredPtr rhs) {
    return std::make_shared<Pred>(Pred{Pred::Or{std::move(lhs), std::move(rhs)}});
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* l = std::get_if<Expr::IntLit>(&a.node)) {
        return l->value == std::get<Expr::IntLit>(b.node).value;
    }
    if (const auto* v = std::get_if<Expr::VarRef>(&a.node)) {
        return v->name == std::get<Expr::VarRef>(b.node).name;
    }
    if (const auto* n = std::get_if<Expr::Neg>(&a.node)) {
        return structurally_equal(*n->operand, *std::get<Expr::Neg>(b.node).operand);
    }
    const auto& x = std::get<Expr::Binary>(a.node);
    const auto& y = std::get<Expr::Binary>(b.node);
    return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) && structurally_equal(*x.rhs, *y.rhs);
}

bool structurally_equal(const Pred& a, const Pred& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* c = std::get_if<Pred::Cmp>(&a.node)) {
        const auto& d = std::get<Pred::Cmp>(b.node);
        return c->op == d.op && structurally_equal(*c->lhs, *d.lhs) &&
               structurally_equal(*c->rhs, *d.rhs);
    }
    if (const auto* n = std::get_if<Pred::Not>(&a.node)) {
        return structurally_equal(*n->operand, *std::get<Pred::Not>(b.node).operand);
    }
    if (const auto* n = std::get_if<Pred::And>(&a.node)) {
        const auto& m = std::get<Pred::And>(b.node);
        return structurally_equal(*n->lhs, *m.lhs) && structurally_equal(*n->rhs, *m.rhs);
    }
    const auto& n = std::get<Pred::Or>(a.node);
    const auto& m = std::get<Pred::Or>(b.node);
    return structurally_equal(*n.lhs, *m.lhs) && structurally_equal(*n.rhs, *m.rhs);
}

std::int64_t eval_expr(const Expr& e, const VarSpace& space,
                       const std::vector<std::int64_t>& values) {
    if (const auto* l = std::get_if<Expr::IntLit>(&e.node)) return l->value;
    if (const auto* v = std::get_if<Expr::VarRef>(&e.node)) {
        auto idx = space.var_index(v->name);
        if (!idx) throw LookupError("unknown variable: " + v->name);
        return values.at(static_cast<size_t>(*idx));
    }
    if (const auto* n = std::get_if<Expr::Neg>(&e.node)) {
        return -eval_expr(*n->operand, space, values);
    }
    const auto& b = std::get<Expr::Binary>(e.node);
    const std::int64_t l = eval_expr(*b.lhs, space, values);
    const std::int64_t r = eval_expr(*b.rhs, space, values);
    switch (b.op) {
        case BinaryOp::add: return l + r;
        case BinaryOp::sub: return l - r;
        case BinaryOp::mul: return l * r;
    }
    throw InternalError("unhandled binary operator");
}

bool eval_pred(const Pred& p, const VarSpace& space, const std::vector<std::int64_t>& values) {
    if (const auto* c = std::get_if<Pred::Cmp>(&p.node)) {
        const std::int64_t l = eval_expr(*c->lhs, space, values);
        const std::int64_t r = eval_expr(*c->rhs, space, values);
        switch (c->op) {
            case CmpOp::eq: return l == r;
            case CmpOp::ne: return l != r;
            case CmpOp::lt: return l < r;
            case CmpOp::le: return l <= r;
            case CmpOp::gt: return l > r;
            case CmpOp::ge: return l >= r;
        }
        throw InternalError("unhandled comparison operator");
    }
    if (const auto* n = std::get_if<Pred::Not>(&p.node)) {
        return !eval_pred(*n->operand, space, values);
    }
    if (const auto* a = std::get_if<Pred::And>(&p.node)) {
        return eval_pred(*a->lhs, space, values) && eval_pred(*a->rhs, space, values);
    }
    const auto& o = std::get<Pred::Or>(p.node);
    return eval_pred(*o.lhs, space, values) || eval_pred(*o.rhs, space, values);
}

namespace {

// Expression precedence: additive 1, multiplicative 2, unary 3, atoms 4.
int expr_prec(const Expr& e) {
    if (std::holds_alternative<Expr::Binary>(e.node)) {
        return std::get<Expr::Binary>(e.node).op == BinaryOp::mul ? 2 : 1;
    }
    if (std::holds_alternative<Expr::Neg>(e.node)) return 3;
    return 4;
}

const char* binary_op_text(BinaryOp op) {
    switch (op) {
        case BinaryOp::add: return " + ";
        case BinaryOp::sub: return " - ";
        case BinaryOp::mul: return " * ";
    }
    return "?";
}

// Binary operators parse left-associatively, so a right child of equal
// precedence must keep its parentheses for the shape to survive a
// round-trip.
void print_expr_rec(const Expr& e, int parent_prec, bool right_child, std::string& out) {
    const int prec = expr_prec(e);
    const bool parens = prec < parent_prec || (prec == parent_prec && right_child && prec < 4);
    if (parens) out += "(";
    if (const auto* l = std::get_if<Expr::IntLit>(&e.node)) {
        out += std::to_string(l->value);
    } else if (const auto* v = std::get_if<Expr::VarRef>(&e.node)) {
        out += v->name;
    } else if (const auto* n = std::get_if<Expr::Neg>(&e.node)) {
        out += "-";
        print_expr_rec(*n->operand, 4, false, out);
    } else {
        const auto& b = std::get<Expr::Binary>(e.node);
        print_expr_rec(*b.lhs, prec, false, out);
        out += binary_op_text(b.op);
        print_expr_rec(*b.rhs, prec, true, out);
    }
    if (parens) out += ")";
}

const char* cmp_op_text(CmpOp op) {
    switch (op) {
        case CmpOp::eq: return " == ";
        case CmpOp::ne: return " != ";
        case CmpOp::lt: return " < ";
        case CmpOp::le: return " <= ";
        case CmpOp::gt: return " > ";
        case CmpOp::ge: return " >= ";
    }
    return "?";
}

// Predicate precedence: or 1, and 2, not/cmp atoms 3.
int pred_prec(const Pred& p) {
    if (std::holds_alternative<Pred::Or>(p.node)) return 1;
    if (std::holds_alternative<Pred::And>(p.node)) return 2;
    return 3;
}

void print_pred_rec(const Pred& p, int parent_prec, bool right_child, std::string& out) {
    const int prec = pred_prec(p);
    const bool parens = prec < parent_prec || (prec == parent_prec && right_child && prec < 3);
    if (parens) out += "(";
    if (const auto* c = std::get_if<Pred::Cmp>(&p.node)) {
        print_expr_rec(*c->lhs, 0, false, out);
        out += cmp_op_text(c->op);
        print_expr_rec(*c->rhs, 0, false, out);
    } else if (const auto* n = std::get_if<Pred::Not>(&p.node)) {
        // always parenthesized: unambiguous and cheap
        out += "!(";
        print_pred_rec(*n->operand, 0, false, out);
        out += ")";
    } else if (const auto* a = std::get_if<Pred::And>(&p.node)) {
        print_pred_rec(*a->lhs, prec, false, out);
        out += " && ";
        print_pred_rec(*a->rhs, prec, true, out);
    } else {
        const auto& o = std::get<Pred::Or>(p.node);
        print_pred_rec(*o.lhs, prec, false, out);
        out += " || ";
        print_pred_rec(*o.rhs, prec, true, out);
    }
    if (parens) out += ")";
}

void collect_vars(const Expr& e, std::vector<std::string>& out) {
    if (const auto* v = std::get_if<Expr::VarRef>(&e.node)) {
        out.push_back(v->name);
    } else if (const auto* n = std::get_if<Expr::Neg>(&e.node)) {
        collect_vars(*n->operand, out);
    } else if (const auto* b = std::get_if<Expr::Binary>(&e.node)) {
        collect_vars(*b->lhs, out);
        collect_vars(*b->rhs, out);
    }
}

void collect_vars(const Pred& p, std::vector<std::string>& out) {
    if (const auto* c = std::get_if<Pred::Cmp>(&p.node)) {
        collect_vars(*c->lhs, out);
        collect_vars(*c->rhs, out);
    } else if (const auto* n = std::get_if<Pred::Not>(&p.node)) {
        collect_vars(*n->operand, out);
    } else if (const auto* a = std::get_if<Pred::And>(&p.node)) {
        collect_vars(*a->lhs, out);
        collect_vars(*a->rhs, out);
    } else {
        const auto& o = std::get<Pred::Or>(p.node);
        collect_vars(*o.lhs, out);
        collect_vars(*o.rhs, out);
    }
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    print_expr_rec(e, 0, false, out);
    return out;
}

std::string print_pred(const Pred& p) {
    std::string out;
    print_pred_rec(p, 0, false, out);
    return out;
}

StateSet predicate_set(const VarSpace& space, const Pred& pred) {
    std::vector<std::string> vars;
    collect_vars(pred, vars);
    for (const auto& v : vars) {
        if (!space.var_index(v)) throw LookupError("unknown variable: " + v);
    }
    StateSet out(space.space());
    const int n = space.space()->size();
    for (int s = 0; s < n; ++s) {
        if (eval_pred(pred, space, space.decode(s))) out.insert(s);
    }
    return out;
}

namespace {

void print_command(const Command& c, std::string& out) {
    out += "  :: ";
    out += print_pred(*c.guard);
    out += " -> ";
    for (size_t i = 0; i < c.assignments.size(); ++i) {
        if (i) out += ", ";
        out += c.assignments[i].var;
        out += " := ";
        out += print_expr(*c.assignments[i].value);
    }
    out += "\n";
}

}  // namespace

std::string print_program(const Program& p) {
    std::string out = "space {";
    for (const VarDecl& v : p.space.vars()) {
        out += " " + v.name + ": " + std::to_string(v.lo) + ".." + std::to_string(v.hi) + ";";
    }
    out += " }\n";
    out += p.construct == Construct::alternative ? "if\n" : "do\n";
    for (const Command& c : p.commands) print_command(c, out);
    out += p.construct == Construct::alternative ? "fi\n" : "od\n";
    return out;
}

bool structurally_equal(const Program& a, const Program& b) {
    if (!(a.space == b.space) || a.construct != b.construct ||
        a.commands.size() != b.commands.size()) {
        return false;
    }
    for (size_t i = 0; i < a.commands.size(); ++i) {
        const Command& x = a.commands[i];
        const Command& y = b.commands[i];
        if (!structurally_equal(*x.guard, *y.guard) ||
            x.assignments.size() != y.assignments.size()) {
            return false;
        }
        for (size_t j = 0; j < x.assignments.size(); ++j) {
            if (x.assignments[j].var != y.assignments[j].var ||
                !structurally_equal(*x.assignments[j].value, *y.assignments[j].value)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace ndmech
