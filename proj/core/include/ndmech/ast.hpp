#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ndmech/state_set.hpp"
#include "ndmech/varspace.hpp"

namespace ndmech {

// Abstract syntax for guards, postconditions and assignment right-hand
// sides. Trees are immutable and shared; evaluation over a concrete state
// is total (64-bit intermediates, no overflow at the scales the variable
// ranges allow).

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp { add, sub, mul };

struct Expr {
    struct IntLit {
        std::int64_t value;
    };
    struct VarRef {
        std::string name;
    };
    struct Neg {
        ExprPtr operand;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    std::variant<IntLit, VarRef, Neg, Binary> node;
};

ExprPtr make_int(std::int64_t value);
ExprPtr make_var(std::string name);
ExprPtr make_neg(ExprPtr operand);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);

enum class CmpOp { eq, ne, lt, le, gt, ge };

struct Pred;
using PredPtr = std::shared_ptr<const Pred>;

struct Pred {
    struct Cmp {
        CmpOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct Not {
        PredPtr operand;
    };
    struct And {
        PredPtr lhs;
        PredPtr rhs;
    };
    struct Or {
        PredPtr lhs;
        PredPtr rhs;
    };
    std::variant<Cmp, Not, And, Or> node;
};

PredPtr make_cmp(CmpOp op, ExprPtr lhs, ExprPtr rhs);
PredPtr make_not(PredPtr operand);
PredPtr make_and(PredPtr lhs, PredPtr rhs);
PredPtr make_or(PredPtr lhs, PredPtr rhs);

bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Pred& a, const Pred& b);

/// Throws LookupError on variables not declared in `space`.
std::int64_t eval_expr(const Expr& e, const VarSpace& space,
                       const std::vector<std::int64_t>& values);
bool eval_pred(const Pred& p, const VarSpace& space, const std::vector<std::int64_t>& values);

// Printers emit the concrete grammar with minimal parentheses, chosen so
// that reparsing reproduces the tree shape exactly.
std::string print_expr(const Expr& e);
std::string print_pred(const Pred& p);

/// {s | pred holds at s}, by exhaustive evaluation over the product.
/// Validates variable references up front (short-circuit evaluation would
/// otherwise mask unknown names on some states).
StateSet predicate_set(const VarSpace& space, const Pred& pred);

enum class Construct { alternative, repetitive };  // if..fi / do..od

struct Assignment {
    std::string var;
    ExprPtr value;
};

/// One guarded command: guard -> simultaneous assignments. Each variable
/// is assigned at most once; unassigned variables keep their value.
struct Command {
    PredPtr guard;
    std::vector<Assignment> assignments;
};

struct Program {
    VarSpace space;
    Construct construct;
    std::vector<Command> commands;
};

bool structurally_equal(const Program& a, const Program& b);
std::string print_program(const Program& p);

}  // namespace ndmech
