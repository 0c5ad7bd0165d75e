#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sfcov {

/// Byte range of a node in its source file plus the 1-based line where it starts.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    int line = 0;
};

enum class TypeKind {
    Unresolved,     // unknown external type; opaque leaf in the type graph
    Primitive,      // primitives, their boxed wrappers, String, void
    Class,          // resolved to a class declared in the corpus
    TypeParameter,  // generic parameter of the declaring class (or an enclosing one)
    Array,          // single-dimension array; args[0] holds the element type
    Container,      // library collection (List, Set, Map, ...); args hold type arguments
};

/// A type as written in source. The parser fills `name`, `args` and the Array
/// structure; resolve_types assigns every other kind.
struct TypeRef {
    TypeKind kind = TypeKind::Unresolved;
    std::string name;           // as written, without type arguments: "int", "Node", "List"
    std::string target;         // qualified corpus class (Class) or declaring class (TypeParameter)
    std::vector<TypeRef> args;  // generic arguments; for Array, exactly the element type

    bool is_array() const { return kind == TypeKind::Array; }
    const TypeRef* element() const { return is_array() && !args.empty() ? &args[0] : nullptr; }
};

enum class ExprKind {
    FieldAccess,  // name = field; children[0] = receiver
    MethodCall,   // name = callee; children[0] = receiver iff has_receiver, rest are args
    Identifier,   // name = identifier
    This,
    Binary,       // name = operator; children[0], children[1]
    Unary,        // name = operator (prefix) or "post++"/"post--"; children[0]
    Literal,      // name = literal text
    ArrayIndex,   // children[0] = array, children[1] = index
    Assignment,   // name = operator ("=", "+=", ...); children[0] = lhs, children[1] = rhs
    Conditional,  // children[0] = cond, children[1] = then, children[2] = else
    New,          // name = constructed type name; new_type set; children = ctor args or array size
};

struct Expr {
    ExprKind kind = ExprKind::Literal;
    Span span;
    std::string name;
    std::vector<Expr> children;
    bool has_receiver = false;  // MethodCall only
    bool new_array = false;     // New only: array creation, children[0] = size
    TypeRef new_type;           // New only

    std::vector<const Expr*> args() const {
        std::vector<const Expr*> out;
        std::size_t start = (kind == ExprKind::MethodCall && has_receiver) ? 1 : 0;
        for (std::size_t i = start; i < children.size(); ++i) out.push_back(&children[i]);
        return out;
    }
    const Expr* receiver() const {
        if (kind == ExprKind::FieldAccess) return &children[0];
        if (kind == ExprKind::MethodCall && has_receiver) return &children[0];
        return nullptr;
    }
};

enum class StmtKind {
    Block,      // body
    If,         // exprs[0] = condition, body = then, orelse = else
    For,        // init = init statement(s), exprs[0] = condition (optional), update = update exprs, body
    ForEach,    // decl_type + declared_name, exprs[0] = iterated expression, body
    While,      // exprs[0] = condition, body
    DoWhile,    // exprs[0] = condition, body
    Return,     // exprs[0] = value (optional)
    ExprStmt,   // exprs[0]
    LocalDecl,  // decl_type; declarators
};

struct Declarator {
    std::string name;
    std::optional<Expr> init;
};

struct Stmt {
    StmtKind kind = StmtKind::Block;
    Span span;
    std::vector<Expr> exprs;
    std::vector<Expr> update;  // For only
    std::vector<Stmt> init;    // For only
    std::vector<Stmt> body;
    std::vector<Stmt> orelse;  // If only
    TypeRef decl_type;         // LocalDecl / ForEach
    std::string declared_name; // ForEach loop variable
    std::vector<Declarator> declarators;  // LocalDecl

    bool is_loop() const {
        return kind == StmtKind::For || kind == StmtKind::ForEach ||
               kind == StmtKind::While || kind == StmtKind::DoWhile;
    }
};

struct Param {
    TypeRef type;
    std::string name;
};

struct MethodDecl {
    std::string name;
    TypeRef return_type;
    std::vector<Param> params;
    std::optional<Stmt> body;  // absent for abstract methods
    bool is_static = false;
    bool is_constructor = false;
    std::vector<std::string> annotations;  // simple names, e.g. "Test"
    Span span;

    int arity() const { return static_cast<int>(params.size()); }
    bool returns_boolean() const {
        return return_type.name == "boolean" || return_type.name == "Boolean";
    }
};

struct FieldDecl {
    std::string name;
    TypeRef type;
    bool is_static = false;
    Span span;
};

struct ClassDecl {
    std::string name;       // simple name
    std::string qualified;  // Outer.Inner for nested classes
    std::vector<std::string> type_params;
    std::optional<TypeRef> superclass;
    std::vector<FieldDecl> fields;
    std::vector<MethodDecl> methods;
    std::vector<ClassDecl> inner;
    std::string file;  // path of the declaring source file
    Span span;

    /// True iff the class has no instance fields and all methods are static.
    bool static_only() const {
        for (const auto& f : fields)
            if (!f.is_static) return false;
        for (const auto& m : methods)
            if (!m.is_static && !m.is_constructor) return false;
        return true;
    }

    const FieldDecl* find_field(const std::string& field_name) const {
        for (const auto& f : fields)
            if (f.name == field_name) return &f;
        return nullptr;
    }

    const MethodDecl* find_method(const std::string& method_name, int arity) const {
        for (const auto& m : methods)
            if (m.name == method_name && m.arity() == arity) return &m;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// Tree walking helpers shared by the analyses.

/// Visits `e` and all sub-expressions in lexical order.
template <typename Fn>
void walk_expr(const Expr& e, Fn&& fn) {
    fn(e);
    for (const auto& c : e.children) walk_expr(c, fn);
}

/// Visits every statement in the subtree rooted at `s`, including `s` itself.
/// `in_loop` reports whether the visited statement lies inside a loop body
/// relative to the walk's starting point.
template <typename Fn>
void walk_stmts(const Stmt& s, Fn&& fn, bool in_loop = false) {
    fn(s, in_loop);
    for (const auto& c : s.init) walk_stmts(c, fn, in_loop);
    bool body_in_loop = in_loop || s.is_loop();
    for (const auto& c : s.body) walk_stmts(c, fn, body_in_loop);
    for (const auto& c : s.orelse) walk_stmts(c, fn, in_loop);
}

/// Visits every expression hanging off the single statement `s` (not its
/// children statements). Expressions a loop re-evaluates on every iteration
/// (conditions, for-updates, the ForEach iterated expression) are reported
/// with in_loop = true; loop-init expressions run once and keep the outer
/// context.
template <typename Fn>
void stmt_exprs(const Stmt& s, bool stmt_in_loop, Fn&& fn) {
    bool per_iteration = stmt_in_loop || s.is_loop();
    for (const auto& e : s.exprs) fn(e, s.is_loop() ? per_iteration : stmt_in_loop);
    for (const auto& e : s.update) fn(e, per_iteration);
    for (const auto& d : s.declarators)
        if (d.init) fn(*d.init, stmt_in_loop);
}

}  // namespace sfcov
