#include "sfcov/parser.hpp"

#include <algorithm>
#include <set>

#include "sfcov/lexer.hpp"

namespace sfcov {

namespace {

const std::set<std::string> kModifiers = {
    "public", "private",   "protected",    "static", "final",    "abstract",
    "native", "transient", "synchronized", "volatile", "strictfp",
};

const std::set<std::string> kPrimitiveNames = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
};

const std::set<std::string> kStatementKeywords = {
    "if", "else", "for", "while", "do", "return", "class",
    "new", "this", "true", "false", "null",
};

// Statements outside the accepted grammar subset.
const std::set<std::string> kRejectedStatements = {
    "break", "continue", "throw", "try", "switch", "case", "assert",
};

struct Modifiers {
    bool is_static = false;
    bool is_abstract = false;
};

class Parser {
public:
    Parser(std::string path, std::vector<Token> tokens)
        : path_(std::move(path)), toks_(std::move(tokens)) {}

    std::vector<ClassDecl> run() {
        skip_header();
        std::vector<ClassDecl> classes;
        while (!cur().is(Tok::End)) {
            auto annotations = parse_annotations();
            Modifiers mods = parse_modifiers();
            (void)mods;
            (void)annotations;
            if (!cur().ident("class")) fail("'class'");
            classes.push_back(parse_class(""));
        }
        return classes;
    }

private:
    std::string path_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    const Token& at(std::size_t k) const {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
    }
    const Token& prev() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }
    void advance() {
        if (pos_ + 1 < toks_.size()) ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError{cur().line, expected};
    }

    bool accept_punct(std::string_view p) {
        if (cur().punct(p)) {
            advance();
            return true;
        }
        return false;
    }
    void expect_punct(std::string_view p) {
        if (!accept_punct(p)) fail(std::string("'") + std::string(p) + "'");
    }
    bool accept_ident(std::string_view id) {
        if (cur().ident(id)) {
            advance();
            return true;
        }
        return false;
    }
    std::string expect_name() {
        if (!cur().is(Tok::Ident)) fail("identifier");
        std::string n = cur().text;
        advance();
        return n;
    }

    Span span_from(std::size_t start_tok) const {
        Span s;
        s.begin = toks_[start_tok].offset;
        s.end = prev().end;
        s.line = toks_[start_tok].line;
        return s;
    }

    // -- headers -----------------------------------------------------------

    void skip_header() {
        if (cur().ident("package")) {
            while (!cur().is(Tok::End) && !cur().punct(";")) advance();
            expect_punct(";");
        }
        while (cur().ident("import")) {
            while (!cur().is(Tok::End) && !cur().punct(";")) advance();
            expect_punct(";");
        }
    }

    std::vector<std::string> parse_annotations() {
        std::vector<std::string> names;
        while (cur().punct("@")) {
            advance();
            std::string name = expect_name();
            while (accept_punct(".")) name = expect_name();  // keep the simple name
            names.push_back(name);
            if (cur().punct("(")) skip_balanced("(", ")");
        }
        return names;
    }

    void skip_balanced(std::string_view open, std::string_view close) {
        expect_punct(open);
        int depth = 1;
        while (depth > 0) {
            if (cur().is(Tok::End)) fail(std::string("'") + std::string(close) + "'");
            if (cur().punct(open)) ++depth;
            else if (cur().punct(close)) --depth;
            advance();
        }
    }

    Modifiers parse_modifiers() {
        Modifiers m;
        while (cur().is(Tok::Ident) && kModifiers.count(cur().text)) {
            if (cur().text == "static") m.is_static = true;
            if (cur().text == "abstract") m.is_abstract = true;
            advance();
        }
        return m;
    }

    // -- types -------------------------------------------------------------

    /// Type without the trailing array suffix (used by `new`).
    TypeRef parse_type_base() {
        TypeRef t;
        if (cur().is(Tok::Ident) && kPrimitiveNames.count(cur().text)) {
            t.name = cur().text;
            advance();
            return t;
        }
        t.name = expect_name();
        while (cur().punct(".") && at(1).is(Tok::Ident) && !kStatementKeywords.count(at(1).text)) {
            // Qualified type name; resolution handles the dotted form.
            advance();
            t.name += "." + expect_name();
        }
        if (cur().punct("<")) {
            advance();
            if (!accept_punct(">")) {  // diamond
                do {
                    t.args.push_back(parse_type());
                } while (accept_punct(","));
                expect_punct(">");
            }
        }
        return t;
    }

    TypeRef parse_type() {
        TypeRef t = parse_type_base();
        if (cur().punct("[")) {
            advance();
            expect_punct("]");
            TypeRef arr;
            arr.kind = TypeKind::Array;
            arr.name = t.name + "[]";
            arr.args.push_back(std::move(t));
            return arr;
        }
        return t;
    }

    // -- classes -----------------------------------------------------------

    ClassDecl parse_class(const std::string& outer) {
        std::size_t start = pos_;
        if (!accept_ident("class")) fail("'class'");
        ClassDecl cls;
        cls.name = expect_name();
        cls.qualified = outer.empty() ? cls.name : outer + "." + cls.name;
        cls.file = path_;
        if (cur().punct("<")) {
            advance();
            do {
                cls.type_params.push_back(expect_name());
                if (accept_ident("extends")) parse_type();  // bound, ignored
            } while (accept_punct(","));
            expect_punct(">");
        }
        if (accept_ident("extends")) cls.superclass = parse_type();
        if (accept_ident("implements")) {
            do {
                parse_type();  // interfaces carry no fields; ignored
            } while (accept_punct(","));
        }
        expect_punct("{");
        while (!accept_punct("}")) {
            if (cur().is(Tok::End)) fail("'}'");
            if (accept_punct(";")) continue;
            parse_member(cls);
        }
        cls.span = span_from(start);
        return cls;
    }

    void parse_member(ClassDecl& cls) {
        auto annotations = parse_annotations();
        Modifiers mods = parse_modifiers();

        if (cur().ident("class")) {
            cls.inner.push_back(parse_class(cls.qualified));
            return;
        }

        std::size_t start = pos_;

        // Constructor: the class's simple name followed directly by '('.
        if (cur().ident(cls.name) && at(1).punct("(")) {
            MethodDecl m;
            m.name = cls.name;
            m.is_constructor = true;
            m.is_static = false;
            m.annotations = annotations;
            m.return_type.name = "void";
            advance();
            m.params = parse_params();
            skip_throws();
            m.body = parse_block();
            m.span = span_from(start);
            cls.methods.push_back(std::move(m));
            return;
        }

        // Generic method type parameters, ignored beyond parsing.
        if (cur().punct("<")) skip_balanced("<", ">");

        TypeRef type = parse_type();
        std::string name = expect_name();

        if (cur().punct("(")) {
            MethodDecl m;
            m.name = std::move(name);
            m.return_type = std::move(type);
            m.is_static = mods.is_static;
            m.annotations = std::move(annotations);
            m.params = parse_params();
            skip_throws();
            if (accept_punct(";")) {
                // abstract / body-less method
            } else {
                m.body = parse_block();
            }
            m.span = span_from(start);
            cls.methods.push_back(std::move(m));
            return;
        }

        // Field declaration, possibly with several declarators.
        while (true) {
            FieldDecl f;
            f.name = name;
            f.type = type;
            f.is_static = mods.is_static;
            f.span = span_from(start);
            if (cls.find_field(f.name))
                throw SyntaxError{cur().line, "unique field name (duplicate '" + f.name + "')"};
            cls.fields.push_back(std::move(f));
            if (accept_punct("=")) parse_expression();  // initializer value is not modeled
            if (accept_punct(",")) {
                name = expect_name();
                continue;
            }
            break;
        }
        expect_punct(";");
    }

    std::vector<Param> parse_params() {
        expect_punct("(");
        std::vector<Param> params;
        if (!cur().punct(")")) {
            do {
                accept_ident("final");
                Param p;
                p.type = parse_type();
                p.name = expect_name();
                params.push_back(std::move(p));
            } while (accept_punct(","));
        }
        expect_punct(")");
        return params;
    }

    void skip_throws() {
        if (accept_ident("throws")) {
            do {
                parse_type();
            } while (accept_punct(","));
        }
    }

    // -- statements ----------------------------------------------------------

    Stmt parse_block() {
        std::size_t start = pos_;
        expect_punct("{");
        Stmt b;
        b.kind = StmtKind::Block;
        while (!accept_punct("}")) {
            if (cur().is(Tok::End)) fail("'}'");
            if (accept_punct(";")) continue;
            b.body.push_back(parse_statement());
        }
        b.span = span_from(start);
        return b;
    }

    Stmt parse_statement() {
        std::size_t start = pos_;
        if (cur().punct("{")) return parse_block();
        if (cur().ident("if")) return parse_if();
        if (cur().ident("while")) return parse_while();
        if (cur().ident("do")) return parse_do_while();
        if (cur().ident("for")) return parse_for();
        if (cur().ident("return")) {
            advance();
            Stmt s;
            s.kind = StmtKind::Return;
            if (!cur().punct(";")) s.exprs.push_back(parse_expression());
            expect_punct(";");
            s.span = span_from(start);
            return s;
        }

        if (auto decl = try_parse_local_decl()) {
            expect_punct(";");
            decl->span = span_from(start);
            return std::move(*decl);
        }

        Stmt s;
        s.kind = StmtKind::ExprStmt;
        s.exprs.push_back(parse_expression());
        expect_punct(";");
        s.span = span_from(start);
        return s;
    }

    Stmt parse_if() {
        std::size_t start = pos_;
        accept_ident("if");
        expect_punct("(");
        Stmt s;
        s.kind = StmtKind::If;
        s.exprs.push_back(parse_expression());
        expect_punct(")");
        s.body.push_back(parse_statement());
        if (accept_ident("else")) s.orelse.push_back(parse_statement());
        s.span = span_from(start);
        return s;
    }

    Stmt parse_while() {
        std::size_t start = pos_;
        accept_ident("while");
        expect_punct("(");
        Stmt s;
        s.kind = StmtKind::While;
        s.exprs.push_back(parse_expression());
        expect_punct(")");
        s.body.push_back(parse_statement());
        s.span = span_from(start);
        return s;
    }

    Stmt parse_do_while() {
        std::size_t start = pos_;
        accept_ident("do");
        Stmt s;
        s.kind = StmtKind::DoWhile;
        s.body.push_back(parse_statement());
        if (!accept_ident("while")) fail("'while'");
        expect_punct("(");
        s.exprs.push_back(parse_expression());
        expect_punct(")");
        expect_punct(";");
        s.span = span_from(start);
        return s;
    }

    Stmt parse_for() {
        std::size_t start = pos_;
        accept_ident("for");
        expect_punct("(");

        // Enhanced for: "(Type ident : expr)".
        {
            std::size_t mark = pos_;
            try {
                accept_ident("final");
                TypeRef t = parse_type();
                std::string var = expect_name();
                if (accept_punct(":")) {
                    Stmt s;
                    s.kind = StmtKind::ForEach;
                    s.decl_type = std::move(t);
                    s.declared_name = std::move(var);
                    s.exprs.push_back(parse_expression());
                    expect_punct(")");
                    s.body.push_back(parse_statement());
                    s.span = span_from(start);
                    return s;
                }
            } catch (const SyntaxError&) {
            }
            pos_ = mark;
        }

        Stmt s;
        s.kind = StmtKind::For;
        if (!cur().punct(";")) {
            if (auto decl = try_parse_local_decl()) {
                s.init.push_back(std::move(*decl));
            } else {
                Stmt init;
                init.kind = StmtKind::ExprStmt;
                std::size_t istart = pos_;
                init.exprs.push_back(parse_expression());
                while (accept_punct(",")) init.exprs.push_back(parse_expression());
                init.span = span_from(istart);
                s.init.push_back(std::move(init));
            }
        }
        expect_punct(";");
        if (!cur().punct(";")) s.exprs.push_back(parse_expression());
        expect_punct(";");
        if (!cur().punct(")")) {
            do {
                s.update.push_back(parse_expression());
            } while (accept_punct(","));
        }
        expect_punct(")");
        s.body.push_back(parse_statement());
        s.span = span_from(start);
        return s;
    }

    /// Speculatively parses "Type ident [= expr] (, ident [= expr])*".
    /// Restores the token position and returns nullopt when the statement is
    /// not a declaration.
    std::optional<Stmt> try_parse_local_decl() {
        std::size_t mark = pos_;
        std::size_t start = pos_;
        try {
            accept_ident("final");
            if (cur().is(Tok::Ident) && kStatementKeywords.count(cur().text)) {
                pos_ = mark;
                return std::nullopt;
            }
            TypeRef t = parse_type();
            if (!cur().is(Tok::Ident)) {
                pos_ = mark;
                return std::nullopt;
            }
            std::string name = expect_name();
            if (!cur().punct("=") && !cur().punct(",") && !cur().punct(";")) {
                pos_ = mark;
                return std::nullopt;
            }
            Stmt s;
            s.kind = StmtKind::LocalDecl;
            s.decl_type = std::move(t);
            while (true) {
                Declarator d;
                d.name = name;
                if (accept_punct("=")) d.init = parse_expression();
                s.declarators.push_back(std::move(d));
                if (accept_punct(",")) {
                    name = expect_name();
                    continue;
                }
                break;
            }
            s.span = span_from(start);
            return s;
        } catch (const SyntaxError&) {
            pos_ = mark;
            return std::nullopt;
        }
    }

    // -- expressions ---------------------------------------------------------

    Expr parse_expression() { return parse_assignment(); }

    Expr parse_assignment() {
        std::size_t start = pos_;
        Expr lhs = parse_conditional();
        static const char* kAssignOps[] = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^="};
        for (const char* op : kAssignOps) {
            if (cur().punct(op)) {
                advance();
                Expr rhs = parse_assignment();
                Expr e;
                e.kind = ExprKind::Assignment;
                e.name = op;
                e.children.push_back(std::move(lhs));
                e.children.push_back(std::move(rhs));
                e.span = span_from(start);
                return e;
            }
        }
        return lhs;
    }

    Expr parse_conditional() {
        std::size_t start = pos_;
        Expr cond = parse_binary(0);
        if (cur().punct("?")) {
            advance();
            Expr e;
            e.kind = ExprKind::Conditional;
            e.children.push_back(std::move(cond));
            e.children.push_back(parse_expression());
            expect_punct(":");
            e.children.push_back(parse_conditional());
            e.span = span_from(start);
            return e;
        }
        return cond;
    }

    // Binary operators by precedence level, loosest first.
    static const std::vector<std::vector<std::string>>& binary_levels() {
        static const std::vector<std::vector<std::string>> levels = {
            {"||"},
            {"&&"},
            {"|"},
            {"^"},
            {"&"},
            {"==", "!="},
            {"<", ">", "<=", ">="},
            {"+", "-"},
            {"*", "/", "%"},
        };
        return levels;
    }

    Expr parse_binary(std::size_t level) {
        if (level >= binary_levels().size()) return parse_unary();
        std::size_t start = pos_;
        Expr lhs = parse_binary(level + 1);
        while (true) {
            bool matched = false;
            for (const auto& op : binary_levels()[level]) {
                if (cur().punct(op)) {
                    advance();
                    Expr rhs = parse_binary(level + 1);
                    Expr e;
                    e.kind = ExprKind::Binary;
                    e.name = op;
                    e.children.push_back(std::move(lhs));
                    e.children.push_back(std::move(rhs));
                    e.span = span_from(start);
                    lhs = std::move(e);
                    matched = true;
                    break;
                }
            }
            if (!matched) break;
        }
        return lhs;
    }

    Expr parse_unary() {
        std::size_t start = pos_;
        static const char* kUnaryOps[] = {"!", "-", "+", "~", "++", "--"};
        for (const char* op : kUnaryOps) {
            if (cur().punct(op)) {
                advance();
                Expr e;
                e.kind = ExprKind::Unary;
                e.name = op;
                e.children.push_back(parse_unary());
                e.span = span_from(start);
                return e;
            }
        }
        return parse_postfix();
    }

    Expr parse_postfix() {
        std::size_t start = pos_;
        Expr e = parse_primary();
        while (true) {
            if (cur().punct(".")) {
                advance();
                std::string member = expect_name();
                if (cur().punct("(")) {
                    Expr call;
                    call.kind = ExprKind::MethodCall;
                    call.name = std::move(member);
                    call.has_receiver = true;
                    call.children.push_back(std::move(e));
                    parse_call_args(call);
                    call.span = span_from(start);
                    e = std::move(call);
                } else {
                    Expr fa;
                    fa.kind = ExprKind::FieldAccess;
                    fa.name = std::move(member);
                    fa.children.push_back(std::move(e));
                    fa.span = span_from(start);
                    e = std::move(fa);
                }
            } else if (cur().punct("[")) {
                advance();
                Expr ix;
                ix.kind = ExprKind::ArrayIndex;
                ix.children.push_back(std::move(e));
                ix.children.push_back(parse_expression());
                expect_punct("]");
                ix.span = span_from(start);
                e = std::move(ix);
            } else if (cur().punct("++") || cur().punct("--")) {
                Expr u;
                u.kind = ExprKind::Unary;
                u.name = "post" + cur().text;
                advance();
                u.children.push_back(std::move(e));
                u.span = span_from(start);
                e = std::move(u);
            } else {
                break;
            }
        }
        return e;
    }

    void parse_call_args(Expr& call) {
        expect_punct("(");
        if (!cur().punct(")")) {
            do {
                call.children.push_back(parse_expression());
            } while (accept_punct(","));
        }
        expect_punct(")");
    }

    Expr parse_primary() {
        std::size_t start = pos_;
        const Token& t = cur();
        if (t.is(Tok::IntLit) || t.is(Tok::FloatLit) || t.is(Tok::StringLit) || t.is(Tok::CharLit)) {
            Expr e;
            e.kind = ExprKind::Literal;
            e.name = t.text;
            advance();
            e.span = span_from(start);
            return e;
        }
        if (t.ident("true") || t.ident("false") || t.ident("null")) {
            Expr e;
            e.kind = ExprKind::Literal;
            e.name = t.text;
            advance();
            e.span = span_from(start);
            return e;
        }
        if (t.ident("this")) {
            Expr e;
            e.kind = ExprKind::This;
            e.name = "this";
            advance();
            e.span = span_from(start);
            return e;
        }
        if (t.ident("new")) {
            advance();
            Expr e;
            e.kind = ExprKind::New;
            e.new_type = parse_type_base();
            e.name = e.new_type.name;
            if (cur().punct("[")) {
                advance();
                e.new_array = true;
                e.children.push_back(parse_expression());
                expect_punct("]");
                TypeRef arr;
                arr.kind = TypeKind::Array;
                arr.name = e.new_type.name + "[]";
                arr.args.push_back(std::move(e.new_type));
                e.new_type = std::move(arr);
            } else {
                parse_call_args(e);
            }
            e.span = span_from(start);
            return e;
        }
        if (t.punct("(")) {
            advance();
            Expr e = parse_expression();
            expect_punct(")");
            return e;
        }
        if (t.is(Tok::Ident)) {
            std::string name = expect_name();
            if (cur().punct("(")) {
                Expr call;
                call.kind = ExprKind::MethodCall;
                call.name = std::move(name);
                call.has_receiver = false;
                parse_call_args(call);
                call.span = span_from(start);
                return call;
            }
            Expr e;
            e.kind = ExprKind::Identifier;
            e.name = std::move(name);
            e.span = span_from(start);
            return e;
        }
        fail("expression");
    }
};

}  // namespace

std::vector<ClassDecl> parse_file(const std::string& path, std::string_view text) {
    Parser p(path, lex(text));
    return p.run();
}

}  // namespace sfcov
