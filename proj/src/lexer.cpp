#include "sfcov/lexer.hpp"

#include <cctype>

namespace sfcov {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_part(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

// Two-character punctuators, longest match first. ">>" is intentionally
// absent so that nested generic closers lex as two tokens.
constexpr const char* kTwoCharPuncts[] = {
    "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
};

}  // namespace

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1;
    const std::size_t n = text.size();

    auto peek = [&](std::size_t k = 0) -> char { return i + k < n ? text[i + k] : '\0'; };

    while (i < n) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '/' && peek(1) == '/') {
            while (i < n && text[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && peek(1) == '*') {
            i += 2;
            while (i < n && !(text[i] == '*' && peek(1) == '/')) {
                if (text[i] == '\n') ++line;
                ++i;
            }
            if (i >= n) throw SyntaxError{line, "'*/'"};
            i += 2;
            continue;
        }

        Token t;
        t.offset = i;
        t.line = line;

        if (ident_start(c)) {
            std::size_t start = i;
            while (i < n && ident_part(text[i])) ++i;
            t.kind = Tok::Ident;
            t.text = std::string(text.substr(start, i - start));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            bool is_float = false;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i < n && text[i] == '.' && i + 1 < n &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                is_float = true;
                ++i;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            if (i < n && (text[i] == 'l' || text[i] == 'L')) ++i;
            else if (i < n && (text[i] == 'f' || text[i] == 'F' || text[i] == 'd' || text[i] == 'D')) {
                is_float = true;
                ++i;
            }
            t.kind = is_float ? Tok::FloatLit : Tok::IntLit;
            t.text = std::string(text.substr(start, i - start));
        } else if (c == '"') {
            std::size_t start = ++i;
            std::string value;
            while (i < n && text[i] != '"') {
                if (text[i] == '\\' && i + 1 < n) {
                    value.push_back(text[i]);
                    value.push_back(text[i + 1]);
                    i += 2;
                    continue;
                }
                if (text[i] == '\n') throw SyntaxError{line, "closing '\"'"};
                value.push_back(text[i]);
                ++i;
            }
            if (i >= n) throw SyntaxError{line, "closing '\"'"};
            ++i;
            (void)start;
            t.kind = Tok::StringLit;
            t.text = value;
        } else if (c == '\'') {
            std::size_t start = ++i;
            while (i < n && text[i] != '\'') {
                if (text[i] == '\\' && i + 1 < n) i += 2;
                else ++i;
            }
            if (i >= n) throw SyntaxError{line, "closing \"'\""};
            t.kind = Tok::CharLit;
            t.text = std::string(text.substr(start, i - start));
            ++i;
        } else {
            t.kind = Tok::Punct;
            std::string_view rest = text.substr(i);
            bool matched = false;
            for (const char* p : kTwoCharPuncts) {
                if (rest.size() >= 2 && rest[0] == p[0] && rest[1] == p[1]) {
                    t.text = p;
                    i += 2;
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                static const std::string kSingles = "{}()[];,.<>=+-*/%!&|^?:@~";
                if (kSingles.find(c) == std::string::npos)
                    throw SyntaxError{line, std::string("valid token, got '") + c + "'"};
                t.text = std::string(1, c);
                ++i;
            }
        }
        t.end = i;
        out.push_back(std::move(t));
    }

    Token end;
    end.kind = Tok::End;
    end.offset = n;
    end.end = n;
    end.line = line;
    out.push_back(end);
    return out;
}

}  // namespace sfcov
