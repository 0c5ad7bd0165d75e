#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sfcov {

enum class Tok {
    Ident,
    IntLit,
    FloatLit,
    StringLit,
    CharLit,
    Punct,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t offset = 0;
    std::size_t end = 0;
    int line = 1;

    bool is(Tok k) const { return kind == k; }
    bool is(Tok k, std::string_view t) const { return kind == k && text == t; }
    bool punct(std::string_view t) const { return is(Tok::Punct, t); }
    bool ident(std::string_view t) const { return is(Tok::Ident, t); }
};

/// Thrown on malformed input; parse_corpus converts these to diagnostics.
struct SyntaxError {
    int line;
    std::string expected;
};

/// Tokenizes Java-subset source. Comments and whitespace are skipped.
/// Note: '>' is always a single token so nested generics close cleanly;
/// shift operators are outside the accepted subset.
std::vector<Token> lex(std::string_view text);

}  // namespace sfcov
