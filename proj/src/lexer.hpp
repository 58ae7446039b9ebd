#pragma once

// Internal tokenizer shared by the polynomial, K-class and motive parsers.

#include <cctype>
#include <string>

#include "chowmot/errors.hpp"

namespace chowmot::detail {

struct Token {
    enum class Kind {
        Integer,
        Ident,
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        LParen,
        RParen,
        Comma,
        End,
    };

    Kind kind = Kind::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string input) : input_(std::move(input)) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    /// Consumes a token of the given kind or fails naming the actual one.
    Token expect(Token::Kind kind, const std::string& what) {
        if (current_.kind != kind) {
            throw ParseError("expected " + what + ", found " + describe(current_),
                             current_.pos);
        }
        return next();
    }

    static std::string describe(const Token& t) {
        if (t.kind == Token::Kind::End) return "end of input";
        return "'" + t.text + "'";
    }

private:
    void advance() {
        while (pos_ < input_.size() &&
               std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
        current_.pos = pos_;
        if (pos_ >= input_.size()) {
            current_.kind = Token::Kind::End;
            current_.text.clear();
            return;
        }
        char c = input_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < input_.size() &&
                   std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
                ++pos_;
            }
            current_.kind = Token::Kind::Integer;
            current_.text = input_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < input_.size() &&
                   (std::isalnum(static_cast<unsigned char>(input_[pos_])) ||
                    input_[pos_] == '_')) {
                ++pos_;
            }
            current_.kind = Token::Kind::Ident;
            current_.text = input_.substr(start, pos_ - start);
            return;
        }
        current_.text = std::string(1, c);
        ++pos_;
        switch (c) {
            case '+': current_.kind = Token::Kind::Plus; return;
            case '-': current_.kind = Token::Kind::Minus; return;
            case '*': current_.kind = Token::Kind::Star; return;
            case '/': current_.kind = Token::Kind::Slash; return;
            case '^': current_.kind = Token::Kind::Caret; return;
            case '(': current_.kind = Token::Kind::LParen; return;
            case ')': current_.kind = Token::Kind::RParen; return;
            case ',': current_.kind = Token::Kind::Comma; return;
            default:
                throw ParseError("unexpected character '" + current_.text + "'",
                                 current_.pos);
        }
    }

    std::string input_;
    std::size_t pos_ = 0;
    Token current_;
};

}  // namespace chowmot::detail
