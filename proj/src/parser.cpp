#include "chordalcad/parser.hpp"

#include <cctype>
#include <sstream>

namespace chordalcad {

ParseError::ParseError(std::string message, int line, int column, std::string expected)
    : std::runtime_error(std::move(message)), line_(line), column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { integer, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::integer: return "integer";
        case Tok::ident: return "identifier";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::end: return "end of line";
    }
    return "?";
}

class Lexer {
public:
    Lexer(std::string_view text, int line) : text_(text), line_(line) {}

    Token next() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) return {Tok::end, "", line_, col};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return {Tok::integer, std::string(text_.substr(start, pos_ - start)), line_, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return {Tok::ident, std::string(text_.substr(start, pos_ - start)), line_, col};
        }
        ++pos_;
        switch (c) {
            case '+': return {Tok::plus, "+", line_, col};
            case '-': return {Tok::minus, "-", line_, col};
            case '*': return {Tok::star, "*", line_, col};
            case '^': return {Tok::caret, "^", line_, col};
            case '(': return {Tok::lparen, "(", line_, col};
            case ')': return {Tok::rparen, ")", line_, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col,
                                 "integer, identifier, '+', '-', '*', '^', '(' or ')'");
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
};

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' integer)*
// base   := integer | identifier | '(' expr ')'
class LineParser {
public:
    LineParser(std::string_view text, int line, VarTable& table)
        : lexer_(text, line), table_(table) {
        advance();
    }

    Poly parse() {
        Poly p = expr();
        expect(Tok::end, "'+', '-', '*', '^' or end of line");
        return p;
    }

private:
    Lexer lexer_;
    VarTable& table_;
    Token cur_{Tok::end, "", 0, 0};

    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        std::ostringstream os;
        os << "unexpected " << tok_name(cur_.kind);
        if (!cur_.text.empty()) os << " '" << cur_.text << "'";
        os << ", expected " << expected;
        throw ParseError(os.str(), cur_.line, cur_.col, expected);
    }

    void expect(Tok t, const std::string& expected) {
        if (cur_.kind != t) fail(expected);
    }

    Poly expr() {
        bool negate = false;
        if (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            negate = cur_.kind == Tok::minus;
            advance();
        }
        Poly p = term();
        if (negate) p = -p;
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            bool sub = cur_.kind == Tok::minus;
            advance();
            Poly q = term();
            p = sub ? p - q : p + q;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (cur_.kind == Tok::star) {
            advance();
            p *= factor();
        }
        // two adjacent operands signal a forgotten '*'
        if (cur_.kind == Tok::ident || cur_.kind == Tok::integer || cur_.kind == Tok::lparen)
            fail("'*' (multiplication must be explicit)");
        return p;
    }

    Poly factor() {
        Poly p = base();
        while (cur_.kind == Tok::caret) {
            advance();
            expect(Tok::integer, "nonnegative integer exponent");
            unsigned long e = std::stoul(cur_.text);
            if (e > 1000)
                throw ParseError("exponent too large", cur_.line, cur_.col, "exponent <= 1000");
            advance();
            p = p.pow(static_cast<std::uint32_t>(e));
        }
        return p;
    }

    Poly base() {
        switch (cur_.kind) {
            case Tok::integer: {
                Poly p = Poly::constant(BigInt(cur_.text));
                advance();
                return p;
            }
            case Tok::ident: {
                Poly p = Poly::variable(table_.intern(cur_.text));
                advance();
                return p;
            }
            case Tok::lparen: {
                advance();
                Poly p = expr();
                expect(Tok::rparen, "')'");
                advance();
                return p;
            }
            default:
                fail("integer, identifier or '('");
        }
    }
};

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Poly parse_poly(std::string_view text, VarTable& table) {
    return LineParser(text, 1, table).parse();
}

InputSystem parse_system(std::string_view text, std::string_view source_name) {
    InputSystem out;
    out.source = std::string(source_name);

    int line_no = 0;
    std::size_t pos = 0;
    bool saw_header_zone = true;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        ++line_no;

        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (saw_header_zone) {
            // optional "# order: x1>x2>..." directive ahead of the polynomials
            std::string_view t = raw;
            auto first = t.find_first_not_of(" \t");
            if (first != std::string_view::npos && t[first] == '#') {
                std::string_view body = t.substr(first + 1);
                auto key = body.find("order:");
                if (key != std::string_view::npos && !out.declared_order) {
                    std::string_view ord = body.substr(key + 6);
                    auto s = ord.find_first_not_of(" \t");
                    if (s != std::string_view::npos)
                        out.declared_order = std::string(ord.substr(s));
                }
            } else if (first != std::string_view::npos) {
                saw_header_zone = false;
            }
        }

        std::string_view body = strip_comment(raw);
        if (!blank(body)) {
            out.system.polys.insert(LineParser(body, line_no, out.system.table).parse());
        }

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

}  // namespace chordalcad
