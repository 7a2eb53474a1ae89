#include "galg/parse.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace galg {

namespace {

// ---- printing ---------------------------------------------------------------

// the standard word itself, so reparsing the product reproduces the monomial
std::string mono_str(const GAlgebra& A, const ExpVec& e) {
    std::ostringstream os;
    bool first = true;
    for (int i = A.ngens() - 1; i >= 0; --i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        os << A.name(i);
        if (e[i] > 1) os << '^' << e[i];
        first = false;
    }
    return os.str();
}

}  // namespace

std::string poly_str(const GAlgebra& A, const NcPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const NcTerm& t : f.terms()) {
        ParamRat c = t.coef;
        bool neg = c.content().sign() < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string m = mono_str(A, t.mono);
        if (m.empty()) {
            os << (c.is_sum() ? "(" + c.str() + ")" : c.str());
        } else if (c.is_one()) {
            os << m;
        } else {
            os << (c.is_sum() ? "(" + c.str() + ")" : c.str()) << '*' << m;
        }
    }
    return os.str();
}

// ---- parsing ----------------------------------------------------------------

namespace {

struct Token {
    enum Kind { End, Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::End, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = {Token::Int, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Ident, s_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+"}; return;
            case '-': tok_ = {Token::Minus, "-"}; return;
            case '*': tok_ = {Token::Star, "*"}; return;
            case '/': tok_ = {Token::Slash, "/"}; return;
            case '^': tok_ = {Token::Caret, "^"}; return;
            case '(': tok_ = {Token::LParen, "("}; return;
            case ')': tok_ = {Token::RParen, ")"}; return;
            default: throw std::invalid_argument(std::string("parse: unexpected character '") + c + "'");
        }
    }
    const std::string& s_;
    size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const GAlgebra& A, const std::string& text) : A_(A), lex_(text) {}

    NcPoly parse() {
        NcPoly v = expr();
        if (lex_.peek().kind != Token::End) throw std::invalid_argument("parse: trailing input");
        return v;
    }

private:
    NcPoly expr() {
        NcPoly v;
        bool neg = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.next();
            neg = true;
        } else if (lex_.peek().kind == Token::Plus) {
            lex_.next();
        }
        v = term();
        if (neg) v = A_.negate(v);
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.next().kind == Token::Minus;
            NcPoly t = term();
            v = minus ? A_.sub(v, t) : A_.add(v, t);
        }
        return v;
    }

    NcPoly term() {
        NcPoly v = factor();
        while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
            bool div = lex_.next().kind == Token::Slash;
            NcPoly f = factor();
            if (div) {
                v = A_.scale(v, as_coefficient(f).inv());
            } else {
                v = A_.multiply(v, f);
            }
        }
        return v;
    }

    NcPoly factor() {
        NcPoly b = base();
        if (lex_.peek().kind == Token::Caret) {
            lex_.next();
            Token e = lex_.next();
            if (e.kind != Token::Int) throw std::invalid_argument("parse: exponent must be a nonnegative integer");
            b = A_.power(b, std::stoi(e.text));
        }
        return b;
    }

    NcPoly base() {
        Token t = lex_.next();
        switch (t.kind) {
            case Token::Int:
                return A_.constant(ParamRat(Rat(mpz_class(t.text))));
            case Token::Ident: {
                if (t.text == "a") return A_.constant(ParamRat::param());
                int idx = A_.gen_index(t.text);
                if (idx < 0) throw std::invalid_argument("parse: unknown name '" + t.text + "'");
                return A_.generator(idx);
            }
            case Token::LParen: {
                NcPoly v = expr();
                if (lex_.next().kind != Token::RParen) throw std::invalid_argument("parse: expected ')'");
                return v;
            }
            case Token::Minus:
                return A_.negate(factor());
            default:
                throw std::invalid_argument("parse: unexpected token '" + t.text + "'");
        }
    }

    ParamRat as_coefficient(const NcPoly& f) {
        if (f.is_zero()) throw std::domain_error("parse: division by zero");
        if (f.size() != 1 || !exp_is_zero(f.lexp()))
            throw std::invalid_argument("parse: divisor must be coefficient-only");
        return f.lc();
    }

    const GAlgebra& A_;
    Lexer lex_;
};

const GAlgebra& coefficient_algebra() {
    static GAlgebra A({}, MonomialOrder::deglex(0));
    return A;
}

}  // namespace

NcPoly parse_poly(const GAlgebra& A, const std::string& text) { return Parser(A, text).parse(); }

ParamRat parse_paramrat(const std::string& text) {
    NcPoly p = Parser(coefficient_algebra(), text).parse();
    if (p.is_zero()) return ParamRat();
    return p.lc();
}

ParamRat ParamRat::from_string(const std::string& s) { return parse_paramrat(s); }

}  // namespace galg
