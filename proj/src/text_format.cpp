// Canonical text grammar for exact scalars and polynomials.
//
// Rendering is deterministic: polynomial terms in descending graded-lex
// order, scalar parts in ascending pi power, signs folded into " - "
// separators.  Examples: "2*pi^2", "(4/5)*pi", "(3/2)*s^2 + (1/2)*s*u - u^2".
// The parser accepts the same grammar (plus redundant whitespace, parentheses,
// unary signs, '/' by exact constants and integer '^' exponents) and
// round-trips everything the renderer emits.

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "contactloc/poly.hpp"

namespace contactloc {

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

bool is_bare_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// One homogeneous part (re + i*im)*pi^k.  `emit_unit_coeff` keeps "1*" for
// contexts that need an explicit coefficient; rendering never needs it.
std::string part_str(const mpq_class& re, const mpq_class& im, int k) {
    std::string coeff;
    bool coeff_is_one = false;   // magnitude-1 coefficient, sign included in string
    if (im == 0) {
        coeff = rat_str(re);
        if (re.get_den() != 1) {
            coeff = "(" + coeff + ")";
        }
        coeff_is_one = (re == 1 || re == -1);
        if (re == -1) coeff = "-";
        if (re == 1) coeff = "";
    } else if (re == 0) {
        if (im == 1) {
            coeff = "i";
        } else if (im == -1) {
            coeff = "-i";
        } else if (im.get_den() == 1) {
            coeff = rat_str(im) + "*i";
        } else {
            coeff = "(" + rat_str(im) + ")*i";
        }
    } else {
        mpq_class abs_im = abs(im);
        std::string im_part = abs_im == 1 ? "i" : rat_str(abs_im) + "*i";
        coeff = "(" + rat_str(re) + (im > 0 ? "+" : "-") + im_part + ")";
    }

    if (k == 0) {
        if (coeff_is_one) return re == 1 ? "1" : "-1";
        return coeff;
    }
    std::string pi_part = k == 1 ? "pi" : "pi^" + std::to_string(k);
    if (coeff_is_one) return coeff + pi_part;  // "pi^2" / "-pi^2"
    return coeff + "*" + pi_part;
}

std::string scalar_str(const ExactScalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [power, part] : s.parts()) {
        if (first) {
            out = part_str(part.re, part.im, power);
            first = false;
            continue;
        }
        bool negative = part.re != 0 ? part.re < 0 : part.im < 0;
        if (negative) {
            out += " - " + part_str(-part.re, -part.im, power);
        } else {
            out += " + " + part_str(part.re, part.im, power);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tokenizer

enum class TokKind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& input) : input_(input) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token tok = current_;
        advance();
        return tok;
    }

private:
    void advance() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
        if (pos_ >= input_.size()) {
            current_ = {TokKind::End, ""};
            return;
        }
        char c = input_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
                ++pos_;
            }
            current_ = {TokKind::Integer, input_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < input_.size() &&
                   (std::isalnum(static_cast<unsigned char>(input_[pos_])) || input_[pos_] == '_')) {
                ++pos_;
            }
            current_ = {TokKind::Ident, input_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': current_ = {TokKind::Plus, "+"}; return;
            case '-': current_ = {TokKind::Minus, "-"}; return;
            case '*': current_ = {TokKind::Star, "*"}; return;
            case '/': current_ = {TokKind::Slash, "/"}; return;
            case '^': current_ = {TokKind::Caret, "^"}; return;
            case '(': current_ = {TokKind::LParen, "("}; return;
            case ')': current_ = {TokKind::RParen, ")"}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "' in expression");
        }
    }

    const std::string& input_;
    size_t pos_ = 0;
    Token current_{TokKind::End, ""};
};

// Recursive-descent parser building a Poly.
//   expression := term (('+'|'-') term)*
//   term       := unary (('*'|'/') unary)*
//   unary      := ('+'|'-')* postfix
//   postfix    := atom ('^' signed-integer)?
//   atom       := integer | 'i' | 'pi' | variable | '(' expression ')'
class Parser {
public:
    explicit Parser(const std::string& input) : lexer_(input) {}

    Poly parse_expression() {
        Poly value = parse_term();
        while (true) {
            TokKind kind = lexer_.peek().kind;
            if (kind == TokKind::Plus) {
                lexer_.take();
                value += parse_term();
            } else if (kind == TokKind::Minus) {
                lexer_.take();
                value -= parse_term();
            } else {
                return value;
            }
        }
    }

    void expect_end() {
        if (lexer_.peek().kind != TokKind::End) {
            throw ParseError("trailing input after expression: '" + lexer_.peek().text + "'");
        }
    }

private:
    Poly parse_term() {
        Poly value = parse_unary();
        while (true) {
            TokKind kind = lexer_.peek().kind;
            if (kind == TokKind::Star) {
                lexer_.take();
                value *= parse_unary();
            } else if (kind == TokKind::Slash) {
                lexer_.take();
                Poly divisor = parse_unary();
                if (!divisor.is_constant()) {
                    throw ParseError("division by a non-constant expression");
                }
                value = value / divisor.as_constant();
            } else {
                return value;
            }
        }
    }

    Poly parse_unary() {
        bool negate = false;
        while (lexer_.peek().kind == TokKind::Plus || lexer_.peek().kind == TokKind::Minus) {
            if (lexer_.take().kind == TokKind::Minus) negate = !negate;
        }
        Poly value = parse_postfix();
        return negate ? -value : value;
    }

    Poly parse_postfix() {
        Poly base = parse_atom();
        if (lexer_.peek().kind != TokKind::Caret) return base;
        lexer_.take();
        bool negative = false;
        while (lexer_.peek().kind == TokKind::Minus || lexer_.peek().kind == TokKind::Plus) {
            if (lexer_.take().kind == TokKind::Minus) negative = !negative;
        }
        Token exp = lexer_.take();
        if (exp.kind != TokKind::Integer) throw ParseError("expected integer exponent after '^'");
        long power = 0;
        try {
            power = std::stol(exp.text);
        } catch (const std::out_of_range&) {
            throw ParseError("exponent '" + exp.text + "' out of range");
        }
        if (!negative) return base.pow(static_cast<unsigned>(power));
        if (!base.is_constant()) {
            throw ParseError("negative exponent on a non-constant expression");
        }
        return Poly::constant(base.as_constant().inverse().pow(static_cast<unsigned>(power)));
    }

    Poly parse_atom() {
        Token tok = lexer_.take();
        switch (tok.kind) {
            case TokKind::Integer:
                return Poly::constant(ExactScalar(mpq_class(tok.text)));
            case TokKind::Ident:
                if (tok.text == "i") return Poly::constant(ExactScalar::unit_i());
                if (tok.text == "pi") return Poly::constant(ExactScalar::pi_power_of(1));
                return Poly::variable(tok.text);
            case TokKind::LParen: {
                Poly inner = parse_expression();
                if (lexer_.take().kind != TokKind::RParen) throw ParseError("missing ')'");
                return inner;
            }
            default:
                throw ParseError("unexpected token '" + tok.text + "' in expression");
        }
    }

    Lexer lexer_;
};

std::string monomial_str(const std::vector<std::string>& vars, const std::vector<int>& exps) {
    std::string out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
    }
    return out;
}

// True when the string is one parenthesized group, e.g. "(3/2)" but not
// "(1/2+i)*pi".
bool is_single_paren_group(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return i + 1 == s.size();
    }
    return false;
}

// Coefficient in front of a monomial: bare integers stay bare, everything
// else is parenthesized so the product re-parses unambiguously.
std::string coefficient_prefix(const ExactScalar& coeff) {
    if (coeff == ExactScalar(1)) return "";
    if (coeff == ExactScalar(-1)) return "-";
    std::string s = scalar_str(coeff);
    if (is_bare_integer(s) || is_single_paren_group(s)) return s + "*";
    return "(" + s + ")*";
}

}  // namespace

std::string ExactScalar::str() const { return scalar_str(*this); }

ExactScalar ExactScalar::parse(const std::string& text) {
    Parser parser(text);
    Poly value = parser.parse_expression();
    parser.expect_end();
    if (!value.is_constant()) {
        throw ParseError("expected a scalar, found variables in '" + text + "'");
    }
    return value.as_constant();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending graded-lex: iterate the ascending map in reverse.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, coeff] = *it;
        std::string mono = monomial_str(vars_, exps);
        bool leading = out.empty();
        ExactScalar display = coeff;
        if (!leading) {
            out += coeff.display_sign() < 0 ? " - " : " + ";
            if (coeff.display_sign() < 0) display = -coeff;
        }
        if (mono.empty()) {
            out += scalar_str(display);
        } else {
            out += coefficient_prefix(display) + mono;
        }
    }
    return out;
}

Poly Poly::parse(const std::string& text) {
    Parser parser(text);
    Poly value = parser.parse_expression();
    parser.expect_end();
    return value;
}

}  // namespace contactloc
