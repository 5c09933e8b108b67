#include "abelrat/io.hpp"

#include "abelrat/errors.hpp"

#include <cctype>

namespace abelrat {

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    RatPoly run() {
        skip();
        if (at_end()) fail("empty expression");
        RatPoly p = expr();
        skip();
        if (!at_end()) fail(std::string("unexpected character '") + s_[i_] + "'");
        return p;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    bool at_end() const { return i_ >= s_.size(); }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    char peek() {
        skip();
        return at_end() ? '\0' : s_[i_];
    }

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t k = 0; k < i_ && k < s_.size(); ++k) {
            if (s_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    RatPoly expr() {
        RatPoly acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++i_;
                acc += term();
            } else if (c == '-') {
                ++i_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RatPoly term() {
        RatPoly acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++i_;
                acc *= unary();
            } else if (c == '/') {
                ++i_;
                skip();
                std::size_t at = i_;
                RatPoly d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    i_ = at;
                    fail("division only by a nonzero constant");
                }
                acc = acc.scale(1 / d.lc());
            } else if (c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                acc *= unary();  // juxtaposition, e.g. 3t
            } else {
                return acc;
            }
        }
    }

    RatPoly unary() {
        char c = peek();
        if (c == '-') {
            ++i_;
            return -unary();
        }
        if (c == '+') {
            ++i_;
            return unary();
        }
        return power();
    }

    RatPoly power() {
        RatPoly base = atom();
        if (peek() == '^') {
            ++i_;
            skip();
            std::size_t start = i_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) fail("expected a nonnegative integer exponent");
            if (i_ - start > 6) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, i_ - start))));
        }
        return base;
    }

    RatPoly atom() {
        char c = peek();
        if (c == 't') {
            ++i_;
            return RatPoly::variable();
        }
        if (c == '(') {
            ++i_;
            RatPoly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++i_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (!at_end() && s_[i_] == '.') fail("decimal literals are not exact; use p/q");
            return RatPoly::constant(Rational(Integer(s_.substr(start, i_ - start))));
        }
        if (at_end()) fail("unexpected end of expression");
        fail(std::string("unexpected character '") + c + "'");
    }
};

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

RatPoly parse_polynomial(const std::string& text) { return ExprParser(text).run(); }

Json rational_to_json(const Rational& q) { return to_string(q); }

Json poly_to_json(const RatPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

RatPoly poly_from_json(const Json& j) {
    if (j.is_string()) return parse_polynomial(j.get<std::string>());
    if (j.is_number_integer()) return RatPoly::constant(Rational(Integer(j.dump())));
    if (!j.is_array()) throw ParseError("polynomial must be an array or an expression string", 1, 1);
    std::vector<Rational> cs;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const Json& e = j[k];
        if (e.is_string())
            cs.push_back(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer())
            cs.push_back(Rational(Integer(e.dump())));
        else
            throw ParseError("coefficient must be a \"p/q\" string or an integer", 1, static_cast<int>(k) + 1);
    }
    return RatPoly(std::move(cs));
}

std::array<int, 3> parse_exponents(const std::string& text) {
    std::array<int, 3> n{};
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-')) ++pos;
        if (start == pos || pos - start > 6)
            throw ParseError("expected an integer exponent", 1, static_cast<int>(start) + 1);
        n[k] = std::stoi(text.substr(start, pos - start));
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (k < 2) {
            if (pos >= text.size() || text[pos] != ',')
                throw ParseError("expected ','", 1, static_cast<int>(pos) + 1);
            ++pos;
        }
    }
    if (pos != text.size()) throw ParseError("trailing characters after exponents", 1, static_cast<int>(pos) + 1);
    return n;
}

AbelEquation equation_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("equation document must be a JSON object", 1, 1);
    if (!doc.contains("exponents") || !doc["exponents"].is_array() || doc["exponents"].size() != 3)
        throw ParseError("\"exponents\" must be an array [n1, n2, n3]", 1, 1);
    std::array<int, 3> n{};
    for (int k = 0; k < 3; ++k) {
        const Json& e = doc["exponents"][k];
        if (!e.is_number_integer()) throw ParseError("exponents must be integers", 1, 1);
        n[k] = e.get<int>();
    }
    if (!doc.contains("coefficients") || !doc["coefficients"].is_object())
        throw ParseError("\"coefficients\" must be an object with A1, A2, A3", 1, 1);
    const Json& cs = doc["coefficients"];
    std::array<RatPoly, 3> A;
    const char* names[3] = {"A1", "A2", "A3"};
    for (int k = 0; k < 3; ++k) {
        if (!cs.contains(names[k])) throw ParseError(std::string("missing coefficient ") + names[k], 1, 1);
        try {
            A[k] = poly_from_json(cs[names[k]]);
        } catch (const ParseError& e) {
            throw ParseError(std::string("in ") + names[k] + ": " + e.message(), e.line(), e.column());
        }
    }
    return AbelEquation(n[0], n[1], n[2], A[0], A[1], A[2]);
}

AbelEquation parse_equation_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        throw ParseError("malformed JSON", line, col);
    }
    return equation_from_json(doc);
}

Json equation_to_json(const AbelEquation& eq) {
    Json doc;
    doc["exponents"] = Json::array({eq.n1(), eq.n2(), eq.n3()});
    Json cs;
    cs["A1"] = poly_to_json(eq.A1());
    cs["A2"] = poly_to_json(eq.A2());
    cs["A3"] = poly_to_json(eq.A3());
    doc["coefficients"] = cs;
    return doc;
}

}  // namespace abelrat
