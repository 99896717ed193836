#include "parse.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace folis::verifier {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" + text + "'");
    }
};

long parse_unsigned(Cursor& cur) {
    cur.skip_space();
    if (cur.pos >= cur.text.size() || !std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        cur.fail("expected a number");
    }
    long value = 0;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        value = value * 10 + (cur.text[cur.pos] - '0');
        if (value > 1000000000L) cur.fail("number too large");
        ++cur.pos;
    }
    return value;
}

BigRat parse_coefficient(Cursor& cur) {
    BigInt num(parse_unsigned(cur));
    if (cur.accept('/')) {
        BigInt den(parse_unsigned(cur));
        if (den == 0) cur.fail("zero denominator");
        return make_rational(num, den);
    }
    return BigRat(num);
}

// factor := z<index> [^ exponent]
void parse_factor(Cursor& cur, Exponents& exps) {
    if (!cur.accept('z')) cur.fail("expected a variable");
    long index = parse_unsigned(cur);
    if (index < 1 || index > static_cast<long>(exps.size())) {
        cur.fail("variable index out of range");
    }
    long exp = 1;
    if (cur.accept('^')) {
        exp = parse_unsigned(cur);
        if (exp > 64) cur.fail("exponent too large");
    }
    exps[static_cast<size_t>(index - 1)] += static_cast<int>(exp);
}

}  // namespace

MultiPoly parse_polynomial(const std::string& text, int num_vars) {
    MultiPoly poly(num_vars);
    Cursor cur{text};
    if (cur.done()) throw ParseError("empty polynomial");

    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.accept('-')) {
            sign = -1;
        } else if (cur.accept('+')) {
            // explicit plus
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;

        BigRat coeff(1);
        Exponents exps(static_cast<size_t>(num_vars), 0);
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = parse_coefficient(cur);
            saw_anything = true;
            while (cur.accept('*')) parse_factor(cur, exps);
        } else {
            while (cur.peek() == 'z') {
                parse_factor(cur, exps);
                saw_anything = true;
                if (!cur.accept('*')) break;
            }
        }
        if (!saw_anything) cur.fail("expected a term");
        if (sign < 0) coeff = -coeff;
        poly.add_term(exps, coeff);
    }
    return poly;
}

ExampleSystem parse_system(const std::string& text) {
    std::vector<std::string> field_lines;
    std::vector<std::string> variety_lines;
    enum class Section { none, field, variety } section = Section::none;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        size_t end = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(begin, end - begin + 1);
        if (trimmed == "field") {
            section = Section::field;
        } else if (trimmed == "variety") {
            section = Section::variety;
        } else if (section == Section::field) {
            field_lines.push_back(trimmed);
        } else if (section == Section::variety) {
            variety_lines.push_back(trimmed);
        } else {
            throw ParseError("polynomial before any 'field'/'variety' header: " + trimmed);
        }
    }
    if (field_lines.empty()) throw ParseError("system has no field components");
    if (variety_lines.empty()) throw ParseError("system has no variety polynomials");

    const int num_vars = static_cast<int>(field_lines.size());
    ExampleSystem sys;
    sys.field.chart = num_vars;  // affine chart Z_{n+1} = 1
    for (const std::string& l : field_lines) {
        sys.field.components.push_back(parse_polynomial(l, num_vars));
    }
    for (const std::string& l : variety_lines) {
        sys.varieties.push_back(parse_polynomial(l, num_vars));
    }
    return sys;
}

}  // namespace folis::verifier
