#include "core/textio.hpp"

#include <json.hpp>

#include <cctype>
#include <map>

namespace rcs {

namespace {

using OrderedJson = nlohmann::ordered_json;

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void advance()
    {
        if (pos < s.size()) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

// Bivariate terms keyed by (x-power, y-power) before homogeneity is known.
using TermMap = std::map<std::pair<int, int>, Rational>;

Rational parse_number(Lexer& lx)
{
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        digits += lx.peek();
        lx.advance();
    }
    if (digits.empty()) lx.fail("expected a number");
    lx.skip_ws();
    if (lx.peek() == '/') {
        lx.advance();
        lx.skip_ws();
        std::string den;
        while (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            den += lx.peek();
            lx.advance();
        }
        if (den.empty()) lx.fail("expected a denominator");
        return rat_from_string(digits + "/" + den);
    }
    return rat_from_string(digits);
}

int parse_exponent(Lexer& lx)
{
    lx.skip_ws();
    if (lx.peek() != '^') return 1;
    lx.advance();
    lx.skip_ws();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        digits += lx.peek();
        lx.advance();
    }
    if (digits.empty()) lx.fail("expected an exponent");
    return std::stoi(digits);
}

// One product of coefficients and variable powers.
void parse_term(Lexer& lx, TermMap& terms, const Rational& outer_sign)
{
    Rational coeff = outer_sign;
    int xp = 0, yp = 0;
    bool any = false;
    while (true) {
        lx.skip_ws();
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_number(lx);
            any = true;
        } else if (c == 't' || c == 's' || c == 'x') {
            lx.advance();
            xp += parse_exponent(lx);
            any = true;
        } else if (c == 'v' || c == 'u' || c == 'y') {
            lx.advance();
            yp += parse_exponent(lx);
            any = true;
        } else if (c == '*') {
            lx.advance();
            continue;
        } else {
            break;
        }
        lx.skip_ws();
        if (lx.peek() == '*') {
            lx.advance();
            continue;
        }
        // Juxtaposition like "2t" or "t v" also continues the term.
        char n = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(n)) || n == 't' || n == 's' ||
            n == 'x' || n == 'v' || n == 'u' || n == 'y')
            continue;
        break;
    }
    if (!any) lx.fail("expected a term");
    auto key = std::make_pair(xp, yp);
    auto it = terms.find(key);
    if (it == terms.end())
        terms.emplace(key, coeff);
    else
        it->second += coeff;
}

TermMap parse_terms(const std::string& text)
{
    Lexer lx(text);
    TermMap terms;
    lx.skip_ws();
    Rational sgn(1);
    if (lx.peek() == '+' || lx.peek() == '-') {
        if (lx.peek() == '-') sgn = -1;
        lx.advance();
    }
    parse_term(lx, terms, sgn);
    while (true) {
        lx.skip_ws();
        char c = lx.peek();
        if (c == '\0') break;
        if (c != '+' && c != '-') lx.fail("expected '+' or '-'");
        Rational s2 = (c == '-') ? Rational(-1) : Rational(1);
        lx.advance();
        parse_term(lx, terms, s2);
    }
    return terms;
}

} // namespace

HPoly parse_hpoly(const std::string& text)
{
    TermMap terms = parse_terms(text);
    int degree = -1;
    for (const auto& [key, coeff] : terms) {
        if (is_zero(coeff)) continue;
        int d = key.first + key.second;
        if (degree < 0)
            degree = d;
        else if (d != degree)
            throw ParseError("polynomial is not homogeneous (degrees " +
                                 std::to_string(degree) + " and " + std::to_string(d) + ")",
                             1, 1);
    }
    if (degree < 0) return HPoly();
    std::vector<Rational> c(degree + 1, Rational(0));
    for (const auto& [key, coeff] : terms) c[key.first] += coeff;
    return HPoly(degree, std::move(c));
}

namespace {

HPoly component_from_json(const OrderedJson& j, int degree, const std::string& name)
{
    if (j.is_string()) {
        HPoly f = parse_hpoly(j.get<std::string>());
        if (f.is_zero()) return f;
        if (f.degree() > degree)
            throw MathError("component " + name + " exceeds the stated degree");
        if (f.degree() < degree)
            throw MathError("component " + name + " has degree " +
                            std::to_string(f.degree()) + ", expected " +
                            std::to_string(degree));
        return f;
    }
    if (j.is_array()) {
        std::vector<Rational> c;
        for (const auto& e : j) {
            if (e.is_string())
                c.push_back(rat_from_string(e.get<std::string>()));
            else if (e.is_number_integer())
                c.push_back(Rational(static_cast<long>(e.get<long long>())));
            else
                throw MathError("component " + name + ": coefficients must be strings");
        }
        if (static_cast<int>(c.size()) != degree + 1)
            throw MathError("component " + name + " needs degree+1 coefficients");
        return HPoly(degree, std::move(c));
    }
    throw MathError("component " + name + " must be a string or an array");
}

} // namespace

CurveSpec parse_curve(const std::string& text)
{
    std::string trimmed = text;
    size_t b = trimmed.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("empty curve input", 1, 1);
    if (trimmed[b] == '{') {
        OrderedJson j;
        try {
            j = OrderedJson::parse(trimmed);
        } catch (const nlohmann::json::parse_error& e) {
            // byte offset -> line/column
            int line = 1, col = 1;
            for (size_t i = 0; i < e.byte && i < trimmed.size(); ++i) {
                if (trimmed[i] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
        }
        if (!j.contains("degree") || !j.contains("a") || !j.contains("b") || !j.contains("c"))
            throw MathError("curve JSON needs degree, a, b, c");
        int degree = j["degree"].get<int>();
        HPoly a = component_from_json(j["a"], degree, "a");
        HPoly b2 = component_from_json(j["b"], degree, "b");
        HPoly c = component_from_json(j["c"], degree, "c");
        return make_curve(a, b2, c);
    }
    // Inline "a; b; c".
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw ParseError("inline curve needs three ';'-separated components", 1, 1);
    HPoly a = parse_hpoly(parts[0]);
    HPoly b2 = parse_hpoly(parts[1]);
    HPoly c = parse_hpoly(parts[2]);
    if (a.is_zero() || b2.is_zero() || c.is_zero())
        throw MathError("curve components must be nonzero");
    int degree = std::max({a.degree(), b2.degree(), c.degree()});
    if (a.degree() != degree || b2.degree() != degree || c.degree() != degree)
        throw MathError("curve components must share one degree");
    return make_curve(a, b2, c);
}

std::string hpoly_to_json(const HPoly& f)
{
    OrderedJson j;
    j["degree"] = f.is_zero() ? OrderedJson(nullptr) : OrderedJson(f.degree());
    OrderedJson coeffs = OrderedJson::array();
    if (!f.is_zero())
        for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(rat_to_string(f.coeff(i)));
    j["coeffs"] = coeffs;
    return j.dump();
}

std::string hpolymat_to_json(const HPolyMat& m, const std::string& x, const std::string& y)
{
    OrderedJson j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    OrderedJson entries = OrderedJson::array();
    for (int i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).to_string(x, y));
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j.dump();
}

} // namespace rcs
