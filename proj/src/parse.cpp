#include "lfspec/parse.hpp"

#include <algorithm>
#include <cctype>

namespace lfspec {

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long long parse_ll(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw parse_error("expected integer, got ''");
    size_t pos = 0;
    long long v;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw parse_error("bad integer '" + t + "'");
    }
    if (pos != t.size()) throw parse_error("trailing junk in integer '" + t + "'");
    return v;
}

// term := ['-'] digits ['^' signed-digits]
Rational parse_term(const std::string& s) {
    std::string t = strip(s);
    auto caret = t.find('^');
    if (caret == std::string::npos) return Rational(parse_ll(t));
    long long base = parse_ll(t.substr(0, caret));
    long long exp = parse_ll(t.substr(caret + 1));
    Rational r = Rational::pow_int(base < 0 ? -base : base, exp);
    if (base < 0 && exp % 2 != 0) r = -r;
    return r;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw parse_error("empty rational literal");
    Rational acc(1);
    size_t start = 0;
    char pending = '*';
    for (size_t i = 0; i <= t.size(); ++i) {
        if (i < t.size() && t[i] != '*' && t[i] != '/') continue;
        Rational term = parse_term(t.substr(start, i - start));
        if (pending == '*') acc *= term;
        else acc /= term;
        if (i < t.size()) pending = t[i];
        start = i + 1;
    }
    return acc;
}

std::vector<std::string> split_top_level(const std::string& text, const std::string& seps) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && seps.find(c) != std::string::npos) {
            if (!strip(cur).empty()) out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty()) out.push_back(strip(cur));
    return out;
}

namespace {

Element parse_padic_literal(const std::string& text, long long prec) {
    // padic(p=2, "101", v=-1)
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw parse_error("malformed padic(...) literal");
    auto parts = split_top_level(text.substr(open + 1, close - open - 1), ",");
    long long p = -1, v = 0;
    std::string digits;
    for (const auto& part : parts) {
        auto eq = part.find('=');
        if (eq != std::string::npos) {
            std::string key = strip(part.substr(0, eq));
            std::string val = strip(part.substr(eq + 1));
            if (key == "p") p = parse_ll(val);
            else if (key == "v") v = parse_ll(val);
            else throw parse_error("unknown key '" + key + "' in padic literal");
        } else {
            std::string q = strip(part);
            if (q.size() < 2 || q.front() != '"' || q.back() != '"')
                throw parse_error("padic literal needs a quoted digit string");
            digits = q.substr(1, q.size() - 2);
        }
    }
    if (p < 0) throw parse_error("padic literal missing p=");
    FieldModel model = FieldModel::padic(p);
    std::vector<int> d;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("non-digit in padic digit string");
        d.push_back(c - '0');
    }
    if (d.empty()) return Element::zero(model, prec);
    return Element::from_digits(model, v, d, std::max(prec, v + static_cast<long long>(d.size())));
}

Element parse_laurent_poly(const FieldModel& model, const std::string& text, long long prec) {
    // terms joined by '+' (use T^-k rather than minus signs; coefficients
    // are residues mod p)
    auto terms = split_top_level(text, "+");
    if (terms.empty()) return Element::zero(model, prec);
    Element acc = Element::zero(model, prec);
    for (const auto& term : terms) {
        std::string t = strip(term);
        long long coef = 1;
        long long exp = 0;
        auto tpos = t.find('T');
        if (tpos == std::string::npos) {
            coef = parse_ll(t);
        } else {
            std::string head = strip(t.substr(0, tpos));
            if (!head.empty()) {
                if (head.back() == '*') head.pop_back();
                head = strip(head);
                if (!head.empty()) coef = parse_ll(head);
            }
            std::string tail = strip(t.substr(tpos + 1));
            if (!tail.empty()) {
                if (tail.front() != '^') throw parse_error("expected '^' after T");
                exp = parse_ll(tail.substr(1));
            } else {
                exp = 1;
            }
        }
        long long c = ((coef % model.p) + model.p) % model.p;
        if (c == 0) continue;
        acc = acc + Element::from_digits(model, exp, {static_cast<int>(c)},
                                         std::max(prec, exp + 1));
    }
    return acc;
}

} // namespace

Element parse_element(const FieldModel& model, const std::string& text, long long prec) {
    std::string t = strip(text);
    if (t.rfind("padic(", 0) == 0) {
        Element e = parse_padic_literal(t, prec);
        if (e.model() != model)
            throw parse_error("padic literal model does not match the requested field");
        return e;
    }
    if (model.kind == FieldKind::Laurent || t.find('T') != std::string::npos)
        return parse_laurent_poly(model, t, prec);
    return Element::from_rational(model, parse_rational(t), prec);
}

std::vector<Vec> parse_point_list(const FieldModel& model, const std::string& text) {
    auto parts = split_top_level(text, model.kind == FieldKind::Laurent ? ";" : ",;");
    if (parts.empty()) throw parse_error("empty point list");
    std::vector<Vec> out;
    out.reserve(parts.size());
    for (const auto& part : parts) out.push_back(Vec(parse_element(model, part)));
    return out;
}

Ball parse_ball(const FieldModel& model, const std::string& text) {
    std::string t = strip(text);
    if (t.rfind("ball(", 0) != 0 || t.back() != ')')
        throw parse_error("expected ball(center, radius), got '" + t + "'");
    auto inner = split_top_level(t.substr(5, t.size() - 6), ",");
    if (inner.size() != 2) throw parse_error("ball(...) needs exactly center and radius");
    Element center = parse_element(model, inner[0]);
    Rational radius = parse_rational(inner[1]);
    // radius must be a power of p
    long long e = 0;
    Rational r = radius;
    if (r <= Rational(0)) throw parse_error("ball radius must be positive");
    while (r > Rational(1)) { r /= Rational(model.p); ++e; }
    while (r < Rational(1)) { r *= Rational(model.p); --e; }
    if (!r.is_one())
        throw parse_error("ball radius must be a power of p");
    return Ball(Vec(center), e);
}

CompactOpenSet parse_compact_open(const FieldModel& model, const std::string& text) {
    std::string norm;
    for (size_t i = 0; i < text.size();) {
        // accept the unicode union sign as a separator
        if (text.compare(i, 3, "∪") == 0) { norm += '+'; i += 3; }
        else { norm += text[i]; ++i; }
    }
    auto parts = split_top_level(norm, "+uU");
    if (parts.empty()) throw parse_error("empty set expression");
    std::vector<Ball> balls;
    long long scale = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        Ball b = parse_ball(model, parts[i]);
        if (i == 0) scale = b.radius_exp;
        balls.push_back(std::move(b));
    }
    return CompactOpenSet(scale, std::move(balls));
}

std::vector<long long> parse_residue_list(const std::string& text) {
    auto parts = split_top_level(text, ",");
    if (parts.empty()) throw parse_error("empty residue list");
    std::vector<long long> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(parse_ll(p));
    return out;
}

} // namespace lfspec
