#include "lgft/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lgft {

Laurent Laurent::term(const Rat& c, long n) {
    Laurent p;
    if (c != 0) p.terms_[n] = c;
    return p;
}

long Laurent::min_exp() const { return terms_.begin()->first; }
long Laurent::max_exp() const { return terms_.rbegin()->first; }

Rat Laurent::coeff(long n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Laurent::leading_coeff() const { return terms_.rbegin()->second; }

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [n, c] : o.terms_) {
        terms_[n] += c;
        strip_zero(n);
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [n, c] : o.terms_) {
        terms_[n] -= c;
        strip_zero(n);
    }
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [n, c] : terms_) r.terms_[n] = -c;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [n, c] : terms_)
        for (const auto& [m, d] : o.terms_) {
            r.terms_[n + m] += c * d;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

Laurent Laurent::pow(long n) const {
    if (n < 0) throw std::invalid_argument("Laurent::pow: negative exponent");
    Laurent acc(1), base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& o) const {
    if (o.is_zero()) return std::nullopt;
    if (is_zero()) return Laurent();
    // Shift both to honest polynomials, long-divide, reattach the t-power.
    long shift = min_exp() - o.min_exp();
    Laurent rem = *this * t(-min_exp());
    Laurent den = o * t(-o.min_exp());
    Laurent quot;
    while (!rem.is_zero() && rem.max_exp() >= den.max_exp()) {
        Laurent piece = term(rem.leading_coeff() / den.leading_coeff(),
                             rem.max_exp() - den.max_exp());
        quot += piece;
        rem -= piece * den;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot * t(shift);
}

Rat Laurent::eval_at_one() const {
    Rat s(0);
    for (const auto& [n, c] : terms_) s += c;
    return s;
}

Laurent Laurent::substitute_power(long k) const {
    Laurent r;
    for (const auto& [n, c] : terms_) r.terms_[n * k] += c;
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (n == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "t^" << n;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return s[i]; }
};

Rat parse_rat(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
    while (c.i < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/')) ++c.i;
    if (c.i == start) throw std::runtime_error("Laurent::parse: expected number at position " + std::to_string(start));
    return rat_from_string(c.s.substr(start, c.i - start));
}

long parse_int(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw std::runtime_error("Laurent::parse: expected integer exponent");
    return std::stol(c.s.substr(start, c.i - start));
}

}  // namespace

Laurent Laurent::parse(const std::string& text) {
    Cursor c{text};
    Laurent result;
    bool expect_term = true;
    int sign = 1;
    while (!c.done()) {
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-') sign = -sign;
            else if (!expect_term) { sign = (ch == '-') ? -1 : 1; expect_term = true; }
            else if (ch == '+') { /* leading plus */ }
            ++c.i;
            continue;
        }
        if (!expect_term) throw std::runtime_error("Laurent::parse: expected '+' or '-'");
        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coeff = parse_rat(c);
            have_coeff = true;
        }
        long exp = 0;
        c.skip_ws();
        if (have_coeff && c.i < c.s.size() && c.s[c.i] == '*') { ++c.i; c.skip_ws(); }
        if (c.i < c.s.size() && c.s[c.i] == 't') {
            ++c.i;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                exp = parse_int(c);
            } else {
                exp = 1;
            }
        } else if (!have_coeff) {
            throw std::runtime_error("Laurent::parse: unexpected character '" + std::string(1, ch) + "'");
        }
        result += term(sign * coeff, exp);
        sign = 1;
        expect_term = false;
    }
    if (expect_term && !result.is_zero()) throw std::runtime_error("Laurent::parse: dangling sign");
    return result;
}

}  // namespace lgft
