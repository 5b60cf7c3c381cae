#include "lgft/uq_sl2.hpp"

#include <sstream>

namespace lgft {

namespace {

Laurent qpow(long n) { return Laurent::t(2 * n); }

// 1/(q - q^-1), the quantum integer denominator.
const RationalFn& qdenom_inv() {
    static const RationalFn v = RationalFn(Laurent(1), Laurent::t(2) - Laurent::t(-2));
    return v;
}

}  // namespace

void UqElement::add_term(const UqMono& m, const RationalFn& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UqElement UqElement::one() { return mono({}, RationalFn(1)); }
UqElement UqElement::E() { return mono({0, 0, 1}, RationalFn(1)); }
UqElement UqElement::F() { return mono({1, 0, 0}, RationalFn(1)); }
UqElement UqElement::K(long power) { return mono({0, power, 0}, RationalFn(1)); }

UqElement UqElement::mono(const UqMono& m, const RationalFn& c) {
    UqElement x;
    x.add_term(m, c);
    return x;
}

UqElement UqElement::operator+(const UqElement& o) const {
    UqElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

UqElement UqElement::operator-(const UqElement& o) const {
    UqElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

UqElement UqElement::scaled(const RationalFn& c) const {
    UqElement out;
    for (const auto& [m, co] : terms_) out.add_term(m, co * c);
    return out;
}

namespace {

// Right multiplication by single generators keeps everything PBW-ordered:
//   E K = q^-2 K E,   K F = q^-2 F K,   E F = F E + (K - K^-1)/(q - q^-1).
UqElement rmul_E(const UqElement& x) {
    UqElement out;
    for (const auto& [m, c] : x.terms()) out.add_term({m.f, m.k, m.e + 1}, c);
    return out;
}

UqElement rmul_K(const UqElement& x, long p) {
    UqElement out;
    for (const auto& [m, c] : x.terms())
        out.add_term({m.f, m.k + p, m.e}, c * RationalFn(qpow(-2 * p * m.e)));
    return out;
}

UqElement rmul_F_mono(const UqMono& m) {
    // K^b F = q^{-2b} F K^b once no E is left in the way.
    if (m.e == 0)
        return UqElement::mono({m.f + 1, m.k, 0}, RationalFn(qpow(-2 * m.k)));
    UqMono head{m.f, m.k, m.e - 1};
    UqElement out = rmul_E(rmul_F_mono(head));
    // The commutator term: F^f K^b E^{e-1} (K - K^-1) / (q - q^-1), with
    // E^{e-1} K^{+-1} = q^{-+2(e-1)} K^{+-1} E^{e-1}.
    out.add_term({m.f, m.k + 1, m.e - 1}, qdenom_inv() * RationalFn(qpow(-2 * (m.e - 1))));
    out.add_term({m.f, m.k - 1, m.e - 1}, -(qdenom_inv() * RationalFn(qpow(2 * (m.e - 1)))));
    return out;
}

UqElement rmul_F(const UqElement& x) {
    UqElement out;
    for (const auto& [m, c] : x.terms()) {
        UqElement part = rmul_F_mono(m).scaled(c);
        for (const auto& [pm, pc] : part.terms()) out.add_term(pm, pc);
    }
    return out;
}

}  // namespace

UqElement UqElement::operator*(const UqElement& o) const {
    UqElement out;
    for (const auto& [m, c] : o.terms_) {
        UqElement acc = *this;
        for (long i = 0; i < m.f; ++i) acc = rmul_F(acc);
        if (m.k != 0) acc = rmul_K(acc, m.k);
        for (long i = 0; i < m.e; ++i) acc = rmul_E(acc);
        for (const auto& [am, ac] : acc.terms_) out.add_term(am, ac * c);
    }
    return out;
}

std::string UqElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (long i = 0; i < m.f; ++i) os << "*F";
        if (m.k != 0) os << "*K^" << m.k;
        for (long i = 0; i < m.e; ++i) os << "*E";
    }
    return os.str();
}

UqElement UqElement::parse(const std::string& text) {
    // Split into +/- separated terms outside parentheses.
    std::vector<std::pair<int, std::string>> parts;
    int depth = 0, sign = 1;
    std::string cur;
    char prev = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        bool splitter = depth == 0 && (ch == '+' || ch == '-') && prev != '^';
        if (ch != ' ' && ch != '\t') prev = ch;
        if (splitter) {
            if (cur.find_first_not_of(" \t") != std::string::npos) {
                parts.emplace_back(sign, cur);
                sign = 1;
            }
            if (ch == '-') sign = -sign;
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (cur.find_first_not_of(" \t") != std::string::npos) parts.emplace_back(sign, cur);
    if (parts.empty()) throw NamedError("ParseError", "empty element");

    UqElement out;
    for (auto& [s, term] : parts) {
        UqElement factor = one().scaled(RationalFn(Rat(s)));
        std::vector<std::string> tokens;
        std::string tok;
        int d = 0;
        for (char ch : term) {
            if (ch == '(') ++d;
            if (ch == ')') --d;
            if (d == 0 && ch == '*') {
                tokens.push_back(tok);
                tok.clear();
            } else if (!(d == 0 && (ch == ' ' || ch == '\t'))) {
                tok += ch;
            }
        }
        if (!tok.empty()) tokens.push_back(tok);
        for (const std::string& t : tokens) {
            if (t.empty()) throw NamedError("ParseError", "empty factor in: " + term);
            if (t.front() == '(') {
                if (t.back() != ')') throw NamedError("ParseError", t);
                factor = factor.scaled(RationalFn(Laurent::parse(t.substr(1, t.size() - 2))));
            } else if (t[0] == 'E' || t[0] == 'F' || t[0] == 'K') {
                long p = 1;
                if (t.size() > 1) {
                    if (t[1] != '^') throw NamedError("ParseError", t);
                    p = std::stol(t.substr(2));
                }
                if (t[0] == 'K') {
                    factor = factor * K(p);
                } else {
                    if (p < 0) throw NamedError("ParseError", "negative power: " + t);
                    UqElement g = t[0] == 'E' ? E() : F();
                    for (long i = 0; i < p; ++i) factor = factor * g;
                }
            } else {
                factor = factor.scaled(RationalFn(Laurent::parse(t)));
            }
        }
        out = out + factor;
    }
    return out;
}

RationalFn uq_counit(const UqElement& x) {
    RationalFn out;
    for (const auto& [m, c] : x.terms())
        if (m.f == 0 && m.e == 0) out += c;
    return out;
}

UqElement uq_antipode(const UqElement& x) {
    // S(E) = -E K^-1, S(F) = -K F, S(K) = K^-1, extended anti-multiplicatively.
    static const UqElement sE = UqElement::E() * UqElement::K(-1);
    static const UqElement sF = UqElement::K(1) * UqElement::F();
    UqElement out;
    for (const auto& [m, c] : x.terms()) {
        UqElement acc = UqElement::one();
        long sign = 1;
        for (long i = 0; i < m.e; ++i) acc = acc * sE;
        acc = acc * UqElement::K(-m.k);
        for (long i = 0; i < m.f; ++i) acc = acc * sF;
        if ((m.e + m.f) % 2) sign = -1;
        for (const auto& [am, ac] : acc.terms())
            out.add_term(am, ac * c * RationalFn(Rat(sign)));
    }
    return out;
}

namespace {

void tensor_add(UqTensor& t, const std::vector<UqMono>& k, const RationalFn& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

UqTensor tensor_mul(const UqTensor& a, const UqTensor& b) {
    UqTensor out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            // Multiply slotwise and distribute cross terms.
            std::vector<UqElement> slots;
            for (size_t i = 0; i < ka.size(); ++i)
                slots.push_back(UqElement::mono(ka[i], RationalFn(1)) *
                                UqElement::mono(kb[i], RationalFn(1)));
            std::vector<std::pair<std::vector<UqMono>, RationalFn>> acc{
                {{}, ca * cb}};
            for (const UqElement& s : slots) {
                std::vector<std::pair<std::vector<UqMono>, RationalFn>> next;
                for (const auto& [key, c] : acc)
                    for (const auto& [m, mc] : s.terms()) {
                        auto nk = key;
                        nk.push_back(m);
                        next.emplace_back(std::move(nk), c * mc);
                    }
                acc = std::move(next);
            }
            for (const auto& [key, c] : acc) tensor_add(out, key, c);
        }
    return out;
}

// Delta on one PBW monomial into two slots:
//   Delta(K) = K (x) K,  Delta(E) = E (x) K + 1 (x) E,
//   Delta(F) = F (x) 1 + K^-1 (x) F.
UqTensor delta_mono(const UqMono& m) {
    UqTensor acc{{{UqMono{}, UqMono{}}, RationalFn(1)}};
    UqTensor dF{{{UqMono{1, 0, 0}, UqMono{}}, RationalFn(1)},
                {{UqMono{0, -1, 0}, UqMono{1, 0, 0}}, RationalFn(1)}};
    UqTensor dE{{{UqMono{0, 0, 1}, UqMono{0, 1, 0}}, RationalFn(1)},
                {{UqMono{}, UqMono{0, 0, 1}}, RationalFn(1)}};
    for (long i = 0; i < m.f; ++i) acc = tensor_mul(acc, dF);
    if (m.k != 0)
        acc = tensor_mul(acc,
                         UqTensor{{{UqMono{0, m.k, 0}, UqMono{0, m.k, 0}}, RationalFn(1)}});
    for (long i = 0; i < m.e; ++i) acc = tensor_mul(acc, dE);
    return acc;
}

}  // namespace

UqTensor uq_coproduct_power(const UqElement& x, int m) {
    if (m < 1) throw NamedError("InvalidParameters", "coproduct power needs m >= 1");
    UqTensor cur;
    for (const auto& [mono, c] : x.terms()) tensor_add(cur, {mono}, c);
    for (int step = 1; step < m; ++step) {
        UqTensor next;
        for (const auto& [key, c] : cur) {
            UqTensor split = delta_mono(key.back());
            for (const auto& [sk, sc] : split) {
                std::vector<UqMono> nk(key.begin(), key.end() - 1);
                nk.push_back(sk[0]);
                nk.push_back(sk[1]);
                tensor_add(next, nk, c * sc);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

LMat lmat_id(size_t n) {
    LMat m(n, std::vector<Laurent>(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = Laurent(1);
    return m;
}

LMat lmat_zero(size_t rows, size_t cols) { return LMat(rows, std::vector<Laurent>(cols)); }

LMat lmat_mul(const LMat& a, const LMat& b) {
    LMat out = lmat_zero(a.size(), b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

LMat lmat_add(const LMat& a, const LMat& b) {
    LMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) out[i][j] += b[i][j];
    return out;
}

LMat lmat_scale(const LMat& a, const Laurent& c) {
    LMat out = a;
    for (auto& row : out)
        for (auto& x : row) x *= c;
    return out;
}

LMat lmat_tensor(const LMat& a, const LMat& b) {
    size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    LMat out = lmat_zero(ar * br, ac * bc);
    for (size_t i = 0; i < ar; ++i)
        for (size_t j = 0; j < ac; ++j)
            for (size_t k = 0; k < br; ++k)
                for (size_t l = 0; l < bc; ++l)
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return out;
}

Laurent lmat_trace(const LMat& a) {
    Laurent t;
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

bool lmat_eq(const LMat& a, const LMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

LMat mat_antipode(const LMat& m) {
    Laurent q = Laurent::t(2);
    return {{m[1][1], -(q * m[0][1])}, {-(q * m[1][0]), m[0][0]}};
}

LMat rep_antipode(const LMat& m) {
    return {{m[1][1], -(Laurent::t(2) * m[0][1])},
            {-(Laurent::t(-2) * m[1][0]), m[0][0]}};
}

namespace {

FundRep build_fund_rep() {
    FundRep r;
    Laurent q = Laurent::t(2), qi = Laurent::t(-2), one(1);
    r.E = {{Laurent(), one}, {Laurent(), Laurent()}};
    r.F = {{Laurent(), Laurent()}, {one, Laurent()}};
    r.K = {{q, Laurent()}, {Laurent(), qi}};
    r.Kinv = {{qi, Laurent()}, {Laurent(), q}};

    Laurent d = q - qi;
    r.R = lmat_scale(LMat{{q, {}, {}, {}},
                          {{}, one, d, {}},
                          {{}, {}, one, {}},
                          {{}, {}, {}, q}},
                     Laurent::t(-1));
    r.Rinv = lmat_scale(LMat{{qi, {}, {}, {}},
                             {{}, one, -d, {}},
                             {{}, {}, one, {}},
                             {{}, {}, {}, qi}},
                        Laurent::t(1));

    auto fail = [](const std::string& what) {
        throw NamedError("RepInconsistent", what);
    };
    if (!lmat_eq(lmat_mul(r.R, r.Rinv), lmat_id(4))) fail("R inverse");

    // Quantum Yang-Baxter R12 R13 R23 = R23 R13 R12 as an 8x8 identity.
    LMat R12 = lmat_tensor(r.R, lmat_id(2));
    LMat R23 = lmat_tensor(lmat_id(2), r.R);
    LMat p23 = lmat_zero(8, 8);
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b)
            for (size_t c = 0; c < 2; ++c) p23[4 * a + 2 * c + b][4 * a + 2 * b + c] = Laurent(1);
    LMat R13 = lmat_mul(lmat_mul(p23, R12), p23);
    if (!lmat_eq(lmat_mul(lmat_mul(R12, R13), R23), lmat_mul(lmat_mul(R23, R13), R12)))
        fail("Yang-Baxter");

    // Drinfeld element Sum S(t_i) s_i; the antipode acts on the second slot
    // through the dual representation [[a,b],[c,d]] -> [[d,-q b],[-q^-1 c,a]].
    // The charm is whichever of rho(K)^{+-1} splits u into a scalar factor.
    LMat u = lmat_zero(2, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                // S(t)_{ac} = w * t_{xy}
                int x = a == c ? 1 - a : a;
                int y = a == c ? 1 - c : c;
                Laurent w = a == c ? Laurent(1) : -Laurent::t(a == 0 ? 2 : -2);
                // Sum_i (t_i)_{xy} (s_i)_{cb} = R[2c+x][2b+y]
                u[static_cast<size_t>(a)][static_cast<size_t>(b)] +=
                    w * r.R[static_cast<size_t>(2 * c + x)][static_cast<size_t>(2 * b + y)];
            }

    bool pinned = false;
    for (const LMat* cand : {&r.K, &r.Kinv}) {
        const LMat& kinv = lmat_eq(*cand, r.K) ? r.Kinv : r.K;
        LMat th = lmat_mul(u, kinv);
        if (th[0][1].is_zero() && th[1][0].is_zero() && th[0][0] == th[1][1]) {
            r.charm = *cand;
            r.charm_inv = kinv;
            r.theta = th[0][0];
            pinned = true;
            break;
        }
    }
    if (!pinned) fail("no charm splits the Drinfeld element");
    auto ti = Laurent(1).divide_exact(r.theta);
    if (!ti) fail("ribbon scalar not invertible");
    r.theta_inv = *ti;
    if (r.theta != Laurent::t(-3)) fail("ribbon scalar is not t^-3");

    // S^2 through the representation is conjugation by the charm.
    for (const LMat* g : {&r.E, &r.F, &r.K}) {
        UqElement x = lmat_eq(*g, r.E)   ? UqElement::E()
                      : lmat_eq(*g, r.F) ? UqElement::F()
                                         : UqElement::K(1);
        LMat lhs = fundamental_tensor(uq_antipode(uq_antipode(x)), 1);
        LMat rhs = lmat_mul(lmat_mul(r.charm, *g), r.charm_inv);
        if (!lmat_eq(lhs, rhs)) fail("S^2 is not charm conjugation");
    }
    return r;
}

}  // namespace

const FundRep& fundamental_rep() {
    static const FundRep r = build_fund_rep();
    return r;
}

LMat fundamental_tensor(const UqElement& x, int m) {
    LMat mE = {{Laurent(), Laurent(1)}, {Laurent(), Laurent()}};
    LMat mF = {{Laurent(), Laurent()}, {Laurent(1), Laurent()}};
    auto mono_mat = [&](const UqMono& mo) {
        LMat acc = lmat_id(2);
        for (long i = 0; i < mo.f; ++i) acc = lmat_mul(acc, mF);
        if (mo.k != 0) {
            LMat kp = {{Laurent::t(2 * mo.k), Laurent()},
                       {Laurent(), Laurent::t(-2 * mo.k)}};
            acc = lmat_mul(acc, kp);
        }
        for (long i = 0; i < mo.e; ++i) acc = lmat_mul(acc, mE);
        return acc;
    };

    size_t dim = 1;
    for (int i = 0; i < m; ++i) dim *= 2;
    std::vector<std::vector<RationalFn>> acc(dim, std::vector<RationalFn>(dim));
    for (const auto& [key, c] : uq_coproduct_power(x, m)) {
        LMat big = lmat_id(1);
        for (const UqMono& mo : key) big = lmat_tensor(big, mono_mat(mo));
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j)
                if (!big[i][j].is_zero()) acc[i][j] += c * RationalFn(big[i][j]);
    }
    LMat out = lmat_zero(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            if (!acc[i][j].is_polynomial())
                throw NamedError("DenominatorNotClearing", acc[i][j].to_string());
            out[i][j] = acc[i][j].num();
        }
    return out;
}

Laurent quantum_trace(const LMat& z) {
    return lmat_trace(lmat_mul(z, fundamental_rep().charm));
}

Laurent quantum_ch_residual(const LMat& z, const LMat& w) {
    const FundRep& r = fundamental_rep();
    Laurent lhs = Laurent::t(1) * lmat_trace(lmat_mul(z, w)) +
                  Laurent::t(-1) * lmat_trace(lmat_mul(rep_antipode(z), w));
    Laurent rhs;
    // Sum_i tr(s_i Z) tr(t_i W) contracts R against Z and W.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    rhs += r.R[static_cast<size_t>(2 * a + c)][static_cast<size_t>(2 * b + d)] *
                           z[static_cast<size_t>(b)][static_cast<size_t>(a)] *
                           w[static_cast<size_t>(d)][static_cast<size_t>(c)];
    return lhs - rhs;
}

}  // namespace lgft
