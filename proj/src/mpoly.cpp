#include "qfib/mpoly.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

#include "qfib/parallel.hpp"

namespace qfib {

MPoly& MPoly::operator+=(const MPoly& o) {
    if (this == &o) {
        for (auto& [m, c] : terms_) c *= 2;
        return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, mpz_class(-c));
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, mpz_class(-c));
    return r;
}

void MPoly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly mul_serial(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    // iterate the smaller operand outermost
    const MPoly& outer = a.term_count() <= b.term_count() ? a : b;
    const MPoly& inner = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [ma, ca] : outer.terms()) {
        for (const auto& [mb, cb] : inner.terms()) {
            r.add_term(ma.times(mb), ca * cb);
        }
    }
    return r;
}

MPoly mul_parallel(const MPoly& a, const MPoly& b, int workers) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    const MPoly& outer = a.term_count() >= b.term_count() ? a : b;
    const MPoly& inner = a.term_count() >= b.term_count() ? b : a;

    std::vector<const std::pair<const Monomial, mpz_class>*> terms;
    terms.reserve(outer.term_count());
    for (const auto& t : outer.terms()) terms.push_back(&t);

    const int nchunks = std::min<int>(workers, static_cast<int>(terms.size()));
    if (nchunks <= 1) return mul_serial(a, b);

    std::vector<MPoly> partial(nchunks);
#pragma omp parallel for schedule(static) num_threads(nchunks)
    for (int c = 0; c < nchunks; ++c) {
        const std::size_t lo = terms.size() * c / nchunks;
        const std::size_t hi = terms.size() * (c + 1) / nchunks;
        MPoly local;
        for (std::size_t t = lo; t < hi; ++t) {
            for (const auto& [mb, cb] : inner.terms()) {
                local.add_term(terms[t]->first.times(mb), terms[t]->second * cb);
            }
        }
        partial[c] = std::move(local);
    }
    MPoly r = std::move(partial[0]);
    for (int c = 1; c < nchunks; ++c) r += partial[c];
    return r;
}

namespace {
constexpr std::size_t kParallelPairThreshold = 4096;
}

MPoly mul(const MPoly& a, const MPoly& b) {
    const int w = max_workers();
    if (w > 1 && !omp_in_parallel() &&
        a.term_count() * b.term_count() >= kParallelPairThreshold) {
        return mul_parallel(a, b, w);
    }
    return mul_serial(a, b);
}

MPoly operator*(const MPoly& a, const MPoly& b) { return mul(a, b); }

MPoly pow(const MPoly& a, unsigned k) {
    MPoly r = MPoly::one();
    MPoly base = a;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

namespace {

// Splits off the s/q monomial content: p = s^vs * q^vq * rest, with rest
// having minimal s- and q-exponent 0. Valuations are additive over an
// integral domain, which is what makes content-stripping sound for division.
struct Stripped {
    MPoly rest;
    std::int64_t vs = 0;
    std::int64_t vq = 0;
};

Stripped strip_sq_content(const MPoly& p) {
    Stripped out;
    if (p.is_zero()) return out;
    std::int32_t vs = std::numeric_limits<std::int32_t>::max();
    std::int32_t vq = vs;
    for (const auto& [m, c] : p.terms()) {
        vs = std::min(vs, m.es);
        vq = std::min(vq, m.eq);
    }
    for (const auto& [m, c] : p.terms()) {
        out.rest.add_term({m.ex, m.es - vs, m.eq - vq}, c);
    }
    out.vs = vs;
    out.vq = vq;
    return out;
}

} // namespace

MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    if (a.is_zero()) return MPoly();

    const Stripped sa = strip_sq_content(a);
    const Stripped sb = strip_sq_content(b);

    // Ordinary multivariate exact division in Z[x,s,q]; graded-lex is a
    // well-order there, and any quotient monomial with a negative component
    // or a non-dividing coefficient proves non-divisibility.
    MPoly r = sa.rest;
    MPoly quot;
    const auto& [lbm, lbc] = sb.rest.leading();
    while (!r.is_zero()) {
        const auto& [lrm, lrc] = r.leading();
        const Monomial t = lrm.over(lbm);
        if (t.ex < 0 || t.es < 0 || t.eq < 0) {
            throw NonDivisibleError("exact_div: no polynomial quotient (monomial gap at " +
                                    to_canonical_text(MPoly::monomial(1, lrm)) + ")");
        }
        mpz_class c, rem;
        mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), lrc.get_mpz_t(), lbc.get_mpz_t());
        if (rem != 0) {
            throw NonDivisibleError("exact_div: coefficient " + lrc.get_str() +
                                    " not divisible by " + lbc.get_str());
        }
        quot.add_term(t, c);
        // r -= (c * t) * sb.rest
        for (const auto& [mb, cb] : sb.rest.terms()) {
            r.add_term(t.times(mb), mpz_class(-c * cb));
        }
    }

    const std::int64_t ds = sa.vs - sb.vs;
    const std::int64_t dq = sa.vq - sb.vq;
    if (ds == 0 && dq == 0) return quot;
    return mul_serial(quot, MPoly::monomial(1, {0, static_cast<std::int32_t>(ds),
                                                static_cast<std::int32_t>(dq)}));
}

MPoly subst_s_scale(const MPoly& a, long k) {
    MPoly r;
    for (const auto& [m, c] : a.terms()) {
        r.add_term({m.ex, m.es, static_cast<std::int32_t>(m.eq + k * m.es)}, c);
    }
    return r;
}

MPoly subst_q_value(const MPoly& a, QSubst mode) {
    MPoly r;
    for (const auto& [m, c] : a.terms()) {
        if (mode == QSubst::one) {
            r.add_term({m.ex, m.es, 0}, c);
        } else {
            r.add_term({m.ex, m.es, -m.eq}, c);
        }
    }
    return r;
}

namespace {

mpq_class rational_pow(const mpq_class& base, std::int32_t e, const char* var) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) {
            throw PoleAtZeroError(std::string("eval_rational: ") + var +
                                  " = 0 raised to negative exponent");
        }
        return 0;
    }
    mpz_class num, den;
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -std::int64_t(e) : e);
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
    mpq_class r = e > 0 ? mpq_class(num) / mpq_class(den) : mpq_class(den) / mpq_class(num);
    r.canonicalize();
    return r;
}

} // namespace

mpq_class eval_rational(const MPoly& a, const mpq_class& x0, const mpq_class& s0,
                        const mpq_class& q0) {
    mpq_class total = 0;
    for (const auto& [m, c] : a.terms()) {
        mpq_class v(c);
        v *= rational_pow(x0, m.ex, "x");
        v *= rational_pow(s0, m.es, "s");
        v *= rational_pow(q0, m.eq, "q");
        total += v;
    }
    total.canonicalize();
    return total;
}

namespace {

void render_power(std::ostringstream& os, bool& first_factor, const char* var,
                  std::int32_t e) {
    if (e == 0) return;
    if (!first_factor) os << '*';
    first_factor = false;
    os << var;
    if (e != 1) os << '^' << e;
}

} // namespace

std::string to_canonical_text(const MPoly& a) {
    if (a.is_zero()) return "0";
    std::vector<std::pair<Monomial, const mpz_class*>> terms;
    terms.reserve(a.term_count());
    for (const auto& [m, c] : a.terms()) terms.emplace_back(m, &c);
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        return MonomialDisplayOrder{}(l.first, r.first);
    });

    std::ostringstream os;
    bool first = true;
    for (const auto& [m, cp] : terms) {
        const bool neg = *cp < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        mpz_class mag = neg ? mpz_class(-*cp) : *cp;
        bool first_factor = true;
        if (mag != 1 || m.is_unit()) {
            os << mag.get_str();
            first_factor = false;
        }
        render_power(os, first_factor, "q", m.eq);
        render_power(os, first_factor, "s", m.es);
        render_power(os, first_factor, "x", m.ex);
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse_canonical_text: " + why + " at offset " +
                                    std::to_string(pos));
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
            fail("expected integer");
        }
        return std::stol(text.substr(start, pos - start));
    }

    mpz_class parse_bigint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected number");
        return mpz_class(text.substr(start, pos - start));
    }

    // factor := NUMBER | var ['^' INT]
    void parse_factor(mpz_class& coeff, Monomial& mono) {
        skip_ws();
        if (pos >= text.size()) fail("expected factor");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_bigint();
            return;
        }
        if (c != 'x' && c != 's' && c != 'q') fail("expected variable or number");
        ++pos;
        long e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = parse_int();
        }
        if (c == 'x') mono.ex += static_cast<std::int32_t>(e);
        else if (c == 's') mono.es += static_cast<std::int32_t>(e);
        else mono.eq += static_cast<std::int32_t>(e);
    }

    void parse_term(MPoly& out, bool negative) {
        mpz_class coeff = negative ? -1 : 1;
        Monomial mono;
        parse_factor(coeff, mono);
        while (peek() == '*') {
            ++pos;
            parse_factor(coeff, mono);
        }
        if (mono.ex < 0) fail("negative x exponent");
        out.add_term(mono, coeff);
    }

    MPoly parse() {
        MPoly out;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        parse_term(out, neg);
        while (!eof()) {
            char c = peek();
            if (c == '+') neg = false;
            else if (c == '-') neg = true;
            else fail("expected '+' or '-'");
            ++pos;
            parse_term(out, neg);
        }
        return out;
    }
};

} // namespace

MPoly parse_canonical_text(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("parse_canonical_text: empty input");
    return p.parse();
}

} // namespace qfib
