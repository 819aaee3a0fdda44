#include "pgspectra/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace pgspectra {

IntPoly IntPoly::binomial_power(const mpz_class& c, unsigned e) {
    std::vector<mpz_class> out(e + 1);
    mpz_class binom = 1;
    // coefficient of x^k in (x + c)^e is binom(e, k) * c^(e-k)
    std::vector<mpz_class> cpow(e + 1);
    cpow[0] = 1;
    for (unsigned k = 1; k <= e; ++k) cpow[k] = cpow[k - 1] * c;
    for (unsigned k = 0; k <= e; ++k) {
        out[k] = binom * cpow[e - k];
        binom = binom * (e - k) / (k + 1);
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    if (s == 0) return IntPoly();
    std::vector<mpz_class> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r(1), base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * long(i);
    return IntPoly(std::move(out));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const mpz_class& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    const mpz_class g = content();
    std::vector<mpz_class> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(out));
}

std::optional<IntPoly> IntPoly::try_divexact(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quo(degree() - d.degree() + 1, 0);
    const mpz_class& lead = d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        mpz_class& top = rem[k + d.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        quo[k] = f;
        for (int i = 0; i <= d.degree(); ++i)
            mpz_submul(rem[k + i].get_mpz_t(), f.get_mpz_t(), d.c_[i].get_mpz_t());
    }
    for (const mpz_class& r : rem)
        if (r != 0) return std::nullopt;
    return IntPoly(std::move(quo));
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    auto q = try_divexact(d);
    if (!q) throw std::domain_error("divexact: not an exact divisor");
    return *std::move(q);
}

mpz_class IntPoly::eval(const mpz_class& t) const {
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= t;
        acc += c_[i];
    }
    return acc;
}

int IntPoly::sign_at(const mpq_class& t) const {
    if (is_zero()) return 0;
    // sign of f(u/v) equals sign of sum a_i u^i v^(d-i), v > 0
    const mpz_class& u = t.get_num();
    const mpz_class& v = t.get_den();
    mpz_class acc = c_.back();
    mpz_class vpow = 1;
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        acc *= u;
        vpow *= v;
        mpz_addmul(acc.get_mpz_t(), c_[i].get_mpz_t(), vpow.get_mpz_t());
    }
    return sgn(acc);
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

unsigned root_multiplicity(const IntPoly& f, const mpz_class& r) {
    if (f.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
    std::vector<mpz_class> cur = f.coefficients();
    unsigned mult = 0;
    while (cur.size() > 1) {
        // synthetic division by (x - r)
        std::vector<mpz_class> next(cur.size() - 1);
        mpz_class carry = cur.back();
        for (std::size_t i = cur.size() - 1; i-- > 0;) {
            next[i] = carry;
            carry = cur[i] + r * carry;
        }
        if (carry != 0) break;
        ++mult;
        cur = std::move(next);
    }
    return mult;
}

unsigned factor_multiplicity(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) throw std::invalid_argument("factor_multiplicity: zero polynomial");
    if (g.degree() < 1) throw std::invalid_argument("factor_multiplicity: constant divisor");
    unsigned mult = 0;
    IntPoly cur = f;
    while (auto q = cur.try_divexact(g)) {
        ++mult;
        cur = *std::move(q);
    }
    return mult;
}

namespace {

// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a mod d.
IntPoly pseudo_rem(IntPoly a, const IntPoly& d) {
    const mpz_class lead = d.leading();
    int e = a.degree() - d.degree() + 1;
    while (!a.is_zero() && a.degree() >= d.degree()) {
        const int shift = a.degree() - d.degree();
        std::vector<mpz_class> next(a.degree() + 1, 0);
        const mpz_class top = a.leading();
        for (int i = 0; i <= a.degree(); ++i) next[i] = a[i] * lead;
        for (int i = 0; i <= d.degree(); ++i)
            mpz_submul(next[i + shift].get_mpz_t(), top.get_mpz_t(),
                       d.coefficients()[i].get_mpz_t());
        a = IntPoly(std::move(next));
        --e;
    }
    // scale shortfall from early degree drops
    mpz_class extra = 1;
    for (int i = 0; i < e; ++i) extra *= lead;
    return e > 0 ? a * extra : a;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.primitive_part() * mpz_class(sgn(b.leading()));
    if (b.is_zero()) return a.primitive_part() * mpz_class(sgn(a.leading()));
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    // subresultant remainder sequence
    mpz_class h = 1, gg = 1;
    while (true) {
        const int delta = f.degree() - g.degree();
        IntPoly r = pseudo_rem(f, g);
        if (r.is_zero()) break;
        if (r.degree() == 0) {
            g = IntPoly(1);
            break;
        }
        f = g;
        mpz_class divisor = gg;
        for (int i = 0; i < delta; ++i) divisor *= h;
        std::vector<mpz_class> scaled(r.degree() + 1);
        for (int i = 0; i <= r.degree(); ++i)
            mpz_divexact(scaled[i].get_mpz_t(), r[i].get_mpz_t(), divisor.get_mpz_t());
        g = IntPoly(std::move(scaled));
        gg = f.leading();
        // h = h^(1-delta) * gg^delta
        if (delta == 0) {
            // unchanged
        } else if (delta == 1) {
            h = gg;
        } else {
            mpz_class num = 1;
            for (int i = 0; i < delta; ++i) num *= gg;
            mpz_class den = 1;
            for (int i = 0; i < delta - 1; ++i) den *= h;
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    IntPoly out = g.primitive_part();
    if (sgn(out.leading()) < 0) out = -out;
    return out;
}

SquarefreeDecomposition squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    SquarefreeDecomposition out;
    if (f.degree() == 0) {
        out.constant = f.leading();
        return out;
    }
    mpz_class cont = f.content();
    if (sgn(f.leading()) < 0) cont = -cont;
    out.constant = cont;
    IntPoly F = f.divexact(IntPoly(cont));

    // Yun's algorithm on the primitive, positive-leading part.
    IntPoly g = poly_gcd(F, F.derivative());
    IntPoly c = F.divexact(g);
    IntPoly d = F.derivative().divexact(g) - c.derivative();
    unsigned i = 1;
    while (c.degree() > 0) {
        IntPoly p = poly_gcd(c, d);
        if (p.degree() > 0) out.factors.emplace_back(p, i);
        c = c.divexact(p);
        d = d.divexact(p) - c.derivative();
        ++i;
    }
    return out;
}

QPoly::QPoly(const IntPoly& p) {
    c_.reserve(p.degree() + 1);
    for (const mpz_class& a : p.coefficients()) c_.emplace_back(a);
    normalize();
}

QPoly QPoly::operator-() const {
    std::vector<mpq_class> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return QPoly(std::move(out));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(out));
}

QPoly QPoly::operator*(const mpq_class& s) const {
    if (s == 0) return QPoly();
    std::vector<mpq_class> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
    return QPoly(std::move(out));
}

IntPoly QPoly::to_intpoly() const {
    std::vector<mpz_class> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].get_den() != 1)
            throw std::domain_error("QPoly::to_intpoly: non-integer coefficient");
        out[i] = c_[i].get_num();
    }
    return IntPoly(std::move(out));
}

std::pair<IntPoly, mpz_class> QPoly::clear_denominators() const {
    mpz_class scale = 1;
    for (const mpq_class& a : c_)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<mpz_class> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        mpq_class s = c_[i] * mpq_class(scale);
        out[i] = s.get_num();
    }
    return {IntPoly(std::move(out)), scale};
}

} // namespace pgspectra
