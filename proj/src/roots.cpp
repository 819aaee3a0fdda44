#include "pgspectra/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgspectra {

namespace {

// Remainder of a mod b over the rationals.
QPoly qmod(QPoly a, const QPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const mpq_class f = a[a.degree()] / b[b.degree()];
        const int shift = a.degree() - b.degree();
        std::vector<mpq_class> sub(shift + b.degree() + 1, 0);
        for (int i = 0; i <= b.degree(); ++i) sub[i + shift] = b[i] * f;
        a = a - QPoly(std::move(sub));
    }
    return a;
}

// Sturm chain of a square-free polynomial; ends with a nonzero constant.
std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (chain.back().degree() >= 1) {
        QPoly r = qmod(QPoly(chain[chain.size() - 2]), QPoly(chain.back()));
        if (r.is_zero()) break; // shared factor; caller guarantees square-free input
        IntPoly ir = (-r).clear_denominators().first.primitive_part();
        chain.push_back(std::move(ir));
    }
    return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const mpq_class& t) {
    int count = 0, last = 0;
    for (const IntPoly& s : chain) {
        const int sg = s.sign_at(t);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

mpq_class floor_q(const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return mpq_class(f);
}

struct Isolator {
    IntPoly f;
    std::vector<IntPoly> chain;
    mpq_class tol;
    std::vector<RealRoot> out;

    Isolator(IntPoly poly, mpq_class tolerance)
        : f(std::move(poly)), chain(sturm_chain(f)), tol(std::move(tolerance)) {}

    void push_exact(mpq_class r) {
        RealRoot root;
        root.lower = r;
        root.upper = r;
        root.exact = true;
        root.approx = mpq_class(r).get_d();
        out.push_back(std::move(root));
    }

    void refine(mpq_class a, mpq_class b) {
        // exactly one simple root in (a, b], f(a) != 0, f(b) != 0
        const int sa = f.sign_at(a);
        bool ints_checked = false;
        while (true) {
            if (!ints_checked && b - a <= 8) {
                for (mpq_class k = floor_q(a) + 1; k <= b; k += 1)
                    if (f.sign_at(k) == 0) {
                        push_exact(k);
                        return;
                    }
                ints_checked = true;
            }
            if (b - a < tol) break;
            mpq_class mid = (a + b) / 2;
            const int sm = f.sign_at(mid);
            if (sm == 0) {
                push_exact(mid);
                return;
            }
            if (sm == sa)
                a = mid;
            else
                b = mid;
        }
        RealRoot root;
        root.lower = a;
        root.upper = b;
        root.exact = false;
        root.approx = mpq_class((a + b) / 2).get_d();
        out.push_back(std::move(root));
    }

    void run() {
        if (f.degree() == 1) {
            mpq_class r(-f[0], f[1]);
            r.canonicalize();
            push_exact(r);
            return;
        }
        // Cauchy bound: all roots lie strictly inside (-B, B)
        mpz_class maxc = 0;
        for (const mpz_class& c : f.coefficients()) {
            mpz_class a = abs(c);
            if (a > maxc) maxc = a;
        }
        mpz_class lead = abs(f.leading());
        mpz_class bound;
        mpz_cdiv_q(bound.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
        bound += 1;
        struct Seg {
            mpq_class a, b;
            int va, vb;
        };
        std::vector<Seg> stack;
        const mpq_class lo = mpq_class(-bound), hi = mpq_class(bound);
        stack.push_back({lo, hi, sign_variations(chain, lo), sign_variations(chain, hi)});
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            const int roots = s.va - s.vb;
            if (roots <= 0) continue;
            if (roots == 1) {
                refine(s.a, s.b);
                continue;
            }
            mpq_class mid = (s.a + s.b) / 2;
            if (f.sign_at(mid) == 0) {
                // rational root hit: deflate and restart on the quotient
                push_exact(mid);
                IntPoly factor = IntPoly::linear(-mid.get_num(), mid.get_den());
                Isolator sub(f.divexact(factor), tol);
                sub.run();
                for (auto& r : sub.out) out.push_back(std::move(r));
                return;
            }
            const int vm = sign_variations(chain, mid);
            stack.push_back({s.a, mid, s.va, vm});
            stack.push_back({mid, s.b, vm, s.vb});
        }
    }
};

} // namespace

std::vector<RealRoot> real_roots(const IntPoly& f, const mpq_class& tol) {
    if (f.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
    const SquarefreeDecomposition sf = squarefree_decomposition(f);
    std::vector<RealRoot> all;
    for (const auto& [factor, mult] : sf.factors) {
        Isolator iso(factor, tol);
        iso.run();
        for (RealRoot& r : iso.out) {
            r.multiplicity = mult;
            all.push_back(std::move(r));
        }
    }
    std::sort(all.begin(), all.end(), [](const RealRoot& x, const RealRoot& y) {
        return x.midpoint() < y.midpoint();
    });
    return all;
}

std::vector<RealRoot> real_roots(const IntPoly& f) {
    return real_roots(f, mpq_class(mpz_class(1), mpz_class("1000000000000")));
}

u64 SpectrumReport::root_multiplicity_sum() const {
    u64 total_mult = 0;
    for (const auto& e : entries)
        for (const auto& r : e.roots)
            total_mult += r.multiplicity;
    return total_mult;
}

SpectrumReport spectrum_report(const IntPoly& charpoly) {
    if (charpoly.is_zero())
        throw std::invalid_argument("spectrum_report: zero polynomial");
    SpectrumReport rep;
    rep.total = charpoly.degree();
    const SquarefreeDecomposition sf = squarefree_decomposition(charpoly);
    for (const auto& [factor, mult] : sf.factors) {
        SpectrumEntry entry;
        entry.factor = factor;
        entry.multiplicity = mult;
        entry.roots = real_roots(factor);
        for (RealRoot& r : entry.roots) r.multiplicity = mult;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

} // namespace pgspectra
