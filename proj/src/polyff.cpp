#include "polyff.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockeq::poly {

Poly normalize(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly add(const Poly& a, const Poly& b, unsigned p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        unsigned v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        out[i] = uint8_t(v % p);
    }
    return normalize(std::move(out));
}

Poly sub(const Poly& a, const Poly& b, unsigned p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        unsigned av = i < a.size() ? a[i] : 0;
        unsigned bv = i < b.size() ? b[i] : 0;
        out[i] = uint8_t((av + p - bv) % p);
    }
    return normalize(std::move(out));
}

Poly mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = uint8_t((out[i + j] + a[i] * b[j]) % p);
    }
    return normalize(std::move(out));
}

Poly scale(const Poly& a, uint8_t c, unsigned p) {
    Poly out = a;
    for (auto& v : out) v = uint8_t((v * c) % p);
    return normalize(std::move(out));
}

void divmod(const Poly& a, const Poly& b, unsigned p, Poly& q, Poly& r) {
    if (b.empty()) throw std::domain_error("poly: division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    uint8_t leadInv = ff::ffInv(p, b.back());
    while (r.size() >= b.size() && !r.empty()) {
        size_t shift = r.size() - b.size();
        uint8_t c = uint8_t((r.back() * leadInv) % p);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] = uint8_t((r[shift + i] + p - (c * b[i]) % p) % p);
        r = normalize(std::move(r));
    }
    q = normalize(std::move(q));
}

Poly mod(const Poly& a, const Poly& b, unsigned p) {
    Poly q, r;
    divmod(a, b, p, q, r);
    return r;
}

Poly monic(Poly f, unsigned p) {
    f = normalize(std::move(f));
    if (f.empty()) return f;
    return scale(f, ff::ffInv(p, f.back()), p);
}

Poly gcd(Poly a, Poly b, unsigned p) {
    a = normalize(std::move(a));
    b = normalize(std::move(b));
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

Poly derivative(const Poly& f, unsigned p) {
    if (f.size() <= 1) return {};
    Poly out(f.size() - 1, 0);
    for (size_t i = 1; i < f.size(); ++i)
        out[i - 1] = uint8_t((f[i] * (i % p)) % p);
    return normalize(std::move(out));
}

Poly powmod(const Poly& base, uint64_t e, const Poly& m, unsigned p) {
    Poly result{1};
    Poly b = mod(base, m, p);
    while (e) {
        if (e & 1) result = mod(mul(result, b, p), m, p);
        b = mod(mul(b, b, p), m, p);
        e >>= 1;
    }
    return result;
}

uint8_t eval(const Poly& f, uint8_t x, unsigned p) {
    unsigned acc = 0;
    for (size_t i = f.size(); i-- > 0;)
        acc = (acc * x + f[i]) % p;
    return uint8_t(acc);
}

namespace {

// squarefree decomposition: returns (g_i, i) with f = prod g_i^i
std::vector<std::pair<Poly, unsigned>> squarefree(Poly f, unsigned p) {
    std::vector<std::pair<Poly, unsigned>> out;
    f = monic(std::move(f), p);
    unsigned e = 1;
    while (degree(f) > 0) {
        Poly d = derivative(f, p);
        if (isZero(d)) {
            // f = g(x^p); take p-th root by exponent division
            Poly g((degree(f) / p) + 1, 0);
            for (size_t i = 0; i < g.size(); ++i) g[i] = f[i * p];
            f = normalize(std::move(g));
            e *= p;
            continue;
        }
        Poly c = gcd(f, d, p);
        Poly w;
        {
            Poly q, r;
            divmod(f, c, p, q, r);
            w = q;
        }
        unsigned i = 1;
        while (degree(w) > 0) {
            Poly y = gcd(w, c, p);
            Poly fac;
            {
                Poly q, r;
                divmod(w, y, p, q, r);
                fac = q;
            }
            if (degree(fac) > 0) out.emplace_back(monic(fac, p), i * e);
            w = y;
            Poly q, r;
            divmod(c, y, p, q, r);
            c = q;
            ++i;
        }
        f = c;
    }
    return out;
}

// distinct degree factorization of squarefree monic f
std::vector<std::pair<Poly, unsigned>> distinctDegree(const Poly& f, unsigned p) {
    std::vector<std::pair<Poly, unsigned>> out; // (product of irreducibles of degree d, d)
    Poly rem = f;
    Poly x{0, 1};
    Poly h = x;
    unsigned d = 0;
    while (degree(rem) >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, p, rem, p);
        Poly g = gcd(sub(h, x, p), rem, p);
        if (degree(g) > 0) {
            out.emplace_back(g, d);
            Poly q, r;
            divmod(rem, g, p, q, r);
            rem = q;
            h = mod(h, rem, p);
        }
    }
    if (degree(rem) > 0) out.emplace_back(rem, unsigned(degree(rem)));
    return out;
}

// Cantor-Zassenhaus equal-degree splitting
void equalDegree(const Poly& f, unsigned d, unsigned p, Rng& rng, std::vector<Poly>& out) {
    if (degree(f) == d) {
        out.push_back(monic(f, p));
        return;
    }
    Poly g;
    while (true) {
        Poly a(degree(f), 0);
        for (auto& c : a) c = rng.fieldElement(p);
        a = normalize(std::move(a));
        if (degree(a) < 1) continue;
        if (p == 2) {
            // trace map
            Poly t = a;
            Poly acc = a;
            for (unsigned i = 1; i < d; ++i) {
                t = powmod(t, 2, f, 2);
                acc = add(acc, t, 2);
            }
            g = gcd(acc, f, 2);
        } else {
            uint64_t e = 1;
            for (unsigned i = 0; i < d; ++i) e *= p;
            e = (e - 1) / 2;
            Poly b = powmod(a, e, f, p);
            g = gcd(sub(b, Poly{1}, p), f, p);
        }
        if (degree(g) > 0 && degree(g) < degree(f)) break;
    }
    Poly q, r;
    divmod(f, g, p, q, r);
    equalDegree(g, d, p, rng, out);
    equalDegree(q, d, p, rng, out);
}

} // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, unsigned p, Rng rng) {
    std::vector<std::pair<Poly, unsigned>> out;
    for (auto& [sf, mult] : squarefree(f, p)) {
        for (auto& [dd, d] : distinctDegree(sf, p)) {
            std::vector<Poly> irr;
            equalDegree(dd, d, p, rng, irr);
            for (auto& g : irr) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Poly minimalPolynomial(const ff::Matrix& a, Rng rng) {
    size_t n = a.rows();
    unsigned p = a.p();
    if (n == 0) return Poly{1};
    Poly m{1};
    auto krylovMin = [&](const ff::RowVec& v0) {
        // relation polynomial of the Krylov sequence v0, v0 a, v0 a^2, ...
        ff::EchelonBasis basis(p, n);
        std::vector<ff::RowVec> seq;
        ff::RowVec v = v0;
        while (basis.insert(v)) {
            seq.push_back(v);
            ff::RowVec w(n, 0);
            for (size_t k = 0; k < n; ++k)
                if (v[k]) ff::addMulRow(w.data(), a.row(k), n, v[k], p);
            v = std::move(w);
        }
        // v = sum c_i seq[i]; relation x^t - sum c_i x^i
        size_t t = seq.size();
        ff::Matrix sm(p, t, n);
        for (size_t i = 0; i < t; ++i)
            std::copy(seq[i].begin(), seq[i].end(), sm.row(i));
        auto coords = ff::solveLeft(sm, v);
        if (!coords) throw std::runtime_error("minpoly: krylov inconsistency");
        Poly rel(t + 1, 0);
        rel[t] = 1;
        for (size_t i = 0; i < t; ++i) rel[i] = ff::ffNeg(p, (*coords)[i]);
        return normalize(std::move(rel));
    };
    auto absorb = [&](const ff::RowVec& v) {
        Poly rel = krylovMin(v);
        Poly l = mul(m, rel, p);
        Poly g = gcd(m, rel, p);
        Poly q, r;
        divmod(l, g, p, q, r); // lcm
        m = std::move(q);
    };
    auto applyM = [&](const ff::RowVec& v) {
        // Horner: m(a) applied to v
        ff::RowVec acc(n, 0);
        for (size_t i = m.size(); i-- > 0;) {
            ff::RowVec next(n, 0);
            for (size_t k = 0; k < n; ++k)
                if (acc[k]) ff::addMulRow(next.data(), a.row(k), n, acc[k], p);
            if (m[i])
                ff::addMulRow(next.data(), v.data(), n, m[i], p);
            acc = std::move(next);
        }
        return acc;
    };
    size_t seeds = std::min<size_t>(n, 4);
    for (size_t i = 0; i < seeds; ++i) {
        ff::RowVec v(n, 0);
        v[i] = 1;
        absorb(v);
        if (degree(m) == n) return monic(std::move(m), p);
    }
    // verify on random vectors; absorb any counterexample
    size_t checks = 0;
    while (checks < 24) {
        ff::RowVec v(n, 0);
        for (auto& c : v) c = rng.fieldElement(p);
        ff::RowVec r = applyM(v);
        bool zero = std::all_of(r.begin(), r.end(), [](uint8_t x) { return x == 0; });
        if (zero) {
            ++checks;
        } else {
            absorb(v);
            checks = 0;
            if (degree(m) == n) break;
        }
    }
    return monic(std::move(m), p);
}

ff::Matrix evalAt(const Poly& f, const ff::Matrix& a) {
    size_t n = a.rows();
    unsigned p = a.p();
    ff::Matrix acc(p, n, n);
    for (size_t i = f.size(); i-- > 0;) {
        acc = acc.multiply(a);
        if (f[i]) {
            for (size_t r = 0; r < n; ++r)
                acc.set(r, r, uint8_t((acc.at(r, r) + f[i]) % p));
        }
    }
    return acc;
}

} // namespace blockeq::poly
