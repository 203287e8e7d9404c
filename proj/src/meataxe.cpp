#include "meataxe.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace blockeq::mod {

Matrix AlgebraWord::evalIn(const GModule& m) const {
    Matrix acc(m.p(), m.dim(), m.dim());
    for (const auto& [coeff, word] : terms) {
        Matrix t = Matrix::identity(m.p(), m.dim());
        for (uint32_t gi : word) t = t.multiply(m.action(gi));
        acc = acc.add(t.scaled(coeff));
    }
    return acc;
}

AlgebraWord randomAlgebraWord(size_t genCount, unsigned p, Rng& rng, size_t maxTerms, size_t maxLen) {
    AlgebraWord w;
    size_t terms = 1 + rng.below(maxTerms);
    for (size_t t = 0; t < terms; ++t) {
        std::vector<uint32_t> word;
        size_t len = 1 + rng.below(maxLen);
        for (size_t i = 0; i < len; ++i)
            word.push_back(uint32_t(rng.below(genCount)));
        w.terms.emplace_back(rng.nonzeroFieldElement(p), std::move(word));
    }
    return w;
}

namespace {

// left kernel of A (vectors v with v*A = 0) as RREF rows
Matrix leftKernel(const Matrix& a) { return ff::nullspaceBasis(a.transpose()); }

std::vector<Matrix> transposedActions(const GModule& m) {
    std::vector<Matrix> out;
    for (const Matrix& a : m.actions()) out.push_back(a.transpose());
    return out;
}

} // namespace

std::vector<GModule> compositionSeriesFactors(const GModule& m, Rng rng, size_t budget) {
    if (m.dim() == 0) return {};
    if (m.dim() == 1) return {m};
    size_t genCount = m.actions().size();
    if (genCount == 0)
        throw std::invalid_argument("chop: module over a generator-free group of dim > 1");

    for (size_t attempt = 0; attempt < budget; ++attempt) {
        AlgebraWord aw = randomAlgebraWord(genCount, m.p(), rng);
        Matrix theta = aw.evalIn(m);
        poly::Poly mp = poly::minimalPolynomial(theta, rng.child("minpoly"));
        auto factors = poly::factor(mp, m.p(), rng.child("factor"));
        std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
            return a.first.size() < b.first.size();
        });
        for (const auto& [phi, mult] : factors) {
            Matrix a = poly::evalAt(phi, theta);
            Matrix ker = leftKernel(a);
            if (ker.rows() == 0) continue;
            // try kernel vectors for a split
            bool allFull = true;
            for (size_t i = 0; i < ker.rows(); ++i) {
                Matrix w = ff::spinSpace(ker.submatrixRows({i}), m.actions());
                if (w.rows() < m.dim()) {
                    allFull = false;
                    auto sub = submoduleSpin(m, w);
                    auto quo = quotient(m, w);
                    auto lower = compositionSeriesFactors(sub.sub, rng.child("sub"), budget);
                    auto upper = compositionSeriesFactors(quo.quotient, rng.child("quo"), budget);
                    lower.insert(lower.end(), upper.begin(), upper.end());
                    return lower;
                }
            }
            // Norton certificate needs the kernel to be k[theta]-irreducible
            if (allFull && ker.rows() == poly::degree(phi)) {
                Matrix kerT = ff::nullspaceBasis(a); // kernel on the transposed side
                if (kerT.rows() != ker.rows())
                    continue;
                Matrix wdual = ff::spinSpace(kerT.submatrixRows({0}), transposedActions(m));
                if (wdual.rows() < m.dim()) {
                    // perp of a transposed-module submodule is a submodule
                    Matrix sub = ff::nullspaceBasis(wdual);
                    if (sub.rows() == 0 || sub.rows() == m.dim())
                        throw std::runtime_error("chop: inconsistent dual split");
                    auto s = submoduleSpin(m, sub);
                    auto q = quotient(m, sub);
                    auto lower = compositionSeriesFactors(s.sub, rng.child("dsub"), budget);
                    auto upper = compositionSeriesFactors(q.quotient, rng.child("dquo"), budget);
                    lower.insert(lower.end(), upper.begin(), upper.end());
                    return lower;
                }
                return {m}; // irreducible, certified
            }
        }
    }
    throw std::runtime_error("chop: randomization budget exhausted; raise budget or change seed");
}

bool isIrreducible(const GModule& m, Rng rng, size_t budget) {
    if (m.dim() == 0) return false;
    return compositionSeriesFactors(m, rng, budget).size() == 1;
}

namespace {

// Deterministic spin schedule from one seed vector. Returns the ordered basis
// rows and the (sourceIndex, generatorIndex) schedule, or nullopt if the
// replayed schedule hits a dependence (only possible on replay).
struct SpinSchedule {
    Matrix basis; // rows in discovery order
    std::vector<std::pair<size_t, size_t>> ops;
};

std::optional<SpinSchedule> spinWithSchedule(const GModule& m, const ff::RowVec& seed,
                                             const std::vector<std::pair<size_t, size_t>>* replay) {
    size_t n = m.dim();
    ff::EchelonBasis ech(m.p(), n);
    std::vector<ff::RowVec> ordered;
    std::vector<std::pair<size_t, size_t>> ops;
    if (!ech.insert(seed)) return std::nullopt;
    ordered.push_back(seed);
    if (replay) {
        for (auto [src, gi] : *replay) {
            if (src >= ordered.size()) return std::nullopt;
            const ff::RowVec& v = ordered[src];
            ff::RowVec w(n, 0);
            const Matrix& a = m.action(gi);
            for (size_t k = 0; k < n; ++k)
                if (v[k]) ff::addMulRow(w.data(), a.row(k), n, v[k], m.p());
            if (!ech.insert(w)) return std::nullopt;
            ordered.push_back(std::move(w));
        }
    } else {
        for (size_t i = 0; i < ordered.size(); ++i) {
            for (size_t gi = 0; gi < m.actions().size(); ++gi) {
                const ff::RowVec& v = ordered[i];
                ff::RowVec w(n, 0);
                const Matrix& a = m.action(gi);
                for (size_t k = 0; k < n; ++k)
                    if (v[k]) ff::addMulRow(w.data(), a.row(k), n, v[k], m.p());
                if (ech.insert(w)) {
                    ordered.push_back(std::move(w));
                    ops.emplace_back(i, gi);
                }
            }
        }
    }
    SpinSchedule out;
    out.basis = Matrix(m.p(), ordered.size(), n);
    for (size_t i = 0; i < ordered.size(); ++i)
        std::copy(ordered[i].begin(), ordered[i].end(), out.basis.row(i));
    out.ops = std::move(ops);
    return out;
}

// nonzero vectors of the row space of K, one per projective point
std::vector<ff::RowVec> projectivePoints(const Matrix& k) {
    std::vector<ff::RowVec> pts;
    size_t d = k.rows();
    unsigned p = k.p();
    if (d == 0) return pts;
    std::vector<uint8_t> c(d, 0);
    // first nonzero coordinate equal to 1
    std::function<void(size_t, bool)> rec = [&](size_t i, bool lead) {
        if (i == d) {
            if (!lead) return;
            ff::RowVec v(k.cols(), 0);
            for (size_t j = 0; j < d; ++j)
                if (c[j]) ff::addMulRow(v.data(), k.row(j), k.cols(), c[j], p);
            pts.push_back(std::move(v));
            return;
        }
        if (!lead) {
            c[i] = 0;
            rec(i + 1, false);
            c[i] = 1;
            rec(i + 1, true);
        } else {
            for (unsigned v = 0; v < p; ++v) {
                c[i] = uint8_t(v);
                rec(i + 1, true);
            }
        }
        c[i] = 0;
    };
    rec(0, false);
    return pts;
}

} // namespace

bool isomorphicSimples(const GModule& a, const GModule& b, Rng rng, size_t budget) {
    if (a.dim() != b.dim() || a.p() != b.p()) return false;
    if (a.actions().size() != b.actions().size())
        throw std::invalid_argument("isomorphicSimples: generator count mismatch");
    if (a.dim() == 0) return true;
    size_t genCount = a.actions().size();
    for (size_t attempt = 0; attempt < budget; ++attempt) {
        AlgebraWord aw = randomAlgebraWord(genCount, a.p(), rng);
        Matrix ta = aw.evalIn(a);
        poly::Poly mp = poly::minimalPolynomial(ta, rng.child("mp"));
        auto factors = poly::factor(mp, a.p(), rng.child("f"));
        std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) {
            return x.first.size() < y.first.size();
        });
        for (const auto& [phi, mult] : factors) {
            Matrix ka = leftKernel(poly::evalAt(phi, ta));
            if (ka.rows() == 0 || ka.rows() != poly::degree(phi) || ka.rows() > 3)
                continue;
            Matrix tb = aw.evalIn(b);
            Matrix kb = leftKernel(poly::evalAt(phi, tb));
            if (kb.rows() != ka.rows()) return false; // same word acts differently
            ff::RowVec va(ka.row(0), ka.row(0) + a.dim());
            auto schedA = spinWithSchedule(a, va, nullptr);
            if (!schedA || schedA->basis.rows() != a.dim()) continue; // not a generator (should not happen for simple)
            for (const ff::RowVec& vb : projectivePoints(kb)) {
                auto schedB = spinWithSchedule(b, vb, &schedA->ops);
                if (!schedB || schedB->basis.rows() != b.dim()) continue;
                // T = basisA^-1 * basisB intertwines iff iso
                auto inv = ff::inverse(schedA->basis);
                if (!inv) continue;
                Matrix t = inv->multiply(schedB->basis);
                ModuleMap f{a, b, t};
                if (f.intertwines()) return true;
            }
            return false; // certified: no kernel vector of b matches
        }
    }
    throw std::runtime_error("isomorphicSimples: budget exhausted");
}

std::vector<FactorMult> compositionFactors(const GModule& m, Rng rng, size_t budget) {
    auto raw = compositionSeriesFactors(m, rng.child("chop"), budget);
    std::vector<FactorMult> out;
    for (auto& f : raw) {
        bool merged = false;
        for (auto& fm : out) {
            if (fm.rep.dim() == f.dim() &&
                isomorphicSimples(fm.rep, f, rng.child("dedupe"), budget)) {
                ++fm.mult;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({std::move(f), 1});
    }
    std::sort(out.begin(), out.end(),
              [](const FactorMult& a, const FactorMult& b) { return a.rep.dim() < b.rep.dim(); });
    return out;
}

Matrix semisimpleXRadRows(const GModule& m, const std::vector<GModule>& x) {
    ff::EchelonBasis acc(m.p(), m.dim());
    for (const GModule& s : x) {
        if (s.dim() == 0) continue;
        auto homs = homSpaceDirect(s, m);
        for (const Matrix& f : homs)
            for (size_t r = 0; r < f.rows(); ++r)
                acc.insert(ff::RowVec(f.row(r), f.row(r) + m.dim()));
    }
    return acc.toMatrix();
}

Matrix socleRows(const GModule& m, Rng rng) {
    if (m.dim() == 0) return Matrix(m.p(), 0, 0);
    auto cf = compositionFactors(m, rng.child("socle-cf"));
    std::vector<GModule> x;
    for (auto& fm : cf) x.push_back(fm.rep);
    return semisimpleXRadRows(m, x);
}

Matrix radicalRows(const GModule& m, Rng rng) {
    if (m.dim() == 0) return Matrix(m.p(), 0, 0);
    auto cf = compositionFactors(m, rng.child("rad-cf"));
    // rad M = intersection of kernels of all maps M -> S
    std::vector<Matrix> cols;
    size_t total = 0;
    for (auto& fm : cf) {
        auto homs = homSpaceDirect(m, fm.rep);
        for (auto& f : homs) {
            cols.push_back(f);
            total += f.cols();
        }
    }
    if (cols.empty()) return ff::rref(Matrix::identity(m.p(), m.dim())).reduced;
    Matrix stacked(m.p(), m.dim(), total);
    size_t off = 0;
    for (const Matrix& f : cols) {
        for (size_t r = 0; r < m.dim(); ++r)
            for (size_t c = 0; c < f.cols(); ++c)
                stacked.set(r, off + c, f.at(r, c));
        off += f.cols();
    }
    // v * stacked = 0
    return ff::nullspaceBasis(stacked.transpose());
}

std::vector<Matrix> socleSeriesRows(const GModule& m, Rng rng) {
    std::vector<Matrix> chain;
    Matrix cur(m.p(), 0, m.dim());
    size_t guard = 0;
    while (cur.rows() < m.dim()) {
        if (++guard > m.dim() + 1) throw std::runtime_error("socleSeries: failed to terminate");
        QuotientResult q = quotient(m, cur);
        Matrix socQ = socleRows(q.quotient, rng.child("layer" + std::to_string(guard)));
        if (socQ.rows() == 0) throw std::runtime_error("socleSeries: zero socle of nonzero quotient");
        cur = preimageRows(q, socQ, cur);
        chain.push_back(cur);
    }
    return chain;
}

Matrix preImageXRadicalRows(const GModule& p, const Matrix& mrows, const std::vector<GModule>& x) {
    Matrix n = ff::rref(mrows).reduced;
    while (true) {
        QuotientResult q = quotient(p, n);
        Matrix r = semisimpleXRadRows(q.quotient, x);
        if (r.rows() == 0) return n;
        Matrix n2 = preimageRows(q, r, n);
        if (n2.rows() == n.rows()) return n;
        n = std::move(n2);
    }
}

QuotientResult headOf(const GModule& m, Rng rng) {
    return quotient(m, radicalRows(m, rng));
}

} // namespace blockeq::mod
