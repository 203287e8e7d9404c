#include "homs.hpp"

#include <cstring>
#include <stdexcept>

namespace blockeq::mod {

std::vector<Matrix> intertwinerSpace(const std::vector<Matrix>& src,
                                     const std::vector<Matrix>& dst,
                                     unsigned p, size_t dimSrc, size_t dimDst) {
    size_t mn = dimSrc * dimDst;
    if (mn == 0) return {};
    size_t gens = src.size();
    // constraints: A_g X - X B_g = 0, vec by rows: (A ⊗ I - I ⊗ B^T) vec(X) = 0
    Matrix sys(p, gens * mn, mn);
    for (size_t g = 0; g < gens; ++g) {
        const Matrix& a = src[g];
        const Matrix& b = dst[g];
        for (size_t i = 0; i < dimSrc; ++i)
            for (size_t k = 0; k < dimDst; ++k) {
                uint8_t* row = sys.row(g * mn + i * dimDst + k);
                // d/dX_{j,l} of (A X)_{i,k} = A_{i,j} δ_{l,k}
                for (size_t j = 0; j < dimSrc; ++j)
                    if (a.at(i, j)) row[j * dimDst + k] = a.at(i, j);
                // minus (X B)_{i,k}: X_{i,l} B_{l,k}
                for (size_t l = 0; l < dimDst; ++l) {
                    uint8_t v = b.at(l, k);
                    if (v) {
                        size_t idx = i * dimDst + l;
                        row[idx] = uint8_t((row[idx] + p - v) % p);
                    }
                }
            }
    }
    Matrix null = ff::nullspaceBasis(sys);
    std::vector<Matrix> out;
    for (size_t r = 0; r < null.rows(); ++r) {
        Matrix x(p, dimSrc, dimDst);
        std::memcpy(x.data().data(), null.row(r), mn);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Matrix> homSpaceDirect(const GModule& m, const GModule& n) {
    if (m.group() != n.group() || m.p() != n.p())
        throw std::invalid_argument("homSpace: group/field mismatch");
    return intertwinerSpace(m.actions(), n.actions(), m.p(), m.dim(), n.dim());
}

std::pair<Matrix, size_t> maxRankCombination(const std::vector<Matrix>& basis,
                                             unsigned p, Rng rng, size_t randomTries) {
    if (basis.empty()) return {Matrix(p, 0, 0), 0};
    size_t rows = basis[0].rows(), cols = basis[0].cols();
    size_t best = 0;
    Matrix bestM(p, rows, cols);
    size_t cap = std::min(rows, cols);
    auto tryCoeffs = [&](const std::vector<uint8_t>& c) {
        Matrix acc(p, rows, cols);
        for (size_t i = 0; i < basis.size(); ++i)
            if (c[i]) acc = acc.add(basis[i].scaled(c[i]));
        size_t r = ff::rank(acc);
        if (r > best) {
            best = r;
            bestM = std::move(acc);
        }
        return best == cap;
    };
    std::vector<uint8_t> c(basis.size(), 0);
    for (size_t t = 0; t < randomTries; ++t) {
        for (auto& v : c) v = rng.fieldElement(p);
        if (tryCoeffs(c)) return {bestM, best};
    }
    // deterministic greedy sweep, one coordinate at a time
    std::fill(c.begin(), c.end(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<uint8_t> bestLocal = c;
        size_t bestLocalRank = best;
        for (unsigned v = 0; v < p; ++v) {
            c[i] = uint8_t(v);
            Matrix acc(p, rows, cols);
            for (size_t k = 0; k <= i; ++k)
                if (c[k]) acc = acc.add(basis[k].scaled(c[k]));
            size_t r = ff::rank(acc);
            if (r >= bestLocalRank) {
                bestLocalRank = r;
                bestLocal = c;
                if (r > best) {
                    best = r;
                    bestM = std::move(acc);
                }
            }
        }
        c = bestLocal;
        if (best == cap) break;
    }
    return {bestM, best};
}

std::optional<Matrix> isoViaHomSearch(const GModule& m, const GModule& n,
                                      const std::vector<Matrix>& homMN,
                                      const std::vector<Matrix>& homNM,
                                      Rng rng) {
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return Matrix(m.p(), 0, 0);
    if (homMN.empty() || homNM.empty()) return std::nullopt;
    auto [f, r] = maxRankCombination(homMN, m.p(), rng);
    if (r == m.dim()) return f;
    return std::nullopt;
}

} // namespace blockeq::mod
