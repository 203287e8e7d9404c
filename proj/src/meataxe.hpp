#pragma once

#include <optional>
#include <vector>

#include "gmodule.hpp"
#include "homs.hpp"
#include "polyff.hpp"

namespace blockeq::mod {

// Formal algebra element: sum of coeff * (product of generators), evaluable
// in any module over a group with the same generator count.
struct AlgebraWord {
    std::vector<std::pair<uint8_t, std::vector<uint32_t>>> terms;
    Matrix evalIn(const GModule& m) const;
};

AlgebraWord randomAlgebraWord(size_t genCount, unsigned p, Rng& rng, size_t maxTerms = 4,
                              size_t maxLen = 5);

// MeatAxe chop: composition factors in series order (bottom factor first),
// each returned as its own GModule. Norton-certified irreducibility.
std::vector<GModule> compositionSeriesFactors(const GModule& m, Rng rng, size_t budget = 400);

bool isIrreducible(const GModule& m, Rng rng, size_t budget = 400);

// Certified isomorphism test for two irreducible modules (standard basis).
bool isomorphicSimples(const GModule& a, const GModule& b, Rng rng, size_t budget = 400);

struct FactorMult {
    GModule rep;
    size_t mult;
};
// Deduplicated composition factors with multiplicities.
std::vector<FactorMult> compositionFactors(const GModule& m, Rng rng, size_t budget = 400);

// Largest semisimple submodule with all factors in X (rows, canonical RREF).
Matrix semisimpleXRadRows(const GModule& m, const std::vector<GModule>& x);

Matrix socleRows(const GModule& m, Rng rng);
Matrix radicalRows(const GModule& m, Rng rng);

// Ascending socle series: rows of soc_1 < soc_2 < ... < M.
std::vector<Matrix> socleSeriesRows(const GModule& m, Rng rng);

// W with Mrows <= W <= P and W/Mrows the X-radical of P/Mrows (Appendix-style
// iterated semisimple X-radical pullback).
Matrix preImageXRadicalRows(const GModule& p, const Matrix& mrows, const std::vector<GModule>& x);

// head(M) = M / rad(M) as a quotient result
QuotientResult headOf(const GModule& m, Rng rng);

} // namespace blockeq::mod
