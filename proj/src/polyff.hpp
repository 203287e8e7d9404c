#pragma once

#include <cstdint>
#include <vector>

#include "ff.hpp"
#include "rng.hpp"

namespace blockeq::poly {

// Polynomials over GF(p), coefficient vector low degree first, normalized
// (no trailing zeros; the zero polynomial is the empty vector).
using Poly = std::vector<uint8_t>;

Poly normalize(Poly f);
inline bool isZero(const Poly& f) { return f.empty(); }
inline size_t degree(const Poly& f) { return f.empty() ? 0 : f.size() - 1; }

Poly add(const Poly& a, const Poly& b, unsigned p);
Poly sub(const Poly& a, const Poly& b, unsigned p);
Poly mul(const Poly& a, const Poly& b, unsigned p);
Poly scale(const Poly& a, uint8_t c, unsigned p);
// division with remainder: a = q*b + r
void divmod(const Poly& a, const Poly& b, unsigned p, Poly& q, Poly& r);
Poly mod(const Poly& a, const Poly& b, unsigned p);
Poly gcd(Poly a, Poly b, unsigned p);
Poly monic(Poly f, unsigned p);
Poly derivative(const Poly& f, unsigned p);
Poly powmod(const Poly& base, uint64_t e, const Poly& m, unsigned p);

uint8_t eval(const Poly& f, uint8_t x, unsigned p);

// Irreducible factors with multiplicities (squarefree + distinct-degree +
// Cantor-Zassenhaus equal-degree splitting; seeded).
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, unsigned p, Rng rng);

// Minimal polynomial of a square matrix (probabilistic Krylov + verification
// on extra random vectors, then exact check f(A)=0 if dimensions are modest).
Poly minimalPolynomial(const ff::Matrix& a, Rng rng);

// Evaluate f at a matrix.
ff::Matrix evalAt(const Poly& f, const ff::Matrix& a);

} // namespace blockeq::poly
