#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ff.hpp"
#include "group.hpp"
#include "rng.hpp"

namespace blockeq::mod {

using ff::Matrix;
using grp::FinGroup;
using grp::GroupPtr;
using grp::Perm;
using grp::Subgroup;
using grp::Word;

// A finitely generated module over kG, given by one invertible action matrix
// per group generator. Row-vector convention: vectors act as v -> v*rho(g),
// and rho is a homomorphism, so modules are right kG-modules computationally;
// the left-module reading is g.v := v*rho(g^-1) and never appears explicitly.
class GModule {
public:
    GModule() = default;
    GModule(GroupPtr group, unsigned p, std::vector<Matrix> actions);

    const GroupPtr& group() const { return group_; }
    unsigned p() const { return p_; }
    size_t dim() const { return dim_; }
    const std::vector<Matrix>& actions() const { return actions_; }
    const Matrix& action(size_t gi) const { return actions_[gi]; }

    Matrix actionOfWord(const Word& w) const;
    Matrix actionOfElement(const Perm& g) const; // needs enumerable group

    // Spot-check that rho respects the group structure on random elements.
    bool spotCheckRelations(Rng rng, size_t samples = 8) const;

    bool isZero() const { return dim_ == 0; }

private:
    GroupPtr group_;
    unsigned p_ = 0;
    size_t dim_ = 0;
    std::vector<Matrix> actions_;
};

// A matrix intertwining two modules over the same group: f(v) = v * mat,
// with rho_src(g) * mat = mat * rho_dst(g) for every generator g.
struct ModuleMap {
    GModule source;
    GModule target;
    Matrix mat;

    bool intertwines() const;
    size_t rank() const { return ff::rank(mat); }
    bool isInjective() const { return rank() == source.dim(); }
    bool isSurjective() const { return rank() == target.dim(); }
    bool isIso() const { return source.dim() == target.dim() && isInjective(); }
};

// Basic constructions
GModule trivialModule(const GroupPtr& g, unsigned p);
GModule zeroModule(const GroupPtr& g, unsigned p);
GModule regularModule(const GroupPtr& g, unsigned p);
GModule permutationModule(const GroupPtr& g, unsigned p); // natural point action
GModule dualModule(const GModule& m);
GModule tensorProduct(const GModule& a, const GModule& b); // same group, diagonal
GModule directSum(const GModule& a, const GModule& b);
GModule directSum(const std::vector<GModule>& parts);

// Module from explicit action matrices of subgroup generators, where each
// subgroup generator is expressed as a word in the ambient module's group.
GModule restriction(const GModule& m, const Subgroup& h);

// Induction along H <= G via a left transversal (BFS order).
GModule induction(const GModule& v, const Subgroup& h, const GroupPtr& g);

struct SubmoduleResult {
    GModule sub;
    ModuleMap inclusion;   // sub -> ambient, matrix = echelon basis rows
};
struct QuotientResult {
    GModule quotient;
    ModuleMap projection;  // ambient -> quotient
};

// Minimal submodule containing the seed rows (rows of `vectors`).
SubmoduleResult submoduleSpin(const GModule& m, const Matrix& vectors);
// Quotient by the row space of basisRows (must be invariant).
QuotientResult quotient(const GModule& m, const Matrix& basisRows);

// Row space of the inclusion of a spin-submodule, as a canonical RREF matrix.
Matrix invariantSubspace(const GModule& m, const Matrix& seeds);

// Pull a submodule of a quotient back to the ambient module:
// given Q = M/B with projection proj and a submodule S <= Q (rows in Q
// coordinates), return the RREF basis of its preimage in M.
Matrix preimageRows(const QuotientResult& q, const Matrix& subRows, const Matrix& kernelRows);

ModuleMap composeMaps(const ModuleMap& f, const ModuleMap& g); // f then g

// Save/load: one matrix per generator.
std::string moduleToString(const GModule& m);
GModule moduleFromString(const GroupPtr& g, unsigned p, const std::string& text);

} // namespace blockeq::mod
