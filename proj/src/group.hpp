#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rng.hpp"

namespace blockeq::grp {

// Permutation on points 0..degree-1 (printed 1-based in cycle notation).
class Perm {
public:
    Perm() = default;
    explicit Perm(size_t degree);
    explicit Perm(std::vector<uint16_t> images) : img_(std::move(images)) {}

    static Perm identity(size_t degree) { return Perm(degree); }
    static Perm parseCycles(const std::string& text, size_t degree);

    size_t degree() const { return img_.size(); }
    uint16_t operator[](size_t i) const { return img_[i]; }
    const std::vector<uint16_t>& images() const { return img_; }

    Perm compose(const Perm& rhs) const; // (this*rhs)(x) = rhs(this(x)): apply this first
    Perm inverse() const;
    bool isIdentity() const;
    size_t order() const;

    bool operator==(const Perm& o) const = default;
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    std::string cycleString() const;

    struct Hash {
        size_t operator()(const Perm& p) const {
            size_t h = 1469598103934665603ull;
            for (uint16_t v : p.img_) {
                h ^= v;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

private:
    std::vector<uint16_t> img_;
};

// A word in generators: sequence of (generator index, +1/-1).
using Word = std::vector<std::pair<uint32_t, int8_t>>;

class FinGroup;
using GroupPtr = std::shared_ptr<const FinGroup>;

// Finite permutation group with a cached breadth-first enumeration.
// Immutable after construction; the element cache is built on first use.
class FinGroup : public std::enable_shared_from_this<FinGroup> {
public:
    static GroupPtr make(size_t degree, std::vector<Perm> generators,
                         size_t enumerationCap = 1000000);

    size_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    // Enumeration (BFS over generator words, deterministic).
    size_t order() const;
    const std::vector<Perm>& elements() const;
    std::optional<size_t> indexOf(const Perm& g) const;
    bool contains(const Perm& g) const { return indexOf(g).has_value(); }
    const Perm& element(size_t i) const { return elements()[i]; }

    // Word for element i in the group's own generators.
    Word wordFor(size_t i) const;
    Word wordFor(const Perm& g) const;
    Perm evalWord(const Word& w) const;

    size_t enumerationCap() const { return cap_; }

private:
    FinGroup(size_t degree, std::vector<Perm> gens, size_t cap);
    void ensureEnumerated() const;

    size_t degree_;
    std::vector<Perm> gens_;
    size_t cap_;

    mutable bool enumerated_ = false;
    mutable std::vector<Perm> elems_;
    mutable std::unordered_map<Perm, size_t, Perm::Hash> index_;
    // parent BFS links: element -> (previous element index, generator index);
    // identity has parent = npos
    mutable std::vector<std::pair<size_t, uint32_t>> parent_;
};

struct Subgroup {
    GroupPtr parent;
    std::vector<Perm> generators;

    GroupPtr asGroup(size_t cap = 1000000) const;
    bool containsElement(const Perm& g) const;
};

// Deterministic sorted element list of the subgroup generated inside parent.
std::vector<Perm> subgroupElements(const Subgroup& s);
size_t subgroupOrder(const Subgroup& s);

Subgroup centralizer(const GroupPtr& g, const Subgroup& s);
Subgroup normalizer(const GroupPtr& g, const Subgroup& s);
Subgroup sylow(const GroupPtr& g, unsigned ell);

// All complements of normal Q in N, deterministic order; empty if none.
std::vector<Subgroup> complements(const GroupPtr& n, const Subgroup& q,
                                  size_t budget = 2000000);

// Same subgroup with exactly two generators (pads with identity if cyclic).
Subgroup genTwoEl(const Subgroup& s, Rng rng, size_t budget = 20000);

struct ProductEmbedding {
    GroupPtr product;
    size_t leftDegree = 0;
    Perm embedLeft(const Perm& a) const;
    Perm embedRight(const Perm& b) const;
    Perm projectLeft(const Perm& g) const;
    Perm projectRight(const Perm& g) const;
};

ProductEmbedding directProduct(const GroupPtr& a, const GroupPtr& b);

// First conjugate g S g^-1 satisfying the predicate, scanning the ambient
// elements in enumeration order (identity first).
Subgroup conjugateUntil(const Subgroup& s, const GroupPtr& ambient,
                        const std::function<bool(const Subgroup&)>& pred);

// One representative per H-conjugacy class of the ell+1 order-ell subgroups
// of D, which must be elementary abelian of rank 2.
std::vector<Subgroup> orderLSubgroupClasses(const GroupPtr& h, const Subgroup& d, unsigned ell);

bool sameSubgroup(const Subgroup& a, const Subgroup& b);
bool subgroupContains(const Subgroup& big, const Subgroup& small);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

} // namespace blockeq::grp
