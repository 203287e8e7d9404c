#include "group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blockeq::grp {

Perm::Perm(size_t degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::parseCycles(const std::string& text, size_t degree) {
    Perm p(degree);
    std::vector<uint16_t>& img = p.img_;
    size_t i = 0;
    auto skipWs = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
    skipWs();
    if (i >= text.size() || text.compare(i, 2, "()") == 0) return p;
    while (i < text.size()) {
        skipWs();
        if (i >= text.size()) break;
        if (text[i] != '(') throw std::invalid_argument("perm: expected '(' in " + text);
        ++i;
        std::vector<size_t> cyc;
        while (true) {
            skipWs();
            size_t start = i;
            while (i < text.size() && isdigit(uint8_t(text[i]))) ++i;
            if (start == i) throw std::invalid_argument("perm: expected point in " + text);
            size_t pt = std::stoul(text.substr(start, i - start));
            if (pt == 0 || pt > degree) throw std::invalid_argument("perm: point out of range in " + text);
            cyc.push_back(pt - 1);
            skipWs();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ')') { ++i; break; }
            throw std::invalid_argument("perm: expected ',' or ')' in " + text);
        }
        for (size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k]] = uint16_t(cyc[(k + 1) % cyc.size()]);
        skipWs();
    }
    // validate bijection
    std::vector<bool> seen(degree, false);
    for (uint16_t v : img) {
        if (seen[v]) throw std::invalid_argument("perm: not a bijection: " + text);
        seen[v] = true;
    }
    return p;
}

Perm Perm::compose(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("perm: degree mismatch");
    std::vector<uint16_t> out(degree());
    for (size_t i = 0; i < degree(); ++i) out[i] = rhs.img_[img_[i]];
    return Perm(std::move(out));
}

Perm Perm::inverse() const {
    std::vector<uint16_t> out(degree());
    for (size_t i = 0; i < degree(); ++i) out[img_[i]] = uint16_t(i);
    return Perm(std::move(out));
}

bool Perm::isIdentity() const {
    for (size_t i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

size_t Perm::order() const {
    size_t ord = 1;
    std::vector<bool> seen(degree(), false);
    for (size_t i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        do {
            seen[j] = true;
            j = img_[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string Perm::cycleString() const {
    std::ostringstream os;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (size_t i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
        any = true;
        os << '(';
        size_t j = i;
        bool first = true;
        do {
            if (!first) os << ',';
            os << (j + 1);
            seen[j] = true;
            first = false;
            j = img_[j];
        } while (j != i);
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

FinGroup::FinGroup(size_t degree, std::vector<Perm> gens, size_t cap)
    : degree_(degree), gens_(std::move(gens)), cap_(cap) {
    for (const Perm& g : gens_)
        if (g.degree() != degree_) throw std::invalid_argument("group: generator degree mismatch");
}

GroupPtr FinGroup::make(size_t degree, std::vector<Perm> generators, size_t cap) {
    return GroupPtr(new FinGroup(degree, std::move(generators), cap));
}

void FinGroup::ensureEnumerated() const {
    if (enumerated_) return;
    Perm id = Perm::identity(degree_);
    elems_.clear();
    index_.clear();
    parent_.clear();
    elems_.push_back(id);
    index_.emplace(id, 0);
    parent_.emplace_back(size_t(-1), 0);
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        for (uint32_t gi = 0; gi < gens_.size(); ++gi) {
            Perm next = elems_[cur].compose(gens_[gi]);
            if (index_.count(next)) continue;
            if (elems_.size() >= cap_)
                throw std::runtime_error("group: enumeration cap exceeded (order > " +
                                         std::to_string(cap_) + "); supply subgroup data externally");
            index_.emplace(next, elems_.size());
            elems_.push_back(std::move(next));
            parent_.emplace_back(cur, gi);
            queue.push_back(elems_.size() - 1);
        }
    }
    enumerated_ = true;
}

size_t FinGroup::order() const {
    ensureEnumerated();
    return elems_.size();
}

const std::vector<Perm>& FinGroup::elements() const {
    ensureEnumerated();
    return elems_;
}

std::optional<size_t> FinGroup::indexOf(const Perm& g) const {
    ensureEnumerated();
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Word FinGroup::wordFor(size_t i) const {
    ensureEnumerated();
    Word w;
    while (parent_[i].first != size_t(-1)) {
        w.emplace_back(parent_[i].second, int8_t(1));
        i = parent_[i].first;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Word FinGroup::wordFor(const Perm& g) const {
    auto idx = indexOf(g);
    if (!idx) throw std::invalid_argument("group: element not in group");
    return wordFor(*idx);
}

Perm FinGroup::evalWord(const Word& w) const {
    Perm out = Perm::identity(degree_);
    for (auto [gi, e] : w) {
        const Perm& g = gens_.at(gi);
        out = out.compose(e > 0 ? g : g.inverse());
    }
    return out;
}

GroupPtr Subgroup::asGroup(size_t cap) const {
    return FinGroup::make(parent->degree(), generators, cap);
}

bool Subgroup::containsElement(const Perm& g) const {
    return asGroup()->contains(g);
}

std::vector<Perm> subgroupElements(const Subgroup& s) {
    auto grp = s.asGroup();
    std::vector<Perm> elems = grp->elements();
    std::sort(elems.begin(), elems.end());
    return elems;
}

size_t subgroupOrder(const Subgroup& s) { return s.asGroup()->order(); }

Subgroup centralizer(const GroupPtr& g, const Subgroup& s) {
    std::vector<Perm> sgens = s.generators;
    std::vector<Perm> res;
    for (const Perm& x : g->elements()) {
        bool ok = true;
        for (const Perm& y : sgens)
            if (!(x.compose(y) == y.compose(x))) { ok = false; break; }
        if (ok) res.push_back(x);
    }
    return Subgroup{g, std::move(res)};
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& s) {
    auto sg = s.asGroup();
    std::vector<Perm> res;
    for (const Perm& x : g->elements()) {
        Perm xi = x.inverse();
        bool ok = true;
        for (const Perm& y : s.generators)
            if (!sg->contains(xi.compose(y).compose(x))) { ok = false; break; }
        if (ok) res.push_back(x);
    }
    return Subgroup{g, std::move(res)};
}

Subgroup sylow(const GroupPtr& g, unsigned ell) {
    size_t n = g->order();
    size_t ellPart = 1;
    while (n % ell == 0) { n /= ell; ellPart *= ell; }
    if (ellPart == 1) return Subgroup{g, {}};
    // grow an ell-subgroup inside the normalizer of the current one
    Subgroup p{g, {}};
    size_t curOrder = 1;
    while (curOrder < ellPart) {
        Subgroup scope = (curOrder == 1) ? Subgroup{g, g->generators()} : normalizer(g, p);
        auto scopeGroup = (curOrder == 1) ? g : scope.asGroup();
        auto pGroup = p.asGroup();
        bool grown = false;
        for (const Perm& x : scopeGroup->elements()) {
            size_t ord = x.order();
            if (ord == 1) continue;
            // take the ell-part power of x
            size_t q = ord;
            while (q % ell == 0) q /= ell;
            if (q == ord) continue; // no ell-part
            Perm y = Perm::identity(g->degree());
            for (size_t i = 0; i < q; ++i) y = y.compose(x);
            if (pGroup->contains(y)) continue;
            std::vector<Perm> ng = p.generators;
            ng.push_back(y);
            Subgroup cand{g, ng};
            size_t candOrder = subgroupOrder(cand);
            // keep it an ell-group
            size_t t = candOrder;
            while (t % ell == 0) t /= ell;
            if (t != 1) continue;
            p = cand;
            curOrder = candOrder;
            grown = true;
            break;
        }
        if (!grown)
            throw std::runtime_error("sylow: failed to grow ell-subgroup");
    }
    return p;
}

std::vector<Subgroup> complements(const GroupPtr& n, const Subgroup& q, size_t budget) {
    auto qGroup = q.asGroup();
    size_t nOrder = n->order();
    size_t qOrder = qGroup->order();
    // Q must be normal in N
    for (const Perm& g : n->generators())
        for (const Perm& y : q.generators)
            if (!qGroup->contains(g.inverse().compose(y).compose(g)))
                throw std::invalid_argument("complements: Q not normal in N");
    if (nOrder % qOrder != 0) throw std::invalid_argument("complements: |Q| does not divide |N|");
    size_t kOrder = nOrder / qOrder;

    std::vector<Subgroup> found;
    std::vector<std::vector<Perm>> foundElems;
    auto tryCandidate = [&](const std::vector<Perm>& gens) {
        Subgroup cand{n, gens};
        auto cg = cand.asGroup();
        if (cg->order() != kOrder) return;
        // K ∩ Q = 1
        for (const Perm& x : cg->elements())
            if (!x.isIdentity() && qGroup->contains(x)) return;
        std::vector<Perm> elems = cg->elements();
        std::sort(elems.begin(), elems.end());
        for (const auto& fe : foundElems)
            if (fe == elems) return;
        foundElems.push_back(std::move(elems));
        found.push_back(std::move(cand));
    };

    if (kOrder == 1) {
        tryCandidate({});
        return found;
    }
    const std::vector<Perm>& all = n->elements();
    size_t tried = 0;
    // single-generator candidates first, then pairs, in enumeration order
    for (const Perm& a : all) {
        if (++tried > budget) return found;
        if (a.isIdentity()) continue;
        tryCandidate({a});
    }
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
            if (++tried > budget) return found;
            if (all[i].isIdentity() || all[j].isIdentity()) continue;
            tryCandidate({all[i], all[j]});
        }
    }
    return found;
}

Subgroup genTwoEl(const Subgroup& s, Rng rng, size_t budget) {
    size_t target = subgroupOrder(s);
    if (target == 1) return Subgroup{s.parent, {}};
    auto sg = s.asGroup();
    const std::vector<Perm>& elems = sg->elements();
    if (s.generators.size() <= 2) {
        std::vector<Perm> gens = s.generators;
        while (gens.size() < 2) gens.push_back(Perm::identity(s.parent->degree()));
        return Subgroup{s.parent, gens};
    }
    // deterministic sweep over generator pairs first
    for (const Perm& a : s.generators)
        for (const Perm& b : s.generators) {
            Subgroup cand{s.parent, {a, b}};
            if (subgroupOrder(cand) == target) return cand;
        }
    for (size_t t = 0; t < budget; ++t) {
        const Perm& a = elems[rng.below(elems.size())];
        const Perm& b = elems[rng.below(elems.size())];
        Subgroup cand{s.parent, {a, b}};
        if (subgroupOrder(cand) == target) return cand;
    }
    throw std::runtime_error("genTwoEl: no 2-element generating set found within budget");
}

Perm ProductEmbedding::embedLeft(const Perm& a) const {
    std::vector<uint16_t> img(product->degree());
    std::iota(img.begin(), img.end(), 0);
    for (size_t i = 0; i < a.degree(); ++i) img[i] = a[i];
    return Perm(std::move(img));
}

Perm ProductEmbedding::embedRight(const Perm& b) const {
    std::vector<uint16_t> img(product->degree());
    std::iota(img.begin(), img.end(), 0);
    for (size_t i = 0; i < b.degree(); ++i) img[leftDegree + i] = uint16_t(leftDegree + b[i]);
    return Perm(std::move(img));
}

Perm ProductEmbedding::projectLeft(const Perm& g) const {
    std::vector<uint16_t> img(leftDegree);
    for (size_t i = 0; i < leftDegree; ++i) img[i] = g[i];
    return Perm(std::move(img));
}

Perm ProductEmbedding::projectRight(const Perm& g) const {
    size_t rd = product->degree() - leftDegree;
    std::vector<uint16_t> img(rd);
    for (size_t i = 0; i < rd; ++i) img[i] = uint16_t(g[leftDegree + i] - leftDegree);
    return Perm(std::move(img));
}

ProductEmbedding directProduct(const GroupPtr& a, const GroupPtr& b) {
    ProductEmbedding pe;
    pe.leftDegree = a->degree();
    size_t degree = a->degree() + b->degree();
    std::vector<Perm> gens;
    ProductEmbedding tmp{nullptr, a->degree()};
    for (const Perm& g : a->generators()) {
        std::vector<uint16_t> img(degree);
        std::iota(img.begin(), img.end(), 0);
        for (size_t i = 0; i < a->degree(); ++i) img[i] = g[i];
        gens.emplace_back(std::move(img));
    }
    for (const Perm& g : b->generators()) {
        std::vector<uint16_t> img(degree);
        std::iota(img.begin(), img.end(), 0);
        for (size_t i = 0; i < b->degree(); ++i) img[a->degree() + i] = uint16_t(a->degree() + g[i]);
        gens.emplace_back(std::move(img));
    }
    size_t cap = std::max(a->enumerationCap(), b->enumerationCap());
    pe.product = FinGroup::make(degree, std::move(gens), cap);
    return pe;
}

Subgroup conjugateUntil(const Subgroup& s, const GroupPtr& ambient,
                        const std::function<bool(const Subgroup&)>& pred) {
    for (const Perm& g : ambient->elements()) {
        Perm gi = g.inverse();
        std::vector<Perm> conj;
        conj.reserve(s.generators.size());
        for (const Perm& y : s.generators) conj.push_back(gi.compose(y).compose(g));
        Subgroup cand{s.parent, std::move(conj)};
        if (pred(cand)) return cand;
    }
    throw std::runtime_error("conjugateUntil: no conjugate satisfies the predicate");
}

std::vector<Subgroup> orderLSubgroupClasses(const GroupPtr& h, const Subgroup& d, unsigned ell) {
    auto dg = d.asGroup();
    size_t dOrder = dg->order();
    if (dOrder != size_t(ell) * ell)
        throw std::invalid_argument("orderLSubgroupClasses: D is not of order ell^2");
    for (const Perm& x : dg->elements())
        if (!x.isIdentity() && x.order() != ell)
            throw std::invalid_argument("orderLSubgroupClasses: D is not elementary abelian");

    // collect the ell+1 subgroups of order ell as sorted element lists
    std::vector<std::pair<std::vector<Perm>, Perm>> lines; // (elements, a generator)
    std::set<std::vector<Perm>> seen;
    for (const Perm& x : dg->elements()) {
        if (x.isIdentity()) continue;
        Subgroup line{h, {x}};
        std::vector<Perm> elems = subgroupElements(line);
        if (seen.insert(elems).second) lines.emplace_back(std::move(elems), x);
    }
    if (lines.size() != ell + 1)
        throw std::invalid_argument("orderLSubgroupClasses: expected ell+1 lines");

    // H-conjugation orbits on the lines
    std::vector<bool> used(lines.size(), false);
    std::vector<Subgroup> reps;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (used[i]) continue;
        reps.push_back(Subgroup{h, {lines[i].second}});
        for (const Perm& g : h->elements()) {
            Perm conjGen = g.inverse().compose(lines[i].second).compose(g);
            std::vector<Perm> conjElems = subgroupElements(Subgroup{h, {conjGen}});
            for (size_t j = 0; j < lines.size(); ++j)
                if (!used[j] && lines[j].first == conjElems) used[j] = true;
        }
    }
    return reps;
}

bool sameSubgroup(const Subgroup& a, const Subgroup& b) {
    return subgroupElements(a) == subgroupElements(b);
}

bool subgroupContains(const Subgroup& big, const Subgroup& small) {
    auto bg = big.asGroup();
    for (const Perm& g : small.generators)
        if (!bg->contains(g)) return false;
    return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    auto ag = a.asGroup();
    auto bg = b.asGroup();
    const std::vector<Perm>* small = &ag->elements();
    const FinGroup* other = bg.get();
    if (bg->order() < ag->order()) { small = &bg->elements(); other = ag.get(); }
    std::vector<Perm> elems;
    for (const Perm& x : *small)
        if (other->contains(x)) elems.push_back(x);
    std::sort(elems.begin(), elems.end());
    return Subgroup{a.parent, std::move(elems)};
}

} // namespace blockeq::grp
