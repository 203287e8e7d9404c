#include "gmodule.hpp"

#include <sstream>
#include <stdexcept>

namespace blockeq::mod {

GModule::GModule(GroupPtr group, unsigned p, std::vector<Matrix> actions)
    : group_(std::move(group)), p_(p), actions_(std::move(actions)) {
    if (actions_.size() != group_->generators().size())
        throw std::invalid_argument("gmodule: one action matrix per generator required");
    dim_ = actions_.empty() ? 0 : actions_[0].rows();
    for (const Matrix& a : actions_) {
        if (a.rows() != dim_ || a.cols() != dim_ || a.p() != p_)
            throw std::invalid_argument("gmodule: action matrix shape mismatch");
    }
}

Matrix GModule::actionOfWord(const Word& w) const {
    Matrix out = Matrix::identity(p_, dim_);
    for (auto [gi, e] : w) {
        const Matrix& a = actions_.at(gi);
        if (e > 0) {
            out = out.multiply(a);
        } else {
            auto inv = ff::inverse(a);
            if (!inv) throw std::runtime_error("gmodule: singular action matrix");
            out = out.multiply(*inv);
        }
    }
    return out;
}

Matrix GModule::actionOfElement(const Perm& g) const {
    return actionOfWord(group_->wordFor(g));
}

bool GModule::spotCheckRelations(Rng rng, size_t samples) const {
    if (group_->order() == 1 || dim_ == 0) return true;
    const auto& elems = group_->elements();
    for (size_t s = 0; s < samples; ++s) {
        const Perm& a = elems[rng.below(elems.size())];
        const Perm& b = elems[rng.below(elems.size())];
        Matrix lhs = actionOfElement(a.compose(b));
        Matrix rhs = actionOfElement(a).multiply(actionOfElement(b));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool ModuleMap::intertwines() const {
    for (size_t gi = 0; gi < source.actions().size(); ++gi) {
        if (!(source.action(gi).multiply(mat) == mat.multiply(target.action(gi))))
            return false;
    }
    return true;
}

GModule trivialModule(const GroupPtr& g, unsigned p) {
    std::vector<Matrix> acts(g->generators().size(), Matrix::identity(p, 1));
    return GModule(g, p, std::move(acts));
}

GModule zeroModule(const GroupPtr& g, unsigned p) {
    std::vector<Matrix> acts(g->generators().size(), Matrix(p, 0, 0));
    return GModule(g, p, std::move(acts));
}

GModule regularModule(const GroupPtr& g, unsigned p) {
    const auto& elems = g->elements();
    size_t n = elems.size();
    std::vector<Matrix> acts;
    for (const Perm& gen : g->generators()) {
        Matrix a(p, n, n);
        for (size_t i = 0; i < n; ++i) {
            size_t j = *g->indexOf(elems[i].compose(gen));
            a.set(i, j, 1);
        }
        acts.push_back(std::move(a));
    }
    return GModule(g, p, std::move(acts));
}

GModule permutationModule(const GroupPtr& g, unsigned p) {
    size_t n = g->degree();
    std::vector<Matrix> acts;
    for (const Perm& gen : g->generators()) {
        Matrix a(p, n, n);
        for (size_t i = 0; i < n; ++i) a.set(i, gen[i], 1);
        acts.push_back(std::move(a));
    }
    return GModule(g, p, std::move(acts));
}

GModule dualModule(const GModule& m) {
    std::vector<Matrix> acts;
    for (const Matrix& a : m.actions()) {
        auto inv = ff::inverse(a);
        if (!inv) throw std::runtime_error("dual: singular action matrix");
        acts.push_back(inv->transpose());
    }
    return GModule(m.group(), m.p(), std::move(acts));
}

GModule tensorProduct(const GModule& a, const GModule& b) {
    if (a.group() != b.group() || a.p() != b.p())
        throw std::invalid_argument("tensorProduct: group/field mismatch");
    std::vector<Matrix> acts;
    for (size_t i = 0; i < a.actions().size(); ++i)
        acts.push_back(a.action(i).kronecker(b.action(i)));
    return GModule(a.group(), a.p(), std::move(acts));
}

GModule directSum(const GModule& a, const GModule& b) {
    if (a.group() != b.group() || a.p() != b.p())
        throw std::invalid_argument("directSum: group/field mismatch");
    std::vector<Matrix> acts;
    for (size_t i = 0; i < a.actions().size(); ++i) {
        Matrix s(a.p(), a.dim() + b.dim(), a.dim() + b.dim());
        for (size_t r = 0; r < a.dim(); ++r)
            for (size_t c = 0; c < a.dim(); ++c)
                s.set(r, c, a.action(i).at(r, c));
        for (size_t r = 0; r < b.dim(); ++r)
            for (size_t c = 0; c < b.dim(); ++c)
                s.set(a.dim() + r, a.dim() + c, b.action(i).at(r, c));
        acts.push_back(std::move(s));
    }
    return GModule(a.group(), a.p(), std::move(acts));
}

GModule directSum(const std::vector<GModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("directSum: empty list");
    GModule acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) acc = directSum(acc, parts[i]);
    return acc;
}

GModule restriction(const GModule& m, const Subgroup& h) {
    if (h.parent != m.group())
        throw std::invalid_argument("restriction: subgroup of a different group");
    std::vector<Matrix> acts;
    for (const Perm& g : h.generators)
        acts.push_back(m.actionOfElement(g));
    auto hg = h.asGroup();
    return GModule(hg, m.p(), std::move(acts));
}

GModule induction(const GModule& v, const Subgroup& h, const GroupPtr& g) {
    auto hg = h.asGroup();
    size_t hOrder = hg->order();
    size_t gOrder = g->order();
    if (gOrder % hOrder != 0) throw std::invalid_argument("induction: |H| does not divide |G|");
    size_t index = gOrder / hOrder;
    // right coset representatives Ht, BFS order
    std::vector<Perm> reps;
    std::vector<int> repOf(gOrder, -1);
    const auto& elems = g->elements();
    for (size_t i = 0; i < gOrder; ++i) {
        if (repOf[i] >= 0) continue;
        size_t r = reps.size();
        reps.push_back(elems[i]);
        for (const Perm& x : hg->elements()) {
            Perm y = x.compose(elems[i]); // coset H * elems[i]
            repOf[*g->indexOf(y)] = int(r);
        }
    }
    if (reps.size() != index) throw std::runtime_error("induction: coset count mismatch");

    size_t d = v.dim();
    unsigned p = v.p();
    std::vector<Matrix> acts;
    for (const Perm& gen : g->generators()) {
        Matrix a(p, index * d, index * d);
        for (size_t i = 0; i < index; ++i) {
            Perm ti_g = reps[i].compose(gen);
            size_t j = size_t(repOf[*g->indexOf(ti_g)]);
            // ti * gen = hh * tj with hh in H
            Perm hh = ti_g.compose(reps[j].inverse());
            if (!hg->contains(hh)) throw std::runtime_error("induction: coset arithmetic failed");
            Matrix hv = v.actionOfElement(hh);
            for (size_t r = 0; r < d; ++r)
                for (size_t c = 0; c < d; ++c)
                    a.set(i * d + r, j * d + c, hv.at(r, c));
        }
        acts.push_back(std::move(a));
    }
    return GModule(g, p, std::move(acts));
}

Matrix invariantSubspace(const GModule& m, const Matrix& seeds) {
    return ff::spinSpace(seeds, m.actions());
}

SubmoduleResult submoduleSpin(const GModule& m, const Matrix& vectors) {
    Matrix basis = invariantSubspace(m, vectors);
    size_t k = basis.rows();
    ff::EchelonBasis eb(m.p(), m.dim());
    for (size_t i = 0; i < k; ++i)
        eb.insert(ff::RowVec(basis.row(i), basis.row(i) + m.dim()));
    std::vector<Matrix> acts;
    for (const Matrix& a : m.actions()) {
        Matrix ba = basis.multiply(a);
        Matrix sub(m.p(), k, k);
        for (size_t i = 0; i < k; ++i) {
            auto coords = eb.coordinates(ff::RowVec(ba.row(i), ba.row(i) + m.dim()));
            if (!coords) throw std::runtime_error("submoduleSpin: space not invariant");
            for (size_t j = 0; j < k; ++j) sub.set(i, j, (*coords)[j]);
        }
        acts.push_back(std::move(sub));
    }
    GModule subMod(m.group(), m.p(), std::move(acts));
    ModuleMap incl{subMod, m, basis};
    return {std::move(subMod), std::move(incl)};
}

QuotientResult quotient(const GModule& m, const Matrix& basisRows) {
    unsigned p = m.p();
    size_t n = m.dim();
    ff::EchelonBasis eb(p, n);
    for (size_t i = 0; i < basisRows.rows(); ++i)
        eb.insert(ff::RowVec(basisRows.row(i), basisRows.row(i) + n));
    size_t k = eb.rank();
    std::vector<bool> isPivot(n, false);
    for (size_t c : eb.pivotColumns()) isPivot[c] = true;
    std::vector<size_t> freeCols;
    for (size_t c = 0; c < n; ++c)
        if (!isPivot[c]) freeCols.push_back(c);
    size_t q = n - k;

    // projection: ambient coords -> quotient coords (reduce, read free cols)
    Matrix proj(p, n, q);
    for (size_t j = 0; j < n; ++j) {
        ff::RowVec e(n, 0);
        e[j] = 1;
        ff::RowVec red = eb.reduce(std::move(e));
        for (size_t i = 0; i < q; ++i) proj.set(j, i, red[freeCols[i]]);
    }
    std::vector<Matrix> acts;
    for (const Matrix& a : m.actions()) {
        Matrix qa(p, q, q);
        for (size_t i = 0; i < q; ++i) {
            // lift quotient basis vector i (unit at freeCols[i], already reduced)
            const uint8_t* arow = a.row(freeCols[i]);
            ff::RowVec red = eb.reduce(ff::RowVec(arow, arow + n));
            for (size_t j = 0; j < q; ++j) qa.set(i, j, red[freeCols[j]]);
        }
        acts.push_back(std::move(qa));
    }
    GModule quotMod(m.group(), p, std::move(acts));
    ModuleMap projMap{m, quotMod, proj};
    return {std::move(quotMod), std::move(projMap)};
}

Matrix preimageRows(const QuotientResult& q, const Matrix& subRows, const Matrix& kernelRows) {
    // preimage of span(subRows) under q.projection = lift(subRows) + kernel
    unsigned p = q.projection.mat.p();
    size_t n = q.projection.source.dim();
    ff::EchelonBasis eb(p, n);
    for (size_t i = 0; i < kernelRows.rows(); ++i)
        eb.insert(ff::RowVec(kernelRows.row(i), kernelRows.row(i) + n));
    // lift: solve x * proj = subRow
    for (size_t i = 0; i < subRows.rows(); ++i) {
        ff::RowVec b(subRows.row(i), subRows.row(i) + subRows.cols());
        auto x = ff::solveLeft(q.projection.mat, b);
        if (!x) throw std::runtime_error("preimageRows: row not in image");
        eb.insert(std::move(*x));
    }
    return eb.toMatrix();
}

ModuleMap composeMaps(const ModuleMap& f, const ModuleMap& g) {
    return ModuleMap{f.source, g.target, f.mat.multiply(g.mat)};
}

std::string moduleToString(const GModule& m) {
    std::ostringstream os;
    ff::writeMeatAxeSeq(os, m.actions());
    return os.str();
}

GModule moduleFromString(const GroupPtr& g, unsigned p, const std::string& text) {
    std::istringstream is(text);
    std::vector<Matrix> acts = ff::readMeatAxeSeq(is);
    if (acts.empty()) {
        // zero module: no matrices stored
        return zeroModule(g, p);
    }
    return GModule(g, p, std::move(acts));
}

} // namespace blockeq::mod
