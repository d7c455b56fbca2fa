#include "fcaim/lattice.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace fcaim {

std::vector<Concept> enumerate_concepts(const FormalContext& ctx) {
    const std::size_t m = ctx.attribute_count();
    std::vector<Concept> out;
    Bitset a = ctx.closure(ctx.empty_attributes());
    out.push_back({ctx.derive_attributes(a), a});
    while (true) {
        bool advanced = false;
        for (std::size_t i = m; i-- > 0;) {
            if (a.test(i)) continue;
            // Candidate: (A intersected with {0..i-1}) + {i}, closed.
            Bitset b = a;
            for (std::size_t j = i; j < m; ++j) b.reset(j);
            b.set(i);
            Bitset extent = ctx.derive_attributes(b);
            Bitset closed = ctx.derive_objects(extent);
            if (closed.equal_below(a, i)) {
                a = std::move(closed);
                out.push_back({std::move(extent), a});
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

ConceptLattice::ConceptLattice(FormalContext context)
    : ctx_(std::move(context)), concepts_(enumerate_concepts(ctx_)) {
    const FormalContext& ctx = ctx_;
    const std::size_t n = concepts_.size();
    by_extent_.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) by_extent_.emplace(concepts_[i].extent, i);

    upper_.assign(n, {});
    lower_.assign(n, {});
    // Upper neighbours of (E, I): closures (E + g)'' reached from exactly
    // |(E + g)'' \ E| distinct objects g outside E.
    std::unordered_map<std::size_t, std::size_t> hits;
    for (std::size_t i = 0; i < n; ++i) {
        const Bitset& e = concepts_[i].extent;
        const std::size_t base = e.count();
        hits.clear();
        for (std::size_t g = 0; g < ctx.object_count(); ++g) {
            if (e.test(g)) continue;
            Bitset eg = e;
            eg.set(g);
            Bitset closed = ctx.object_closure(eg);
            std::size_t j = by_extent_.at(closed);
            if (++hits[j] == closed.count() - base) upper_[i].push_back(j);
        }
        std::sort(upper_[i].begin(), upper_[i].end());
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : upper_[i]) lower_[j].push_back(i);

    top_ = by_extent_.at(Bitset::full(ctx.object_count()));
    bottom_ = by_extent_.at(ctx.derive_attributes(Bitset::full(ctx.attribute_count())));

    object_concepts_.resize(ctx.object_count());
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        Bitset s = ctx.empty_objects();
        s.set(g);
        object_concepts_[g] = by_extent_.at(ctx.object_closure(s));
    }
    attribute_concepts_.resize(ctx.attribute_count());
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        attribute_concepts_[m] = by_extent_.at(ctx.column(m));
}

std::size_t ConceptLattice::edge_count() const noexcept {
    std::size_t e = 0;
    for (const auto& u : upper_) e += u.size();
    return e;
}

std::size_t ConceptLattice::find_by_extent(const Bitset& extent) const {
    auto it = by_extent_.find(extent);
    return it == by_extent_.end() ? size() : it->second;
}

std::size_t ConceptLattice::covering_concept(const Bitset& objects) const {
    return by_extent_.at(ctx_.object_closure(objects));
}

std::vector<std::size_t> ConceptLattice::distances_from(std::size_t from) const {
    if (from >= size()) throw std::out_of_range("concept index out of range");
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(size(), unreached);
    std::deque<std::size_t> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        std::size_t c = queue.front();
        queue.pop_front();
        auto visit = [&](std::size_t d) {
            if (dist[d] == unreached) {
                dist[d] = dist[c] + 1;
                queue.push_back(d);
            }
        };
        for (std::size_t d : upper_[c]) visit(d);
        for (std::size_t d : lower_[c]) visit(d);
    }
    return dist;
}

}  // namespace fcaim
