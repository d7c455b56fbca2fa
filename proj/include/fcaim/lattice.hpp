#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "fcaim/bitset.hpp"
#include "fcaim/context.hpp"

namespace fcaim {

struct Concept {
    Bitset extent;
    Bitset intent;

    friend bool operator==(const Concept&, const Concept&) = default;
};

/// All concepts of a context, in the lectic order of their intents.
std::vector<Concept> enumerate_concepts(const FormalContext& ctx);

/// Concept lattice with its Hasse diagram.
///
/// Order: c1 <= c2 iff extent(c1) is a subset of extent(c2). The top concept
/// has the full object set as extent; the bottom has the full intent M''.
class ConceptLattice {
public:
    /// Enumerates the concepts and builds the cover relation. Keeps a copy of ctx.
    explicit ConceptLattice(FormalContext ctx);

    std::size_t size() const noexcept { return concepts_.size(); }
    const std::vector<Concept>& concepts() const noexcept { return concepts_; }
    const Concept& operator[](std::size_t i) const { return concepts_.at(i); }

    std::size_t top() const noexcept { return top_; }
    std::size_t bottom() const noexcept { return bottom_; }

    /// upper_covers(i): concepts j with i < j and nothing strictly between.
    const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }
    std::size_t edge_count() const noexcept;

    bool leq(std::size_t a, std::size_t b) const { return concepts_.at(a).extent.is_subset_of(concepts_.at(b).extent); }

    /// Concept whose extent equals `extent`; size() when it is not closed.
    std::size_t find_by_extent(const Bitset& extent) const;
    /// gamma(g) = ({g}'', {g}').
    std::size_t object_concept(std::size_t g) const { return object_concepts_.at(g); }
    /// mu(m) = ({m}', {m}'').
    std::size_t attribute_concept(std::size_t m) const { return attribute_concepts_.at(m); }
    /// (O'', O') for a set of objects.
    std::size_t covering_concept(const Bitset& objects) const;

    /// Lengths of shortest undirected paths in the Hasse diagram from `from`.
    std::vector<std::size_t> distances_from(std::size_t from) const;
    std::size_t distance(std::size_t a, std::size_t b) const { return distances_from(a).at(b); }

    const FormalContext& context() const noexcept { return ctx_; }

private:
    FormalContext ctx_;
    std::vector<Concept> concepts_;
    std::vector<std::vector<std::size_t>> upper_;
    std::vector<std::vector<std::size_t>> lower_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> by_extent_;
    std::vector<std::size_t> object_concepts_;
    std::vector<std::size_t> attribute_concepts_;
    std::size_t top_ = 0;
    std::size_t bottom_ = 0;
};

}  // namespace fcaim
