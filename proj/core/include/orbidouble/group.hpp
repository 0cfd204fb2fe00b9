#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace orbidouble {

/// A finite group given by its full multiplication table. Elements are the
/// indices 0..n-1; the table is validated (associativity, identity, inverses)
/// on construction, so a held FiniteGroup is always a group.
class FiniteGroup {
public:
    static FiniteGroup from_table(const std::vector<std::vector<std::uint32_t>>& table);

    /// Closure of a set of permutations of {0..k-1} under composition.
    /// Element 0 is the identity; new elements are appended in BFS order
    /// (elements scanned in discovery order, generators in the given order),
    /// which fixes the element indexing deterministically.
    static FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& gens);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::uint32_t n);
    static FiniteGroup symmetric(std::uint32_t n); // via from_permutations

    std::uint32_t order() const { return n_; }
    std::uint32_t identity() const { return e_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * n_ + b]; }
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t conj(std::uint32_t g, std::uint32_t h) const {
        return mul(mul(g, h), inv(g)); // g h g^-1
    }

    std::uint32_t element_order(std::uint32_t g) const;
    std::uint64_t exponent() const;
    bool is_abelian() const;

    /// Greedy small generating set; empty for the trivial group.
    std::vector<std::uint32_t> small_generating_set() const;

    /// Orbits of the conjugation action, each sorted ascending, ordered by
    /// smallest member. Classes partition the group.
    std::vector<std::vector<std::uint32_t>> conjugacy_classes() const;

    bool operator==(const FiniteGroup& o) const {
        return n_ == o.n_ && e_ == o.e_ && mul_ == o.mul_;
    }
    bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

private:
    FiniteGroup() = default;
    void finish_validation();

    std::uint32_t n_ = 0;
    std::uint32_t e_ = 0;
    std::vector<std::uint32_t> mul_;
    std::vector<std::uint32_t> inv_;
};

/// A subgroup presented as a group of its own together with the embedding
/// of its elements into the parent.
struct Subgroup {
    FiniteGroup group;
    std::vector<std::uint32_t> elements; // elements[i] = parent index of element i
};

/// {g : gh = hg} with the inherited multiplication.
Subgroup centralizer(const FiniteGroup& g, std::uint32_t h);

/// Subgroup on an explicit element list (must be closed; validated).
Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<std::uint32_t> elements);

/// A homomorphism between groups given by its value table. Validated:
/// map(e) = e and map(ab) = map(a)map(b) for every pair; the error message
/// carries the first failing pair.
class GroupHom {
public:
    GroupHom(const FiniteGroup& domain, const FiniteGroup& codomain,
             std::vector<std::uint32_t> map);

    static GroupHom identity(const FiniteGroup& g);

    const FiniteGroup& domain() const { return *domain_; }
    const FiniteGroup& codomain() const { return *codomain_; }
    std::uint32_t operator()(std::uint32_t a) const { return map_[a]; }
    const std::vector<std::uint32_t>& map() const { return map_; }

    bool is_bijective() const;
    bool is_injective() const;

    bool operator==(const GroupHom& o) const {
        return *domain_ == *o.domain_ && *codomain_ == *o.codomain_ && map_ == o.map_;
    }

private:
    std::shared_ptr<const FiniteGroup> domain_, codomain_;
    std::vector<std::uint32_t> map_;
};

GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// Smallest prime p with p not dividing |G| and p = 1 (mod exponent(G)).
/// Such p makes F_p a splitting field: the group algebra is split
/// semisimple, so irreducible counts match conjugacy class counts.
/// The search is capped at 10^6 (never reached for the group sizes handled
/// here); beyond that it throws.
std::uint64_t splitting_prime(const FiniteGroup& g);

/// True when p does not divide |G| and p = 1 (mod exponent(G)).
bool is_splitting_prime(const FiniteGroup& g, std::uint64_t p);

} // namespace orbidouble
