#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbidouble/group.hpp"

namespace orbidouble {

/// A finite left action of a group on {0..m-1}, validated on construction.
/// The associated action groupoid has the set as objects and pairs (g, x)
/// as arrows x -> g.x; every category of "sheaves" in this library is a
/// category of modules over such a groupoid.
class GroupAction {
public:
    GroupAction(const FiniteGroup& group, std::uint32_t set_size,
                const std::vector<std::vector<std::uint32_t>>& table);

    static GroupAction point(const FiniteGroup& group);
    static GroupAction trivial(const FiniteGroup& group, std::uint32_t set_size);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    std::uint32_t size() const { return m_; }
    std::uint32_t apply(std::uint32_t g, std::uint32_t x) const { return act_[g * m_ + x]; }

    std::vector<std::vector<std::uint32_t>> orbits() const; // sorted, by smallest member
    std::vector<std::uint32_t> orbit_of(std::uint32_t x) const;
    Subgroup stabilizer(std::uint32_t x) const;
    /// Smallest g with g.from = to, if any.
    std::optional<std::uint32_t> transporter(std::uint32_t from, std::uint32_t to) const;

    bool operator==(const GroupAction& o) const {
        return m_ == o.m_ && act_ == o.act_ && *group_ == *o.group_;
    }
    bool operator!=(const GroupAction& o) const { return !(*this == o); }

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::uint32_t m_;
    std::vector<std::uint32_t> act_; // [g * m + x]
};

/// {x : h.x = x}, ascending.
std::vector<std::uint32_t> fixed_points(const GroupAction& a, std::uint32_t h);

/// A map of actions (H, U) -> (G, X): a homomorphism gamma and a set map
/// alpha with alpha(h.u) = gamma(h).alpha(u). This is exactly a functor of
/// action groupoids.
class EquivariantMap {
public:
    EquivariantMap(GroupAction source, GroupAction target, GroupHom gamma,
                   std::vector<std::uint32_t> alpha);

    static EquivariantMap identity(const GroupAction& a);

    const GroupAction& source() const { return source_; }
    const GroupAction& target() const { return target_; }
    const GroupHom& gamma() const { return gamma_; }
    std::uint32_t alpha(std::uint32_t u) const { return alpha_[u]; }
    const std::vector<std::uint32_t>& alpha_map() const { return alpha_; }

    bool operator==(const EquivariantMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && gamma_ == o.gamma_ &&
               alpha_ == o.alpha_;
    }

private:
    GroupAction source_, target_;
    GroupHom gamma_;
    std::vector<std::uint32_t> alpha_;
};

EquivariantMap compose(const EquivariantMap& outer, const EquivariantMap& inner);

/// Open-embedding test for a map of action groupoids: alpha injective and,
/// for every pair of source points, gamma restricts to a bijection between
/// the transporter sets upstairs and downstairs. For finite discrete models
/// every subset is open, so this is the whole condition.
struct OpenEmbeddingCheck {
    bool ok = false;
    std::string reason; // witness description on failure
};
OpenEmbeddingCheck is_open_embedding(const EquivariantMap& f);

/// A 2-morphism between parallel maps f, g of action groupoids: for each
/// source point u an arrow witness eta(u) in the target group with
/// eta(u).alpha_f(u) = alpha_g(u), natural against every source arrow.
/// With f = g this is a natural loop (a 2-automorphism of f).
class TwoMorphism {
public:
    TwoMorphism(EquivariantMap from, EquivariantMap to, std::vector<std::uint32_t> witnesses);

    const EquivariantMap& from() const { return from_; }
    const EquivariantMap& to() const { return to_; }
    std::uint32_t witness(std::uint32_t u) const { return eta_[u]; }
    bool is_loop() const { return from_ == to_; }

private:
    EquivariantMap from_, to_;
    std::vector<std::uint32_t> eta_;
};

/// The pair set F = {(x, h) : h.x = x} with the conjugation-twisted action
/// g.(x, h) = (g.x, g h g^-1), its projection to the base, and the lex
/// ordering of pairs that fixes all downstream matrix layouts.
class InertiaAction {
public:
    InertiaAction(GroupAction base, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs,
                  GroupAction action, EquivariantMap projection);

    const GroupAction& base() const { return base_; }
    const GroupAction& action() const { return action_; }
    const EquivariantMap& projection() const { return projection_; }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs() const { return pairs_; }
    std::uint32_t pair_count() const { return static_cast<std::uint32_t>(pairs_.size()); }

    /// Index of (x, h) in the pair list, or nullopt when h does not fix x.
    std::optional<std::uint32_t> pair_index(std::uint32_t x, std::uint32_t h) const;

    bool operator==(const InertiaAction& o) const {
        return base_ == o.base_ && pairs_ == o.pairs_;
    }

private:
    GroupAction base_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
    GroupAction action_;
    EquivariantMap projection_;
    std::vector<std::uint32_t> index_; // x * |G| + h -> pair index or sentinel
};

InertiaAction inertia(const GroupAction& a);

/// The canonical loop of the inertia projection: (x, h) |-> h.
TwoMorphism canonical_loop(const InertiaAction& ia);

/// Triples (x, h1, h2) with both h1 and h2 fixing x, with the three maps to
/// the inertia action: the two forgetful projections and composition.
struct DoubleInertia {
    InertiaAction inertia;
    GroupAction action;
    std::vector<std::array<std::uint32_t, 3>> triples;
    EquivariantMap p1, p2, compose_map;
};
DoubleInertia double_inertia(const GroupAction& a);

} // namespace orbidouble
