#include "orbidouble/action.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbidouble {

GroupAction::GroupAction(const FiniteGroup& group, std::uint32_t set_size,
                         const std::vector<std::vector<std::uint32_t>>& table)
    : group_(std::make_shared<FiniteGroup>(group)), m_(set_size) {
    if (table.size() != group.order())
        throw std::invalid_argument("GroupAction: table must have one row per group element");
    act_.resize(static_cast<std::size_t>(group.order()) * m_);
    for (std::uint32_t g = 0; g < group.order(); ++g) {
        if (table[g].size() != m_)
            throw std::invalid_argument("GroupAction: row length != set size");
        for (std::uint32_t x = 0; x < m_; ++x) {
            if (table[g][x] >= m_)
                throw std::invalid_argument("GroupAction: table entry out of range");
            act_[g * m_ + x] = table[g][x];
        }
    }
    std::uint32_t e = group.identity();
    for (std::uint32_t x = 0; x < m_; ++x)
        if (apply(e, x) != x)
            throw std::invalid_argument("GroupAction: identity moves point " + std::to_string(x));
    for (std::uint32_t g = 0; g < group.order(); ++g)
        for (std::uint32_t h = 0; h < group.order(); ++h)
            for (std::uint32_t x = 0; x < m_; ++x)
                if (apply(g, apply(h, x)) != apply(group.mul(g, h), x))
                    throw std::invalid_argument("GroupAction: not an action at (g,h,x)=(" +
                                                std::to_string(g) + "," + std::to_string(h) + "," +
                                                std::to_string(x) + ")");
}

GroupAction GroupAction::point(const FiniteGroup& group) { return trivial(group, 1); }

GroupAction GroupAction::trivial(const FiniteGroup& group, std::uint32_t set_size) {
    std::vector<std::vector<std::uint32_t>> t(group.order(),
                                              std::vector<std::uint32_t>(set_size));
    for (auto& row : t)
        for (std::uint32_t x = 0; x < set_size; ++x) row[x] = x;
    return GroupAction(group, set_size, t);
}

std::vector<std::uint32_t> GroupAction::orbit_of(std::uint32_t x) const {
    std::vector<bool> seen(m_, false);
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t g = 0; g < group_->order(); ++g) {
        std::uint32_t y = apply(g, x);
        if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<std::vector<std::uint32_t>> GroupAction::orbits() const {
    std::vector<bool> seen(m_, false);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t x = 0; x < m_; ++x) {
        if (seen[x]) continue;
        auto orb = orbit_of(x);
        for (auto y : orb) seen[y] = true;
        out.push_back(std::move(orb));
    }
    return out;
}

Subgroup GroupAction::stabilizer(std::uint32_t x) const {
    std::vector<std::uint32_t> elems;
    for (std::uint32_t g = 0; g < group_->order(); ++g)
        if (apply(g, x) == x) elems.push_back(g);
    return subgroup_from_elements(*group_, std::move(elems));
}

std::optional<std::uint32_t> GroupAction::transporter(std::uint32_t from, std::uint32_t to) const {
    for (std::uint32_t g = 0; g < group_->order(); ++g)
        if (apply(g, from) == to) return g;
    return std::nullopt;
}

std::vector<std::uint32_t> fixed_points(const GroupAction& a, std::uint32_t h) {
    if (h >= a.group().order()) throw std::invalid_argument("fixed_points: element out of range");
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < a.size(); ++x)
        if (a.apply(h, x) == x) out.push_back(x);
    return out;
}

EquivariantMap::EquivariantMap(GroupAction source, GroupAction target, GroupHom gamma,
                               std::vector<std::uint32_t> alpha)
    : source_(std::move(source)), target_(std::move(target)), gamma_(std::move(gamma)),
      alpha_(std::move(alpha)) {
    if (gamma_.domain() != source_.group() || gamma_.codomain() != target_.group())
        throw std::invalid_argument("EquivariantMap: gamma does not match the actions");
    if (alpha_.size() != source_.size())
        throw std::invalid_argument("EquivariantMap: alpha length != source size");
    for (auto v : alpha_)
        if (v >= target_.size())
            throw std::invalid_argument("EquivariantMap: alpha value out of range");
    for (std::uint32_t h = 0; h < source_.group().order(); ++h)
        for (std::uint32_t u = 0; u < source_.size(); ++u)
            if (alpha_[source_.apply(h, u)] != target_.apply(gamma_(h), alpha_[u]))
                throw std::invalid_argument("EquivariantMap: not equivariant at (h,u)=(" +
                                            std::to_string(h) + "," + std::to_string(u) + ")");
}

EquivariantMap EquivariantMap::identity(const GroupAction& a) {
    std::vector<std::uint32_t> alpha(a.size());
    for (std::uint32_t u = 0; u < a.size(); ++u) alpha[u] = u;
    return EquivariantMap(a, a, GroupHom::identity(a.group()), std::move(alpha));
}

EquivariantMap compose(const EquivariantMap& outer, const EquivariantMap& inner) {
    if (inner.target() != outer.source())
        throw std::invalid_argument("compose: maps not composable");
    std::vector<std::uint32_t> alpha(inner.source().size());
    for (std::uint32_t u = 0; u < alpha.size(); ++u) alpha[u] = outer.alpha(inner.alpha(u));
    return EquivariantMap(inner.source(), outer.target(),
                          compose(outer.gamma(), inner.gamma()), std::move(alpha));
}

OpenEmbeddingCheck is_open_embedding(const EquivariantMap& f) {
    const GroupAction& src = f.source();
    const GroupAction& dst = f.target();
    for (std::uint32_t u = 0; u < src.size(); ++u)
        for (std::uint32_t v = u + 1; v < src.size(); ++v)
            if (f.alpha(u) == f.alpha(v))
                return {false, "alpha identifies points " + std::to_string(u) + " and " +
                                   std::to_string(v)};
    // gamma must map {h : h.u = v} bijectively onto {g : g.alpha(u) = alpha(v)}.
    for (std::uint32_t u = 0; u < src.size(); ++u)
        for (std::uint32_t v = 0; v < src.size(); ++v) {
            std::vector<std::uint32_t> down;
            for (std::uint32_t g = 0; g < dst.group().order(); ++g)
                if (dst.apply(g, f.alpha(u)) == f.alpha(v)) down.push_back(g);
            std::vector<std::uint32_t> up_image;
            for (std::uint32_t h = 0; h < src.group().order(); ++h)
                if (src.apply(h, u) == v) up_image.push_back(f.gamma()(h));
            std::sort(up_image.begin(), up_image.end());
            if (std::adjacent_find(up_image.begin(), up_image.end()) != up_image.end())
                return {false, "gamma is not injective on transporters of (" +
                                   std::to_string(u) + "," + std::to_string(v) + ")"};
            if (up_image != down)
                return {false, "transporter sets differ at source pair (" + std::to_string(u) +
                                   "," + std::to_string(v) + "): " +
                                   std::to_string(up_image.size()) + " upstairs vs " +
                                   std::to_string(down.size()) + " downstairs"};
        }
    return {true, ""};
}

TwoMorphism::TwoMorphism(EquivariantMap from, EquivariantMap to,
                         std::vector<std::uint32_t> witnesses)
    : from_(std::move(from)), to_(std::move(to)), eta_(std::move(witnesses)) {
    if (from_.source() != to_.source() || from_.target() != to_.target())
        throw std::invalid_argument("TwoMorphism: maps are not parallel");
    const GroupAction& src = from_.source();
    const GroupAction& dst = from_.target();
    if (eta_.size() != src.size())
        throw std::invalid_argument("TwoMorphism: one witness per source point required");
    for (std::uint32_t u = 0; u < src.size(); ++u) {
        if (eta_[u] >= dst.group().order())
            throw std::invalid_argument("TwoMorphism: witness out of range");
        if (dst.apply(eta_[u], from_.alpha(u)) != to_.alpha(u))
            throw std::invalid_argument("TwoMorphism: witness at point " + std::to_string(u) +
                                        " does not connect the images");
    }
    // Naturality: gamma_to(h) eta(u) = eta(h.u) gamma_from(h).
    for (std::uint32_t h = 0; h < src.group().order(); ++h)
        for (std::uint32_t u = 0; u < src.size(); ++u) {
            std::uint32_t lhs = dst.group().mul(to_.gamma()(h), eta_[u]);
            std::uint32_t rhs = dst.group().mul(eta_[src.apply(h, u)], from_.gamma()(h));
            if (lhs != rhs)
                throw std::invalid_argument("TwoMorphism: naturality fails at (h,u)=(" +
                                            std::to_string(h) + "," + std::to_string(u) + ")");
        }
}

InertiaAction::InertiaAction(GroupAction base,
                             std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs,
                             GroupAction action, EquivariantMap projection)
    : base_(std::move(base)), pairs_(std::move(pairs)), action_(std::move(action)),
      projection_(std::move(projection)) {
    index_.assign(static_cast<std::size_t>(base_.size()) * base_.group().order(),
                  static_cast<std::uint32_t>(pairs_.size()));
    for (std::uint32_t i = 0; i < pairs_.size(); ++i) {
        auto [x, h] = pairs_[i];
        if (base_.apply(h, x) != x)
            throw std::invalid_argument("InertiaAction: listed pair is not fixed");
        index_[static_cast<std::size_t>(x) * base_.group().order() + h] = i;
    }
}

std::optional<std::uint32_t> InertiaAction::pair_index(std::uint32_t x, std::uint32_t h) const {
    std::uint32_t i = index_[static_cast<std::size_t>(x) * base_.group().order() + h];
    if (i == pairs_.size()) return std::nullopt;
    return i;
}

InertiaAction inertia(const GroupAction& a) {
    const FiniteGroup& g = a.group();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t x = 0; x < a.size(); ++x)
        for (std::uint32_t h = 0; h < g.order(); ++h)
            if (a.apply(h, x) == x) pairs.emplace_back(x, h);
    // pairs is lex sorted by construction (x major, then h)

    std::vector<std::uint32_t> pos(static_cast<std::size_t>(a.size()) * g.order(),
                                   static_cast<std::uint32_t>(pairs.size()));
    for (std::uint32_t i = 0; i < pairs.size(); ++i)
        pos[static_cast<std::size_t>(pairs[i].first) * g.order() + pairs[i].second] = i;

    std::vector<std::vector<std::uint32_t>> table(
        g.order(), std::vector<std::uint32_t>(pairs.size()));
    for (std::uint32_t gg = 0; gg < g.order(); ++gg)
        for (std::uint32_t i = 0; i < pairs.size(); ++i) {
            auto [x, h] = pairs[i];
            std::uint32_t y = a.apply(gg, x);
            std::uint32_t k = g.conj(gg, h);
            table[gg][i] = pos[static_cast<std::size_t>(y) * g.order() + k];
        }
    GroupAction pair_action(g, static_cast<std::uint32_t>(pairs.size()), table);

    std::vector<std::uint32_t> alpha(pairs.size());
    for (std::uint32_t i = 0; i < pairs.size(); ++i) alpha[i] = pairs[i].first;
    EquivariantMap pi(pair_action, a, GroupHom::identity(g), std::move(alpha));

    return InertiaAction(a, std::move(pairs), std::move(pair_action), std::move(pi));
}

TwoMorphism canonical_loop(const InertiaAction& ia) {
    std::vector<std::uint32_t> eta(ia.pair_count());
    for (std::uint32_t i = 0; i < ia.pair_count(); ++i) eta[i] = ia.pairs()[i].second;
    return TwoMorphism(ia.projection(), ia.projection(), std::move(eta));
}

DoubleInertia double_inertia(const GroupAction& a) {
    InertiaAction ia = inertia(a);
    const FiniteGroup& g = a.group();
    std::vector<std::array<std::uint32_t, 3>> triples;
    for (std::uint32_t x = 0; x < a.size(); ++x)
        for (std::uint32_t h1 = 0; h1 < g.order(); ++h1) {
            if (a.apply(h1, x) != x) continue;
            for (std::uint32_t h2 = 0; h2 < g.order(); ++h2)
                if (a.apply(h2, x) == x) triples.push_back({x, h1, h2});
        }

    auto triple_pos = [&](std::uint32_t x, std::uint32_t h1,
                          std::uint32_t h2) -> std::uint32_t {
        std::array<std::uint32_t, 3> t{x, h1, h2};
        auto it = std::lower_bound(triples.begin(), triples.end(), t);
        return static_cast<std::uint32_t>(it - triples.begin());
    };

    std::vector<std::vector<std::uint32_t>> table(
        g.order(), std::vector<std::uint32_t>(triples.size()));
    for (std::uint32_t gg = 0; gg < g.order(); ++gg)
        for (std::uint32_t i = 0; i < triples.size(); ++i) {
            auto [x, h1, h2] = triples[i];
            table[gg][i] = triple_pos(a.apply(gg, x), g.conj(gg, h1), g.conj(gg, h2));
        }
    GroupAction triple_action(g, static_cast<std::uint32_t>(triples.size()), table);

    auto make_map = [&](auto pick) {
        std::vector<std::uint32_t> alpha(triples.size());
        for (std::uint32_t i = 0; i < triples.size(); ++i) {
            auto [x, h] = pick(triples[i]);
            alpha[i] = *ia.pair_index(x, h);
        }
        return EquivariantMap(triple_action, ia.action(), GroupHom::identity(g),
                              std::move(alpha));
    };
    EquivariantMap p1 = make_map([](const std::array<std::uint32_t, 3>& t) {
        return std::pair<std::uint32_t, std::uint32_t>(t[0], t[1]);
    });
    EquivariantMap p2 = make_map([](const std::array<std::uint32_t, 3>& t) {
        return std::pair<std::uint32_t, std::uint32_t>(t[0], t[2]);
    });
    EquivariantMap m = make_map([&](const std::array<std::uint32_t, 3>& t) {
        return std::pair<std::uint32_t, std::uint32_t>(t[0], g.mul(t[1], t[2]));
    });

    return DoubleInertia{std::move(ia), std::move(triple_action), std::move(triples),
                         std::move(p1), std::move(p2), std::move(m)};
}

} // namespace orbidouble
