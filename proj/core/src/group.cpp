#include "orbidouble/group.hpp"

#include "orbidouble/fp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbidouble {

void FiniteGroup::finish_validation() {
    // Identity: scan for e with e*g = g*e = g for all g.
    bool found = false;
    for (std::uint32_t e = 0; e < n_ && !found; ++e) {
        bool ok = true;
        for (std::uint32_t g = 0; g < n_; ++g)
            if (mul(e, g) != g || mul(g, e) != g) {
                ok = false;
                break;
            }
        if (ok) {
            e_ = e;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("FiniteGroup: no identity element");

    inv_.assign(n_, n_);
    for (std::uint32_t g = 0; g < n_; ++g) {
        for (std::uint32_t h = 0; h < n_; ++h)
            if (mul(g, h) == e_ && mul(h, g) == e_) {
                inv_[g] = h;
                break;
            }
        if (inv_[g] == n_)
            throw std::invalid_argument("FiniteGroup: element " + std::to_string(g) +
                                        " has no inverse");
    }

    for (std::uint32_t a = 0; a < n_; ++a)
        for (std::uint32_t b = 0; b < n_; ++b)
            for (std::uint32_t c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument(
                        "FiniteGroup: multiplication not associative at triple (" +
                        std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                        ")");
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::uint32_t>>& table) {
    FiniteGroup g;
    g.n_ = static_cast<std::uint32_t>(table.size());
    if (g.n_ == 0) throw std::invalid_argument("FiniteGroup: empty table");
    g.mul_.resize(static_cast<std::size_t>(g.n_) * g.n_);
    for (std::uint32_t i = 0; i < g.n_; ++i) {
        if (table[i].size() != g.n_)
            throw std::invalid_argument("FiniteGroup: table is not square");
        for (std::uint32_t j = 0; j < g.n_; ++j) {
            if (table[i][j] >= g.n_)
                throw std::invalid_argument("FiniteGroup: table entry out of range");
            g.mul_[i * g.n_ + j] = table[i][j];
        }
    }
    g.finish_validation();
    return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& gens) {
    std::size_t k = gens.empty() ? 1 : gens[0].size();
    for (const auto& p : gens) {
        if (p.size() != k) throw std::invalid_argument("from_permutations: length mismatch");
        std::vector<bool> seen(k, false);
        for (auto v : p) {
            if (v >= k || seen[v])
                throw std::invalid_argument("from_permutations: not a permutation");
            seen[v] = true;
        }
    }
    std::vector<std::uint32_t> id(k);
    std::iota(id.begin(), id.end(), 0);

    std::vector<std::vector<std::uint32_t>> elems{id};
    std::map<std::vector<std::uint32_t>, std::uint32_t> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& gen : gens) {
            std::vector<std::uint32_t> prod(k);
            for (std::size_t x = 0; x < k; ++x) prod[x] = gen[elems[i][x]];
            if (index.emplace(prod, static_cast<std::uint32_t>(elems.size())).second)
                elems.push_back(prod);
        }
    }

    std::uint32_t n = static_cast<std::uint32_t>(elems.size());
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            std::vector<std::uint32_t> prod(k);
            for (std::size_t x = 0; x < k; ++x) prod[x] = elems[a][elems[b][x]];
            table[a][b] = index.at(prod);
        }
    return from_table(table);
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}); }

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("cyclic: order must be positive");
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(t);
}

FiniteGroup FiniteGroup::symmetric(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("symmetric: n must be positive");
    if (n == 1) return trivial();
    std::vector<std::uint32_t> swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return from_permutations({swap01, cycle});
}

std::uint32_t FiniteGroup::element_order(std::uint32_t g) const {
    std::uint32_t o = 1, x = g;
    while (x != e_) {
        x = mul(x, g);
        ++o;
    }
    return o;
}

std::uint64_t FiniteGroup::exponent() const {
    std::uint64_t l = 1;
    for (std::uint32_t g = 0; g < n_; ++g) l = std::lcm(l, std::uint64_t(element_order(g)));
    return l;
}

bool FiniteGroup::is_abelian() const {
    for (std::uint32_t a = 0; a < n_; ++a)
        for (std::uint32_t b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::uint32_t> FiniteGroup::small_generating_set() const {
    std::vector<std::uint32_t> gens;
    std::vector<bool> reached(n_, false);
    reached[e_] = true;
    std::uint32_t count = 1;
    while (count < n_) {
        std::uint32_t pick = 0;
        while (reached[pick]) ++pick;
        gens.push_back(pick);
        // close under the new generator set
        std::vector<std::uint32_t> frontier;
        for (std::uint32_t g = 0; g < n_; ++g)
            if (reached[g]) frontier.push_back(g);
        while (!frontier.empty()) {
            std::vector<std::uint32_t> next;
            for (auto g : frontier)
                for (auto s : gens) {
                    std::uint32_t x = mul(g, s);
                    if (!reached[x]) {
                        reached[x] = true;
                        ++count;
                        next.push_back(x);
                    }
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

std::vector<std::vector<std::uint32_t>> FiniteGroup::conjugacy_classes() const {
    std::vector<bool> seen(n_, false);
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t h = 0; h < n_; ++h) {
        if (seen[h]) continue;
        std::vector<std::uint32_t> cls;
        for (std::uint32_t g = 0; g < n_; ++g) {
            std::uint32_t c = conj(g, h);
            if (!seen[c]) {
                seen[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<std::uint32_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<std::uint32_t> pos(g.order(), g.order());
    for (std::uint32_t i = 0; i < elements.size(); ++i) pos[elements[i]] = i;
    std::uint32_t m = static_cast<std::uint32_t>(elements.size());
    std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b) {
            std::uint32_t prod = g.mul(elements[a], elements[b]);
            if (pos[prod] == g.order())
                throw std::invalid_argument("subgroup_from_elements: set not closed");
            table[a][b] = pos[prod];
        }
    return Subgroup{FiniteGroup::from_table(table), std::move(elements)};
}

Subgroup centralizer(const FiniteGroup& g, std::uint32_t h) {
    if (h >= g.order()) throw std::invalid_argument("centralizer: element out of range");
    std::vector<std::uint32_t> elems;
    for (std::uint32_t x = 0; x < g.order(); ++x)
        if (g.mul(x, h) == g.mul(h, x)) elems.push_back(x);
    return subgroup_from_elements(g, std::move(elems));
}

GroupHom::GroupHom(const FiniteGroup& domain, const FiniteGroup& codomain,
                   std::vector<std::uint32_t> map)
    : domain_(std::make_shared<FiniteGroup>(domain)),
      codomain_(std::make_shared<FiniteGroup>(codomain)),
      map_(std::move(map)) {
    if (map_.size() != domain.order())
        throw std::invalid_argument("GroupHom: map length != domain order");
    for (auto v : map_)
        if (v >= codomain.order())
            throw std::invalid_argument("GroupHom: map value out of range");
    if (map_[domain.identity()] != codomain.identity())
        throw std::invalid_argument("GroupHom: identity is not preserved");
    for (std::uint32_t a = 0; a < domain.order(); ++a)
        for (std::uint32_t b = 0; b < domain.order(); ++b)
            if (map_[domain.mul(a, b)] != codomain.mul(map_[a], map_[b]))
                throw std::invalid_argument("GroupHom: not multiplicative at pair (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
    std::vector<std::uint32_t> m(g.order());
    std::iota(m.begin(), m.end(), 0);
    return GroupHom(g, g, std::move(m));
}

bool GroupHom::is_injective() const {
    std::vector<bool> hit(codomain_->order(), false);
    for (auto v : map_) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool GroupHom::is_bijective() const {
    return domain_->order() == codomain_->order() && is_injective();
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
    if (inner.codomain() != outer.domain())
        throw std::invalid_argument("compose: homs not composable");
    std::vector<std::uint32_t> m(inner.domain().order());
    for (std::uint32_t a = 0; a < m.size(); ++a) m[a] = outer(inner(a));
    return GroupHom(inner.domain(), outer.codomain(), std::move(m));
}

bool is_splitting_prime(const FiniteGroup& g, std::uint64_t p) {
    std::uint64_t exp = g.exponent();
    return Fp::is_prime(p) && g.order() % p != 0 && p % exp == 1 % exp;
}

std::uint64_t splitting_prime(const FiniteGroup& g) {
    std::uint64_t n = g.order();
    std::uint64_t exp = g.exponent();
    for (std::uint64_t p = 2; p <= 1000000; ++p) {
        if (!Fp::is_prime(p)) continue;
        if (n % p == 0) continue;
        if (p % exp != 1 % exp) continue;
        return p;
    }
    throw std::runtime_error("splitting_prime: no prime found below 10^6");
}

} // namespace orbidouble
