#include "cohomoforge/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cf {

int FiniteGroup::power(int g, long long e) const {
    int r = 0;
    long long n = e % order;  // element order divides |G|
    if (n < 0) n += order;
    for (long long i = 0; i < n; ++i) r = mul(r, g);
    return r;
}

int FiniteGroup::element_order(int g) const {
    int x = g, n = 1;
    while (x != 0) {
        x = mul(x, g);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

GroupPtr validate_group(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) fail(errc::not_closed, "empty table");
    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->table.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) fail(errc::not_closed, "table not square", {i});
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n) fail(errc::not_closed, "entry out of range", {i, j, v});
            g->table[static_cast<size_t>(i) * n + j] = v;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (g->mul(0, i) != i || g->mul(i, 0) != i)
            fail(errc::no_identity_at_zero, "element 0 is not a two-sided identity", {i});
    }
    g->inv.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (g->mul(i, j) == 0 && g->mul(j, i) == 0) {
                g->inv[i] = j;
                break;
            }
        if (g->inv[i] < 0) fail(errc::missing_inverse, "no two-sided inverse", {i});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
                    fail(errc::not_associative, "associativity fails", {a, b, c});
    return g;
}

GroupPtr trivial_group() { return validate_group({{0}}); }

GroupPtr cyclic_group(int n) {
    if (n < 1) fail(errc::bad_argument, "cyclic_group: order < 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return validate_group(t);
}

static std::vector<int> perm_compose(const std::vector<int>& s, const std::vector<int>& t) {
    // (s*t)(x) = s(t(x)); matches the left-action reading of the Cayley table
    std::vector<int> r(s.size());
    for (size_t x = 0; x < s.size(); ++x) r[x] = s[t[x]];
    return r;
}

PermGroup from_permutations(int degree, const std::vector<std::vector<int>>& generators, int order_cap) {
    if (degree < 1) fail(errc::bad_argument, "degree < 1");
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree) fail(errc::bad_argument, "generator degree mismatch");
        std::vector<bool> seen(degree, false);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v]) fail(errc::bad_argument, "generator is not a bijection");
            seen[v] = true;
        }
    }
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    std::vector<std::vector<int>> layer{id};
    while (!layer.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& e : layer)
            for (const auto& gen : generators) {
                std::vector<int> w = perm_compose(e, gen);
                if (!index.count(w) && !next.count(w)) next.insert(w);
            }
        layer.assign(next.begin(), next.end());  // lexicographic within the layer
        for (const auto& w : layer) {
            if (static_cast<int>(elems.size()) >= order_cap && order_cap > 0)
                fail(errc::order_cap_exceeded, "closure exceeds order cap");
            index[w] = static_cast<int>(elems.size());
            elems.push_back(w);
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = index.at(perm_compose(elems[i], elems[j]));
    return PermGroup{validate_group(table), elems};
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup whole_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order);
    for (int i = 0; i < g->order; ++i) all[i] = i;
    return Subgroup{g, all};
}

Subgroup subgroup_closure(const GroupPtr& g, std::vector<int> gens) {
    std::set<int> elems{0};
    std::vector<int> queue{0};
    for (int x : gens)
        if (elems.insert(x).second) queue.push_back(x);
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int s : std::vector<int>(elems.begin(), elems.end())) {
            for (int y : {g->mul(x, s), g->mul(s, x)}) {
                if (elems.insert(y).second) queue.push_back(y);
            }
        }
    }
    return Subgroup{g, std::vector<int>(elems.begin(), elems.end())};
}

bool is_subgroup_closed(const Subgroup& s) {
    if (s.elements.empty() || s.elements[0] != 0) return false;
    for (int a : s.elements) {
        if (!s.contains(s.parent->inverse(a))) return false;
        for (int b : s.elements)
            if (!s.contains(s.parent->mul(a, b))) return false;
    }
    return true;
}

bool is_normal(const Subgroup& s) {
    for (int x : s.elements)
        for (int g = 0; g < s.parent->order; ++g)
            if (!s.contains(s.parent->conj(x, g))) return false;
    return true;
}

Subgroup conjugate_subgroup(const Subgroup& s, int g) {
    std::vector<int> e;
    e.reserve(s.elements.size());
    for (int x : s.elements) e.push_back(s.parent->conj(x, g));
    std::sort(e.begin(), e.end());
    return Subgroup{s.parent, e};
}

Subgroup center(const GroupPtr& g) {
    std::vector<int> z;
    for (int a = 0; a < g->order; ++a) {
        bool central = true;
        for (int b = 0; b < g->order && central; ++b)
            if (g->mul(a, b) != g->mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return Subgroup{g, z};
}

Subgroup derived_subgroup(const GroupPtr& g, const Subgroup& h) {
    std::vector<int> comms;
    for (int a = 0; a < g->order; ++a)
        for (int x : h.elements) {
            // [a, x] = a^-1 x^-1 a x
            int c = g->mul(g->mul(g->inverse(a), g->inverse(x)), g->mul(a, x));
            comms.push_back(c);
        }
    return subgroup_closure(g, comms);
}

LowerCentralSeries lower_central_series(const GroupPtr& g) {
    LowerCentralSeries out;
    out.terms.push_back(whole_subgroup(g));
    for (;;) {
        Subgroup next = derived_subgroup(g, out.terms.back());
        if (next.elements == out.terms.back().elements) break;  // stabilized above trivial
        out.terms.push_back(next);
        if (next.order() == 1) break;
    }
    if (out.terms.back().order() == 1)
        out.nilpotency_class = static_cast<int>(out.terms.size()) - 1;
    return out;
}

bool is_nilpotent(const GroupPtr& g) { return lower_central_series(g).nilpotency_class.has_value(); }

bool is_solvable(const GroupPtr& g) {
    Subgroup d = whole_subgroup(g);
    for (;;) {
        GroupPtr h = subgroup_as_group(d);
        Subgroup dd = derived_subgroup(h, whole_subgroup(h));
        if (dd.order() == d.order()) return d.order() == 1;
        std::vector<int> mapped;
        for (int x : dd.elements) mapped.push_back(d.elements[x]);
        std::sort(mapped.begin(), mapped.end());
        d = Subgroup{g, mapped};
        if (d.order() == 1) return true;
    }
}

GroupHom validate_group_hom(const GroupPtr& source, const GroupPtr& target, std::vector<int> map) {
    if (static_cast<int>(map.size()) != source->order) fail(errc::bad_argument, "hom map size");
    if (map[0] != 0) fail(errc::bad_argument, "hom does not fix identity");
    for (int v : map)
        if (v < 0 || v >= target->order) fail(errc::bad_argument, "hom image out of range");
    for (int a = 0; a < source->order; ++a)
        for (int b = 0; b < source->order; ++b)
            if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
                fail(errc::bad_argument, "not a homomorphism", {a, b});
    return GroupHom{source, target, std::move(map)};
}

bool hom_is_surjective(const GroupHom& h) {
    std::set<int> img(h.map.begin(), h.map.end());
    return static_cast<int>(img.size()) == h.target->order;
}

Subgroup hom_kernel(const GroupHom& h) {
    std::vector<int> k;
    for (int g = 0; g < h.source->order; ++g)
        if (h.map[g] == 0) k.push_back(g);
    return Subgroup{h.source, k};
}

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n) {
    for (int x : n.elements)
        for (int a = 0; a < g->order; ++a)
            if (!n.contains(g->conj(x, a)))
                fail(errc::not_normal, "subgroup is not normal", {x, a});

    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of(g->order, -1);
    for (int a = 0; a < g->order; ++a) {
        if (coset_of[a] >= 0) continue;
        std::vector<int> coset;
        for (int x : n.elements) coset.push_back(g->mul(a, x));
        std::sort(coset.begin(), coset.end());
        int idx = static_cast<int>(cosets.size());
        for (int y : coset) coset_of[y] = idx;
        cosets.push_back(std::move(coset));
    }
    // order cosets by least member; the identity coset contains 0 and lands first
    std::vector<int> perm(cosets.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) { return cosets[x][0] < cosets[y][0]; });
    std::vector<int> rank(cosets.size());
    for (size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> ordered(cosets.size());
    for (size_t i = 0; i < perm.size(); ++i) ordered[i] = cosets[perm[i]];
    for (int a = 0; a < g->order; ++a) coset_of[a] = rank[coset_of[a]];

    const int m = static_cast<int>(ordered.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = coset_of[g->mul(ordered[i][0], ordered[j][0])];
    QuotientGroup out;
    out.group = validate_group(table);
    out.cosets = ordered;
    out.projection = GroupHom{g, out.group, coset_of};
    return out;
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& s) {
    std::vector<int> n;
    for (int a = 0; a < g->order; ++a) {
        bool fixes = true;
        for (int x : s.elements)
            if (!s.contains(g->conj(x, a))) {
                fixes = false;
                break;
            }
        if (fixes) n.push_back(a);
    }
    return Subgroup{g, n};
}

Subgroup centralizer_of_subgroup(const GroupPtr& g, const Subgroup& s) {
    std::vector<int> c;
    for (int a = 0; a < g->order; ++a) {
        bool commutes = true;
        for (int x : s.elements)
            if (g->mul(a, x) != g->mul(x, a)) {
                commutes = false;
                break;
            }
        if (commutes) c.push_back(a);
    }
    return Subgroup{g, c};
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, int order_cap) {
    if (g->order > order_cap) fail(errc::order_cap_exceeded, "group order over enumeration cap");
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> triv{0};
    seen.insert(triv);
    queue.push_back(triv);
    // cyclic extension from the trivial subgroup: grow by one generator at a time
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> h = queue[qi];
        for (int x = 1; x < g->order; ++x) {
            if (std::binary_search(h.begin(), h.end(), x)) continue;
            std::vector<int> gens = h;
            gens.push_back(x);
            Subgroup k = subgroup_closure(g, gens);
            if (seen.insert(k.elements).second) queue.push_back(k.elements);
        }
    }
    std::vector<Subgroup> out;
    for (const auto& e : seen) out.push_back(Subgroup{g, e});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

GroupPtr subgroup_as_group(const Subgroup& s) {
    const int m = s.order();
    std::vector<int> pos(s.parent->order, -1);
    for (int i = 0; i < m; ++i) pos[s.elements[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = s.parent->mul(s.elements[i], s.elements[j]);
            if (pos[p] < 0) fail(errc::not_closed, "subgroup not closed", {s.elements[i], s.elements[j]});
            table[i][j] = pos[p];
        }
    return validate_group(table);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    const int n = a->order * b->order;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    auto idx = [&](int x, int y) { return x * b->order + y; };
    for (int x1 = 0; x1 < a->order; ++x1)
        for (int y1 = 0; y1 < b->order; ++y1)
            for (int x2 = 0; x2 < a->order; ++x2)
                for (int y2 = 0; y2 < b->order; ++y2)
                    table[idx(x1, y1)][idx(x2, y2)] = idx(a->mul(x1, x2), b->mul(y1, y2));
    return validate_group(table);
}

GroupPtr semidirect_product(const GroupPtr& n, const GroupPtr& h,
                            const std::vector<std::vector<int>>& action) {
    if (static_cast<int>(action.size()) != h->order) fail(errc::bad_argument, "action size mismatch");
    for (int x = 0; x < n->order; ++x)
        if (action[0][x] != x) fail(errc::bad_argument, "action at identity is not trivial");
    for (int a = 0; a < h->order; ++a)
        for (int b = 0; b < h->order; ++b)
            for (int x = 0; x < n->order; ++x)
                if (action[h->mul(a, b)][x] != action[a][action[b][x]])
                    fail(errc::bad_argument, "action is not a homomorphism");
    for (int a = 0; a < h->order; ++a)
        for (int x = 0; x < n->order; ++x)
            for (int y = 0; y < n->order; ++y)
                if (action[a][n->mul(x, y)] != n->mul(action[a][x], action[a][y]))
                    fail(errc::bad_argument, "action value is not an automorphism");

    // elements written n*h; (n1 h1)(n2 h2) = (n1 * phi_{h1}(n2)) (h1 h2)
    const int total = n->order * h->order;
    auto idx = [&](int x, int y) { return x * h->order + y; };
    std::vector<std::vector<int>> table(total, std::vector<int>(total));
    for (int x1 = 0; x1 < n->order; ++x1)
        for (int y1 = 0; y1 < h->order; ++y1)
            for (int x2 = 0; x2 < n->order; ++x2)
                for (int y2 = 0; y2 < h->order; ++y2)
                    table[idx(x1, y1)][idx(x2, y2)] = idx(n->mul(x1, action[y1][x2]), h->mul(y1, y2));
    return validate_group(table);
}

GroupPtr dicyclic_group(int n) {
    if (n < 1) fail(errc::bad_argument, "dicyclic: n < 1");
    const int m = 2 * n;         // order of the rotation a
    const int total = 4 * n;
    auto idx = [&](int i, int j) { return j * m + i; };
    std::vector<std::vector<int>> table(total, std::vector<int>(total));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < 2; ++l) {
                    int ii, jj;
                    if (j == 0) {
                        ii = (i + k) % m;
                        jj = l;
                    } else if (l == 0) {
                        ii = ((i - k) % m + m) % m;
                        jj = 1;
                    } else {  // b^2 = a^n
                        ii = ((i - k + n) % m + m) % m;
                        jj = 0;
                    }
                    table[idx(i, j)][idx(k, l)] = idx(ii, jj);
                }
    return validate_group(table);
}

// minimal generating sequence by greedy closure; deterministic
static std::vector<int> generating_sequence(const GroupPtr& g) {
    std::vector<int> gens;
    Subgroup h = trivial_subgroup(g);
    while (h.order() < g->order) {
        int pick = -1;
        for (int x = 0; x < g->order; ++x)
            if (!h.contains(x)) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        std::vector<int> all = h.elements;
        all.push_back(pick);
        h = subgroup_closure(g, all);
    }
    return gens;
}

// Assign images of all elements from generator images via a BFS word
// decomposition, then verify the result is a bijective homomorphism.
static bool extend_and_verify(const GroupPtr& a, const GroupPtr& b, const std::vector<int>& gens,
                              const std::vector<int>& images, std::vector<int>& out_map) {
    const int n = a->order;
    std::vector<int> map(n, -1);
    map[0] = 0;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (size_t i = 0; i < gens.size(); ++i) {
            int y = a->mul(x, gens[i]);
            int fy = b->mul(map[x], images[i]);
            if (map[y] < 0) {
                map[y] = fy;
                queue.push_back(y);
            } else if (map[y] != fy) {
                return false;
            }
        }
    }
    std::vector<bool> hit(b->order, false);
    for (int x = 0; x < n; ++x) {
        if (map[x] < 0 || hit[map[x]]) return false;
        hit[map[x]] = true;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (map[a->mul(x, y)] != b->mul(map[x], map[y])) return false;
    out_map = std::move(map);
    return true;
}

std::vector<std::vector<int>> automorphisms(const GroupPtr& g, size_t cap) {
    std::vector<int> gens = generating_sequence(g);
    std::vector<std::vector<int>> out;
    if (gens.empty()) return {{0}};
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int ord = g->element_order(gens[i]);
        for (int x = 0; x < g->order; ++x)
            if (g->element_order(x) == ord) candidates[i].push_back(x);
    }
    std::vector<int> images(gens.size());
    std::vector<int> map;
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == gens.size()) {
            if (extend_and_verify(g, g, gens, images, map)) {
                if (out.size() >= cap) fail(errc::cap_exceeded, "automorphism enumeration over cap");
                out.push_back(map);
            }
            return;
        }
        for (int c : candidates[pos]) {
            images[pos] = c;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

static std::vector<long long> iso_fingerprint(const GroupPtr& g) {
    std::vector<long long> f;
    f.push_back(g->order);
    f.push_back(g->is_abelian() ? 1 : 0);
    std::vector<long long> hist(g->order + 1, 0);
    for (int x = 0; x < g->order; ++x) ++hist[g->element_order(x)];
    for (long long h : hist) f.push_back(h);
    f.push_back(center(g).order());
    f.push_back(derived_subgroup(g, whole_subgroup(g)).order());
    return f;
}

bool are_isomorphic(const GroupPtr& a, const GroupPtr& b) {
    if (a->order != b->order) return false;
    if (iso_fingerprint(a) != iso_fingerprint(b)) return false;
    std::vector<int> gens = generating_sequence(a);
    if (gens.empty()) return true;
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int ord = a->element_order(gens[i]);
        for (int x = 0; x < b->order; ++x)
            if (b->element_order(x) == ord) candidates[i].push_back(x);
    }
    std::vector<int> images(gens.size());
    std::vector<int> map;
    auto rec = [&](auto&& self, size_t pos) -> bool {
        if (pos == gens.size()) return extend_and_verify(a, b, gens, images, map);
        for (int c : candidates[pos]) {
            images[pos] = c;
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace cf
