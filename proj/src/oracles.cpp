#include "cohomoforge/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cf::oracle {

static int raw_order(int n, const std::vector<int>& add, int x) {
    int acc = x, ord = 1;
    while (acc != 0) {
        acc = add[static_cast<size_t>(acc) * n + x];
        ++ord;
    }
    return ord;
}

std::vector<Int> raw_invariant_factors(int n, const std::vector<int>& add) {
    if (n <= 1) return {};
    int best = 1, best_ord = 1;
    for (int x = 1; x < n; ++x) {
        int o = raw_order(n, add, x);
        if (o > best_ord) {
            best_ord = o;
            best = x;
        }
    }
    // peel the maximal-order cyclic summand and recurse on the quotient
    std::vector<int> cyc{0};
    int acc = best;
    while (acc != 0) {
        cyc.push_back(acc);
        acc = add[static_cast<size_t>(acc) * n + best];
    }
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int c : cyc) coset_of[add[static_cast<size_t>(x) * n + c]] = id;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<int> qadd(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            qadd[static_cast<size_t>(i) * q + j] = coset_of[add[static_cast<size_t>(reps[i]) * n + reps[j]]];
    std::vector<Int> factors = raw_invariant_factors(q, qadd);
    factors.push_back(best_ord);
    return factors;
}

namespace {

// index tables for one module: elements of A by index, addition, negation,
// and the action of each group element
struct IndexedModule {
    int n = 0;       // |G|
    int asz = 0;     // |A|
    std::vector<int> add, negate;
    std::vector<std::vector<int>> act;  // act[g][a]

    explicit IndexedModule(const GModule& m) {
        n = m.group->order;
        asz = static_cast<int>(m.coeffs.order());
        add.resize(static_cast<size_t>(asz) * asz);
        negate.resize(asz);
        std::vector<AbelianElement> elems;
        for (int i = 0; i < asz; ++i) elems.push_back(element_at(m.coeffs, i));
        for (int i = 0; i < asz; ++i) {
            negate[i] = static_cast<int>(index_of(neg(elems[i])));
            for (int j = 0; j < asz; ++j)
                add[static_cast<size_t>(i) * asz + j] = static_cast<int>(index_of(cf::add(elems[i], elems[j])));
        }
        act.assign(n, std::vector<int>(asz));
        for (int g = 0; g < n; ++g)
            for (int i = 0; i < asz; ++i) act[g][i] = static_cast<int>(index_of(m.act(g, elems[i])));
    }

    int plus(int a, int b) const { return add[static_cast<size_t>(a) * asz + b]; }
    int minus(int a, int b) const { return plus(a, negate[b]); }
};

std::vector<Int> quotient_invariants(const std::vector<std::vector<uint8_t>>& cocycles,
                                     const std::set<std::vector<uint8_t>>& coboundaries,
                                     const IndexedModule& ix) {
    std::map<std::vector<uint8_t>, int> index;
    for (size_t i = 0; i < cocycles.size(); ++i) index[cocycles[i]] = static_cast<int>(i);
    auto vec_add = [&](const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
        std::vector<uint8_t> r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<uint8_t>(ix.plus(a[i], b[i]));
        return r;
    };
    std::vector<int> coset_of(cocycles.size(), -1);
    std::vector<int> reps;
    for (size_t i = 0; i < cocycles.size(); ++i) {
        if (coset_of[i] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(i));
        for (const auto& b : coboundaries) {
            auto it = index.find(vec_add(cocycles[i], b));
            if (it == index.end()) fail(errc::no_solution, "coboundary translate left the cocycles");
            coset_of[it->second] = id;
        }
    }
    const int q = static_cast<int>(reps.size());
    std::vector<int> qadd(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            auto it = index.find(vec_add(cocycles[reps[i]], cocycles[reps[j]]));
            if (it == index.end()) fail(errc::no_solution, "cocycles not closed under addition");
            qadd[static_cast<size_t>(i) * q + j] = coset_of[it->second];
        }
    return raw_invariant_factors(q, qadd);
}

}  // namespace

std::vector<Int> brute_h1(const GModule& m, long long enumeration_cap) {
    IndexedModule ix(m);
    long long total = 1;
    for (int g = 0; g < ix.n; ++g) {
        total *= ix.asz;
        if (total > enumeration_cap) fail(errc::cap_exceeded, "H1 enumeration over cap");
    }
    std::vector<std::vector<uint8_t>> cocycles;
    std::vector<uint8_t> f(ix.n, 0);
    for (long long code = 0; code < total; ++code) {
        long long rem = code;
        for (int g = 0; g < ix.n; ++g) {
            f[g] = static_cast<uint8_t>(rem % ix.asz);
            rem /= ix.asz;
        }
        bool der = true;
        for (int x = 0; x < ix.n && der; ++x)
            for (int y = 0; y < ix.n && der; ++y)
                if (f[m.group->mul(x, y)] != ix.plus(ix.act[x][f[y]], f[x])) der = false;
        if (der) cocycles.push_back(f);
    }
    std::set<std::vector<uint8_t>> coboundaries;
    for (int a = 0; a < ix.asz; ++a) {
        std::vector<uint8_t> b(ix.n);
        for (int g = 0; g < ix.n; ++g) b[g] = static_cast<uint8_t>(ix.minus(ix.act[g][a], a));
        coboundaries.insert(std::move(b));
    }
    return quotient_invariants(cocycles, coboundaries, ix);
}

namespace {

struct TwoCocycleSearch {
    const GModule& m;
    IndexedModule ix;
    int n;
    // slots are pairs (x, y) -> x * n + y, assigned in increasing order
    struct Triple {
        int x, y, z;
        int slot[4];  // (y,z), (xy,z), (x,yz), (x,y)
    };
    std::vector<Triple> triples;
    struct Forcing {
        int triple = -1;
        std::vector<int> occ;  // which of the 4 roles hold the unknown
        std::shared_ptr<DiagSolver> solver;
    };
    std::vector<Forcing> forcing;  // per slot
    std::vector<int> free_slots;

    explicit TwoCocycleSearch(const GModule& mod) : m(mod), ix(mod), n(mod.group->order) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    Triple t{x, y, z, {y * n + z, m.group->mul(x, y) * n + z,
                                       x * n + m.group->mul(y, z), x * n + y}};
                    triples.push_back(t);
                }
        const int k = m.coeffs.rank();
        forcing.assign(n * n, {});
        for (int slot = 0; slot < n * n; ++slot) {
            for (size_t ti = 0; ti < triples.size() && forcing[slot].triple < 0; ++ti) {
                const Triple& t = triples[ti];
                std::vector<int> occ;
                bool others_earlier = true;
                for (int r = 0; r < 4; ++r) {
                    if (t.slot[r] == slot) occ.push_back(r);
                    else if (t.slot[r] >= slot) others_earlier = false;
                }
                if (occ.empty() || !others_earlier) continue;
                // net operator of the unknown slot: rho(x) for role 0, -+- for 1..3
                Mat op(k, k);
                for (int r : occ) {
                    if (r == 0) op = mat_add(op, m.action[t.x].matrix);
                    else if (r == 2) op = mat_add(op, Mat::identity(k));
                    else op = mat_sub(op, Mat::identity(k));
                }
                AbelianHom oph = hom_unchecked(m.coeffs, m.coeffs, op);
                if (!kernel_image(oph).kernel.group.is_trivial()) continue;
                forcing[slot].triple = static_cast<int>(ti);
                forcing[slot].occ = occ;
                forcing[slot].solver = std::make_shared<DiagSolver>(oph.matrix, m.coeffs.factors);
            }
            if (forcing[slot].triple < 0) free_slots.push_back(slot);
        }
    }

    // value index forced at `slot` given earlier assignments, or -1 if inconsistent
    int forced_value(int slot, const std::vector<int>& assign) const {
        const Forcing& fc = forcing[slot];
        const Triple& t = triples[static_cast<size_t>(fc.triple)];
        AbelianElement rhs = zero_element(m.coeffs);
        for (int r = 0; r < 4; ++r) {
            if (std::find(fc.occ.begin(), fc.occ.end(), r) != fc.occ.end()) continue;
            AbelianElement v = element_at(m.coeffs, assign[t.slot[r]]);
            if (r == 0) v = m.act(t.x, v);
            if (r == 0 || r == 2) rhs = sub(rhs, v);  // move to the right-hand side
            else rhs = add(rhs, v);
        }
        auto sol = fc.solver->solve(rhs.coords);
        if (!sol) return -1;
        return static_cast<int>(index_of(make_element(m.coeffs, *sol)));
    }

    bool satisfies_all(const std::vector<int>& assign) const {
        for (const Triple& t : triples) {
            int lhs = ix.act[t.x][assign[t.slot[0]]];
            lhs = ix.minus(lhs, assign[t.slot[1]]);
            lhs = ix.plus(lhs, assign[t.slot[2]]);
            lhs = ix.minus(lhs, assign[t.slot[3]]);
            if (lhs != 0) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<Int> brute_h2(const GModule& m, long long leaf_cap) {
    TwoCocycleSearch search(m);
    const int slots = search.n * search.n;
    long long leaves = 1;
    for (size_t i = 0; i < search.free_slots.size(); ++i) {
        leaves *= search.ix.asz;
        if (leaves > leaf_cap) fail(errc::cap_exceeded, "H2 enumeration over cap");
    }
    std::vector<std::vector<uint8_t>> cocycles;
    std::vector<int> assign(slots, -1);
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == slots) {
            if (search.satisfies_all(assign)) {
                std::vector<uint8_t> v(slots);
                for (int i = 0; i < slots; ++i) v[i] = static_cast<uint8_t>(assign[i]);
                cocycles.push_back(std::move(v));
            }
            return;
        }
        if (search.forcing[slot].triple >= 0) {
            int v = search.forced_value(slot, assign);
            if (v < 0) return;
            assign[slot] = v;
            self(self, slot + 1);
            assign[slot] = -1;
            return;
        }
        for (int v = 0; v < search.ix.asz; ++v) {
            assign[slot] = v;
            self(self, slot + 1);
        }
        assign[slot] = -1;
    };
    rec(rec, 0);

    // coboundaries of all 1-cochains
    long long c1 = 1;
    for (int g = 0; g < search.n; ++g) {
        c1 *= search.ix.asz;
        if (c1 > leaf_cap) fail(errc::cap_exceeded, "coboundary enumeration over cap");
    }
    std::set<std::vector<uint8_t>> coboundaries;
    std::vector<int> c(search.n);
    for (long long code = 0; code < c1; ++code) {
        long long rem = code;
        for (int g = 0; g < search.n; ++g) {
            c[g] = static_cast<int>(rem % search.ix.asz);
            rem /= search.ix.asz;
        }
        std::vector<uint8_t> b(slots);
        for (int x = 0; x < search.n; ++x)
            for (int y = 0; y < search.n; ++y) {
                int v = search.ix.act[x][c[y]];
                v = search.ix.minus(v, c[m.group->mul(x, y)]);
                v = search.ix.plus(v, c[x]);
                b[x * search.n + y] = static_cast<uint8_t>(v);
            }
        coboundaries.insert(std::move(b));
    }
    return quotient_invariants(cocycles, coboundaries, search.ix);
}

}  // namespace cf::oracle
