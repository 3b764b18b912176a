#include "cohomoforge/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cf {

static GroupPtr abelian_cayley(const FiniteAbelianGroup& a) {
    GroupPtr g = cyclic_group(1);
    for (const Int& d : a.factors) g = direct_product(g, cyclic_group(static_cast<int>(d)));
    return g;
}

static GroupPtr dihedral_group(int n) {
    // Z_n x| Z_2 with inversion
    GroupPtr zn = cyclic_group(n);
    GroupPtr z2 = cyclic_group(2);
    std::vector<int> id(n), invp(n);
    for (int i = 0; i < n; ++i) {
        id[i] = i;
        invp[i] = (n - i) % n;
    }
    return semidirect_product(zn, z2, {id, invp});
}

static std::string abelian_name(const FiniteAbelianGroup& a) {
    if (a.is_trivial()) return "1";
    std::string s;
    for (size_t i = 0; i < a.factors.size(); ++i)
        s += (i ? "x" : "") + std::string("Z") + a.factors[i].str();
    return s;
}

std::vector<FiniteAbelianGroup> abelian_groups_up_to(long long max_order) {
    std::vector<FiniteAbelianGroup> out{FiniteAbelianGroup::trivial()};
    // chains d1 | d2 | ... with bounded product, extended by multiples of the tail
    auto extend = [&](auto&& self, const std::vector<Int>& chain, long long product) -> void {
        long long last = chain.empty() ? 2 : static_cast<long long>(chain.back());
        long long step = chain.empty() ? 1 : last;
        for (long long d = last; product * d <= max_order; d += step) {
            std::vector<Int> next = chain;
            next.push_back(Int(d));
            out.push_back(FiniteAbelianGroup{next});
            self(self, next, product * d);
        }
    };
    extend(extend, {}, 1);
    std::sort(out.begin(), out.end(), [](const FiniteAbelianGroup& x, const FiniteAbelianGroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.factors < y.factors;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

static const std::vector<int> kGroupCounts = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};

static std::vector<CatalogGroup> build_catalog() {
    std::vector<CatalogGroup> out;
    auto add = [&](const std::string& name, const GroupPtr& g) {
        for (const CatalogGroup& c : out)
            if (c.group->order == g->order && are_isomorphic(c.group, g)) return;
        out.push_back(CatalogGroup{name, g, is_nilpotent(g), is_solvable(g)});
    };

    for (const FiniteAbelianGroup& a : abelian_groups_up_to(16)) add(abelian_name(a), abelian_cayley(a));

    for (int n = 3; 2 * n <= 16; ++n) add("D" + std::to_string(n), dihedral_group(n));
    for (int n = 2; 4 * n <= 16; ++n)
        add(n == 2 ? "Q8" : (n == 4 ? "Q16" : "Dic" + std::to_string(n)), dicyclic_group(n));

    // split extensions N x| H over every hom from a small cyclic H into Aut(N)
    std::vector<std::pair<std::string, GroupPtr>> kernels;
    for (const FiniteAbelianGroup& a : abelian_groups_up_to(8))
        if (!a.is_trivial()) kernels.push_back({abelian_name(a), abelian_cayley(a)});
    kernels.push_back({"D4", dihedral_group(4)});
    kernels.push_back({"Q8", dicyclic_group(2)});

    for (const auto& [nname, n] : kernels) {
        std::vector<std::vector<int>> auts = automorphisms(n);
        for (int hord : {2, 3, 4}) {
            if (n->order * hord > 16) continue;
            GroupPtr h = cyclic_group(hord);
            for (const auto& alpha : auts) {
                std::vector<std::vector<int>> action;
                std::vector<int> id(n->order);
                for (int i = 0; i < n->order; ++i) id[i] = i;
                action.push_back(id);
                for (int e = 1; e < hord; ++e) {
                    std::vector<int> nx(n->order);
                    for (int i = 0; i < n->order; ++i) nx[i] = alpha[action.back()[i]];
                    action.push_back(std::move(nx));
                }
                bool order_divides = true;
                for (int i = 0; i < n->order; ++i)
                    if (alpha[action.back()[i]] != i) order_divides = false;
                if (!order_divides) continue;
                add(nname + ":Z" + std::to_string(hord), semidirect_product(n, h, action));
            }
        }
    }

    for (int ord = 1; ord <= 16; ++ord) {
        int cnt = 0;
        for (const CatalogGroup& c : out)
            if (c.group->order == ord) ++cnt;
        if (cnt != kGroupCounts[ord - 1])
            fail(errc::no_solution, "catalog: expected " + std::to_string(kGroupCounts[ord - 1]) +
                                        " groups of order " + std::to_string(ord) + ", built " +
                                        std::to_string(cnt));
    }

    // products and symmetric groups up to order 48 for the Frattini battery
    auto s3 = from_permutations(3, {{1, 0, 2}, {1, 2, 0}}).group;
    auto s4 = from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}).group;
    auto a4 = from_permutations(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}).group;
    auto d4 = dihedral_group(4);
    auto d5 = dihedral_group(5);
    auto q8 = dicyclic_group(2);
    add("S3xZ3", direct_product(s3, cyclic_group(3)));
    add("D5xZ2", direct_product(d5, cyclic_group(2)));
    add("S4", s4);
    add("S3xZ4", direct_product(s3, cyclic_group(4)));
    add("S3xZ2xZ2", direct_product(s3, direct_product(cyclic_group(2), cyclic_group(2))));
    add("A4xZ2", direct_product(a4, cyclic_group(2)));
    add("Dic3xZ2", direct_product(dicyclic_group(3), cyclic_group(2)));
    add("D4xZ3", direct_product(d4, cyclic_group(3)));
    add("S3xS3", direct_product(s3, s3));
    add("D5xZ4", direct_product(d5, cyclic_group(4)));
    add("S4xZ2", direct_product(s4, cyclic_group(2)));
    add("A4xZ4", direct_product(a4, cyclic_group(4)));
    add("D4xS3", direct_product(d4, s3));
    add("Q8xS3", direct_product(q8, s3));
    return out;
}

const std::vector<CatalogGroup>& catalog_groups() {
    static const std::vector<CatalogGroup> groups = build_catalog();
    return groups;
}

std::vector<CatalogGroup> catalog_groups_up_to(int max_order) {
    std::vector<CatalogGroup> out;
    for (const CatalogGroup& c : catalog_groups())
        if (c.group->order <= max_order) out.push_back(c);
    return out;
}

Int matrix_order(const FiniteAbelianGroup& a, const Mat& m, Int cap) {
    auto reduce = [&](Mat v) {
        for (int i = 0; i < v.rows; ++i)
            for (int j = 0; j < v.cols; ++j) v(i, j) = mod_floor(v(i, j), a.factors[i]);
        return v;
    };
    Mat x = reduce(m);
    Mat id = Mat::identity(a.rank());
    Int n = 1;
    while (!(x == id)) {
        x = reduce(mat_mul(x, m));
        ++n;
        if (n > cap) fail(errc::cap_exceeded, "matrix order over cap");
    }
    return n;
}

std::vector<Mat> automorphism_pool(const FiniteAbelianGroup& a, long long enum_cap, size_t pool_cap) {
    const int k = a.rank();
    if (k == 0) return {Mat(0, 0)};
    Int endos = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) endos *= gcd_int(a.factors[i], a.factors[j]);
    std::vector<Mat> pool;
    auto is_auto = [&](const Mat& m) {
        if (!is_well_defined(a, a, m)) return false;
        return kernel_image(hom_unchecked(a, a, m)).kernel.group.is_trivial();
    };
    if (endos <= enum_cap) {
        // mixed-radix sweep over entries written as t_ij * c_ij, c_ij mod gcd
        std::vector<Int> gcds(static_cast<size_t>(k) * k), steps(static_cast<size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Int g = gcd_int(a.factors[i], a.factors[j]);
                gcds[static_cast<size_t>(i) * k + j] = g;
                steps[static_cast<size_t>(i) * k + j] = a.factors[i] / g;
            }
        std::vector<Int> digits(static_cast<size_t>(k) * k, 0);
        for (;;) {
            Mat m(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    m(i, j) = steps[static_cast<size_t>(i) * k + j] * digits[static_cast<size_t>(i) * k + j];
            if (is_auto(m)) pool.push_back(std::move(m));
            int pos = k * k - 1;
            while (pos >= 0) {
                digits[pos] += 1;
                if (digits[pos] < gcds[pos]) break;
                digits[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        return pool;
    }
    // generated fallback: shift permutation, sign flip, transvection
    std::vector<Mat> gens;
    Mat shift(k, k);
    for (int i = 0; i < k; ++i) shift((i + 1) % k, i) = 1;
    if (is_auto(shift)) gens.push_back(shift);
    Mat flip = Mat::identity(k);
    flip(0, 0) = a.factors[0] - 1;
    if (is_auto(flip)) gens.push_back(flip);
    if (k >= 2) {
        Mat trans = Mat::identity(k);
        trans(0, 1) = 1;
        if (is_auto(trans)) gens.push_back(trans);
    }
    std::set<std::vector<Int>> seen;
    std::vector<Mat> queue{Mat::identity(k)};
    seen.insert(queue[0].a);
    pool.push_back(queue[0]);
    while (!queue.empty() && pool.size() < pool_cap) {
        Mat x = queue.back();
        queue.pop_back();
        for (const Mat& g : gens) {
            Mat y = mat_mul(x, g);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) y(i, j) = mod_floor(y(i, j), a.factors[i]);
            if (seen.insert(y.a).second) {
                pool.push_back(y);
                queue.push_back(y);
                if (pool.size() >= pool_cap) break;
            }
        }
    }
    return pool;
}

GModule module_from_autos(const FiniteAbelianGroup& a, const std::vector<Mat>& gens, int order_cap) {
    const int k = a.rank();
    std::vector<AbelianHom> gen_homs;
    for (const Mat& g : gens) {
        AbelianHom h = validate_hom(a, a, g);
        if (!kernel_image(h).kernel.group.is_trivial())
            fail(errc::not_automorphism, "generator has nontrivial kernel");
        gen_homs.push_back(std::move(h));
    }
    std::vector<Mat> elems{Mat::identity(k)};
    std::map<std::vector<Int>, int> index{{elems[0].a, 0}};
    std::vector<Mat> layer = elems;
    while (!layer.empty()) {
        std::set<std::vector<Int>> next;
        for (const Mat& e : layer)
            for (const AbelianHom& g : gen_homs) {
                Mat w = hom_unchecked(a, a, mat_mul(e, g.matrix)).matrix;
                if (!index.count(w.a)) next.insert(w.a);
            }
        layer.clear();
        for (const auto& flat : next) {
            if (static_cast<int>(elems.size()) >= order_cap)
                fail(errc::order_cap_exceeded, "matrix group closure over cap");
            Mat w(k, k);
            w.a = flat;
            index[flat] = static_cast<int>(elems.size());
            elems.push_back(w);
            layer.push_back(w);
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = index.at(hom_unchecked(a, a, mat_mul(elems[i], elems[j])).matrix.a);
    GroupPtr g = validate_group(table);
    return validate_module(g, a, elems);
}

struct CyclicQuotientData {
    int modulus = 1;
    std::vector<int> dlog;    // g -> exponent of the chosen generator coset
    std::vector<int> kernel;  // N, for ordering
};

static std::vector<CyclicQuotientData> cyclic_quotients(const GroupPtr& g) {
    std::vector<CyclicQuotientData> out;
    for (const Subgroup& n : enumerate_subgroups(g)) {
        if (n.order() == g->order) continue;  // full kernel only duplicates the trivial action
        if (!is_normal(n)) continue;
        QuotientGroup q = quotient_group(g, n);
        const int m = q.group->order;
        int gen = -1;
        for (int x = 1; x < m && gen < 0; ++x)
            if (q.group->element_order(x) == m) gen = x;
        if (gen < 0) continue;  // quotient not cyclic
        std::vector<int> dlog_of(m, -1);
        int acc = 0;
        for (int e = 0; e < m; ++e) {
            dlog_of[acc] = e;
            acc = q.group->mul(acc, gen);
        }
        CyclicQuotientData data;
        data.modulus = m;
        data.kernel = n.elements;
        data.dlog.resize(g->order);
        for (int x = 0; x < g->order; ++x) data.dlog[x] = dlog_of[q.projection.map[x]];
        out.push_back(std::move(data));
    }
    std::sort(out.begin(), out.end(), [](const CyclicQuotientData& a, const CyclicQuotientData& b) {
        if (a.modulus != b.modulus) return a.modulus > b.modulus;
        return a.kernel < b.kernel;
    });
    return out;
}

void for_each_family_module(const ModuleFamilyOptions& opts,
                            const std::function<bool(const CatalogModule&)>& visit) {
    std::set<std::pair<const FiniteGroup*, std::vector<Int>>> seen;
    bool stop = false;
    auto add = [&](const std::string& name, GModule mod) {
        if (stop) return;
        std::vector<Int> key;
        for (const Int& f : mod.coeffs.factors) key.push_back(f);
        key.push_back(-1);
        for (const AbelianHom& h : mod.action)
            key.insert(key.end(), h.matrix.a.begin(), h.matrix.a.end());
        if (!seen.insert({mod.group.get(), key}).second) return;
        CatalogModule cm{name, std::move(mod)};
        if (!visit(cm)) stop = true;
    };

    std::vector<FiniteAbelianGroup> coeffs;
    for (const FiniteAbelianGroup& a : abelian_groups_up_to(opts.max_coeff_order))
        if (!a.is_trivial()) coeffs.push_back(a);

    std::map<std::vector<Int>, std::vector<Mat>> pool_cache;
    auto pool_of = [&](const FiniteAbelianGroup& a) -> const std::vector<Mat>& {
        auto it = pool_cache.find(a.factors);
        if (it == pool_cache.end()) it = pool_cache.emplace(a.factors, automorphism_pool(a)).first;
        return it->second;
    };

    for (const CatalogGroup& cg : catalog_groups_up_to(opts.max_group_order)) {
        if (stop) return;
        if (opts.nilpotent_groups_only && !cg.nilpotent) continue;
        std::vector<CyclicQuotientData> quots = cyclic_quotients(cg.group);
        if (static_cast<int>(quots.size()) > opts.quotients_per_group)
            quots.resize(opts.quotients_per_group);
        for (const FiniteAbelianGroup& a : coeffs) {
            if (stop) return;
            if (opts.include_trivial_actions)
                add(cg.name + " on " + abelian_name(a) + " trivially", trivial_module(cg.group, a));
            for (const CyclicQuotientData& q : quots) {
                if (q.modulus == 1 || stop) continue;
                int used = 0;
                for (const Mat& alpha : pool_of(a)) {
                    if (used >= opts.actions_per_quotient || stop) break;
                    Int ord = matrix_order(a, alpha);
                    if (ord == 1 || Int(q.modulus) % ord != 0) continue;
                    std::vector<Mat> powers{Mat::identity(a.rank())};
                    for (int e = 1; e < q.modulus; ++e)
                        powers.push_back(hom_unchecked(a, a, mat_mul(powers.back(), alpha)).matrix);
                    std::vector<Mat> mats;
                    mats.reserve(cg.group->order);
                    for (int x = 0; x < cg.group->order; ++x) mats.push_back(powers[q.dlog[x]]);
                    add(cg.name + " on " + abelian_name(a) + " via Z" + std::to_string(q.modulus),
                        validate_module(cg.group, a, mats));
                    ++used;
                }
            }
        }
    }

    if (opts.include_matrix_groups) {
        for (const FiniteAbelianGroup& a : coeffs) {
            if (stop) return;
            if (a.rank() != 2 || a.order() > 25) continue;
            const std::vector<Mat>& pool = pool_of(a);
            int used = 0;
            for (size_t i = 0; i < pool.size() && used < 4 && !stop; ++i)
                for (size_t j = i + 1; j < pool.size() && used < 4 && !stop; ++j) {
                    Mat ab = hom_unchecked(a, a, mat_mul(pool[i], pool[j])).matrix;
                    Mat ba = hom_unchecked(a, a, mat_mul(pool[j], pool[i])).matrix;
                    if (ab == ba) continue;  // want faithful nonabelian images
                    GModule mod;
                    try {
                        mod = module_from_autos(a, {pool[i], pool[j]}, opts.max_group_order);
                    } catch (const Error&) {
                        continue;
                    }
                    add("matrix group on " + abelian_name(a), std::move(mod));
                    ++used;
                }
        }
    }
}

std::vector<CatalogModule> module_family(const ModuleFamilyOptions& opts) {
    std::vector<CatalogModule> out;
    for_each_family_module(opts, [&](const CatalogModule& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

}  // namespace cf
