#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pnm/pnmod.hpp"

namespace pnm {

namespace {

using Rel = std::vector<std::vector<char>>;

CatPtr thin_from_relation(const Rel& le) {
    const int k = static_cast<int>(le.size());
    RawTable t;
    std::vector<std::vector<int>> id(k, std::vector<int>(k, -1));
    for (int i = 0; i < k; ++i) t.objects.push_back("x" + std::to_string(i));
    t.identities.assign(k, -1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (le[i][j]) {
                id[i][j] = static_cast<int>(t.mors.size());
                t.mors.push_back({i, j});
                t.mor_names.push_back("x" + std::to_string(i) + "<=x" + std::to_string(j));
                if (i == j) t.identities[i] = id[i][j];
            }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (le[i][j] && le[j][l]) t.compose.push_back({id[j][l], id[i][j], id[i][l]});
    return std::make_shared<TableCategory>(TableCategory::from_raw(std::move(t)));
}

bool le(const TableCategory& C, int a, int b) { return !C.hom(a, b).empty(); }

void require_thin(const TableCategory& C) {
    for (int a = 0; a < C.num_objects(); ++a)
        for (int b = 0; b < C.num_objects(); ++b)
            if (C.hom(a, b).size() > 1) throw std::invalid_argument("thin category required");
}

// All maps {0..k-1} -> {0..k-1} with f(a) ≤ a.
std::vector<std::vector<int>> deflationary_maps(const TableCategory& C) {
    const int k = C.num_objects();
    std::vector<std::vector<int>> out;
    std::vector<int> f(k, 0);
    std::function<void(int)> rec = [&](int a) {
        if (a == k) {
            out.push_back(f);
            return;
        }
        for (int b = 0; b < k; ++b)
            if (le(C, b, a)) {
                f[a] = b;
                rec(a + 1);
            }
    };
    rec(0);
    return out;
}

}  // namespace

std::vector<CatPtr> posets_up_to_iso(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<char>> seen;
    std::vector<CatPtr> out;
    std::vector<int> perm(k);
    for (long bits = 0; bits < (1L << pairs.size()); ++bits) {
        Rel r(k, std::vector<char>(k, 0));
        for (int i = 0; i < k; ++i) r[i][i] = 1;
        for (size_t t = 0; t < pairs.size(); ++t)
            if (bits >> t & 1) r[pairs[t].first][pairs[t].second] = 1;
        bool transitive = true;
        for (int i = 0; i < k && transitive; ++i)
            for (int m = 0; m < k && transitive; ++m)
                for (int j = 0; j < k && transitive; ++j)
                    if (r[i][m] && r[m][j] && !r[i][j]) transitive = false;
        if (!transitive) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<char> canon;
        do {
            std::vector<char> c;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) c.push_back(r[perm[i]][perm[j]]);
            if (canon.empty() || c < canon) canon = c;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
        seen.push_back(canon);
        out.push_back(thin_from_relation(r));
    }
    return out;
}

PnModule thin_module(const CatPtr& C, int n, const std::vector<std::vector<int>>& table) {
    require_thin(*C);
    auto B = table_base(C);
    PnModule M;
    M.A = B;
    M.n = n;
    M.name = "table";
    M.obj = [B, table](const AObj& a, int U) { return B->obj(table[U][a.c[0]]); };
    M.mor = [B, C, table](const AMor& f, int U, int V) {
        if ((U & V) != U) throw std::invalid_argument("module action: U is not contained in V");
        auto h = C->hom(table[U][f.dom.c[0]], table[V][f.cod.c[0]]);
        if (h.empty()) throw std::invalid_argument("module action: no morphism between the images");
        return B->mor(h[0]);
    };
    return M;
}

std::vector<PnModule> enumerate_thin_modules(const CatPtr& C, int n) {
    require_thin(*C);
    const int k = C->num_objects();
    std::vector<int> idm(k);
    std::iota(idm.begin(), idm.end(), 0);
    std::vector<PnModule> out;
    if (n == 0) {
        out.push_back(thin_module(C, 0, {idm}));
        return out;
    }
    if (n > 2) throw std::invalid_argument("enumerate_thin_modules: n must be at most 2");
    // θ(-, U) for |U| = n-1 ranges over candidates; the rest follows from associativity.
    std::vector<std::vector<int>> ones;
    for (auto& f : deflationary_maps(*C)) {
        PnModule M = thin_module(C, 1, {f, idm});
        if (validate_module(M).empty()) ones.push_back(f);
    }
    if (n == 1) {
        for (auto& f : ones) out.push_back(thin_module(C, 1, {f, idm}));
        return out;
    }
    for (auto& k1 : ones)      // θ(-, {2}): drops coordinate 1
        for (auto& k2 : ones) {  // θ(-, {1})
            std::vector<int> bottom(k);
            for (int a = 0; a < k; ++a) bottom[a] = k1[k2[a]];
            PnModule M = thin_module(C, 2, {bottom, k2, k1, idm});
            if (validate_module(M).empty()) out.push_back(M);
        }
    return out;
}

std::vector<TableComonad> enumerate_table_comonads(const CatPtr& C) {
    require_thin(*C);
    std::vector<TableComonad> out;
    for (auto& f : deflationary_maps(*C)) {
        TableComonad K;
        try {
            K.K = thin_functor(C, C, f);
        } catch (const std::exception&) {
            continue;  // not monotone
        }
        std::vector<int> comp;
        for (int a = 0; a < C->num_objects(); ++a) comp.push_back(C->hom(f[a], a)[0]);
        K.eps = TableNat{K.K, identity_functor(C), comp};
        if (validate_table_comonad(K).empty()) out.push_back(K);
    }
    return out;
}

std::vector<CoreflectivePair> enumerate_coreflectives(const CatPtr& C) {
    require_thin(*C);
    const int k = C->num_objects();
    std::vector<CoreflectivePair> out;
    for (int S = 1; S < (1 << k); ++S) {
        CoreflectivePair P;
        P.A = C;
        for (int a = 0; a < k; ++a)
            if (S >> a & 1) P.objects.push_back(a);
        P.sub = full_subcategory(C, P.objects, &P.incl);
        // the coreflection of a is the greatest element of S below a, if any
        std::vector<int> R(k, -1);
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            for (size_t i = 0; i < P.objects.size(); ++i) {
                int s = P.objects[i];
                if (!le(*C, s, a)) continue;
                bool greatest = true;
                for (int t : P.objects)
                    if (le(*C, t, a) && !le(*C, t, s)) greatest = false;
                if (greatest) R[a] = static_cast<int>(i);
            }
            ok = R[a] >= 0;
        }
        if (!ok) continue;
        try {
            P.R = thin_functor(C, P.sub, R);
        } catch (const std::exception&) {
            continue;
        }
        std::vector<int> comp;
        for (int a = 0; a < k; ++a) comp.push_back(C->hom(P.objects[R[a]], a)[0]);
        P.counit = TableNat{compose_functors(P.incl, P.R), identity_functor(C), comp};
        if (validate_coreflective(P).empty()) out.push_back(P);
    }
    return out;
}

}  // namespace pnm
