#include "pnm/cubes.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace pnm {

namespace {
std::atomic<int> g_cube_cap{kDefaultCap};
}

int cube_cap() { return g_cube_cap.load(); }
void set_cube_cap(int cap) { g_cube_cap.store(cap); }

void check_cap(int n, int cap) {
    if (n < 0) throw std::out_of_range("n must be nonnegative");
    if (n > cap) throw std::out_of_range("n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

std::string mask_name(int U, int n) {
    std::string s = "[";
    bool first = true;
    for (int k = 1; k <= n; ++k)
        if (U >> (k - 1) & 1) {
            if (!first) s += ",";
            s += std::to_string(k);
            first = false;
        }
    return s + "]";
}

nlohmann::json mask_to_json(int U, int n) {
    auto j = nlohmann::json::array();
    for (int k = 1; k <= n; ++k)
        if (U >> (k - 1) & 1) j.push_back(k);
    return j;
}

PosetPn build_pn(int n, int cap) {
    check_cap(n, cap);
    const int N = 1 << n;
    PosetPn P;
    P.n = n;
    P.mor_table.assign(static_cast<size_t>(N) * N, -1);
    RawTable r;
    for (int U = 0; U < N; ++U) r.objects.push_back(mask_name(U, n));
    r.identities.assign(N, -1);
    for (int U = 0; U < N; ++U)
        for (int V = 0; V < N; ++V) {
            if ((U & V) != U) continue;
            int id = static_cast<int>(r.mors.size());
            P.mor_table[static_cast<size_t>(U) * N + V] = id;
            r.mors.push_back({U, V});
            r.mor_names.push_back(r.objects[U] + "<=" + r.objects[V]);
            if (U == V) r.identities[U] = id;
        }
    for (int U = 0; U < N; ++U)
        for (int V = 0; V < N; ++V) {
            if ((U & V) != U) continue;
            for (int W = 0; W < N; ++W) {
                if ((V & W) != V) continue;
                r.compose.push_back({P.mor(V, W), P.mor(U, V), P.mor(U, W)});
            }
        }
    P.cat = std::make_shared<TableCategory>(TableCategory::from_raw(std::move(r)));
    return P;
}

namespace {
// Λ itself: composition among its five morphisms.
constexpr int kLamDom[5] = {0, 1, 2, 0, 0};
constexpr int kLamCod[5] = {0, 1, 2, 1, 2};
int lam_compose(int g, int f) {
    if (kLamDom[g] != kLamCod[f]) return -1;
    if (g < 3) return f;
    return g;  // f must be id0
}
const char* kLamObj[3] = {"0", "1", "L"};
const char* kLamMor[5] = {"id0", "id1", "idL", "t", "s"};

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}
}  // namespace

int LambdaN::digit(int obj, int k) const { return (obj / ipow(3, n - 1 - k)) % 3; }

int LambdaN::encode(const std::vector<int>& digits) const {
    int c = 0;
    for (int d : digits) c = c * 3 + d;
    return c;
}

int LambdaN::ones() const {
    int c = 0;
    for (int k = 0; k < n; ++k) c = c * 3 + 1;
    return c;
}

LambdaN build_lambda_n(int n, int cap) {
    check_cap(n, cap);
    LambdaN L;
    L.n = n;
    const int NO = ipow(3, n), NM = ipow(5, n);
    RawTable r;
    for (int x = 0; x < NO; ++x) {
        std::string s;
        for (int k = 0; k < n; ++k) s += kLamObj[(x / ipow(3, n - 1 - k)) % 3];
        r.objects.push_back(n == 0 ? "()" : s);
    }
    std::vector<std::vector<int>> md(NM, std::vector<int>(n));
    for (int f = 0; f < NM; ++f) {
        int d = 0, c = 0;
        std::string name;
        for (int k = 0; k < n; ++k) {
            int m = (f / ipow(5, n - 1 - k)) % 5;
            md[f][k] = m;
            d = d * 3 + kLamDom[m];
            c = c * 3 + kLamCod[m];
            name += (k ? "," : "") + std::string(kLamMor[m]);
        }
        r.mors.push_back({d, c});
        r.mor_names.push_back("(" + name + ")");
    }
    for (int x = 0; x < NO; ++x) {
        int f = 0;
        for (int k = 0; k < n; ++k) f = f * 5 + (x / ipow(3, n - 1 - k)) % 3;
        r.identities.push_back(f);
    }
    // composable pairs, componentwise
    std::vector<std::pair<int, int>> lampairs;
    for (int g = 0; g < 5; ++g)
        for (int f = 0; f < 5; ++f)
            if (lam_compose(g, f) >= 0) lampairs.emplace_back(g, f);
    const int P = static_cast<int>(lampairs.size());
    const int total = ipow(P, n);
    for (int c = 0; c < total; ++c) {
        int g = 0, f = 0, h = 0, rest = c;
        std::vector<int> idx(n);
        for (int k = n - 1; k >= 0; --k) {
            idx[k] = rest % P;
            rest /= P;
        }
        for (int k = 0; k < n; ++k) {
            auto [gk, fk] = lampairs[idx[k]];
            g = g * 5 + gk;
            f = f * 5 + fk;
            h = h * 5 + lam_compose(gk, fk);
        }
        r.compose.push_back({g, f, h});
    }
    L.cat = std::make_shared<TableCategory>(TableCategory::from_raw(std::move(r)));
    return L;
}

CatPtr build_interval_power(int n, int cap) {
    check_cap(n, cap);
    // I^n: object id = binary code, first coordinate most significant.
    const int N = 1 << n;
    RawTable r;
    for (int x = 0; x < N; ++x) {
        std::string s;
        for (int k = 0; k < n; ++k) s += ((x >> (n - 1 - k)) & 1) ? '1' : '0';
        r.objects.push_back(n == 0 ? "()" : s);
    }
    std::vector<int> table(static_cast<size_t>(N) * N, -1);
    r.identities.assign(N, -1);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            if ((x & y) != x) continue;
            int id = static_cast<int>(r.mors.size());
            table[static_cast<size_t>(x) * N + y] = id;
            r.mors.push_back({x, y});
            r.mor_names.push_back(r.objects[x] + "->" + r.objects[y]);
            if (x == y) r.identities[x] = id;
        }
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            if ((x & y) != x) continue;
            for (int z = 0; z < N; ++z)
                if ((y & z) == y)
                    r.compose.push_back({table[static_cast<size_t>(y) * N + z], table[static_cast<size_t>(x) * N + y],
                                         table[static_cast<size_t>(x) * N + z]});
        }
    return std::make_shared<TableCategory>(TableCategory::from_raw(std::move(r)));
}

TableFunctor thin_functor(const CatPtr& src, const CatPtr& dst, const std::vector<int>& objmap) {
    TableFunctor F{src, dst, objmap, {}};
    for (int f = 0; f < src->num_morphisms(); ++f) {
        const auto& h = dst->hom(objmap[src->dom(f)], objmap[src->cod(f)]);
        if (h.size() != 1) throw std::invalid_argument("thin_functor: target hom-set is not a singleton");
        F.mor.push_back(h[0]);
    }
    return F;
}

int lambda_diamond(const LambdaN& L, int x, int y) {
    std::vector<int> d(L.n);
    for (int k = 0; k < L.n; ++k) d[k] = diamond_digit(L.digit(x, k), L.digit(y, k));
    return L.encode(d);
}

namespace {
int omega_code(int U, int n) {
    int c = 0;
    for (int k = 1; k <= n; ++k) c = c * 2 + ((U >> (k - 1)) & 1);
    return c;
}
}  // namespace

TableFunctor omega_n(const PosetPn& P, const CatPtr& In) {
    std::vector<int> om;
    for (int U = 0; U <= P.full(); ++U) om.push_back(omega_code(U, P.n));
    return thin_functor(P.cat, In, om);
}

TableFunctor iota_n(const CatPtr& In, const LambdaN& L) {
    std::vector<int> om;
    const int n = L.n;
    for (int x = 0; x < In->num_objects(); ++x) {
        std::vector<int> d(n);
        for (int k = 0; k < n; ++k) d[k] = (x >> (n - 1 - k)) & 1;
        om.push_back(L.encode(d));
    }
    return thin_functor(In, L.cat, om);
}

TableFunctor phi_n(const PosetPn& P, const LambdaN& L) {
    std::vector<int> om;
    for (int U = 0; U <= P.full(); ++U) {
        std::vector<int> d(P.n);
        for (int k = 0; k < P.n; ++k) d[k] = (U >> k) & 1;
        om.push_back(L.encode(d));
    }
    return thin_functor(P.cat, L.cat, om);
}

TableFunctor eta_corner(const LambdaN& L) {
    auto P0 = build_pn(0).cat;
    return thin_functor(P0, L.cat, {L.ones()});
}

TableFunctor diamond_functor(const LambdaN& L, const CatPtr& LxL) {
    const int N = L.cat->num_objects();
    std::vector<int> om;
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) om.push_back(lambda_diamond(L, x, y));
    return thin_functor(LxL, L.cat, om);
}

TableFunctor intersection_functor(const PosetPn& P, const CatPtr& PxP) {
    const int N = P.full() + 1;
    std::vector<int> om;
    for (int U = 0; U < N; ++U)
        for (int V = 0; V < N; ++V) om.push_back(U & V);
    return thin_functor(PxP, P.cat, om);
}

bool is_surjection(const SurjectionMap& s) {
    if (static_cast<int>(s.s.size()) != s.n) return false;
    std::vector<char> hit(s.m, 0);
    for (int x : s.s) {
        if (x < 0 || x >= s.m) return false;
        hit[x] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
}

SurjectionMap compose_surjections(const SurjectionMap& s, const SurjectionMap& t) {
    if (t.m != s.n) throw std::invalid_argument("compose_surjections: arity mismatch");
    SurjectionMap u{t.n, s.m, {}};
    for (int x : t.s) u.s.push_back(s.s[x]);
    return u;
}

SurjectionMap identity_surjection(int n) {
    SurjectionMap s{n, n, {}};
    for (int i = 0; i < n; ++i) s.s.push_back(i);
    return s;
}

int preimage_mask(const SurjectionMap& s, int U) {
    int V = 0;
    for (int i = 0; i < s.n; ++i)
        if (U >> s.s[i] & 1) V |= 1 << i;
    return V;
}

TableFunctor poset_of_surjection(const SurjectionMap& s, const PosetPn& Pm, const PosetPn& Pn) {
    if (!is_surjection(s)) throw std::invalid_argument("poset_of_surjection: map is not surjective");
    if (Pm.n != s.m || Pn.n != s.n) throw std::invalid_argument("poset_of_surjection: arity mismatch");
    std::vector<int> om;
    for (int U = 0; U <= Pm.full(); ++U) om.push_back(preimage_mask(s, U));
    return thin_functor(Pm.cat, Pn.cat, om);
}

}  // namespace pnm
