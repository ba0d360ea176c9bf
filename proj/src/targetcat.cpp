#include "pnm/targetcat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pnm {

Mor ComputableCategory::product_map(const std::vector<Mor>& fs) const {
    std::vector<Obj> doms, cods;
    for (const auto& f : fs) {
        doms.push_back({f.dom});
        cods.push_back({f.cod});
    }
    Obj src = product(doms);
    std::vector<Mor> legs;
    for (size_t i = 0; i < fs.size(); ++i) legs.push_back(compose(fs[i], projection(doms, static_cast<int>(i))));
    return tuple(src, cods, legs);
}

Mor ComputableCategory::compose_all(const std::vector<Mor>& fs) const {
    if (fs.empty()) throw std::invalid_argument("compose_all: empty chain");
    Mor r = fs.back();
    for (size_t k = fs.size() - 1; k-- > 0;) r = compose(fs[k], r);
    return r;
}

// ---------------------------------------------------------------- vector spaces

bool FinVectGF::valid_morphism(const Mor& f) const {
    if (f.dom < 0 || f.cod < 0 || f.v.size() != static_cast<size_t>(f.dom) * f.cod) return false;
    return std::all_of(f.v.begin(), f.v.end(), [&](int x) { return x >= 0 && x < F_.p(); });
}

Mor FinVectGF::compose(const Mor& g, const Mor& f) const {
    if (g.dom != f.cod) throw std::invalid_argument("compose: dimension mismatch");
    return to_mor(F_.mul(to_mat(g), to_mat(f)));
}

bool FinVectGF::is_isomorphism(const Mor& f) const { return f.dom == f.cod && F_.rank(to_mat(f)) == f.dom; }

std::optional<Mor> FinVectGF::inverse(const Mor& f) const {
    auto m = F_.inverse(to_mat(f));
    if (!m) return std::nullopt;
    return to_mor(*m);
}

namespace {
std::vector<int> offsets_of(const std::vector<Obj>& objs, int& total) {
    std::vector<int> off(objs.size());
    total = 0;
    for (size_t i = 0; i < objs.size(); ++i) {
        off[i] = total;
        total += objs[i].n;
    }
    return off;
}

void check_cone(const ComputableCategory& M, const Diagram& D, const std::vector<Mor>& c, const Obj& X) {
    const auto& I = *D.index;
    if (static_cast<int>(c.size()) != I.num_objects()) throw ConeError(-1, "cone has wrong number of legs");
    for (int i = 0; i < I.num_objects(); ++i)
        if (c[i].dom != X.n || c[i].cod != D.obj[i].n) throw ConeError(I.identity(i), "cone leg has wrong shape");
    for (int f : I.generators())
        if (!(M.compose(D.mor[f], c[I.dom(f)]) == c[I.cod(f)]))
            throw ConeError(f, "competing cone does not commute at " + I.morphism_name(f));
}

void check_cocone(const ComputableCategory& M, const Diagram& D, const std::vector<Mor>& c, const Obj& X) {
    const auto& I = *D.index;
    if (static_cast<int>(c.size()) != I.num_objects()) throw ConeError(-1, "cocone has wrong number of legs");
    for (int i = 0; i < I.num_objects(); ++i)
        if (c[i].cod != X.n || c[i].dom != D.obj[i].n) throw ConeError(I.identity(i), "cocone leg has wrong shape");
    for (int f : I.generators())
        if (!(M.compose(c[I.cod(f)], D.mor[f]) == c[I.dom(f)]))
            throw ConeError(f, "competing cocone does not commute at " + I.morphism_name(f));
}
}  // namespace

LimitCone FinVectGF::limit(const Diagram& D) const {
    const auto& I = *D.index;
    int W = 0;
    auto off = offsets_of(D.obj, W);
    int nrows = 0;
    for (int f : I.generators()) nrows += D.obj[I.cod(f)].n;
    Mat C(nrows, W);
    int r0 = 0;
    for (int f : I.generators()) {
        int i = I.dom(f), j = I.cod(f);
        const Mor& m = D.mor[f];
        for (int r = 0; r < D.obj[j].n; ++r) {
            C.at(r0 + r, off[j] + r) = F_.add(C.at(r0 + r, off[j] + r), 1);
            for (int k = 0; k < D.obj[i].n; ++k)
                C.at(r0 + r, off[i] + k) = F_.sub(C.at(r0 + r, off[i] + k), m.v[static_cast<size_t>(r) * m.dom + k]);
        }
        r0 += D.obj[j].n;
    }
    auto K = F_.kernel(C);
    const int k = K.basis.cols;
    LimitCone out;
    out.apex = {k};
    for (int i = 0; i < I.num_objects(); ++i) {
        Mat leg(D.obj[i].n, k);
        for (int r = 0; r < D.obj[i].n; ++r)
            for (int t = 0; t < k; ++t) leg.at(r, t) = K.basis.at(off[i] + r, t);
        out.legs.push_back(to_mor(leg));
    }
    // owner of each ambient coordinate
    std::vector<std::pair<int, int>> owner(W);
    for (int i = 0; i < I.num_objects(); ++i)
        for (int r = 0; r < D.obj[i].n; ++r) owner[off[i] + r] = {i, r};
    auto piv = K.pivots;
    auto self = this;
    auto Dc = D;
    out.mediate = [self, Dc, owner, piv, k](const std::vector<Mor>& c, const Obj& X) -> Mor {
        if (c.size() != Dc.obj.size()) throw ConeError(-1, "cone has wrong number of legs");
        check_cone(*self, Dc, c, X);
        Mor m{X.n, k, std::vector<int>(static_cast<size_t>(k) * X.n, 0)};
        for (int t = 0; t < k; ++t) {
            auto [i, r] = owner[piv[t]];
            for (int x = 0; x < X.n; ++x) m.v[static_cast<size_t>(t) * X.n + x] = c[i].v[static_cast<size_t>(r) * X.n + x];
        }
        return m;
    };
    return out;
}

ColimitCocone FinVectGF::colimit(const Diagram& D) const {
    const auto& I = *D.index;
    int W = 0;
    auto off = offsets_of(D.obj, W);
    Echelon E(F_.p(), W);
    for (int f : I.generators()) {
        int i = I.dom(f), j = I.cod(f);
        const Mor& m = D.mor[f];
        for (int k = 0; k < D.obj[i].n; ++k) {
            std::vector<int> v(W, 0);
            v[off[i] + k] = 1;
            for (int r = 0; r < D.obj[j].n; ++r)
                v[off[j] + r] = F_.sub(v[off[j] + r], m.v[static_cast<size_t>(r) * m.dom + k]);
            E.insert(std::move(v));
        }
    }
    auto q = E.non_pivots();
    const int k = static_cast<int>(q.size());
    std::vector<int> qpos(W, -1);
    for (int t = 0; t < k; ++t) qpos[q[t]] = t;
    ColimitCocone out;
    out.apex = {k};
    for (int i = 0; i < I.num_objects(); ++i) {
        Mat leg(k, D.obj[i].n);
        for (int c = 0; c < D.obj[i].n; ++c) {
            std::vector<int> v(W, 0);
            v[off[i] + c] = 1;
            E.reduce(v);
            for (int t = 0; t < k; ++t) leg.at(t, c) = v[q[t]];
        }
        out.legs.push_back(to_mor(leg));
    }
    std::vector<std::pair<int, int>> section(k);
    for (int i = 0; i < I.num_objects(); ++i)
        for (int c = 0; c < D.obj[i].n; ++c)
            if (qpos[off[i] + c] >= 0) section[qpos[off[i] + c]] = {i, c};
    auto self = this;
    auto Dc = D;
    out.mediate = [self, Dc, section, k](const std::vector<Mor>& c, const Obj& X) -> Mor {
        if (c.size() != Dc.obj.size()) throw ConeError(-1, "cocone has wrong number of legs");
        check_cocone(*self, Dc, c, X);
        Mor m{k, X.n, std::vector<int>(static_cast<size_t>(k) * X.n, 0)};
        for (int t = 0; t < k; ++t) {
            auto [i, col] = section[t];
            for (int x = 0; x < X.n; ++x) m.v[static_cast<size_t>(x) * k + t] = c[i].v[static_cast<size_t>(x) * c[i].dom + col];
        }
        return m;
    };
    return out;
}

Obj FinVectGF::product(const std::vector<Obj>& xs) const {
    int s = 0;
    for (auto x : xs) s += x.n;
    return {s};
}

Mor FinVectGF::projection(const std::vector<Obj>& xs, int i) const {
    int W = 0;
    auto off = offsets_of(xs, W);
    Mat P(xs[i].n, W);
    for (int r = 0; r < xs[i].n; ++r) P.at(r, off[i] + r) = 1;
    return to_mor(P);
}

Mor FinVectGF::tuple(const Obj& src, const std::vector<Obj>& xs, const std::vector<Mor>& fs) const {
    int W = 0;
    auto off = offsets_of(xs, W);
    Mat T(W, src.n);
    for (size_t i = 0; i < xs.size(); ++i) {
        if (fs[i].dom != src.n || fs[i].cod != xs[i].n) throw std::invalid_argument("tuple: leg shape");
        for (int r = 0; r < xs[i].n; ++r)
            for (int c = 0; c < src.n; ++c) T.at(off[i] + r, c) = fs[i].v[static_cast<size_t>(r) * src.n + c];
    }
    return to_mor(T);
}

std::optional<Mor> FinVectGF::factor_through_cone(const Obj& apex, const std::vector<Mor>& legs,
                                                  const std::vector<Mor>& targets, const Obj& X, bool reverse) const {
    int rows = 0;
    for (const auto& l : legs) rows += l.cod;
    Mat L(rows, apex.n), T(rows, X.n);
    int r0 = 0;
    for (size_t i = 0; i < legs.size(); ++i) {
        for (int r = 0; r < legs[i].cod; ++r) {
            for (int c = 0; c < apex.n; ++c) L.at(r0 + r, c) = legs[i].v[static_cast<size_t>(r) * apex.n + c];
            for (int c = 0; c < X.n; ++c) T.at(r0 + r, c) = targets[i].v[static_cast<size_t>(r) * X.n + c];
        }
        r0 += legs[i].cod;
    }
    auto m = F_.solve(L, T, reverse);
    if (!m) return std::nullopt;
    return to_mor(*m);
}

std::optional<Mor> FinVectGF::factor_through_cocone(const Obj& apex, const std::vector<Mor>& legs,
                                                    const std::vector<Mor>& targets, const Obj& X,
                                                    bool reverse) const {
    std::vector<Mor> tl, tt;
    for (const auto& l : legs) tl.push_back(to_mor(F_.transpose(to_mat(l))));
    for (const auto& t : targets) tt.push_back(to_mor(F_.transpose(to_mat(t))));
    auto m = factor_through_cone(apex, tl, tt, X, reverse);
    if (!m) return std::nullopt;
    return to_mor(F_.transpose(to_mat(*m)));
}

Mor FinVectGF::random_morphism(Rng& r, const Obj& a, const Obj& b) const {
    Mor f{a.n, b.n, std::vector<int>(static_cast<size_t>(a.n) * b.n)};
    for (auto& x : f.v) x = r.uniform(0, F_.p() - 1);
    return f;
}

Mor FinVectGF::random_iso(Rng& r, const Obj& a) const {
    for (;;) {
        Mor f = random_morphism(r, a, a);
        if (is_isomorphism(f)) return f;
    }
}

std::vector<Obj> FinVectGF::objects_up_to(int max_size) const {
    std::vector<Obj> out;
    for (int d = 0; d <= max_size; ++d) out.push_back({d});
    return out;
}

// ---------------------------------------------------------------- pointed sets

bool FinSetPointed::valid_morphism(const Mor& f) const {
    if (f.dom < 1 || f.cod < 1 || static_cast<int>(f.v.size()) != f.dom || f.v[0] != 0) return false;
    return std::all_of(f.v.begin(), f.v.end(), [&](int x) { return x >= 0 && x < f.cod; });
}

Mor FinSetPointed::identity(const Obj& a) const {
    Mor f{a.n, a.n, std::vector<int>(a.n)};
    std::iota(f.v.begin(), f.v.end(), 0);
    return f;
}

Mor FinSetPointed::compose(const Mor& g, const Mor& f) const {
    if (g.dom != f.cod) throw std::invalid_argument("compose: cardinality mismatch");
    Mor h{f.dom, g.cod, std::vector<int>(f.dom)};
    for (int x = 0; x < f.dom; ++x) h.v[x] = g.v[f.v[x]];
    return h;
}

bool FinSetPointed::is_isomorphism(const Mor& f) const { return inverse(f).has_value(); }

std::optional<Mor> FinSetPointed::inverse(const Mor& f) const {
    if (f.dom != f.cod) return std::nullopt;
    Mor g{f.cod, f.dom, std::vector<int>(f.dom, -1)};
    for (int x = 0; x < f.dom; ++x) {
        if (g.v[f.v[x]] != -1) return std::nullopt;
        g.v[f.v[x]] = x;
    }
    return g;
}

LimitCone FinSetPointed::limit(const Diagram& D) const {
    const auto& I = *D.index;
    const int N = I.num_objects();
    std::vector<std::vector<int>> checks(N);
    for (int f : I.generators()) checks[std::max(I.dom(f), I.cod(f))].push_back(f);
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(N, 0);
    auto consistent = [&](int k) {
        for (int f : checks[k])
            if (D.mor[f].v[cur[I.dom(f)]] != cur[I.cod(f)]) return false;
        return true;
    };
    std::function<void(int)> rec = [&](int k) {
        if (k == N) {
            tuples.push_back(cur);
            return;
        }
        for (int x = 0; x < D.obj[k].n; ++x) {
            cur[k] = x;
            if (consistent(k)) rec(k + 1);
        }
    };
    rec(0);
    const int T = static_cast<int>(tuples.size());
    LimitCone out;
    out.apex = {T};
    for (int i = 0; i < N; ++i) {
        Mor leg{T, D.obj[i].n, std::vector<int>(T)};
        for (int e = 0; e < T; ++e) leg.v[e] = tuples[e][i];
        out.legs.push_back(std::move(leg));
    }
    std::map<std::vector<int>, int> index;
    for (int e = 0; e < T; ++e) index[tuples[e]] = e;
    auto self = this;
    auto Dc = D;
    out.mediate = [self, Dc, index, T, N](const std::vector<Mor>& c, const Obj& X) -> Mor {
        if (static_cast<int>(c.size()) != N) throw ConeError(-1, "cone has wrong number of legs");
        check_cone(*self, Dc, c, X);
        Mor m{X.n, T, std::vector<int>(X.n)};
        std::vector<int> key(N);
        for (int x = 0; x < X.n; ++x) {
            for (int i = 0; i < N; ++i) key[i] = c[i].v[x];
            m.v[x] = index.at(key);
        }
        return m;
    };
    return out;
}

ColimitCocone FinSetPointed::colimit(const Diagram& D) const {
    const auto& I = *D.index;
    const int N = I.num_objects();
    std::vector<int> base(N);
    int total = 1;
    for (int i = 0; i < N; ++i) {
        base[i] = total;
        total += D.obj[i].n - 1;
    }
    auto gid = [&](int i, int x) { return x == 0 ? 0 : base[i] + x - 1; };
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int f : I.generators()) {
        int i = I.dom(f), j = I.cod(f);
        for (int x = 1; x < D.obj[i].n; ++x) {
            int a = find(gid(i, x)), b = find(gid(j, D.mor[f].v[x]));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<int> cls(total, -1);
    std::vector<std::pair<int, int>> section;  // representative (object, element); (-1, 0) for the basepoint
    cls[0] = 0;
    section.push_back({-1, 0});
    for (int i = 0; i < N; ++i)
        for (int x = 1; x < D.obj[i].n; ++x) {
            int g = gid(i, x);
            if (find(g) == g) {
                cls[g] = static_cast<int>(section.size());
                section.push_back({i, x});
            }
        }
    const int K = static_cast<int>(section.size());
    ColimitCocone out;
    out.apex = {K};
    for (int i = 0; i < N; ++i) {
        Mor leg{D.obj[i].n, K, std::vector<int>(D.obj[i].n)};
        for (int x = 0; x < D.obj[i].n; ++x) leg.v[x] = cls[find(gid(i, x))];
        out.legs.push_back(std::move(leg));
    }
    auto self = this;
    auto Dc = D;
    out.mediate = [self, Dc, section, K, N](const std::vector<Mor>& c, const Obj& X) -> Mor {
        if (static_cast<int>(c.size()) != N) throw ConeError(-1, "cocone has wrong number of legs");
        check_cocone(*self, Dc, c, X);
        Mor m{K, X.n, std::vector<int>(K, 0)};
        for (int t = 1; t < K; ++t) m.v[t] = c[section[t].first].v[section[t].second];
        return m;
    };
    return out;
}

Obj FinSetPointed::product(const std::vector<Obj>& xs) const {
    int s = 1;
    for (auto x : xs) s *= x.n;
    return {s};
}

Mor FinSetPointed::projection(const std::vector<Obj>& xs, int i) const {
    Obj P = product(xs);
    int stride = 1;
    for (size_t k = i + 1; k < xs.size(); ++k) stride *= xs[k].n;
    Mor f{P.n, xs[i].n, std::vector<int>(P.n)};
    for (int c = 0; c < P.n; ++c) f.v[c] = (c / stride) % xs[i].n;
    return f;
}

Mor FinSetPointed::tuple(const Obj& src, const std::vector<Obj>& xs, const std::vector<Mor>& fs) const {
    Obj P = product(xs);
    Mor f{src.n, P.n, std::vector<int>(src.n)};
    for (int x = 0; x < src.n; ++x) {
        int c = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (fs[i].dom != src.n || fs[i].cod != xs[i].n) throw std::invalid_argument("tuple: leg shape");
            c = c * xs[i].n + fs[i].v[x];
        }
        f.v[x] = c;
    }
    return f;
}

Mor FinSetPointed::square_mor(const Mor& f) const {
    Obj A = square_obj({f.dom}), B = square_obj({f.cod});
    Mor g{A.n, B.n, std::vector<int>(A.n, 0)};
    for (int a = 1; a < f.dom; ++a)
        for (int b = 1; b < f.dom; ++b) {
            int fa = f.v[a], fb = f.v[b];
            int src = 1 + (a - 1) * (f.dom - 1) + (b - 1);
            g.v[src] = (fa == 0 || fb == 0) ? 0 : 1 + (fa - 1) * (f.cod - 1) + (fb - 1);
        }
    return g;
}

std::optional<Mor> FinSetPointed::factor_through_cone(const Obj& apex, const std::vector<Mor>& legs,
                                                      const std::vector<Mor>& targets, const Obj& X,
                                                      bool reverse) const {
    Mor m{X.n, apex.n, std::vector<int>(X.n)};
    for (int x = 0; x < X.n; ++x) {
        int found = -1;
        for (int s = 0; s < apex.n; ++s) {
            int e = reverse ? apex.n - 1 - s : s;
            bool ok = true;
            for (size_t i = 0; i < legs.size() && ok; ++i) ok = legs[i].v[e] == targets[i].v[x];
            if (ok) { found = e; break; }
        }
        if (found < 0) return std::nullopt;
        m.v[x] = found;
    }
    return m;
}

std::optional<Mor> FinSetPointed::factor_through_cocone(const Obj& apex, const std::vector<Mor>& legs,
                                                        const std::vector<Mor>& targets, const Obj& X,
                                                        bool reverse) const {
    Mor m{apex.n, X.n, std::vector<int>(apex.n, -1)};
    m.v[0] = 0;
    for (size_t i = 0; i < legs.size(); ++i)
        for (int x = 0; x < legs[i].dom; ++x) {
            int e = legs[i].v[x], y = targets[i].v[x];
            if (m.v[e] == -1) m.v[e] = y;
            else if (m.v[e] != y) return std::nullopt;
        }
    for (auto& y : m.v)
        if (y == -1) y = reverse ? X.n - 1 : 0;
    return m;
}

Mor FinSetPointed::random_morphism(Rng& r, const Obj& a, const Obj& b) const {
    Mor f{a.n, b.n, std::vector<int>(a.n, 0)};
    for (int x = 1; x < a.n; ++x) f.v[x] = r.uniform(0, b.n - 1);
    return f;
}

Mor FinSetPointed::random_iso(Rng& r, const Obj& a) const {
    Mor f = identity(a);
    for (int x = a.n - 1; x >= 2; --x) std::swap(f.v[x], f.v[r.uniform(1, x)]);
    return f;
}

std::vector<Obj> FinSetPointed::objects_up_to(int max_size) const {
    std::vector<Obj> out;
    for (int d = 0; d <= max_size; ++d) out.push_back({d + 1});
    return out;
}

// ---------------------------------------------------------------- diagrams

std::vector<std::string> validate_diagram(const ComputableCategory& M, const Diagram& D) {
    std::vector<std::string> rep;
    const auto& I = *D.index;
    if (static_cast<int>(D.obj.size()) != I.num_objects() || static_cast<int>(D.mor.size()) != I.num_morphisms())
        return {"diagram tables have wrong size"};
    for (int i = 0; i < I.num_objects(); ++i)
        if (!M.valid_object(D.obj[i])) rep.push_back("invalid object at " + I.object_name(i));
    for (int f = 0; f < I.num_morphisms(); ++f)
        if (!M.valid_morphism(D.mor[f]) || D.mor[f].dom != D.obj[I.dom(f)].n || D.mor[f].cod != D.obj[I.cod(f)].n)
            rep.push_back("invalid morphism at " + I.morphism_name(f));
    if (!rep.empty()) return rep;
    for (int i = 0; i < I.num_objects(); ++i)
        if (!(D.mor[I.identity(i)] == M.identity(D.obj[i]))) rep.push_back("identity not preserved at " + I.object_name(i));
    for (int f = 0; f < I.num_morphisms(); ++f)
        for (int g : I.out(I.cod(f))) {
            int h = I.compose(g, f);
            if (h >= 0 && !(D.mor[h] == M.compose(D.mor[g], D.mor[f])))
                rep.push_back("composition not preserved at " + I.morphism_name(g) + " o " + I.morphism_name(f));
        }
    return rep;
}

std::vector<std::string> validate_diagram_map(const ComputableCategory& M, const Diagram& D, const Diagram& E,
                                              const DiagramMap& a) {
    std::vector<std::string> rep;
    const auto& I = *D.index;
    if (static_cast<int>(a.comp.size()) != I.num_objects()) return {"map has wrong number of components"};
    for (int i = 0; i < I.num_objects(); ++i)
        if (a.comp[i].dom != D.obj[i].n || a.comp[i].cod != E.obj[i].n || !M.valid_morphism(a.comp[i]))
            rep.push_back("bad component at " + I.object_name(i));
    if (!rep.empty()) return rep;
    for (int f = 0; f < I.num_morphisms(); ++f)
        if (!(M.compose(E.mor[f], a.comp[I.dom(f)]) == M.compose(a.comp[I.cod(f)], D.mor[f])))
            rep.push_back("naturality fails at " + I.morphism_name(f));
    return rep;
}

Diagram constant_diagram(const ComputableCategory& M, const CatPtr& index, const Obj& x) {
    return Diagram{index, std::vector<Obj>(index->num_objects(), x),
                   std::vector<Mor>(index->num_morphisms(), M.identity(x))};
}

Diagram precompose(const Diagram& D, const TableFunctor& F) {
    Diagram E{F.src, {}, {}};
    for (int x : F.obj) E.obj.push_back(D.obj[x]);
    for (int x : F.mor) E.mor.push_back(D.mor[x]);
    return E;
}

DiagramMap identity_map(const ComputableCategory& M, const Diagram& D) {
    DiagramMap a;
    for (const auto& x : D.obj) a.comp.push_back(M.identity(x));
    return a;
}

DiagramMap compose_maps(const ComputableCategory& M, const DiagramMap& b, const DiagramMap& a) {
    DiagramMap c;
    for (size_t i = 0; i < a.comp.size(); ++i) c.comp.push_back(M.compose(b.comp[i], a.comp[i]));
    return c;
}

namespace {

// Quotient of a vector-space diagram by the subdiagram generated by the seeds.
std::pair<Diagram, DiagramMap> vect_quotient(const FinVectGF& V, const Diagram& D,
                                            const std::vector<std::pair<int, std::vector<int>>>& seeds) {
    const auto& I = *D.index;
    const auto& F = V.field();
    std::vector<Echelon> S;
    for (int i = 0; i < I.num_objects(); ++i) S.emplace_back(F.p(), D.obj[i].n);
    for (const auto& [i, v] : seeds)
        for (int f : I.out(i)) {
            const Mor& m = D.mor[f];
            std::vector<int> w(m.cod, 0);
            for (int r = 0; r < m.cod; ++r)
                for (int c = 0; c < m.dom; ++c) w[r] = F.add(w[r], F.mul(m.v[static_cast<size_t>(r) * m.dom + c], v[c]));
            S[I.cod(f)].insert(std::move(w));
        }
    Diagram E{D.index, {}, {}};
    DiagramMap q;
    std::vector<std::vector<int>> np(I.num_objects());
    for (int i = 0; i < I.num_objects(); ++i) {
        np[i] = S[i].non_pivots();
        int k = static_cast<int>(np[i].size());
        E.obj.push_back({k});
        Mat Q(k, D.obj[i].n);
        for (int c = 0; c < D.obj[i].n; ++c) {
            std::vector<int> e(D.obj[i].n, 0);
            e[c] = 1;
            S[i].reduce(e);
            for (int t = 0; t < k; ++t) Q.at(t, c) = e[np[i][t]];
        }
        q.comp.push_back(FinVectGF::to_mor(Q));
    }
    for (int f = 0; f < I.num_morphisms(); ++f) {
        int i = I.dom(f), j = I.cod(f);
        Mat Sec(D.obj[i].n, E.obj[i].n);
        for (int t = 0; t < E.obj[i].n; ++t) Sec.at(np[i][t], t) = 1;
        E.mor.push_back(V.compose(q.comp[j], V.compose(D.mor[f], FinVectGF::to_mor(Sec))));
    }
    return {E, q};
}

std::pair<Diagram, DiagramMap> pointed_quotient(const FinSetPointed& P, const Diagram& D,
                                               const std::vector<std::tuple<int, int, int>>& pairs) {
    const auto& I = *D.index;
    const int N = I.num_objects();
    std::vector<std::vector<int>> parent(N);
    for (int i = 0; i < N; ++i) {
        parent[i].resize(D.obj[i].n);
        std::iota(parent[i].begin(), parent[i].end(), 0);
    }
    auto find = [&](int i, int x) {
        while (parent[i][x] != x) x = parent[i][x] = parent[i][parent[i][x]];
        return x;
    };
    std::vector<std::tuple<int, int, int>> work(pairs.begin(), pairs.end());
    while (!work.empty()) {
        auto [i, x, y] = work.back();
        work.pop_back();
        int a = find(i, x), b = find(i, y);
        if (a == b) continue;
        parent[i][std::max(a, b)] = std::min(a, b);
        for (int f : I.out(i))
            if (!I.is_identity(f)) work.emplace_back(I.cod(f), D.mor[f].v[x], D.mor[f].v[y]);
    }
    Diagram E{D.index, {}, {}};
    DiagramMap q;
    for (int i = 0; i < N; ++i) {
        std::vector<int> cls(D.obj[i].n, -1);
        int k = 0;
        for (int x = 0; x < D.obj[i].n; ++x)
            if (find(i, x) == x) cls[x] = k++;
        Mor m{D.obj[i].n, k, std::vector<int>(D.obj[i].n)};
        for (int x = 0; x < D.obj[i].n; ++x) m.v[x] = cls[find(i, x)];
        E.obj.push_back({k});
        q.comp.push_back(std::move(m));
    }
    for (int f = 0; f < I.num_morphisms(); ++f) {
        int i = I.dom(f), j = I.cod(f);
        Mor m{E.obj[i].n, E.obj[j].n, std::vector<int>(E.obj[i].n)};
        for (int x = 0; x < D.obj[i].n; ++x) m.v[q.comp[i].v[x]] = q.comp[j].v[D.mor[f].v[x]];
        E.mor.push_back(std::move(m));
    }
    (void)P;
    return {E, q};
}

std::pair<Diagram, DiagramMap> conjugate(const ComputableCategory& M, const Diagram& D, Rng& r) {
    const auto& I = *D.index;
    DiagramMap b;
    std::vector<Mor> binv;
    for (int i = 0; i < I.num_objects(); ++i) {
        b.comp.push_back(M.random_iso(r, D.obj[i]));
        binv.push_back(*M.inverse(b.comp.back()));
    }
    Diagram E{D.index, D.obj, {}};
    for (int f = 0; f < I.num_morphisms(); ++f)
        E.mor.push_back(M.compose(b.comp[I.cod(f)], M.compose(D.mor[f], binv[I.dom(f)])));
    return {E, b};
}

// Sum (vector spaces) or wedge (pointed sets) of representables at the given objects.
Diagram free_diagram(const ComputableCategory& M, const CatPtr& index, const std::vector<int>& at) {
    const auto& I = *index;
    const int N = I.num_objects();
    const int shift = M.pointed() ? 1 : 0;
    // basis of D(j): pairs (t, f) with f in Hom(at[t], j)
    std::vector<std::vector<std::pair<int, int>>> basis(N);
    std::vector<std::map<std::pair<int, int>, int>> pos(N);
    for (int j = 0; j < N; ++j)
        for (size_t t = 0; t < at.size(); ++t)
            for (int f : I.hom(at[t], j)) {
                pos[j][{static_cast<int>(t), f}] = static_cast<int>(basis[j].size());
                basis[j].push_back({static_cast<int>(t), f});
            }
    Diagram D{index, {}, {}};
    for (int j = 0; j < N; ++j) D.obj.push_back({static_cast<int>(basis[j].size()) + shift});
    for (int g = 0; g < I.num_morphisms(); ++g) {
        int i = I.dom(g), j = I.cod(g);
        Mor m = M.zero_morphism(D.obj[i], D.obj[j]);
        for (size_t b = 0; b < basis[i].size(); ++b) {
            auto [t, f] = basis[i][b];
            int c = pos[j].at({t, I.compose(g, f)});
            if (M.pointed()) m.v[b + 1] = c + 1;
            else m.v[static_cast<size_t>(c) * m.dom + b] = 1;
        }
        D.mor.push_back(std::move(m));
    }
    return D;
}

}  // namespace

Diagram random_thin_diagram(const ComputableCategory& M, const CatPtr& index, Rng& r, int max_size) {
    const auto& I = *index;
    const int N = I.num_objects();
    for (;;) {
        std::vector<int> at;
        int gens = N == 0 ? 0 : r.uniform(0, max_size + 1);
        for (int t = 0; t < gens; ++t) at.push_back(r.uniform(0, N - 1));
        Diagram D = free_diagram(M, index, at);
        int rel = N == 0 ? 0 : r.uniform(0, 2 * gens);
        if (M.pointed()) {
            std::vector<std::tuple<int, int, int>> pairs;
            for (int k = 0; k < rel; ++k) {
                int i = r.uniform(0, N - 1);
                pairs.emplace_back(i, r.uniform(0, D.obj[i].n - 1), r.uniform(0, D.obj[i].n - 1));
            }
            D = pointed_quotient(static_cast<const FinSetPointed&>(M), D, pairs).first;
        } else {
            const auto& V = static_cast<const FinVectGF&>(M);
            std::vector<std::pair<int, std::vector<int>>> seeds;
            for (int k = 0; k < rel; ++k) {
                int i = r.uniform(0, N - 1);
                std::vector<int> v(D.obj[i].n);
                for (auto& x : v) x = r.uniform(0, V.field().p() - 1);
                seeds.emplace_back(i, std::move(v));
            }
            D = vect_quotient(V, D, seeds).first;
        }
        bool ok = true;
        for (const auto& x : D.obj) ok = ok && M.size_of(x) <= max_size;
        if (!ok) continue;
        return conjugate(M, D, r).first;
    }
}

std::pair<Diagram, DiagramMap> random_diagram_map(const ComputableCategory& M, const Diagram& D, Rng& r, bool iso) {
    if (iso) return conjugate(M, D, r);
    const int N = D.index->num_objects();
    int rel = N == 0 ? 0 : r.uniform(1, 2);
    if (M.pointed()) {
        std::vector<std::tuple<int, int, int>> pairs;
        for (int k = 0; k < rel; ++k) {
            int i = r.uniform(0, N - 1);
            pairs.emplace_back(i, r.uniform(0, D.obj[i].n - 1), r.uniform(0, D.obj[i].n - 1));
        }
        return pointed_quotient(static_cast<const FinSetPointed&>(M), D, pairs);
    }
    const auto& V = static_cast<const FinVectGF&>(M);
    std::vector<std::pair<int, std::vector<int>>> seeds;
    for (int k = 0; k < rel; ++k) {
        int i = r.uniform(0, N - 1);
        std::vector<int> v(D.obj[i].n);
        for (auto& x : v) x = r.uniform(0, V.field().p() - 1);
        seeds.emplace_back(i, std::move(v));
    }
    return vect_quotient(V, D, seeds);
}

nlohmann::json mor_to_json(const Mor& f) { return {{"dom", f.dom}, {"cod", f.cod}, {"v", f.v}}; }

nlohmann::json obj_to_json(const ComputableCategory& M, const Obj& a) {
    if (!M.pointed()) return a.n;
    auto j = nlohmann::json::array({"*"});
    for (int x = 1; x < a.n; ++x) j.push_back("x" + std::to_string(x));
    return j;
}

nlohmann::json diagram_to_json(const ComputableCategory& M, const Diagram& D) {
    nlohmann::json j;
    j["objects"] = nlohmann::json::array();
    for (const auto& x : D.obj) j["objects"].push_back(obj_to_json(M, x));
    j["morphisms"] = nlohmann::json::array();
    for (const auto& f : D.mor) j["morphisms"].push_back(mor_to_json(f));
    return j;
}

}  // namespace pnm
