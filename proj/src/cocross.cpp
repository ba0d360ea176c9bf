#include "pnm/cocross.hpp"

#include <stdexcept>

namespace pnm {

// ---------------------------------------------------------------- registry

FunctorValue identity_functor_value(std::shared_ptr<const ProductBase> A) {
    FunctorValue F;
    F.token = "identity";
    F.A = A;
    F.obj = [](const AObj& a) { return Obj{a.c[0]}; };
    F.mor = [](const AMor& f) { return f.parts[0]; };
    return F;
}

FunctorValue zero_functor_value(std::shared_ptr<const ProductBase> A) {
    FunctorValue F;
    F.token = "zero";
    F.A = A;
    F.obj = [A](const AObj&) { return A->target().terminal(); };
    F.mor = [A](const AMor&) { return A->target().identity(A->target().terminal()); };
    return F;
}

FunctorValue tensor_square_functor_value(std::shared_ptr<const ProductBase> A) {
    FunctorValue F;
    F.token = "tensor-square";
    F.A = A;
    F.obj = [A](const AObj& a) { return A->target().square_obj(Obj{a.c[0]}); };
    F.mor = [A](const AMor& f) { return A->target().square_mor(f.parts[0]); };
    return F;
}

std::vector<std::string> registry_names() { return {"identity", "zero", "tensor-square"}; }

FunctorValue registry_functor(const std::string& name, std::shared_ptr<const ProductBase> A) {
    if (name == "identity") return identity_functor_value(A);
    if (name == "zero" || name == "constant-zero") return zero_functor_value(A);
    if (name == "tensor-square") return tensor_square_functor_value(A);
    throw std::invalid_argument("unknown functor: " + name);
}

std::vector<Mor> all_morphisms(const ComputableCategory& M, const Obj& a, const Obj& b) {
    std::vector<Mor> out;
    int base = 0, len = 0;
    if (const auto* V = dynamic_cast<const FinVectGF*>(&M)) {
        base = V->field().p();
        len = a.n * b.n;
    } else if (M.pointed()) {
        base = b.n;
        len = a.n - 1;
    } else {
        throw std::invalid_argument("all_morphisms: unsupported target category");
    }
    std::vector<int> digits(len, 0);
    while (true) {
        Mor f{a.n, b.n, {}};
        if (M.pointed()) {
            f.v.push_back(0);
            f.v.insert(f.v.end(), digits.begin(), digits.end());
        } else {
            f.v = digits;
        }
        out.push_back(f);
        int k = len - 1;
        while (k >= 0 && ++digits[k] == base) digits[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

namespace {

std::string mor_key(const Mor& f) {
    std::string s = std::to_string(f.dom) + ">" + std::to_string(f.cod) + ":";
    for (int x : f.v) s += std::to_string(x) + ",";
    return s;
}

}  // namespace

nlohmann::json tabulate_functor(const FunctorValue& F, const ProductBase& A, int max_size) {
    const auto& M = A.target();
    nlohmann::json objs = nlohmann::json::array(), mors = nlohmann::json::array();
    auto xs = M.objects_up_to(max_size);
    for (const auto& x : xs) objs.push_back({x.n, F.obj(AObj{{x.n}}).n});
    for (const auto& x : xs)
        for (const auto& y : xs)
            for (const auto& f : all_morphisms(M, x, y)) {
                Mor g = F.mor(A.make(AObj{{x.n}}, AObj{{y.n}}, {f}));
                mors.push_back({{"dom", f.dom}, {"cod", f.cod}, {"v", f.v},
                                {"image", {{"dom", g.dom}, {"cod", g.cod}, {"v", g.v}}}});
            }
    return {{"name", F.token}, {"target", M.name()}, {"objects", objs}, {"morphisms", mors}};
}

FunctorValue table_functor_value(const nlohmann::json& table, std::shared_ptr<const ProductBase> A) {
    const auto& M = A->target();
    if (table.contains("target") && table.at("target").get<std::string>() != M.name())
        throw std::invalid_argument("table functor is for " + table.at("target").get<std::string>());
    auto objs = std::make_shared<std::map<int, int>>();
    auto mors = std::make_shared<std::map<std::string, Mor>>();
    for (const auto& o : table.at("objects")) (*objs)[o.at(0).get<int>()] = o.at(1).get<int>();
    for (const auto& m : table.at("morphisms")) {
        Mor f{m.at("dom").get<int>(), m.at("cod").get<int>(), m.at("v").get<std::vector<int>>()};
        const auto& im = m.at("image");
        Mor g{im.at("dom").get<int>(), im.at("cod").get<int>(), im.at("v").get<std::vector<int>>()};
        if (!M.valid_morphism(f) || !M.valid_morphism(g)) throw std::invalid_argument("table functor: invalid morphism");
        if (!objs->count(f.dom) || !objs->count(f.cod) || g.dom != objs->at(f.dom) || g.cod != objs->at(f.cod))
            throw std::invalid_argument("table functor: image of " + mor_key(f) + " has the wrong type");
        (*mors)[mor_key(f)] = g;
    }
    auto lookup = [mors](const Mor& f) -> const Mor& {
        auto it = mors->find(mor_key(f));
        if (it == mors->end()) throw std::out_of_range("table functor undefined on " + mor_key(f));
        return it->second;
    };
    for (const auto& [x, fx] : *objs) {
        if (!(lookup(M.identity(Obj{x})) == M.identity(Obj{fx})))
            throw std::invalid_argument("table functor does not preserve the identity of " + std::to_string(x));
        for (const auto& [y, fy] : *objs)
            for (const auto& f : all_morphisms(M, Obj{x}, Obj{y}))
                for (const auto& [z, fz] : *objs)
                    for (const auto& g : all_morphisms(M, Obj{y}, Obj{z}))
                        if (!(lookup(M.compose(g, f)) == M.compose(lookup(g), lookup(f))))
                            throw std::invalid_argument("table functor does not preserve composition");
    }
    FunctorValue F;
    F.token = "table:" + table.value("name", std::string("anonymous"));
    F.A = A;
    F.obj = [objs](const AObj& a) {
        auto it = objs->find(a.c[0]);
        if (it == objs->end()) throw std::out_of_range("table functor undefined on object " + std::to_string(a.c[0]));
        return Obj{it->second};
    };
    F.mor = [lookup](const AMor& f) { return lookup(f.parts[0]); };
    return F;
}

// ---------------------------------------------------------------- context

CocrossContext::CocrossContext(TargetPtr M, int max_size) : M_(std::move(M)), max_size_(max_size) {}

std::shared_ptr<const ProductBase> CocrossContext::base(int n) {
    std::lock_guard<std::mutex> g(lock_);
    auto& b = bases_[n];
    if (!b) b = std::make_shared<ProductBase>(M_, n, max_size_);
    return b;
}

BaseFunctor CocrossContext::product(int n) {
    auto src = base(n);
    auto dst = base(1);
    auto M = M_;
    BaseFunctor P;
    P.name = "prod" + std::to_string(n);
    P.src = src;
    P.dst = dst;
    P.obj = [M](const AObj& a) {
        std::vector<Obj> xs;
        for (int x : a.c) xs.push_back(Obj{x});
        return AObj{{M->product(xs).n}};
    };
    P.mor = [M, dst, obj = P.obj](const AMor& f) { return dst->make(obj(f.dom), obj(f.cod), {M->product_map(f.parts)}); };
    return P;
}

BaseFunctor CocrossContext::diagonal(int n) {
    auto src = base(1);
    auto dst = base(n);
    BaseFunctor D;
    D.name = "diag" + std::to_string(n);
    D.src = src;
    D.dst = dst;
    D.obj = [n](const AObj& a) { return AObj{std::vector<int>(n, a.c[0])}; };
    D.mor = [n, dst, obj = D.obj](const AMor& f) {
        return dst->make(obj(f.dom), obj(f.cod), std::vector<Mor>(n, f.parts[0]));
    };
    return D;
}

BaseAdjunction CocrossContext::diagonal_adjunction(int n) {
    BaseAdjunction adj;
    adj.Q = diagonal(n);
    adj.P = product(n);
    auto M = M_;
    auto b1 = base(1);
    auto bn = base(n);
    auto P = adj.P, Q = adj.Q;
    adj.unit = [M, b1, P, n](const AObj& d) {
        AObj PQd = P.obj(AObj{std::vector<int>(n, d.c[0])});
        Obj x{d.c[0]};
        return b1->make(d, PQd, {M->tuple(x, std::vector<Obj>(n, x), std::vector<Mor>(n, M->identity(x)))});
    };
    adj.counit = [M, bn, P, Q](const AObj& c) {
        AObj QPc = Q.obj(P.obj(c));
        std::vector<Obj> xs;
        for (int x : c.c) xs.push_back(Obj{x});
        std::vector<Mor> ps;
        for (size_t i = 0; i < xs.size(); ++i) ps.push_back(M->projection(xs, static_cast<int>(i)));
        return bn->make(QPc, c, ps);
    };
    return adj;
}

FunAdjunction CocrossContext::fun_adjunction(int n) { return precomposition_adjunction(diagonal_adjunction(n)); }

std::shared_ptr<ThetaMonad> CocrossContext::theta(int n) {
    auto b = base(n);
    std::lock_guard<std::mutex> g(lock_);
    auto& t = thetas_[n];
    if (!t) t = std::make_shared<ThetaMonad>(M_, theta_n(b), "theta^" + std::to_string(n));
    return t;
}

std::string surjection_name(const SurjectionMap& s) {
    std::string out = std::to_string(s.n) + "->" + std::to_string(s.m) + ":";
    for (size_t i = 0; i < s.s.size(); ++i) out += (i ? "," : "") + std::to_string(s.s[i] + 1);
    return out;
}

std::shared_ptr<ThetaMonad> CocrossContext::restricted_theta(const SurjectionMap& s) {
    if (!is_surjection(s)) throw std::invalid_argument("not a surjection: " + surjection_name(s));
    auto full = theta(s.n);
    std::vector<int> key{s.n, s.m};
    key.insert(key.end(), s.s.begin(), s.s.end());
    std::lock_guard<std::mutex> g(lock_);
    auto& t = restricted_[key];
    if (!t) {
        PosetPn Pm = build_pn(s.m);
        auto gm = poset_of_surjection(s, Pm, full->poset());
        t = std::make_shared<ThetaMonad>(M_, restrict_module(gm, Pm, full->poset(), full->module()),
                                         "theta^" + std::to_string(s.n) + "|" + surjection_name(s));
    }
    return t;
}

MonadInstance CocrossContext::diagonal_cocross_monad(int n) {
    auto m = composite_monad(fun_adjunction(n), theta(n)->instance());
    m.name = "cocross^" + std::to_string(n);
    return m;
}

BaseFunctor CocrossContext::diagonal_along(const SurjectionMap& s) {
    auto src = base(s.m);
    auto dst = base(s.n);
    BaseFunctor D;
    D.name = "diag[" + surjection_name(s) + "]";
    D.src = src;
    D.dst = dst;
    auto sv = s.s;
    D.obj = [sv](const AObj& b) {
        AObj a;
        for (int j : sv) a.c.push_back(b.c[j]);
        return a;
    };
    D.mor = [sv, dst, obj = D.obj](const AMor& f) {
        std::vector<Mor> ps;
        for (int j : sv) ps.push_back(f.parts[j]);
        return dst->make(obj(f.dom), obj(f.cod), ps);
    };
    return D;
}

BaseFunctor CocrossContext::product_along(const SurjectionMap& s) {
    auto src = base(s.n);
    auto dst = base(s.m);
    auto M = M_;
    BaseFunctor P;
    P.name = "prod[" + surjection_name(s) + "]";
    P.src = src;
    P.dst = dst;
    auto sv = s.s;
    const int m = s.m;
    P.obj = [M, sv, m](const AObj& a) {
        AObj b;
        for (int j = 0; j < m; ++j) {
            std::vector<Obj> xs;
            for (size_t i = 0; i < sv.size(); ++i)
                if (sv[i] == j) xs.push_back(Obj{a.c[i]});
            b.c.push_back(M->product(xs).n);
        }
        return b;
    };
    P.mor = [M, sv, m, dst, obj = P.obj](const AMor& f) {
        std::vector<Mor> ps;
        for (int j = 0; j < m; ++j) {
            std::vector<Mor> fs;
            for (size_t i = 0; i < sv.size(); ++i)
                if (sv[i] == j) fs.push_back(f.parts[i]);
            ps.push_back(M->product_map(fs));
        }
        return dst->make(obj(f.dom), obj(f.cod), ps);
    };
    return P;
}

BaseAdjunction CocrossContext::adjunction_along(const SurjectionMap& s) {
    BaseAdjunction adj;
    adj.Q = diagonal_along(s);
    adj.P = product_along(s);
    auto M = M_;
    auto bm = base(s.m), bn = base(s.n);
    auto sv = s.s;
    const int m = s.m;
    auto P = adj.P, Q = adj.Q;
    adj.unit = [M, bm, P, Q, sv, m](const AObj& b) {
        std::vector<Mor> ps;
        for (int j = 0; j < m; ++j) {
            Obj x{b.c[j]};
            int k = 0;
            for (int t : sv) k += t == j;
            ps.push_back(M->tuple(x, std::vector<Obj>(k, x), std::vector<Mor>(k, M->identity(x))));
        }
        return bm->make(b, P.obj(Q.obj(b)), ps);
    };
    adj.counit = [M, bn, P, Q, sv](const AObj& a) {
        std::vector<Mor> ps;
        for (size_t i = 0; i < sv.size(); ++i) {
            std::vector<Obj> xs;
            int pos = 0;
            for (size_t i2 = 0; i2 < sv.size(); ++i2)
                if (sv[i2] == sv[i]) {
                    if (i2 == i) pos = static_cast<int>(xs.size());
                    xs.push_back(Obj{a.c[i2]});
                }
            ps.push_back(M->projection(xs, pos));
        }
        return bn->make(Q.obj(P.obj(a)), a, ps);
    };
    return adj;
}

// ---------------------------------------------------------------- values

CocrossValue cocross(CocrossContext& ctx, int n, const FunctorValue& F, const AObj& inputs) {
    if (static_cast<int>(inputs.c.size()) != n) throw std::invalid_argument("cocross: expected " + std::to_string(n) + " inputs");
    auto T = ctx.theta(n);
    auto e = T->entry(ctx.fun_adjunction(n).L(F), inputs);
    return CocrossValue{e->cc.apex, e->cube, e};
}

namespace {

// Cokernel of g, computed directly: returns the quotient map.
Mor cofiber_map(const ComputableCategory& M, const Mor& g) {
    if (const auto* V = dynamic_cast<const FinVectGF*>(&M)) {
        Echelon E(V->field().p(), g.cod);
        for (int j = 0; j < g.dom; ++j) {
            std::vector<int> col(g.cod);
            for (int i = 0; i < g.cod; ++i) col[i] = g.v[static_cast<size_t>(i) * g.dom + j];
            E.insert(col);
        }
        auto np = E.non_pivots();
        const int q = static_cast<int>(np.size());
        Mor out{g.cod, q, std::vector<int>(static_cast<size_t>(q) * g.cod, 0)};
        for (int j = 0; j < g.cod; ++j) {
            std::vector<int> e(g.cod, 0);
            e[j] = 1;
            E.reduce(e);
            for (int r = 0; r < q; ++r) out.v[static_cast<size_t>(r) * g.cod + j] = e[np[r]];
        }
        return out;
    }
    std::vector<bool> hit(g.cod, false);
    for (int x : g.v) hit[x] = true;
    hit[0] = true;
    std::vector<int> img(g.cod, 0);
    int next = 1;
    for (int y = 1; y < g.cod; ++y)
        if (!hit[y]) img[y] = next++;
    return Mor{g.cod, next, img};
}

Diagram face(const PosetPn& P, const PosetPn& Q, const Diagram& chi, int offset) {
    Diagram D;
    D.index = Q.cat;
    D.obj.resize(Q.cat->num_objects());
    D.mor.resize(Q.cat->num_morphisms());
    for (int U = 0; U <= Q.full(); ++U) {
        D.obj[U] = chi.obj[U | offset];
        for (int V = 0; V <= Q.full(); ++V)
            if ((U & V) == U) D.mor[Q.mor(U, V)] = chi.mor[P.mor(U | offset, V | offset)];
    }
    return D;
}

}  // namespace

CofiberOracle iterated_cofiber(const ComputableCategory& M, const PosetPn& P, const Diagram& chi) {
    if (P.n == 0) return {chi.obj[0], M.identity(chi.obj[0])};
    PosetPn Q = build_pn(P.n - 1);
    const int bit = 1 << (P.n - 1);
    CofiberOracle r0 = iterated_cofiber(M, Q, face(P, Q, chi, 0));
    CofiberOracle r1 = iterated_cofiber(M, Q, face(P, Q, chi, bit));
    const Mor e = chi.mor[P.mor(Q.full(), P.full())];
    auto g = M.factor_through_cocone(r0.value, {r0.top_leg}, {M.compose(r1.top_leg, e)}, r1.value, false);
    if (!g) throw std::logic_error("iterated_cofiber: induced map does not exist");
    Mor q = cofiber_map(M, *g);
    return {Obj{q.cod}, M.compose(q, r1.top_leg)};
}

OracleComparison compare_with_oracle(const ComputableCategory& M, const PosetPn& P, const TableFunctor& phi,
                                     const Diagram& chi, const ColimitCocone& cc) {
    OracleComparison out;
    CofiberOracle o = iterated_cofiber(M, P, chi);
    out.main = cc.apex;
    out.oracle = o.value;
    out.sizes_equal = M.size_of(cc.apex) == M.size_of(o.value);
    std::vector<int> pre(phi.dst->num_objects(), -1);
    for (int U = 0; U <= P.full(); ++U) pre[phi.obj[U]] = U;
    std::vector<Mor> legs;
    for (int l = 0; l < phi.dst->num_objects(); ++l)
        legs.push_back(pre[l] >= 0 ? M.compose(o.top_leg, chi.mor[P.mor(pre[l], P.full())]) : M.from_initial(o.value));
    try {
        out.to_oracle = cc.mediate(legs, o.value);
    } catch (const ConeError&) {
        return out;
    }
    auto back = M.factor_through_cocone(o.value, {o.top_leg}, {cc.legs[phi.obj[P.full()]]}, cc.apex, false);
    if (!back) return out;
    out.from_oracle = *back;
    out.mutually_inverse = M.compose(out.from_oracle, out.to_oracle) == M.identity(cc.apex) &&
                           M.compose(out.to_oracle, out.from_oracle) == M.identity(o.value);
    return out;
}

// ---------------------------------------------------------------- surjections

SurjectionMorphism surjection_monad_morphism(CocrossContext& ctx, const SurjectionMap& s) {
    const int n = s.n, m = s.m;
    auto Tm = ctx.theta(m);
    auto Tn = ctx.theta(n);
    auto Tres = ctx.restricted_theta(s);
    BaseFunctor Ds = ctx.diagonal_along(s);
    auto bad = validate_module_functor(Ds, Tm->module(), Tres->module(), SampleBudget{0, 16, 16});
    if (!bad.empty()) throw std::logic_error("diagonal is not a module morphism: " + bad.front());

    SurjectionMorphism out;
    out.s = s;
    out.module_part = monad_functor_on_module_morphism(Ds, Tm, Tres);

    auto M = ctx.target_ptr();
    auto b1 = ctx.base(1);
    BaseFunctor Pm = ctx.product(m), Pn = ctx.product(n), Dm = ctx.diagonal(m), Dn = ctx.diagonal(n);
    auto sv = s.s;
    BetaData& d = out.data;
    d.inner_adj = ctx.fun_adjunction(n);
    d.outer_adj = ctx.fun_adjunction(m);
    d.alpha = out.module_part;
    // L'G(b) = G(⊓b) -> G(⊓ Δ^(s) b) through the projections π_{s(i)}
    d.tauL = [M, b1, Pm, Pn, Ds, sv](const FunctorValue& G, const AObj& b) {
        std::vector<Obj> xs;
        for (int x : b.c) xs.push_back(Obj{x});
        AObj src = Pm.obj(b);
        AObj Db = Ds.obj(b);
        AObj dst = Pn.obj(Db);
        std::vector<Obj> ys;
        std::vector<Mor> legs;
        for (int j : sv) {
            ys.push_back(Obj{b.c[j]});
            legs.push_back(M->projection(xs, j));
        }
        return G.mor(b1->make(src, dst, {M->tuple(Obj{src.c[0]}, ys, legs)}));
    };
    d.tauR = [M, Ds, Dm, Dn](const FunctorValue& H, const AObj& x) {
        AObj a = Dn.obj(x);
        if (!(Ds.obj(Dm.obj(x)) == a)) throw std::logic_error("diagonals do not compose");
        return M->identity(H.obj(a));
    };
    out.beta = beta_morphism(d);

    TableFunctor g = poset_of_surjection(s, Tres->poset(), Tn->poset());
    out.induced = induced_monad_morphism(g, Tres, Tn);

    MonadMorphism& w = out.whiskered;
    w.name = "whiskered";
    w.outer = out.beta.inner;
    w.inner = ctx.diagonal_cocross_monad(n);
    w.F = [](const FunctorValue& G) { return G; };
    w.Fmap = [](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& x) { return a(x); };
    auto adj = d.inner_adj;
    auto ind = out.induced;
    w.alpha = [adj, ind](const FunctorValue& G, const AObj& x) {
        const FunctorValue LG = adj.L(G);
        NatComp a = [&](const AObj& c) { return ind.alpha(LG, c); };
        return adj.Rmap(ind.outer.T(LG), ind.inner.T(LG), a, x);
    };
    out.total = compose_identity_morphisms(out.whiskered, out.beta);
    out.total.name = "surjection[" + surjection_name(s) + "]";
    out.total.outer = ctx.diagonal_cocross_monad(m);
    return out;
}

LawReport pasted_adjunction_agreement(CocrossContext& ctx, const SurjectionMap& s, const std::vector<AObj>& as,
                                      const std::vector<AObj>& cs) {
    const int n = s.n, m = s.m;
    auto b1 = ctx.base(1), bm = ctx.base(m), bn = ctx.base(n);
    BaseAdjunction outer = ctx.diagonal_adjunction(m), along = ctx.adjunction_along(s), direct = ctx.diagonal_adjunction(n);
    LawResult right{"right_adjoint"}, unit{"unit"}, counit{"counit"};
    auto show = [](const AMor& f) { return nlohmann::json{{"dom", f.dom.c}, {"cod", f.cod.c}}; };
    for (const auto& a : as) {
        // a -> ⊓^m Δ^m a -> ⊓^m ⊓^(s) Δ^(s) Δ^m a
        AMor u = b1->compose(outer.P.mor(along.unit(outer.Q.obj(a))), outer.unit(a));
        AMor d = direct.unit(a);
        unit.record(u == d, [&] { return nlohmann::json{{"object", a.c}, {"pasted", show(u)}, {"direct", show(d)}}; });
    }
    for (const auto& c : cs) {
        AObj pc = outer.P.obj(along.P.obj(c));
        AObj dc = direct.P.obj(c);
        right.record(pc == dc, [&] { return nlohmann::json{{"object", c.c}, {"pasted", pc.c}, {"direct", dc.c}}; });
        // Δ^(s) Δ^m ⊓^m ⊓^(s) c -> Δ^(s) ⊓^(s) c -> c
        AMor e = bn->compose(along.counit(c), along.Q.mor(outer.counit(along.P.obj(c))));
        AMor d = direct.counit(c);
        counit.record(e == d, [&] { return nlohmann::json{{"object", c.c}, {"pasted", show(e)}, {"direct", show(d)}}; });
    }
    LawReport rep;
    rep.laws = {right, unit, counit};
    return rep;
}

}  // namespace pnm
