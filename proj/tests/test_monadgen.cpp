#include <catch_amalgamated.hpp>

#include "pnm/cocross.hpp"
#include "pnm/monadgen.hpp"

using namespace pnm;

namespace {

std::vector<TargetPtr> targets() {
    return {std::make_shared<FinVectGF>(2), std::make_shared<FinVectGF>(3), std::make_shared<FinSetPointed>()};
}

std::vector<FunctorValue> registry(CocrossContext& ctx, int n) {
    std::vector<FunctorValue> out;
    auto L = ctx.fun_adjunction(n);
    for (const auto& name : registry_names()) out.push_back(L.L(registry_functor(name, ctx.base(1))));
    return out;
}

std::vector<AMor> sample_morphisms(const ProductBase& A, Rng& r, int count) {
    std::vector<AMor> out;
    for (int i = 0; i < count; ++i) {
        AObj a = A.random_object(r), b = A.random_object(r), c = A.random_object(r);
        out.push_back(A.random_morphism(r, a, b));
        out.push_back(A.random_morphism(r, b, c));
    }
    return out;
}

// Transformations between registry functors precomposed with the product.
std::vector<NatSample> sample_transformations(CocrossContext& ctx, int n) {
    const auto& M = ctx.target();
    auto Fs = registry(ctx, n);
    std::vector<NatSample> out;
    auto to_zero = [&M, F = Fs[0]](const AObj& x) { return M.to_terminal(F.obj(x)); };
    out.push_back({"identity->zero", Fs[0], Fs[1], to_zero});
    auto from_zero = [&M, F = Fs[2]](const AObj& x) { return M.from_initial(F.obj(x)); };
    out.push_back({"zero->square", Fs[1], Fs[2], from_zero});
    if (const auto* V = dynamic_cast<const FinVectGF*>(&M); V && V->field().p() == 3) {
        auto twice = [V, F = Fs[0]](const AObj& x) {
            return FinVectGF::to_mor(V->field().scale(2, V->field().identity(F.obj(x).n)));
        };
        out.push_back({"identity->identity (x2)", Fs[0], Fs[0], twice});
    }
    return out;
}

void require_pass(const LawReport& r) {
    for (const auto& l : r.laws) {
        INFO(l.law << " " << nlohmann::json(l.witnesses).dump());
        CHECK(l.failures == 0);
        CHECK(l.checks > 0);
    }
}

}  // namespace

TEST_CASE("identity monad satisfies the monad laws") {
    auto M = std::make_shared<FinVectGF>(2);
    CocrossContext ctx(M, 2);
    Rng r(1);
    auto T = identity_monad(ctx.base(2), M);
    require_pass(verify_monad(T, registry(ctx, 2), ctx.base(2)->objects(), sample_morphisms(*ctx.base(2), r, 4),
                              sample_transformations(ctx, 2)));
}

TEST_CASE("monad of the coordinate action satisfies the laws for n = 0, 1, 2") {
    for (const auto& M : targets()) {
        CocrossContext ctx(M, 2);
        Rng r(2);
        for (int n = 0; n <= 2; ++n) {
            INFO(M->name() << " n=" << n);
            auto A = ctx.base(n);
            auto objs = A->objects();
            auto mors = n == 0 ? std::vector<AMor>{A->identity(AObj{})} : sample_morphisms(*A, r, 6);
            require_pass(verify_monad(ctx.theta(n)->instance(), registry(ctx, n), objs, mors,
                                      sample_transformations(ctx, n)));
        }
    }
}

TEST_CASE("with n = 0 the monad is the identity") {
    for (const auto& M : targets()) {
        CocrossContext ctx(M, 2);
        auto T = ctx.theta(0);
        for (const auto& F : registry(ctx, 0)) {
            AObj x{};
            CHECK(T->T(F).obj(x) == F.obj(x));
            CHECK(T->eta(F, x) == M->identity(F.obj(x)));
            CHECK(T->mu(F, x) == M->identity(F.obj(x)));
        }
    }
}

TEST_CASE("the trivial action gives the zero monad for n >= 1") {
    // Λ-colimits of a constant cube collapse onto the point ✱.
    auto M = std::make_shared<FinVectGF>(3);
    CocrossContext ctx(M, 2);
    for (int n = 1; n <= 2; ++n) {
        auto A = ctx.base(n);
        auto T = std::make_shared<ThetaMonad>(M, trivial_module(A, n), "trivial");
        for (const auto& F : registry(ctx, n))
            for (const auto& a : A->objects()) CHECK(T->T(F).obj(a) == M->terminal());
    }
}

TEST_CASE("a corrupted multiplication is detected with witnesses") {
    auto M = std::make_shared<FinVectGF>(3);
    CocrossContext ctx(M, 2);
    auto T = ctx.theta(1)->instance();
    auto bad = T;
    const Field& F3 = M->field();
    bad.mu = [T, &F3](const FunctorValue& F, const AObj& x) {
        Mor m = T.mu(F, x);
        return FinVectGF::to_mor(F3.scale(2, FinVectGF::to_mat(m)));
    };
    auto rep = verify_monad(bad, registry(ctx, 1), ctx.base(1)->objects(), {});
    CHECK_FALSE(rep.pass());
    bool unit_failed = false;
    for (const auto& l : rep.laws)
        if (l.law == "unit_left") {
            unit_failed = l.failures > 0;
            REQUIRE_FALSE(l.witnesses.empty());
            CHECK(l.witnesses.front().contains("lhs"));
        }
    CHECK(unit_failed);
}

TEST_CASE("a corrupted unit breaks naturality") {
    auto M = std::make_shared<FinSetPointed>();
    CocrossContext ctx(M, 2);
    Rng r(5);
    auto T = ctx.theta(1)->instance();
    auto bad = T;
    bad.eta = [T, M](const FunctorValue& F, const AObj& x) { return M->zero_morphism(F.obj(x), T.T(F).obj(x)); };
    auto rep = verify_monad(bad, registry(ctx, 1), ctx.base(1)->objects(), sample_morphisms(*ctx.base(1), r, 4));
    CHECK_FALSE(rep.pass());
}

TEST_CASE("composite monads over the diagonal adjunction satisfy the laws") {
    for (const auto& M : targets()) {
        CocrossContext ctx(M, 2);
        Rng r(6);
        for (int n = 1; n <= 2; ++n) {
            INFO(M->name() << " n=" << n);
            auto A1 = ctx.base(1);
            std::vector<FunctorValue> Fs;
            for (const auto& name : registry_names()) Fs.push_back(registry_functor(name, A1));
            require_pass(verify_monad(ctx.diagonal_cocross_monad(n), Fs, A1->objects(), sample_morphisms(*A1, r, 4)));
        }
    }
}

TEST_CASE("diagonal adjunctions satisfy the triangle identities") {
    for (const auto& M : targets()) {
        CocrossContext ctx(M, 2);
        for (int n = 1; n <= 3; ++n) {
            CHECK(validate_base_adjunction(ctx.diagonal_adjunction(n), SampleBudget{7, 16, 16}).empty());
            auto adj = ctx.fun_adjunction(n);
            std::vector<FunctorValue> Gs;
            for (const auto& name : registry_names()) Gs.push_back(registry_functor(name, ctx.base(1)));
            std::vector<FunctorValue> Hs;
            for (const auto& G : Gs) Hs.push_back(adj.L(G));
            CHECK(validate_fun_adjunction(*M, adj, Gs, Hs, ctx.base(1)->objects(), ctx.base(n)->objects()).empty());
        }
        for (auto s : {SurjectionMap{2, 1, {0, 0}}, SurjectionMap{3, 2, {1, 0, 1}}})
            CHECK(validate_base_adjunction(ctx.adjunction_along(s), SampleBudget{8, 16, 16}).empty());
    }
}

TEST_CASE("a broken counit fails the triangle identities") {
    auto M = std::make_shared<FinVectGF>(2);
    CocrossContext ctx(M, 2);
    auto adj = ctx.diagonal_adjunction(2);
    auto good = adj.counit;
    auto base = ctx.base(2);
    adj.counit = [good, base, M](const AObj& c) {
        AMor e = good(c);
        for (auto& p : e.parts) p = M->zero_morphism(Obj{p.dom}, Obj{p.cod});
        return e;
    };
    CHECK_FALSE(validate_base_adjunction(adj, SampleBudget{9, 16, 16}).empty());
}

TEST_CASE("identity monad morphism and a corrupted one") {
    auto M = std::make_shared<FinVectGF>(2);
    CocrossContext ctx(M, 2);
    auto T = ctx.theta(2)->instance();
    auto id = identity_monad_morphism(T);
    require_pass(verify_monad_morphism(id, registry(ctx, 2), ctx.base(2)->objects()));
    auto bad = id;
    bad.alpha = [T, M](const FunctorValue& G, const AObj& x) {
        Obj X = T.T(G).obj(x);
        return M->zero_morphism(X, X);
    };
    CHECK_FALSE(verify_monad_morphism(bad, registry(ctx, 2), ctx.base(2)->objects()).pass());
}

TEST_CASE("restriction along a preimage map is a module; non-monoidal maps are rejected") {
    auto M = std::make_shared<FinSetPointed>();
    CocrossContext ctx(M, 2);
    SurjectionMap s{3, 2, {0, 1, 1}};
    auto T = ctx.restricted_theta(s);
    CHECK(validate_module(T->module(), SampleBudget{10, 32, 32}).empty());
    auto P1 = build_pn(1), P2 = build_pn(2);
    auto full = thin_functor(P1.cat, P2.cat, {3, 3});
    CHECK_THROWS_AS(restrict_module(full, P1, P2, ctx.theta(2)->module()), std::invalid_argument);
    // preserves ∩ and ∅ but misses the top, so the restriction would not be unital
    auto first = thin_functor(P1.cat, P2.cat, {0, 1});
    CHECK_THROWS_AS(restrict_module(first, P1, P2, ctx.theta(2)->module()), std::invalid_argument);
}

TEST_CASE("the induced morphism of the identity surjection is the identity") {
    auto M = std::make_shared<FinVectGF>(3);
    CocrossContext ctx(M, 2);
    auto s = identity_surjection(2);
    auto Tn = ctx.theta(2);
    auto Tr = ctx.restricted_theta(s);
    auto g = poset_of_surjection(s, Tr->poset(), Tn->poset());
    auto m = induced_monad_morphism(g, Tr, Tn);
    for (const auto& G : registry(ctx, 2))
        for (const auto& x : ctx.base(2)->objects()) CHECK(m.alpha(G, x) == M->identity(Tn->T(G).obj(x)));
    require_pass(verify_monad_morphism(m, registry(ctx, 2), ctx.base(2)->objects()));
}

TEST_CASE("pieces of the surjection morphism satisfy their laws and hypotheses") {
    for (const auto& M : targets()) {
        const int bound = M->pointed() ? 1 : 2;
        CocrossContext ctx(M, bound);
        for (auto s : {SurjectionMap{2, 1, {0, 0}}, SurjectionMap{3, 2, {0, 1, 0}}}) {
            INFO(M->name() << " " << surjection_name(s));
            auto sm = surjection_monad_morphism(ctx, s);
            std::vector<FunctorValue> Fs;
            for (const auto& name : registry_names()) Fs.push_back(registry_functor(name, ctx.base(1)));
            std::vector<FunctorValue> Hs;
            for (const auto& F : Fs) Hs.push_back(sm.data.inner_adj.L(F));
            auto objs = ctx.base(1)->objects();
            require_pass(check_beta_hypotheses(sm.data, Fs, Hs, objs, ctx.base(s.m)->objects()));
            require_pass(verify_monad_morphism(sm.module_part, Hs, ctx.base(s.m)->objects()));
            require_pass(verify_monad_morphism(sm.beta, Fs, objs));
            require_pass(verify_monad_morphism(sm.whiskered, Fs, objs));
            require_pass(verify_monad_morphism(sm.total, Fs, objs));
        }
    }
}

TEST_CASE("broken transformations violate the comparison hypotheses") {
    auto M = std::make_shared<FinVectGF>(2);
    CocrossContext ctx(M, 2);
    auto sm = surjection_monad_morphism(ctx, SurjectionMap{2, 1, {0, 0}});
    auto data = sm.data;
    auto good = data.tauL;
    data.tauL = [good, M](const FunctorValue& G, const AObj& b) {
        Mor m = good(G, b);
        return M->zero_morphism(Obj{m.dom}, Obj{m.cod});
    };
    std::vector<FunctorValue> Fs{registry_functor("identity", ctx.base(1))};
    std::vector<FunctorValue> Hs{data.inner_adj.L(Fs[0])};
    auto rep = check_beta_hypotheses(data, Fs, Hs, ctx.base(1)->objects(), ctx.base(1)->objects());
    CHECK_FALSE(rep.pass());
}

TEST_CASE("memoized values are stable across repeated evaluation") {
    auto M = std::make_shared<FinVectGF>(2);
    CocrossContext ctx(M, 2);
    auto T = ctx.theta(2);
    auto G = registry(ctx, 2)[2];
    AObj x{{2, 1}};
    Mor first = T->mu(G, x);
    auto fresh = std::make_shared<ThetaMonad>(M, T->module(), "fresh");
    CHECK(fresh->mu(G, x) == first);
    CHECK(T->mu(G, x) == first);
}

TEST_CASE("laws hold for the trivial action, a mixed coreflective action and sampled n = 3") {
    for (const auto& M : targets()) {
        CocrossContext ctx(M, 2);
        Rng r(11);
        INFO(M->name());
        auto A2 = ctx.base(2);
        auto triv = std::make_shared<ThetaMonad>(M, trivial_module(A2, 2), "trivial");
        require_pass(verify_monad(triv->instance(), registry(ctx, 2), A2->objects(), sample_morphisms(*A2, r, 3)));
        auto mixed = theta_from_coreflectives(A2, {identity_coreflective(M), zero_coreflective(M)});
        REQUIRE(validate_module(mixed).empty());
        auto TA = std::make_shared<ThetaMonad>(M, mixed, "mixed");
        require_pass(verify_monad(TA->instance(), registry(ctx, 2), A2->objects(), sample_morphisms(*A2, r, 3)));
        if (!M->pointed()) {
            auto A3 = ctx.base(3);
            std::vector<AObj> objs;
            for (int i = 0; i < 4; ++i) objs.push_back(A3->random_object(r));
            require_pass(verify_monad(ctx.theta(3)->instance(), registry(ctx, 3), objs, sample_morphisms(*A3, r, 2)));
        }
    }
}

namespace {
// Coordinatewise a ↦ a × a in the chosen coordinate: a morphism of the coordinate action.
BaseFunctor double_coordinate(CocrossContext& ctx, int n, int k) {
    auto A = ctx.base(n);
    auto M = ctx.target_ptr();
    BaseFunctor F;
    F.name = "double" + std::to_string(k);
    F.src = A;
    F.dst = A;
    F.obj = [M, k](const AObj& a) {
        AObj b = a;
        b.c[k] = M->product({Obj{a.c[k]}, Obj{a.c[k]}}).n;
        return b;
    };
    F.mor = [M, A, k, obj = F.obj](const AMor& f) {
        auto ps = f.parts;
        ps[k] = M->product_map({f.parts[k], f.parts[k]});
        return A->make(obj(f.dom), obj(f.cod), ps);
    };
    return F;
}
BaseFunctor compose_base(const BaseFunctor& G, const BaseFunctor& F) {
    return BaseFunctor{G.name + "." + F.name, F.src, G.dst, [G, F](const AObj& a) { return G.obj(F.obj(a)); },
                       [G, F](const AMor& f) { return G.mor(F.mor(f)); }};
}
}  // namespace

TEST_CASE("restriction along module morphisms is contravariantly functorial") {
    for (const auto& M : targets()) {
        CocrossContext ctx(M, 1);
        auto T = ctx.theta(2);
        auto F = double_coordinate(ctx, 2, 0), G = double_coordinate(ctx, 2, 1);
        auto GF = compose_base(G, F);
        for (const auto* P : {&F, &G, &GF}) CHECK(validate_module_functor(*P, T->module(), T->module()).empty());
        auto mF = monad_functor_on_module_morphism(F, T, T);
        auto mG = monad_functor_on_module_morphism(G, T, T);
        auto mGF = monad_functor_on_module_morphism(GF, T, T);
        for (const auto& H : registry(ctx, 2)) {
            auto left = mGF.F(H);
            auto right = mF.F(mG.F(H));
            for (const auto& x : ctx.base(2)->objects()) {
                CHECK(left.obj(x) == right.obj(x));
                // the composite transformation F^*(α_G) ∘ α_F at G^*H
                Mor comp = M->compose(mF.Fmap(T->T(mG.F(H)), mG.F(T->T(H)),
                                              [&](const AObj& y) { return mG.alpha(H, y); }, x),
                                      mF.alpha(mG.F(H), x));
                CHECK(mGF.alpha(H, x) == comp);
            }
        }
        require_pass(verify_monad_morphism(mGF, registry(ctx, 2), ctx.base(2)->objects()));
    }
}

TEST_CASE("a map that is not a module morphism is caught by the square check") {
    auto M = std::make_shared<FinVectGF>(2);
    CocrossContext ctx(M, 2);
    auto T = ctx.theta(2);
    auto A = ctx.base(2);
    BaseFunctor swap{"swap", A, A, [](const AObj& a) { return AObj{{a.c[1], a.c[0]}}; },
                     [A](const AMor& f) { return A->make(AObj{{f.dom.c[1], f.dom.c[0]}}, AObj{{f.cod.c[1], f.cod.c[0]}},
                                                         {f.parts[1], f.parts[0]}); }};
    CHECK_FALSE(validate_module_functor(swap, T->module(), T->module()).empty());
}

TEST_CASE("induced morphisms compose along composites of preimage maps") {
    for (const auto& M : targets()) {
        CocrossContext ctx(M, 1);
        SurjectionMap s{2, 1, {0, 0}}, t{3, 2, {1, 0, 1}};
        auto T3 = ctx.theta(3);
        auto Tt = ctx.restricted_theta(t);                     // P(t)^* θ^3 on P(2)
        auto P1 = build_pn(1);
        auto hs = poset_of_surjection(s, P1, Tt->poset());
        auto Tst = std::make_shared<ThetaMonad>(M, restrict_module(hs, P1, Tt->poset(), Tt->module()), "st");
        auto g = poset_of_surjection(t, Tt->poset(), T3->poset());
        auto h = poset_of_surjection(s, Tst->poset(), Tt->poset());
        auto gh = compose_functors(g, h);
        auto m_g = induced_monad_morphism(g, Tt, T3);
        auto m_h = induced_monad_morphism(h, Tst, Tt);
        auto m_gh = induced_monad_morphism(gh, Tst, T3);
        auto comp = compose_identity_morphisms(m_g, m_h);
        for (const auto& G : registry(ctx, 3))
            for (const auto& x : ctx.base(3)->objects()) CHECK(m_gh.alpha(G, x) == comp.alpha(G, x));
    }
}

TEST_CASE("composite monads in degenerate cases") {
    auto M = std::make_shared<FinSetPointed>();
    CocrossContext ctx(M, 2);
    auto A2 = ctx.base(2);
    auto T = ctx.theta(2)->instance();
    FunAdjunction id;
    id.name = "identity";
    id.D = A2;
    id.C = A2;
    id.L = [](const FunctorValue& G) { return G; };
    id.R = id.L;
    id.Lmap = [](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& x) { return a(x); };
    id.Rmap = id.Lmap;
    id.unit = [M](const FunctorValue& G, const AObj& x) { return M->identity(G.obj(x)); };
    id.counit = id.unit;
    auto C = composite_monad(id, T);
    for (const auto& G : registry(ctx, 2))
        for (const auto& x : A2->objects()) {
            CHECK(C.T(G).obj(x) == T.T(G).obj(x));
            CHECK(C.eta(G, x) == T.eta(G, x));
            CHECK(C.mu(G, x) == T.mu(G, x));
        }
    // with the identity monad: R L with multiplication R ε L
    auto adj = ctx.fun_adjunction(2);
    auto RL = composite_monad(adj, identity_monad(A2, M));
    for (const auto& name : registry_names()) {
        auto G = registry_functor(name, ctx.base(1));
        auto LG = adj.L(G);
        auto LRLG = adj.L(adj.R(LG));
        for (const auto& x : ctx.base(1)->objects()) {
            CHECK(RL.mu(G, x) == adj.Rmap(LRLG, LG, [&](const AObj& c) { return adj.counit(LG, c); }, x));
            CHECK(RL.eta(G, x) == adj.unit(G, x));
        }
    }
}
