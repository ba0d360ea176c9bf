#include "pnm/monadgen.hpp"

#include <new>
#include <stdexcept>

namespace pnm {

namespace {

constexpr int kMaxWitnesses = 5;

Mor comp_all(const ComputableCategory& M, std::initializer_list<Mor> fs) {
    return M.compose_all(std::vector<Mor>(fs));
}

}  // namespace

FunctorValue precompose(const FunctorValue& G, const BaseFunctor& P) {
    FunctorValue out;
    out.token = G.token + "o" + P.name;
    out.A = P.src;
    auto g = G;
    auto p = P;
    out.obj = [g, p](const AObj& a) { return g.obj(p.obj(a)); };
    out.mor = [g, p](const AMor& f) { return g.mor(p.mor(f)); };
    return out;
}

MonadInstance identity_monad(BasePtr A, TargetPtr M) {
    MonadInstance T;
    T.name = "identity";
    T.A = A;
    T.M = M;
    T.T = [](const FunctorValue& F) { return F; };
    T.Tmap = [](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& x) { return a(x); };
    T.eta = [M](const FunctorValue& F, const AObj& x) { return M->identity(F.obj(x)); };
    T.mu = [M](const FunctorValue& F, const AObj& x) { return M->identity(F.obj(x)); };
    return T;
}

// ---------------------------------------------------------------- ThetaMonad

ThetaMonad::ThetaMonad(TargetPtr M, PnModule module, std::string name)
    : M_(std::move(M)), mod_(std::move(module)), name_(std::move(name)) {
    P_ = build_pn(mod_.n);
    P0_ = build_pn(0);
    L_ = build_lambda_n(mod_.n);
    phi_ = phi_n(P_, L_);
    corner_ = eta_corner(L_);
    preimage_.assign(L_.cat->num_objects(), -1);
    for (int U = 0; U <= P_.full(); ++U) preimage_[phi_.obj[U]] = U;
}

void ThetaMonad::ensure_double() {
    std::lock_guard<std::mutex> g(mu_lock_);
    if (double_ready_) return;
    S_ = make_product_setup(phi_, phi_);
    cap_ = intersection_functor(P_, S_.IJ);
    diamond_ = diamond_functor(L_, S_.AB);
    double_ready_ = true;
}

Diagram ThetaMonad::cube(const FunctorValue& F, const AObj& a) const {
    Diagram D;
    D.index = P_.cat;
    const auto& C = *P_.cat;
    for (int U = 0; U <= P_.full(); ++U) D.obj.push_back(F.obj(mod_.obj(a, U)));
    const AMor ida = mod_.A->identity(a);
    for (int m = 0; m < C.num_morphisms(); ++m) D.mor.push_back(F.mor(mod_.mor(ida, C.dom(m), C.cod(m))));
    return D;
}

std::shared_ptr<const ThetaMonad::Entry> ThetaMonad::entry(const FunctorValue& F, const AObj& a) {
    const std::string k = F.token + "@" + mod_.A->key(a);
    {
        std::lock_guard<std::mutex> g(mu_lock_);
        auto it = entries_.find(k);
        if (it != entries_.end()) return it->second;
    }
    auto e = std::make_shared<Entry>();
    e->cube = cube(F, a);
    e->ran = ran_phi_fast(*M_, phi_, e->cube);
    e->cc = M_->colimit(e->ran.ext);
    std::lock_guard<std::mutex> g(mu_lock_);
    return entries_.emplace(k, std::move(e)).first->second;
}

DiagramMap ThetaMonad::extend_map(const std::vector<Mor>& cube_components) const {
    DiagramMap out;
    const Mor idT = M_->identity(M_->terminal());
    for (int l = 0; l < L_.cat->num_objects(); ++l)
        out.comp.push_back(preimage_[l] >= 0 ? cube_components[preimage_[l]] : idT);
    return out;
}

FunctorValue ThetaMonad::T(const FunctorValue& F) {
    FunctorValue out;
    out.token = "T[" + name_ + "](" + F.token + ")";
    out.A = mod_.A;
    auto self = shared_from_this();
    out.obj = [self, F](const AObj& a) { return self->entry(F, a)->cc.apex; };
    out.mor = [self, F](const AMor& f) {
        std::vector<Mor> comps;
        for (int U = 0; U <= self->P_.full(); ++U) comps.push_back(F.mor(self->mod_.mor(f, U, U)));
        return colim_map(*self->M_, self->entry(F, f.dom)->cc, self->entry(F, f.cod)->cc, self->extend_map(comps));
    };
    return out;
}

Mor ThetaMonad::Tmap(const FunctorValue& F, const FunctorValue& G, const NatComp& a, const AObj& x) {
    std::vector<Mor> comps;
    for (int U = 0; U <= P_.full(); ++U) comps.push_back(a(mod_.obj(x, U)));
    return colim_map(*M_, entry(F, x)->cc, entry(G, x)->cc, extend_map(comps));
}

Mor ThetaMonad::eta(const FunctorValue& F, const AObj& x) {
    auto e = entry(F, x);
    ColimitCocone corner = M_->colimit(precompose(e->ran.ext, corner_));
    return restriction_map(*M_, corner_, corner, e->cc);
}

Mor ThetaMonad::mu(const FunctorValue& F, const AObj& x) {
    const std::string k = F.token + "@" + mod_.A->key(x);
    {
        std::lock_guard<std::mutex> g(mu_lock_);
        auto it = mus_.find(k);
        if (it != mus_.end()) return it->second;
    }
    Mor m = compute_mu(F, x);
    std::lock_guard<std::mutex> g(mu_lock_);
    return mus_.emplace(k, std::move(m)).first->second;
}

Mor ThetaMonad::compute_mu(const FunctorValue& F, const AObj& x) {
    ensure_double();
    const auto& M = *M_;
    auto e = entry(F, x);
    // the double cube (U, V) ↦ F(θ(x, U ∩ V))
    Diagram dbl = precompose(e->cube, cap_);
    RanResult R1 = ran_embedding_fast(M, S_.gxb, dbl);
    RanResult R2 = ran_embedding_fast(M, S_.ixb, dbl);
    ProductRanIso iso = product_ran_colimit_iso(M, S_, R1, R2);
    // the iterated extension must coincide with the one computed for T(TF)
    auto ett = entry(T(F), x);
    if (!(iso.ranH.ext == ett->ran.ext) || !(iso.target.apex == ett->cc.apex) || !(iso.target.legs == ett->cc.legs))
        throw std::logic_error("canonical representatives diverged for " + F.token);
    DiagramMap sigma = ran_transform(M, cap_, diamond_, S_.gxb, phi_, R1, e->ran);
    Mor collapse = ran_colimit_map(M, diamond_, sigma, R1.ext, iso.total, e->ran.ext, e->cc);
    return M.compose(collapse, iso.backward);
}

MonadInstance ThetaMonad::instance() {
    MonadInstance out;
    out.name = name_;
    out.A = mod_.A;
    out.M = M_;
    auto self = shared_from_this();
    out.T = [self](const FunctorValue& F) { return self->T(F); };
    out.Tmap = [self](const FunctorValue& F, const FunctorValue& G, const NatComp& a, const AObj& x) {
        return self->Tmap(F, G, a, x);
    };
    out.eta = [self](const FunctorValue& F, const AObj& x) { return self->eta(F, x); };
    out.mu = [self](const FunctorValue& F, const AObj& x) { return self->mu(F, x); };
    return out;
}

// ---------------------------------------------------------------- laws

void LawResult::record(bool ok, const std::function<nlohmann::json()>& witness) {
    ++checks;
    if (ok) return;
    ++failures;
    if (static_cast<int>(witnesses.size()) < kMaxWitnesses) witnesses.push_back(witness());
}

bool LawReport::pass() const { return failures() == 0; }

int LawReport::failures() const {
    int f = 0;
    for (const auto& l : laws) f += l.failures;
    return f;
}

namespace {

nlohmann::json mismatch(const BaseCategory& A, const std::string& F, const AObj& x, const Mor& lhs, const Mor& rhs) {
    return {{"functor", F}, {"object", A.obj_json(x)}, {"lhs", mor_to_json(lhs)}, {"rhs", mor_to_json(rhs)}};
}

// Runs f, turning an exception into a failed check with the message as witness.
void guarded(LawResult& r, const std::function<void()>& f) {
    try {
        f();
    } catch (const std::bad_alloc&) {
        throw;  // resource exhaustion is not a law failure
    } catch (const std::exception& e) {
        std::string msg = e.what();
        r.record(false, [&] { return nlohmann::json{{"error", msg}}; });
    }
}

}  // namespace

LawReport verify_monad(const MonadInstance& T, const std::vector<FunctorValue>& functors,
                       const std::vector<AObj>& objects, const std::vector<AMor>& morphisms,
                       const std::vector<NatSample>& transformations) {
    const auto& M = *T.M;
    const auto& A = *T.A;
    LawResult unit_left{"unit_left"}, unit_right{"unit_right"}, assoc{"associativity"};
    LawResult T_functor{"T_functorial"}, eta_a{"eta_natural_in_object"}, mu_a{"mu_natural_in_object"};
    LawResult eta_F{"eta_natural_in_functor"}, mu_F{"mu_natural_in_functor"};
    for (const auto& F : functors) {
        const FunctorValue TF = T.T(F);
        const FunctorValue TTF = T.T(TF);
        NatComp etaF = [&](const AObj& y) { return T.eta(F, y); };
        NatComp muF = [&](const AObj& y) { return T.mu(F, y); };
        for (const auto& x : objects) {
            guarded(unit_left, [&] {
                Mor lhs = M.compose(T.mu(F, x), T.eta(TF, x));
                Mor rhs = M.identity(TF.obj(x));
                unit_left.record(lhs == rhs, [&] { return mismatch(A, F.token, x, lhs, rhs); });
            });
            guarded(unit_right, [&] {
                Mor lhs = M.compose(T.mu(F, x), T.Tmap(F, TF, etaF, x));
                Mor rhs = M.identity(TF.obj(x));
                unit_right.record(lhs == rhs, [&] { return mismatch(A, F.token, x, lhs, rhs); });
            });
            guarded(assoc, [&] {
                Mor lhs = M.compose(T.mu(F, x), T.mu(TF, x));
                Mor rhs = M.compose(T.mu(F, x), T.Tmap(TTF, TF, muF, x));
                assoc.record(lhs == rhs, [&] { return mismatch(A, F.token, x, lhs, rhs); });
            });
            guarded(T_functor, [&] {
                Mor lhs = TF.mor(A.identity(x));
                Mor rhs = M.identity(TF.obj(x));
                T_functor.record(lhs == rhs, [&] { return mismatch(A, F.token, x, lhs, rhs); });
            });
        }
        for (size_t i = 0; i < morphisms.size(); ++i) {
            const AMor& f = morphisms[i];
            guarded(eta_a, [&] {
                Mor lhs = M.compose(TF.mor(f), T.eta(F, f.dom));
                Mor rhs = M.compose(T.eta(F, f.cod), F.mor(f));
                eta_a.record(lhs == rhs, [&] { return mismatch(A, F.token, f.dom, lhs, rhs); });
            });
            guarded(mu_a, [&] {
                Mor lhs = M.compose(TF.mor(f), T.mu(F, f.dom));
                Mor rhs = M.compose(T.mu(F, f.cod), TTF.mor(f));
                mu_a.record(lhs == rhs, [&] { return mismatch(A, F.token, f.dom, lhs, rhs); });
            });
            for (size_t j = 0; j < morphisms.size(); ++j) {
                const AMor& g = morphisms[j];
                if (!(g.dom == f.cod)) continue;
                guarded(T_functor, [&] {
                    Mor lhs = TF.mor(A.compose(g, f));
                    Mor rhs = M.compose(TF.mor(g), TF.mor(f));
                    T_functor.record(lhs == rhs, [&] { return mismatch(A, F.token, f.dom, lhs, rhs); });
                });
            }
        }
    }
    for (const auto& s : transformations) {
        const FunctorValue TF = T.T(s.F), TG = T.T(s.G);
        NatComp Ta = [&](const AObj& y) { return T.Tmap(s.F, s.G, s.a, y); };
        for (const auto& x : objects) {
            guarded(eta_F, [&] {
                Mor lhs = M.compose(T.Tmap(s.F, s.G, s.a, x), T.eta(s.F, x));
                Mor rhs = M.compose(T.eta(s.G, x), s.a(x));
                eta_F.record(lhs == rhs, [&] { return mismatch(A, s.name, x, lhs, rhs); });
            });
            guarded(mu_F, [&] {
                Mor lhs = M.compose(T.Tmap(s.F, s.G, s.a, x), T.mu(s.F, x));
                Mor rhs = M.compose(T.mu(s.G, x), T.Tmap(TF, TG, Ta, x));
                mu_F.record(lhs == rhs, [&] { return mismatch(A, s.name, x, lhs, rhs); });
            });
        }
    }
    LawReport rep;
    rep.laws = {unit_left, unit_right, assoc, T_functor, eta_a, mu_a};
    if (!transformations.empty()) {
        rep.laws.push_back(eta_F);
        rep.laws.push_back(mu_F);
    }
    return rep;
}

// ---------------------------------------------------------------- monad morphisms

LawReport verify_monad_morphism(const MonadMorphism& m, const std::vector<FunctorValue>& functors,
                                const std::vector<AObj>& objects) {
    const auto& M = *m.outer.M;
    const auto& A = *m.outer.A;
    LawResult unit{"morphism_unit"}, mult{"morphism_multiplication"};
    for (const auto& G : functors) {
        const FunctorValue FG = m.F(G);
        const FunctorValue TG = m.inner.T(G);
        const FunctorValue TTG = m.inner.T(TG);
        const FunctorValue FTG = m.F(TG);
        const FunctorValue SFG = m.outer.T(FG);
        NatComp etaG = [&](const AObj& y) { return m.inner.eta(G, y); };
        NatComp muG = [&](const AObj& y) { return m.inner.mu(G, y); };
        NatComp alphaG = [&](const AObj& y) { return m.alpha(G, y); };
        for (const auto& x : objects) {
            guarded(unit, [&] {
                Mor lhs = M.compose(m.alpha(G, x), m.outer.eta(FG, x));
                Mor rhs = m.Fmap(G, TG, etaG, x);
                unit.record(lhs == rhs, [&] { return mismatch(A, G.token, x, lhs, rhs); });
            });
            guarded(mult, [&] {
                Mor lhs = M.compose(m.alpha(G, x), m.outer.mu(FG, x));
                Mor rhs = comp_all(M, {m.Fmap(TTG, TG, muG, x), m.alpha(TG, x), m.outer.Tmap(SFG, FTG, alphaG, x)});
                mult.record(lhs == rhs, [&] { return mismatch(A, G.token, x, lhs, rhs); });
            });
        }
    }
    LawReport rep;
    rep.laws = {unit, mult};
    return rep;
}

MonadMorphism identity_monad_morphism(const MonadInstance& T) {
    MonadMorphism m;
    m.name = "id[" + T.name + "]";
    m.outer = T;
    m.inner = T;
    m.F = [](const FunctorValue& G) { return G; };
    m.Fmap = [](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& x) { return a(x); };
    auto M = T.M;
    auto TT = T.T;
    m.alpha = [M, TT](const FunctorValue& G, const AObj& x) { return M->identity(TT(G).obj(x)); };
    return m;
}

MonadMorphism compose_identity_morphisms(const MonadMorphism& second, const MonadMorphism& first) {
    MonadMorphism m;
    m.name = second.name + "*" + first.name;
    m.outer = first.outer;
    m.inner = second.inner;
    m.F = [](const FunctorValue& G) { return G; };
    m.Fmap = [](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& x) { return a(x); };
    auto M = first.outer.M;
    auto a1 = first.alpha, a2 = second.alpha;
    m.alpha = [M, a1, a2](const FunctorValue& G, const AObj& x) { return M->compose(a2(G, x), a1(G, x)); };
    return m;
}

std::vector<std::string> validate_module_functor(const BaseFunctor& F, const PnModule& A, const PnModule& B,
                                                 const SampleBudget& b) {
    std::vector<std::string> out;
    if (A.n != B.n) return {"modules act by different posets"};
    Rng r(b.seed);
    const int full = (1 << A.n) - 1;
    const auto& src = *F.src;
    auto objs = src.objects();
    auto pick = [&] { return src.enumerable() ? objs[r.uniform(0, static_cast<int>(objs.size()) - 1)] : src.random_object(r); };
    for (int t = 0; t < b.objects && out.size() < 20; ++t) {
        AObj a = pick();
        for (int U = 0; U <= full; ++U)
            if (!(F.obj(A.obj(a, U)) == B.obj(F.obj(a), U)))
                out.push_back("object square fails at " + src.key(a) + " U=" + std::to_string(U));
    }
    for (int t = 0; t < b.morphisms && out.size() < 20; ++t) {
        AObj x = pick(), y = pick();
        AMor f;
        if (src.enumerable()) {
            auto hs = src.hom(x, y);
            if (hs.empty()) continue;
            f = hs[r.uniform(0, static_cast<int>(hs.size()) - 1)];
        } else {
            f = src.random_morphism(r, x, y);
        }
        const int U = r.uniform(0, full);
        const int V = U | r.uniform(0, full);
        if (!(F.mor(A.mor(f, U, V)) == B.mor(F.mor(f), U, V)))
            out.push_back("morphism square fails at " + src.key(x) + " U=" + std::to_string(U) + " V=" + std::to_string(V));
    }
    return out;
}

MonadMorphism monad_functor_on_module_morphism(const BaseFunctor& P, std::shared_ptr<ThetaMonad> TA,
                                               std::shared_ptr<ThetaMonad> TB) {
    MonadMorphism m;
    m.name = P.name + "^*";
    m.outer = TA->instance();
    m.inner = TB->instance();
    m.F = [P](const FunctorValue& G) { return precompose(G, P); };
    m.Fmap = [P](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& x) { return a(P.obj(x)); };
    m.alpha = [P, TA, TB](const FunctorValue& G, const AObj& x) {
        auto ea = TA->entry(precompose(G, P), x);
        auto eb = TB->entry(G, P.obj(x));
        if (!(ea->ran.ext == eb->ran.ext))
            throw std::logic_error("extended diagrams differ under " + P.name + " at " + TA->module().A->key(x));
        return TA->target().identity(ea->cc.apex);
    };
    return m;
}

void check_strict_monoidal(const TableFunctor& g, const PosetPn& Pm, const PosetPn& Pn) {
    for (int U = 0; U <= Pm.full(); ++U)
        for (int V = 0; V <= Pm.full(); ++V)
            if (g.obj[U & V] != (g.obj[U] & g.obj[V])) throw std::invalid_argument("g does not preserve intersections");
    if (g.obj[0] != 0) throw std::invalid_argument("g does not preserve the empty set");
    // without this g*θ is not unital
    if (g.obj[Pm.full()] != Pn.full()) throw std::invalid_argument("g does not preserve the whole set");
}

PnModule restrict_module(const TableFunctor& g, const PosetPn& Pm, const PosetPn& Pn, const PnModule& theta) {
    if (theta.n != Pn.n) throw std::invalid_argument("restrict_module: poset mismatch");
    check_strict_monoidal(g, Pm, Pn);
    PnModule out;
    out.A = theta.A;
    out.n = Pm.n;
    out.name = "restricted(" + theta.name + ")";
    auto go = g.obj;
    auto th = theta;
    out.obj = [go, th](const AObj& a, int U) { return th.obj(a, go[U]); };
    out.mor = [go, th](const AMor& f, int U, int V) { return th.mor(f, go[U], go[V]); };
    return out;
}

MonadMorphism induced_monad_morphism(const TableFunctor& g, std::shared_ptr<ThetaMonad> restricted,
                                     std::shared_ptr<ThetaMonad> full) {
    auto gh = std::make_shared<TableFunctor>(
        g_hat(g, restricted->poset(), full->poset(), restricted->lambda(), full->lambda()));
    MonadMorphism m;
    m.name = "induced";
    m.outer = restricted->instance();
    m.inner = full->instance();
    m.F = [](const FunctorValue& G) { return G; };
    m.Fmap = [](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& x) { return a(x); };
    m.alpha = [g, gh, restricted, full](const FunctorValue& G, const AObj& x) {
        const auto& M = full->target();
        auto es = restricted->entry(G, x);
        auto et = full->entry(G, x);
        if (!(es->cube == precompose(et->cube, g))) throw std::logic_error("restricted cube differs from χ∘g");
        DiagramMap sigma = ran_transform(M, g, *gh, restricted->phi(), full->phi(), es->ran, et->ran);
        return ran_colimit_map(M, *gh, sigma, es->ran.ext, es->cc, et->ran.ext, et->cc);
    };
    return m;
}

// ---------------------------------------------------------------- adjunctions

std::vector<std::string> validate_base_adjunction(const BaseAdjunction& adj, const SampleBudget& b) {
    std::vector<std::string> out;
    Rng r(b.seed);
    const auto& D = *adj.Q.src;
    const auto& C = *adj.Q.dst;
    auto dobjs = D.objects(), cobjs = C.objects();
    auto pickD = [&] { return D.enumerable() ? dobjs[r.uniform(0, static_cast<int>(dobjs.size()) - 1)] : D.random_object(r); };
    auto pickC = [&] { return C.enumerable() ? cobjs[r.uniform(0, static_cast<int>(cobjs.size()) - 1)] : C.random_object(r); };
    for (int t = 0; t < b.objects && out.size() < 20; ++t) {
        AObj d = pickD();
        AObj c = pickC();
        // ε_{Q d} ∘ Q(u_d) = id, P(ε_c) ∘ u_{P c} = id
        if (!(C.compose(adj.counit(adj.Q.obj(d)), adj.Q.mor(adj.unit(d))) == C.identity(adj.Q.obj(d))))
            out.push_back("left triangle fails at " + D.key(d));
        if (!(D.compose(adj.P.mor(adj.counit(c)), adj.unit(adj.P.obj(c))) == D.identity(adj.P.obj(c))))
            out.push_back("right triangle fails at " + C.key(c));
    }
    if (!D.enumerable()) {
        for (int t = 0; t < b.morphisms && out.size() < 20; ++t) {
            AObj x = pickD(), y = pickD();
            AMor f = D.random_morphism(r, x, y);
            if (!(D.compose(adj.P.mor(adj.Q.mor(f)), adj.unit(x)) == D.compose(adj.unit(y), f)))
                out.push_back("unit not natural at " + D.key(x));
        }
    }
    if (!C.enumerable()) {
        for (int t = 0; t < b.morphisms && out.size() < 20; ++t) {
            AObj x = pickC(), y = pickC();
            AMor f = C.random_morphism(r, x, y);
            if (!(C.compose(f, adj.counit(x)) == C.compose(adj.counit(y), adj.Q.mor(adj.P.mor(f)))))
                out.push_back("counit not natural at " + C.key(x));
        }
    }
    return out;
}

FunAdjunction precomposition_adjunction(const BaseAdjunction& adj) {
    FunAdjunction out;
    out.name = adj.P.name + "^* -| " + adj.Q.name + "^*";
    out.D = adj.Q.src;
    out.C = adj.Q.dst;
    auto P = adj.P, Q = adj.Q;
    auto u = adj.unit;
    auto e = adj.counit;
    out.L = [P](const FunctorValue& G) { return precompose(G, P); };
    out.R = [Q](const FunctorValue& H) { return precompose(H, Q); };
    out.Lmap = [P](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& c) { return a(P.obj(c)); };
    out.Rmap = [Q](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& d) { return a(Q.obj(d)); };
    out.unit = [u](const FunctorValue& G, const AObj& d) { return G.mor(u(d)); };
    out.counit = [e](const FunctorValue& H, const AObj& c) { return H.mor(e(c)); };
    return out;
}

std::vector<std::string> validate_fun_adjunction(const ComputableCategory& M, const FunAdjunction& adj,
                                                 const std::vector<FunctorValue>& Gs,
                                                 const std::vector<FunctorValue>& Hs, const std::vector<AObj>& ds,
                                                 const std::vector<AObj>& cs) {
    std::vector<std::string> out;
    for (const auto& H : Hs) {
        const FunctorValue RH = adj.R(H), LRH = adj.L(RH);
        NatComp epsH = [&](const AObj& c) { return adj.counit(H, c); };
        for (const auto& d : ds) {
            Mor lhs = M.compose(adj.Rmap(LRH, H, epsH, d), adj.unit(RH, d));
            if (!(lhs == M.identity(RH.obj(d)))) out.push_back("R-triangle fails for " + H.token + " at " + adj.D->key(d));
        }
    }
    for (const auto& G : Gs) {
        const FunctorValue LG = adj.L(G), RLG = adj.R(LG);
        NatComp uG = [&](const AObj& d) { return adj.unit(G, d); };
        for (const auto& c : cs) {
            Mor lhs = M.compose(adj.counit(LG, c), adj.Lmap(G, RLG, uG, c));
            if (!(lhs == M.identity(LG.obj(c)))) out.push_back("L-triangle fails for " + G.token + " at " + adj.C->key(c));
        }
    }
    return out;
}

MonadInstance composite_monad(const FunAdjunction& adj, const MonadInstance& T) {
    MonadInstance out;
    out.name = "R(" + T.name + ")L";
    out.A = adj.D;
    out.M = T.M;
    auto M = T.M;
    out.T = [adj, T](const FunctorValue& G) { return adj.R(T.T(adj.L(G))); };
    out.Tmap = [adj, T](const FunctorValue& G, const FunctorValue& G2, const NatComp& a, const AObj& d) {
        const FunctorValue LG = adj.L(G), LG2 = adj.L(G2);
        NatComp La = [&](const AObj& c) { return adj.Lmap(G, G2, a, c); };
        NatComp TLa = [&](const AObj& c) { return T.Tmap(LG, LG2, La, c); };
        return adj.Rmap(T.T(LG), T.T(LG2), TLa, d);
    };
    out.eta = [adj, T, M](const FunctorValue& G, const AObj& d) {
        const FunctorValue LG = adj.L(G);
        NatComp etaLG = [&](const AObj& c) { return T.eta(LG, c); };
        return M->compose(adj.Rmap(LG, T.T(LG), etaLG, d), adj.unit(G, d));
    };
    out.mu = [adj, T, M](const FunctorValue& G, const AObj& d) {
        const FunctorValue LG = adj.L(G);
        const FunctorValue TLG = T.T(LG);
        const FunctorValue LRTLG = adj.L(adj.R(TLG));
        NatComp epsTLG = [&](const AObj& c) { return adj.counit(TLG, c); };
        NatComp step = [&](const AObj& c) {
            return M->compose(T.mu(LG, c), T.Tmap(LRTLG, TLG, epsTLG, c));
        };
        return adj.Rmap(T.T(LRTLG), TLG, step, d);
    };
    return out;
}

LawReport check_beta_hypotheses(const BetaData& data, const std::vector<FunctorValue>& Gs,
                                const std::vector<FunctorValue>& Hs, const std::vector<AObj>& ds,
                                const std::vector<AObj>& bs) {
    const auto& M = *data.alpha.outer.M;
    const auto& in = data.inner_adj;
    const auto& ou = data.outer_adj;
    LawResult h1{"counit_compatibility"}, h2{"unit_compatibility"};
    for (const auto& H : Hs) {
        const FunctorValue FH = data.alpha.F(H);
        const FunctorValue RH = in.R(H), LRH = in.L(RH), RFH = ou.R(FH);
        NatComp tauRH = [&](const AObj& d) { return data.tauR(H, d); };
        NatComp epsH = [&](const AObj& a) { return in.counit(H, a); };
        for (const auto& b : bs) {
            guarded(h1, [&] {
                Mor lhs = comp_all(M, {data.alpha.Fmap(LRH, H, epsH, b), data.tauL(RH, b), ou.Lmap(RFH, RH, tauRH, b)});
                Mor rhs = ou.counit(FH, b);
                h1.record(lhs == rhs, [&] { return mismatch(*ou.C, H.token, b, lhs, rhs); });
            });
        }
    }
    for (const auto& G : Gs) {
        const FunctorValue LG = in.L(G), FLG = data.alpha.F(LG), LpG = ou.L(G);
        NatComp tauLG = [&](const AObj& b) { return data.tauL(G, b); };
        for (const auto& d : ds) {
            guarded(h2, [&] {
                Mor lhs = comp_all(M, {data.tauR(LG, d), ou.Rmap(LpG, FLG, tauLG, d), ou.unit(G, d)});
                Mor rhs = in.unit(G, d);
                h2.record(lhs == rhs, [&] { return mismatch(*in.D, G.token, d, lhs, rhs); });
            });
        }
    }
    LawReport rep;
    rep.laws = {h1, h2};
    return rep;
}

MonadMorphism beta_morphism(const BetaData& data) {
    MonadMorphism m;
    m.name = "beta";
    m.outer = composite_monad(data.outer_adj, data.alpha.outer);
    m.inner = composite_monad(data.inner_adj, data.alpha.inner);
    m.F = [](const FunctorValue& G) { return G; };
    m.Fmap = [](const FunctorValue&, const FunctorValue&, const NatComp& a, const AObj& x) { return a(x); };
    auto M = data.alpha.outer.M;
    m.alpha = [data, M](const FunctorValue& G, const AObj& d) {
        const auto& in = data.inner_adj;
        const auto& ou = data.outer_adj;
        const auto& Tp = data.alpha.outer;
        const auto& T = data.alpha.inner;
        const FunctorValue LG = in.L(G), TLG = T.T(LG), FLG = data.alpha.F(LG), LpG = ou.L(G);
        NatComp tauLG = [&](const AObj& b) { return data.tauL(G, b); };
        NatComp Tp_tauLG = [&](const AObj& b) { return Tp.Tmap(LpG, FLG, tauLG, b); };
        NatComp alphaLG = [&](const AObj& b) { return data.alpha.alpha(LG, b); };
        Mor s1 = ou.Rmap(Tp.T(LpG), Tp.T(FLG), Tp_tauLG, d);
        Mor s2 = ou.Rmap(Tp.T(FLG), data.alpha.F(TLG), alphaLG, d);
        Mor s3 = data.tauR(TLG, d);
        return M->compose_all({s3, s2, s1});
    };
    return m;
}

nlohmann::json law_report_to_json(const LawReport& r) {
    nlohmann::json laws = nlohmann::json::object();
    for (const auto& l : r.laws) {
        laws[l.law] = {{"checks", l.checks}, {"failures", l.failures}, {"witnesses", l.witnesses}};
    }
    return {{"pass", r.pass()}, {"failures", r.failures()}, {"laws", laws}};
}

}  // namespace pnm
