#include "pnm/pnmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace pnm {

namespace {

constexpr size_t kMaxReported = 20;

struct Samples {
    std::vector<AObj> objs;
    std::vector<AMor> mors;
    std::vector<std::pair<AMor, AMor>> pairs;  // (g, f) with g ∘ f defined
};

Samples collect(const BaseCategory& A, const SampleBudget& b) {
    Samples s;
    if (A.enumerable()) {
        s.objs = A.objects();
        for (const auto& x : s.objs)
            for (const auto& y : s.objs)
                for (auto& f : A.hom(x, y)) s.mors.push_back(f);
        for (const auto& f : s.mors)
            for (const auto& g : s.mors)
                if (g.dom == f.cod) s.pairs.emplace_back(g, f);
        return s;
    }
    Rng r(b.seed);
    for (int i = 0; i < b.objects; ++i) s.objs.push_back(A.random_object(r));
    for (int i = 0; i < b.morphisms; ++i) {
        AObj x = A.random_object(r), y = A.random_object(r), z = A.random_object(r);
        AMor f = A.random_morphism(r, x, y);
        AMor g = A.random_morphism(r, y, z);
        s.mors.push_back(f);
        s.pairs.emplace_back(g, f);
    }
    return s;
}

std::vector<std::pair<int, int>> inclusions(int n) {
    std::vector<std::pair<int, int>> out;
    for (int U = 0; U < (1 << n); ++U)
        for (int V = 0; V < (1 << n); ++V)
            if ((U & V) == U) out.emplace_back(U, V);
    return out;
}

class Reporter {
public:
    explicit Reporter(std::vector<std::string>& out) : out_(out) {}
    void check(bool ok, const std::function<std::string()>& msg) {
        if (!ok && out_.size() < kMaxReported) out_.push_back(msg());
    }
    template <class F>
    void guard(F&& f, const std::string& where) {
        try {
            f();
        } catch (const std::exception& e) {
            if (out_.size() < kMaxReported) out_.push_back(where + ": " + e.what());
        }
    }

private:
    std::vector<std::string>& out_;
};

std::string sub(int U, int n) { return mask_name(U, n); }

}  // namespace

std::vector<std::string> validate_module(const PnModule& M, const SampleBudget& b) {
    std::vector<std::string> out;
    Reporter R(out);
    const auto& A = *M.A;
    const int n = M.n, full = (1 << n) - 1;
    Samples s = collect(A, b);
    auto incl = inclusions(n);
    for (const auto& a : s.objs) {
        R.guard([&] {
            R.check(M.obj(a, full) == a, [&] { return "unit fails at " + A.obj_json(a).dump(); });
            for (int U = 0; U <= full; ++U) {
                AObj x = M.obj(a, U);
                R.check(M.mor(A.identity(a), U, U) == A.identity(x),
                        [&] { return "identity not preserved at " + A.obj_json(a).dump() + ", " + sub(U, n); });
                for (int V = 0; V <= full; ++V)
                    R.check(M.obj(x, V) == M.obj(a, U & V), [&] {
                        return "associativity fails at " + A.obj_json(a).dump() + ", " + sub(U, n) + ", " + sub(V, n);
                    });
            }
        }, "object " + A.obj_json(a).dump());
    }
    for (const auto& f : s.mors) {
        R.guard([&] {
            R.check(M.mor(f, full, full) == f, [&] { return "unit fails at morphism " + A.mor_json(f).dump(); });
            for (auto [U, U2] : incl) {
                AMor m = M.mor(f, U, U2);
                R.check(m.dom == M.obj(f.dom, U) && m.cod == M.obj(f.cod, U2),
                        [&] { return "ill-typed action at " + A.mor_json(f).dump(); });
                for (auto [V, V2] : incl)
                    R.check(M.mor(m, V, V2) == M.mor(f, U & V, U2 & V2), [&] {
                        return "associativity fails at morphism " + A.mor_json(f).dump() + ", " + sub(U, n) + "<=" +
                               sub(U2, n) + ", " + sub(V, n) + "<=" + sub(V2, n);
                    });
            }
        }, "morphism " + A.mor_json(f).dump());
    }
    for (const auto& [g, f] : s.pairs) {
        R.guard([&] {
            AMor gf = A.compose(g, f);
            for (auto [U, V] : incl)
                for (int W = 0; W <= full; ++W)
                    if ((V & W) == V)
                        R.check(A.compose(M.mor(g, V, W), M.mor(f, U, V)) == M.mor(gf, U, W), [&] {
                            return "functoriality fails at " + A.mor_json(g).dump() + " o " + A.mor_json(f).dump();
                        });
        }, "composable pair");
    }
    return out;
}

PnModule trivial_module(BasePtr A, int n) {
    PnModule M;
    M.A = A;
    M.n = n;
    M.name = "trivial";
    M.obj = [](const AObj& a, int) { return a; };
    M.mor = [](const AMor& f, int U, int V) {
        if ((U & V) != U) throw std::invalid_argument("module action: U is not contained in V");
        return f;
    };
    return M;
}

PnModule theta_n(std::shared_ptr<const ProductBase> A) {
    PnModule M;
    M.A = A;
    M.n = A->arity();
    M.name = "theta^" + std::to_string(M.n);
    const ComputableCategory& T = A->target();
    const int k = A->arity();
    M.obj = [A, &T, k](const AObj& a, int U) {
        AObj b = a;
        for (int i = 0; i < k; ++i)
            if (!(U >> i & 1)) b.c[i] = T.initial().n;
        return b;
    };
    M.mor = [A, &T, k, obj = M.obj](const AMor& f, int U, int V) {
        if ((U & V) != U) throw std::invalid_argument("module action: U is not contained in V");
        std::vector<Mor> ps;
        for (int i = 0; i < k; ++i) {
            if (U >> i & 1)
                ps.push_back(f.parts[i]);
            else if (V >> i & 1)
                ps.push_back(T.from_initial(Obj{f.parts[i].cod}));
            else
                ps.push_back(T.identity(T.initial()));
        }
        return A->make(obj(f.dom, U), obj(f.cod, V), ps);
    };
    return M;
}

std::vector<std::string> validate_comonads(const ComonadSet& Ks, const SampleBudget& b) {
    std::vector<std::string> out;
    Reporter R(out);
    const auto& A = *Ks.A;
    Samples s = collect(A, b);
    for (size_t j = 0; j < Ks.K.size(); ++j) {
        const Comonad& K = Ks.K[j];
        const std::string nm = K.name.empty() ? "K" + std::to_string(j + 1) : K.name;
        for (const auto& a : s.objs)
            R.guard([&] {
                AObj ka = K.obj(a);
                AMor e = K.counit(a);
                R.check(K.obj(ka) == ka, [&] { return nm + " not idempotent at " + A.obj_json(a).dump(); });
                R.check(e.dom == ka && e.cod == a, [&] { return nm + " counit ill-typed at " + A.obj_json(a).dump(); });
                R.check(K.mor(A.identity(a)) == A.identity(ka), [&] { return nm + " does not preserve identities"; });
                R.check(K.counit(ka) == A.identity(ka), [&] { return nm + ": counit at K(a) is not the identity"; });
                R.check(K.mor(e) == A.identity(ka), [&] { return nm + ": K(counit) is not the identity"; });
                for (size_t i = 0; i < Ks.K.size(); ++i)
                    R.check(Ks.K[i].obj(ka) == K.obj(Ks.K[i].obj(a)),
                            [&] { return nm + " does not commute with K" + std::to_string(i + 1); });
            }, nm + " at object");
        for (const auto& f : s.mors)
            R.guard([&] {
                AMor kf = K.mor(f);
                R.check(K.mor(kf) == kf, [&] { return nm + " not idempotent on " + A.mor_json(f).dump(); });
                R.check(A.compose(f, K.counit(f.dom)) == A.compose(K.counit(f.cod), kf),
                        [&] { return nm + " counit not natural at " + A.mor_json(f).dump(); });
                for (size_t i = 0; i < Ks.K.size(); ++i)
                    R.check(Ks.K[i].mor(kf) == K.mor(Ks.K[i].mor(f)),
                            [&] { return nm + " does not commute with K" + std::to_string(i + 1) + " on morphisms"; });
            }, nm + " at morphism");
        for (const auto& [g, f] : s.pairs)
            R.guard([&] {
                R.check(K.mor(A.compose(g, f)) == A.compose(K.mor(g), K.mor(f)),
                        [&] { return nm + " does not preserve composition"; });
            }, nm + " at composable pair");
    }
    return out;
}

ComonadSet module_to_comonads(const PnModule& M) {
    ComonadSet Ks;
    Ks.A = M.A;
    const int full = (1 << M.n) - 1;
    for (int j = 0; j < M.n; ++j) {
        const int W = full & ~(1 << j);
        Comonad K;
        K.name = "K" + std::to_string(j + 1);
        K.obj = [M, W](const AObj& a) { return M.obj(a, W); };
        K.mor = [M, W](const AMor& f) { return M.mor(f, W, W); };
        K.counit = [M, W, full](const AObj& a) { return M.mor(M.A->identity(a), W, full); };
        Ks.K.push_back(std::move(K));
    }
    return Ks;
}

PnModule comonads_to_module(const ComonadSet& Ks) {
    PnModule M;
    M.A = Ks.A;
    M.n = static_cast<int>(Ks.K.size());
    M.name = "from comonads";
    const int n = M.n;
    auto ks = Ks.K;
    // K_{j1} ∘ ... ∘ K_{jk} over the set bits of C, the smallest index outermost
    auto apply_obj = [ks, n](int C, AObj a) {
        for (int j = n - 1; j >= 0; --j)
            if (C >> j & 1) a = ks[j].obj(a);
        return a;
    };
    auto apply_mor = [ks, n](int C, AMor f) {
        for (int j = n - 1; j >= 0; --j)
            if (C >> j & 1) f = ks[j].mor(f);
        return f;
    };
    // composite counit K_C(b) -> b
    auto counit = [ks, n, A = Ks.A, apply_obj](int C, const AObj& b) {
        AMor acc = A->identity(apply_obj(C, b));
        // peel the outermost factor first
        int rest = C;
        for (int j = 0; j < n; ++j)
            if (rest >> j & 1) {
                rest &= ~(1 << j);
                acc = A->compose(ks[j].counit(apply_obj(rest, b)), acc);
            }
        return acc;
    };
    const int full = (1 << n) - 1;
    M.obj = [apply_obj, full](const AObj& a, int U) { return apply_obj(full & ~U, a); };
    M.mor = [A = Ks.A, apply_mor, counit, full](const AMor& f, int U, int V) {
        if ((U & V) != U) throw std::invalid_argument("module action: U is not contained in V");
        AMor first = apply_mor(full & ~U, f);
        AMor second = apply_mor(full & ~V, counit(V & ~U, f.cod));
        return A->compose(second, first);
    };
    return M;
}

Comparison compare_modules(const PnModule& X, const PnModule& Y, const SampleBudget& b) {
    Comparison c;
    if (X.n != Y.n) {
        c.mismatches.push_back("different n");
        return c;
    }
    Reporter R(c.mismatches);
    const auto& A = *X.A;
    Samples s = collect(A, b);
    for (const auto& a : s.objs)
        for (int U = 0; U < (1 << X.n); ++U) {
            ++c.points;
            R.guard([&] {
                R.check(X.obj(a, U) == Y.obj(a, U), [&] { return "objects differ at " + A.obj_json(a).dump() + ", " + sub(U, X.n); });
            }, "object");
        }
    for (const auto& f : s.mors)
        for (auto [U, V] : inclusions(X.n)) {
            ++c.points;
            R.guard([&] {
                R.check(X.mor(f, U, V) == Y.mor(f, U, V), [&] {
                    return "morphisms differ at " + A.mor_json(f).dump() + ", " + sub(U, X.n) + "<=" + sub(V, X.n);
                });
            }, "morphism");
        }
    return c;
}

Comparison compare_comonads(const ComonadSet& X, const ComonadSet& Y, const SampleBudget& b) {
    Comparison c;
    if (X.K.size() != Y.K.size()) {
        c.mismatches.push_back("different number of comonads");
        return c;
    }
    Reporter R(c.mismatches);
    const auto& A = *X.A;
    Samples s = collect(A, b);
    for (size_t j = 0; j < X.K.size(); ++j) {
        for (const auto& a : s.objs) {
            ++c.points;
            R.guard([&] {
                R.check(X.K[j].obj(a) == Y.K[j].obj(a) && X.K[j].counit(a) == Y.K[j].counit(a),
                        [&] { return "comonad " + std::to_string(j + 1) + " differs at " + A.obj_json(a).dump(); });
            }, "object");
        }
        for (const auto& f : s.mors) {
            ++c.points;
            R.guard([&] {
                R.check(X.K[j].mor(f) == Y.K[j].mor(f),
                        [&] { return "comonad " + std::to_string(j + 1) + " differs at " + A.mor_json(f).dump(); });
            }, "morphism");
        }
    }
    return c;
}

std::shared_ptr<const TableBase> table_base(const CatPtr& C) { return std::make_shared<TableBase>(C); }

Comonad as_comonad(const TableComonad& K) {
    auto B = table_base(K.K.src);
    Comonad c;
    c.name = "K";
    c.obj = [B, F = K.K](const AObj& a) { return B->obj(F.obj[a.c[0]]); };
    c.mor = [B, F = K.K](const AMor& f) { return B->mor(F.mor[f.id]); };
    c.counit = [B, e = K.eps](const AObj& a) { return B->mor(e.comp[a.c[0]]); };
    return c;
}

std::vector<std::string> validate_table_comonad(const TableComonad& K) {
    std::vector<std::string> out = validate_functor(K.K);
    if (!out.empty()) return out;
    const auto& C = *K.K.src;
    if (K.K.src != K.K.dst) out.push_back("comonad is not an endofunctor");
    for (auto& s : validate_nat(K.eps)) out.push_back("counit: " + s);
    if (!functor_equal(K.eps.src, K.K) || !functor_equal(K.eps.dst, identity_functor(K.K.src)))
        out.push_back("counit has the wrong endpoints");
    if (!out.empty()) return out;
    if (!functor_equal(compose_functors(K.K, K.K), K.K)) out.push_back("not idempotent");
    for (int a = 0; a < C.num_objects(); ++a) {
        int ka = K.K.obj[a];
        if (K.eps.comp[ka] != C.identity(ka)) out.push_back("counit at K(" + C.object_name(a) + ") is not the identity");
        if (K.K.mor[K.eps.comp[a]] != C.identity(ka)) out.push_back("K(counit) at " + C.object_name(a) + " is not the identity");
    }
    return out;
}

CatPtr full_subcategory(const CatPtr& C, const std::vector<int>& objects, TableFunctor* incl) {
    RawTable t;
    std::vector<int> pos(C->num_objects(), -1);
    for (size_t i = 0; i < objects.size(); ++i) {
        pos[objects[i]] = static_cast<int>(i);
        t.objects.push_back(C->object_name(objects[i]));
    }
    std::vector<int> sub_of(C->num_morphisms(), -1), mor_of;
    for (int f = 0; f < C->num_morphisms(); ++f)
        if (pos[C->dom(f)] >= 0 && pos[C->cod(f)] >= 0) {
            sub_of[f] = static_cast<int>(mor_of.size());
            mor_of.push_back(f);
            t.mors.push_back({pos[C->dom(f)], pos[C->cod(f)]});
            t.mor_names.push_back(C->morphism_name(f));
        }
    for (int a : objects) t.identities.push_back(sub_of[C->identity(a)]);
    for (int f : mor_of)
        for (int g : mor_of)
            if (C->dom(g) == C->cod(f)) t.compose.push_back({sub_of[g], sub_of[f], sub_of[C->compose(g, f)]});
    auto S = std::make_shared<TableCategory>(TableCategory::from_raw(std::move(t)));
    if (incl) *incl = TableFunctor{S, C, objects, mor_of};
    return S;
}

CoreflectivePair comonad_to_coreflective(const TableComonad& K) {
    auto rep = validate_table_comonad(K);
    if (!rep.empty()) throw std::invalid_argument("comonad_to_coreflective: " + rep.front());
    CoreflectivePair P;
    P.A = K.K.src;
    const auto& C = *P.A;
    for (int a = 0; a < C.num_objects(); ++a)
        if (K.K.obj[a] == a) P.objects.push_back(a);
    P.sub = full_subcategory(P.A, P.objects, &P.incl);
    std::vector<int> obj_pos(C.num_objects(), -1), mor_pos(C.num_morphisms(), -1);
    for (size_t i = 0; i < P.objects.size(); ++i) obj_pos[P.objects[i]] = static_cast<int>(i);
    for (size_t i = 0; i < P.incl.mor.size(); ++i) mor_pos[P.incl.mor[i]] = static_cast<int>(i);
    P.R = TableFunctor{P.A, P.sub, {}, {}};
    for (int a = 0; a < C.num_objects(); ++a) P.R.obj.push_back(obj_pos[K.K.obj[a]]);
    for (int f = 0; f < C.num_morphisms(); ++f) P.R.mor.push_back(mor_pos[K.K.mor[f]]);
    P.counit = TableNat{compose_functors(P.incl, P.R), identity_functor(P.A), K.eps.comp};
    return P;
}

std::vector<std::string> validate_coreflective(const CoreflectivePair& P) {
    std::vector<std::string> out = validate_functor(P.incl);
    for (auto& s : validate_functor(P.R)) out.push_back("R: " + s);
    if (!out.empty()) return out;
    for (auto& s : validate_nat(P.counit)) out.push_back("counit: " + s);
    const auto& S = *P.sub;
    for (int x = 0; x < S.num_objects(); ++x)
        for (int y = 0; y < S.num_objects(); ++y)
            if (S.hom(x, y).size() != P.A->hom(P.incl.obj[x], P.incl.obj[y]).size())
                out.push_back("inclusion is not full at " + S.object_name(x) + ", " + S.object_name(y));
    if (!functor_equal(compose_functors(P.R, P.incl), identity_functor(P.sub)))
        out.push_back("unit is not the identity");
    for (int x = 0; x < S.num_objects(); ++x)
        if (P.counit.comp[P.incl.obj[x]] != P.A->identity(P.incl.obj[x]))
            out.push_back("triangle identity fails at " + S.object_name(x));
    for (int a = 0; a < P.A->num_objects(); ++a)
        if (P.R.mor[P.counit.comp[a]] != S.identity(P.R.obj[a]))
            out.push_back("triangle identity fails at " + P.A->object_name(a));
    return out;
}

TableComonad coreflective_to_comonad(const CoreflectivePair& P) {
    auto rep = validate_coreflective(P);
    if (!rep.empty()) throw std::invalid_argument("coreflective_to_comonad: " + rep.front());
    TableComonad K;
    K.K = compose_functors(P.incl, P.R);
    K.eps = TableNat{K.K, identity_functor(P.A), P.counit.comp};
    return K;
}

TargetComonad zero_coreflective(TargetPtr M) {
    TargetComonad K;
    K.name = "zero";
    K.obj = [M](const Obj&) { return M->initial(); };
    K.mor = [M](const Mor&) { return M->identity(M->initial()); };
    K.counit = [M](const Obj& a) { return M->from_initial(a); };
    return K;
}

TargetComonad identity_coreflective(TargetPtr M) {
    TargetComonad K;
    K.name = "identity";
    K.obj = [](const Obj& a) { return a; };
    K.mor = [](const Mor& f) { return f; };
    K.counit = [M](const Obj& a) { return M->identity(a); };
    return K;
}

PnModule theta_from_coreflectives(std::shared_ptr<const ProductBase> A, std::vector<TargetComonad> Rs) {
    if (static_cast<int>(Rs.size()) != A->arity())
        throw std::invalid_argument("theta_from_coreflectives: one subcategory per coordinate is required");
    PnModule M;
    M.A = A;
    M.n = A->arity();
    M.name = "theta_A";
    const ComputableCategory& T = A->target();
    const int k = A->arity();
    M.obj = [Rs, k](const AObj& a, int U) {
        AObj b = a;
        for (int j = 0; j < k; ++j)
            if (!(U >> j & 1)) b.c[j] = Rs[j].obj(Obj{a.c[j]}).n;
        return b;
    };
    M.mor = [A, Rs, k, &T, obj = M.obj](const AMor& f, int U, int V) {
        if ((U & V) != U) throw std::invalid_argument("module action: U is not contained in V");
        std::vector<Mor> ps;
        for (int j = 0; j < k; ++j) {
            if (U >> j & 1)
                ps.push_back(f.parts[j]);
            else if (V >> j & 1)
                ps.push_back(T.compose(Rs[j].counit(Obj{f.parts[j].cod}), Rs[j].mor(f.parts[j])));
            else
                ps.push_back(Rs[j].mor(f.parts[j]));
        }
        return A->make(obj(f.dom, U), obj(f.cod, V), ps);
    };
    return M;
}

ModuleMorphism comparison_from_zero(std::shared_ptr<const ProductBase> A, const PnModule& target) {
    ModuleMorphism m;
    const ComputableCategory& T = A->target();
    m.comp = [A, target, &T](const AObj& a, int U) {
        AObj x = theta_n(A).obj(a, U), y = target.obj(a, U);
        std::vector<Mor> ps;
        for (int j = 0; j < A->arity(); ++j)
            ps.push_back((U >> j & 1) ? T.identity(Obj{a.c[j]}) : T.from_initial(Obj{y.c[j]}));
        return A->make(x, y, ps);
    };
    return m;
}

std::vector<std::string> validate_module_morphism(const PnModule& X, const PnModule& Y, const ModuleMorphism& m,
                                                  const SampleBudget& b) {
    std::vector<std::string> out;
    Reporter R(out);
    const auto& A = *X.A;
    Samples s = collect(A, b);
    for (const auto& a : s.objs)
        for (int U = 0; U < (1 << X.n); ++U)
            R.guard([&] {
                AMor c = m.comp(a, U);
                R.check(c.dom == X.obj(a, U) && c.cod == Y.obj(a, U),
                        [&] { return "component ill-typed at " + A.obj_json(a).dump() + ", " + sub(U, X.n); });
            }, "component");
    for (const auto& f : s.mors)
        for (auto [U, V] : inclusions(X.n))
            R.guard([&] {
                R.check(A.compose(m.comp(f.cod, V), X.mor(f, U, V)) == A.compose(Y.mor(f, U, V), m.comp(f.dom, U)),
                        [&] { return "not natural at " + A.mor_json(f).dump() + ", " + sub(U, X.n) + "<=" + sub(V, X.n); });
            }, "naturality");
    return out;
}

nlohmann::json module_to_json(const PnModule& M) {
    auto TB = std::dynamic_pointer_cast<const TableBase>(M.A);
    if (!TB) throw std::invalid_argument("module_to_json: table base required");
    const auto& C = *TB->cat();
    nlohmann::json j;
    j["n"] = M.n;
    j["category"] = table_to_json(C);
    nlohmann::json objs = nlohmann::json::object();
    for (int a = 0; a < C.num_objects(); ++a)
        for (int U = 0; U < (1 << M.n); ++U)
            objs[C.object_name(a)][mask_name(U, M.n)] = C.object_name(M.obj(TB->obj(a), U).c[0]);
    j["objects"] = objs;
    nlohmann::json mors = nlohmann::json::object();
    for (int f : C.generators())
        for (int U = 0; U < (1 << M.n); ++U)
            mors[C.morphism_name(f)][mask_name(U, M.n)] = C.morphism_name(M.mor(TB->mor(f), U, U).id);
    j["morphisms"] = mors;
    nlohmann::json inc = nlohmann::json::object();
    for (int a = 0; a < C.num_objects(); ++a)
        for (int U = 0; U < (1 << M.n); ++U)
            for (int k = 0; k < M.n; ++k)
                if (!(U >> k & 1))
                    inc[C.object_name(a)][mask_name(U, M.n) + "<=" + mask_name(U | 1 << k, M.n)] =
                        C.morphism_name(M.mor(TB->identity(TB->obj(a)), U, U | 1 << k).id);
    j["inclusions"] = inc;
    return j;
}

}  // namespace pnm
