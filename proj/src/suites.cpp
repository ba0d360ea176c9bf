#include "pnm/suites.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pnm {

TargetPtr make_target(const TargetSpec& t) {
    if (t.pointed) return std::make_shared<FinSetPointed>();
    if (!is_prime(t.prime)) throw std::invalid_argument("not a prime: " + std::to_string(t.prime));
    return std::make_shared<FinVectGF>(t.prime);
}

nlohmann::json target_json(const TargetSpec& t) {
    if (t.pointed) return "pointed";
    return "GF(" + std::to_string(t.prime) + ")";
}

void PhaseClock::begin(const std::string& phase) {
    current_ = phase;
    start_ = std::chrono::steady_clock::now();
}

void PhaseClock::end(int checks) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    auto& p = phases_[current_];
    p.first += checks;
    p.second += ms;
}

nlohmann::json PhaseClock::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, p] : phases_) {
        j[name]["checks"] = p.first;
        j[name]["wall_ms"] = wall_ ? nlohmann::json(std::llround(p.second)) : nlohmann::json(nullptr);
    }
    return j;
}

nlohmann::json make_report(const std::string& law, bool pass, const nlohmann::json& witnesses, std::uint64_t seed,
                           const PhaseClock& clock, const nlohmann::json& config, const nlohmann::json& checked) {
    return {{"law", law},
            {"status", pass ? "pass" : "fail"},
            {"witnesses", witnesses.is_null() ? nlohmann::json::array() : witnesses},
            {"seed", seed},
            {"timings", clock.to_json()},
            {"config", config},
            {"checked", checked}};
}

nlohmann::json report_from_laws(const std::string& law, const LawReport& r, std::uint64_t seed, const PhaseClock& clock,
                                const nlohmann::json& config) {
    nlohmann::json w = nlohmann::json::array(), checked = nlohmann::json::object();
    for (const auto& l : r.laws) {
        checked[l.law] = {{"checks", l.checks}, {"failures", l.failures}};
        for (const auto& x : l.witnesses) w.push_back({{"law", l.law}, {"witness", x}});
    }
    return make_report(law, r.pass(), w, seed, clock, config, checked);
}

std::string canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

bool report_passed(const nlohmann::json& report) { return report.value("status", std::string()) == "pass"; }

void merge_laws(LawReport& into, const LawReport& from) {
    for (const auto& l : from.laws) {
        auto it = std::find_if(into.laws.begin(), into.laws.end(), [&](const LawResult& x) { return x.law == l.law; });
        if (it == into.laws.end()) {
            into.laws.push_back(l);
            continue;
        }
        it->checks += l.checks;
        it->failures += l.failures;
        for (const auto& w : l.witnesses)
            if (it->witnesses.size() < 5) it->witnesses.push_back(w);
    }
}

namespace {

std::vector<AMor> sample_morphisms(const BaseCategory& A, Rng& r, int count) {
    std::vector<AMor> out;
    for (int i = 0; i < count; ++i) {
        AObj a = A.random_object(r), b = A.random_object(r), c = A.random_object(r);
        out.push_back(A.random_morphism(r, a, b));
        out.push_back(A.random_morphism(r, b, c));
    }
    return out;
}

// A non-identity automorphism of X when one exists, else the identity.
Mor shear(const ComputableCategory& M, const Obj& X) {
    Mor f = M.identity(X);
    if (M.pointed()) {
        if (X.n >= 3) std::swap(f.v[1], f.v[2]);
    } else if (X.n >= 2) {
        f.v[1] = 1;  // row 0, column 1
    } else if (X.n == 1 && dynamic_cast<const FinVectGF&>(M).field().p() > 2) {
        f.v[0] = 2;
    }
    return f;
}

nlohmann::json size_key(const ComputableCategory& M) { return M.pointed() ? "cardinality" : "dimension"; }

}  // namespace

nlohmann::json run_verify_monad(const MonadSuiteConfig& cfg) {
    PhaseClock clock(cfg.wall_clock);
    auto M = make_target(cfg.target);
    CocrossContext ctx(M, cfg.dims);
    Rng r(cfg.seed);
    nlohmann::json config = {{"target", target_json(cfg.target)}, {"n", cfg.n}, {"dims", cfg.dims},
                             {"functors", cfg.functors}, {"module", cfg.module}, {"diagonal", cfg.diagonal},
                             {"corrupt_mu", cfg.corrupt_mu}};
    std::vector<FunctorValue> base_functors;
    for (const auto& name : cfg.functors) base_functors.push_back(registry_functor(name, ctx.base(1)));

    MonadInstance T;
    std::vector<FunctorValue> Fs;
    std::vector<AObj> objs;
    std::vector<AMor> mors;
    if (cfg.diagonal) {
        T = ctx.diagonal_cocross_monad(cfg.n);
        Fs = base_functors;
        objs = ctx.base(1)->objects();
        mors = sample_morphisms(*ctx.base(1), r, cfg.morphism_samples);
    } else {
        auto A = ctx.base(cfg.n);
        std::shared_ptr<ThetaMonad> TM;
        if (cfg.module == "theta") {
            TM = ctx.theta(cfg.n);
        } else if (cfg.module == "trivial") {
            TM = std::make_shared<ThetaMonad>(M, trivial_module(A, cfg.n), "trivial");
        } else if (cfg.module == "coreflective") {
            std::vector<TargetComonad> Rs;
            for (int i = 0; i < cfg.n; ++i) Rs.push_back(i % 2 == 0 ? identity_coreflective(M) : zero_coreflective(M));
            TM = std::make_shared<ThetaMonad>(M, theta_from_coreflectives(A, Rs), "coreflective");
        } else {
            throw std::invalid_argument("unknown module: " + cfg.module);
        }
        T = TM->instance();
        auto adj = ctx.fun_adjunction(cfg.n);
        for (const auto& F : base_functors) Fs.push_back(adj.L(F));
        objs = A->objects();
        mors = cfg.n == 0 ? std::vector<AMor>{A->identity(AObj{})} : sample_morphisms(*A, r, cfg.morphism_samples);
    }
    if (cfg.corrupt_mu) {
        auto good = T.mu;
        auto TT = T.T;
        T.mu = [good, TT, M](const FunctorValue& F, const AObj& x) {
            Mor m = good(F, x);
            return M->compose(shear(*M, Obj{m.cod}), m);
        };
    }
    std::vector<NatSample> nats;
    for (size_t i = 0; i < Fs.size(); ++i)
        for (size_t j = 0; j < Fs.size(); ++j) {
            if (cfg.functors[i] != "zero" && cfg.functors[j] != "zero") continue;
            const FunctorValue F = Fs[i], G = Fs[j];
            nats.push_back({F.token + "=>" + G.token, F, G,
                            [M, F, G](const AObj& x) { return M->zero_morphism(F.obj(x), G.obj(x)); }});
        }
    nlohmann::json checked_objects = nlohmann::json::array();
    const auto& base_cat = cfg.diagonal ? *ctx.base(1) : *ctx.base(cfg.n);
    for (const auto& x : objs) checked_objects.push_back(base_cat.obj_json(x));
    config["objects"] = checked_objects;
    config["morphism_count"] = mors.size();
    clock.begin("monad_laws");
    LawReport rep = verify_monad(T, Fs, objs, mors, nats);
    int checks = 0;
    for (const auto& l : rep.laws) checks += l.checks;
    clock.end(checks);
    return report_from_laws("monad_laws", rep, cfg.seed, clock, config);
}

nlohmann::json run_cocross(const CocrossSuiteConfig& cfg) {
    PhaseClock clock(cfg.wall_clock);
    auto M = make_target(cfg.target);
    int bound = 0;
    for (int x : cfg.inputs) bound = std::max(bound, M->size_of(Obj{x}));
    CocrossContext ctx(M, bound);
    const int n = static_cast<int>(cfg.inputs.size());
    for (int x : cfg.inputs)
        if (!M->valid_object(Obj{x})) throw std::invalid_argument("invalid input object " + std::to_string(x));
    FunctorValue F = cfg.functor == "table" ? table_functor_value(cfg.table, ctx.base(1))
                                            : registry_functor(cfg.functor, ctx.base(1));
    AObj a{cfg.inputs};
    clock.begin("cocross");
    CocrossValue v = cocross(ctx, n, F, a);
    clock.end(1);
    clock.begin("oracle");
    auto T = ctx.theta(n);
    OracleComparison cmp = compare_with_oracle(*M, T->poset(), T->phi(), v.cube, v.entry->cc);
    clock.end(1);

    nlohmann::json law_reports = nlohmann::json::array();
    clock.begin("laws");
    LawReport cube_laws = verify_monad(T->instance(), {ctx.fun_adjunction(n).L(F)}, {a}, {});
    law_reports.push_back(report_from_laws("cube_monad_laws", cube_laws, cfg.seed, PhaseClock(false),
                                           {{"monad", "theta^" + std::to_string(n)}}));
    std::vector<AObj> diag;
    for (int x : cfg.inputs)
        if (std::find(diag.begin(), diag.end(), AObj{{x}}) == diag.end()) diag.push_back(AObj{{x}});
    LawReport diag_laws;
    if (n >= 1) diag_laws = verify_monad(ctx.diagonal_cocross_monad(n), {F}, diag, {});
    law_reports.push_back(report_from_laws("diagonal_monad_laws", diag_laws, cfg.seed, PhaseClock(false),
                                           {{"monad", "cocross^" + std::to_string(n)}}));
    clock.end(cube_laws.laws.size() + diag_laws.laws.size());

    bool pass = cmp.sizes_equal && cmp.mutually_inverse && cube_laws.pass() && diag_laws.pass();
    nlohmann::json out = {{"n", n},
                          {"functor", F.token},
                          {"inputs", cfg.inputs},
                          {"target", target_json(cfg.target)},
                          {"oracle_agreement",
                           {{"sizes_equal", cmp.sizes_equal},
                            {"mutually_inverse", cmp.mutually_inverse},
                            {"oracle_value", cmp.oracle.n}}},
                          {"law_reports", law_reports},
                          {"seed", cfg.seed},
                          {"status", pass ? "pass" : "fail"},
                          {"timings", clock.to_json()}};
    out[size_key(*M).get<std::string>()] = v.value.n;
    return out;
}

nlohmann::json run_module_roundtrip(const RoundtripSuiteConfig& cfg) {
    PhaseClock clock(cfg.wall_clock);
    nlohmann::json witnesses = nlohmann::json::array(), checked = nlohmann::json::object();
    auto note = [&](const std::string& where, const std::string& what) {
        if (witnesses.size() < 20) witnesses.push_back({{"case", where}, {"mismatch", what}});
    };
    int fails = 0;

    clock.begin("tables_module_comonad");
    int c1 = 0;
    for (int k = 1; k <= cfg.max_objects; ++k) {
        auto posets = posets_up_to_iso(k);
        for (size_t pi = 0; pi < posets.size(); ++pi)
            for (int n = 0; n <= cfg.max_n_tables; ++n)
                for (auto& Mo : enumerate_thin_modules(posets[pi], n)) {
                    ++c1;
                    std::string where = "poset " + std::to_string(k) + "." + std::to_string(pi) + " n=" + std::to_string(n);
                    auto Ks = module_to_comonads(Mo);
                    auto back = comonads_to_module(Ks);
                    auto m1 = compare_modules(back, Mo).mismatches;
                    auto m2 = compare_comonads(module_to_comonads(back), Ks).mismatches;
                    auto m3 = validate_comonads(Ks);
                    for (auto* ms : {&m1, &m2, &m3})
                        if (!ms->empty()) {
                            ++fails;
                            note(where, ms->front());
                        }
                }
    }
    clock.end(c1);
    checked["tables_module_comonad"] = c1;

    clock.begin("sampled_theta");
    auto M = make_target(cfg.target);
    int c2 = 0, points = 0;
    for (int n = 1; n <= cfg.n; ++n) {
        auto A = std::make_shared<ProductBase>(M, n, 2);
        SampleBudget b{cfg.seed + static_cast<std::uint64_t>(n), cfg.samples, cfg.samples};
        auto T = theta_n(A);
        auto Ks = module_to_comonads(T);
        auto back = comonads_to_module(Ks);
        auto cm = compare_modules(back, T, b);
        auto cc = compare_comonads(module_to_comonads(back), Ks, b);
        c2 += 2;
        points += cm.points + cc.points;
        if (cm.points < cfg.samples || cc.points < cfg.samples) {
            ++fails;
            note("theta^" + std::to_string(n), "fewer sample points than requested");
        }
        for (const auto* c : {&cm, &cc})
            if (!c->mismatches.empty()) {
                ++fails;
                note("theta^" + std::to_string(n), c->mismatches.front());
            }
    }
    clock.end(c2);
    checked["sampled_theta"] = {{"runs", c2}, {"points", points}};

    clock.begin("tables_comonad_coreflective");
    int c3 = 0;
    for (int k = 1; k <= cfg.max_objects_coreflective; ++k)
        for (auto& C : posets_up_to_iso(k)) {
            auto Ks = enumerate_table_comonads(C);
            auto Ps = enumerate_coreflectives(C);
            if (Ks.size() != Ps.size()) {
                ++fails;
                note("poset " + std::to_string(k), "comonad and coreflective counts differ");
            }
            for (auto& K : Ks) {
                ++c3;
                auto P = comonad_to_coreflective(K);
                auto K2 = coreflective_to_comonad(P);
                if (!validate_coreflective(P).empty() || !functor_equal(K2.K, K.K) || K2.eps.comp != K.eps.comp) {
                    ++fails;
                    note("poset " + std::to_string(k), "comonad roundtrip differs");
                }
            }
            for (auto& P : Ps) {
                ++c3;
                auto P2 = comonad_to_coreflective(coreflective_to_comonad(P));
                if (P2.objects != P.objects || !functor_equal(P2.R, P.R) || P2.counit.comp != P.counit.comp) {
                    ++fails;
                    note("poset " + std::to_string(k), "coreflective roundtrip differs");
                }
            }
        }
    clock.end(c3);
    checked["tables_comonad_coreflective"] = c3;
    nlohmann::json config = {{"target", target_json(cfg.target)}, {"max_objects", cfg.max_objects},
                             {"max_objects_coreflective", cfg.max_objects_coreflective}, {"n", cfg.n},
                             {"samples", cfg.samples}};
    return make_report("module_comonad_roundtrips", fails == 0, witnesses, cfg.seed, clock, config, checked);
}

nlohmann::json run_axioms(const AxiomSuiteConfig& cfg) {
    PhaseClock clock(cfg.wall_clock);
    nlohmann::json config = {{"target", cfg.unpointed_demo ? nlohmann::json("unpointed") : target_json(cfg.target)},
                             {"cases", cfg.cases}, {"dims", cfg.dims}, {"unpointed_demo", cfg.unpointed_demo}};
    if (cfg.unpointed_demo) {
        clock.begin("unpointed_demo");
        nlohmann::json demo = nlohmann::json::array();
        bool holds = true;
        for (int k : {0, 1, 2}) {
            auto d = unpointed_constant_terminal_demo(k);
            holds = holds && d.value("constant_terminal_holds", false);
            demo.push_back(d);
        }
        clock.end(3);
        return make_report("hocolim_axiom_3_unpointed", holds, demo, cfg.seed, clock, config, {{"item_3", 3}});
    }
    auto M = make_target(cfg.target);
    clock.begin("hocolim_axioms");
    auto items = run_hocolim_axioms(*M, cfg.seed, cfg.cases, cfg.dims);
    nlohmann::json witnesses = nlohmann::json::array(), checked = nlohmann::json::object();
    bool pass = true;
    int total = 0;
    for (const auto& it : items) {
        std::string key = "item_" + std::to_string(it.item) + "_" + it.name;
        checked[key] = {{"cases", it.cases}, {"failures", it.failures}};
        total += it.cases;
        pass = pass && it.failures == 0 && it.cases >= cfg.cases;
        for (const auto& w : it.witnesses) witnesses.push_back({{"item", it.item}, {"witness", w}});
    }
    clock.end(total);
    nlohmann::json out = make_report("hocolim_axioms", pass, witnesses, cfg.seed, clock, config, checked);
    if (cfg.include_roundtrips) {
        RoundtripSuiteConfig rc;
        rc.target = cfg.target;
        rc.seed = cfg.seed;
        rc.wall_clock = cfg.wall_clock;
        auto rt = run_module_roundtrip(rc);
        out["roundtrips"] = rt;
        if (!report_passed(rt)) out["status"] = "fail";
    }
    return out;
}

SurjectionMap parse_surjection(int n, const std::string& text) {
    SurjectionMap s;
    s.n = n;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = std::stoi(item);
        if (v < 1) throw std::invalid_argument("surjection values start at 1");
        s.s.push_back(v - 1);
    }
    if (static_cast<int>(s.s.size()) != n) throw std::invalid_argument("surjection needs " + std::to_string(n) + " values");
    s.m = 0;
    for (int v : s.s) s.m = std::max(s.m, v + 1);
    if (!is_surjection(s)) throw std::invalid_argument("not a surjection: " + text);
    return s;
}

nlohmann::json run_surjection_morphism(const SurjectionSuiteConfig& cfg) {
    PhaseClock clock(cfg.wall_clock);
    auto M = make_target(cfg.target);
    CocrossContext ctx(M, cfg.dims);
    const auto& s = cfg.s;
    nlohmann::json config = {{"target", target_json(cfg.target)}, {"surjection", surjection_name(s)},
                             {"dims", cfg.dims}, {"functors", cfg.functors}, {"size_cap", cfg.size_cap}};
    clock.begin("construct");
    auto sm = surjection_monad_morphism(ctx, s);
    clock.end(1);
    std::vector<FunctorValue> Fs;
    for (const auto& name : cfg.functors) Fs.push_back(registry_functor(name, ctx.base(1)));
    auto objs = ctx.base(1)->objects();

    LawReport rep;
    nlohmann::json skipped = nlohmann::json::array();
    int evaluated = 0;
    clock.begin("coherence");
    for (const auto& F : Fs)
        for (const auto& x : objs) {
            int size = M->size_of(sm.total.inner.T(F).obj(x));
            if (size > cfg.size_cap) {
                skipped.push_back({{"functor", F.token}, {"object", ctx.base(1)->obj_json(x)}, {"inner_size", size}});
                continue;
            }
            ++evaluated;
            merge_laws(rep, verify_monad_morphism(sm.total, {F}, {x}));
        }
    clock.end(evaluated);

    clock.begin("hypotheses");
    std::vector<FunctorValue> Hs;
    for (const auto& F : Fs) Hs.push_back(sm.data.inner_adj.L(F));
    std::vector<AObj> bs = ctx.base(s.m)->objects();
    merge_laws(rep, check_beta_hypotheses(sm.data, Fs, Hs, objs, bs));
    clock.end(static_cast<int>(Fs.size() * (objs.size() + bs.size())));

    // functoriality against a second surjection t : [m] -> [m'] (fold, or the identity when m = 1)
    clock.begin("functoriality");
    SurjectionMap t = identity_surjection(s.m);
    if (s.m >= 2) {
        t = SurjectionMap{s.m, s.m - 1, {}};
        for (int i = 0; i < s.m; ++i) t.s.push_back(std::min(i, s.m - 2));
    }
    auto mt = surjection_monad_morphism(ctx, t);
    auto mts = surjection_monad_morphism(ctx, compose_surjections(t, s));
    auto mid = surjection_monad_morphism(ctx, identity_surjection(s.n));
    LawResult fun{"surjection_functoriality"}, ident{"identity_surjection"};
    for (const auto& F : Fs)
        for (const auto& x : objs) {
            Mor lhs = mts.total.alpha(F, x);
            Mor rhs = M->compose(sm.total.alpha(F, x), mt.total.alpha(F, x));
            fun.record(lhs == rhs, [&] {
                return nlohmann::json{{"functor", F.token}, {"object", ctx.base(1)->obj_json(x)},
                                      {"lhs", mor_to_json(lhs)}, {"rhs", mor_to_json(rhs)}};
            });
            Mor i1 = mid.total.alpha(F, x);
            ident.record(i1 == M->identity(Obj{i1.dom}) && i1.dom == i1.cod,
                         [&] { return nlohmann::json{{"functor", F.token}, {"object", ctx.base(1)->obj_json(x)}}; });
        }
    LawReport fr;
    fr.laws = {fun, ident};
    merge_laws(rep, fr);
    clock.end(fun.checks + ident.checks);

    auto out = report_from_laws("surjection_monad_morphism", rep, cfg.seed, clock, config);
    out["checked"]["samples_evaluated"] = evaluated;
    out["checked"]["samples_skipped"] = skipped;
    out["checked"]["composite_with"] = surjection_name(t);
    return out;
}

nlohmann::json run_kan_agreement(int n, int cases, std::uint64_t seed, bool wall_clock) {
    PhaseClock clock(wall_clock);
    std::vector<TargetPtr> Ms{std::make_shared<FinVectGF>(2), std::make_shared<FinVectGF>(3),
                              std::make_shared<FinSetPointed>()};
    auto P = build_pn(n);
    auto L = build_lambda_n(n);
    auto phi = phi_n(P, L);
    Rng r(seed);
    nlohmann::json witnesses = nlohmann::json::array();
    int fails = 0;
    clock.begin("kan_agreement");
    for (int c = 0; c < cases; ++c) {
        const auto& M = *Ms[c % Ms.size()];
        auto chi = random_thin_diagram(M, P.cat, r, 2);
        auto g = ran_generic(M, phi, chi);
        auto f = ran_phi_fast(M, phi, chi);
        bool ok = g.ext.obj == f.ext.obj && g.ext.mor == f.ext.mor && g.eps == f.eps;
        if (!ok) {
            ++fails;
            if (witnesses.size() < 5) witnesses.push_back({{"case", c}, {"target", M.name()}, {"cube", diagram_to_json(M, chi)}});
        }
    }
    clock.end(cases);
    return make_report("kan_fast_path_agreement", fails == 0, witnesses, seed, clock,
                       {{"n", n}, {"cases", cases}}, {{"cases", cases}, {"failures", fails}});
}

nlohmann::json run_oracle_agreement(const TargetSpec& t, int cases, int max_n, int dims, std::uint64_t seed,
                                    bool wall_clock) {
    PhaseClock clock(wall_clock);
    auto M = make_target(t);
    Rng r(seed);
    std::vector<PosetPn> Ps;
    std::vector<TableFunctor> phis;
    for (int n = 0; n <= max_n; ++n) {
        Ps.push_back(build_pn(n));
        phis.push_back(phi_n(Ps.back(), build_lambda_n(n)));
    }
    nlohmann::json witnesses = nlohmann::json::array();
    int fails = 0;
    std::vector<int> per_n(max_n + 1, 0);
    clock.begin("oracle_agreement");
    for (int c = 0; c < cases; ++c) {
        const int n = 1 + c % max_n;
        ++per_n[n];
        auto chi = random_thin_diagram(*M, Ps[n].cat, r, dims);
        auto cc = M->colimit(ran_phi_fast(*M, phis[n], chi).ext);
        auto cmp = compare_with_oracle(*M, Ps[n], phis[n], chi, cc);
        if (!cmp.sizes_equal || !cmp.mutually_inverse) {
            ++fails;
            if (witnesses.size() < 5)
                witnesses.push_back({{"case", c}, {"n", n}, {"main", M->size_of(cmp.main)}, {"oracle", M->size_of(cmp.oracle)}});
        }
    }
    clock.end(cases);
    return make_report("cocross_oracle_agreement", fails == 0, witnesses, seed, clock,
                       {{"target", target_json(t)}, {"cases", cases}, {"max_n", max_n}, {"dims", dims}},
                       {{"per_n", per_n}, {"failures", fails}});
}

nlohmann::json run_dimension_law(int prime, int dims, bool wall_clock) {
    PhaseClock clock(wall_clock);
    auto M = make_target(TargetSpec{false, prime});
    CocrossContext ctx(M, dims);
    auto sq = registry_functor("tensor-square", ctx.base(1));
    auto id = registry_functor("identity", ctx.base(1));
    nlohmann::json witnesses = nlohmann::json::array();
    int checks = 0, fails = 0;
    clock.begin("tensor_square");
    for (int v = 0; v <= dims; ++v)
        for (int w = 0; w <= dims; ++w) {
            ++checks;
            int d = cocross(ctx, 2, sq, AObj{{v, w}}).value.n;
            if (d != 2 * v * w) {
                ++fails;
                witnesses.push_back({{"V", v}, {"W", w}, {"dimension", d}, {"expected", 2 * v * w}});
            }
        }
    clock.end(checks);
    clock.begin("identity_vanishing");
    int c2 = 0;
    for (int n = 2; n <= 3; ++n)
        for (const auto& a : ctx.base(n)->objects()) {
            ++c2;
            int d = cocross(ctx, n, id, a).value.n;
            if (d != 0) {
                ++fails;
                witnesses.push_back({{"n", n}, {"inputs", a.c}, {"dimension", d}, {"expected", 0}});
            }
        }
    clock.end(c2);
    return make_report("cocross_dimension_law", fails == 0, witnesses, 0, clock, {{"prime", prime}, {"dims", dims}},
                       {{"tensor_square", checks}, {"identity_vanishing", c2}});
}

}  // namespace pnm
