#include "pnm/kan.hpp"

#include <algorithm>
#include <map>

namespace pnm {

namespace {

void check_delta(const ComputableCategory& M, const TableFunctor& gamma, const Diagram& F, const Diagram& G,
                 const std::vector<Mor>& delta) {
    const auto& I = *gamma.src;
    if (static_cast<int>(delta.size()) != I.num_objects()) throw KanError("delta has wrong number of components");
    for (int f = 0; f < I.num_morphisms(); ++f)
        if (!(M.compose(F.mor[f], delta[I.dom(f)]) == M.compose(delta[I.cod(f)], G.mor[gamma.mor[f]])))
            throw KanError("delta is not natural at " + I.morphism_name(f));
}

void check_sigma(const ComputableCategory& M, const Diagram& G, const Diagram& R, const DiagramMap& s) {
    auto rep = validate_diagram_map(M, G, R, s);
    if (!rep.empty()) throw KanError("factorization is not natural: " + rep.front());
}

}  // namespace

RanResult ran_generic(const ComputableCategory& M, const TableFunctor& gamma, const Diagram& F) {
    const auto& A = *gamma.dst;
    const auto& I = *gamma.src;
    struct Data {
        std::vector<CommaCategory> commas;
        std::vector<std::map<std::pair<int, int>, int>> index;
        std::vector<LimitCone> cones;
    };
    auto d = std::make_shared<Data>();
    for (int a = 0; a < A.num_objects(); ++a) {
        d->commas.push_back(comma_category(a, gamma));
        std::map<std::pair<int, int>, int> idx;
        const auto& K = d->commas.back();
        for (size_t s = 0; s < K.objs.size(); ++s) idx[K.objs[s]] = static_cast<int>(s);
        d->index.push_back(std::move(idx));
        d->cones.push_back(M.limit(precompose(F, K.proj)));
    }
    RanResult out;
    out.ext.index = gamma.dst;
    for (int a = 0; a < A.num_objects(); ++a) out.ext.obj.push_back(d->cones[a].apex);
    for (int u = 0; u < A.num_morphisms(); ++u) {
        int a = A.dom(u), b = A.cod(u);
        const auto& Kb = d->commas[b];
        std::vector<Mor> legs;
        for (auto [i, f] : Kb.objs) legs.push_back(d->cones[a].legs[d->index[a].at({i, A.compose(f, u)})]);
        out.ext.mor.push_back(d->cones[b].mediate(legs, d->cones[a].apex));
    }
    for (int i = 0; i < I.num_objects(); ++i) {
        int a = gamma.obj[i];
        out.eps.push_back(d->cones[a].legs[d->index[a].at({i, A.identity(a)})]);
    }
    const ComputableCategory* Mp = &M;
    auto Fc = F;
    auto gam = gamma;
    auto ext = out.ext;
    out.factorize = [Mp, d, Fc, gam, ext](const Diagram& G, const std::vector<Mor>& delta) {
        check_delta(*Mp, gam, Fc, G, delta);
        const auto& A = *gam.dst;
        DiagramMap s;
        for (int a = 0; a < A.num_objects(); ++a) {
            std::vector<Mor> legs;
            for (auto [i, f] : d->commas[a].objs) legs.push_back(Mp->compose(delta[i], G.mor[f]));
            Mor m = d->cones[a].mediate(legs, G.obj[a]);
            auto f1 = Mp->factor_through_cone(d->cones[a].apex, d->cones[a].legs, legs, G.obj[a], false);
            auto f2 = Mp->factor_through_cone(d->cones[a].apex, d->cones[a].legs, legs, G.obj[a], true);
            if (!f1 || !f2 || !(*f1 == m) || !(*f2 == m))
                throw KanError("factorization not unique at " + A.object_name(a));
            s.comp.push_back(std::move(m));
        }
        check_sigma(*Mp, G, ext, s);
        return s;
    };
    return out;
}

std::vector<std::string> embedding_hypotheses(const TableFunctor& gamma) {
    const auto& I = *gamma.src;
    const auto& A = *gamma.dst;
    std::vector<std::string> rep;
    std::vector<int> pre(A.num_objects(), -1);
    for (int i = 0; i < I.num_objects(); ++i) {
        if (pre[gamma.obj[i]] >= 0) rep.push_back("not injective on objects at " + I.object_name(i));
        pre[gamma.obj[i]] = i;
    }
    for (int i = 0; i < I.num_objects(); ++i)
        for (int j = 0; j < I.num_objects(); ++j) {
            const auto& src = I.hom(i, j);
            const auto& dst = A.hom(gamma.obj[i], gamma.obj[j]);
            std::vector<int> img;
            for (int f : src) img.push_back(gamma.mor[f]);
            std::sort(img.begin(), img.end());
            auto sorted = dst;
            std::sort(sorted.begin(), sorted.end());
            if (img != sorted) rep.push_back("not fully faithful on (" + I.object_name(i) + ", " + I.object_name(j) + ")");
        }
    for (int x = 0; x < A.num_objects(); ++x) {
        if (pre[x] >= 0) continue;
        for (int i = 0; i < I.num_objects(); ++i)
            if (!A.hom(x, gamma.obj[i]).empty())
                rep.push_back("arrow from " + A.object_name(x) + " into the image at " + A.object_name(gamma.obj[i]));
    }
    return rep;
}

RanResult ran_embedding_fast(const ComputableCategory& M, const TableFunctor& gamma, const Diagram& F) {
    auto rep = embedding_hypotheses(gamma);
    if (!rep.empty()) throw KanError("embedding hypotheses fail: " + rep.front());
    const auto& A = *gamma.dst;
    const auto& I = *gamma.src;
    std::vector<int> pre(A.num_objects(), -1);
    for (int i = 0; i < I.num_objects(); ++i) pre[gamma.obj[i]] = i;
    std::vector<int> premor(A.num_morphisms(), -1);
    for (int f = 0; f < I.num_morphisms(); ++f) premor[gamma.mor[f]] = f;
    RanResult out;
    out.ext.index = gamma.dst;
    const Obj T = M.terminal();
    for (int a = 0; a < A.num_objects(); ++a) out.ext.obj.push_back(pre[a] >= 0 ? F.obj[pre[a]] : T);
    for (int u = 0; u < A.num_morphisms(); ++u) {
        if (premor[u] >= 0) out.ext.mor.push_back(F.mor[premor[u]]);
        else out.ext.mor.push_back(M.to_terminal(out.ext.obj[A.dom(u)]));
    }
    for (int i = 0; i < I.num_objects(); ++i) out.eps.push_back(M.identity(F.obj[i]));
    const ComputableCategory* Mp = &M;
    auto Fc = F;
    auto gam = gamma;
    auto ext = out.ext;
    out.factorize = [Mp, Fc, gam, ext, pre](const Diagram& G, const std::vector<Mor>& delta) {
        check_delta(*Mp, gam, Fc, G, delta);
        DiagramMap s;
        for (int a = 0; a < gam.dst->num_objects(); ++a)
            s.comp.push_back(pre[a] >= 0 ? delta[pre[a]] : Mp->to_terminal(G.obj[a]));
        check_sigma(*Mp, G, ext, s);
        return s;
    };
    return out;
}

RanResult ran_phi_fast(const ComputableCategory& M, const TableFunctor& phi, const Diagram& chi) {
    return ran_embedding_fast(M, phi, chi);
}

DiagramMap ran_transform(const ComputableCategory& M, const TableFunctor& pi, const TableFunctor& tau,
                         const TableFunctor& gamma, const TableFunctor& beta, const RanResult& ran_gamma,
                         const RanResult& ran_beta) {
    if (!functor_equal(compose_functors(beta, pi), compose_functors(tau, gamma)))
        throw KanError("ran_transform: square does not commute");
    Diagram G = precompose(ran_beta.ext, tau);
    std::vector<Mor> delta;
    for (int i = 0; i < pi.src->num_objects(); ++i) delta.push_back(ran_beta.eps[pi.obj[i]]);
    DiagramMap kappa = ran_gamma.factorize(G, delta);
    DiagramMap sigma;
    for (size_t a = 0; a < kappa.comp.size(); ++a) {
        auto inv = M.inverse(kappa.comp[a]);
        if (!inv) throw KanError("ran_transform: comparison not invertible at " + gamma.dst->object_name(static_cast<int>(a)));
        sigma.comp.push_back(*inv);
    }
    // ε-compatibility: ε_β(π i) ∘ σ_{γ i} = ε_γ(i)
    for (int i = 0; i < pi.src->num_objects(); ++i)
        if (!(M.compose(delta[i], sigma.comp[gamma.obj[i]]) == ran_gamma.eps[i]))
            throw KanError("ran_transform: counit compatibility fails");
    return sigma;
}

TableFunctor g_hat(const TableFunctor& g, const PosetPn& Pm, const PosetPn& Pn, const LambdaN& Lm, const LambdaN& Ln) {
    const int m = Pm.n, n = Pn.n;
    for (int U = 0; U <= Pm.full(); ++U)
        for (int V = 0; V <= Pm.full(); ++V)
            if (g.obj[U & V] != (g.obj[U] & g.obj[V])) throw KanError("g does not preserve intersections");
    if (g.obj[0] != 0) throw KanError("g does not preserve the empty set");
    std::vector<int> W(n, -1);
    for (int i = 0; i < n; ++i) {
        int w = Pm.full();
        bool any = false;
        for (int U = 0; U <= Pm.full(); ++U)
            if (g.obj[U] >> i & 1) { w &= U; any = true; }
        W[i] = any ? w : -1;
    }
    std::vector<int> om;
    for (int x = 0; x < Lm.cat->num_objects(); ++x) {
        std::vector<int> d(n);
        for (int i = 0; i < n; ++i) {
            if (W[i] < 0) { d[i] = 0; continue; }
            int v = 1;
            for (int j = 0; j < m; ++j)
                if (W[i] >> j & 1) v = diamond_digit(v, Lm.digit(x, j));
            d[i] = v;
        }
        om.push_back(Ln.encode(d));
    }
    return thin_functor(Lm.cat, Ln.cat, om);
}

}  // namespace pnm
