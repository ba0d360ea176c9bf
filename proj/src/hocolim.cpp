#include "pnm/hocolim.hpp"

#include <stdexcept>

namespace pnm {

ColimitCocone hocolim(const ComputableCategory& M, const Diagram& D) { return M.colimit(D); }

Mor colim_map(const ComputableCategory& M, const ColimitCocone& cD, const ColimitCocone& cE, const DiagramMap& a) {
    std::vector<Mor> legs;
    for (size_t i = 0; i < a.comp.size(); ++i) legs.push_back(M.compose(cE.legs[i], a.comp[i]));
    return cD.mediate(legs, cE.apex);
}

Mor restriction_map(const ComputableCategory& M, const TableFunctor& alpha, const ColimitCocone& cDa,
                    const ColimitCocone& cD) {
    (void)M;
    std::vector<Mor> legs;
    for (int x : alpha.obj) legs.push_back(cD.legs[x]);
    return cDa.mediate(legs, cD.apex);
}

Mor restriction_map(const ComputableCategory& M, const TableFunctor& alpha, const Diagram& D) {
    return restriction_map(M, alpha, M.colimit(precompose(D, alpha)), M.colimit(D));
}

Diagram slice_second(const Diagram& D, const CatPtr& I, const CatPtr& J, int i) {
    const int Jo = J->num_objects(), Jm = J->num_morphisms();
    Diagram S{J, {}, {}};
    for (int j = 0; j < Jo; ++j) S.obj.push_back(D.obj[i * Jo + j]);
    const int idm = I->identity(i);
    for (int g = 0; g < Jm; ++g) S.mor.push_back(D.mor[idm * Jm + g]);
    return S;
}

NestedColimit nested_colim_second(const ComputableCategory& M, const CatPtr& I, const CatPtr& J, const Diagram& D) {
    const int Io = I->num_objects(), Jo = J->num_objects(), Jm = J->num_morphisms();
    NestedColimit N;
    for (int i = 0; i < Io; ++i) N.inner.push_back(M.colimit(slice_second(D, I, J, i)));
    N.outer.index = I;
    for (int i = 0; i < Io; ++i) N.outer.obj.push_back(N.inner[i].apex);
    for (int u = 0; u < I->num_morphisms(); ++u) {
        int i = I->dom(u), k = I->cod(u);
        DiagramMap a;
        for (int j = 0; j < Jo; ++j) a.comp.push_back(D.mor[u * Jm + J->identity(j)]);
        N.outer.mor.push_back(colim_map(M, N.inner[i], N.inner[k], a));
    }
    N.outer_colim = M.colimit(N.outer);
    return N;
}

FubiniIso fubini(const ComputableCategory& M, const CatPtr& I, const CatPtr& J, const Diagram& D) {
    const int Io = I->num_objects(), Jo = J->num_objects();
    FubiniIso F;
    F.nested = nested_colim_second(M, I, J, D);
    F.total = M.colimit(D);
    std::vector<Mor> outer_legs;
    for (int i = 0; i < Io; ++i) {
        std::vector<Mor> legs;
        for (int j = 0; j < Jo; ++j) legs.push_back(F.total.legs[i * Jo + j]);
        outer_legs.push_back(F.nested.inner[i].mediate(legs, F.total.apex));
    }
    F.forward = F.nested.outer_colim.mediate(outer_legs, F.total.apex);
    std::vector<Mor> back_legs;
    for (int i = 0; i < Io; ++i)
        for (int j = 0; j < Jo; ++j)
            back_legs.push_back(M.compose(F.nested.outer_colim.legs[i], F.nested.inner[i].legs[j]));
    F.backward = F.total.mediate(back_legs, F.nested.outer_colim.apex);
    if (!(M.compose(F.forward, F.backward) == M.identity(F.total.apex)) ||
        !(M.compose(F.backward, F.forward) == M.identity(F.nested.outer_colim.apex)))
        throw std::logic_error("Fubini comparison maps are not mutually inverse");
    return F;
}

bool homotopy_invariance_check(const ComputableCategory& M, const Diagram& D, const Diagram& E, const DiagramMap& a) {
    for (const auto& c : a.comp)
        if (!M.is_isomorphism(c)) throw std::invalid_argument("homotopy invariance: component is not a weak equivalence");
    return M.is_isomorphism(colim_map(M, M.colimit(D), M.colimit(E), a));
}

ProductSetup make_product_setup(const TableFunctor& gamma, const TableFunctor& beta) {
    ProductSetup S;
    S.gamma = gamma;
    S.beta = beta;
    S.IJ = product_category(gamma.src, beta.src);
    S.AB = product_category(gamma.dst, beta.dst);
    S.IB = product_category(gamma.src, beta.dst);
    S.gxb = product_functor(gamma, beta, S.IJ, S.AB);
    S.ixb = product_functor(identity_functor(gamma.src), beta, S.IJ, S.IB);
    S.gxi = product_functor(gamma, identity_functor(beta.dst), S.IB, S.AB);
    return S;
}

ProductRanIso product_ran_colimit_iso(const ComputableCategory& M, const ProductSetup& S, const RanResult& R1,
                         const RanResult& R2, bool generic) {
    const auto& I = S.gamma.src;
    const auto& A = S.gamma.dst;
    const auto& B = S.beta.dst;
    // σ : R2 ⇒ (γ×Id)* R1, invertible
    DiagramMap sigma = ran_transform(M, identity_functor(S.IJ), S.gxi, S.ixb, S.gxb, R2, R1);
    NestedColimit inner2 = nested_colim_second(M, I, B, R2.ext);
    ProductRanIso out;
    out.H = inner2.outer;
    out.ranH = generic ? ran_generic(M, S.gamma, out.H) : ran_embedding_fast(M, S.gamma, out.H);
    FubiniIso fub = fubini(M, A, B, R1.ext);
    // δ_i : O(γ i) -> H(i) from σ^{-1} on the slice over γ(i)
    const int Bo = B->num_objects();
    std::vector<Mor> delta;
    for (int i = 0; i < I->num_objects(); ++i) {
        DiagramMap sl;
        for (int b = 0; b < Bo; ++b) sl.comp.push_back(*M.inverse(sigma.comp[i * Bo + b]));
        delta.push_back(colim_map(M, fub.nested.inner[S.gamma.obj[i]], inner2.inner[i], sl));
    }
    DiagramMap rho = out.ranH.factorize(fub.nested.outer, delta);
    for (size_t a = 0; a < rho.comp.size(); ++a)
        if (!M.is_isomorphism(rho.comp[a]))
            throw std::logic_error("product Kan-extension comparison not invertible at " + A->object_name(static_cast<int>(a)));
    out.total = fub.total;
    out.target = M.colimit(out.ranH.ext);
    Mor step = colim_map(M, fub.nested.outer_colim, out.target, rho);
    out.forward = M.compose(step, fub.backward);
    auto inv = M.inverse(out.forward);
    if (!inv) throw std::logic_error("product Kan-extension comparison is not an isomorphism");
    out.backward = *inv;
    // independent construction of the inverse through the universal properties
    DiagramMap rho_inv;
    for (const auto& c : rho.comp) rho_inv.comp.push_back(*M.inverse(c));
    Mor back = M.compose(fub.forward, colim_map(M, out.target, fub.nested.outer_colim, rho_inv));
    if (!(back == out.backward)) throw std::logic_error("product Kan-extension inverse constructions disagree");
    return out;
}

Mor ran_colimit_map(const ComputableCategory& M, const TableFunctor& tau, const DiagramMap& sigma,
                  const Diagram& ran_gamma_Fpi, const ColimitCocone& c_src, const Diagram& ran_beta_F,
                  const ColimitCocone& c_dst) {
    Diagram mid = precompose(ran_beta_F, tau);
    auto rep = validate_diagram_map(M, ran_gamma_Fpi, mid, sigma);
    if (!rep.empty()) throw std::invalid_argument("ran_colimit_map: sigma is not natural: " + rep.front());
    ColimitCocone c_mid = M.colimit(mid);
    return M.compose(restriction_map(M, tau, c_mid, c_dst), colim_map(M, c_src, c_mid, sigma));
}

}  // namespace pnm
