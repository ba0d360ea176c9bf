#pragma once
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "pnm/basecat.hpp"
#include "pnm/hocolim.hpp"
#include "pnm/kan.hpp"
#include "pnm/pnmod.hpp"

namespace pnm {

// An object of Fun(A, M). The token identifies the functor for memoization:
// equal tokens must mean equal functors.
struct FunctorValue {
    std::string token;
    BasePtr A;
    std::function<Obj(const AObj&)> obj;
    std::function<Mor(const AMor&)> mor;
};
// Component x ↦ (F(x) -> G(x)) of a transformation.
using NatComp = std::function<Mor(const AObj&)>;

// Functor between base categories.
struct BaseFunctor {
    std::string name;
    BasePtr src, dst;
    std::function<AObj(const AObj&)> obj;
    std::function<AMor(const AMor&)> mor;
};
FunctorValue precompose(const FunctorValue& G, const BaseFunctor& P);  // G ∘ P

struct MonadInstance {
    std::string name;
    BasePtr A;
    TargetPtr M;
    std::function<FunctorValue(const FunctorValue&)> T;
    // T on a transformation a : F ⇒ G, evaluated at x.
    std::function<Mor(const FunctorValue& F, const FunctorValue& G, const NatComp& a, const AObj& x)> Tmap;
    std::function<Mor(const FunctorValue& F, const AObj& x)> eta;  // F(x) -> TF(x)
    std::function<Mor(const FunctorValue& F, const AObj& x)> mu;   // TTF(x) -> TF(x)
};

MonadInstance identity_monad(BasePtr A, TargetPtr M);

// The monad of a P(n)-module: TF(a) is the colimit over Λ^n of the extension of
// U ↦ F(θ(a, U)) along φ_n. Values are memoized by (functor token, object).
class ThetaMonad : public std::enable_shared_from_this<ThetaMonad> {
public:
    struct Entry {
        Diagram cube;     // over P(n)
        RanResult ran;    // along φ_n
        ColimitCocone cc;
    };
    ThetaMonad(TargetPtr M, PnModule module, std::string name);
    MonadInstance instance();
    const PnModule& module() const { return mod_; }
    const ComputableCategory& target() const { return *M_; }
    const TargetPtr& target_ptr() const { return M_; }
    const PosetPn& poset() const { return P_; }
    const LambdaN& lambda() const { return L_; }
    const TableFunctor& phi() const { return phi_; }

    Diagram cube(const FunctorValue& F, const AObj& a) const;
    std::shared_ptr<const Entry> entry(const FunctorValue& F, const AObj& a);
    FunctorValue T(const FunctorValue& F);
    Mor Tmap(const FunctorValue& F, const FunctorValue& G, const NatComp& a, const AObj& x);
    Mor eta(const FunctorValue& F, const AObj& x);
    Mor mu(const FunctorValue& F, const AObj& x);
    // Transformation between the extended Λ-diagrams induced by a transformation of cubes.
    DiagramMap extend_map(const std::vector<Mor>& cube_components) const;

private:
    Mor compute_mu(const FunctorValue& F, const AObj& x);
    void ensure_double();

    TargetPtr M_;
    PnModule mod_;
    std::string name_;
    PosetPn P_, P0_;
    LambdaN L_;
    TableFunctor phi_, corner_;
    std::vector<int> preimage_;  // Λ object -> U or -1
    bool double_ready_ = false;
    ProductSetup S_;
    TableFunctor cap_, diamond_;
    std::mutex mu_lock_;
    std::unordered_map<std::string, std::shared_ptr<const Entry>> entries_;
    std::unordered_map<std::string, Mor> mus_;
};

// Sampled law results shared by the verifiers.
struct LawResult {
    LawResult(std::string name = "") : law(std::move(name)) {}
    std::string law;
    int checks = 0;
    int failures = 0;
    std::vector<nlohmann::json> witnesses;  // first few failures
    void record(bool ok, const std::function<nlohmann::json()>& witness);
};
struct LawReport {
    std::vector<LawResult> laws;
    bool pass() const;
    int failures() const;
};

struct NatSample {
    std::string name;
    FunctorValue F, G;
    NatComp a;
};

// Monad laws and naturality of η, μ at the given functors, objects and morphisms.
LawReport verify_monad(const MonadInstance& T, const std::vector<FunctorValue>& functors,
                       const std::vector<AObj>& objects, const std::vector<AMor>& morphisms,
                       const std::vector<NatSample>& transformations = {});

// (F, α) with F : Fun_inner -> Fun_outer and α : outer∘F ⇒ F∘inner.
struct MonadMorphism {
    std::string name;
    MonadInstance outer, inner;
    std::function<FunctorValue(const FunctorValue&)> F;
    std::function<Mor(const FunctorValue& G, const FunctorValue& G2, const NatComp& a, const AObj& x)> Fmap;
    std::function<Mor(const FunctorValue& G, const AObj& x)> alpha;  // outer(F G)(x) -> F(inner G)(x)
};
// Unit and multiplication diagrams at functors G on the inner side and objects x on the outer side.
LawReport verify_monad_morphism(const MonadMorphism& m, const std::vector<FunctorValue>& functors,
                                const std::vector<AObj>& objects);
MonadMorphism identity_monad_morphism(const MonadInstance& T);
// Composite of morphisms whose functor parts are identities: α2 ∘ α1.
MonadMorphism compose_identity_morphisms(const MonadMorphism& second, const MonadMorphism& first);

// Module morphism square F(θ_A(a, U)) = θ_B(F a, U), sampled.
std::vector<std::string> validate_module_functor(const BaseFunctor& F, const PnModule& A, const PnModule& B,
                                                 const SampleBudget& b = {});
// (F*, identity) from the monad of θ_B to the monad of θ_A. The identity is checked
// literally on every evaluation.
MonadMorphism monad_functor_on_module_morphism(const BaseFunctor& F, std::shared_ptr<ThetaMonad> TA,
                                               std::shared_ptr<ThetaMonad> TB);

// g*θ = θ ∘ (id × g); g must preserve ∩ and ∅.
PnModule restrict_module(const TableFunctor& g, const PosetPn& Pm, const PosetPn& Pn, const PnModule& theta);
void check_strict_monoidal(const TableFunctor& g, const PosetPn& Pm, const PosetPn& Pn);
// (Id, α) with α : Θ(g*θ) ⇒ Θ(θ) given by the σ-induced map along ĝ followed by restriction.
MonadMorphism induced_monad_morphism(const TableFunctor& g, std::shared_ptr<ThetaMonad> restricted,
                                     std::shared_ptr<ThetaMonad> full);

// Adjunction L ⊣ R : D -> C between functor categories.
struct FunAdjunction {
    std::string name;
    BasePtr D, C;
    std::function<FunctorValue(const FunctorValue&)> L, R;
    std::function<Mor(const FunctorValue&, const FunctorValue&, const NatComp&, const AObj&)> Lmap, Rmap;
    std::function<Mor(const FunctorValue& G, const AObj& d)> unit;    // G(d) -> R L G (d)
    std::function<Mor(const FunctorValue& H, const AObj& c)> counit;  // L R H (c) -> H(c)
};
// Adjunction Q ⊣ P between base categories (Q : D -> C, P : C -> D).
struct BaseAdjunction {
    BaseFunctor Q, P;
    std::function<AMor(const AObj& d)> unit;    // d -> P Q d
    std::function<AMor(const AObj& c)> counit;  // Q P c -> c
};
std::vector<std::string> validate_base_adjunction(const BaseAdjunction& adj, const SampleBudget& b = {});
// P* ⊣ Q* : Fun(D) -> Fun(C).
FunAdjunction precomposition_adjunction(const BaseAdjunction& adj);
// Triangle identities at sampled functors.
std::vector<std::string> validate_fun_adjunction(const ComputableCategory& M, const FunAdjunction& adj, const std::vector<FunctorValue>& Gs,
                                                 const std::vector<FunctorValue>& Hs, const std::vector<AObj>& ds,
                                                 const std::vector<AObj>& cs);
// R T L with unit (R η L)∘u and multiplication (R μ L)∘(R T ε T L).
MonadInstance composite_monad(const FunAdjunction& adj, const MonadInstance& T);

// Data of the comparison of two composite monads over a common category D.
struct BetaData {
    FunAdjunction inner_adj;  // L ⊣ R : D -> A, with T on A
    FunAdjunction outer_adj;  // L' ⊣ R' : D -> B, with T' on B
    MonadMorphism alpha;      // (F, α) with outer T' and inner T
    std::function<Mor(const FunctorValue& G, const AObj& b)> tauL;  // L'G (b) -> F L G (b)
    std::function<Mor(const FunctorValue& H, const AObj& d)> tauR;  // R' F H (d) -> R H (d)
};
// Both hypotheses at sampled inputs:
//   (F ε)(τ_L·τ_R) = ε' F at H in A, b in B;  (τ_R·τ_L) u' = u at G in D, d in D.
LawReport check_beta_hypotheses(const BetaData& data, const std::vector<FunctorValue>& Gs,
                                const std::vector<FunctorValue>& Hs, const std::vector<AObj>& ds,
                                const std::vector<AObj>& bs);
// (Id, β) with β : R'T'L' ⇒ RTL the three-step composite.
MonadMorphism beta_morphism(const BetaData& data);

nlohmann::json law_report_to_json(const LawReport& r);

}  // namespace pnm
