#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "pnm/monadgen.hpp"

namespace pnm {

// Functors M -> M, as functors on the one-fold product base.
FunctorValue identity_functor_value(std::shared_ptr<const ProductBase> A);
FunctorValue zero_functor_value(std::shared_ptr<const ProductBase> A);
FunctorValue tensor_square_functor_value(std::shared_ptr<const ProductBase> A);
// Lookup by name: identity, zero, tensor-square. Throws std::invalid_argument otherwise.
FunctorValue registry_functor(const std::string& name, std::shared_ptr<const ProductBase> A);
std::vector<std::string> registry_names();

// Every morphism a -> b of the target category.
std::vector<Mor> all_morphisms(const ComputableCategory& M, const Obj& a, const Obj& b);
// Tabulates F on every object and morphism of size at most max_size.
nlohmann::json tabulate_functor(const FunctorValue& F, const ProductBase& A, int max_size);
// A functor given by explicit tables, checked for identities and composition on
// every listed pair. Evaluating it outside its tables throws std::out_of_range.
FunctorValue table_functor_value(const nlohmann::json& table, std::shared_ptr<const ProductBase> A);

// Shared bases, adjunctions and monads for a fixed target category.
class CocrossContext {
public:
    CocrossContext(TargetPtr M, int max_size);
    const ComputableCategory& target() const { return *M_; }
    const TargetPtr& target_ptr() const { return M_; }
    int max_size() const { return max_size_; }

    std::shared_ptr<const ProductBase> base(int n);  // M^n
    BaseFunctor product(int n);                      // ⊓ : M^n -> M
    BaseFunctor diagonal(int n);                     // Δ : M -> M^n
    BaseAdjunction diagonal_adjunction(int n);       // Δ ⊣ ⊓
    FunAdjunction fun_adjunction(int n);             // ⊓^* ⊣ Δ^*
    std::shared_ptr<ThetaMonad> theta(int n);        // monad of θ^n on Fun(M^n, M)
    // Monad of the restriction of θ^n along the preimage map of s.
    std::shared_ptr<ThetaMonad> restricted_theta(const SurjectionMap& s);
    // Δ^* Θ ⊓^* on Fun(M, M).
    MonadInstance diagonal_cocross_monad(int n);

    // Δ^(s) : M^m -> M^n and ⊓^(s) : M^n -> M^m.
    BaseFunctor diagonal_along(const SurjectionMap& s);
    BaseFunctor product_along(const SurjectionMap& s);
    BaseAdjunction adjunction_along(const SurjectionMap& s);

private:
    TargetPtr M_;
    int max_size_;
    std::mutex lock_;
    std::map<int, std::shared_ptr<const ProductBase>> bases_;
    std::map<int, std::shared_ptr<ThetaMonad>> thetas_;
    std::map<std::vector<int>, std::shared_ptr<ThetaMonad>> restricted_;
};

std::string surjection_name(const SurjectionMap& s);

// cr^n F(a_1, ..., a_n): the total cofiber of U ↦ F(⊓ θ^n(a, U)).
struct CocrossValue {
    Obj value;
    Diagram cube;
    std::shared_ptr<const ThetaMonad::Entry> entry;
};
CocrossValue cocross(CocrossContext& ctx, int n, const FunctorValue& F, const AObj& inputs);

// Total cofiber of a cube computed by iterated cofibers along the last coordinate.
struct CofiberOracle {
    Obj value;
    Mor top_leg;  // χ([n]) -> value
};
CofiberOracle iterated_cofiber(const ComputableCategory& M, const PosetPn& P, const Diagram& chi);

// Comparison of the colimit of the extended cube with the oracle: both mediating
// maps and their composites.
struct OracleComparison {
    Obj main, oracle;
    Mor to_oracle, from_oracle;
    bool sizes_equal = false;
    bool mutually_inverse = false;
};
OracleComparison compare_with_oracle(const ComputableCategory& M, const PosetPn& P, const TableFunctor& phi,
                                     const Diagram& chi, const ColimitCocone& cc);

// The monad morphism cr^m ⇒ cr^n of a surjection s : [n] -> [m], with its pieces.
struct SurjectionMorphism {
    SurjectionMap s;
    MonadMorphism module_part;  // restriction along Δ^(s)
    MonadMorphism beta;         // comparison of composite monads
    MonadMorphism induced;      // Θ(restricted) ⇒ Θ(θ^n) on Fun(M^n, M)
    MonadMorphism whiskered;    // induced, conjugated by the diagonal adjunction
    MonadMorphism total;        // whiskered ∘ beta
    BetaData data;
};
SurjectionMorphism surjection_monad_morphism(CocrossContext& ctx, const SurjectionMap& s);

// Pastes Δ^m ⊣ ⊓^m with Δ^(s) ⊣ ⊓^(s) and compares right adjoint, unit and counit
// with Δ^n ⊣ ⊓^n componentwise at the given objects (of M and of M^n).
LawReport pasted_adjunction_agreement(CocrossContext& ctx, const SurjectionMap& s, const std::vector<AObj>& as,
                                      const std::vector<AObj>& cs);

}  // namespace pnm
