#pragma once
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pnm/cubes.hpp"
#include "pnm/fincat.hpp"
#include "pnm/targetcat.hpp"

namespace pnm {

// Right Kan extension of F along γ together with its counit and the factorization
// of the universal property. The target category must outlive the result.
struct RanResult {
    Diagram ext;            // over cod(γ)
    std::vector<Mor> eps;   // eps[i]: ext(γ i) -> F(i)
    // Given G over cod(γ) and a natural δ_i : G(γ i) -> F(i), the unique σ : G ⇒ Ran
    // with eps ∘ σγ = δ. Uniqueness is confirmed by two independent solves.
    std::function<DiagramMap(const Diagram& G, const std::vector<Mor>& delta)> factorize;
};

RanResult ran_generic(const ComputableCategory& M, const TableFunctor& gamma, const Diagram& F);

// Violations of: injective on objects, fully faithful, no arrows from outside the image into it.
std::vector<std::string> embedding_hypotheses(const TableFunctor& gamma);
// Closed form for such embeddings: F on the image, the terminal object elsewhere.
RanResult ran_embedding_fast(const ComputableCategory& M, const TableFunctor& gamma, const Diagram& F);
RanResult ran_phi_fast(const ComputableCategory& M, const TableFunctor& phi, const Diagram& chi);

// For a commuting square β∘π = τ∘γ (π: I'→I, γ: I'→A', β: I→A, τ: A'→A), the
// transformation σ : Ran_γ(F∘π) ⇒ τ*(Ran_β F). The universal property yields
// κ : τ*(Ran_β F) ⇒ Ran_γ(F∘π); σ is its componentwise inverse.
DiagramMap ran_transform(const ComputableCategory& M, const TableFunctor& pi, const TableFunctor& tau,
                         const TableFunctor& gamma, const TableFunctor& beta, const RanResult& ran_gamma,
                         const RanResult& ran_beta);

// ĝ : Λ^m -> Λ^n for a strict monoidal g : P(m) -> P(n), with φ_n∘g = ĝ∘φ_m.
TableFunctor g_hat(const TableFunctor& g, const PosetPn& Pm, const PosetPn& Pn, const LambdaN& Lm, const LambdaN& Ln);

class KanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pnm
