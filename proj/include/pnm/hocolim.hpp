#pragma once
#include <vector>

#include "pnm/fincat.hpp"
#include "pnm/kan.hpp"
#include "pnm/targetcat.hpp"

namespace pnm {

// Homotopy colimits are ordinary colimits; weak equivalences are isomorphisms.
ColimitCocone hocolim(const ComputableCategory& M, const Diagram& D);

// colim D -> colim E induced by a ⇒ between diagrams over the same index.
Mor colim_map(const ComputableCategory& M, const ColimitCocone& cD, const ColimitCocone& cE, const DiagramMap& a);

// colim_I (D∘α) -> colim_J D, mediating the restricted cocone.
Mor restriction_map(const ComputableCategory& M, const TableFunctor& alpha, const ColimitCocone& cDa,
                    const ColimitCocone& cD);
Mor restriction_map(const ComputableCategory& M, const TableFunctor& alpha, const Diagram& D);

// Slice i of a diagram over I×J, as a diagram over J.
Diagram slice_second(const Diagram& D, const CatPtr& I, const CatPtr& J, int i);

// colim over I of (i ↦ colim over J of D(i,-)): the second factor is collapsed first.
struct NestedColimit {
    std::vector<ColimitCocone> inner;
    Diagram outer;  // over I
    ColimitCocone outer_colim;
};
NestedColimit nested_colim_second(const ComputableCategory& M, const CatPtr& I, const CatPtr& J, const Diagram& D);

struct FubiniIso {
    NestedColimit nested;
    ColimitCocone total;
    Mor forward;   // nested -> total
    Mor backward;  // total -> nested
};
// Throws std::logic_error if the comparison maps are not mutually inverse.
FubiniIso fubini(const ComputableCategory& M, const CatPtr& I, const CatPtr& J, const Diagram& D);

// Precondition: every component of a is an isomorphism.
bool homotopy_invariance_check(const ComputableCategory& M, const Diagram& D, const Diagram& E, const DiagramMap& a);

// Functors and categories around γ: I -> A and β: J -> B.
struct ProductSetup {
    TableFunctor gamma, beta;
    CatPtr IJ, AB, IB;
    TableFunctor gxb;  // γ×β : I×J -> A×B
    TableFunctor ixb;  // Id×β : I×J -> I×B
    TableFunctor gxi;  // γ×Id : I×B -> A×B
};
ProductSetup make_product_setup(const TableFunctor& gamma, const TableFunctor& beta);

// colim_{A×B} Ran_{γ×β} F ≅ colim_A Ran_γ H, with H(i) = colim_B Ran_{Id×β} F (i,-).
struct ProductRanIso {
    Diagram H;               // over I
    RanResult ranH;          // Ran_γ H
    ColimitCocone total;     // colim_{A×B} R1
    ColimitCocone target;    // colim_A Ran_γ H
    Mor forward;             // total -> target
    Mor backward;            // target -> total
};
// R1 = Ran_{γ×β} F and R2 = Ran_{Id×β} F, either algorithm. When generic is set,
// Ran_γ H is computed by comma limits instead of the closed form.
ProductRanIso product_ran_colimit_iso(const ComputableCategory& M, const ProductSetup& S, const RanResult& R1,
                         const RanResult& R2, bool generic = false);

// colim_A Ran_γ(F∘π) -> colim_B Ran_β F: the σ-induced map followed by restriction along τ.
Mor ran_colimit_map(const ComputableCategory& M, const TableFunctor& tau, const DiagramMap& sigma,
                  const Diagram& ran_gamma_Fpi, const ColimitCocone& c_src, const Diagram& ran_beta_F,
                  const ColimitCocone& c_dst);

}  // namespace pnm

#include <cstdint>

#include "json.hpp"

namespace pnm {

// The same diagram reindexed over J×I.
Diagram swap_factors(const Diagram& D, const CatPtr& I, const CatPtr& J, const CatPtr& JI);

struct AxiomItemResult {
    int item = 0;
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<nlohmann::json> witnesses;  // failing cases only
};

// Seeded check of the five homotopy-colimit axioms for the colimit instance,
// `cases` diagrams per item, object sizes at most max_size.
std::vector<AxiomItemResult> run_hocolim_axioms(const ComputableCategory& M, std::uint64_t seed, int cases,
                                                int max_size = 3);

// Colimit of the constant one-point diagram in unpointed finite sets over a
// discrete index with k objects: the k-element set, which is not terminal for k != 1.
nlohmann::json unpointed_constant_terminal_demo(int k);

}  // namespace pnm
