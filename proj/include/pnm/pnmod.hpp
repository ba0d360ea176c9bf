#pragma once
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pnm/basecat.hpp"
#include "pnm/cubes.hpp"

namespace pnm {

// Action of P(n) on a base category: θ(a, U) and θ(f, U ⊆ V) : θ(a, U) -> θ(a', V).
struct PnModule {
    BasePtr A;
    int n = 0;
    std::string name;
    std::function<AObj(const AObj&, int)> obj;
    std::function<AMor(const AMor&, int, int)> mor;
    // Transpose: the endofunctor a ↦ θ(a, U).
    AObj hat(int U, const AObj& a) const { return obj(a, U); }
    AMor hat(int U, const AMor& f) const { return mor(f, U, U); }
};

// Sample sizes for infinite base categories; tables are always checked exhaustively.
struct SampleBudget {
    std::uint64_t seed = 0;
    int objects = 64;
    int morphisms = 64;
};

// Unitality, associativity and functoriality of the action. Empty when valid.
std::vector<std::string> validate_module(const PnModule& M, const SampleBudget& b = {});

PnModule trivial_module(BasePtr A, int n);
// Coordinates outside U are replaced by the zero object.
PnModule theta_n(std::shared_ptr<const ProductBase> A);

// Strict idempotent comonad: comultiplication is the identity, so only K and ε are stored.
struct Comonad {
    std::string name;
    std::function<AObj(const AObj&)> obj;
    std::function<AMor(const AMor&)> mor;
    std::function<AMor(const AObj&)> counit;  // K(a) -> a
};

struct ComonadSet {
    BasePtr A;
    std::vector<Comonad> K;
};

std::vector<std::string> validate_comonads(const ComonadSet& Ks, const SampleBudget& b = {});
// K_j = θ̂([n] \ {j}), ε_j = θ(id, [n] \ {j} ⊆ [n]).
ComonadSet module_to_comonads(const PnModule& M);
// θ(a, U) = composite of the K_j over j not in U.
PnModule comonads_to_module(const ComonadSet& Ks);

// Pointwise comparison on the same inputs validate_module would visit; returns mismatches.
struct Comparison {
    int points = 0;
    std::vector<std::string> mismatches;
};
Comparison compare_modules(const PnModule& X, const PnModule& Y, const SampleBudget& b = {});
Comparison compare_comonads(const ComonadSet& X, const ComonadSet& Y, const SampleBudget& b = {});

// Strict idempotent comonad on a table category.
struct TableComonad {
    TableFunctor K;
    TableNat eps;  // K ⇒ Id
};
// Full subcategory with an inclusion and a right adjoint whose unit is the identity.
struct CoreflectivePair {
    CatPtr A;
    std::vector<int> objects;  // objects of A in the subcategory, increasing
    CatPtr sub;
    TableFunctor incl;     // sub -> A
    TableFunctor R;        // A -> sub
    TableNat counit;       // incl∘R ⇒ Id_A
};
std::vector<std::string> validate_table_comonad(const TableComonad& K);
std::vector<std::string> validate_coreflective(const CoreflectivePair& P);
CoreflectivePair comonad_to_coreflective(const TableComonad& K);
TableComonad coreflective_to_comonad(const CoreflectivePair& P);
Comonad as_comonad(const TableComonad& K);
std::shared_ptr<const TableBase> table_base(const CatPtr& C);

// Full subcategory of C on the given objects (names preserved).
CatPtr full_subcategory(const CatPtr& C, const std::vector<int>& objects, TableFunctor* incl = nullptr);

// Coreflective subcategories of a target category, as comonads on it.
struct TargetComonad {
    std::string name;
    std::function<Obj(const Obj&)> obj;
    std::function<Mor(const Mor&)> mor;
    std::function<Mor(const Obj&)> counit;
};
TargetComonad zero_coreflective(TargetPtr M);      // subcategory on the zero object
TargetComonad identity_coreflective(TargetPtr M);  // the whole category

// θ(a, U)_j = a_j for j in U and R_j(a_j) otherwise.
PnModule theta_from_coreflectives(std::shared_ptr<const ProductBase> A, std::vector<TargetComonad> Rs);

// Morphism of modules on the same base: components θ(a, U) -> θ'(a, U).
struct ModuleMorphism {
    std::function<AMor(const AObj&, int)> comp;
};
// θ_{A0} -> θ_A: the zero map on coordinates outside U, the identity inside.
ModuleMorphism comparison_from_zero(std::shared_ptr<const ProductBase> A, const PnModule& target);
std::vector<std::string> validate_module_morphism(const PnModule& X, const PnModule& Y, const ModuleMorphism& m,
                                                  const SampleBudget& b = {});

nlohmann::json module_to_json(const PnModule& M);  // table bases only

}  // namespace pnm

namespace pnm {

// Partial orders on k objects up to isomorphism, as thin categories.
std::vector<CatPtr> posets_up_to_iso(int k);
// Module on a thin category from its object table: table[U][a] = θ(a, U).
PnModule thin_module(const CatPtr& C, int n, const std::vector<std::vector<int>>& table);
// Every P(n)-module on a thin category, n ≤ 2, found by search against the axioms.
std::vector<PnModule> enumerate_thin_modules(const CatPtr& C, int n);
// Every strict idempotent comonad on a thin category.
std::vector<TableComonad> enumerate_table_comonads(const CatPtr& C);
// Every coreflective full subcategory of a thin category.
std::vector<CoreflectivePair> enumerate_coreflectives(const CatPtr& C);

}  // namespace pnm
