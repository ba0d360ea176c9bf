#pragma once
#include <algorithm>
#include <string>
#include <vector>

#include "pnm/fincat.hpp"

namespace pnm {

constexpr int kDefaultCap = 4;
// Cap applied when none is passed explicitly; raised by the CLI's override flag.
int cube_cap();
void set_cube_cap(int cap);

// P(n): object id = bitmask (bit k-1 for element k), morphisms = inclusions.
struct PosetPn {
    int n = 0;
    CatPtr cat;
    std::vector<int> mor_table;  // U * 2^n + V -> morphism id of U ⊆ V, or -1
    int full() const { return (1 << n) - 1; }
    int mor(int U, int V) const { return mor_table[static_cast<size_t>(U) * (1 << n) + V]; }
    static int meet(int U, int V) { return U & V; }
};

// Λ^n: object id = base-3 code with the first coordinate most significant;
// digits 0 -> "0", 1 -> "1", 2 -> "L". Morphism id = base-5 code over the
// morphisms of Λ: 0 id0, 1 id1, 2 idL, 3 t: 0 -> 1, 4 s: 0 -> L.
struct LambdaN {
    int n = 0;
    CatPtr cat;
    int digit(int obj, int k) const;
    int encode(const std::vector<int>& digits) const;
    int ones() const;  // (1,...,1)
};

constexpr int kL = 2;
inline int diamond_digit(int a, int b) { return (a == kL || b == kL) ? kL : std::min(a, b); }

struct SurjectionMap {
    int n = 0, m = 0;
    std::vector<int> s;  // s[i] in [0, m), 0-based
};

void check_cap(int n, int cap);
std::string mask_name(int U, int n);

PosetPn build_pn(int n, int cap = cube_cap());
LambdaN build_lambda_n(int n, int cap = cube_cap());
CatPtr build_interval_power(int n, int cap = cube_cap());

// A functor into a thin category, determined by its object map.
TableFunctor thin_functor(const CatPtr& src, const CatPtr& dst, const std::vector<int>& objmap);

int lambda_diamond(const LambdaN& L, int x, int y);
TableFunctor omega_n(const PosetPn& P, const CatPtr& In);
TableFunctor iota_n(const CatPtr& In, const LambdaN& L);
TableFunctor phi_n(const PosetPn& P, const LambdaN& L);
TableFunctor eta_corner(const LambdaN& L);
// ⋄ on Λ^n × Λ^n (the product category must be product_category(L.cat, L.cat)).
TableFunctor diamond_functor(const LambdaN& L, const CatPtr& LxL);
TableFunctor intersection_functor(const PosetPn& P, const CatPtr& PxP);

bool is_surjection(const SurjectionMap& s);
SurjectionMap compose_surjections(const SurjectionMap& s, const SurjectionMap& t);  // s ∘ t
SurjectionMap identity_surjection(int n);
// P(s): P(m) -> P(n), U ↦ s^{-1}(U).
TableFunctor poset_of_surjection(const SurjectionMap& s, const PosetPn& Pm, const PosetPn& Pn);
int preimage_mask(const SurjectionMap& s, int U);

nlohmann::json mask_to_json(int U, int n);

}  // namespace pnm
