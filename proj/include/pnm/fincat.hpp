#pragma once
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace pnm {

struct MorphismEntry {
    int dom = 0;
    int cod = 0;
};

// Plain tables from which a category is assembled with explicit ids.
struct RawTable {
    std::vector<std::string> objects;
    std::vector<MorphismEntry> mors;
    std::vector<std::string> mor_names;
    std::vector<int> identities;
    std::vector<std::array<int, 3>> compose;  // (g, f, g∘f)
};

// A fully enumerated finite category. Objects and morphisms are dense integer ids;
// object names are interned strings. Composition is stored densely: for each
// morphism f and each position k in out(cod f), the id of out(cod f)[k] ∘ f.
class TableCategory {
public:
    TableCategory() = default;
    static TableCategory from_raw(RawTable r);

    int add_object(const std::string& name);
    // Adds a non-identity morphism (identities are created by add_object).
    int add_morphism(int dom, int cod, const std::string& name = "");
    // Records g ∘ f = h. Identity compositions are implicit.
    void set_compose(int g, int f, int h);
    // Builds the dense table; entries never set stay undefined (-1).
    void finalize();

    int num_objects() const { return static_cast<int>(obj_names_.size()); }
    int num_morphisms() const { return static_cast<int>(mors_.size()); }
    const std::string& object_name(int a) const { return obj_names_[a]; }
    const std::string& morphism_name(int f) const { return mor_names_[f]; }
    std::optional<int> find_object(const std::string& name) const;
    int dom(int f) const { return mors_[f].dom; }
    int cod(int f) const { return mors_[f].cod; }
    int identity(int a) const { return ident_[a]; }
    bool is_identity(int f) const { return ident_[mors_[f].dom] == f; }
    const std::vector<int>& out(int a) const { return out_[a]; }
    const std::vector<int>& in(int a) const { return in_[a]; }
    const std::vector<int>& hom(int a, int b) const;

    // g ∘ f, or -1 when undefined (including non-composable pairs).
    int compose(int g, int f) const;
    // Irreducible non-identity morphisms; they generate every morphism.
    const std::vector<int>& generators() const { return gens_; }

    bool operator==(const TableCategory& o) const;

private:
    std::vector<std::string> obj_names_;
    std::vector<std::string> mor_names_;
    std::unordered_map<std::string, int> obj_index_;
    std::vector<MorphismEntry> mors_;
    std::vector<int> ident_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> out_pos_;  // position of f within out(dom f)
    std::unordered_map<long long, std::vector<int>> hom_;
    std::vector<std::vector<int>> comp_;  // comp_[f][pos of g in out(cod f)]
    std::vector<std::tuple<int, int, int>> pending_;
    std::vector<int> gens_;
    bool finalized_ = false;
};

using CatPtr = std::shared_ptr<const TableCategory>;

std::vector<std::string> validate_category(const TableCategory& C);

struct TableFunctor {
    CatPtr src, dst;
    std::vector<int> obj;
    std::vector<int> mor;
};

std::vector<std::string> validate_functor(const TableFunctor& F);
TableFunctor identity_functor(const CatPtr& C);
TableFunctor compose_functors(const TableFunctor& G, const TableFunctor& F);  // G ∘ F
TableFunctor constant_functor(const CatPtr& src, const CatPtr& dst, int object);
bool functor_equal(const TableFunctor& F, const TableFunctor& G);

struct TableNat {
    TableFunctor src, dst;
    std::vector<int> comp;  // comp[a]: src(a) -> dst(a)
};

std::vector<std::string> validate_nat(const TableNat& a);
TableNat identity_nat(const TableFunctor& F);
TableNat vertical(const TableNat& b, const TableNat& a);    // b · a
TableNat horizontal(const TableNat& b, const TableNat& a);  // b * a
// (K α H)_x = K(α_{H x})
TableNat whisker(const TableNat& alpha, const TableFunctor& H, const TableFunctor& K);

// Product category: object (i, j) ↦ i*|D| + j; morphism (f, g) ↦ f*|D_mor| + g.
CatPtr product_category(const CatPtr& C, const CatPtr& D);
TableFunctor product_functor(const TableFunctor& F, const TableFunctor& G, const CatPtr& src,
                             const CatPtr& dst);
TableFunctor projection_first(const CatPtr& C, const CatPtr& D, const CatPtr& CD);
TableFunctor projection_second(const CatPtr& C, const CatPtr& D, const CatPtr& CD);
CatPtr opposite_category(const CatPtr& C);
CatPtr terminal_category();
CatPtr empty_category();

struct CommaCategory {
    CatPtr cat;
    TableFunctor proj;  // forgets the arrow component
    std::vector<std::pair<int, int>> objs;  // (i, f: a -> γ(i))
};
CommaCategory comma_category(int a, const TableFunctor& gamma);

// Checks that given object/morphism maps form an isomorphism of categories.
bool check_isomorphism(const TableCategory& C, const TableCategory& D, const std::vector<int>& objmap,
                       const std::vector<int>& mormap);

nlohmann::json table_to_json(const TableCategory& C);
TableCategory table_from_json(const nlohmann::json& j);
nlohmann::json functor_to_json(const TableFunctor& F);
nlohmann::json nat_to_json(const TableNat& a);

}  // namespace pnm
