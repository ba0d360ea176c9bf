#pragma once
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnm/fincat.hpp"
#include "pnm/modp.hpp"
#include "pnm/rng.hpp"

namespace pnm {

// Object of a target category: a dimension (vector spaces) or a cardinality
// including the basepoint (pointed sets).
struct Obj {
    int n = 0;
    bool operator==(const Obj&) const = default;
    auto operator<=>(const Obj&) const = default;
};

// Matrix (row-major, cod x dom) or function table (length dom, v[0] = 0).
struct Mor {
    int dom = 0;
    int cod = 0;
    std::vector<int> v;
    bool operator==(const Mor&) const = default;
};

struct Diagram {
    CatPtr index;
    std::vector<Obj> obj;
    std::vector<Mor> mor;
    bool operator==(const Diagram& o) const { return obj == o.obj && mor == o.mor; }
};

// Morphism of diagrams over the same index: components D(i) -> E(i).
struct DiagramMap {
    std::vector<Mor> comp;
};

// Raised by mediating-map constructors when a competing (co)cone fails to commute.
class ConeError : public std::runtime_error {
public:
    ConeError(int index_morphism, const std::string& what)
        : std::runtime_error(what), morphism(index_morphism) {}
    int morphism;
};

struct LimitCone {
    Obj apex;
    std::vector<Mor> legs;  // apex -> D(i)
    // Given legs X -> D(i) of a commuting cone, the unique map X -> apex.
    std::function<Mor(const std::vector<Mor>&, const Obj& X)> mediate;
};

struct ColimitCocone {
    Obj apex;
    std::vector<Mor> legs;  // D(i) -> apex
    // Given legs D(i) -> X of a commuting cocone, the unique map apex -> X.
    std::function<Mor(const std::vector<Mor>&, const Obj& X)> mediate;
};

class ComputableCategory {
public:
    virtual ~ComputableCategory() = default;
    virtual std::string name() const = 0;
    virtual bool pointed() const = 0;

    virtual bool valid_object(const Obj& a) const = 0;
    virtual bool valid_morphism(const Mor& f) const = 0;
    virtual Mor identity(const Obj& a) const = 0;
    virtual Mor compose(const Mor& g, const Mor& f) const = 0;  // g ∘ f
    bool equal(const Mor& f, const Mor& g) const { return f == g; }

    // Zero object: terminal and initial at once.
    virtual Obj terminal() const = 0;
    Obj initial() const { return terminal(); }
    virtual Mor to_terminal(const Obj& a) const = 0;
    virtual Mor from_initial(const Obj& a) const = 0;
    virtual Mor zero_morphism(const Obj& a, const Obj& b) const = 0;

    virtual bool is_isomorphism(const Mor& f) const = 0;
    virtual std::optional<Mor> inverse(const Mor& f) const = 0;

    virtual LimitCone limit(const Diagram& D) const = 0;
    virtual ColimitCocone colimit(const Diagram& D) const = 0;

    // Finite products (first factor most significant for pointed sets).
    virtual Obj product(const std::vector<Obj>& xs) const = 0;
    virtual Mor projection(const std::vector<Obj>& xs, int i) const = 0;
    virtual Mor tuple(const Obj& src, const std::vector<Obj>& xs, const std::vector<Mor>& fs) const = 0;
    Mor product_map(const std::vector<Mor>& fs) const;

    // Tensor square for vector spaces, smash square for pointed sets.
    virtual Obj square_obj(const Obj& a) const = 0;
    virtual Mor square_mor(const Mor& f) const = 0;

    // Solves legs_i ∘ m = targets_i for m : X -> apex (forward or reverse pivot order).
    virtual std::optional<Mor> factor_through_cone(const Obj& apex, const std::vector<Mor>& legs,
                                                   const std::vector<Mor>& targets, const Obj& X,
                                                   bool reverse) const = 0;
    // Solves m ∘ legs_i = targets_i for m : apex -> X.
    virtual std::optional<Mor> factor_through_cocone(const Obj& apex, const std::vector<Mor>& legs,
                                                     const std::vector<Mor>& targets, const Obj& X,
                                                     bool reverse) const = 0;

    virtual Obj random_object(Rng& r, int max_size) const = 0;
    virtual Mor random_morphism(Rng& r, const Obj& a, const Obj& b) const = 0;
    virtual Mor random_iso(Rng& r, const Obj& a) const = 0;
    // Every object of size at most max_size (dimension, or non-basepoint count).
    virtual std::vector<Obj> objects_up_to(int max_size) const = 0;
    virtual int size_of(const Obj& a) const = 0;

    Mor compose_all(const std::vector<Mor>& fs) const;  // fs[0] ∘ fs[1] ∘ ...
};

class FinVectGF final : public ComputableCategory {
public:
    explicit FinVectGF(int p) : F_(p) {}
    const Field& field() const { return F_; }
    std::string name() const override { return "GF(" + std::to_string(F_.p()) + ")"; }
    bool pointed() const override { return false; }

    static Mat to_mat(const Mor& f) { Mat m(f.cod, f.dom); m.a = f.v; return m; }
    static Mor to_mor(const Mat& m) { return Mor{m.cols, m.rows, m.a}; }

    bool valid_object(const Obj& a) const override { return a.n >= 0; }
    bool valid_morphism(const Mor& f) const override;
    Mor identity(const Obj& a) const override { return to_mor(F_.identity(a.n)); }
    Mor compose(const Mor& g, const Mor& f) const override;
    Obj terminal() const override { return {0}; }
    Mor to_terminal(const Obj& a) const override { return Mor{a.n, 0, {}}; }
    Mor from_initial(const Obj& a) const override { return Mor{0, a.n, {}}; }
    Mor zero_morphism(const Obj& a, const Obj& b) const override {
        return Mor{a.n, b.n, std::vector<int>(static_cast<size_t>(a.n) * b.n, 0)};
    }
    bool is_isomorphism(const Mor& f) const override;
    std::optional<Mor> inverse(const Mor& f) const override;
    LimitCone limit(const Diagram& D) const override;
    ColimitCocone colimit(const Diagram& D) const override;
    Obj product(const std::vector<Obj>& xs) const override;
    Mor projection(const std::vector<Obj>& xs, int i) const override;
    Mor tuple(const Obj& src, const std::vector<Obj>& xs, const std::vector<Mor>& fs) const override;
    Obj square_obj(const Obj& a) const override { return {a.n * a.n}; }
    Mor square_mor(const Mor& f) const override { return to_mor(F_.kron(to_mat(f), to_mat(f))); }
    std::optional<Mor> factor_through_cone(const Obj& apex, const std::vector<Mor>& legs,
                                           const std::vector<Mor>& targets, const Obj& X,
                                           bool reverse) const override;
    std::optional<Mor> factor_through_cocone(const Obj& apex, const std::vector<Mor>& legs,
                                             const std::vector<Mor>& targets, const Obj& X,
                                             bool reverse) const override;
    Obj random_object(Rng& r, int max_size) const override { return {r.uniform(0, max_size)}; }
    Mor random_morphism(Rng& r, const Obj& a, const Obj& b) const override;
    Mor random_iso(Rng& r, const Obj& a) const override;
    std::vector<Obj> objects_up_to(int max_size) const override;
    int size_of(const Obj& a) const override { return a.n; }

private:
    Field F_;
};

class FinSetPointed final : public ComputableCategory {
public:
    std::string name() const override { return "pointed"; }
    bool pointed() const override { return true; }
    bool valid_object(const Obj& a) const override { return a.n >= 1; }
    bool valid_morphism(const Mor& f) const override;
    Mor identity(const Obj& a) const override;
    Mor compose(const Mor& g, const Mor& f) const override;
    Obj terminal() const override { return {1}; }
    Mor to_terminal(const Obj& a) const override { return Mor{a.n, 1, std::vector<int>(a.n, 0)}; }
    Mor from_initial(const Obj& a) const override { return Mor{1, a.n, {0}}; }
    Mor zero_morphism(const Obj& a, const Obj& b) const override { return Mor{a.n, b.n, std::vector<int>(a.n, 0)}; }
    bool is_isomorphism(const Mor& f) const override;
    std::optional<Mor> inverse(const Mor& f) const override;
    LimitCone limit(const Diagram& D) const override;
    ColimitCocone colimit(const Diagram& D) const override;
    Obj product(const std::vector<Obj>& xs) const override;
    Mor projection(const std::vector<Obj>& xs, int i) const override;
    Mor tuple(const Obj& src, const std::vector<Obj>& xs, const std::vector<Mor>& fs) const override;
    Obj square_obj(const Obj& a) const override { return {1 + (a.n - 1) * (a.n - 1)}; }
    Mor square_mor(const Mor& f) const override;
    std::optional<Mor> factor_through_cone(const Obj& apex, const std::vector<Mor>& legs,
                                           const std::vector<Mor>& targets, const Obj& X,
                                           bool reverse) const override;
    std::optional<Mor> factor_through_cocone(const Obj& apex, const std::vector<Mor>& legs,
                                             const std::vector<Mor>& targets, const Obj& X,
                                             bool reverse) const override;
    Obj random_object(Rng& r, int max_size) const override { return {1 + r.uniform(0, max_size)}; }
    Mor random_morphism(Rng& r, const Obj& a, const Obj& b) const override;
    Mor random_iso(Rng& r, const Obj& a) const override;
    std::vector<Obj> objects_up_to(int max_size) const override;
    int size_of(const Obj& a) const override { return a.n - 1; }
};

using TargetPtr = std::shared_ptr<const ComputableCategory>;

std::vector<std::string> validate_diagram(const ComputableCategory& M, const Diagram& D);
std::vector<std::string> validate_diagram_map(const ComputableCategory& M, const Diagram& D, const Diagram& E,
                                              const DiagramMap& a);
Diagram constant_diagram(const ComputableCategory& M, const CatPtr& index, const Obj& x);
// D ∘ F for a table functor F into D's index.
Diagram precompose(const Diagram& D, const TableFunctor& F);
DiagramMap identity_map(const ComputableCategory& M, const Diagram& D);
DiagramMap compose_maps(const ComputableCategory& M, const DiagramMap& b, const DiagramMap& a);

// Random functor on a thin index category (at most one morphism between objects).
Diagram random_thin_diagram(const ComputableCategory& M, const CatPtr& index, Rng& r, int max_size);
// Random natural map out of D: a quotient when iso is false, a conjugation otherwise.
std::pair<Diagram, DiagramMap> random_diagram_map(const ComputableCategory& M, const Diagram& D, Rng& r, bool iso);

nlohmann::json mor_to_json(const Mor& f);
nlohmann::json obj_to_json(const ComputableCategory& M, const Obj& a);
nlohmann::json diagram_to_json(const ComputableCategory& M, const Diagram& D);

}  // namespace pnm
