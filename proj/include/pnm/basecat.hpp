#pragma once
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "pnm/fincat.hpp"
#include "pnm/rng.hpp"
#include "pnm/targetcat.hpp"

namespace pnm {

// Object of a module's base category: a table object {id}, or a tuple of sizes
// of target-category objects.
struct AObj {
    std::vector<int> c;
    bool operator==(const AObj&) const = default;
    auto operator<=>(const AObj&) const = default;
};

// Morphism of a base category: a table morphism id, or one target morphism per coordinate.
struct AMor {
    AObj dom, cod;
    int id = -1;
    std::vector<Mor> parts;
    bool operator==(const AMor&) const = default;
};

class BaseCategory {
public:
    virtual ~BaseCategory() = default;
    virtual std::string name() const = 0;
    // True when every object and hom-set can be listed.
    virtual bool enumerable() const = 0;
    // All objects, or for an infinite category all objects of size at most the sampling bound.
    virtual std::vector<AObj> objects() const = 0;
    virtual std::vector<AMor> hom(const AObj& a, const AObj& b) const = 0;  // enumerable only
    virtual AMor identity(const AObj& a) const = 0;
    virtual AMor compose(const AMor& g, const AMor& f) const = 0;
    virtual AObj random_object(Rng& r) const = 0;
    virtual AMor random_morphism(Rng& r, const AObj& a, const AObj& b) const = 0;
    virtual nlohmann::json obj_json(const AObj& a) const = 0;
    virtual nlohmann::json mor_json(const AMor& f) const = 0;
    std::string key(const AObj& a) const;
};
using BasePtr = std::shared_ptr<const BaseCategory>;

class TableBase final : public BaseCategory {
public:
    explicit TableBase(CatPtr C) : C_(std::move(C)) {}
    const CatPtr& cat() const { return C_; }
    std::string name() const override { return "table"; }
    bool enumerable() const override { return true; }
    std::vector<AObj> objects() const override;
    std::vector<AMor> hom(const AObj& a, const AObj& b) const override;
    AMor identity(const AObj& a) const override;
    AMor compose(const AMor& g, const AMor& f) const override;
    AObj random_object(Rng& r) const override;
    AMor random_morphism(Rng& r, const AObj& a, const AObj& b) const override;  // throws if hom is empty
    nlohmann::json obj_json(const AObj& a) const override { return C_->object_name(a.c[0]); }
    nlohmann::json mor_json(const AMor& f) const override { return C_->morphism_name(f.id); }
    AObj obj(int i) const { return AObj{{i}}; }
    AMor mor(int f) const;

private:
    CatPtr C_;
};

// M^{×arity}, sampled through objects of size at most max_size.
class ProductBase final : public BaseCategory {
public:
    ProductBase(TargetPtr M, int arity, int max_size) : M_(std::move(M)), k_(arity), max_(max_size) {}
    const ComputableCategory& target() const { return *M_; }
    const TargetPtr& target_ptr() const { return M_; }
    int arity() const { return k_; }
    int max_size() const { return max_; }
    std::string name() const override { return M_->name() + "^" + std::to_string(k_); }
    bool enumerable() const override { return false; }
    std::vector<AObj> objects() const override;
    std::vector<AMor> hom(const AObj&, const AObj&) const override;
    AMor identity(const AObj& a) const override;
    AMor compose(const AMor& g, const AMor& f) const override;
    AObj random_object(Rng& r) const override;
    AMor random_morphism(Rng& r, const AObj& a, const AObj& b) const override;
    nlohmann::json obj_json(const AObj& a) const override;
    nlohmann::json mor_json(const AMor& f) const override;
    Obj coord(const AObj& a, int i) const { return Obj{a.c[i]}; }
    AMor make(const AObj& a, const AObj& b, std::vector<Mor> parts) const { return AMor{a, b, -1, std::move(parts)}; }

private:
    TargetPtr M_;
    int k_;
    int max_;
};

}  // namespace pnm
