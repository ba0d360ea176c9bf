#include "pnm/basecat.hpp"

#include <stdexcept>

namespace pnm {

std::string BaseCategory::key(const AObj& a) const {
    std::string s;
    for (int x : a.c) s += std::to_string(x) + ",";
    return s;
}

std::vector<AObj> TableBase::objects() const {
    std::vector<AObj> out;
    for (int i = 0; i < C_->num_objects(); ++i) out.push_back(obj(i));
    return out;
}

AMor TableBase::mor(int f) const { return AMor{obj(C_->dom(f)), obj(C_->cod(f)), f, {}}; }

std::vector<AMor> TableBase::hom(const AObj& a, const AObj& b) const {
    std::vector<AMor> out;
    for (int f : C_->hom(a.c[0], b.c[0])) out.push_back(mor(f));
    return out;
}

AMor TableBase::identity(const AObj& a) const { return mor(C_->identity(a.c[0])); }

AMor TableBase::compose(const AMor& g, const AMor& f) const {
    int h = C_->compose(g.id, f.id);
    if (h < 0) throw std::invalid_argument("TableBase::compose: not composable");
    return mor(h);
}

AObj TableBase::random_object(Rng& r) const { return obj(r.uniform(0, C_->num_objects() - 1)); }

AMor TableBase::random_morphism(Rng& r, const AObj& a, const AObj& b) const {
    auto h = C_->hom(a.c[0], b.c[0]);
    if (h.empty()) throw std::invalid_argument("TableBase::random_morphism: empty hom-set");
    return mor(h[r.uniform(0, static_cast<int>(h.size()) - 1)]);
}

std::vector<AObj> ProductBase::objects() const {
    auto base = M_->objects_up_to(max_);
    std::vector<AObj> out{AObj{}};
    for (int i = 0; i < k_; ++i) {
        std::vector<AObj> next;
        for (const auto& a : out)
            for (const auto& x : base) {
                AObj b = a;
                b.c.push_back(x.n);
                next.push_back(b);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<AMor> ProductBase::hom(const AObj&, const AObj&) const {
    throw std::logic_error("ProductBase::hom: hom-sets are not enumerated");
}

AMor ProductBase::identity(const AObj& a) const {
    std::vector<Mor> ps;
    for (int i = 0; i < k_; ++i) ps.push_back(M_->identity(coord(a, i)));
    return make(a, a, ps);
}

AMor ProductBase::compose(const AMor& g, const AMor& f) const {
    if (!(g.dom == f.cod)) throw std::invalid_argument("ProductBase::compose: not composable");
    std::vector<Mor> ps;
    for (int i = 0; i < k_; ++i) ps.push_back(M_->compose(g.parts[i], f.parts[i]));
    return make(f.dom, g.cod, ps);
}

AObj ProductBase::random_object(Rng& r) const {
    AObj a;
    for (int i = 0; i < k_; ++i) a.c.push_back(M_->random_object(r, max_).n);
    return a;
}

AMor ProductBase::random_morphism(Rng& r, const AObj& a, const AObj& b) const {
    std::vector<Mor> ps;
    for (int i = 0; i < k_; ++i) ps.push_back(M_->random_morphism(r, coord(a, i), coord(b, i)));
    return make(a, b, ps);
}

nlohmann::json ProductBase::obj_json(const AObj& a) const {
    auto j = nlohmann::json::array();
    for (int i = 0; i < k_; ++i) j.push_back(obj_to_json(*M_, coord(a, i)));
    return j;
}

nlohmann::json ProductBase::mor_json(const AMor& f) const {
    auto j = nlohmann::json::array();
    for (const auto& m : f.parts) j.push_back(mor_to_json(m));
    return j;
}

}  // namespace pnm
