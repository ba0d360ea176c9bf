#include "pnm/fincat.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace pnm {

int TableCategory::add_object(const std::string& name) {
    if (obj_index_.count(name)) throw std::invalid_argument("duplicate object name: " + name);
    int a = num_objects();
    obj_names_.push_back(name);
    obj_index_[name] = a;
    int f = num_morphisms();
    mors_.push_back({a, a});
    mor_names_.push_back("id_" + name);
    ident_.push_back(f);
    finalized_ = false;
    return a;
}

int TableCategory::add_morphism(int dom, int cod, const std::string& name) {
    if (dom < 0 || dom >= num_objects() || cod < 0 || cod >= num_objects())
        throw std::out_of_range("add_morphism: unknown object");
    int f = num_morphisms();
    mors_.push_back({dom, cod});
    mor_names_.push_back(name.empty() ? "m" + std::to_string(f) : name);
    finalized_ = false;
    return f;
}

void TableCategory::set_compose(int g, int f, int h) {
    pending_.emplace_back(g, f, h);
    finalized_ = false;
}

std::optional<int> TableCategory::find_object(const std::string& name) const {
    auto it = obj_index_.find(name);
    if (it == obj_index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>& TableCategory::hom(int a, int b) const {
    static const std::vector<int> empty;
    auto it = hom_.find(static_cast<long long>(a) * num_objects() + b);
    return it == hom_.end() ? empty : it->second;
}

int TableCategory::compose(int g, int f) const {
    if (mors_[g].dom != mors_[f].cod) return -1;
    return comp_[f][out_pos_[g]];
}

TableCategory TableCategory::from_raw(RawTable r) {
    TableCategory C;
    for (auto& name : r.objects) {
        if (C.obj_index_.count(name)) throw std::invalid_argument("duplicate object name: " + name);
        C.obj_index_[name] = static_cast<int>(C.obj_names_.size());
        C.obj_names_.push_back(std::move(name));
    }
    const int N = C.num_objects();
    if (r.mor_names.size() != r.mors.size()) throw std::invalid_argument("morphism name table size");
    for (auto m : r.mors)
        if (m.dom < 0 || m.dom >= N || m.cod < 0 || m.cod >= N) throw std::invalid_argument("morphism endpoint out of range");
    C.mors_ = std::move(r.mors);
    C.mor_names_ = std::move(r.mor_names);
    if (static_cast<int>(r.identities.size()) != N) throw std::invalid_argument("identity table size");
    for (int a = 0; a < N; ++a) {
        int i = r.identities[a];
        if (i < 0 || i >= C.num_morphisms() || C.mors_[i].dom != a || C.mors_[i].cod != a)
            throw std::invalid_argument("identity has wrong endpoints");
    }
    C.ident_ = std::move(r.identities);
    for (auto [g, f, h] : r.compose) {
        if (std::min({g, f, h}) < 0 || std::max({g, f, h}) >= C.num_morphisms())
            throw std::invalid_argument("composition entry out of range");
        C.pending_.emplace_back(g, f, h);
    }
    C.finalize();
    return C;
}

void TableCategory::finalize() {
    const int N = num_objects(), M = num_morphisms();
    out_.assign(N, {});
    in_.assign(N, {});
    out_pos_.assign(M, 0);
    hom_.clear();
    for (int f = 0; f < M; ++f) {
        out_pos_[f] = static_cast<int>(out_[mors_[f].dom].size());
        out_[mors_[f].dom].push_back(f);
        in_[mors_[f].cod].push_back(f);
        hom_[static_cast<long long>(mors_[f].dom) * N + mors_[f].cod].push_back(f);
    }
    comp_.assign(M, {});
    for (int f = 0; f < M; ++f) comp_[f].assign(out_[mors_[f].cod].size(), -1);
    for (int f = 0; f < M; ++f) comp_[f][out_pos_[ident_[mors_[f].cod]]] = f;
    for (int a = 0; a < N; ++a)
        for (int g : out_[a]) comp_[ident_[a]][out_pos_[g]] = g;
    for (auto [g, f, h] : pending_) {
        if (mors_[g].dom != mors_[f].cod) throw std::invalid_argument("set_compose: non-composable pair");
        comp_[f][out_pos_[g]] = h;
    }

    // generators: irreducible non-identity morphisms, topped up until they generate
    std::vector<char> reducible(M, 0);
    for (int f = 0; f < M; ++f) {
        if (is_identity(f)) continue;
        for (int g : out_[mors_[f].cod]) {
            if (is_identity(g)) continue;
            int h = comp_[f][out_pos_[g]];
            if (h >= 0) reducible[h] = 1;
        }
    }
    gens_.clear();
    for (int f = 0; f < M; ++f)
        if (!is_identity(f) && !reducible[f]) gens_.push_back(f);
    auto closure = [&]() {
        std::vector<char> seen(M, 0);
        std::deque<int> q;
        for (int a = 0; a < N; ++a) { seen[ident_[a]] = 1; }
        for (int g : gens_) if (!seen[g]) { seen[g] = 1; q.push_back(g); }
        while (!q.empty()) {
            int f = q.front();
            q.pop_front();
            for (int g : gens_) {
                if (mors_[g].dom != mors_[f].cod) continue;
                int h = comp_[f][out_pos_[g]];
                if (h >= 0 && !seen[h]) { seen[h] = 1; q.push_back(h); }
            }
        }
        return seen;
    };
    auto seen = closure();
    for (int f = 0; f < M; ++f) {
        if (seen[f]) continue;
        gens_.insert(std::lower_bound(gens_.begin(), gens_.end(), f), f);
        seen = closure();
    }
    finalized_ = true;
}

bool TableCategory::operator==(const TableCategory& o) const { return table_to_json(*this) == table_to_json(o); }

std::vector<std::string> validate_category(const TableCategory& C) {
    std::vector<std::string> rep;
    const int M = C.num_morphisms();
    for (int a = 0; a < C.num_objects(); ++a) {
        int i = C.identity(a);
        if (C.dom(i) != a || C.cod(i) != a) rep.push_back("identity of " + C.object_name(a) + " has wrong endpoints");
    }
    for (int f = 0; f < M; ++f) {
        for (int g : C.out(C.cod(f))) {
            int h = C.compose(g, f);
            if (h < 0) {
                rep.push_back("missing composite " + C.morphism_name(g) + " o " + C.morphism_name(f));
                continue;
            }
            if (C.dom(h) != C.dom(f) || C.cod(h) != C.cod(g))
                rep.push_back("composite " + C.morphism_name(g) + " o " + C.morphism_name(f) + " has wrong endpoints");
        }
        if (C.compose(C.identity(C.cod(f)), f) != f)
            rep.push_back("left identity law fails at " + C.morphism_name(f));
        if (C.compose(f, C.identity(C.dom(f))) != f)
            rep.push_back("right identity law fails at " + C.morphism_name(f));
    }
    for (int f = 0; f < M; ++f)
        for (int g : C.out(C.cod(f))) {
            int gf = C.compose(g, f);
            if (gf < 0) continue;
            for (int h : C.out(C.cod(g))) {
                int hg = C.compose(h, g);
                if (hg < 0) continue;
                int l = C.compose(h, gf), r = C.compose(hg, f);
                if (l != r)
                    rep.push_back("associativity fails at (" + C.morphism_name(h) + ", " + C.morphism_name(g) +
                                  ", " + C.morphism_name(f) + ")");
            }
        }
    return rep;
}

std::vector<std::string> validate_functor(const TableFunctor& F) {
    std::vector<std::string> rep;
    const auto& S = *F.src;
    const auto& T = *F.dst;
    if (static_cast<int>(F.obj.size()) != S.num_objects() || static_cast<int>(F.mor.size()) != S.num_morphisms()) {
        rep.push_back("functor tables have wrong size");
        return rep;
    }
    for (int a = 0; a < S.num_objects(); ++a)
        if (F.mor[S.identity(a)] != T.identity(F.obj[a])) rep.push_back("identity not preserved at " + S.object_name(a));
    for (int f = 0; f < S.num_morphisms(); ++f) {
        int g = F.mor[f];
        if (g < 0 || g >= T.num_morphisms() || T.dom(g) != F.obj[S.dom(f)] || T.cod(g) != F.obj[S.cod(f)]) {
            rep.push_back("endpoints not preserved at " + S.morphism_name(f));
            continue;
        }
    }
    if (!rep.empty()) return rep;
    for (int f = 0; f < S.num_morphisms(); ++f)
        for (int g : S.out(S.cod(f))) {
            int gf = S.compose(g, f);
            if (gf < 0) continue;
            if (F.mor[gf] != T.compose(F.mor[g], F.mor[f]))
                rep.push_back("composition not preserved at " + S.morphism_name(g) + " o " + S.morphism_name(f));
        }
    return rep;
}

TableFunctor identity_functor(const CatPtr& C) {
    TableFunctor F{C, C, {}, {}};
    for (int a = 0; a < C->num_objects(); ++a) F.obj.push_back(a);
    for (int f = 0; f < C->num_morphisms(); ++f) F.mor.push_back(f);
    return F;
}

TableFunctor compose_functors(const TableFunctor& G, const TableFunctor& F) {
    if (F.dst.get() != G.src.get() && !(*F.dst == *G.src))
        throw std::invalid_argument("compose_functors: codomain/domain mismatch");
    TableFunctor H{F.src, G.dst, {}, {}};
    for (int x : F.obj) H.obj.push_back(G.obj[x]);
    for (int x : F.mor) H.mor.push_back(G.mor[x]);
    return H;
}

TableFunctor constant_functor(const CatPtr& src, const CatPtr& dst, int object) {
    TableFunctor F{src, dst, std::vector<int>(src->num_objects(), object),
                   std::vector<int>(src->num_morphisms(), dst->identity(object))};
    return F;
}

bool functor_equal(const TableFunctor& F, const TableFunctor& G) { return F.obj == G.obj && F.mor == G.mor; }

std::vector<std::string> validate_nat(const TableNat& a) {
    std::vector<std::string> rep;
    const auto& S = *a.src.src;
    const auto& T = *a.src.dst;
    if (static_cast<int>(a.comp.size()) != S.num_objects()) return {"component table has wrong size"};
    for (int x = 0; x < S.num_objects(); ++x) {
        int c = a.comp[x];
        if (T.dom(c) != a.src.obj[x] || T.cod(c) != a.dst.obj[x])
            rep.push_back("component at " + S.object_name(x) + " has wrong endpoints");
    }
    if (!rep.empty()) return rep;
    for (int f = 0; f < S.num_morphisms(); ++f) {
        int l = T.compose(a.dst.mor[f], a.comp[S.dom(f)]);
        int r = T.compose(a.comp[S.cod(f)], a.src.mor[f]);
        if (l != r) rep.push_back("naturality square fails at " + S.morphism_name(f));
    }
    return rep;
}

TableNat identity_nat(const TableFunctor& F) {
    TableNat a{F, F, {}};
    for (int x : F.obj) a.comp.push_back(F.dst->identity(x));
    return a;
}

TableNat vertical(const TableNat& b, const TableNat& a) {
    if (!functor_equal(a.dst, b.src)) throw std::invalid_argument("vertical: transformations not composable");
    TableNat c{a.src, b.dst, {}};
    for (size_t x = 0; x < a.comp.size(); ++x) c.comp.push_back(a.src.dst->compose(b.comp[x], a.comp[x]));
    return c;
}

TableNat horizontal(const TableNat& b, const TableNat& a) {
    TableNat c{compose_functors(b.src, a.src), compose_functors(b.dst, a.dst), {}};
    const auto& T = *b.src.dst;
    for (size_t x = 0; x < a.comp.size(); ++x)
        c.comp.push_back(T.compose(b.comp[a.dst.obj[x]], b.src.mor[a.comp[x]]));
    return c;
}

TableNat whisker(const TableNat& alpha, const TableFunctor& H, const TableFunctor& K) {
    TableNat c{compose_functors(K, compose_functors(alpha.src, H)), compose_functors(K, compose_functors(alpha.dst, H)),
               {}};
    for (int x : H.obj) c.comp.push_back(K.mor[alpha.comp[x]]);
    auto rep = validate_nat(c);
    if (!rep.empty()) throw std::logic_error("whisker: result not natural: " + rep.front());
    return c;
}

CatPtr product_category(const CatPtr& C, const CatPtr& D) {
    const int Do = D->num_objects(), Dm = D->num_morphisms();
    RawTable r;
    for (int i = 0; i < C->num_objects(); ++i)
        for (int k = 0; k < Do; ++k) r.objects.push_back("(" + C->object_name(i) + "," + D->object_name(k) + ")");
    for (int f = 0; f < C->num_morphisms(); ++f)
        for (int g = 0; g < Dm; ++g) {
            r.mors.push_back({C->dom(f) * Do + D->dom(g), C->cod(f) * Do + D->cod(g)});
            r.mor_names.push_back("(" + C->morphism_name(f) + "," + D->morphism_name(g) + ")");
        }
    for (int i = 0; i < C->num_objects(); ++i)
        for (int k = 0; k < Do; ++k) r.identities.push_back(C->identity(i) * Dm + D->identity(k));
    for (int f = 0; f < C->num_morphisms(); ++f)
        for (int f2 : C->out(C->cod(f))) {
            int h = C->compose(f2, f);
            if (h < 0) continue;
            for (int g = 0; g < Dm; ++g)
                for (int g2 : D->out(D->cod(g))) {
                    int k = D->compose(g2, g);
                    if (k < 0) continue;
                    r.compose.push_back({f2 * Dm + g2, f * Dm + g, h * Dm + k});
                }
        }
    return std::make_shared<TableCategory>(TableCategory::from_raw(std::move(r)));
}

TableFunctor product_functor(const TableFunctor& F, const TableFunctor& G, const CatPtr& src, const CatPtr& dst) {
    TableFunctor H{src, dst, {}, {}};
    const int Go = G.dst->num_objects(), Gm = G.dst->num_morphisms();
    for (int a : F.obj)
        for (int b : G.obj) H.obj.push_back(a * Go + b);
    for (int f : F.mor)
        for (int g : G.mor) H.mor.push_back(f * Gm + g);
    return H;
}

TableFunctor projection_first(const CatPtr& C, const CatPtr& D, const CatPtr& CD) {
    TableFunctor P{CD, C, {}, {}};
    for (int i = 0; i < C->num_objects(); ++i)
        for (int j = 0; j < D->num_objects(); ++j) P.obj.push_back(i);
    for (int f = 0; f < C->num_morphisms(); ++f)
        for (int g = 0; g < D->num_morphisms(); ++g) P.mor.push_back(f);
    return P;
}

TableFunctor projection_second(const CatPtr& C, const CatPtr& D, const CatPtr& CD) {
    TableFunctor P{CD, D, {}, {}};
    for (int i = 0; i < C->num_objects(); ++i)
        for (int j = 0; j < D->num_objects(); ++j) P.obj.push_back(j);
    for (int f = 0; f < C->num_morphisms(); ++f)
        for (int g = 0; g < D->num_morphisms(); ++g) P.mor.push_back(g);
    return P;
}

CatPtr opposite_category(const CatPtr& C) {
    nlohmann::json j = table_to_json(*C);
    for (auto& m : j["morphisms"]) std::swap(m["dom"], m["cod"]);
    for (auto& t : j["compose"]) std::swap(t[0], t[1]);
    std::sort(j["compose"].begin(), j["compose"].end());
    return std::make_shared<TableCategory>(table_from_json(j));
}

CatPtr terminal_category() {
    auto T = std::make_shared<TableCategory>();
    T->add_object("*");
    T->finalize();
    return T;
}

CatPtr empty_category() {
    auto T = std::make_shared<TableCategory>();
    T->finalize();
    return T;
}

CommaCategory comma_category(int a, const TableFunctor& gamma) {
    const auto& I = *gamma.src;
    const auto& A = *gamma.dst;
    CommaCategory out;
    auto K = std::make_shared<TableCategory>();
    std::unordered_map<long long, int> index;
    const long long MA = A.num_morphisms();
    for (int i = 0; i < I.num_objects(); ++i)
        for (int f : A.hom(a, gamma.obj[i])) {
            int id = K->add_object("(" + I.object_name(i) + "," + A.morphism_name(f) + ")");
            index[i * MA + f] = id;
            out.objs.emplace_back(i, f);
        }
    // morphism of K from object s along u: recorded per (s, position of u in out(i))
    std::vector<int> kmor_of;  // K morphism id -> I morphism
    for (int s = 0; s < K->num_objects(); ++s) kmor_of.push_back(I.identity(out.objs[s].first));
    std::unordered_map<long long, int> along;  // (s, u) -> K morphism
    const long long MI = I.num_morphisms();
    for (int s = 0; s < K->num_objects(); ++s) {
        auto [i, f] = out.objs[s];
        along[s * MI + I.identity(i)] = K->identity(s);
        for (int u : I.out(i)) {
            if (I.is_identity(u)) continue;
            int g = A.compose(gamma.mor[u], f);
            int t = index.at(I.cod(u) * MA + g);
            int m = K->add_morphism(s, t, I.morphism_name(u) + "@" + K->object_name(s));
            along[s * MI + u] = m;
            kmor_of.push_back(u);
        }
    }
    std::vector<int> src_of(K->num_morphisms());
    for (int s = 0; s < K->num_objects(); ++s) src_of[K->identity(s)] = s;
    for (int s = 0; s < K->num_objects(); ++s) {
        auto [i, f] = out.objs[s];
        for (int u : I.out(i)) {
            if (I.is_identity(u)) continue;
            int m = along.at(s * MI + u);
            int t = index.at(I.cod(u) * MA + A.compose(gamma.mor[u], f));
            for (int v : I.out(I.cod(u))) {
                if (I.is_identity(v)) continue;
                int vm = along.at(t * MI + v);
                int vu = I.compose(v, u);
                K->set_compose(vm, m, along.at(s * MI + vu));
            }
        }
    }
    K->finalize();
    out.proj = TableFunctor{K, gamma.src, {}, {}};
    for (auto [i, f] : out.objs) out.proj.obj.push_back(i);
    out.proj.mor = kmor_of;
    out.cat = K;
    return out;
}

bool check_isomorphism(const TableCategory& C, const TableCategory& D, const std::vector<int>& objmap,
                       const std::vector<int>& mormap) {
    if (C.num_objects() != D.num_objects() || C.num_morphisms() != D.num_morphisms()) return false;
    if (static_cast<int>(objmap.size()) != C.num_objects() || static_cast<int>(mormap.size()) != C.num_morphisms())
        return false;
    std::vector<char> hitO(D.num_objects(), 0), hitM(D.num_morphisms(), 0);
    for (int x : objmap) {
        if (x < 0 || x >= D.num_objects() || hitO[x]) return false;
        hitO[x] = 1;
    }
    for (int x : mormap) {
        if (x < 0 || x >= D.num_morphisms() || hitM[x]) return false;
        hitM[x] = 1;
    }
    for (int a = 0; a < C.num_objects(); ++a)
        if (mormap[C.identity(a)] != D.identity(objmap[a])) return false;
    for (int f = 0; f < C.num_morphisms(); ++f) {
        if (D.dom(mormap[f]) != objmap[C.dom(f)] || D.cod(mormap[f]) != objmap[C.cod(f)]) return false;
        for (int g : C.out(C.cod(f))) {
            int h = C.compose(g, f);
            if (h < 0) return false;
            if (D.compose(mormap[g], mormap[f]) != mormap[h]) return false;
        }
    }
    return true;
}

nlohmann::json table_to_json(const TableCategory& C) {
    nlohmann::json j;
    j["objects"] = nlohmann::json::array();
    for (int a = 0; a < C.num_objects(); ++a) j["objects"].push_back(C.object_name(a));
    j["morphisms"] = nlohmann::json::array();
    for (int f = 0; f < C.num_morphisms(); ++f)
        j["morphisms"].push_back({{"id", f}, {"dom", C.dom(f)}, {"cod", C.cod(f)}, {"name", C.morphism_name(f)}});
    j["identities"] = nlohmann::json::array();
    for (int a = 0; a < C.num_objects(); ++a) j["identities"].push_back(C.identity(a));
    auto comp = nlohmann::json::array();
    for (int f = 0; f < C.num_morphisms(); ++f)
        for (int g : C.out(C.cod(f))) {
            int h = C.compose(g, f);
            if (h >= 0) comp.push_back({g, f, h});
        }
    std::sort(comp.begin(), comp.end());
    j["compose"] = std::move(comp);
    return j;
}

TableCategory table_from_json(const nlohmann::json& j) {
    RawTable r;
    for (const auto& o : j.at("objects")) r.objects.push_back(o.get<std::string>());
    const auto& ms = j.at("morphisms");
    r.mors.resize(ms.size());
    r.mor_names.resize(ms.size());
    std::vector<char> seen(ms.size(), 0);
    for (const auto& m : ms) {
        int id = m.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(ms.size()) || seen[id]) throw std::invalid_argument("bad morphism id");
        seen[id] = 1;
        r.mors[id] = {m.at("dom").get<int>(), m.at("cod").get<int>()};
        r.mor_names[id] = m.contains("name") ? m.at("name").get<std::string>() : "m" + std::to_string(id);
    }
    for (const auto& i : j.at("identities")) r.identities.push_back(i.get<int>());
    for (const auto& t : j.at("compose")) r.compose.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    return TableCategory::from_raw(std::move(r));
}

nlohmann::json functor_to_json(const TableFunctor& F) {
    return {{"source", table_to_json(*F.src)}, {"target", table_to_json(*F.dst)}, {"objects", F.obj}, {"morphisms", F.mor}};
}

nlohmann::json nat_to_json(const TableNat& a) {
    return {{"source", functor_to_json(a.src)}, {"target", functor_to_json(a.dst)}, {"components", a.comp}};
}

}  // namespace pnm
