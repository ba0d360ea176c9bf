#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "gen.hpp"
#include "pnm/cubes.hpp"
#include "pnm/targetcat.hpp"

using namespace pnm;

namespace {
CatPtr parallel_pair() {
    RawTable r;
    r.objects = {"a", "b"};
    r.mors = {{0, 0}, {1, 1}, {0, 1}, {0, 1}};
    r.mor_names = {"id_a", "id_b", "f", "g"};
    r.identities = {0, 1};
    return std::make_shared<TableCategory>(TableCategory::from_raw(r));
}

Mat mat(int rows, int cols, std::vector<int> a) {
    Mat m(rows, cols);
    m.a = std::move(a);
    return m;
}

// Independent colimit size: rank of the full relation matrix over all morphisms.
int vect_colim_dim_oracle(const FinVectGF& V, const Diagram& D) {
    const auto& I = *D.index;
    std::vector<int> off;
    int W = 0;
    for (auto x : D.obj) { off.push_back(W); W += x.n; }
    int rows = 0;
    for (int f = 0; f < I.num_morphisms(); ++f) rows += D.obj[I.dom(f)].n;
    Mat R(rows, W);
    int r0 = 0;
    for (int f = 0; f < I.num_morphisms(); ++f) {
        int i = I.dom(f), j = I.cod(f);
        for (int k = 0; k < D.obj[i].n; ++k) {
            R.at(r0 + k, off[i] + k) = V.field().add(R.at(r0 + k, off[i] + k), 1);
            for (int q = 0; q < D.obj[j].n; ++q)
                R.at(r0 + k, off[j] + q) = V.field().sub(R.at(r0 + k, off[j] + q), D.mor[f].v[q * D.mor[f].dom + k]);
        }
        r0 += D.obj[i].n;
    }
    return W - V.field().rank(R);
}

// Independent pointed colimit size: connected components of the element graph.
int pointed_colim_card_oracle(const Diagram& D) {
    const auto& I = *D.index;
    std::vector<std::pair<int, int>> nodes;
    std::map<std::pair<int, int>, int> id;
    nodes.push_back({-1, 0});
    for (int i = 0; i < I.num_objects(); ++i)
        for (int x = 1; x < D.obj[i].n; ++x) {
            id[{i, x}] = static_cast<int>(nodes.size());
            nodes.push_back({i, x});
        }
    auto node = [&](int i, int x) { return x == 0 ? 0 : id.at({i, x}); };
    std::vector<std::vector<int>> adj(nodes.size());
    for (int f = 0; f < I.num_morphisms(); ++f)
        for (int x = 0; x < D.obj[I.dom(f)].n; ++x) {
            int a = node(I.dom(f), x), b = node(I.cod(f), D.mor[f].v[x]);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<char> seen(nodes.size(), 0);
    int comps = 0;
    for (size_t s = 0; s < nodes.size(); ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<int> st{static_cast<int>(s)};
        seen[s] = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int v : adj[u])
                if (!seen[v]) { seen[v] = 1; st.push_back(v); }
        }
    }
    return comps;
}

std::vector<CatPtr> small_indices() {
    auto L = build_lambda_n(1);
    return {build_pn(0).cat, build_pn(1).cat, build_pn(2).cat, L.cat, product_category(L.cat, L.cat)};
}
}  // namespace

TEST_CASE("empty limits and colimits are the zero object") {
    FinVectGF V(2);
    FinSetPointed P;
    for (const ComputableCategory* M : {static_cast<const ComputableCategory*>(&V), static_cast<const ComputableCategory*>(&P)}) {
        Diagram D{empty_category(), {}, {}};
        auto lim = M->limit(D);
        auto col = M->colimit(D);
        CHECK(lim.apex == M->terminal());
        CHECK(col.apex == M->initial());
        Mor a = M->to_terminal(M->initial()), b = M->from_initial(M->terminal());
        CHECK(M->compose(a, b) == M->identity(M->terminal()));
        CHECK(M->compose(b, a) == M->identity(M->initial()));
        // mediating from any object into the empty limit is the unique map
        Obj X = M->pointed() ? Obj{3} : Obj{2};
        CHECK(lim.mediate({}, X) == M->to_terminal(X));
        CHECK(col.mediate({}, X) == M->from_initial(X));
    }
}

TEST_CASE("limit over P(0) returns the value with identity leg") {
    FinVectGF V(3);
    auto P0 = build_pn(0).cat;
    Diagram D = constant_diagram(V, P0, {2});
    auto lim = V.limit(D);
    CHECK(lim.apex.n == 2);
    CHECK(lim.legs[0] == V.identity({2}));
    auto col = V.colimit(D);
    CHECK(col.legs[0] == V.identity({2}));
}

TEST_CASE("equalizer of a fixed pair over GF(2)") {
    FinVectGF V(2);
    Diagram D{parallel_pair(), {{2}, {2}}, {}};
    D.mor = {V.identity({2}), V.identity({2}), FinVectGF::to_mor(mat(2, 2, {1, 1, 0, 1})), V.identity({2})};
    // f - g = [[0,1],[0,0]], rank 1 by inspection
    auto lim = V.limit(D);
    CHECK(lim.apex.n == 1);
    CHECK(lim.legs[0].v == std::vector<int>{1, 0});
}

TEST_CASE("equalizer and coequalizer dimension laws") {
    Rng r(21);
    for (int p : {2, 3}) {
        FinVectGF V(p);
        for (int trial = 0; trial < 50; ++trial) {
            Obj a{r.uniform(0, 3)}, b{r.uniform(0, 3)};
            Mor f = V.random_morphism(r, a, b), g = V.random_morphism(r, a, b);
            Diagram D{parallel_pair(), {a, b}, {V.identity(a), V.identity(b), f, g}};
            int rk = V.field().rank(V.field().sub(FinVectGF::to_mat(f), FinVectGF::to_mat(g)));
            CHECK(V.limit(D).apex.n + rk == a.n);
            CHECK(V.colimit(D).apex.n == b.n - rk);
        }
    }
}

TEST_CASE("pushout against zero is the cokernel") {
    Rng r(22);
    FinVectGF V(5);
    auto L = build_lambda_n(1);
    for (int trial = 0; trial < 30; ++trial) {
        Obj X{r.uniform(0, 3)}, Y{r.uniform(0, 3)};
        Mor f = V.random_morphism(r, X, Y);
        Diagram D{L.cat, {X, Y, {0}}, {}};
        D.mor = {V.identity(X), V.identity(Y), V.identity({0}), f, V.to_terminal(X)};
        REQUIRE(validate_diagram(V, D).empty());
        CHECK(V.colimit(D).apex.n == Y.n - V.field().rank(FinVectGF::to_mat(f)));
    }
}

TEST_CASE("colimit of the constant zero diagram is zero") {
    FinVectGF V(2);
    FinSetPointed P;
    for (int n = 0; n <= 3; ++n) {
        auto L = build_lambda_n(n);
        CHECK(V.colimit(constant_diagram(V, L.cat, V.terminal())).apex == V.terminal());
        CHECK(P.colimit(constant_diagram(P, L.cat, P.terminal())).apex == P.terminal());
    }
    // one-point sets over a disconnected index
    auto disc = product_category(terminal_category(), terminal_category());
    RawTable two;
    two.objects = {"a", "b"};
    two.mors = {{0, 0}, {1, 1}};
    two.mor_names = {"id_a", "id_b"};
    two.identities = {0, 1};
    auto T = std::make_shared<TableCategory>(TableCategory::from_raw(two));
    CHECK(P.colimit(constant_diagram(P, T, {1})).apex.n == 1);
}

TEST_CASE("colimit over the one-object category") {
    FinSetPointed P;
    auto T = terminal_category();
    Diagram D = constant_diagram(P, T, {4});
    auto c = P.colimit(D);
    CHECK(c.apex.n == 4);
    CHECK(c.legs[0] == P.identity({4}));
}

TEST_CASE("isomorphism predicate") {
    FinVectGF V(5);
    CHECK(V.is_isomorphism(V.identity({3})));
    CHECK_FALSE(V.is_isomorphism(Mor{2, 1, {1, 0}}));
    Rng r(23);
    // random row operations on the identity
    for (int trial = 0; trial < 20; ++trial) {
        Mat M = V.field().identity(3);
        for (int k = 0; k < 10; ++k) {
            int i = r.uniform(0, 2), j = r.uniform(0, 2);
            if (i == j) continue;
            int s = r.uniform(0, 4);
            for (int c = 0; c < 3; ++c) M.at(i, c) = V.field().add(M.at(i, c), V.field().mul(s, M.at(j, c)));
        }
        Mor f = FinVectGF::to_mor(M);
        REQUIRE(V.is_isomorphism(f));
        CHECK(V.compose(*V.inverse(f), f) == V.identity({3}));
    }
    FinSetPointed P;
    CHECK(P.is_isomorphism(Mor{3, 3, {0, 2, 1}}));
    CHECK_FALSE(P.is_isomorphism(Mor{3, 3, {0, 1, 1}}));
}

TEST_CASE("random thin diagrams are functors and colimit sizes match oracles") {
    Rng r(24);
    FinVectGF V(2);
    FinSetPointed P;
    for (const auto& I : small_indices())
        for (int trial = 0; trial < 20; ++trial) {
            auto D = random_thin_diagram(V, I, r, 3);
            REQUIRE(validate_diagram(V, D).empty());
            CHECK(V.colimit(D).apex.n == vect_colim_dim_oracle(V, D));
            auto E = random_thin_diagram(P, I, r, 3);
            REQUIRE(validate_diagram(P, E).empty());
            CHECK(P.colimit(E).apex.n == pointed_colim_card_oracle(E));
            for (bool iso : {false, true}) {
                auto [D2, a] = random_diagram_map(V, D, r, iso);
                CHECK(validate_diagram(V, D2).empty());
                CHECK(validate_diagram_map(V, D, D2, a).empty());
                auto [E2, b] = random_diagram_map(P, E, r, iso);
                CHECK(validate_diagram(P, E2).empty());
                CHECK(validate_diagram_map(P, E, E2, b).empty());
            }
        }
}

TEST_CASE("universal properties of limits and colimits on random diagrams") {
    Rng r(25);
    FinVectGF V(3);
    FinSetPointed P;
    for (const ComputableCategory* M : {static_cast<const ComputableCategory*>(&V), static_cast<const ComputableCategory*>(&P)})
        for (const auto& I : small_indices())
            for (int trial = 0; trial < 10; ++trial) {
                auto D = random_thin_diagram(*M, I, r, 2);
                auto lim = M->limit(D);
                for (int i = 0; i < I->num_objects(); ++i) {
                    for (int f : I->out(i)) CHECK(M->compose(D.mor[f], lim.legs[i]) == lim.legs[I->cod(f)]);
                }
                Obj X = M->random_object(r, 2);
                Mor m = M->random_morphism(r, X, lim.apex);
                std::vector<Mor> cone;
                for (const auto& l : lim.legs) cone.push_back(M->compose(l, m));
                CHECK(lim.mediate(cone, X) == m);
                auto s1 = M->factor_through_cone(lim.apex, lim.legs, cone, X, false);
                auto s2 = M->factor_through_cone(lim.apex, lim.legs, cone, X, true);
                REQUIRE(s1);
                REQUIRE(s2);
                CHECK(*s1 == *s2);

                auto col = M->colimit(D);
                Mor c = M->random_morphism(r, col.apex, X);
                std::vector<Mor> cocone;
                for (const auto& l : col.legs) cocone.push_back(M->compose(c, l));
                CHECK(col.mediate(cocone, X) == c);
                auto t1 = M->factor_through_cocone(col.apex, col.legs, cocone, X, false);
                auto t2 = M->factor_through_cocone(col.apex, col.legs, cocone, X, true);
                REQUIRE(t1);
                REQUIRE(t2);
                CHECK(*t1 == *t2);

                // a perturbed cone that no longer commutes is rejected, naming an index morphism
                if (!cone.empty()) {
                    int i = r.uniform(0, static_cast<int>(cone.size()) - 1);
                    auto bad = cone;
                    bad[i] = M->random_morphism(r, X, D.obj[i]);
                    bool commutes = true;
                    for (int f = 0; f < I->num_morphisms(); ++f)
                        commutes = commutes && M->compose(D.mor[f], bad[I->dom(f)]) == bad[I->cod(f)];
                    if (!commutes) {
                        try {
                            lim.mediate(bad, X);
                            FAIL("inconsistent cone accepted");
                        } catch (const ConeError& e) {
                            CHECK(e.morphism >= 0);
                        }
                    }
                }
            }
}

TEST_CASE("products, projections and squares") {
    Rng r(26);
    FinVectGF V(2);
    FinSetPointed P;
    for (const ComputableCategory* M : {static_cast<const ComputableCategory*>(&V), static_cast<const ComputableCategory*>(&P)})
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Obj> xs;
            int k = r.uniform(0, 3);
            for (int i = 0; i < k; ++i) xs.push_back(M->random_object(r, 2));
            Obj X = M->random_object(r, 2);
            std::vector<Mor> fs;
            for (auto x : xs) fs.push_back(M->random_morphism(r, X, x));
            Mor t = M->tuple(X, xs, fs);
            for (int i = 0; i < k; ++i) CHECK(M->compose(M->projection(xs, i), t) == fs[i]);
            if (k == 0) CHECK(M->product(xs) == M->terminal());
            Obj a = M->random_object(r, 2), b = M->random_object(r, 2), c = M->random_object(r, 2);
            Mor f = M->random_morphism(r, a, b), g = M->random_morphism(r, b, c);
            CHECK(M->square_mor(M->compose(g, f)) == M->compose(M->square_mor(g), M->square_mor(f)));
            CHECK(M->square_mor(M->identity(a)) == M->identity(M->square_obj(a)));
        }
    CHECK(P.square_obj({3}).n == 5);
    CHECK(V.square_obj({3}).n == 9);
}
