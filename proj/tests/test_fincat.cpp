#include <catch_amalgamated.hpp>

#include "gen.hpp"
#include "pnm/cubes.hpp"
#include "pnm/fincat.hpp"

using namespace pnm;

TEST_CASE("one-object category validates") {
    auto T = terminal_category();
    CHECK(T->num_morphisms() == 1);
    CHECK(validate_category(*T).empty());
}

TEST_CASE("P(1) written out by hand validates") {
    TableCategory C;
    int e = C.add_object("[]"), f = C.add_object("[1]");
    C.add_morphism(e, f, "inc");
    C.finalize();
    CHECK(C.num_objects() == 2);
    CHECK(C.num_morphisms() == 3);
    CHECK(validate_category(C).empty());
    CHECK(C.generators().size() == 1);
}

TEST_CASE("a deleted composition entry is reported by name") {
    RawTable r;
    r.objects = {"x"};
    r.mors = {{0, 0}, {0, 0}};
    r.mor_names = {"id_x", "t"};
    r.identities = {0};
    // t∘t is composable but left undefined
    auto C = TableCategory::from_raw(r);
    auto rep = validate_category(C);
    REQUIRE_FALSE(rep.empty());
    CHECK(rep.front().find("t o t") != std::string::npos);
    r.compose = {{1, 1, 1}};
    CHECK(validate_category(TableCategory::from_raw(r)).empty());
}

TEST_CASE("P(1) x P(1) is isomorphic to P(2) by the canonical relabeling") {
    auto P1 = build_pn(1), P2 = build_pn(2);
    auto Q = product_category(P1.cat, P1.cat);
    CHECK(Q->num_objects() == 4);
    CHECK(Q->num_morphisms() == 9);
    std::vector<int> om(4), mm(Q->num_morphisms());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) om[i * 2 + j] = i | (j << 1);
    for (int f = 0; f < Q->num_morphisms(); ++f) mm[f] = P2.mor(om[Q->dom(f)], om[Q->cod(f)]);
    CHECK(check_isomorphism(*Q, *P2.cat, om, mm));
}

TEST_CASE("C x terminal is C") {
    Rng r(1);
    auto C = testgen::random_path_category(r, 4, 30);
    auto CT = product_category(C, terminal_category());
    std::vector<int> om, mm;
    for (int a = 0; a < C->num_objects(); ++a) om.push_back(a);
    for (int f = 0; f < C->num_morphisms(); ++f) mm.push_back(f);
    CHECK(check_isomorphism(*CT, *C, om, mm));
}

TEST_CASE("Lambda x Lambda has the 3x3 grid shape") {
    auto L = build_lambda_n(1);
    auto LL = product_category(L.cat, L.cat);
    CHECK(LL->num_objects() == 9);
    CHECK(LL->num_morphisms() == 25);
    CHECK(validate_category(*LL).empty());
    auto obj = [&](const std::string& s) { return *LL->find_object(s); };
    // (0,0) maps to every object; (1,1) and (L,L) only to themselves
    CHECK(LL->out(obj("(0,0)")).size() == 9);
    CHECK(LL->out(obj("(1,1)")).size() == 1);
    CHECK(LL->out(obj("(L,L)")).size() == 1);
    CHECK(LL->hom(obj("(0,1)"), obj("(1,1)")).size() == 1);
    CHECK(LL->hom(obj("(0,1)"), obj("(L,1)")).size() == 1);
    CHECK(LL->hom(obj("(1,0)"), obj("(1,L)")).size() == 1);
    CHECK(LL->hom(obj("(1,0)"), obj("(0,1)")).empty());
    // the grid's generating arrows: 12 of them
    CHECK(LL->generators().size() == 12);
}

TEST_CASE("product is associative under the canonical relabeling") {
    Rng r(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto A = testgen::random_path_category(r, 2, 8);
        auto B = testgen::random_poset(r, 3);
        auto C = testgen::random_path_category(r, 2, 6);
        auto L = product_category(product_category(A, B), C);
        auto R = product_category(A, product_category(B, C));
        std::vector<int> om, mm;
        const int Bo = B->num_objects(), Co = C->num_objects(), Bm = B->num_morphisms(), Cm = C->num_morphisms();
        for (int a = 0; a < A->num_objects(); ++a)
            for (int b = 0; b < Bo; ++b)
                for (int c = 0; c < Co; ++c) om.push_back(a * (Bo * Co) + (b * Co + c));
        for (int f = 0; f < A->num_morphisms(); ++f)
            for (int g = 0; g < Bm; ++g)
                for (int h = 0; h < Cm; ++h) mm.push_back(f * (Bm * Cm) + (g * Cm + h));
        CHECK(check_isomorphism(*L, *R, om, mm));
    }
}

TEST_CASE("generated categories validate") {
    Rng r(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto C = (trial % 2) ? testgen::random_poset(r, r.uniform(1, 8)) : testgen::random_path_category(r, r.uniform(1, 6), 200);
        CHECK(C->num_morphisms() <= 200);
        CHECK(validate_category(*C).empty());
        CHECK(validate_category(*opposite_category(C)).empty());
        CHECK(*opposite_category(opposite_category(C)) == *C);
        if (C->num_morphisms() <= 14) CHECK(validate_category(*product_category(C, C)).empty());
    }
}

TEST_CASE("comma categories: sizes, the all-zero corner, and empty cases") {
    for (int n = 0; n <= 3; ++n) {
        auto P = build_pn(n);
        auto L = build_lambda_n(n);
        auto phi = phi_n(P, L);
        for (int a = 0; a < L.cat->num_objects(); ++a) {
            auto K = comma_category(a, phi);
            size_t expect = 0;
            for (int U = 0; U <= P.full(); ++U) expect += L.cat->hom(a, phi.obj[U]).size();
            CHECK(static_cast<size_t>(K.cat->num_objects()) == expect);
            CHECK(validate_category(*K.cat).empty());
            CHECK(validate_functor(K.proj).empty());
            bool has_L = false;
            for (int k = 0; k < n; ++k) has_L = has_L || L.digit(a, k) == kL;
            if (has_L) CHECK(K.cat->num_objects() == 0);
        }
        // (0,...,0)↓φ_n is P(n) itself; (1,...,1)↓φ_n is a single object
        auto K0 = comma_category(0, phi);
        std::vector<int> om, mm;
        for (int s = 0; s < K0.cat->num_objects(); ++s) om.push_back(K0.objs[s].first);
        for (int f = 0; f < K0.cat->num_morphisms(); ++f) mm.push_back(K0.proj.mor[f]);
        CHECK(check_isomorphism(*K0.cat, *P.cat, om, mm));
        CHECK(comma_category(L.ones(), phi).cat->num_objects() == 1);
    }
}

TEST_CASE("comma under the identity functor is the coslice") {
    Rng r(4);
    for (int trial = 0; trial < 10; ++trial) {
        auto C = testgen::random_path_category(r, 4, 30);
        for (int a = 0; a < C->num_objects(); ++a) {
            auto K = comma_category(a, identity_functor(C));
            CHECK(static_cast<size_t>(K.cat->num_objects()) == C->out(a).size());
            CHECK(validate_category(*K.cat).empty());
        }
    }
}

TEST_CASE("whiskering laws on small posets") {
    Rng r(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::vector<char>> la, lb, lc, ld, le, lap;
        auto Ap = testgen::random_poset(r, r.uniform(1, 3), &lap);
        auto A = testgen::random_poset(r, r.uniform(1, 4), &la);
        auto B = testgen::random_poset(r, r.uniform(1, 4), &lb);
        auto C = testgen::random_poset(r, r.uniform(1, 4), &lc);
        auto D = testgen::random_poset(r, r.uniform(1, 4), &ld);
        auto E = testgen::random_poset(r, r.uniform(1, 3), &le);
        // α: F ⇒ G with G = F pushed up where possible
        auto F = testgen::random_monotone(r, B, lb, C, lc);
        TableFunctor G = F;
        for (int k = 0; k < 4; ++k) {
            auto G2 = testgen::random_monotone(r, B, lb, C, lc);
            bool ok = true;
            for (int x = 0; x < B->num_objects(); ++x) ok = ok && lc[F.obj[x]][G2.obj[x]];
            if (ok) { G = G2; break; }
        }
        TableNat alpha{F, G, {}};
        for (int x = 0; x < B->num_objects(); ++x) alpha.comp.push_back(C->hom(F.obj[x], G.obj[x]).at(0));
        REQUIRE(validate_nat(alpha).empty());
        auto H = testgen::random_monotone(r, A, la, B, lb);
        auto Hp = testgen::random_monotone(r, Ap, lap, A, la);
        auto Kp = testgen::random_monotone(r, C, lc, D, ld);
        auto K = testgen::random_monotone(r, D, ld, E, le);
        auto lhs = whisker(alpha, compose_functors(H, Hp), compose_functors(K, Kp));
        auto rhs = whisker(whisker(alpha, H, Kp), Hp, K);
        CHECK(lhs.comp == rhs.comp);
        // identity transformation whiskers to an identity
        auto idw = whisker(identity_nat(F), H, Kp);
        CHECK(idw.comp == identity_nat(compose_functors(Kp, compose_functors(F, H))).comp);
        // constant post-functor gives constant identity components
        auto Kc = constant_functor(C, D, 0);
        auto cw = whisker(alpha, H, Kc);
        for (int c : cw.comp) CHECK(c == D->identity(0));
        // interchange: (β·α) * (δ·γ) = (β*δ)·(α*γ) with identities
        auto h1 = horizontal(identity_nat(Kp), alpha);
        auto w1 = whisker(alpha, identity_functor(B), Kp);
        CHECK(h1.comp == w1.comp);
    }
}

TEST_CASE("JSON round trip is bit exact") {
    Rng r(6);
    for (int trial = 0; trial < 10; ++trial) {
        auto C = testgen::random_path_category(r, 4, 40);
        auto j = table_to_json(*C);
        auto C2 = table_from_json(nlohmann::json::parse(j.dump()));
        CHECK(table_to_json(C2).dump() == j.dump());
    }
    auto L = build_lambda_n(2);
    auto j = table_to_json(*L.cat);
    CHECK(table_to_json(table_from_json(j)).dump() == j.dump());
    auto phi = phi_n(build_pn(2), L);
    CHECK(functor_to_json(phi).dump() == nlohmann::json::parse(functor_to_json(phi).dump()).dump());
}
