// Group tables, classification, extension cocycles, bilinearization and the
// extraspecial closure construction.

#include <doctest.h>

#include "wildaut/analysis.hpp"

using namespace wildaut;

namespace {
UP<FDom> poly_of(const Field* K, std::initializer_list<std::pair<i64, i64>> terms) {
    UP<FDom> f = up_zero(FDom{K});
    for (auto& [k, c] : terms) up_add_term(f, k, K->from_int(c));
    return f;
}

// carry cocycle of Z/p^2 over Z/p: c(a,b) = 1 iff a+b wraps
WildGroup cyclic_p2_group(fp_t p) {
    std::vector<std::uint8_t> g(p * p, 0);
    for (fp_t a = 0; a < p; ++a)
        for (fp_t b = 0; b < p; ++b) g[a * p + b] = (a + b >= p) ? 1 : 0;
    return build_group(p, 1, std::move(g));
}
}  // namespace

TEST_SUITE_BEGIN("group");

TEST_CASE("zero cocycle gives an elementary abelian group") {
    WildGroup g = build_group(3, 2, std::vector<std::uint8_t>(81, 0));
    GroupProfile pr = profile(g);
    CHECK(pr.order == 27);
    CHECK(pr.exponent == 3);
    CHECK(pr.center_order == 27);
    CHECK(pr.derived_order == 1);
    CHECK(pr.label.kind == GKind::elementary_abelian);
    CHECK(pr.label.rank == 3);
    CHECK(pr.label.text == "elementary_abelian(rank 3) [(Z/3)^3]");
}

TEST_CASE("carry cocycle gives Z/p^2") {
    WildGroup g = cyclic_p2_group(3);
    GroupProfile pr = profile(g);
    CHECK(pr.order == 9);
    CHECK(pr.exponent == 9);
    CHECK(pr.label.kind == GKind::abelian_p2);
    CHECK(pr.label.text == "abelian_p2(rank 1) [Z/9]");
}

TEST_CASE("saturated subgroup inherits tables") {
    const Field* F2 = Field::get(2, 1);
    CoverAnalysis A = analyze(poly_of(F2, {{5, 1}}));  // order 32, r = 4
    WildGroup sub = saturated_subgroup(A.group, {A.group.basis_index(0), A.group.basis_index(1)});
    CHECK(sub.r == 2);
    GroupProfile pr = profile(sub);
    CHECK(pr.order == 8);
}

TEST_CASE("extension cocycle of (Z/p)^2 along one factor is zero") {
    SmallGroup g = SmallGroup::product(SmallGroup::cyclic(3), SmallGroup::cyclic(3));
    std::vector<size_t> N{0, 1, 2};  // first factor
    ExtensionCocycle c = cocycle_of_extension(g, N);
    CHECK(c.p == 3);
    CHECK(c.r == 1);
    for (auto v : c.c) CHECK(v == 0);
}

TEST_CASE("extension cocycle of Z/4 along 2Z/4 is the carry class") {
    SmallGroup g = SmallGroup::cyclic(4);
    ExtensionCocycle c = cocycle_of_extension(g, {0, 2});
    CHECK(c.r == 1);
    CHECK(c.cell(1, 1) == 1);  // nonsplit
}

TEST_CASE("extension cocycle of the Q8 analysis matches epsilon") {
    const Field* F2 = Field::get(2, 1);
    CoverAnalysis A = analyze(poly_of(F2, {{3, 1}}));
    SmallGroup g = SmallGroup::from_wild(A.group);
    std::vector<size_t> N;
    for (fp_t c = 0; c < 2; ++c) N.push_back(c);  // (0, c) indices
    ExtensionCocycle ext = cocycle_of_extension(g, N);
    CHECK(ext.r == A.group.r);
    for (size_t a = 0; a < ext.n; ++a)
        for (size_t b = 0; b < ext.n; ++b) {
            fp_t anti = static_cast<fp_t>((ext.cell(a, b) + 2 - ext.cell(b, a)) % 2);
            CHECK(anti == A.group.eps(a, b));
        }
}

TEST_CASE("bilinearization") {
    // zero cocycle: A = 0 and h = 0 are admissible
    ExtensionCocycle z;
    z.p = 2;
    z.r = 2;
    z.n = 4;
    z.c.assign(16, 0);
    Bilinearization bz = bilinearize_cocycle(z);
    bool allzero = true;
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) allzero = allzero && bz.A.at(i, j) == 0;
    CHECK(allzero);

    // Z/4 carry cocycle on V = F_2: A = (1)
    SmallGroup g = SmallGroup::cyclic(4);
    ExtensionCocycle c = cocycle_of_extension(g, {0, 2});
    Bilinearization b = bilinearize_cocycle(c);
    CHECK(b.A.at(0, 0) == 1);

    // Q8 cocycle: A + A^t equals the commutator pairing
    const Field* F2 = Field::get(2, 1);
    CoverAnalysis A = analyze(poly_of(F2, {{3, 1}}));
    ExtensionCocycle q;
    q.p = 2;
    q.r = A.group.r;
    q.n = A.group.n;
    q.c = A.group.gamma;
    Bilinearization bq = bilinearize_cocycle(q);
    for (unsigned i = 0; i < q.r; ++i)
        for (unsigned j = 0; j < q.r; ++j) {
            fp_t sym = (bq.A.at(i, j) + bq.A.at(j, i)) % 2;
            CHECK(sym == A.group.eps(A.group.basis_index(i), A.group.basis_index(j)));
        }
}

TEST_CASE("extraspecial closure of (Z/p)^2 for p=3 is E(27)") {
    WildGroup g = build_group(3, 1, std::vector<std::uint8_t>(9, 0));
    ClosureResult cr = extraspecial_closure(g);
    GroupProfile pr = profile(cr.E);
    CHECK(pr.order == 27);
    CHECK(pr.center_order == 3);
    CHECK(pr.exponent == 3);
    CHECK(pr.label.text == "extraspecial(27, I) [E(27)]");
}

TEST_CASE("extraspecial closure of Z/4 is D8 or Q8") {
    WildGroup g = cyclic_p2_group(2);
    ClosureResult cr = extraspecial_closure(g);
    GroupProfile pr = profile(cr.E);
    CHECK(pr.order == 8);
    CHECK(pr.center_order == 2);
    u64 order4 = 0;
    for (auto& [o, c] : pr.order_stats)
        if (o == 4) order4 = c;
    CHECK((order4 == 2 || order4 == 6));
    CHECK(pr.label.kind == GKind::extraspecial);
}

TEST_CASE("closure of an extraspecial p^3 gives order p^5 with center p") {
    const Field* F3 = Field::get(3, 1);
    CoverAnalysis A = analyze(poly_of(F3, {{4, 1}}));  // E(27), r = 2
    ClosureResult cr = extraspecial_closure(A.group);
    GroupProfile pr = profile(cr.E);
    CHECK(pr.order == 243);
    CHECK(pr.center_order == 3);
}

TEST_CASE("central product labeling") {
    // Q8 x (elementary) radical: synthesize a rank-3 cocycle with a 2-dim
    // symplectic part and a 1-dim radical by extending the Q8 table.
    const Field* F2 = Field::get(2, 1);
    CoverAnalysis A = analyze(poly_of(F2, {{3, 1}}));
    unsigned r = A.group.r + 1;
    size_t n = A.group.n * 2;
    std::vector<std::uint8_t> g(n * n, 0);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) g[a * n + b] = A.group.gam(a % A.group.n, b % A.group.n);
    WildGroup big = build_group(2, r, std::move(g));
    GroupProfile pr = profile(big);
    CHECK(pr.order == 16);
    CHECK(pr.label.kind == GKind::central_product);
    CHECK(pr.radical_dim == 1);
    CHECK(pr.label.abelian_elementary);
    CHECK(pr.label.es_type == EsType::IIIb);
}

TEST_SUITE_END();
