#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maninforge/fixtures.hpp"
#include "maninforge/rmatrix.hpp"

using namespace mforge;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const Rational& e : row) m.at(i, j++) = e;
        ++i;
    }
    return m;
}

Matrix colv(std::initializer_list<Rational> entries) {
    Matrix m(entries.size(), 1);
    std::size_t i = 0;
    for (const Rational& e : entries) m.at(i++, 0) = e;
    return m;
}

} // namespace

TEST_CASE("symmetric/skew split of the sl2 example") {
    const RMatrix r = fixtures::sl2_r();
    const auto [sym, skew] = split_r(r);
    const Rational q(1, 4), h(1, 2);
    CHECK(sym.coeffs == mat({{q, 0, 0}, {0, 0, h}, {0, h, 0}}));
    CHECK(skew.coeffs == mat({{0, 0, 0}, {0, 0, h}, {0, -h, 0}}));
    CHECK(sym.coeffs + skew.coeffs == r.coeffs);
    CHECK(rhat(r) == r.coeffs.transpose());
}

TEST_CASE("Yang-Baxter equation holds for the example and its scalings") {
    const RMatrix r = fixtures::sl2_r();
    CHECK(check_cybe(r).passed());
    for (const Rational& lam : {Rational(2), Rational(-1), Rational(1, 3)}) {
        RMatrix s = r;
        s.coeffs = lam * r.coeffs;
        CHECK(check_cybe(s).passed());
    }
    // A single-entry perturbation breaks it.
    RMatrix bad = r;
    bad.coeffs.at(0, 0) = Rational(1, 3);
    CHECK(!check_cybe(bad).passed());
    RMatrix bad2 = r;
    bad2.coeffs.at(2, 1) = 1;
    CHECK(!check_cybe(bad2).passed());
}

TEST_CASE("factorizability needs an invertible invariant symmetric part") {
    const RMatrix r = fixtures::sl2_r();
    CHECK(check_factorizable(r).passed());
    // The skew part alone has singular symmetric component.
    const auto [sym, skew] = split_r(r);
    CHECK(!check_factorizable(skew).passed());
    // An invertible but non-invariant symmetric part is also rejected.
    RMatrix nin = r;
    nin.coeffs = Matrix::identity(3);
    CHECK(!check_factorizable(nin).passed());
}

TEST_CASE("operator pair extracted from the example r") {
    const ManinTriple t = fixtures::sl2_double();
    const OOperator o = gb_from_r(t, fixtures::sl2_r());
    const Rational q(1, 4), h(1, 2);
    CHECK(o.G.coeffs == mat({{q, 0, 0}, {0, 0, h}, {0, h, 0}}));
    CHECK(o.B.coeffs == mat({{0, 0, 0}, {0, 0, -h}, {0, h, 0}}));
    CHECK(o.G.source == t.gplus);
    CHECK(o.G.target == t.gminus);
    CHECK(o.mass == Rational(-1));
    CHECK(validate_o_operator(t.context(), o).passed());

    // Non-factorizable input is refused.
    const auto [sym, skew] = split_r(fixtures::sl2_r());
    CHECK_THROWS_AS(gb_from_r(t, skew), std::invalid_argument);
}

TEST_CASE("modified Yang-Baxter identity for R = B G^-1") {
    const ManinTriple t = fixtures::sl2_double();
    const OOperator o = gb_from_r(t, fixtures::sl2_r());
    CHECK(check_semenov(t, o).passed());
    OOperator bad = o;
    bad.B.coeffs = Matrix::zero(3, 3);
    CHECK(!check_semenov(t, bad).passed());
}

TEST_CASE("dual bracket reproduces the worked-example table") {
    const LieAlgebra k = fixtures::sl2();
    const LieAlgebra dual = dual_bracket_from_r(k, fixtures::sl2_r());
    CHECK(dual.check_jacobi().passed());
    const Rational h(1, 2);
    CHECK(dual.bracket(basis_vector(3, 0), basis_vector(3, 1)) ==
          colv({0, -h, 0}));
    CHECK(dual.bracket(basis_vector(3, 0), basis_vector(3, 2)) ==
          colv({0, 0, -h}));
    CHECK(dual.bracket(basis_vector(3, 1), basis_vector(3, 2)).is_zero());
}

TEST_CASE("cobracket is consistent with the dual pairing") {
    const LieAlgebra k = fixtures::sl2();
    const RMatrix r = fixtures::sl2_r();
    CHECK(check_dual_pairing(k, r).passed());
    const auto delta = cobracket_from_r(k, r);
    REQUIRE(delta.size() == 3);
    // delta(e_k) = ad_{e_k} C- + C- ad_{e_k}^T, skew for each generator.
    for (const Matrix& d : delta) CHECK(d.transpose() == -d);
    const auto [sym, skew] = split_r(r);
    for (std::size_t l = 0; l < 3; ++l) {
        const Matrix ad = k.ad(basis_vector(3, l));
        CHECK(delta[l] == ad * skew.coeffs + skew.coeffs * ad.transpose());
    }
}

TEST_CASE("classical double matches the frozen golden table") {
    const ManinTriple d = double_from_bialgebra(fixtures::sl2(), fixtures::sl2_r());
    CHECK(verify_manin_triple(d).passed());
    const ManinTriple g = fixtures::sl2_double();
    CHECK(d.form.gram() == g.form.gram());
    CHECK(d.gplus.basis() == g.gplus.basis());
    CHECK(d.gminus.basis() == g.gminus.basis());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t l = 0; l < 6; ++l)
                CHECK(d.g.c(i, j, l) == g.g.c(i, j, l));
}

TEST_CASE("conjugated r-matrices stay factorizable Yang-Baxter solutions") {
    const RMatrix r = fixtures::sl2_r();
    for (const Matrix& a :
         {fixtures::sl2_aut_upper(1), fixtures::sl2_aut_lower(Rational(1, 2)),
          fixtures::sl2_weyl(), fixtures::sl2_aut_upper(-2)}) {
        const RMatrix rc = fixtures::conjugate_r(r, a);
        CHECK(check_cybe(rc).passed());
        CHECK(check_factorizable(rc).passed());
        const ManinTriple d = double_from_bialgebra(fixtures::sl2(), rc);
        CHECK(verify_manin_triple(d).passed());
    }
}
