#include "maninforge/fixtures.hpp"

namespace mforge::fixtures {

namespace {

Matrix col(std::size_t n, std::initializer_list<Rational> entries) {
    Matrix m(n, 1);
    std::size_t i = 0;
    for (const Rational& e : entries) m.at(i++, 0) = e;
    return m;
}

} // namespace

LieAlgebra sl2() {
    LieAlgebra a(3, "sl2", {"H", "X+", "X-"});
    a.set_bracket(0, 1, col(3, {0, 2, 0}));
    a.set_bracket(0, 2, col(3, {0, 0, -2}));
    a.set_bracket(1, 2, col(3, {1, 0, 0}));
    return a;
}

RMatrix sl2_r() {
    Matrix c(3, 3);
    c.at(0, 0) = Rational(1, 4);
    c.at(1, 2) = 1;
    return RMatrix{sl2(), c};
}

ManinTriple sl2_double() {
    LieAlgebra g(6, "sl2-double", {"h", "x+", "x-", "H", "X+", "X-"});
    const Rational h(1, 2);
    // Dual block.
    g.set_bracket(0, 1, col(6, {0, -h, 0, 0, 0, 0}));
    g.set_bracket(0, 2, col(6, {0, 0, -h, 0, 0, 0}));
    // sl2 block.
    g.set_bracket(3, 4, col(6, {0, 0, 0, 0, 2, 0}));
    g.set_bracket(3, 5, col(6, {0, 0, 0, 0, 0, -2}));
    g.set_bracket(4, 5, col(6, {0, 0, 0, 1, 0, 0}));
    // Crossed block [X, xi] (zero pairs omitted).
    g.set_bracket(4, 0, col(6, {0, 0, -1, 0, -h, 0})); // [X+,h] = -1/2 X+ - x-
    g.set_bracket(5, 0, col(6, {0, 1, 0, 0, 0, -h}));  // [X-,h] = -1/2 X- + x+
    g.set_bracket(3, 1, col(6, {0, -2, 0, 0, 0, 0}));  // [H,x+] = -2 x+
    g.set_bracket(4, 1, col(6, {2, 0, 0, h, 0, 0}));   // [X+,x+] = 1/2 H + 2h
    g.set_bracket(3, 2, col(6, {0, 0, 2, 0, 0, 0}));   // [H,x-] = 2 x-
    g.set_bracket(5, 2, col(6, {-2, 0, 0, h, 0, 0}));  // [X-,x-] = 1/2 H - 2h
    Matrix gram(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        gram.at(i, 3 + i) = 1;
        gram.at(3 + i, i) = 1;
    }
    return ManinTriple{g, BilinearForm(gram), Subspace::coordinate(6, 0, 3),
                       Subspace::coordinate(6, 3, 3)};
}

LieAlgebra nonabelian2() {
    LieAlgebra a(2, "nonabelian2");
    a.set_bracket(0, 1, col(2, {0, 1}));
    return a;
}

LieAlgebra heisenberg3() {
    LieAlgebra a(3, "heisenberg3");
    a.set_bracket(0, 1, col(3, {0, 0, 1}));
    return a;
}

LieAlgebra abelian(std::size_t n) {
    return LieAlgebra(n, "abelian" + std::to_string(n));
}

ManinTriple semidirect_double(const LieAlgebra& k) {
    const std::size_t n = k.dim();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(k.basis_names()[i] + "*");
    for (std::size_t i = 0; i < n; ++i) names.push_back(k.basis_names()[i]);
    LieAlgebra g(2 * n, k.name() + "-semidirect", names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix v(2 * n, 1);
            for (std::size_t l = 0; l < n; ++l) v.at(n + l, 0) = k.c(i, j, l);
            g.set_bracket(n + i, n + j, v);
        }
    for (std::size_t x = 0; x < n; ++x) {
        const Matrix adx = k.ad(basis_vector(n, x));
        for (std::size_t a = 0; a < n; ++a) {
            const Matrix adstar = adx.transpose() * basis_vector(n, a);
            Matrix v(2 * n, 1);
            for (std::size_t l = 0; l < n; ++l) v.at(l, 0) = -adstar.at(l, 0);
            g.set_bracket(n + x, a, v);
        }
    }
    Matrix gram(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        gram.at(i, n + i) = 1;
        gram.at(n + i, i) = 1;
    }
    return ManinTriple{g, BilinearForm(gram), Subspace::coordinate(2 * n, 0, n),
                       Subspace::coordinate(2 * n, n, n)};
}

AntiIsoPair sl2_pair() {
    LieAlgebra em(3, "a-side", {"a1", "a2", "a3"});
    em.set_bracket(0, 1, col(3, {0, 2, 0}));
    em.set_bracket(0, 2, col(3, {0, 0, -2}));
    em.set_bracket(1, 2, col(3, {1, 0, 0}));
    LieAlgebra ep(3, "b-side", {"b1", "b2", "b3"});
    ep.set_bracket(0, 1, col(3, {0, -2, 0}));
    ep.set_bracket(0, 2, col(3, {0, 0, 2}));
    ep.set_bracket(1, 2, col(3, {-1, 0, 0}));
    Matrix gm(3, 3);
    gm.at(0, 0) = 2;
    gm.at(1, 2) = 1;
    gm.at(2, 1) = 1;
    return AntiIsoPair{ep, em, Matrix::identity(3), BilinearForm(-gm),
                       BilinearForm(gm)};
}

Matrix sl2_theta() {
    Matrix t(3, 3);
    t.at(1, 1) = 1;
    t.at(2, 2) = -1;
    return t;
}

Matrix sl2_aut_upper(const Rational& t) {
    Matrix a = Matrix::identity(3);
    a.at(1, 0) = -2 * t;
    a.at(0, 2) = t;
    a.at(1, 2) = -t * t;
    return a;
}

Matrix sl2_aut_lower(const Rational& t) {
    Matrix a = Matrix::identity(3);
    a.at(2, 0) = 2 * t;
    a.at(0, 1) = -t;
    a.at(2, 1) = -t * t;
    return a;
}

Matrix sl2_weyl() {
    Matrix a(3, 3);
    a.at(0, 0) = -1;
    a.at(2, 1) = 1;
    a.at(1, 2) = 1;
    return a;
}

RMatrix conjugate_r(const RMatrix& r, const Matrix& a) {
    return RMatrix{r.algebra, a * r.coeffs * a.transpose()};
}

} // namespace mforge::fixtures
