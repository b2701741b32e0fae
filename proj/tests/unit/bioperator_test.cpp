#include <bimatrix.hpp>

#include "../support/oracles.hpp"

#include <gtest/gtest.h>

using namespace bimatrix;

using M = Matrix<Rational>;
using BM = BiMatrix<Rational>;

namespace {

Polynomial poly(std::initializer_list<std::int64_t> ascending)
{
    std::vector<Rational> c;
    for (auto x : ascending) c.emplace_back(x);
    return Polynomial(std::move(c));
}

const BM kNoRealRoots(M{{0, -1}, {1, 0}}, M{{3, 1, -1}, {2, 2, -1}, {2, 2, 0}});
const BM kDefective(M{{2, 0}, {1, -2}}, M{{1, 1, 0, 0}, {-1, -1, 0, 0}, {-2, -2, 2, 1}, {1, 1, -1, 0}});
const BM kDiagonalizable(M{{1, 0}, {5, 3}}, M{{2, 0, 0}, {9, 1, 0}, {0, 0, 3}});
const BM kMinimal(M{{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}},
                  M{{1, 1, 0, 0}, {-1, -1, 0, 0}, {-2, -2, 2, 1}, {1, 1, -1, 0}});

}  // namespace

TEST(Polynomial, Formatting)
{
    EXPECT_EQ(poly({1, 0, 1}).str(), "1 + x^2");
    EXPECT_EQ(poly({-4, 8, -5, 1}).str(), "-4 + 8*x - 5*x^2 + x^3");
    EXPECT_EQ(poly({0, -4, 0, 1}).str(), "-4*x + x^3");
    EXPECT_EQ(Polynomial().str(), "0");
    EXPECT_EQ(Polynomial(std::vector<Rational>{Rational(1, 2), Rational(-1)}).str(), "1/2 - x");
}

TEST(Polynomial, DivisionAndGcd)
{
    const auto [q, r] = divmod(poly({-4, 8, -5, 1}), poly({-2, 1}));
    EXPECT_EQ(q, poly({2, -3, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(poly({-4, 8, -5, 1}), poly({-4, 4, 1 - 0}) * poly({1})), gcd(poly({-4, 4, 1}), poly({-4, 8, -5, 1})));
    EXPECT_EQ(gcd(poly({0, 0, 1}), poly({0, 1, 1})), poly({0, 1}));
}

TEST(Polynomial, RationalRoots)
{
    const auto f = factor_rational_roots(poly({-4, 8, -5, 1}));
    ASSERT_EQ(f.roots.size(), 2u);
    EXPECT_EQ(f.roots[0].root, Rational(1));
    EXPECT_EQ(f.roots[0].multiplicity, 1u);
    EXPECT_EQ(f.roots[1].root, Rational(2));
    EXPECT_EQ(f.roots[1].multiplicity, 2u);
    EXPECT_TRUE(f.splits());

    const auto g = factor_rational_roots(Polynomial(std::vector<Rational>{Rational(-1), Rational(0), Rational(4)}));
    ASSERT_EQ(g.roots.size(), 2u);
    EXPECT_EQ(g.roots[0].root, Rational(-1, 2));

    const auto h = factor_rational_roots(poly({2, 0, 0, 1}) * poly({-3, 1}));
    EXPECT_FALSE(h.splits());
    EXPECT_EQ(h.residual, poly({2, 0, 0, 1}));
}

TEST(Polynomial, MatrixEvaluation)
{
    const M a{{1, 2}, {3, 4}};
    EXPECT_TRUE(poly({-2, -5, 1})(a).is_zero());  // Cayley-Hamilton for a 2x2
}

TEST(Characteristic, WorkedPolynomials)
{
    const auto p = char_bipolynomial(kNoRealRoots);
    EXPECT_EQ(p.first, poly({1, 0, 1}));
    EXPECT_EQ(p.second, poly({-4, 8, -5, 1}));
    const auto d = char_bipolynomial(kDefective);
    EXPECT_EQ(d.first, poly({-4, 0, 1}));
    EXPECT_EQ(d.second, poly({0, 0, 1, -2, 1}));
    EXPECT_THROW(char_bipolynomial(BM(M{{1, 2}}, M{{1}})), ShapeError);
}

TEST(Characteristic, AgreesWithInterpolatedDeterminants)
{
    for (const BM* b : {&kNoRealRoots, &kDefective, &kDiagonalizable, &kMinimal})
        for (int k : {1, 2})
            EXPECT_EQ(characteristic_polynomial(b->component(k)).coefficients(),
                      oracle::charpoly_coefficients(b->component(k)));
}

TEST(Minimal, WorkedPolynomials)
{
    const auto p = biminimal_polynomial(kMinimal);
    EXPECT_EQ(p.first, poly({0, -4, 0, 1}));         // x(x-2)(x+2)
    EXPECT_EQ(p.second, poly({0, 0, 1, -2, 1}));     // x^2(x-1)^2
    EXPECT_EQ(minimal_polynomial(M::identity(3)), poly({-1, 1}));
    EXPECT_EQ(minimal_polynomial(M::zero(2, 2)), poly({0, 1}));
}

TEST(Eigen, SemiClassification)
{
    const auto r = bieigen(kNoRealRoots);
    EXPECT_EQ(r.classification, SpectralClass::SemiSecond);
    EXPECT_TRUE(r.first.roots.empty());
    EXPECT_EQ(r.first.residual, poly({1, 0, 1}));
    ASSERT_EQ(r.second.roots.size(), 2u);
    EXPECT_EQ(r.second.roots[1].value, Rational(2));
    EXPECT_EQ(r.second.roots[1].algebraic, 2u);
    EXPECT_EQ(r.second.roots[1].geometric(), 1u);
    // eigenvectors proportional to (1,0,2) and (1,1,2)
    EXPECT_EQ(r.second.roots[0].basis[0], (std::vector<Rational>{Rational(1, 2), 0, 1}));
    EXPECT_EQ(r.second.roots[1].basis[0], (std::vector<Rational>{Rational(1, 2), Rational(1, 2), 1}));
}

TEST(Eigen, FullClassification)
{
    const auto r = bieigen(kDiagonalizable);
    EXPECT_EQ(r.classification, SpectralClass::Full);
    std::vector<Rational> v1, v2;
    for (const auto& x : r.first.roots) v1.push_back(x.value);
    for (const auto& x : r.second.roots) v2.push_back(x.value);
    EXPECT_EQ(v1, (std::vector<Rational>{1, 3}));
    EXPECT_EQ(v2, (std::vector<Rational>{1, 2, 3}));
    EXPECT_EQ(bieigen(BM(M{{0, -1}, {1, 0}}, M{{0, 2}, {-1, 0}})).classification, SpectralClass::None);
}

TEST(Diagonalization, Witnesses)
{
    const auto yes = is_bidiagonalizable(kDiagonalizable);
    EXPECT_TRUE(yes.holds());
    ASSERT_TRUE(yes.first.eigenbasis.has_value());
    EXPECT_NE(determinant(*yes.first.eigenbasis), Rational(0));
    const auto no = is_bidiagonalizable(kDefective);
    EXPECT_FALSE(no.holds());
    EXPECT_TRUE(no.first.diagonalizable);
    EXPECT_FALSE(no.second.diagonalizable);
    EXPECT_FALSE(is_bidiagonalizable(kNoRealRoots).first.diagonalizable);
}

TEST(Projections, SpectralDecomposition)
{
    const auto p = biprojections(kDiagonalizable);
    for (int k : {1, 2}) {
        const auto& list = k == 1 ? p.first : p.second;
        const M& a = kDiagonalizable.component(k);
        M sum = M::zero(a.rows(), a.cols()), weighted = sum;
        for (const auto& e : list) {
            EXPECT_EQ(e.matrix * e.matrix, e.matrix);
            sum = sum + e.matrix;
            weighted = weighted + e.eigenvalue * e.matrix;
        }
        EXPECT_TRUE(sum.is_identity());
        EXPECT_EQ(weighted, a);
    }
    EXPECT_THROW(biprojections(kDefective), NotDiagonalizable);
}

TEST(Triangularizability, MinimalPolynomialSplits)
{
    const auto t = is_bitriangularizable(kNoRealRoots);
    EXPECT_FALSE(t.first);
    EXPECT_TRUE(t.second);
    EXPECT_FALSE(t.overall());
    EXPECT_TRUE(is_bitriangularizable(kDefective).overall());
}

TEST(Nilpotence, Powers)
{
    EXPECT_TRUE(is_binilpotent(BM(M{{0, 1}, {0, 0}}, M{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
    EXPECT_FALSE(is_binilpotent(BM(M{{0, 1}, {0, 0}}, M{{1}})));
}

TEST(Similarity, Witnesses)
{
    const BM p(M{{1, 1}, {0, 1}}, M{{1, 0, 0}, {1, 1, 0}, {0, 0, 2}});
    const BM pinv = biinverse(p);
    const BM b = mul(mul(pinv, kDiagonalizable), p);
    EXPECT_EQ(check_similarity_witness(kDiagonalizable, b, p).kind, Similarity::Similar);
    EXPECT_EQ(check_similarity_witness(kDiagonalizable, kDiagonalizable, p).kind, Similarity::NotSimilar);

    const BM semi(M{{1, 1}, {0, 1}}, M{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
    const BM half(b.first(), kDiagonalizable.second());
    const auto s = check_similarity_witness(kDiagonalizable, half, semi);
    EXPECT_EQ(s.kind, Similarity::SemiSimilar);
    EXPECT_EQ(s.witnessed, Component::First);
    EXPECT_THROW(check_similarity_witness(kDiagonalizable, kDiagonalizable, BM::zero(2, 2, 3, 3)), SingularWitness);
}

TEST(RowReduction, WeakReachesReducedFormInBoth)
{
    const BM a(M{{3, -2, 1}, {3, 2, 5}, {1, 0, 1}}, M{{6, 7, 1}, {0, -7, 2}, {1, 0, 2}});
    const auto w = row_bireduce(a, ReductionMode::Weak);
    EXPECT_TRUE(is_rref(w.result.first()));
    EXPECT_TRUE(is_rref(w.result.second()));
    EXPECT_EQ(w.result.first(), (M{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
    EXPECT_TRUE(w.result.second().is_identity());
    EXPECT_EQ(replay(a, w.ops), w.result);
    for (const auto& op : w.ops) EXPECT_NE(op.scope, Component::Both);
}

TEST(RowReduction, StrongSharesOneSequence)
{
    const BM a(M{{3, -2, 1}, {3, 2, 5}, {1, 0, 1}}, M{{6, 7, 1}, {0, -7, 2}, {1, 0, 2}});
    const auto s = row_bireduce(a, ReductionMode::Strong);
    EXPECT_TRUE(is_rref(s.result.first()));
    EXPECT_FALSE(s.second_reduced);
    EXPECT_EQ(replay(a, s.ops), s.result);
    for (const auto& op : s.ops) EXPECT_EQ(op.scope, Component::Both);
    EXPECT_THROW(row_bireduce(BM(M{{1, 2}}, M{{1}, {2}}), ReductionMode::Strong), ShapeError);
}

TEST(BiEquation, HomogeneousBisolution)
{
    const BM a(M{{2, 1, 1}, {-1, 1, 1}, {1, 1, 1}}, M{{3, 5, 1}, {1, 3, -1}, {1, 5, 5}});
    const std::vector<Rational> zero(3, Rational(0));
    const auto s = solve_biequation(a, zero, zero);
    EXPECT_TRUE(s.homogeneous);
    EXPECT_FALSE(s.semi_homogeneous);
    ASSERT_EQ(s.first.nullspace_basis.size(), 1u);
    EXPECT_EQ(s.first.nullspace_basis[0], (std::vector<Rational>{0, -1, 1}));
    EXPECT_TRUE(s.second.nullspace_basis.empty());
}

TEST(BiEquation, SemiHomogeneousAndInconsistent)
{
    const BM a(M{{1, 0}, {0, 1}}, M{{1, 1}, {1, 1}});
    const auto s = solve_biequation(a, {Rational(0), Rational(0)}, {Rational(2), Rational(2)});
    EXPECT_TRUE(s.semi_homogeneous);
    EXPECT_EQ(s.second.particular, (std::vector<Rational>{2, 0}));
    try {
        solve_biequation(a, {Rational(1), Rational(1)}, {Rational(1), Rational(2)});
        FAIL() << "expected Inconsistent";
    } catch (const Inconsistent& e) {
        EXPECT_EQ(e.which(), Component::Second);
    }
    EXPECT_THROW(solve_biequation(a, {Rational(1)}, {Rational(1), Rational(2)}), DimMismatch);
}
