#include <bimatrix.hpp>

#include <gtest/gtest.h>

#include <string>

using namespace bimatrix;

namespace {

template <typename T>
BiMatrix<T> corpus(const std::string& name)
{
    return std::get<BiMatrix<T>>(parse_bimatrix_file(std::string(BIMAT_CORPUS_DIR) + "/" + name).value);
}

NeutroMatrix nm(std::initializer_list<std::initializer_list<const char*>> rows)
{
    std::vector<std::vector<NeutrosophicScalar>> v;
    for (auto r : rows) {
        v.emplace_back();
        for (auto s : r) v.back().push_back(NeutrosophicScalar::parse(s));
    }
    NeutroMatrix m(v.size(), v[0].size());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = v[i][j];
    return m;
}

FuzzyNeutroValue f(const char* s) { return FuzzyNeutroValue::parse(s); }

}  // namespace

TEST(NeutroProduct, EntrywiseValues)
{
    const auto a = corpus<NeutrosophicScalar>("neutro_a.bim");
    const auto b = corpus<NeutrosophicScalar>("neutro_b.bim");
    const NeutroMatrix p = neutro_matmul(a.first(), b.first());
    EXPECT_EQ(p, nm({{"2-6I", "-1+4I", "-2-3I", "I"}, {"4I", "3+I", "6", "12+2I"}}));
    const auto lifted = bimatrix_lift(neutro_matmul, a, b);
    EXPECT_EQ(lifted.second(), nm({{"2+I", "I"}, {"I", "1"}}));
}

TEST(NeutroProduct, EvaluationCommutes)
{
    const auto a = corpus<NeutrosophicScalar>("neutro_a.bim").first();
    const auto b = corpus<NeutrosophicScalar>("neutro_b.bim").first();
    auto ev0 = [](const NeutrosophicScalar& x) { return x.ev0(); };
    auto ev1 = [](const NeutrosophicScalar& x) { return x.ev1(); };
    EXPECT_EQ(neutro_matmul(a, b).map(ev0), a.map(ev0) * b.map(ev0));
    EXPECT_EQ(neutro_matmul(a, b).map(ev1), a.map(ev1) * b.map(ev1));
    EXPECT_THROW(neutro_matmul(b, a), DimMismatch);
}

TEST(FuzzyCompose, MaxMin)
{
    const auto p = corpus<FuzzyNeutroValue>("fuzzy_p.bim");
    const auto q = corpus<FuzzyNeutroValue>("fuzzy_q.bim");
    const FuzzyMatrix r = fuzzy_maxmin_compose(p.first(), q.first());
    ASSERT_EQ(r.rows(), 3u);
    EXPECT_EQ(r(0, 0), f("I"));
    EXPECT_EQ(r(1, 0), f("I"));
    EXPECT_EQ(r(2, 0), f("0.1"));
    EXPECT_EQ(fuzzy_maxmin_compose(p.second(), q.second()), q.second());
    EXPECT_EQ(fuzzy_maxmin_compose(fuzzy_identity(3), p.first()), p.first());
    EXPECT_THROW(fuzzy_maxmin_compose(q.first(), q.first()), DimMismatch);
}

TEST(NeutroClassify, Kinds)
{
    EXPECT_EQ(classify_neutro(corpus<NeutrosophicScalar>("neutro_square.bim")).kind_str(), "Neutrosophic");
    const auto mixed = classify_neutro(corpus<NeutrosophicScalar>("neutro_mixed.bim"));
    EXPECT_EQ(mixed.kind, NeutroKind::Neutrosophic);
    EXPECT_EQ(mixed.shape, ShapeClass::MixedSquare);
    EXPECT_EQ(classify_neutro(corpus<NeutrosophicScalar>("semi_fuzzy.bim")).kind_str(), "Ordinary");
    const auto semi = classify_neutro(corpus<NeutrosophicScalar>("semi_neutro_fields.bim"));
    EXPECT_EQ(semi.kind_str(), "SemiNeutrosophic:second");
}

TEST(NeutroClassify, FieldScopes)
{
    EXPECT_EQ(field_scope(std::nullopt), FieldScope::Plain);
    EXPECT_EQ(field_scope(FieldTags{"Q(I)", "R(I)"}), FieldScope::Weak);
    EXPECT_EQ(field_scope(FieldTags{"R(I)", "C(I)"}), FieldScope::Weak);
    EXPECT_EQ(field_scope(FieldTags{"R(I)", "Z7(I)"}), FieldScope::Strong);
    EXPECT_EQ(field_scope(FieldTags{"R(I)", "R(I)"}), FieldScope::Plain);
    const auto file = parse_bimatrix_file(std::string(BIMAT_CORPUS_DIR) + "/semi_neutro_fields.bim");
    const auto c = classify_neutro(std::get<NeutroBiMatrix>(file.value), file.field_tags());
    EXPECT_EQ(c.field_scope, FieldScope::Weak);
}

TEST(FuzzyClassify, Taxonomy)
{
    const auto plain = classify_fuzzy(corpus<NeutrosophicScalar>("semi_fuzzy.bim"));
    EXPECT_EQ(FuzzyClass::kind_str(plain.fuzzy_kind, plain.fuzzy_component), "SemiFuzzy:second");

    const auto semi = classify_fuzzy(corpus<NeutrosophicScalar>("fuzzy_neutro_column.bim"));
    EXPECT_TRUE(semi.first.integral_neutro);
    EXPECT_TRUE(semi.first.fuzzy_neutro);
    EXPECT_FALSE(semi.second.fuzzy_neutro);
    EXPECT_EQ(FuzzyClass::kind_str(semi.neutro_kind, semi.neutro_component), "SemiFuzzy:first");
    EXPECT_EQ(semi.fuzzy_kind, FuzzyKind::NotFuzzy);

    const auto fz = corpus<FuzzyNeutroValue>("fuzzy_both.bim");
    const auto both = classify_fuzzy(map_bimatrix(fz, [](const FuzzyNeutroValue& v) { return to_neutrosophic(v); }));
    EXPECT_EQ(both.fuzzy_kind, FuzzyKind::Fuzzy);
    EXPECT_EQ(both.neutro_kind, FuzzyKind::NotFuzzy);
}

TEST(FuzzyClassify, PartialIndeterminacy)
{
    const auto m = nm({{"1/2I", "0"}, {"I", "1"}});
    const auto mem = fuzzy_membership(m);
    EXPECT_FALSE(mem.fuzzy);
    EXPECT_FALSE(mem.integral_neutro);
    EXPECT_TRUE(mem.fuzzy_neutro);
    EXPECT_FALSE(fuzzy_membership(nm({{"2", "I"}})).fuzzy_neutro);
}
