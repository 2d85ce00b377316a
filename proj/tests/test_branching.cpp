#include <gtest/gtest.h>

#include "ggp/ggp.hpp"
#include "oracles.hpp"

using namespace ggp;

namespace {

Segment seg(Coord lo, Coord hi) { return Segment("rho", lo, hi); }
Coord q(std::int64_t p, std::int64_t d = 1) { return Coord(p, d); }
const LabelSet kRho = LabelSet::single();

ArthurParams arthur(std::vector<std::pair<int, int>> ab, const std::string& label = "rho") {
    ArthurParams A;
    for (auto [a, b] : ab) A.factors.push_back({label, a, b});
    return A;
}

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
using Singles = std::vector<std::size_t>;

}  // namespace

TEST(Ggp, Examples) {
    auto w = ggp_position(arthur({{2, 2}}), arthur({{2, 3}}));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->matched_up, (Pairs{{0, 0}}));
    EXPECT_TRUE(w->matched_down.empty());

    EXPECT_FALSE(ggp_position(arthur({{1, 2}}), arthur({{1, 2}})).has_value());

    const auto A = arthur({{1, 1}, {2, 2}});
    const auto B = arthur({{2, 1}, {1, 1}});
    w = ggp_position(A, B);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->matched_down, (Pairs{{1, 0}}));
    EXPECT_TRUE(w->matched_up.empty());
    EXPECT_EQ(w->unmatched_a, (Singles{0}));
    EXPECT_EQ(w->unmatched_b, (Singles{1}));
    EXPECT_TRUE(is_valid_witness(A, B, *w));
}

TEST(Ggp, WitnessValidation) {
    const auto A = arthur({{2, 2}});
    const auto B = arthur({{2, 3}});
    GgpWitness w{{{0, 0}}, {}, {}, {}};
    EXPECT_TRUE(is_valid_witness(A, B, w));
    w.matched_down = {{0, 0}};
    w.matched_up.clear();
    EXPECT_FALSE(is_valid_witness(A, B, w));
    EXPECT_FALSE(is_valid_witness(A, B, GgpWitness{{}, {}, {0}, {0}}));
    EXPECT_FALSE(is_valid_witness(A, B, GgpWitness{{{0, 0}}, {}, {0}, {}}));
}

TEST(Ggp, LabelsMustAgree) {
    EXPECT_FALSE(ggp_position(arthur({{2, 2}}), arthur({{2, 3}}, "sigma")).has_value());
    EXPECT_TRUE(ggp_position(arthur({{2, 1}}), arthur({{2, 1}}, "sigma")).has_value());
}

TEST(GgpProperty, AgreesWithPartitionSearch) {
    RangeSpec r;
    r.max_a = 2;
    r.max_b = 3;
    r.max_factors = 3;
    r.labels = {{"rho", 1, "rho"}, {"sigma", 1, "sigma"}};
    const auto all = enumerate_arthur(r);
    std::size_t positive = 0;
    for (const auto& A : all)
        for (const auto& B : all) {
            const auto w = ggp_position(A, B);
            ASSERT_EQ(w.has_value(), oracle::ggp_position(A, B))
                << to_json(A).dump() << " " << to_json(B).dump();
            if (w) {
                ++positive;
                ASSERT_TRUE(is_valid_witness(A, B, *w));
            }
        }
    EXPECT_GT(positive, 1000u);
}

TEST(DerivativeMatch, Examples) {
    const auto d = exists_derivative_match(arthur({{1, 2}}), arthur({{1, 1}}), kRho);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->c_a, std::vector<int>{0});
    EXPECT_EQ(d->c_b, std::vector<int>{1});
    EXPECT_FALSE(exists_derivative_match(arthur({{2, 2}}), arthur({{3, 1}}), kRho).has_value());
    const auto empty = exists_derivative_match(ArthurParams{}, ArthurParams{}, kRho);
    ASSERT_TRUE(empty.has_value());
    EXPECT_TRUE(empty->c_a.empty());
    EXPECT_TRUE(empty->c_b.empty());
}

// The per-label meet-in-the-middle search against the plain product of all
// c-choices, including a pair of mutually dual labels.
TEST(DerivativeMatchProperty, AgreesWithFullEnumeration) {
    const LabelSet ls({{"rho", 1, "rho"}, {"tau", 1, "tau'"}, {"tau'", 1, "tau"}});
    std::vector<SpehParams> pool;
    for (const char* l : {"rho", "tau", "tau'"})
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b) pool.push_back({l, a, b});
    const auto sets = enumerate_multisets(pool, 2);
    std::size_t positive = 0, checked = 0;
    for (const auto& fa : sets)
        for (const auto& fb : sets) {
            const ArthurParams A{fa}, B{fb};
            const auto d = exists_derivative_match(A, B, ls);
            ASSERT_EQ(d.has_value(), oracle::derivative_match(A, B, ls))
                << to_json(A).dump() << " " << to_json(B).dump();
            if (d) {
                ++positive;
                EXPECT_TRUE(detail::derivative_match_holds(A, B, *d, ls));
            }
            ++checked;
        }
    EXPECT_GT(positive, 20u);
    EXPECT_GT(checked, 5000u);
}

TEST(SegLem, Examples) {
    auto s = seg_lem_decompose({{"rho", 1, 1, 1}}, kRho);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(s->minus.empty());
    EXPECT_EQ(s->plus, Singles{0});

    s = seg_lem_decompose({{"rho", 1, 2, 1}}, kRho);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(s->minus.empty());
    EXPECT_EQ(s->plus, Singles{0});
    EXPECT_EQ(seg_lem_shape({{"rho", 1, 2, 1}}, *s, "rho"), (Multisegment{seg(0, 0), seg(-1, -1)}));

    s = seg_lem_decompose({{"rho", 1, 2, 0}}, kRho);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->minus, Singles{0});
    EXPECT_TRUE(s->plus.empty());

    EXPECT_THROW(seg_lem_decompose({{"rho", 1, 1, 1}, {"sigma", 1, 1, 1}},
                                   LabelSet({{"rho", 1, "rho"}, {"sigma", 1, "sigma"}})),
                 Error);
}

TEST(SegLemProperty, AgreesWithSplitSearch) {
    std::vector<QuasiSpehParams> pool;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 0; c <= a; ++c) pool.push_back({"rho", a, b, c});
    std::size_t positive = 0;
    for (const auto& qs : enumerate_multisets(pool, 2)) {
        const auto s = seg_lem_decompose(qs, kRho);
        ASSERT_EQ(s.has_value(), oracle::seg_lem_has_split(qs, kRho));
        if (s) ++positive;
    }
    EXPECT_GT(positive, 10u);
}

TEST(Cyclic, Examples) {
    const Multisegment p0{seg(0, 0)}, p1{seg(1, 1)}, p2{seg(2, 2)};
    EXPECT_TRUE(cyclic_tuple({p0, p1, p2}));
    EXPECT_FALSE(cyclic_tuple({p2, p1, p0}));
    EXPECT_TRUE(cyclic_tuple({speh_multisegment({"rho", 1, 2})}));
    EXPECT_TRUE(cyclic_tuple({}));
    EXPECT_THROW(cyclic_tuple({Multisegment{seg(0, 0), seg(0, 0)}, p1}), Error);
}

TEST(Verdict, Examples) {
    auto v = branching_verdict(arthur({{1, 2}}), arthur({{1, 1}}), kRho);
    EXPECT_EQ(v.tag, VerdictTag::HomNonzero);
    ASSERT_TRUE(v.witness.has_value());

    v = branching_verdict(arthur({{2, 2}}), arthur({{3, 1}}), kRho);
    EXPECT_EQ(v.tag, VerdictTag::HomZero);
    EXPECT_FALSE(v.witness.has_value());

    v = branching_verdict(arthur({{2, 2}}), arthur({{2, 1}, {1, 1}}), kRho);
    EXPECT_EQ(v.tag, VerdictTag::HomNonzero);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->matched_down, (Pairs{{0, 0}}));

    v = branching_verdict(arthur({{1, 2}, {1, 2}}), arthur({{1, 3}}), kRho);
    EXPECT_EQ(v.tag, VerdictTag::HomZero);
    v = branching_verdict(arthur({{1, 2}, {1, 1}}), arthur({{1, 1}, {1, 1}}), kRho);
    EXPECT_EQ(v.tag, VerdictTag::HomNonzero);
    v = branching_verdict(arthur({{1, 3}, {1, 1}}), arthur({{1, 2}, {1, 1}}), kRho);
    EXPECT_EQ(v.tag, VerdictTag::ConjecturedNonzero);

    EXPECT_THROW(branching_verdict(arthur({{1, 2}}), arthur({{1, 2}}), kRho), Error);
}

TEST(Unitary, PassingExample) {
    const UnitaryParams u1{arthur({{1, 1}}), {{arthur({{1, 1}}), q(1, 4)}}};
    const UnitaryParams u2{arthur({{1, 2}}), {}};
    const auto r = unitary_branching_necessary(u1, u2, kRho);
    EXPECT_TRUE(r.arthur0_in_ggp);
    EXPECT_TRUE(r.pass());
}

// U2.arthur0 = {(2,1)}: no factor has b >= 2 on either side, so item (1)
// holds by definition and the report passes.
TEST(Unitary, MismatchedAWithAllBEqualOneStillPasses) {
    const UnitaryParams u1{arthur({{1, 1}}), {{arthur({{1, 1}}), q(1, 4)}}};
    const UnitaryParams u2{arthur({{2, 1}}), {}};
    const auto r = unitary_branching_necessary(u1, u2, kRho);
    EXPECT_TRUE(r.arthur0_in_ggp);
    EXPECT_TRUE(r.pass());
}

TEST(Unitary, FailingItems) {
    // item 1: a mismatch against a required b = 2 factor
    UnitaryParams u1{arthur({{1, 2}}), {{arthur({{1, 1}}), q(1, 4)}}};
    UnitaryParams u2{arthur({{3, 1}}), {}};
    auto r = unitary_branching_necessary(u1, u2, kRho);
    EXPECT_FALSE(r.arthur0_in_ggp);
    EXPECT_FALSE(r.pass());

    // item 2: shared alpha, paired components not in GGP position
    u1 = {arthur({{1, 1}}), {{arthur({{1, 2}}), q(1, 4)}}};
    u2 = {ArthurParams{}, {{arthur({{1, 2}}), q(1, 4)}}};
    r = unitary_branching_necessary(u1, u2, kRho);
    EXPECT_TRUE(r.arthur0_in_ggp);
    EXPECT_EQ(r.shared_not_ggp, (Pairs{{0, 0}}));

    // items 3 and 4: unshared non-generic components on both sides
    u1 = {arthur({{1, 1}}), {{arthur({{1, 2}}), q(1, 4)}}};
    u2 = {ArthurParams{}, {{arthur({{1, 2}}), q(1, 3)}}};
    r = unitary_branching_necessary(u1, u2, kRho);
    EXPECT_EQ(r.unshared_first_not_generic, Singles{0});
    EXPECT_EQ(r.unshared_second_not_generic, Singles{0});

    EXPECT_THROW(unitary_branching_necessary(u1, u1, kRho), Error);
}

TEST(QuasiArthur, Quotient) {
    EXPECT_EQ(quasi_arthur_quotient({{"rho", 2, 2, 1}, {"rho", 1, 1, 1}}),
              (Multisegment{seg(1, 1), seg(-1, 0), seg(0, 0)}));
    EXPECT_EQ(quasi_arthur_quotient({{"rho", 1, 2, 0}}), (Multisegment{seg(q(-1, 2), q(-1, 2))}));
    EXPECT_EQ(quasi_arthur_quotient({}), Multisegment{});
    EXPECT_THROW(quasi_arthur_quotient({{"rho", 1, 1, 0}, {"sigma", 1, 1, 0}}), Error);
}

TEST(HalfShift, Examples) {
    auto [s1, s2] = halfshift_supports({"rho", 1, 1}, {"rho", 1, 1});
    EXPECT_EQ(s1, Segment("rho", q(1, 2), q(1, 2)));
    EXPECT_EQ(s2, seg(0, 0));
    EXPECT_TRUE(speh_halfshift_irreducible({"rho", 1, 1}, {"rho", 1, 1}));

    std::tie(s1, s2) = halfshift_supports({"rho", 2, 1}, {"rho", 1, 1});
    EXPECT_EQ(s1, seg(0, 1));
    EXPECT_EQ(s2, seg(0, 0));
    EXPECT_TRUE(speh_halfshift_irreducible({"rho", 2, 1}, {"rho", 1, 1}));
    EXPECT_TRUE(speh_halfshift_irreducible({"rho", 1, 2}, {"rho", 1, 2}));
    EXPECT_TRUE(speh_halfshift_irreducible({"rho", 1, 2}, {"sigma", 5, 5}));
}
