#include "bchresum/errors.hpp"
#include "bchresum/oracle.hpp"
#include "bchresum/resummation.hpp"

#include "naive_algebra.hpp"

#include <gtest/gtest.h>

using namespace bchresum;

namespace {

NCPoly X(int d) { return NCPoly::generator(Alphabet::XY, 0, d); }
NCPoly Y(int d) { return NCPoly::generator(Alphabet::XY, 1, d); }
NCPoly U(int d) { return NCPoly::generator(Alphabet::UW, 0, d); }
NCPoly W(int d) { return NCPoly::generator(Alphabet::UW, 1, d); }

} // namespace

TEST(BchDirect, MatchesNaiveExpansion)
{
    for (int d = 1; d <= 7; ++d) {
        auto ref = naive::log(naive::times(naive::exp({{"x", 1}}, d), naive::exp({{"y", 1}}, d), d), d);
        EXPECT_EQ(bch_direct(d), naive::to(ref, Alphabet::XY, d)) << "D=" << d;
    }
}

TEST(BchDirect, LowDegreeParts)
{
    const int d = 5;
    auto f = bch_direct(d);
    EXPECT_EQ(homogeneous_part(f, 1), X(d) + Y(d));
    EXPECT_EQ(homogeneous_part(f, 2), (X(d) * Y(d) - Y(d) * X(d)) * Scalar(1, 2));
    auto x = X(d), y = Y(d);
    auto p3 = commutator(x, commutator(x, y)) * Scalar(1, 12) + commutator(y, commutator(y, x)) * Scalar(1, 12);
    EXPECT_EQ(homogeneous_part(f, 3), p3);
    EXPECT_EQ(homogeneous_part(f, 3).coeff("xyx"), Scalar(-1, 6));
}

TEST(BchDirect, TruncationCoherence)
{
    auto big = bch_direct(8);
    for (int d = 1; d <= 8; ++d)
        EXPECT_EQ(big.truncated(d), bch_direct(d)) << "D=" << d;
}

TEST(BchDirect, AntisymmetryUnderSwapAndNegate)
{
    for (int d = 1; d <= 6; ++d) {
        auto f = bch_direct(d);
        // f(-y, -x) = -f(x, y)
        auto image = substitute(f, -Y(d), -X(d));
        EXPECT_EQ(image, -f) << "D=" << d;
    }
}

TEST(QSeriesToXY, Examples)
{
    EXPECT_EQ(qseries_to_xy({U(4)}, 4), X(4) + Y(4));
    auto q = (W(4) * U(4) - U(4) * W(4)) * Scalar(1, 4);
    EXPECT_EQ(qseries_to_xy({q}, 4), (X(4) * Y(4) - Y(4) * X(4)) * Scalar(1, 2));
    EXPECT_TRUE(qseries_to_xy({}, 4).is_zero());
    EXPECT_THROW(qseries_to_xy({X(4)}, 4), ConfigError);
}

TEST(Verify, SmallCases)
{
    auto r2 = verify(2, 2);
    EXPECT_TRUE(r2.matched);
    EXPECT_FALSE(r2.first_discrepancy.has_value());
    EXPECT_EQ(r2.per_degree_term_counts, (std::vector<std::size_t>{0, 2, 2}));
    EXPECT_TRUE(verify(6, 6).matched);
    EXPECT_TRUE(verify(7, 5).matched);
}

TEST(Verify, RequiresOrderAtLeastDegree)
{
    EXPECT_THROW(verify(3, 4), ConfigError);
}

TEST(Verify, FaultInjectionReportsWord)
{
    const int d = 4;
    auto q = q_series(psi_via_descendants(d, d));
    q[0].add_term(Word::parse(Alphabet::UW, "uw"), Scalar(1, 1000));
    auto r = compare_with_oracle(q, d, d);
    EXPECT_FALSE(r.matched);
    ASSERT_TRUE(r.first_discrepancy.has_value());
    // u w -> (x+y)(x-y) touches xx first
    EXPECT_EQ(r.first_discrepancy->word, "xx");
    EXPECT_EQ(r.first_discrepancy->expected, Scalar(0));
    EXPECT_EQ(r.first_discrepancy->actual, Scalar(1, 1000));
    auto j = r.to_json();
    EXPECT_EQ(j["matched"], false);
    EXPECT_EQ(j["first_discrepancy"]["word"], "xx");
}
