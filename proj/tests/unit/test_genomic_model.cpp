#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "varkg/genomic_model.hpp"
#include "varkg/random.hpp"

using namespace varkg;

namespace {

VariantRecord record(std::string chrom, std::int64_t pos, std::string ref, std::vector<std::string> alts,
                     std::string id = ".") {
    VariantRecord r;
    r.chrom = std::move(chrom);
    r.pos = pos;
    r.ref_allele = std::move(ref);
    r.alt_alleles = std::move(alts);
    r.id = std::move(id);
    return r;
}

}  // namespace

TEST(BinCaddScore, PaperExampleRowIsCategoryOne) { EXPECT_EQ(bin_cadd_score(0.900784).value, 1); }

TEST(BinCaddScore, NegativeScoresAreCategoryZero) { EXPECT_EQ(bin_cadd_score(-3.2).value, 0); }

TEST(BinCaddScore, BoundariesGoToTheHigherBin) {
    EXPECT_EQ(bin_cadd_score(0.0).value, 1);
    EXPECT_EQ(bin_cadd_score(1.0).value, 2);
    EXPECT_EQ(bin_cadd_score(5.0).value, 3);
    EXPECT_EQ(bin_cadd_score(10.0).value, 4);
    EXPECT_EQ(bin_cadd_score(std::nextafter(0.0, -1.0)).value, 0);
    EXPECT_EQ(bin_cadd_score(std::nextafter(1.0, 0.0)).value, 1);
    EXPECT_EQ(bin_cadd_score(std::nextafter(10.0, 0.0)).value, 3);
}

TEST(BinCaddScore, ScoresAboveOneHundredStayInTopBin) {
    EXPECT_EQ(bin_cadd_score(150.0).value, 4);
    EXPECT_EQ(bin_cadd_score(1e300).value, 4);
}

TEST(BinCaddScore, NonFiniteInputIsRejected) {
    for (double bad : {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity(),
                       -std::numeric_limits<double>::infinity()}) {
        try {
            bin_cadd_score(bad);
            FAIL() << "expected invalid_argument";
        } catch (const std::invalid_argument& e) {
            EXPECT_STREQ(e.what(), "invalid score");
        }
    }
}

TEST(BinCaddScore, MonotoneSurjectivePartition) {
    Rng rng(11);
    std::vector<double> xs;
    for (int i = 0; i < 5000; ++i) xs.push_back(uniform_between(rng, -50.0, 200.0));
    std::sort(xs.begin(), xs.end());
    std::array<bool, 5> seen{};
    int last = -1;
    for (double x : xs) {
        int c = bin_cadd_score(x).value;
        ASSERT_GE(c, last);
        last = c;
        seen[static_cast<std::size_t>(c)] = true;
        int holds = (x < 0) + (x >= 0 && x < 1) + (x >= 1 && x < 5) + (x >= 5 && x < 10) + (x >= 10);
        ASSERT_EQ(holds, 1);
    }
    for (bool s : seen) EXPECT_TRUE(s);
}

TEST(VariantKey, SyntheticKeyWithoutId) { EXPECT_EQ(variant_key(record("1", 16963, "G", {"A"}), 0), "1:16963:G>A"); }

TEST(VariantKey, IdPassesThrough) { EXPECT_EQ(variant_key(record("1", 16963, "G", {"A"}, "rs123"), 0), "rs123"); }

TEST(VariantKey, SecondAlleleIndexing) {
    EXPECT_EQ(variant_key(record("X", 5, "AT", {"A", "ATT"}), 1), "X:5:AT>ATT");
}

TEST(VariantKey, OutOfRangeIndexThrows) {
    EXPECT_THROW(variant_key(record("X", 5, "AT", {"A"}), 1), std::out_of_range);
}

TEST(VariantKey, AccessionIndependent) {
    auto a = record("2", 7, "C", {"T"});
    auto b = a;
    a.accession = "SRR1";
    b.accession = "SRR2";
    EXPECT_EQ(variant_key(a, 0), variant_key(b, 0));
    EXPECT_EQ(variant_key(a, 0), variant_key(".", "2", 7, "C", "T"));
}

TEST(RefAllele, AcceptsOnlyAcgtn) {
    EXPECT_TRUE(is_valid_ref_allele("ACGTN"));
    EXPECT_FALSE(is_valid_ref_allele(""));
    EXPECT_FALSE(is_valid_ref_allele("acgt"));
    EXPECT_FALSE(is_valid_ref_allele("A-"));
}

TEST(ChromLess, NumericBeforeNamedAndNumericallyOrdered) {
    EXPECT_TRUE(chrom_less("2", "10"));
    EXPECT_FALSE(chrom_less("10", "2"));
    EXPECT_TRUE(chrom_less("22", "X"));
    EXPECT_TRUE(chrom_less("X", "Y"));
    EXPECT_FALSE(chrom_less("X", "X"));
    EXPECT_TRUE(chrom_less("MT", "X"));
}

TEST(FormatReal, ShortestRoundTripFixedNotation) {
    EXPECT_EQ(format_real(0.900784), "0.900784");
    EXPECT_EQ(format_real(12.72), "12.72");
    EXPECT_EQ(format_real(-3.0), "-3");
    EXPECT_EQ(format_real(1e-7), "0.0000001");
    EXPECT_EQ(std::stod(format_real(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(VariantRecord, FindInfo) {
    VariantRecord r;
    r.info = {{"DP", "8", false}, {"DB", "", true}};
    ASSERT_NE(r.find_info("DB"), nullptr);
    EXPECT_TRUE(r.find_info("DB")->flag);
    EXPECT_EQ(r.find_info("DP")->value, "8");
    EXPECT_EQ(r.find_info("ANN"), nullptr);
}
