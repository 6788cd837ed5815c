#include <algorithm>
#include <vector>

#include "doctest.h"
#include "fenchel/extended_real.hpp"

using fenchel::ExtendedReal;

TEST_CASE("extended real: total order with infinities") {
    const auto pinf = ExtendedReal::pos_inf();
    const auto ninf = ExtendedReal::neg_inf();
    CHECK(ninf < ExtendedReal(-1e300));
    CHECK(ExtendedReal(1e300) < pinf);
    CHECK(ExtendedReal(1.0) < ExtendedReal(2.0));
    CHECK(pinf == ExtendedReal::pos_inf());

    // sorting any sample set is consistent and stable under permutation
    std::vector<ExtendedReal> a{pinf, ExtendedReal(3.0), ninf, ExtendedReal(-0.5), ExtendedReal(3.0)};
    std::vector<ExtendedReal> b{ExtendedReal(3.0), ninf, ExtendedReal(3.0), pinf, ExtendedReal(-0.5)};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("extended real: saturating addition") {
    const auto pinf = ExtendedReal::pos_inf();
    const auto ninf = ExtendedReal::neg_inf();
    CHECK((ExtendedReal(5.0) + pinf).is_pos_inf());
    CHECK((ninf + ExtendedReal(5.0)).is_neg_inf());
    CHECK((ExtendedReal(2.0) + ExtendedReal(3.0)).finite_value() == 5.0);
    CHECK((pinf + pinf).is_pos_inf());
    CHECK_THROWS_AS(pinf + ninf, std::domain_error);
    CHECK_THROWS_AS(ninf - ninf, std::domain_error);
}

TEST_CASE("extended real: positive scaling preserves infinities") {
    CHECK(ExtendedReal::pos_inf().scaled_by(2.5).is_pos_inf());
    CHECK(ExtendedReal::neg_inf().scaled_by(0.5).is_neg_inf());
    CHECK(ExtendedReal(3.0).scaled_by(2.0).finite_value() == 6.0);
    CHECK_THROWS_AS(ExtendedReal(1.0).scaled_by(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ExtendedReal(1.0).scaled_by(-1.0), std::invalid_argument);
}

TEST_CASE("extended real: NaN is rejected") {
    CHECK_THROWS_AS(ExtendedReal(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(ExtendedReal::pos_inf().finite_value(), std::domain_error);
}
