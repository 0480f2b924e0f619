#include "doctest.h"
#include "property_suites.hpp"

using namespace slfast::props;

namespace {

void check_suite(const SuiteResult& r, int expected_cases) {
  CHECK(r.cases == expected_cases);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("barycentric weights") { check_suite(barycentric_weights(11, 100000), 100000); }
TEST_CASE("values never increase") { check_suite(monotone_values(12, 200), 200); }
TEST_CASE("control filters partition the control set") {
  check_suite(control_filter_partition(13, 1000), 1000);
}
TEST_CASE("FIM bookkeeping") { check_suite(fim_bookkeeping(14, 200), 200); }
TEST_CASE("reference is idempotent") { check_suite(reference_idempotence(15, 200), 200); }
