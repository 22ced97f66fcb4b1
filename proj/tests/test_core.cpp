#include <doctest.h>
#include "crosstopo/arrangement.hpp"
TEST_CASE("smoke") { CHECK(crosstopo::parse_rat("1/2") == crosstopo::rat(1,2)); }
