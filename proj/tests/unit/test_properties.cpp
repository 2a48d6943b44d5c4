#include <chrono>

#include "doctest.h"
#include "properties.hpp"

TEST_CASE("property suite") {
  for (const auto& p : props::suite()) {
    SUBCASE(p.name.c_str()) {
      const auto t0 = std::chrono::steady_clock::now();
      const double err = p.measure();
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      INFO(p.name << ": " << err << " (tol " << p.tol << ")");
      CHECK(err <= p.tol);
      CHECK(secs < 1.0);
    }
  }
}
