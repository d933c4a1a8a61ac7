#include <doctest.h>

#include <stdexcept>

#include "qbank/validate.hpp"

using namespace qbank;

namespace {

const validate::CheckResult& find(const std::vector<validate::CheckResult>& rs,
                                  const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("validation suite passes on a clean build") {
  const auto results = validate::run_all({});
  for (const auto& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
  CHECK(validate::all_passed(results));
}

TEST_CASE("a sign flip in U is caught by the closed-system equivalence check") {
  validate::Options opt;
  opt.inject_u_sign_flip = true;
  const auto results = validate::run_all(opt);
  CHECK_FALSE(find(results, "closed-system-equivalence").pass);
  CHECK_FALSE(validate::all_passed(results));
}

TEST_CASE("a far-too-coarse quadrature is caught by the convergence check") {
  validate::Options opt;
  opt.quad_refine = 2;
  const auto results = validate::run_all(opt);
  CHECK_FALSE(find(results, "quadrature-convergence").pass);
}
