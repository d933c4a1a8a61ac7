#pragma once

#include <string>

#include "qbank/scenarios.hpp"

namespace qbank::configio {

/// Line-oriented sectioned key=value text, e.g.
///   [scenario] name=fig7-r1-left
///   [bank1] omega=1 lambda=0.5 Omega=0.1 N=0
///   [bank2] omega=2 lambda=0.5 Omega=0.1 N=1
///   [coupling] mu_acm=0 mu_cm=0
///   [initial] a00=0+0i a10=0+0i a01=0+0i a11=1+0i
///   [grid] t_max=10 points=1001
///   [tags] monotone-to-N
/// Complex literals are re+imi (or re-imi). A `[section]` tag may be followed
/// by pairs on the same line or on subsequent lines; `#` starts a comment.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v);           // shortest round-trip form
std::string format_complex(linalg::cplx v);    // re+imi
double parse_double(const std::string& text);  // throws ConfigError
linalg::cplx parse_complex(const std::string& text);

std::string dump(const scen::ScenarioSpec& spec);
scen::ScenarioSpec parse(const std::string& text);      // throws ConfigError
scen::ScenarioSpec load_file(const std::string& path);  // throws ConfigError

}  // namespace qbank::configio
