#pragma once

#include <string>

#include "qbank/bankmodel.hpp"

namespace qbank::csvio {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* qf_header = "t,n1,n2,mu1,mu2,dmu1,dmu2,res1,res2";

/// Renders the series with 15 significant digits per value (scientific,
/// locale-independent); repeated calls on the same series are byte-identical.
std::string render_qf_csv(const bank::QFSeries& s);

void write_qf_csv(const std::string& path, const bank::QFSeries& s);  // throws IoError
bank::QFSeries read_qf_csv(const std::string& path);                  // throws IoError

std::string render_sweep_csv(const std::vector<std::pair<double, double>>& rows);
void write_sweep_csv(const std::string& path,
                     const std::vector<std::pair<double, double>>& rows);

}  // namespace qbank::csvio
