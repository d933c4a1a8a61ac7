#include "qbank/csvio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qbank::csvio {

namespace {

// 15 significant digits, always scientific: "1.23456789012345e+00"
void append_value(std::string& out, double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 14);
  out.append(buf, res.ptr);
}

double parse_value(const std::string& cell) {
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
    throw IoError("bad CSV number: '" + cell + "'");
  return v;
}

}  // namespace

std::string render_qf_csv(const bank::QFSeries& s) {
  std::string out = qf_header;
  out += "\n";
  for (int i = 0; i < s.size(); ++i) {
    append_value(out, s.times[i]);
    for (const std::vector<double>* col :
         {&s.n1, &s.n2, &s.mu1, &s.mu2, &s.dmu1, &s.dmu2, &s.res1, &s.res2}) {
      out += ",";
      append_value(out, (*col)[i]);
    }
    out += "\n";
  }
  return out;
}

void write_qf_csv(const std::string& path, const bank::QFSeries& s) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << render_qf_csv(s);
  if (!f) throw IoError("write failed: " + path);
}

bank::QFSeries read_qf_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  std::string line;
  if (!std::getline(f, line) || line != qf_header)
    throw IoError("unexpected CSV header in " + path);
  bank::QFSeries s;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) row.push_back(parse_value(cell));
    if (row.size() != 9) throw IoError("expected 9 CSV columns in " + path);
    s.times.push_back(row[0]);
    s.n1.push_back(row[1]);
    s.n2.push_back(row[2]);
    s.mu1.push_back(row[3]);
    s.mu2.push_back(row[4]);
    s.dmu1.push_back(row[5]);
    s.dmu2.push_back(row[6]);
    s.res1.push_back(row[7]);
    s.res2.push_back(row[8]);
  }
  return s;
}

std::string render_sweep_csv(const std::vector<std::pair<double, double>>& rows) {
  std::string out = "value,metric\n";
  for (const auto& [v, m] : rows) {
    append_value(out, v);
    out += ",";
    append_value(out, m);
    out += "\n";
  }
  return out;
}

void write_sweep_csv(const std::string& path,
                     const std::vector<std::pair<double, double>>& rows) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << render_sweep_csv(rows);
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace qbank::csvio
