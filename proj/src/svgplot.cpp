#include "qbank/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qbank/csvio.hpp"

namespace qbank::svgplot {

namespace {

constexpr double width = 820, height = 520;
constexpr double ml = 70, mr = 25, mt = 45, mb = 55;  // margins

std::string fmt(double v, int prec = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(prec);
  os << v;
  return os.str();
}

void polyline(std::ostringstream& os, const std::vector<double>& xs,
              const std::vector<double>& ys, double x0, double x1, double y0, double y1,
              const char* extra) {
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.3\" " << extra
     << " points=\"";
  const double px = (width - ml - mr) / (x1 - x0);
  const double py = (height - mt - mb) / (y1 - y0);
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << " ";
    os << fmt(ml + (xs[i] - x0) * px) << "," << fmt(height - mb - (ys[i] - y0) * py);
  }
  os << "\"/>\n";
}

}  // namespace

std::string render_qf_svg(const bank::QFSeries& s, const std::string& title) {
  const double x0 = s.times.front(), x1 = s.times.back();
  double y0 = 0.0, y1 = 1.0;
  for (const std::vector<double>* col : {&s.n1, &s.n2}) {
    y0 = std::min(y0, *std::min_element(col->begin(), col->end()));
    y1 = std::max(y1, *std::max_element(col->begin(), col->end()));
  }
  const double pad = 0.04 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
     << title << "</text>\n";

  // frame
  os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << width - ml - mr
     << "\" height=\"" << height - mt - mb
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // ticks
  const int nticks = 5;
  for (int i = 0; i <= nticks; ++i) {
    const double fx = ml + (width - ml - mr) * i / nticks;
    const double tx = x0 + (x1 - x0) * i / nticks;
    os << "<line x1=\"" << fmt(fx) << "\" y1=\"" << height - mb << "\" x2=\"" << fmt(fx)
       << "\" y2=\"" << height - mb + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(fx) << "\" y=\"" << height - mb + 20
       << "\" text-anchor=\"middle\" font-size=\"12\">" << fmt(tx) << "</text>\n";
    const double fy = height - mb - (height - mt - mb) * i / nticks;
    const double ty = y0 + (y1 - y0) * i / nticks;
    os << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt(fy) << "\" x2=\"" << ml << "\" y2=\""
       << fmt(fy) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << ml - 9 << "\" y=\"" << fmt(fy + 4)
       << "\" text-anchor=\"end\" font-size=\"12\">" << fmt(ty) << "</text>\n";
  }
  os << "<text x=\"" << width / 2 << "\" y=\"" << height - 14
     << "\" text-anchor=\"middle\" font-size=\"13\">t</text>\n";

  polyline(os, s.times, s.n1, x0, x1, y0, y1, "stroke-dasharray=\"2,4\"");
  polyline(os, s.times, s.n2, x0, x1, y0, y1, "");

  // legend: n1 dotted, n2 solid
  const double lx = width - mr - 150, ly = mt + 16;
  os << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 40 << "\" y2=\"" << ly
     << "\" stroke=\"black\" stroke-dasharray=\"2,4\"/>\n";
  os << "<text x=\"" << lx + 48 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">n1(t)</text>\n";
  os << "<line x1=\"" << lx << "\" y1=\"" << ly + 18 << "\" x2=\"" << lx + 40 << "\" y2=\""
     << ly + 18 << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << lx + 48 << "\" y=\"" << ly + 22
     << "\" font-size=\"12\">n2(t)</text>\n";
  os << "</svg>\n";
  return os.str();
}

void write_qf_svg(const std::string& path, const bank::QFSeries& s, const std::string& title) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw csvio::IoError("cannot open for writing: " + path);
  f << render_qf_svg(s, title);
  if (!f) throw csvio::IoError("write failed: " + path);
}

}  // namespace qbank::svgplot
