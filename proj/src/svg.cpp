#include "bcb/svg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace bcb {
namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

bool finite(const Eigen::Vector2d& p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

std::string tick_label(double v) {
  std::ostringstream ss;
  ss << std::setprecision(3) << v;
  return ss.str();
}

}  // namespace

std::string render_svg(const PlotSpec& spec, const std::vector<Series>& series, bool with_meta) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series)
    for (const auto& p : s.points)
      if (finite(p)) {
        x0 = std::min(x0, p.x());
        x1 = std::max(x1, p.x());
        y0 = std::min(y0, p.y());
        y1 = std::max(y1, p.y());
      }
  if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 == 0.0) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 == 0.0) y0 -= 0.5, y1 += 0.5;
  const double padx = 0.05 * (x1 - x0), pady = 0.05 * (y1 - y0);
  x0 -= padx, x1 += padx, y0 -= pady, y1 += pady;

  const double left = 70, right = 20, top = 40, bottom = 50;
  double pw = spec.width - left - right;
  double ph = spec.height - top - bottom;
  double sx = pw / (x1 - x0), sy = ph / (y1 - y0);
  if (spec.equal_aspect) {
    sx = sy = std::min(sx, sy);
    pw = sx * (x1 - x0);
    ph = sy * (y1 - y0);
  }
  auto X = [&](double x) { return left + (x - x0) * sx; };
  auto Y = [&](double y) { return top + ph - (y - y0) * sy; };

  std::ostringstream os;
  os << std::setprecision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
     << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
  if (with_meta) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    os << "<!-- generated " << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ") << " -->\n";
  }
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << spec.width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"15\">" << escape(spec.title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0, yv = y0 + (y1 - y0) * i / 4.0;
    os << "<text x=\"" << X(xv) << "\" y=\"" << top + ph + 16 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"11\">" << tick_label(xv) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << Y(yv) + 4 << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
       << "font-size=\"11\">" << tick_label(yv) << "</text>\n";
  }
  os << "<text x=\"" << left + pw / 2 << "\" y=\"" << top + ph + 38
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(spec.x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
     << "transform=\"rotate(-90 16 " << top + ph / 2 << ")\">" << escape(spec.y_label) << "</text>\n";

  for (const auto& s : series) {
    if (s.markers) {
      os << "<g fill=\"" << s.color << "\">\n";
      for (const auto& p : s.points)
        if (finite(p)) os << "<circle cx=\"" << X(p.x()) << "\" cy=\"" << Y(p.y()) << "\" r=\"1.2\"/>\n";
      os << "</g>\n";
      continue;
    }
    std::vector<std::string> runs;
    std::ostringstream run;
    run << std::setprecision(6);
    bool open = false;
    for (const auto& p : s.points) {
      if (!finite(p)) {
        if (open) runs.push_back(run.str());
        run.str("");
        open = false;
        continue;
      }
      run << (open ? " " : "") << X(p.x()) << ',' << Y(p.y());
      open = true;
    }
    if (open) runs.push_back(run.str());
    const char* tag = s.closed ? "polygon" : "polyline";
    for (const auto& r : runs)
      os << '<' << tag << " points=\"" << r << "\" fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"/>\n";
  }

  double ly = top + 14;
  for (const auto& s : series) {
    if (s.label.empty()) continue;
    os << "<rect x=\"" << left + pw - 150 << "\" y=\"" << ly - 9 << "\" width=\"10\" height=\"10\" fill=\"" << s.color
       << "\"/>\n";
    os << "<text x=\"" << left + pw - 135 << "\" y=\"" << ly << "\" font-family=\"sans-serif\" font-size=\"11\">"
       << escape(s.label) << "</text>\n";
    ly += 16;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bcb
