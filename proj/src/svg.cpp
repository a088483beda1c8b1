#include "su11/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "su11/errors.hpp"

namespace su11 {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
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

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finalize() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (lo == hi) {
      const double pad = std::max(1.0, std::abs(lo)) * 0.05;
      lo -= pad;
      hi += pad;
    } else {
      const double pad = (hi - lo) * 0.05;
      lo -= pad;
      hi += pad;
    }
  }
};

double nice_step(double range, double target_ticks) {
  const double raw = range / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double factor = 10.0;
  if (norm < 1.5)
    factor = 1.0;
  else if (norm < 3.5)
    factor = 2.0;
  else if (norm < 7.5)
    factor = 5.0;
  return factor * mag;
}

constexpr double kWidth = 800.0, kHeight = 520.0;
constexpr double kLeft = 72.0, kRight = 24.0, kTop = 44.0, kBottom = 58.0;

}  // namespace

void render_svg_plot(std::ostream& os, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series) {
  Range xr, yr;
  for (const auto& s : series) {
    if (s.y.size() != s.x.size())
      throw SizeError("plot series '" + s.label + "' has mismatched x/y");
    if (!s.yerr.empty() && s.yerr.size() != s.y.size())
      throw SizeError("plot series '" + s.label + "' has mismatched yerr");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xr.include(s.x[i]);
      const double e = s.yerr.empty() ? 0.0 : s.yerr[i];
      yr.include(s.y[i] - e);
      yr.include(s.y[i] + e);
    }
  }
  xr.finalize();
  yr.finalize();

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double x) {
    return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw;
  };
  const auto py = [&](double y) {
    return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph;
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Frame and ticks.
  os << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
     << num(pw) << "\" height=\"" << num(ph)
     << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  const double xstep = nice_step(xr.hi - xr.lo, 6.0);
  for (double t = std::ceil(xr.lo / xstep) * xstep; t <= xr.hi + 1e-12 * xstep;
       t += xstep) {
    const double gx = px(t);
    os << "<line x1=\"" << num(gx) << "\" y1=\"" << num(kTop) << "\" x2=\""
       << num(gx) << "\" y2=\"" << num(kTop + ph)
       << "\" stroke=\"#ddd\" stroke-width=\"0.7\"/>\n";
    os << "<text x=\"" << num(gx) << "\" y=\"" << num(kTop + ph + 18)
       << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333\">"
       << tick_label(t) << "</text>\n";
  }
  const double ystep = nice_step(yr.hi - yr.lo, 6.0);
  for (double t = std::ceil(yr.lo / ystep) * ystep; t <= yr.hi + 1e-12 * ystep;
       t += ystep) {
    const double gy = py(t);
    os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(gy) << "\" x2=\""
       << num(kLeft + pw) << "\" y2=\"" << num(gy)
       << "\" stroke=\"#ddd\" stroke-width=\"0.7\"/>\n";
    os << "<text x=\"" << num(kLeft - 7) << "\" y=\"" << num(gy + 4)
       << "\" font-size=\"12\" text-anchor=\"end\" fill=\"#333\">"
       << tick_label(t) << "</text>\n";
  }

  for (const auto& s : series) {
    if (s.line) {
      bool open = false;
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        const bool finite = std::isfinite(s.x[i]) && std::isfinite(s.y[i]);
        if (finite && !open) {
          os << "<polyline fill=\"none\" stroke=\"" << s.color
             << "\" stroke-width=\"1.6\" points=\"";
          open = true;
        }
        if (finite) {
          os << num(px(s.x[i])) << ',' << num(py(s.y[i])) << ' ';
        } else if (open) {
          os << "\"/>\n";
          open = false;
        }
      }
      if (open) os << "\"/>\n";
    } else {
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
        const double cx = px(s.x[i]);
        if (!s.yerr.empty() && std::isfinite(s.yerr[i]) && s.yerr[i] > 0.0) {
          os << "<line x1=\"" << num(cx) << "\" y1=\""
             << num(py(s.y[i] - s.yerr[i])) << "\" x2=\"" << num(cx)
             << "\" y2=\"" << num(py(s.y[i] + s.yerr[i])) << "\" stroke=\""
             << s.color << "\" stroke-width=\"1\"/>\n";
        }
        os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(py(s.y[i]))
           << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
      }
    }
  }

  // Legend, title, axis labels.
  double ly = kTop + 16.0;
  for (const auto& s : series) {
    const double lx = kLeft + pw - 170.0;
    if (s.line) {
      os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
         << num(lx + 26) << "\" y2=\"" << num(ly - 4) << "\" stroke=\""
         << s.color << "\" stroke-width=\"1.6\"/>\n";
    } else {
      os << "<circle cx=\"" << num(lx + 13) << "\" cy=\"" << num(ly - 4)
         << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
    }
    os << "<text x=\"" << num(lx + 32) << "\" y=\"" << num(ly)
       << "\" font-size=\"12\" fill=\"#333\">" << xml_escape(s.label)
       << "</text>\n";
    ly += 18.0;
  }
  os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kTop - 14)
     << "\" font-size=\"15\" text-anchor=\"middle\" fill=\"#111\">"
     << xml_escape(title) << "</text>\n";
  os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\""
     << num(kHeight - 14.0)
     << "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111\">"
     << xml_escape(x_label) << "</text>\n";
  os << "<text x=\"18\" y=\"" << num(kTop + ph / 2)
     << "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111\" "
        "transform=\"rotate(-90 18 "
     << num(kTop + ph / 2) << ")\">" << xml_escape(y_label) << "</text>\n";
  os << "</svg>\n";
}

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  render_svg_plot(os, title, x_label, y_label, series);
  os.flush();
  if (!os) throw IoError("write to '" + path + "' failed");
}

}  // namespace su11
