#include "kappachain/cli_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "kappachain/errors.hpp"

namespace kappachain {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view token) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw DomainError("not a finite real number: '" + std::string(token) + "'");
  }
  return value;
}

std::string xml_escape(std::string_view s) {
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

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ConvexChain ChainFile::to_chain() const {
  std::vector<double> rad = angles;
  if (unit == AngleUnit::degrees) {
    for (double& a : rad) a *= std::numbers::pi / 180.0;
  }
  return {lengths, std::move(rad)};
}

ChainFile parse_chain_file(std::string_view text) {
  ChainFile cfg;
  bool have_unit = false;
  bool have_lengths = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "chain file line " + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw DomainError(where + "expected key = value");
    const std::string_view k = trim(line.substr(0, eq));
    const std::string_view v = trim(line.substr(eq + 1));
    try {
      if (k == "unit") {
        if (v == "radians") {
          cfg.unit = AngleUnit::radians;
        } else if (v == "degrees") {
          cfg.unit = AngleUnit::degrees;
        } else {
          throw DomainError("unit must be radians or degrees");
        }
        have_unit = true;
      } else if (k == "lengths") {
        cfg.lengths = parse_real_list(v);
        have_lengths = true;
      } else if (k == "angles") {
        cfg.angles = parse_real_list(v);
      } else if (k == "curvature") {
        cfg.curvature = parse_real(v);
        if (*cfg.curvature < 0.0) throw DomainError("curvature must be nonnegative");
      } else {
        throw DomainError("unknown key '" + std::string(k) + "'");
      }
    } catch (const DomainError& e) {
      throw DomainError(where + e.what());
    }
  }
  if (!have_unit) throw DomainError("chain file must declare unit = radians|degrees");
  if (!have_lengths) throw DomainError("chain file must list lengths");
  if (cfg.angles.size() + 1 != cfg.lengths.size()) {
    throw DomainError("chain file needs n lengths and n-1 angles");
  }
  return cfg;
}

ChainFile load_chain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read chain file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_chain_file(buf.str());
}

std::string format_real(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& series) {
  os << "kappa,radius,endpoint_distance\n";
  for (const SweepPoint& p : series) {
    os << format_real(p.kappa) << ',';
    if (p.kappa > 0.0) os << format_real(1.0 / std::sqrt(p.kappa));
    os << ',';
    if (p.distance) os << format_real(*p.distance);
    os << '\n';
  }
}

void write_sweep_svg(std::ostream& os, const std::vector<SweepPoint>& series,
                     std::string_view title) {
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 400.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 50.0;

  std::vector<std::pair<double, double>> pts;
  for (const SweepPoint& p : series) {
    if (p.distance) pts.emplace_back(p.kappa, *p.distance);
  }
  std::sort(pts.begin(), pts.end());
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  if (!pts.empty()) {
    x0 = pts.front().first;
    x1 = pts.back().first;
    y0 = y1 = pts.front().second;
    for (const auto& [x, y] : pts) {
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (x1 - x0 <= 0.0) x1 = x0 + 1.0;
  if (y1 - y0 <= 0.0) {
    const double pad = std::max(1e-9, std::abs(y0) * 0.05);
    y0 -= pad;
    y1 += pad;
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
  auto sy = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * plot_h; };
  const double axis_y = kTop + plot_h;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "  <title>" << xml_escape(title) << "</title>\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "  <line x1=\"" << kLeft << "\" y1=\"" << axis_y << "\" x2=\"" << kLeft + plot_w
     << "\" y2=\"" << axis_y << "\" stroke=\"black\"/>\n"
     << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
     << axis_y << "\" stroke=\"black\"/>\n"
     << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << format_real(sx(pts[i].first), 8) << ',' << format_real(sy(pts[i].second), 8);
  }
  os << "\"/>\n"
     << "  <text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
     << "\" text-anchor=\"middle\">kappa (1/radius^2)</text>\n"
     << "  <text x=\"18\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << kTop + plot_h / 2 << ")\">endpoint distance</text>\n"
     << "  <text x=\"" << kLeft << "\" y=\"" << axis_y + 16 << "\" text-anchor=\"middle\">"
     << format_real(x0, 4) << "</text>\n"
     << "  <text x=\"" << kLeft + plot_w << "\" y=\"" << axis_y + 16 << "\" text-anchor=\"middle\">"
     << format_real(x1, 4) << "</text>\n"
     << "  <text x=\"" << kLeft - 6 << "\" y=\"" << axis_y << "\" text-anchor=\"end\">"
     << format_real(y0, 5) << "</text>\n"
     << "  <text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 4 << "\" text-anchor=\"end\">"
     << format_real(y1, 5) << "</text>\n"
     << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\">" << xml_escape(title)
     << "</text>\n"
     << "</svg>\n";
}

}  // namespace kappachain
