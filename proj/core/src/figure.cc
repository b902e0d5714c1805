#include "vdsolve/figure.h"

#include <cstdio>
#include <sstream>
#include <vector>

namespace vds {
namespace {

constexpr int kWidth = 640;
constexpr int kLeft = 60;
constexpr int kRight = 600;
constexpr int kTop = 30;
constexpr int kAxis = 290;
constexpr int kBarRow = 22;

// Fixed two-decimal rendering keeps output identical across runs.
std::string Num(const Rational& q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", q.ToDouble());
  return buf;
}

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

class Canvas {
 public:
  Canvas(Rational y_lo, Rational y_hi) : y_lo_(y_lo), y_hi_(y_hi) {}

  Rational X(const Rational& s) const {
    return Rational(kLeft) + s * Rational(kRight - kLeft);
  }
  Rational Y(const Rational& y) const {
    return Rational(kAxis) -
           (y - y_lo_) / (y_hi_ - y_lo_) * Rational(kAxis - kTop);
  }

 private:
  Rational y_lo_;
  Rational y_hi_;
};

void DrawStep(std::ostringstream& out, const Canvas& c, const StepFunction& f,
              const std::string& style) {
  const auto& k = f.knots();
  const auto& kv = f.knot_values();
  const auto& gv = f.gap_values();
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    out << "  <line x1=\"" << Num(c.X(k[i])) << "\" y1=\"" << Num(c.Y(gv[i]))
        << "\" x2=\"" << Num(c.X(k[i + 1])) << "\" y2=\"" << Num(c.Y(gv[i]))
        << "\" " << style << "/>\n";
  }
  // Knot values off both neighbouring pieces show as points.
  for (std::size_t i = 0; i < k.size(); ++i) {
    const bool left = i > 0 && gv[i - 1] == kv[i];
    const bool right = i < gv.size() && gv[i] == kv[i];
    if (left || right) continue;
    out << "  <circle cx=\"" << Num(c.X(k[i])) << "\" cy=\"" << Num(c.Y(kv[i]))
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
}

}  // namespace

std::string RenderSvg(const GameSpec& game, const Equilibrium& eq) {
  const StepFunction v_minus = SkepticalValue(game);
  const ConcavePL hull = Cav(v_minus);
  const VerifStructure& m = game.structure();

  Rational y_lo(0);
  Rational y_hi(1);
  for (const StepFunction* f : {&game.payoff(), &v_minus}) {
    for (const auto* vals : {&f->knot_values(), &f->gap_values()}) {
      for (const Rational& y : *vals) {
        y_lo = Min(y_lo, y);
        y_hi = Max(y_hi, y);
      }
    }
  }
  const Canvas c(y_lo, y_hi);
  const std::size_t rows = m.messages().size() + (m.full_verifiability() ? 1 : 0);
  const int height = kAxis + 30 + static_cast<int>(rows) * kBarRow + 10;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << kWidth << " "
      << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "  <rect width=\"" << kWidth << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  // Axes and tick labels at 0 and 1.
  const std::string axis_y = Num(c.Y(Rational(0)));
  out << "  <line x1=\"" << kLeft << "\" y1=\"" << axis_y << "\" x2=\""
      << kRight << "\" y2=\"" << axis_y << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kAxis << "\" stroke=\"black\"/>\n";
  out << "  <text x=\"" << kLeft << "\" y=\"" << kAxis + 16
      << "\" text-anchor=\"middle\">0</text>\n";
  out << "  <text x=\"" << kRight << "\" y=\"" << kAxis + 16
      << "\" text-anchor=\"middle\">1</text>\n";
  out << "  <text x=\"" << kLeft - 8 << "\" y=\"" << Num(c.Y(y_hi))
      << "\" text-anchor=\"end\">" << y_hi.ToString() << "</text>\n";

  // Concavification first so the step curves sit on top.
  out << "  <polyline fill=\"none\" stroke=\"#999999\" stroke-width=\"2\" "
         "points=\"";
  for (std::size_t i = 0; i < hull.vertices().size(); ++i) {
    const Point& p = hull.vertices()[i];
    out << (i ? " " : "") << Num(c.X(p.x)) << "," << Num(c.Y(p.y));
  }
  out << "\"/>\n";
  DrawStep(out, c, v_minus,
           "stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
  DrawStep(out, c, game.payoff(), "stroke=\"black\" stroke-width=\"3\"");

  const std::string px = Num(c.X(game.prior()));
  out << "  <line x1=\"" << px << "\" y1=\"" << kTop << "\" x2=\"" << px
      << "\" y2=\"" << kAxis << "\" stroke=\"black\" stroke-dasharray=\"2 3\"/>\n";
  out << "  <text x=\"" << px << "\" y=\"" << kAxis + 16
      << "\" text-anchor=\"middle\">prior " << game.prior().ToString()
      << "</text>\n";

  for (const Rational& s : eq.signal.support) {
    out << "  <circle cx=\"" << Num(c.X(s)) << "\" cy=\"" << Num(c.Y(hull(s)))
        << "\" r=\"7\" fill=\"#999999\"/>\n";
  }

  int row_y = kAxis + 30;
  auto bar = [&](const std::string& label, const IntervalUnion& support) {
    out << "  <text x=\"" << kLeft - 8 << "\" y=\"" << row_y + 10
        << "\" text-anchor=\"end\">" << Escape(label) << "</text>\n";
    for (const Interval& iv : support.intervals()) {
      const Rational x0 = c.X(iv.lo);
      const Rational w = c.X(iv.hi) - x0;
      out << "  <rect x=\"" << Num(x0) << "\" y=\"" << row_y << "\" width=\""
          << Num(Max(w, Rational(2))) << "\" height=\"12\" fill=\"#cccccc\" "
          << "stroke=\"black\"/>\n";
    }
    row_y += kBarRow;
  };
  for (const Message& msg : m.messages()) bar(msg.name, msg.support);
  if (m.full_verifiability()) bar("identity", IntervalUnion::Unit());

  out << "</svg>\n";
  return out.str();
}

}  // namespace vds
