#include "incpar/geomkit.hpp"

#include <gmpxx.h>

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace incpar::geomkit {

namespace {

// Static filter constants from Shewchuk's adaptive-precision predicates
// (stage A error bounds, eps = 2^-53).  They cover the rounding of the
// initial coordinate differences as well as the later products.
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBoundA = (10.0 + 96.0 * kEps) * kEps;

int sign_of(const mpq_class& q) { return sgn(q); }

int orient2d_exact(const Point2D& a, const Point2D& b, const Point2D& c) {
  const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const mpq_class det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return sign_of(det);
}

int incircle_exact(const Point2D& a, const Point2D& b, const Point2D& c,
                   const Point2D& d) {
  const mpq_class adx = mpq_class(a.x) - mpq_class(d.x);
  const mpq_class ady = mpq_class(a.y) - mpq_class(d.y);
  const mpq_class bdx = mpq_class(b.x) - mpq_class(d.x);
  const mpq_class bdy = mpq_class(b.y) - mpq_class(d.y);
  const mpq_class cdx = mpq_class(c.x) - mpq_class(d.x);
  const mpq_class cdy = mpq_class(c.y) - mpq_class(d.y);
  const mpq_class alift = adx * adx + ady * ady;
  const mpq_class blift = bdx * bdx + bdy * bdy;
  const mpq_class clift = cdx * cdx + cdy * cdy;
  const mpq_class det = alift * (bdx * cdy - cdx * bdy) +
                        blift * (cdx * ady - adx * cdy) +
                        clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

int diametral_exact(const Point2D& a, const Point2D& b, const Point2D& p) {
  const mpq_class d = (mpq_class(p.x) - mpq_class(a.x)) * (mpq_class(p.x) - mpq_class(b.x)) +
                      (mpq_class(p.y) - mpq_class(a.y)) * (mpq_class(p.y) - mpq_class(b.y));
  return sign_of(d);
}

}  // namespace

int orient2d(const Point2D& a, const Point2D& b, const Point2D& c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  const double detsum = std::fabs(detleft) + std::fabs(detright);
  if (std::fabs(det) > kCcwErrBoundA * detsum) return det > 0 ? 1 : -1;
  return orient2d_exact(a, b, c);
}

int incircle(const Point2D& a, const Point2D& b, const Point2D& c, const Point2D& d) {
  const int orient = orient2d(a, b, c);
  if (orient == 0) throw std::invalid_argument("incircle: collinear (a, b, c)");
  const Point2D& b2 = orient > 0 ? b : c;
  const Point2D& c2 = orient > 0 ? c : b;

  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b2.x - d.x, bdy = b2.y - d.y;
  const double cdx = c2.x - d.x, cdy = c2.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  if (std::fabs(det) > kIccErrBoundA * permanent) return det > 0 ? 1 : -1;
  return incircle_exact(a, b2, c2, d);
}

int diametral_side(const Point2D& a, const Point2D& b, const Point2D& p) {
  const double t1 = (p.x - a.x) * (p.x - b.x);
  const double t2 = (p.y - a.y) * (p.y - b.y);
  const double dot = t1 + t2;
  const double mag = std::fabs(t1) + std::fabs(t2);
  if (std::fabs(dot) > kCcwErrBoundA * mag) return dot > 0 ? 1 : -1;
  return diametral_exact(a, b, p);
}

std::optional<Disk> circumdisk(const Point2D& a, const Point2D& b, const Point2D& c) {
  if (orient2d(a, b, c) == 0) return std::nullopt;
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double bl = bx * bx + by * by;
  const double cl = cx * cx + cy * cy;
  const double d = 2.0 * (bx * cy - by * cx);
  const double ux = (cy * bl - by * cl) / d;
  const double uy = (bx * cl - cx * bl) / d;
  Disk disk;
  disk.cx = a.x + ux;
  disk.cy = a.y + uy;
  disk.radius = std::sqrt(ux * ux + uy * uy);
  return disk;
}

bool encroaches(const Point2D& a, const Point2D& b, const Point2D& c, const Point2D& p) {
  const int s = incircle(a, b, c, p);
  if (s != 0) return s > 0;
  return p.id > a.id && p.id > b.id && p.id > c.id;
}

std::vector<Point2D> parse_points(std::istream& in) {
  std::vector<Point2D> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    double x, y;
    if (!(ls >> x)) {
      std::string word;
      std::istringstream probe(line);
      if (!(probe >> word)) continue;  // blank line
      throw std::runtime_error("parse_points: malformed line " + std::to_string(lineno));
    }
    if (!(ls >> y))
      throw std::runtime_error("parse_points: malformed line " + std::to_string(lineno));
    std::string rest;
    if (ls >> rest)
      throw std::runtime_error("parse_points: trailing tokens on line " + std::to_string(lineno));
    if (!std::isfinite(x) || !std::isfinite(y))
      throw std::runtime_error("parse_points: non-finite coordinate on line " + std::to_string(lineno));
    pts.push_back(Point2D{x, y, static_cast<std::uint32_t>(pts.size())});
  }
  return pts;
}

}  // namespace incpar::geomkit
