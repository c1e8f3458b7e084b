#include <algorithm>

#include "dforge/error.hpp"
#include "dforge/qe.hpp"

namespace dforge {

UnaryComponent UnaryComponent::at(AlgebraicNumber a) {
  UnaryComponent c;
  c.kind = Kind::Point;
  c.point = std::move(a);
  return c;
}

UnaryComponent UnaryComponent::between(std::optional<AlgebraicNumber> lo, std::optional<AlgebraicNumber> hi) {
  if (lo && hi && !(*lo < *hi)) throw Error(ErrorCode::InvalidArgument, "empty interval");
  UnaryComponent c;
  c.kind = Kind::Interval;
  c.lower = std::move(lo);
  c.upper = std::move(hi);
  return c;
}

bool UnaryComponent::contains(const AlgebraicNumber& a) const {
  if (kind == Kind::Point) return a == point;
  return (!lower || *lower < a) && (!upper || a < *upper);
}

namespace {

std::string point_text(const AlgebraicNumber& a) {
  if (a.is_rational()) return to_string(a.rational_value());
  return "poly=\"" + a.poly().to_string() + "\" in (" + to_string(a.lower()) + "," + to_string(a.upper()) + ")";
}

}  // namespace

std::string UnaryComponent::to_string() const {
  if (kind == Kind::Point) return "point " + point_text(point);
  return "interval (" + (lower ? lower->to_string() : std::string("-inf")) + "," +
         (upper ? upper->to_string() : std::string("+inf")) + ")";
}

UnarySetDescription::UnarySetDescription(std::vector<UnaryComponent> components)
    : components_(std::move(components)) {}

bool UnarySetDescription::contains(const AlgebraicNumber& a) const {
  return std::any_of(components_.begin(), components_.end(), [&](const UnaryComponent& c) { return c.contains(a); });
}

std::string UnarySetDescription::to_string() const {
  if (components_.empty()) return "empty";
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += '\n';
    out += c.to_string();
  }
  return out;
}

namespace {

void collect_polys(const Formula& f, std::vector<Poly>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    out.push_back(f.as_atom().poly);
    return;
  }
  for (const auto& c : f.children()) collect_polys(c, out);
}

}  // namespace

UnarySetDescription describe_unary(const PolyFormula& f) {
  if (f.free_count != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "describe needs exactly one free variable, got " + std::to_string(f.free_count));
  }
  const Formula m = eliminate(f).matrix;
  std::vector<Poly> polys;
  collect_polys(m, polys);
  std::vector<AlgebraicNumber> roots;
  for (const auto& p : polys) {
    if (p.is_constant()) continue;
    for (auto& r : real_roots(p.to_upoly(1))) {
      auto it = std::find(roots.begin(), roots.end(), r);
      if (it == roots.end()) {
        roots.push_back(std::move(r));
      } else if (r.poly().degree() < it->poly().degree()) {
        *it = std::move(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());

  // Cells: interval 0, point 1, interval 1, ..., point n, interval n.
  const std::size_t n = roots.size();
  std::vector<bool> open_in(n + 1), point_in(n);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational sample;
    if (n == 0) {
      sample = 0;
    } else if (i == 0) {
      sample = Rational(roots.front().floor() - 1);
    } else if (i == n) {
      sample = Rational(roots.back().floor() + 1);
    } else {
      sample = rational_between(roots[i - 1], roots[i]);
    }
    open_in[i] = holds_at(m, 1, sample);
    if (i < n) point_in[i] = holds_at(m, 1, roots[i]);
  }

  std::vector<UnaryComponent> out;
  std::size_t i = 0;
  while (i <= n) {
    if (open_in[i]) {
      std::optional<AlgebraicNumber> lo;
      if (i > 0) lo = roots[i - 1];
      std::size_t j = i;
      while (j < n && point_in[j] && open_in[j + 1]) ++j;
      std::optional<AlgebraicNumber> hi;
      if (j < n) hi = roots[j];
      out.push_back(UnaryComponent::between(lo, hi));
      i = j + 1;
      if (j < n && point_in[j]) out.push_back(UnaryComponent::at(roots[j]));
      continue;
    }
    if (i < n && point_in[i]) out.push_back(UnaryComponent::at(roots[i]));
    ++i;
  }
  // Points preceding an interval were emitted after the previous one; keep order.
  std::sort(out.begin(), out.end(), [](const UnaryComponent& a, const UnaryComponent& b) {
    const auto key = [](const UnaryComponent& c) -> std::optional<AlgebraicNumber> {
      return c.kind == UnaryComponent::Kind::Point ? std::optional<AlgebraicNumber>(c.point) : c.lower;
    };
    const auto ka = key(a);
    const auto kb = key(b);
    if (!ka || !kb) return !ka && kb.has_value();
    if (*ka != *kb) return *ka < *kb;
    return a.kind == UnaryComponent::Kind::Point && b.kind == UnaryComponent::Kind::Interval;
  });
  return UnarySetDescription(std::move(out));
}

std::optional<AlgebraicNumber> extract_singleton(const UnarySetDescription& d) {
  if (d.components().size() == 1 && d.components().front().kind == UnaryComponent::Kind::Point) {
    return d.components().front().point;
  }
  return std::nullopt;
}

}  // namespace dforge
