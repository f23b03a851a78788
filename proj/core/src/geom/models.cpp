#include "g2cert/geom/models.hpp"

#include <cctype>

#include "g2cert/error.hpp"

namespace g2cert::models {

namespace {

const std::vector<std::string> kYZ = {"Y1", "Y2", "Y3", "Z1", "Z2"};

RationalMapDescriptor cremona(const VarietyDescriptor& from, const VarietyDescriptor& to, const std::string& name) {
  const PolyRing& r = from.ring();
  return RationalMapDescriptor(name, from, to,
                               std::vector<MultiPoly>{r.parse("Y2*Y3*Z1*Z2"), r.parse("Y1*Y3*Z1*Z2"),
                                                      r.parse("Y1*Y2*Z1*Z2"), r.parse("Y1*Y2*Y3*Z2"),
                                                      r.parse("Y1*Y2*Y3*Z1")});
}

}  // namespace

PolyRing quadric_ring(const Field& k) { return PolyRing(k, {"X1", "X2", "X3", "X4", "X5", "X6", "X7"}); }

MultiPoly quadric_equation(const PolyRing& ring) { return ring.parse("X1*X7 + X2*X6 + X3*X5 + X4^2"); }

VarietyDescriptor quadric(const Field& k) {
  const PolyRing r = quadric_ring(k);
  return VarietyDescriptor("Q", AmbientKind::projective, r, {quadric_equation(r)});
}

VarietyDescriptor quadric_chart(const Field& k) {
  const PolyRing r(k, {"x1", "x2", "x3", "x5", "x6", "x7"});
  return VarietyDescriptor("Q_aff", AmbientKind::affine, r, {r.parse("x1*x7 + x2*x6 + x3*x5 + 1")});
}

IntMatrix chart_weights() { return int_matrix({{1, 0, 1, -1, 0, -1}, {0, 1, -1, 1, -1, 0}}); }

VarietyDescriptor lambda1(const Field& k) {
  const PolyRing r(k, {"y1", "y2", "y3", "z1", "z2"});
  return VarietyDescriptor("Lambda1", AmbientKind::affine, r,
                           {r.parse("y1 + y2 + y3 + 1"), r.parse("y1*y2*y3 - z1*z2")});
}

VarietyDescriptor lambda2(const Field& k) {
  const PolyRing r(k, {"Y1", "Y2", "Y3", "Z0", "Z1", "Z2"});
  return VarietyDescriptor("Lambda2", AmbientKind::projective, r,
                           {r.parse("Y1 + Y2 + Y3 + Z0"), r.parse("Y1*Y2*Y3 - Z1*Z2*Z0")});
}

VarietyDescriptor lambda3(const Field& k) {
  const PolyRing r(k, kYZ);
  return VarietyDescriptor("Lambda3", AmbientKind::projective, r, {r.parse("Y1*Y2*Y3 + (Y1 + Y2 + Y3)*Z1*Z2")});
}

VarietyDescriptor lambda4(const Field& k) {
  const PolyRing r(k, kYZ);
  return VarietyDescriptor("Lambda4", AmbientKind::projective, r, {r.parse("Z1*Z2 + Y2*Y3 + Y1*Y3 + Y1*Y2")});
}

RationalMapDescriptor lambda1_to_lambda2() {
  const auto a = lambda1();
  const PolyRing& r = a.ring();
  return RationalMapDescriptor("closure", a, lambda2(),
                               std::vector<MultiPoly>{r.var("y1"), r.var("y2"), r.var("y3"), r.one(), r.var("z1"),
                                                      r.var("z2")});
}

RationalMapDescriptor lambda2_to_lambda1() {
  const auto a = lambda2();
  const PolyRing& r = a.ring();
  const RationalFunction z0(r.var("Z0"));
  std::vector<RationalFunction> c;
  for (const char* v : {"Y1", "Y2", "Y3", "Z1", "Z2"}) c.push_back(RationalFunction(r.var(v)) / z0);
  return RationalMapDescriptor("dehomogenize", a, lambda1(), std::move(c));
}

RationalMapDescriptor lambda2_to_lambda3() {
  const auto a = lambda2();
  const PolyRing& r = a.ring();
  return RationalMapDescriptor("eliminate-Z0", a, lambda3(),
                               std::vector<MultiPoly>{r.var("Y1"), r.var("Y2"), r.var("Y3"), r.var("Z1"), r.var("Z2")});
}

RationalMapDescriptor lambda3_to_lambda2() {
  const auto a = lambda3();
  const PolyRing& r = a.ring();
  return RationalMapDescriptor("restore-Z0", a, lambda2(),
                               std::vector<MultiPoly>{r.var("Y1"), r.var("Y2"), r.var("Y3"), r.parse("-Y1 - Y2 - Y3"),
                                                      r.var("Z1"), r.var("Z2")});
}

RationalMapDescriptor cremona_3_to_4() { return cremona(lambda3(), lambda4(), "cremona-3-4"); }

RationalMapDescriptor cremona_4_to_3() { return cremona(lambda4(), lambda3(), "cremona-4-3"); }

RationalMapDescriptor quotient_map() {
  const auto chart = quadric_chart();
  const PolyRing& r = chart.ring();
  return RationalMapDescriptor("quotient", chart, lambda1(),
                               std::vector<MultiPoly>{r.parse("x1*x7"), r.parse("x2*x6"), r.parse("x3*x5"),
                                                      r.parse("x1*x5*x6"), r.parse("x2*x3*x7")});
}

QuotientData quotient_data() {
  const auto chart = quadric_chart();
  const PolyRing& r = chart.ring();
  const PolyRing inv(r.field(), {"y1", "y2", "y3", "z1", "z2"});
  std::vector<std::string> mixed_names = r.names();
  for (const auto& n : inv.names()) mixed_names.push_back(n);
  const PolyRing mixed(r.field(), mixed_names);
  auto frac = [&](const char* n, const char* d) { return RationalFunction(mixed.parse(n), mixed.parse(d)); };
  QuotientData q{chart,
                 inv.names(),
                 {RationalFunction(r.parse("x1*x7")), RationalFunction(r.parse("x2*x6")),
                  RationalFunction(r.parse("x3*x5")), RationalFunction(r.parse("x1*x5*x6")),
                  RationalFunction(r.parse("x2*x3*x7"))},
                 chart_weights(),
                 {inv.parse("y1 + y2 + y3 + 1"), inv.parse("y1*y2*y3 - z1*z2")},
                 {{"x7", frac("y1", "x1")},
                  {"x6", frac("y2", "x2")},
                  {"x5", frac("z1*x2", "x1*y2")},
                  {"x3", frac("y3*x1*y2", "z1*x2")}}};
  return q;
}

MonomialAction model_action(const VarietyDescriptor& model, const std::array<std::size_t, 3>& y_perm, bool swap_z,
                            const std::string& label) {
  const PolyRing& r = model.ring();
  std::vector<std::size_t> perm(r.nvars());
  auto find = [&](char letter, int index) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < r.nvars(); ++i) {
      const std::string& n = r.names()[i];
      if (n.size() == 2 && std::tolower(static_cast<unsigned char>(n[0])) == letter && n[1] - '0' == index) return i;
    }
    return std::nullopt;
  };
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    perm[i] = i;
    const std::string& n = r.names()[i];
    if (n.size() != 2) continue;
    const char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(n[0])));
    const int index = n[1] - '0';
    if (letter == 'y' && index >= 1 && index <= 3) {
      const auto target = find('y', static_cast<int>(y_perm[static_cast<std::size_t>(index - 1)]) + 1);
      if (!target) throw PreconditionError(model.name() + ": missing y coordinate");
      perm[i] = *target;
    } else if (letter == 'z' && swap_z && (index == 1 || index == 2)) {
      const auto target = find('z', 3 - index);
      if (!target) throw PreconditionError(model.name() + ": missing z coordinate");
      perm[i] = *target;
    }
  }
  return MonomialAction::permutation(label, r, std::move(perm));
}

}  // namespace g2cert::models
