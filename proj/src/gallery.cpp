#include "logfan/gallery.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "logfan/error.hpp"

namespace logfan {

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

Vec v2(long x, long y) { return make_vec({x, y}); }

// e_lo + … + e_{hi−1}
Vec coordinate_sum(std::size_t n, std::size_t lo, std::size_t hi) {
  Vec v = zero_vec(n);
  for (std::size_t i = lo; i < hi; ++i) v[i] = 1;
  return v;
}

Cone cone_on(std::size_t n, const std::vector<Vec>& gens) { return Cone::from_generators(n, gens); }

std::string cone_list(const std::vector<Cone>& cones) {
  std::string s;
  for (const Cone& c : cones) s += (s.empty() ? "" : ", ") + c.str();
  return s;
}

// Maximal cones on one side only.
std::string fan_difference(const Fan& got, const Fan& want) {
  std::vector<Cone> extra, missing;
  std::set_difference(got.max_cones().begin(), got.max_cones().end(), want.max_cones().begin(),
                      want.max_cones().end(), std::back_inserter(extra));
  std::set_difference(want.max_cones().begin(), want.max_cones().end(), got.max_cones().begin(),
                      got.max_cones().end(), std::back_inserter(missing));
  std::string s;
  if (!extra.empty()) s += "unexpected " + cone_list(extra);
  if (!missing.empty()) s += std::string(s.empty() ? "" : "; ") + "missing " + cone_list(missing);
  return s.empty() ? "ambient ranks differ" : s;
}

class CheckList {
 public:
  explicit CheckList(GalleryCase& c) : case_(c) {}

  void expect(std::string name, bool ok, std::string diagnostic = {}) {
    case_.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(diagnostic)});
  }

  void equal(std::string name, const Fan& got, const Fan& want) {
    bool ok = got == want;
    expect(std::move(name), ok, ok ? std::string() : fan_difference(got, want));
  }

  void valid(const std::string& label, const Fan& f) {
    FanReport r = validate(f);
    expect(label + " is a fan", r.valid, r.str());
  }

  void complete(const std::string& label, const Fan& f) {
    expect(label + " is complete", is_complete(f), f.str() + " does not cover the ambient space");
  }

  void subdivision(const std::string& name, const IntMatrix& map, const Fan& source, const Fan& target) {
    if (!is_fan_map(map, source, target)) {
      expect(name, false, "not a fan map");
      return;
    }
    expect(name, subdivision_predicates(map, source, target).is_subdivision, "supports differ");
  }

  void log_modification(const std::string& name, const IntMatrix& map, const ToricLogPair& source,
                        const ToricLogPair& target) {
    if (!is_fan_map(map, source.fan(), target.fan())) {
      expect(name, false, "not a fan map");
      return;
    }
    expect(name, is_log_modification(map, source, target), "boundary rays or supports disagree");
  }

  // The pair built from the rays of `subfan` has `subfan` as its boundary.
  ToricLogPair pair(const std::string& label, const Fan& fan, const Fan& subfan) {
    const std::vector<Vec> rays = fan.rays();
    std::vector<Vec> boundary, stray;
    for (const Vec& r : subfan.rays())
      (std::binary_search(rays.begin(), rays.end(), r) ? boundary : stray).push_back(r);
    if (!stray.empty()) expect(label + "' lies in " + label, false, to_string(stray.front()) + " is not a ray");
    ToricLogPair p(fan, boundary);
    equal(label + "' is the boundary subfan of its rays", p.boundary_subfan(), subfan);
    case_.pairs.emplace_back(label, p);
    return p;
  }

 private:
  GalleryCase& case_;
};

void require_range(std::size_t x, std::size_t lo, std::size_t hi, const char* what) {
  if (x < lo || x > hi)
    throw PreconditionError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "], got " + std::to_string(x));
}

}  // namespace

bool GalleryCase::passed() const { return first_failure() == nullptr; }

const GalleryCheck* GalleryCase::first_failure() const {
  for (const GalleryCheck& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::string GalleryCase::report() const {
  std::size_t ok = 0;
  for (const GalleryCheck& c : checks) ok += c.passed;
  std::string s = (passed() ? "PASS " : "FAIL ") + name + " (" + std::to_string(ok) + "/" +
                  std::to_string(checks.size()) + " checks)";
  if (const GalleryCheck* f = first_failure()) s += "\n  first failure: " + f->name + ": " + f->diagnostic;
  for (const std::string& line : summary) s += "\n  " + line;
  return s;
}

// Plane blow-up ---------------------------------------------------------------

GalleryCase plane_blowup_case(bool mutate) {
  GalleryCase out;
  out.name = "plane-blowup";
  CheckList check(out);

  const Cone s1 = cone_on(2, {v2(1, 0), v2(1, 1)});
  const Cone s2 = cone_on(2, {v2(1, 1), v2(0, 1)});
  const Cone s3 = cone_on(2, {v2(0, 1), v2(-1, 0)});
  const Cone s4 = cone_on(2, {v2(-1, 0), v2(0, -1)});
  const Cone s5 = cone_on(2, {v2(0, -1), v2(1, 0)});
  const Cone s12 = cone_on(2, {v2(1, 0), v2(0, 1)});
  const Cone s23 = cone_on(2, {v2(1, 1), v2(-1, 0)});
  const Cone r01 = cone_on(2, {v2(0, 1)});
  const Cone r10 = cone_on(2, {v2(1, 0)});
  const Cone r11 = cone_on(2, {v2(1, 1)});
  const Cone rm10 = cone_on(2, {v2(-1, 0)});

  auto fan = [](std::vector<Cone> cones) { return Fan(2, std::move(cones)); };
  const std::vector<Fan> fans = {
      fan({s12, s3, s4, s5}),  fan({s1, s2, s3, s4, s5}), fan({s1, s23, s4, s5}), fan({s12}),
      fan({s1, s2}),           fan({s3, s4, s5}),         mutate ? fan({r01}) : fan({r01, r10}),
      fan({s2, s3}),           fan({s23}),                fan({s1, s4, s5}),  fan({r11, rm10}),
  };
  const std::vector<Fan> subfans = {
      fan({s3, s4}), fan({s2, s3, s4}), fan({s23, s4}), fan({r01}),       fan({s2}),        fan({s3, s4}),
      fan({r01}),    fan({s2, s3}),     fan({s23}),     fan({r11, s4}),   fan({r11, rm10}),
  };
  auto label = [](std::size_t i) { return "Σ" + std::to_string(i + 1); };

  std::vector<ToricLogPair> pairs;
  for (std::size_t i = 0; i < fans.size(); ++i) {
    out.fans.emplace_back(label(i), fans[i]);
    check.valid(label(i), fans[i]);
    pairs.push_back(check.pair(label(i), fans[i], subfans[i]));
  }

  // (whole, part a, part b, overlap), 1-based
  const std::array<std::array<int, 4>, 4> covers = {{{1, 4, 6, 7}, {2, 5, 6, 7}, {2, 8, 10, 11}, {3, 9, 10, 11}}};
  for (const auto& [w, a, b, o] : covers) {
    auto name = [&](const char* op, int x, int y) {
      return "Σ" + std::to_string(x) + " " + op + " Σ" + std::to_string(y);
    };
    check.equal(name("∪", a, b) + " = Σ" + std::to_string(w), fan_union(fans[a - 1], fans[b - 1]), fans[w - 1]);
    check.equal(name("∩", a, b) + " = Σ" + std::to_string(o), fan_intersection(fans[a - 1], fans[b - 1]),
                fans[o - 1]);
    check.equal(name("∪", a, b) + "' = Σ" + std::to_string(w) + "'",
                fan_union(pairs[a - 1].boundary_subfan(), pairs[b - 1].boundary_subfan()),
                pairs[w - 1].boundary_subfan());
    check.equal(name("∩", a, b) + "' = Σ" + std::to_string(o) + "'",
                fan_intersection(pairs[a - 1].boundary_subfan(), pairs[b - 1].boundary_subfan()),
                pairs[o - 1].boundary_subfan());
  }
  const IntMatrix id = IntMatrix::identity(2);
  check.subdivision("Σ2 subdivides Σ1", id, fans[1], fans[0]);
  check.subdivision("Σ2 subdivides Σ3", id, fans[1], fans[2]);
  return out;
}

// Pⁿ versus Pⁿ⁻¹ × P¹ -----------------------------------------------------------

GalleryCase projective_product_case(std::size_t n, const ProjectiveProductOptions& options) {
  require_range(n, 2, 4, "projective_product_case: n");
  GalleryCase out;
  out.name = "projective-product-" + std::to_string(n);
  CheckList check(out);

  std::vector<Vec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit(n, i));
  const Vec all = coordinate_sum(n, 0, n);
  const Vec minus_all = neg(all);
  const Vec minus_head = neg(coordinate_sum(n, 0, n - 1));
  const Vec minus_last = neg(e[n - 1]);
  // e_j for j < n−1, skipping `skip`
  auto head_except = [&](std::size_t skip) {
    std::vector<Vec> v;
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (j != skip) v.push_back(e[j]);
    return v;
  };
  auto with = [](std::vector<Vec> v, std::initializer_list<Vec> extra) {
    v.insert(v.end(), extra);
    return v;
  };
  const std::size_t none = n;

  const Cone tau = cone_on(n, with(head_except(none), {minus_all}));
  const Cone tau1 = cone_on(n, {e[n - 1], minus_all});
  const Cone tau2 = options.product_center.value_or(cone_on(n, {minus_last, minus_head}));

  std::vector<Cone> c1 = {cone_on(n, e), tau};
  for (std::size_t i = 0; i + 1 < n; ++i) c1.push_back(cone_on(n, with(head_except(i), {e[n - 1], minus_all})));
  const Fan sigma1(n, c1);

  const Cone sigma_1 = cone_on(n, e);
  const Cone sigma_5 = cone_on(n, options.mutate ? head_except(none) : with(head_except(none), {minus_last}));
  std::vector<Cone> c2 = {sigma_1, sigma_5}, c3 = {sigma_1, cone_on(n, with(head_except(none), {minus_last}))};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Cone s_i2 = cone_on(n, with(head_except(i), {e[n - 1], minus_head}));
    c2.push_back(s_i2);
    c2.push_back(cone_on(n, with(head_except(i), {minus_last, minus_head})));
    c3.push_back(s_i2);
    c3.push_back(cone_on(n, with(head_except(i), {minus_all, minus_head})));
    c3.push_back(cone_on(n, with(head_except(i), {minus_all, minus_last})));
  }
  const Fan sigma2(n, c2);
  const Fan listed3(n, c3);

  out.fans = {{"Σ1", sigma1}, {"Σ2", sigma2}, {"Σ3", listed3}};
  check.valid("Σ1", sigma1);
  check.valid("Σ2", sigma2);
  check.valid("Σ3", listed3);

  const Fan via_projective = star_subdivision(star_subdivision(sigma1, tau1), tau);
  const Fan via_product = star_subdivision(sigma2, tau2);
  check.equal("(Σ1*(τ'))*(τ) = Σ3", via_projective, listed3);
  check.equal("Σ2*(τ'') = Σ3", via_product, listed3);
  check.complete("Σ1", sigma1);
  check.complete("Σ2", sigma2);
  check.complete("Σ3", listed3);

  const Fan p1 = Fan::from_rays(1, {{make_vec({1})}, {make_vec({-1})}});
  Fan projective_head = Fan(0, {Cone(0)});
  {
    std::vector<Cone> cones;
    const std::size_t m = n - 1;
    const Vec back = neg(coordinate_sum(m, 0, m));
    for (std::size_t skip = 0; skip <= m; ++skip) {
      std::vector<Vec> gens;
      for (std::size_t j = 0; j < m; ++j)
        if (j != skip) gens.push_back(unit(m, j));
      if (skip < m) gens.push_back(back);
      cones.push_back(cone_on(m, gens));
    }
    projective_head = Fan(m, cones);
  }
  check.equal("Σ2 = fan(Pⁿ⁻¹) × fan(P¹)", product_fan(projective_head, p1), sigma2);

  const Fan sub1(n, {cone_on(n, {minus_all})});
  const Fan sub2(n, {tau2});
  const Fan sub3(n, {cone_on(n, {minus_all, minus_head}), cone_on(n, {minus_all, minus_last})});
  const ToricLogPair pair1 = check.pair("Σ1", sigma1, sub1);
  const ToricLogPair pair2 = check.pair("Σ2", sigma2, sub2);
  const ToricLogPair pair3 = check.pair("Σ3", listed3, sub3);

  const IntMatrix id = IntMatrix::identity(n);
  const ToricLogPair up_from_1 = admissible_blowup(admissible_blowup(pair1, tau1), tau);
  const ToricLogPair up_from_2 = admissible_blowup(pair2, tau2);
  check.expect("(Σ3,Σ3') is the blow-up of (Σ1,Σ1') at τ' then τ", up_from_1 == pair3, up_from_1.str());
  check.expect("(Σ3,Σ3') is the blow-up of (Σ2,Σ2') at τ''", up_from_2 == pair3, up_from_2.str());
  check.log_modification("(Σ3,Σ3') → (Σ2,Σ2') is a log modification", id, pair3, pair2);
  // Blowing up τ adds the boundary ray −e_n over a cone that meets the
  // boundary of Pⁿ only in a face.
  check.expect("(Σ3,Σ3') → (Σ1,Σ1') is not a log modification",
               is_fan_map(id, listed3, sigma1) && !is_log_modification(id, pair3, pair1),
               "the blow-up at τ became a log modification");
  return out;
}

// Deformation to the normal bundle ------------------------------------------------

GalleryCase point_deformation_case(std::size_t p, bool mutate) {
  require_range(p, 2, 4, "point_deformation_case: p");
  GalleryCase out;
  out.name = "point-deformation-" + std::to_string(p);
  CheckList check(out);

  std::vector<Vec> head;  // e_1, …, e_{p−1}
  for (std::size_t i = 0; i + 1 < p; ++i) head.push_back(unit(p, i));
  const Vec all = coordinate_sum(p, 0, p);
  const Vec head_sum = coordinate_sum(p, 0, p - 1);
  const Vec minus_all = neg(all);
  const Vec minus_last = neg(unit(p, p - 1));
  auto head_with = [&](const Vec& extra) {
    std::vector<Vec> v = head;
    v.push_back(extra);
    return cone_on(p, v);
  };

  const Cone tau = cone_on(p, head);
  const Cone s1 = head_with(all), s2 = head_with(minus_last), s3 = head_with(minus_all);
  const Fan f1(p, {s1, s2}), f2(p, {s1, s3});
  const Fan f3 = star_subdivision(f2, s3);
  const Fan f4 = star_subdivision(f1, tau);
  const Fan f5 = star_subdivision(f2, tau);
  const Fan f6 = star_subdivision(f3, tau);
  std::vector<Cone> eta;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    if (mutate && i == 0) continue;
    std::vector<Vec> gens;
    for (std::size_t j = 0; j + 1 < p; ++j)
      if (j != i) gens.push_back(head[j]);
    gens.push_back(minus_last);
    gens.push_back(minus_all);
    eta.push_back(cone_on(p, gens));
  }
  const Fan f7(p, eta);
  const std::vector<Fan> fans = {f1, f2, f3, f4, f5, f6, f7};

  const Fan sub3(p, {cone_on(p, {minus_last, minus_all})});
  const std::vector<Fan> subfans = {
      Fan(p, {cone_on(p, {minus_last})}),
      Fan(p, {cone_on(p, {minus_all})}),
      sub3,
      Fan(p, {cone_on(p, {head_sum, minus_last})}),
      Fan(p, {cone_on(p, {head_sum, minus_all})}),
      Fan(p, {cone_on(p, {head_sum, minus_last}), cone_on(p, {minus_last, minus_all})}),
      sub3,  // the chart reuses the boundary of Σ3
  };

  std::vector<ToricLogPair> pairs;
  for (std::size_t i = 0; i < fans.size(); ++i) {
    const std::string label = "Σ" + std::to_string(i + 1);
    out.fans.emplace_back(label, fans[i]);
    check.valid(label, fans[i]);
    pairs.push_back(check.pair(label, fans[i], subfans[i]));
  }

  // Star subdivisions recomputed as stellar subdivisions at the center ray.
  struct Star {
    const char* name;
    const Fan& base;
    const Cone& center;
    const Fan& result;
  };
  for (const Star& s : {Star{"Σ2*(σ3) = Σ3", f2, s3, f3}, Star{"Σ1*(τ) = Σ4", f1, tau, f4},
                        Star{"Σ2*(τ) = Σ5", f2, tau, f5}, Star{"Σ3*(τ) = Σ6", f3, tau, f6}}) {
    check.equal(s.name, stellar_subdivision(s.base, s.center.interior_point()), s.result);
    check.subdivision(std::string(s.name) + " subdivides its base", IntMatrix::identity(p), s.result, s.base);
  }

  check.equal("Σ1 ∪ Σ7 = Σ3", fan_union(f1, f7), f3);
  check.equal("Σ4 ∪ Σ7 = Σ6", fan_union(f4, f7), f6);
  check.equal("Σ1' ∪ Σ7' = Σ3'", fan_union(pairs[0].boundary_subfan(), pairs[6].boundary_subfan()),
              pairs[2].boundary_subfan());
  check.equal("Σ4' ∪ Σ7' = Σ6'", fan_union(pairs[3].boundary_subfan(), pairs[6].boundary_subfan()),
              pairs[5].boundary_subfan());
  check.equal("Σ1 ∩ Σ7 = Σ4 ∩ Σ7", fan_intersection(f1, f7), fan_intersection(f4, f7));

  const ToricLogPair blown3 = admissible_blowup(pairs[1], s3);
  check.expect("(Σ3,Σ3') is the blow-up of (Σ2,Σ2') at σ3", blown3 == pairs[2], blown3.str());
  const ToricLogPair blown6 = admissible_blowup(pairs[4], cone_on(p, {head_sum, minus_all}));
  check.expect("(Σ6,Σ6') is the blow-up of (Σ5,Σ5') at Cone(e_1+…+e_{p−1}, −e_1−…−e_p)", blown6 == pairs[5],
               blown6.str());
  return out;
}

// P¹-bundle over Pⁿ⁻¹ -------------------------------------------------------------

GalleryCase blowup_bundle_case(std::size_t n, const BlowupBundleOptions& options) {
  require_range(n, 2, 4, "blowup_bundle_case: n");
  GalleryCase out;
  out.name = "blowup-bundle-" + std::to_string(n);
  CheckList check(out);

  const Vec all = coordinate_sum(n, 0, n);
  std::vector<Cone> sigma, sigma_prime;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) gens.push_back(unit(n, j));
    gens.push_back(all);
    sigma.push_back(cone_on(n, gens));
    gens.back() = neg(all);
    sigma_prime.push_back(cone_on(n, gens));
  }
  std::vector<Cone> blown_cones = sigma;
  blown_cones.insert(blown_cones.end(), sigma_prime.begin(), sigma_prime.end());
  const Fan blown(n, blown_cones);

  const std::size_t m = n - 1;
  const Vec back = neg(coordinate_sum(m, 0, m));
  std::vector<Cone> tau;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) gens.push_back(unit(m, j));
    if (i < m) gens.push_back(back);
    tau.push_back(cone_on(m, gens));
  }
  const Fan base(m, tau);

  std::vector<Cone> projective_cones = {cone_on(n, [&] {
    std::vector<Vec> e;
    for (std::size_t j = 0; j < n; ++j) e.push_back(unit(n, j));
    return e;
  }())};
  for (std::size_t i = 0; i < n; ++i) projective_cones.push_back(sigma_prime[i]);
  const Fan projective(n, projective_cones);

  IntMatrix phi(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    phi(i, i) = 1;
    if (!options.mutate) phi(i, m) = -1;
  }
  if (options.bundle_map) phi = *options.bundle_map;

  out.fans = {{"blow-up", blown}, {"Pⁿ⁻¹", base}, {"Pⁿ", projective}};
  check.valid("blow-up", blown);
  check.valid("Pⁿ⁻¹", base);
  check.complete("blow-up", blown);
  check.complete("Pⁿ⁻¹", base);
  check.equal("blow-up = Pⁿ*(Cone(e_1,…,e_n))", star_subdivision(projective, projective_cones.front()), blown);
  check.expect("φ is a fan map", is_fan_map(phi, blown, base), "some cone of the blow-up maps across cones of Pⁿ⁻¹");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string k = std::to_string(i + 1);
    const Cone a = image(phi, sigma[i]), b = image(phi, sigma_prime[i]);
    check.expect("φ(σ_" + k + ") ⊆ τ_" + k, tau[i].contains(a), a.str() + " ⊄ " + tau[i].str());
    check.expect("φ(σ_" + k + "') ⊆ τ_" + k, tau[i].contains(b), b.str() + " ⊄ " + tau[i].str());
    const Cone hull = Cone::from_generators(m, [&] {
      std::vector<Vec> g = a.generators(), h = b.generators();
      g.insert(g.end(), h.begin(), h.end());
      return g;
    }());
    check.expect("φ(σ_" + k + " ∪ σ_" + k + "') = τ_" + k, hull == tau[i] && tau[i].contains(a) && tau[i].contains(b),
                 hull.str() + " ≠ " + tau[i].str());
  }
  return out;
}

// Triple bundle blow-ups -------------------------------------------------------------

bool is_admissible(BlockSet s) { return (s & 0x38u) != 0x18u; }

std::string block_set_name(BlockSet s) {
  std::string out;
  for (int t = 1; t <= 6; ++t)
    if (block_set_has(s, t)) out += static_cast<char>('0' + t);
  return out;
}

std::vector<std::size_t> block_coordinates(const BlockSizes& sizes, int t) {
  if (t < 0 || t > 6) throw PreconditionError("block_coordinates: block " + std::to_string(t) + " out of range");
  static constexpr std::array<std::array<bool, 3>, 7> parts = {{{false, false, false},
                                                                {true, false, false},
                                                                {false, true, false},
                                                                {false, false, true},
                                                                {true, true, false},
                                                                {false, true, true},
                                                                {true, true, true}}};
  std::vector<std::size_t> out;
  std::size_t offset = 0;
  for (std::size_t b = 0; b < 3; ++b) {
    if (parts[t][b])
      for (std::size_t i = 0; i < sizes[b]; ++i) out.push_back(offset + i);
    offset += sizes[b];
  }
  return out;
}

namespace {

std::size_t total_rank(const BlockSizes& sizes) { return sizes[0] + sizes[1] + sizes[2]; }

void require_triple_sizes(const BlockSizes& sizes) {
  for (std::size_t s : sizes)
    if (s == 0) throw PreconditionError("triple bundle: every block needs rank ≥ 1");
  if (total_rank(sizes) > 4) throw PreconditionError("triple bundle: total rank exceeds 4");
}

constexpr std::array<int, 4> kFirstChoices = {0, 1, 4, 6};
constexpr std::array<int, 5> kSecondChoices = {0, 2, 4, 5, 6};
constexpr std::array<int, 4> kThirdChoices = {0, 3, 5, 6};

// Each listed row is a product of choice sets.
struct ListedRow {
  std::vector<int> p, q, r;
};

}  // namespace

Vec block_sum(const BlockSizes& sizes, int t) {
  Vec v = zero_vec(total_rank(sizes));
  for (std::size_t i : block_coordinates(sizes, t)) v[i] = 1;
  return v;
}

std::vector<BlockTriple> block_triples() {
  std::vector<BlockTriple> out;
  for (int p : kFirstChoices)
    for (int q : kSecondChoices)
      for (int r : kThirdChoices) out.push_back({p, q, r});
  return out;
}

const std::vector<BlockTriple>& concise_triples() {
  static const std::vector<BlockTriple> triples = [] {
    const std::vector<ListedRow> rows = {
        {{0, 1}, {0, 2}, {0, 3}}, {{6}, {0, 2}, {0, 3}}, {{4}, {5}, {0, 3}},
        {{4}, {0, 2}, {0, 3}},    {{0, 1}, {6}, {0, 3}}, {{4}, {0, 2}, {5}},
        {{0, 1}, {4}, {0, 3}},    {{0, 1}, {0, 2}, {6}}, {{0, 1}, {4}, {5}},
        {{0, 1}, {5}, {0, 3}},    {{4}, {0, 2}, {6}},    {{0, 1}, {0, 2}, {5}},
        {{6}, {0, 2}, {5}},
    };
    std::set<BlockTriple> s;
    for (const ListedRow& row : rows)
      for (int p : row.p)
        for (int q : row.q)
          for (int r : row.r) s.insert({p, q, r});
    return std::vector<BlockTriple>(s.begin(), s.end());
  }();
  return triples;
}

bool is_concise(const BlockTriple& t) {
  const auto& c = concise_triples();
  return std::binary_search(c.begin(), c.end(), t);
}

bool has_both_middle_blocks(const BlockTriple& t) {
  auto has = [&](int x) { return std::find(t.begin(), t.end(), x) != t.end(); };
  return has(4) && has(5);
}

bool is_standard(const BlockTriple& t) { return is_concise(t) && !has_both_middle_blocks(t); }

Cone minimum_cone(const BlockSizes& sizes, const MinimumIndices& uvw, const BlockTriple& pqr) {
  const std::size_t n = total_rank(sizes);
  std::vector<Vec> ineq;
  for (std::size_t i = 0; i < n; ++i) ineq.push_back(unit(n, i));
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i : block_coordinates(sizes, pqr[k])) {
      if (i == uvw[k]) continue;
      Vec a = zero_vec(n);
      a[i] = 1;
      a[uvw[k]] = -1;
      ineq.push_back(std::move(a));
    }
  return Cone::from_inequalities(n, ineq);
}

std::vector<Vec> standard_generators(const BlockSizes& sizes, const MinimumIndices& uvw, const BlockTriple& pqr) {
  const std::size_t n = total_rank(sizes);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(uvw.begin(), uvw.end(), i) == uvw.end()) gens.push_back(unit(n, i));
  for (std::size_t k = 0; k < 3; ++k) gens.push_back(pqr[k] == 0 ? unit(n, uvw[k]) : block_sum(sizes, pqr[k]));
  return gens;
}

Fan block_blowup_fan(const BlockSizes& sizes, int t) {
  const std::size_t n = total_rank(sizes);
  std::vector<Vec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit(n, i));
  const Fan orthant(n, {cone_on(n, e)});
  std::vector<Vec> block;
  for (std::size_t i : block_coordinates(sizes, t)) block.push_back(e[i]);
  return star_subdivision(orthant, cone_on(n, block));
}

std::vector<Fan> block_blowup_fans(const BlockSizes& sizes, const std::optional<int>& drop_center) {
  require_triple_sizes(sizes);
  const std::size_t n = total_rank(sizes);
  std::vector<Vec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit(n, i));
  const Fan orthant(n, {cone_on(n, e)});
  const IntMatrix id = IntMatrix::identity(n);

  std::array<Fan, 7> single;
  for (int t = 1; t <= 6; ++t) single[t] = drop_center == t ? orthant : block_blowup_fan(sizes, t);

  std::vector<Fan> out(kAllBlocks + 1);
  out[0] = orthant;
  for (BlockSet s = 1; s <= kAllBlocks; ++s) {
    int top = 6;
    while (!block_set_has(s, top)) --top;
    const BlockSet rest = s & ~(1u << (top - 1));
    out[s] = rest == 0 ? single[top] : fiber_product(id, out[rest], id, single[top], orthant);
  }
  return out;
}

GalleryCase triple_bundle_case(const BlockSizes& sizes, bool mutate) {
  require_triple_sizes(sizes);
  const std::size_t n = total_rank(sizes);
  GalleryCase out;
  out.name = "triple-bundle-" + std::to_string(sizes[0]) + std::to_string(sizes[1]) + std::to_string(sizes[2]);
  CheckList check(out);

  // Full-dimensionality of every minimum cone against the listed triples.
  std::set<Cone> concise_cones, shape_cones;
  std::set<BlockTriple> full_triples;
  std::vector<std::string> unlisted, degenerate, generator_mismatch;
  const std::vector<std::size_t> b1 = block_coordinates(sizes, 1), b2 = block_coordinates(sizes, 2),
                                 b3 = block_coordinates(sizes, 3);
  struct Entry {
    MinimumIndices uvw;
    BlockTriple pqr;
    Cone cone;
  };
  std::vector<Entry> entries;
  for (std::size_t u : b1)
    for (std::size_t v : b2)
      for (std::size_t w : b3)
        for (const BlockTriple& t : block_triples()) entries.push_back({{u, v, w}, t, minimum_cone(sizes, {u, v, w}, t)});
  auto tag = [](const Entry& x) {
    return "u,v,w=" + std::to_string(x.uvw[0] + 1) + "," + std::to_string(x.uvw[1] + 1) + "," +
           std::to_string(x.uvw[2] + 1) + " p,q,r=" + std::to_string(x.pqr[0]) + "," + std::to_string(x.pqr[1]) +
           "," + std::to_string(x.pqr[2]);
  };
  for (const Entry& x : entries) {
    const bool full = x.cone.dim() == n;
    if (full) full_triples.insert(x.pqr);
    if (is_concise(x.pqr)) {
      concise_cones.insert(x.cone);
      if (!full) degenerate.push_back(tag(x));
    }
    // Full-dimensional triples avoiding {4,5}: the listed standard ones plus
    // the full-dimensional triples absent from the list.
    if (full && !has_both_middle_blocks(x.pqr)) {
      shape_cones.insert(x.cone);
      if (Cone::from_generators(n, standard_generators(sizes, x.uvw, x.pqr)) != x.cone)
        generator_mismatch.push_back(tag(x));
    }
  }
  for (const Entry& x : entries)
    if (x.cone.dim() == n && !is_concise(x.pqr) && !concise_cones.count(x.cone)) unlisted.push_back(tag(x));
  auto joined = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < 3; ++i) s += (i ? "; " : "") + v[i];
    if (v.size() > 3) s += "; and " + std::to_string(v.size() - 3) + " more";
    return s;
  };
  check.expect("every listed triple gives a full-dimensional cone", degenerate.empty(), joined(degenerate));
  check.expect("every full-dimensional cone is the cone of a listed triple", unlisted.empty(), joined(unlisted));
  check.expect("standard cones have the closed-form generators", generator_mismatch.empty(), joined(generator_mismatch));
  std::string missing;
  for (const BlockTriple& t : full_triples)
    if (!is_concise(t)) missing += " " + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
  if (!missing.empty()) out.summary.push_back("full-dimensional triples absent from the list:" + missing);

  const std::vector<Fan> fans = block_blowup_fans(sizes, mutate ? std::optional<int>(6) : std::nullopt);
  std::vector<std::string> nonstandard;
  for (BlockSet s = 0; s <= kAllBlocks; ++s) {
    if (!is_admissible(s)) continue;
    for (const Cone& c : fans[s].max_cones())
      if (c.dim() != n || !shape_cones.count(c)) nonstandard.push_back("Σ_{" + block_set_name(s) + "} " + c.str());
  }
  check.expect("maximal cones of admissible blow-ups have standard shape", nonstandard.empty(), joined(nonstandard));

  std::vector<std::string> star_failures;
  std::size_t star_checked = 0;
  for (BlockSet s = 0; s <= kAllBlocks; ++s) {
    if (!is_admissible(s)) continue;
    for (int t = 1; t <= 6; ++t) {
      const BlockSet grown = s | (1u << (t - 1));
      if (grown == s || !is_admissible(grown)) continue;
      ++star_checked;
      const Vec center = block_sum(sizes, t);
      std::optional<Cone> smallest;
      for (const Cone& c : fans[s].all_cones())
        if (c.contains(center) && (!smallest || c.dim() < smallest->dim())) smallest = c;
      Fan starred;
      try {
        starred = star_subdivision(fans[s], *smallest);
      } catch (const PreconditionError& err) {
        star_failures.push_back("Σ_{" + block_set_name(s) + "}: " + err.what());
        continue;
      }
      if (starred != fans[grown])
        star_failures.push_back("Σ_{" + block_set_name(grown) + "} vs Σ_{" + block_set_name(s) + "}*(" +
                                smallest->str() + "): " + fan_difference(fans[grown], starred));
    }
  }
  check.expect("adding a block is a star subdivision (" + std::to_string(star_checked) + " steps)",
               star_failures.empty(), star_failures.empty() ? std::string() : star_failures.front());

  for (int t = 1; t <= 6; ++t) {
    const std::string label = "Σ_" + std::to_string(t);
    out.fans.emplace_back(label, fans[1u << (t - 1)]);
  }
  for (BlockSet s : {BlockSet(0x3f), BlockSet(0x0b)}) {
    const Fan& f = fans[s];
    check.valid("Σ_{" + block_set_name(s) + "}", f);
  }
  return out;
}

// Grouping by open part --------------------------------------------------------------

std::vector<std::vector<int>> zero_blocks(bool mutate) {
  return {{}, {1}, {2}, {3}, mutate ? std::vector<int>{1} : std::vector<int>{1, 2}, {2, 3}, {1, 2, 3}};
}

std::vector<std::vector<int>> open_part_form(BlockSet s, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> members;
  for (int t = 1; t <= 6; ++t)
    if (block_set_has(s, t)) members.push_back(blocks[t]);
  std::vector<std::vector<int>> out;
  for (const auto& a : members) {
    bool minimal = std::none_of(members.begin(), members.end(), [&](const std::vector<int>& b) {
      return b != a && std::includes(a.begin(), a.end(), b.begin(), b.end());
    });
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<std::vector<BlockSet>>& listed_open_part_groups() {
  static const std::vector<std::vector<BlockSet>> groups = [] {
    const std::vector<std::vector<std::string>> names = {
        {""},
        {"1", "14", "16", "146"},
        {"2", "24", "25", "26", "246", "256", "2456"},
        {"3", "35", "36", "356"},
        {"4", "46"},
        {"5", "56"},
        {"6"},
        {"12", "124", "125", "126", "1246", "1256", "12456"},
        {"13", "134", "135", "136", "1346", "1356", "13456"},
        {"23", "234", "235", "236", "2346", "2356", "23456"},
        {"15", "156", "1456"},
        {"34", "346", "3456"},
        {"123", "1234", "1235", "1236", "12346", "12356", "123456"},
        {"456"},
    };
    std::vector<std::vector<BlockSet>> out;
    for (const auto& group : names) {
      std::vector<BlockSet> g;
      for (const std::string& name : group) {
        BlockSet s = 0;
        for (char c : name) s |= 1u << (c - '1');
        g.push_back(s);
      }
      std::sort(g.begin(), g.end());
      out.push_back(std::move(g));
    }
    return out;
  }();
  return groups;
}

GalleryCase triple_bundle_groups_case(bool mutate) {
  GalleryCase out;
  out.name = "triple-bundle-groups";
  CheckList check(out);
  const auto blocks = zero_blocks(mutate);

  std::map<std::vector<std::vector<int>>, std::vector<BlockSet>> by_form;
  std::size_t admissible = 0;
  for (BlockSet s = 0; s <= kAllBlocks; ++s)
    if (is_admissible(s)) {
      ++admissible;
      by_form[open_part_form(s, blocks)].push_back(s);
    }
  std::set<std::vector<BlockSet>> computed;
  for (auto& [form, members] : by_form) {
    std::sort(members.begin(), members.end());
    computed.insert(members);
  }

  const auto& listed = listed_open_part_groups();
  std::size_t matched = 0;
  std::string unmatched;
  for (const auto& g : listed) {
    if (computed.count(g)) {
      ++matched;
    } else if (unmatched.empty()) {
      unmatched = "listed group {";
      for (BlockSet s : g) unmatched += " T" + block_set_name(s);
      unmatched += " } is not a class";
    }
  }
  check.expect("56 admissible sets", admissible == 56, std::to_string(admissible) + " admissible sets");
  check.expect("14 classes", computed.size() == listed.size(), std::to_string(computed.size()) + " classes");
  check.expect("classes match the listed groups member for member", matched == listed.size() && computed.size() == listed.size(),
               unmatched);
  out.summary.push_back(std::to_string(matched) + "/" + std::to_string(listed.size()) + " groups");
  return out;
}

// Runner ---------------------------------------------------------------------------

std::vector<std::string> gallery_case_names() {
  return {"blowup-bundle-2",       "blowup-bundle-3",      "blowup-bundle-4",      "plane-blowup",
          "point-deformation-2",   "point-deformation-3",  "point-deformation-4",  "projective-product-2",
          "projective-product-3",  "projective-product-4", "triple-bundle-111",    "triple-bundle-112",
          "triple-bundle-121",     "triple-bundle-211",    "triple-bundle-groups"};
}

GalleryCase run_gallery_case(std::string_view name, bool mutate) {
  auto suffix = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (name.size() > prefix.size() && name.substr(0, prefix.size()) == prefix) return name.substr(prefix.size());
    return std::nullopt;
  };
  auto number = [&](std::string_view digits) -> std::size_t {
    if (digits.size() != 1 || digits[0] < '0' || digits[0] > '9')
      throw PreconditionError("gallery: unknown case " + std::string(name));
    return static_cast<std::size_t>(digits[0] - '0');
  };
  if (name == "plane-blowup") return plane_blowup_case(mutate);
  if (name == "triple-bundle-groups") return triple_bundle_groups_case(mutate);
  if (auto d = suffix("projective-product-")) return projective_product_case(number(*d), {mutate, std::nullopt});
  if (auto d = suffix("point-deformation-")) return point_deformation_case(number(*d), mutate);
  if (auto d = suffix("blowup-bundle-")) return blowup_bundle_case(number(*d), {mutate, std::nullopt});
  if (auto d = suffix("triple-bundle-"); d && d->size() == 3)
    return triple_bundle_case({number(d->substr(0, 1)), number(d->substr(1, 1)), number(d->substr(2, 1))}, mutate);
  throw PreconditionError("gallery: unknown case " + std::string(name));
}

std::vector<GalleryCase> run_gallery(const std::vector<std::string>& names, bool mutate) {
  std::vector<std::future<GalleryCase>> jobs;
  for (const std::string& name : names)
    jobs.push_back(std::async(std::launch::async, [name, mutate] { return run_gallery_case(name, mutate); }));
  std::vector<GalleryCase> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace logfan
