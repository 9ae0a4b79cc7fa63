#include "logfan/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "logfan/document.hpp"
#include "logfan/gallery.hpp"
#include "logfan/kato.hpp"

namespace logfan {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Vec parse_ray(const std::string& text) {
  Vec v;
  for (const std::string& part : split(text, ',')) {
    std::string t = part;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t.empty() || t.find_first_not_of("+-0123456789") != std::string::npos || t.find_first_of("0123456789") == std::string::npos)
      throw PreconditionError("'" + text + "' is not a list of integers");
    if (t[0] == '+') t.erase(0, 1);
    v.push_back(Int(t));
  }
  return v;
}

// Tokens may each hold several ';'-separated rays.
std::vector<Vec> parse_rays(const std::vector<std::string>& tokens) {
  std::vector<Vec> out;
  for (const std::string& tok : tokens)
    for (const std::string& part : split(tok, ';'))
      if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_ray(part));
  return out;
}

void require_rank(const std::vector<Vec>& rays, std::size_t rank, const std::string& what) {
  for (const Vec& r : rays)
    if (r.size() != rank)
      throw DimensionError(what + " " + to_string(r) + " has " + std::to_string(r.size()) + " coordinates, expected " +
                           std::to_string(rank));
}

// The given rays span a cone of the fan, or a single vector is the center of one.
Cone resolve_center(const Fan& fan, const std::vector<Vec>& given) {
  require_rank(given, fan.ambient_rank(), "center");
  if (given.empty()) throw PreconditionError("--center: no rays given");
  const std::vector<Vec> rays = fan.rays();
  bool all_rays = true;
  for (const Vec& g : given) all_rays = all_rays && std::binary_search(rays.begin(), rays.end(), primitive(g));
  if (all_rays) return Cone::from_generators(fan.ambient_rank(), given);
  if (given.size() == 1) {
    std::optional<Cone> smallest;
    for (const Cone& c : fan.all_cones())
      if (!c.is_zero() && c.contains(given[0]) && (!smallest || c.dim() < smallest->dim())) smallest = c;
    if (smallest && primitive(smallest->interior_point()) == primitive(given[0])) return *smallest;
  }
  throw PreconditionError("--center: " + to_string(given.front()) + (given.size() > 1 ? ", …" : "") +
                          " names no cone of the fan");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_check(const std::string& path, std::ostream& out) {
  const FanDocument doc = read_document(path);
  const Fan fan = doc.fan();
  const FanReport report = validate(fan);
  out << "fan: " << (report.valid ? "valid" : "invalid") << "\n";
  if (!report.valid) {
    for (const FanViolation& v : report.violations)
      out << "  overlap: " << v.first.str() << " and " << v.second.str() << " meet in " << v.intersection.str()
          << "\n";
    return kExitCheckFailed;
  }
  out << "complete: " << yes_no(is_complete(fan)) << "\n";
  out << "smooth: " << yes_no(is_smooth(fan)) << "\n";
  if (doc.boundary_rays) {
    try {
      const ToricLogPair p = doc.pair();
      out << "pair: valid, " << p.boundary_rays().size() << " boundary rays\n";
    } catch (const PreconditionError& e) {
      out << "pair: invalid: " << e.what() << "\n";
      return kExitCheckFailed;
    }
  }
  return kExitOk;
}

int run_strata(const std::string& path, std::ostream& out) {
  const ToricLogPair p = read_document(path).pair();
  const std::vector<std::size_t> counts = boundary_strata_counts(p);
  for (std::size_t a = 0; a < counts.size(); ++a) out << "stratum " << a + 1 << ": " << counts[a] << "\n";
  return kExitOk;
}

int run_hom(const std::string& src, const std::string& dst, const std::string& matrix, long characteristic,
            std::ostream& out) {
  const std::vector<Vec> rows = parse_rays({matrix});
  if (rows.empty()) throw PreconditionError("--matrix: empty matrix");
  const std::size_t cols = rows.front().size();
  require_rank(rows, cols, "matrix row");
  const std::vector<Vec> src_gens = parse_rays({src}), dst_gens = parse_rays({dst});
  require_rank(src_gens, cols, "source generator");
  require_rank(dst_gens, rows.size(), "target generator");
  IntMatrix m = IntMatrix::from_rows(rows, cols);
  const MonoidHom theta(AffineMonoid(cols, src_gens), AffineMonoid(rows.size(), dst_gens), m);
  const CharParam ch(characteristic);
  const ChartSmoothness s = chart_smoothness(theta, ch);
  out << "kummer: " << yes_no(is_kummer(theta)) << "\n";
  out << "exact: " << yes_no(is_exact(theta)) << "\n";
  out << "log smooth: " << yes_no(s.log_smooth) << "\n";
  out << "log etale: " << yes_no(s.log_etale) << "\n";
  out << "omega1 rank: " << omega1_rank(theta) << "\n";
  return kExitOk;
}

int run_gallery_command(const std::string& name, bool mutate, std::ostream& out) {
  const std::vector<std::string> names = name.empty() ? gallery_case_names() : std::vector<std::string>{name};
  std::size_t passed = 0;
  for (const GalleryCase& c : run_gallery(names, mutate)) {
    out << c.report() << "\n";
    passed += c.passed();
  }
  out << passed << "/" << names.size() << " cases passed\n";
  return passed == names.size() ? kExitOk : kExitCheckFailed;
}

int run_render(const std::string& path, const std::string& output, std::ostream& out) {
  const std::string svg = render_svg(read_document(path));
  if (output.empty() || output == "-") {
    out << svg;
    return kExitOk;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw PreconditionError(output + ": cannot write");
  file << svg;
  return kExitOk;
}

std::size_t refinement_depth() {
  const char* env = std::getenv("LOGFAN_DEPTH");
  if (!env || !*env) return kDefaultRefinementDepth;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
    throw PreconditionError("LOGFAN_DEPTH must be a small non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

int run_refine(const std::string& path, const std::string& goal_path, std::ostream& out, std::ostream& err) {
  const FanDocument doc = read_document(path);
  const Fan goal = read_document(goal_path).fan();
  const std::size_t depth = refinement_depth();
  const std::optional<std::vector<Cone>> centers = search_refinement(doc.fan(), goal, depth);
  if (!centers) {
    err << "no refinement found within depth " << depth << "\n";
    return kExitCheckFailed;
  }
  Fan f = doc.fan();
  for (const Cone& c : *centers) {
    err << "center: " << c.str() << "\n";
    f = star_subdivision(f, c);
  }
  out << serialize(FanDocument::from_fan(f, doc.name));
  return kExitOk;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fans, toric log pairs and monoid charts with exact arithmetic", "logfan"};
  app.require_subcommand(1);

  std::string file, goal, output, name, src, dst, matrix;
  std::vector<std::string> center;
  long characteristic = 0;
  bool star = false, mutate = false;

  auto* check = app.add_subcommand("check", "Validate a fan document");
  check->add_option("file", file, "Fan document")->required();

  auto* subdivide = app.add_subcommand("subdivide", "Star subdivision of a fan document");
  subdivide->add_flag("--star", star, "Star subdivision at the cone spanned by --center")->required();
  subdivide->add_option("file", file, "Fan document")->required();
  subdivide->add_option("--center", center, "Rays of the center cone, or its center vector")->required();

  auto* blowup = app.add_subcommand("blowup", "Admissible blow-up of a pair document");
  blowup->add_option("file", file, "Pair document")->required();
  blowup->add_option("--center", center, "Rays of the center cone, or its center vector")->required();

  auto* strata = app.add_subcommand("strata", "Boundary strata counts of a pair document");
  strata->add_option("file", file, "Pair document")->required();

  auto* hom = app.add_subcommand("hom", "Kummer, exactness and chart smoothness of a monoid map");
  hom->add_option("--src", src, "Source generators, e.g. '1,0;0,1'")->required();
  hom->add_option("--dst", dst, "Target generators")->required();
  hom->add_option("--matrix", matrix, "Matrix rows, e.g. '2,0;0,1'")->required();
  hom->add_option("--char", characteristic, "Characteristic: 0 or a prime");

  auto* gallery = app.add_subcommand("gallery", "Run the verification gallery");
  gallery->add_option("name", name, "Run one case");
  gallery->add_flag("--mutate", mutate, "Apply each case's documented mutation");

  auto* render = app.add_subcommand("render", "Draw a rank-2 fan document as SVG");
  render->add_option("file", file, "Fan document")->required();
  render->add_option("-o,--output", output, "Output path (default: stdout)");

  auto* refine = app.add_subcommand("refine", "Search star subdivisions refining a goal fan");
  refine->add_option("file", file, "Fan document")->required();
  refine->add_option("--goal", goal, "Goal fan document")->required();

  std::vector<std::string> argv_store = {"logfan"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "logfan: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(file, out);
    if (subdivide->parsed()) {
      const FanDocument doc = read_document(file);
      const Fan fan = doc.fan();
      FanDocument result = FanDocument::from_fan(star_subdivision(fan, resolve_center(fan, parse_rays(center))), doc.name);
      result.boundary_rays = doc.boundary_rays;
      out << serialize(result);
      return kExitOk;
    }
    if (blowup->parsed()) {
      const FanDocument doc = read_document(file);
      const ToricLogPair p = doc.pair();
      out << serialize(FanDocument::from_pair(admissible_blowup(p, resolve_center(p.fan(), parse_rays(center))), doc.name));
      return kExitOk;
    }
    if (strata->parsed()) return run_strata(file, out);
    if (hom->parsed()) return run_hom(src, dst, matrix, characteristic, out);
    if (gallery->parsed()) return run_gallery_command(name, mutate, out);
    if (render->parsed()) return run_render(file, output, out);
    if (refine->parsed()) return run_refine(file, goal, out, err);
  } catch (const Error& e) {
    err << "logfan: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "logfan: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace logfan
