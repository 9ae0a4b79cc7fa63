#include "logfan/document.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

namespace logfan {

namespace {

using nlohmann::json;

const std::set<std::string> kKeys = {"name", "rank", "max_cones", "boundary_rays"};

// Integers beyond 64 bits reach the SAX interface as floats; keep their
// digits, tagged as binary since JSON text cannot produce that type.
class ExactParser : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using json_sax_dom_parser::json_sax_dom_parser;

  bool number_float(double val, const std::string& text) {
    if (text.find_first_of(".eE") != std::string::npos) return json_sax_dom_parser::number_float(val, text);
    json::binary_t digits(std::vector<std::uint8_t>(text.begin(), text.end()));
    return json_sax_dom_parser::binary(digits);
  }
};

Int to_int(const json& v, const std::string& field) {
  if (v.is_binary()) return Int(std::string(v.get_binary().begin(), v.get_binary().end()));
  if (v.is_number_unsigned()) return Int(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Int(std::to_string(v.get<std::int64_t>()));
  throw DocumentError(field + ": expected an integer, got " + std::string(v.type_name()) +
                      (v.is_number_float() ? " (floats are not accepted)" : ""));
}

Vec to_ray(const json& v, std::size_t rank, const std::string& field) {
  if (!v.is_array()) throw DocumentError(field + ": expected a list of integers");
  if (v.size() != rank)
    throw DocumentError(field + ": expected " + std::to_string(rank) + " coordinates, got " + std::to_string(v.size()));
  Vec out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_int(v[i], field + "[" + std::to_string(i) + "]"));
  if (is_zero(out)) throw DocumentError(field + ": zero ray");
  return out;
}

std::vector<Vec> to_rays(const json& v, std::size_t rank, const std::string& field) {
  if (!v.is_array()) throw DocumentError(field + ": expected a list of rays");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_ray(v[i], rank, field + "[" + std::to_string(i) + "]"));
  return out;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

std::string ray_text(const Vec& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + r[i].get_str();
  return s + "]";
}

std::string rays_text(const std::vector<Vec>& rays) {
  std::string s = "[";
  for (std::size_t i = 0; i < rays.size(); ++i) s += (i ? ", " : "") + ray_text(rays[i]);
  return s + "]";
}

std::string xml_escape(const std::string& s) {
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

Fan FanDocument::fan() const {
  std::vector<Cone> cones;
  for (const auto& rays : max_cones) cones.push_back(Cone::from_generators(rank, rays));
  return Fan(rank, std::move(cones));
}

ToricLogPair FanDocument::pair() const {
  if (!boundary_rays) throw PreconditionError("document has no boundary_rays");
  std::vector<Vec> boundary;
  for (const Vec& r : *boundary_rays) boundary.push_back(primitive(r));
  return ToricLogPair(fan(), std::move(boundary));
}

FanDocument FanDocument::from_fan(const Fan& fan, std::optional<std::string> name) {
  FanDocument doc;
  doc.name = std::move(name);
  doc.rank = fan.ambient_rank();
  for (const Cone& c : fan.max_cones()) doc.max_cones.push_back(c.rays());
  return doc;
}

FanDocument FanDocument::from_pair(const ToricLogPair& pair, std::optional<std::string> name) {
  FanDocument doc = from_fan(pair.fan(), std::move(name));
  doc.boundary_rays = pair.boundary_rays();
  return doc;
}

FanDocument parse_document(std::string_view text) {
  json j;
  try {
    ExactParser handler(j);
    json::sax_parse(text.begin(), text.end(), &handler);
  } catch (const json::parse_error& e) {
    throw DocumentError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                        ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw DocumentError("document: expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!kKeys.count(key)) throw DocumentError(key + ": unknown field");

  FanDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw DocumentError("name: expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("rank")) throw DocumentError("rank: missing field");
  const Int rank = to_int(j["rank"], "rank");
  if (rank < 0 || rank > 64) throw DocumentError("rank: must lie in [0, 64]");
  doc.rank = rank.get_ui();
  if (!j.contains("max_cones")) throw DocumentError("max_cones: missing field");
  const json& cones = j["max_cones"];
  if (!cones.is_array()) throw DocumentError("max_cones: expected a list of cones");
  for (std::size_t i = 0; i < cones.size(); ++i)
    doc.max_cones.push_back(to_rays(cones[i], doc.rank, "max_cones[" + std::to_string(i) + "]"));
  if (j.contains("boundary_rays")) doc.boundary_rays = to_rays(j["boundary_rays"], doc.rank, "boundary_rays");
  return doc;
}

FanDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

std::string serialize(const FanDocument& doc) {
  std::string s = "{\n";
  if (doc.name) s += "  \"name\": " + json(*doc.name).dump() + ",\n";
  s += "  \"rank\": " + std::to_string(doc.rank) + ",\n";
  if (doc.max_cones.empty()) {
    s += "  \"max_cones\": []";
  } else {
    s += "  \"max_cones\": [\n";
    for (std::size_t i = 0; i < doc.max_cones.size(); ++i)
      s += "    " + rays_text(doc.max_cones[i]) + (i + 1 < doc.max_cones.size() ? ",\n" : "\n");
    s += "  ]";
  }
  if (doc.boundary_rays) s += ",\n  \"boundary_rays\": " + rays_text(*doc.boundary_rays);
  return s + "\n}\n";
}

std::string render_svg(const FanDocument& doc) {
  if (doc.rank != 2) throw PreconditionError("render: only rank-2 fans can be drawn, got rank " + std::to_string(doc.rank));
  constexpr double kCenter = 200, kRadius = 180;
  const Fan fan = doc.fan();
  std::set<Vec> boundary;
  std::vector<Cone> boundary_cones;
  if (doc.boundary_rays) {
    for (const Vec& r : *doc.boundary_rays) boundary.insert(primitive(r));
    for (const Cone& c : fan.cones_of_dim(2))
      if (std::all_of(c.rays().begin(), c.rays().end(), [&](const Vec& r) { return boundary.count(r) > 0; }))
        boundary_cones.push_back(c);
  }

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  auto point = [&](const Vec& r) {
    const double x = r[0].get_d(), y = r[1].get_d(), len = std::hypot(x, y);
    std::ostringstream p;
    p << std::fixed << std::setprecision(2) << kCenter + kRadius * x / len << "," << kCenter - kRadius * y / len;
    return p.str();
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:fan=\"urn:logfan:fan\" version=\"1.1\" width=\"400\" height=\"400\""
      << " viewBox=\"0 0 400 400\">\n";
  if (doc.name) out << "  <title>" << xml_escape(*doc.name) << "</title>\n";
  out << "  <g fill=\"#cccccc\" stroke=\"#000000\">\n";
  for (const Cone& c : fan.cones_of_dim(2)) {
    Vec a = c.rays()[0], b = c.rays()[1];
    if (a[0] * b[1] - a[1] * b[0] < 0) std::swap(a, b);
    const bool thick = std::find(boundary_cones.begin(), boundary_cones.end(), c) != boundary_cones.end();
    // Counterclockwise in the lattice is sweep-flag 0 once y points down.
    out << "    <path fan:cone=\"" << to_string(a) << " " << to_string(b) << "\" stroke-width=\"" << (thick ? 4 : 1)
        << "\" d=\"M " << kCenter << "," << kCenter << " L " << point(a) << " A " << kRadius << "," << kRadius
        << " 0 0 0 " << point(b) << " Z\"/>\n";
  }
  out << "  </g>\n  <g stroke=\"#000000\" stroke-linecap=\"round\">\n";
  for (const Vec& r : fan.rays()) {
    const std::string end = point(r);
    const std::string x2 = end.substr(0, end.find(',')), y2 = end.substr(end.find(',') + 1);
    std::string coords = r[0].get_str() + "," + r[1].get_str();
    out << "    <line fan:ray=\"" << coords << "\" stroke-width=\"" << (boundary.count(r) ? 4 : 1) << "\" x1=\""
        << kCenter << "\" y1=\"" << kCenter << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
  }
  out << "  </g>\n  <circle cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\"3\" fill=\"#000000\"/>\n</svg>\n";
  return out.str();
}

}  // namespace logfan
