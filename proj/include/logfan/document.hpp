#pragma once

// On-disk fan descriptions and their SVG drawings.
//
// A document is a JSON object with the keys "name" (optional string),
// "rank", "max_cones" (a list of ray lists) and "boundary_rays" (optional).
// Only integers are accepted as coordinates. serialize() writes the fixed
// layout below, so serialize(parse(text)) == text for files in that layout:
//
//   {
//     "name": "orthant",
//     "rank": 2,
//     "max_cones": [
//       [[1, 0], [0, 1]]
//     ],
//     "boundary_rays": [[1, 0]]
//   }

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logfan/error.hpp"
#include "logfan/logpair.hpp"

namespace logfan {

/// Malformed document. The message names the line (syntax errors) or the
/// offending field (schema errors).
class DocumentError : public Error {
 public:
  using Error::Error;
};

struct FanDocument {
  std::optional<std::string> name;
  std::size_t rank = 0;
  std::vector<std::vector<Vec>> max_cones;   // as written, not canonicalized
  std::optional<std::vector<Vec>> boundary_rays;

  Fan fan() const;
  /// Requires boundary_rays.
  ToricLogPair pair() const;

  static FanDocument from_fan(const Fan& fan, std::optional<std::string> name = std::nullopt);
  static FanDocument from_pair(const ToricLogPair& pair, std::optional<std::string> name = std::nullopt);

  friend bool operator==(const FanDocument&, const FanDocument&) = default;
};

FanDocument parse_document(std::string_view text);
FanDocument read_document(const std::string& path);
std::string serialize(const FanDocument& doc);

/// SVG 1.1 drawing of a rank-2 document. Rays are clipped to a fixed radius;
/// each ray line carries fan:ray="x,y"; boundary rays and boundary 2-cones
/// are stroked with width 4, others with width 1; 2-cones are filled grey.
std::string render_svg(const FanDocument& doc);

}  // namespace logfan
