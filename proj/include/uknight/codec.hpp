#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "uknight/tour.hpp"

namespace uknight {

/// Schema tag written to and required from tour documents.
inline constexpr const char* kTourSchema = "uknight.tour/1";

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kSyntax,
    kUnknownSchema,
    kMalformedCell,
    kDimsMismatch,
    kRepeatedIndex,
    kMissingIndex,
  };

  ParseError(Kind kind, const std::string& what, std::int64_t entry = -1)
      : std::runtime_error(what), kind_(kind), entry_(entry) {}

  Kind kind() const { return kind_; }
  /// Offending visit index for kRepeatedIndex / kMissingIndex, else −1.
  std::int64_t entry() const { return entry_; }

 private:
  Kind kind_;
  std::int64_t entry_;
};

/// Raised by the renderers when handed a tour that fails verify().
class UnverifiedTour : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TourDocument {
  Tour tour;
  /// Free-form run metadata (seed, mode, generator, ...). Key order is kept.
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

/// Canonical JSON text: fixed key order, one cell triple per line, metadata
/// on a single line. decode_document(encode_document(d)) == d and
/// encode_document(decode_document(s)) == s for canonical s.
std::string encode_document(const TourDocument& doc);
TourDocument decode_document(const std::string& text);

/// Layer tables: a header line "box MxNxK open|closed", then one block per
/// z-layer labelled A, B, C, ... with rows y = 0.. and columns x = 0..;
/// visited cells hold their 0-based visit index, the rest ".".
std::string render_layers(const Tour& tour);
Tour parse_layers(const std::string& text);

/// Wavefront OBJ wireframe: one vertex per cell in visit order and one
/// two-vertex line element per move, the closing move included.
std::string export_polyline(const Tour& tour);

/// Layer-table label for layer z: A..Z, then AA, AB, ...
std::string layer_label(int z);

/// Reads either format, picking the document decoder when the first
/// non-space character is '{'.
TourDocument decode_any(const std::string& text);

}  // namespace uknight
