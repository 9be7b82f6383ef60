#include "uknight/codec.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace uknight {
namespace {

using Json = nlohmann::ordered_json;

void require_verified(const Tour& tour) {
  const auto report = verify(tour);
  if (!report.ok) {
    std::string what = "tour failed verification:";
    for (const auto& v : report.violations) what += " " + v.to_string();
    throw UnverifiedTour(what);
  }
}

int to_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) {
    throw ParseError(ParseError::Kind::kMalformedCell, what + " must be an integer");
  }
  const auto v = j.get<std::int64_t>();
  if (v < -kMaxExtent || v > kMaxExtent) {
    throw ParseError(ParseError::Kind::kMalformedCell, what + " is out of range");
  }
  return static_cast<int>(v);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

}  // namespace

std::string encode_document(const TourDocument& doc) {
  const auto& t = doc.tour;
  std::ostringstream os;
  os << "{\n"
     << "  \"schema\": \"" << kTourSchema << "\",\n"
     << "  \"box\": [" << t.box.nx() << ", " << t.box.ny() << ", " << t.box.nz() << "],\n"
     << "  \"closed\": " << (t.closed ? "true" : "false") << ",\n";
  if (t.cells.empty()) {
    os << "  \"cells\": []";
  } else {
    os << "  \"cells\": [\n";
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
      const Cell c = t.cells[i];
      os << "    [" << c.x << ", " << c.y << ", " << c.z << "]"
         << (i + 1 < t.cells.size() ? ",\n" : "\n");
    }
    os << "  ]";
  }
  if (!doc.metadata.empty()) os << ",\n  \"metadata\": " << doc.metadata.dump();
  os << "\n}\n";
  return os.str();
}

TourDocument decode_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseError::Kind::kSyntax, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(ParseError::Kind::kSyntax, "document must be an object");
  if (!j.contains("schema") || !j["schema"].is_string()) {
    throw ParseError(ParseError::Kind::kUnknownSchema, "document has no schema tag");
  }
  if (j["schema"].get<std::string>() != kTourSchema) {
    throw ParseError(ParseError::Kind::kUnknownSchema,
                     "unknown schema '" + j["schema"].get<std::string>() + "'");
  }
  if (!j.contains("box") || !j["box"].is_array() || j["box"].size() != 3) {
    throw ParseError(ParseError::Kind::kSyntax, "box must be an array of three extents");
  }
  if (!j.contains("closed") || !j["closed"].is_boolean()) {
    throw ParseError(ParseError::Kind::kSyntax, "closed must be a boolean");
  }
  if (!j.contains("cells") || !j["cells"].is_array()) {
    throw ParseError(ParseError::Kind::kSyntax, "cells must be an array");
  }

  std::array<int, 3> dims{};
  for (std::size_t i = 0; i < 3; ++i) dims[i] = to_int(j["box"][i], "box extent");
  TourDocument doc{Tour{[&] {
                          try {
                            return Box(dims[0], dims[1], dims[2]);
                          } catch (const std::invalid_argument& e) {
                            throw ParseError(ParseError::Kind::kDimsMismatch, e.what());
                          }
                        }(),
                        {},
                        j["closed"].get<bool>()}};

  std::size_t i = 0;
  for (const auto& c : j["cells"]) {
    const std::string where = "cell " + std::to_string(i);
    if (!c.is_array() || c.size() != 3) {
      throw ParseError(ParseError::Kind::kMalformedCell, where + " must have three coordinates");
    }
    doc.tour.cells.push_back({to_int(c[0], where), to_int(c[1], where), to_int(c[2], where)});
    ++i;
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) {
      throw ParseError(ParseError::Kind::kSyntax, "metadata must be an object");
    }
    doc.metadata = j["metadata"];
  }
  return doc;
}

std::string layer_label(int z) {
  std::string label;
  int n = z + 1;
  while (n > 0) {
    --n;
    label.insert(label.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return label;
}

std::string render_layers(const Tour& tour) {
  require_verified(tour);
  const Box& box = tour.box;
  std::vector<std::int64_t> visit(static_cast<std::size_t>(box.volume()), -1);
  for (std::size_t i = 0; i < tour.cells.size(); ++i) {
    visit[static_cast<std::size_t>(box.index_of(tour.cells[i]))] = static_cast<std::int64_t>(i);
  }
  const std::size_t width =
      tour.cells.empty() ? 1 : std::to_string(tour.cells.size() - 1).size();

  std::ostringstream os;
  os << "box " << box.to_string() << " " << (tour.closed ? "closed" : "open") << "\n";
  for (int z = 0; z < box.nz(); ++z) {
    os << "\n" << layer_label(z) << "\n";
    for (int y = 0; y < box.ny(); ++y) {
      for (int x = 0; x < box.nx(); ++x) {
        const auto v = visit[static_cast<std::size_t>(box.index_of({x, y, z}))];
        std::string entry = v < 0 ? "." : std::to_string(v);
        if (x > 0) os << ' ';
        os << std::string(width - entry.size(), ' ') << entry;
      }
      os << "\n";
    }
  }
  return os.str();
}

Tour parse_layers(const std::string& text) {
  using Kind = ParseError::Kind;
  const auto lines = split_lines(text);
  std::size_t pos = 0;
  auto next_content = [&]() -> const std::string* {
    while (pos < lines.size() && blank(lines[pos])) ++pos;
    return pos < lines.size() ? &lines[pos++] : nullptr;
  };

  const std::string* header = next_content();
  if (header == nullptr) throw ParseError(Kind::kSyntax, "empty layer table");
  const auto head = tokens(*header);
  if (head.size() != 3 || head[0] != "box" || (head[2] != "open" && head[2] != "closed")) {
    throw ParseError(Kind::kSyntax, "expected header 'box MxNxK open|closed', got '" + *header + "'");
  }
  const Box box = [&] {
    try {
      return parse_box(head[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(Kind::kDimsMismatch, e.what());
    }
  }();
  if (box.volume() > (std::int64_t{1} << 24)) {
    throw ParseError(Kind::kDimsMismatch, "box " + box.to_string() + " is too large for a layer table");
  }

  std::map<std::int64_t, Cell> by_index;
  for (int z = 0; z < box.nz(); ++z) {
    const std::string* label = next_content();
    const std::string want = layer_label(z);
    if (label == nullptr) {
      throw ParseError(Kind::kDimsMismatch, "missing layer " + want);
    }
    if (tokens(*label) != std::vector<std::string>{want}) {
      throw ParseError(Kind::kDimsMismatch, "expected layer label " + want + ", got '" + *label + "'");
    }
    for (int y = 0; y < box.ny(); ++y) {
      if (pos >= lines.size() || blank(lines[pos])) {
        throw ParseError(Kind::kDimsMismatch, "layer " + want + " has fewer than " +
                                                  std::to_string(box.ny()) + " rows");
      }
      const auto row = tokens(lines[pos++]);
      if (row.size() != static_cast<std::size_t>(box.nx())) {
        throw ParseError(Kind::kDimsMismatch, "layer " + want + " row " + std::to_string(y) +
                                                  " has " + std::to_string(row.size()) +
                                                  " entries, expected " + std::to_string(box.nx()));
      }
      for (int x = 0; x < box.nx(); ++x) {
        const std::string& tok = row[static_cast<std::size_t>(x)];
        if (tok == ".") continue;
        if (tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) {
              return c >= '0' && c <= '9';
            })) {
          throw ParseError(Kind::kSyntax, "bad entry '" + tok + "' in layer " + want);
        }
        const std::int64_t idx = std::stoll(tok);
        if (!by_index.emplace(idx, Cell{x, y, z}).second) {
          throw ParseError(Kind::kRepeatedIndex, "RepeatedIndex(" + std::to_string(idx) + ")", idx);
        }
      }
    }
    if (pos < lines.size() && !blank(lines[pos])) {
      throw ParseError(Kind::kDimsMismatch, "layer " + want + " has more than " +
                                                std::to_string(box.ny()) + " rows");
    }
  }
  if (next_content() != nullptr) {
    throw ParseError(Kind::kDimsMismatch, "more layers than the box has (" +
                                              std::to_string(box.nz()) + ")");
  }

  Tour tour{box, {}, head[2] == "closed"};
  std::int64_t expect = 0;
  for (const auto& [idx, cell] : by_index) {
    if (idx != expect) {
      throw ParseError(Kind::kMissingIndex, "MissingIndex(" + std::to_string(expect) + ")", expect);
    }
    tour.cells.push_back(cell);
    ++expect;
  }
  return tour;
}

std::string export_polyline(const Tour& tour) {
  require_verified(tour);
  std::ostringstream os;
  os << "# uknight tour " << tour.box.to_string() << " " << (tour.closed ? "closed" : "open")
     << " length " << tour.length() << "\n"
     << "o tour\n";
  for (const Cell& c : tour.cells) os << "v " << c.x << " " << c.y << " " << c.z << "\n";
  const auto n = tour.cells.size();
  for (std::size_t i = 0; i + 1 < n; ++i) os << "l " << i + 1 << " " << i + 2 << "\n";
  if (tour.closed && n >= 2) os << "l " << n << " 1\n";
  return os.str();
}

TourDocument decode_any(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return decode_document(text);
  return TourDocument{parse_layers(text)};
}

}  // namespace uknight
