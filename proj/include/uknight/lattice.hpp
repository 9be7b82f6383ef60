#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace uknight {

/// Largest extent accepted on any axis. Keeps every coordinate inside the
/// range where the exact segment predicates cannot overflow 64-bit integers.
inline constexpr int kMaxExtent = 1 << 15;

struct Cell {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

struct MoveOffset {
  int dx = 0;
  int dy = 0;
  int dz = 0;

  friend constexpr bool operator==(const MoveOffset&, const MoveOffset&) = default;
  friend constexpr auto operator<=>(const MoveOffset&, const MoveOffset&) = default;
};

constexpr Cell operator+(Cell c, MoveOffset d) { return {c.x + d.dx, c.y + d.dy, c.z + d.dz}; }
constexpr MoveOffset operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

/// True when the component magnitudes of `d` are a permutation of {0, 1, 2}.
bool is_knight_offset(MoveOffset d);

/// An nx × ny × nz box of unit cells. Cells are addressed by zero-based
/// lattice coordinates; the linear index orders cells lexicographically by
/// (x, y, z).
class Box {
 public:
  /// Throws std::invalid_argument unless every extent is in [1, kMaxExtent].
  Box(int nx, int ny, int nz);

  int nx() const { return extents_[0]; }
  int ny() const { return extents_[1]; }
  int nz() const { return extents_[2]; }
  int extent(int axis) const { return extents_[static_cast<std::size_t>(axis)]; }
  const std::array<int, 3>& extents() const { return extents_; }
  std::int64_t volume() const {
    return std::int64_t{extents_[0]} * extents_[1] * extents_[2];
  }

  bool contains(Cell c) const {
    return c.x >= 0 && c.y >= 0 && c.z >= 0 && c.x < extents_[0] && c.y < extents_[1] &&
           c.z < extents_[2];
  }

  std::int64_t index_of(Cell c) const {
    return (std::int64_t{c.x} * extents_[1] + c.y) * extents_[2] + c.z;
  }
  Cell cell_at(std::int64_t index) const;

  /// Extents sorted ascending; identifies the box shape up to isometry.
  std::array<int, 3> sorted_dims() const;

  /// "MxNxK" form used on the command line and in documents.
  std::string to_string() const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::array<int, 3> extents_;
};

/// Parses "MxNxK" (also accepts 'X'). Throws std::invalid_argument.
Box parse_box(const std::string& text);

/// Axis permutation plus per-axis reflection. Output axis i reads input
/// axis perm[i], mirrored when reflect[i] is set.
struct BoxTransform {
  std::array<int, 3> perm{0, 1, 2};
  std::array<bool, 3> reflect{false, false, false};

  Cell apply(const Box& box, Cell c) const;
  MoveOffset apply(MoveOffset d) const;

  /// (a.then(b))(c) == b(a(c)).
  BoxTransform then(const BoxTransform& next) const;

  bool is_identity() const;

  friend bool operator==(const BoxTransform&, const BoxTransform&) = default;
};

/// The 24 signed axis permutations of (0, 1, 2), sorted by (dx, dy, dz).
const std::vector<MoveOffset>& knight_offsets();

/// In-box knight destinations from `from`, in knight_offsets() order.
/// Throws std::out_of_range if `from` lies outside the box.
std::vector<Cell> knight_moves(const Box& box, Cell from);

/// Every extent-preserving axis permutation combined with all eight
/// reflection patterns. The identity comes first.
std::vector<BoxTransform> symmetries(const Box& box);

/// Lexicographically least cell of each orbit under symmetries(box), sorted.
std::vector<Cell> canonical_start_cells(const Box& box);

std::string to_string(Cell c);

}  // namespace uknight
