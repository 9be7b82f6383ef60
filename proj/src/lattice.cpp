#include "uknight/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace uknight {

bool is_knight_offset(MoveOffset d) {
  std::array<int, 3> mags{std::abs(d.dx), std::abs(d.dy), std::abs(d.dz)};
  std::sort(mags.begin(), mags.end());
  return mags == std::array<int, 3>{0, 1, 2};
}

Box::Box(int nx, int ny, int nz) : extents_{nx, ny, nz} {
  for (int e : extents_) {
    if (e < 1 || e > kMaxExtent) {
      throw std::invalid_argument("box extents must lie in [1, " + std::to_string(kMaxExtent) +
                                  "], got " + std::to_string(nx) + "x" + std::to_string(ny) + "x" +
                                  std::to_string(nz));
    }
  }
}

Cell Box::cell_at(std::int64_t index) const {
  const auto z = static_cast<int>(index % extents_[2]);
  index /= extents_[2];
  const auto y = static_cast<int>(index % extents_[1]);
  const auto x = static_cast<int>(index / extents_[1]);
  return {x, y, z};
}

std::array<int, 3> Box::sorted_dims() const {
  auto dims = extents_;
  std::sort(dims.begin(), dims.end());
  return dims;
}

std::string Box::to_string() const {
  return std::to_string(extents_[0]) + "x" + std::to_string(extents_[1]) + "x" +
         std::to_string(extents_[2]);
}

Box parse_box(const std::string& text) {
  std::array<int, 3> dims{};
  std::size_t pos = 0;
  for (int axis = 0; axis < 3; ++axis) {
    if (axis > 0) {
      if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X')) {
        throw std::invalid_argument("expected box as MxNxK, got '" + text + "'");
      }
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start || pos - start > 6) {
      throw std::invalid_argument("expected box as MxNxK, got '" + text + "'");
    }
    dims[static_cast<std::size_t>(axis)] = std::stoi(text.substr(start, pos - start));
  }
  if (pos != text.size()) throw std::invalid_argument("expected box as MxNxK, got '" + text + "'");
  return Box(dims[0], dims[1], dims[2]);
}

Cell BoxTransform::apply(const Box& box, Cell c) const {
  const std::array<int, 3> in{c.x, c.y, c.z};
  std::array<int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const int v = in[static_cast<std::size_t>(perm[i])];
    out[i] = reflect[i] ? box.extent(static_cast<int>(i)) - 1 - v : v;
  }
  return {out[0], out[1], out[2]};
}

MoveOffset BoxTransform::apply(MoveOffset d) const {
  const std::array<int, 3> in{d.dx, d.dy, d.dz};
  std::array<int, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const int v = in[static_cast<std::size_t>(perm[i])];
    out[i] = reflect[i] ? -v : v;
  }
  return {out[0], out[1], out[2]};
}

BoxTransform BoxTransform::then(const BoxTransform& next) const {
  // next(this(c))[i] = next.reflect[i] ? mirror(this(c)[next.perm[i]]) : this(c)[next.perm[i]]
  BoxTransform out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto j = static_cast<std::size_t>(next.perm[i]);
    out.perm[i] = perm[j];
    out.reflect[i] = reflect[j] != next.reflect[i];
  }
  return out;
}

bool BoxTransform::is_identity() const { return *this == BoxTransform{}; }

const std::vector<MoveOffset>& knight_offsets() {
  static const std::vector<MoveOffset> offsets = [] {
    std::vector<MoveOffset> out;
    for (int dx = -2; dx <= 2; ++dx) {
      for (int dy = -2; dy <= 2; ++dy) {
        for (int dz = -2; dz <= 2; ++dz) {
          if (is_knight_offset({dx, dy, dz})) out.push_back({dx, dy, dz});
        }
      }
    }
    return out;
  }();
  return offsets;
}

std::vector<Cell> knight_moves(const Box& box, Cell from) {
  if (!box.contains(from)) {
    throw std::out_of_range("cell " + to_string(from) + " lies outside box " + box.to_string());
  }
  std::vector<Cell> out;
  for (const MoveOffset& d : knight_offsets()) {
    const Cell to = from + d;
    if (box.contains(to)) out.push_back(to);
  }
  return out;
}

std::vector<BoxTransform> symmetries(const Box& box) {
  std::array<int, 3> perm{0, 1, 2};
  std::vector<BoxTransform> out;
  do {
    bool preserves = true;
    for (int i = 0; i < 3; ++i) {
      if (box.extent(i) != box.extent(perm[static_cast<std::size_t>(i)])) preserves = false;
    }
    if (!preserves) continue;
    for (int mask = 0; mask < 8; ++mask) {
      BoxTransform t;
      t.perm = perm;
      for (std::size_t i = 0; i < 3; ++i) t.reflect[i] = ((mask >> i) & 1) != 0;
      out.push_back(t);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Cell> canonical_start_cells(const Box& box) {
  const auto transforms = symmetries(box);
  std::vector<Cell> out;
  for (std::int64_t i = 0; i < box.volume(); ++i) {
    const Cell c = box.cell_at(i);
    bool least = true;
    for (const auto& t : transforms) {
      if (t.apply(box, c) < c) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(c);
  }
  return out;
}

std::string to_string(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," + std::to_string(c.z) + ")";
}

}  // namespace uknight
