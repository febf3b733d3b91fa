#include "circsep/geometry.hpp"

#include <array>
#include <sstream>

namespace circsep {

int tensor_to_flat(int d, int j1, int j2) {
  if (d < 2) throw validation_error("tensor_to_flat: dimension must be >= 2");
  if (j1 < 0 || j1 >= d || j2 < 0 || j2 >= d)
    throw validation_error("tensor_to_flat: index out of range");
  return d * j1 + j2;
}

std::pair<int, int> flat_to_tensor(int d, int r) {
  if (d < 2) throw validation_error("flat_to_tensor: dimension must be >= 2");
  if (r < 0 || r >= d * d) throw validation_error("flat_to_tensor: index out of range");
  return {r / d, r % d};
}

Line slope_one_line(int d, int offset) {
  if (d < 2) throw validation_error("slope_one_line: dimension must be >= 2");
  if (offset < 0 || offset >= d) throw validation_error("slope_one_line: offset out of range");
  Line line;
  line.d = d;
  line.points.reserve(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) line.points.emplace_back(x, (x + offset) % d);
  return line;
}

Line vertical_line(int d, int x0) {
  if (d < 2) throw validation_error("vertical_line: dimension must be >= 2");
  if (x0 < 0 || x0 >= d) throw validation_error("vertical_line: offset out of range");
  Line line;
  line.d = d;
  for (int y = 0; y < d; ++y) line.points.emplace_back(x0, y);
  return line;
}

Line horizontal_line(int d, int y0) {
  if (d < 2) throw validation_error("horizontal_line: dimension must be >= 2");
  if (y0 < 0 || y0 >= d) throw validation_error("horizontal_line: offset out of range");
  Line line;
  line.d = d;
  for (int x = 0; x < d; ++x) line.points.emplace_back(x, y0);
  return line;
}

SupportPattern SupportPattern::circulant(int d, const PermutationZd& p) {
  if (p.d() != d) throw validation_error("SupportPattern: permutation size does not match dimension");
  SupportPattern out;
  out.d_ = d;
  out.galois_ = false;
  out.p_ = p;
  const int n = d * d;
  out.mask_.assign(static_cast<std::size_t>(n) * n, 0);
  out.classes_.resize(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) {
    auto& cls = out.classes_[static_cast<std::size_t>(x)];
    cls.x = x;
    cls.positions.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const int row = tensor_to_flat(d, j, (x + p(j)) % d);
        const int col = tensor_to_flat(d, k, (x + p(k)) % d);
        cls.positions.emplace_back(row, col);
        out.mask_[static_cast<std::size_t>(row * n + col)] = 1;
      }
    }
  }
  return out;
}

SupportPattern SupportPattern::galois(const GfAddTable& table) {
  const int d = table.q();
  SupportPattern out;
  out.d_ = d;
  out.galois_ = true;
  out.p_ = PermutationZd::identity(d);
  const int n = d * d;
  out.mask_.assign(static_cast<std::size_t>(n) * n, 0);
  out.classes_.resize(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) {
    auto& cls = out.classes_[static_cast<std::size_t>(x)];
    cls.x = x;
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const int row = tensor_to_flat(d, j, table.add(x, j));
        const int col = tensor_to_flat(d, k, table.add(x, k));
        cls.positions.emplace_back(row, col);
        out.mask_[static_cast<std::size_t>(row * n + col)] = 1;
      }
    }
  }
  return out;
}

std::size_t SupportPattern::support_size() const {
  std::size_t count = 0;
  for (auto m : mask_) count += m;
  return count;
}

std::pair<int, int> SupportPattern::class_position(int x, int j, int k) const {
  if (x < 0 || x >= d_ || j < 0 || j >= d_ || k < 0 || k >= d_)
    throw validation_error("SupportPattern::class_position: index out of range");
  return classes_[static_cast<std::size_t>(x)].positions[static_cast<std::size_t>(j * d_ + k)];
}

SupportPattern support_pattern(int d, const PermutationZd& p) {
  return SupportPattern::circulant(d, p);
}

SupportPattern gf_support_pattern(const GfAddTable& table) {
  return SupportPattern::galois(table);
}

std::string render_pattern(const SupportPattern& pattern) {
  const int n = pattern.n();
  // class label per occupied cell
  std::vector<int> label(static_cast<std::size_t>(n) * n, -1);
  for (const auto& cls : pattern.classes())
    for (const auto& [row, col] : cls.positions)
      label[static_cast<std::size_t>(row * n + col)] = cls.x;
  std::ostringstream os;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c > 0) os << ' ';
      const int x = label[static_cast<std::size_t>(r * n + c)];
      if (x < 0)
        os << '.';
      else
        os << 'x' << x;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_pattern_svg(const SupportPattern& pattern) {
  static constexpr std::array<const char*, 11> kPalette = {
      "#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860",
      "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd", "#4c9a74"};
  const int n = pattern.n();
  const int cell = 16;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n * cell << "\" height=\""
     << n * cell << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& cls : pattern.classes()) {
    const char* color = kPalette[static_cast<std::size_t>(cls.x) % kPalette.size()];
    for (const auto& [row, col] : cls.positions) {
      os << "<rect x=\"" << col * cell << "\" y=\"" << row * cell << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"" << color << "\" stroke=\"#333\"/>\n";
    }
  }
  // block grid
  for (int b = 0; b <= pattern.d(); ++b) {
    const int at = b * pattern.d() * cell;
    os << "<line x1=\"" << at << "\" y1=\"0\" x2=\"" << at << "\" y2=\"" << n * cell
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"0\" y1=\"" << at << "\" x2=\"" << n * cell << "\" y2=\"" << at
       << "\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace circsep
