#include "crosstopo/svg.hpp"

#include <fstream>

namespace crosstopo {

namespace {

const char* kPalette[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44",
                          "#66ccee", "#aa3377", "#bbbbbb", "#222255"};
constexpr int kPaletteSize = 8;

}  // namespace

std::string mask_svg(const GridMask& mask, const ComponentLabels& labels,
                     int pixels_per_cell) {
  const int n = mask.n;
  const int side = n * pixels_per_cell;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(side) + "\" height=\"" + std::to_string(side) +
         "\" viewBox=\"0 0 " + std::to_string(side) + " " +
         std::to_string(side) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      if (!mask.at(col, row)) continue;
      const int id = labels.label[static_cast<std::size_t>(col + row * n)];
      // y axis points up mathematically; SVG y points down
      const int px = col * pixels_per_cell;
      const int py = (n - 1 - row) * pixels_per_cell;
      out += "<rect x=\"" + std::to_string(px) + "\" y=\"" +
             std::to_string(py) + "\" width=\"" +
             std::to_string(pixels_per_cell) + "\" height=\"" +
             std::to_string(pixels_per_cell) + "\" fill=\"" +
             kPalette[id % kPaletteSize] + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string error_curves_svg(const std::vector<std::vector<Rat>>& curves,
                             const std::vector<std::string>& names) {
  const int width = 480, height = 320, margin = 40;
  Rat max_value(0);
  std::size_t max_len = 1;
  for (const auto& c : curves) {
    max_len = std::max(max_len, c.size());
    for (const Rat& v : c) max_value = std::max(max_value, v);
  }
  if (max_value == 0) max_value = 1;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" +
         std::to_string(height - margin) + "\" x2=\"" +
         std::to_string(width - margin) + "\" y2=\"" +
         std::to_string(height - margin) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" +
         std::to_string(margin) + "\" x2=\"" + std::to_string(margin) +
         "\" y2=\"" + std::to_string(height - margin) +
         "\" stroke=\"black\"/>\n";
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& curve = curves[ci];
    if (curve.empty()) continue;
    std::string pts;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const Rat fx = Rat(margin) +
                     Rat((width - 2 * margin)) * Rat(i) /
                         Rat(std::max<std::size_t>(max_len - 1, 1));
      const Rat fy = Rat(height - margin) -
                     Rat((height - 2 * margin)) * curve[i] / max_value;
      pts += rat_to_decimal(fx, 2) + "," + rat_to_decimal(fy, 2) + " ";
    }
    out += "<polyline fill=\"none\" stroke=\"" +
           std::string(kPalette[ci % kPaletteSize]) + "\" points=\"" + pts +
           "\"/>\n";
    if (ci < names.size()) {
      out += "<text x=\"" + std::to_string(margin + 6) + "\" y=\"" +
             std::to_string(margin + 14 + 14 * static_cast<int>(ci)) +
             "\" fill=\"" + kPalette[ci % kPaletteSize] +
             "\" font-size=\"12\">" + names[ci] + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open '" + path + "' for writing");
  }
  out << content;
}

}  // namespace crosstopo
