#include "render.hpp"

#include <algorithm>

namespace runpoly::cli {

std::vector<std::string> render_path(const LabeledPath& path) {
  std::size_t label_width = 1;
  int width = 0;
  int height = 0;
  for (const auto& e : path.edges()) {
    label_width = std::max(label_width, std::to_string(e.label).size());
    (e.dir == Direction::horizontal ? width : height) += 1;
  }
  const std::size_t cell = label_width + 2;  // edge text between two '+'
  const std::size_t columns = static_cast<std::size_t>(width) * (cell + 1) + 1 + label_width;
  std::vector<std::string> grid(static_cast<std::size_t>(2 * height + 1), std::string(columns, ' '));

  auto row_of = [&](int y) { return static_cast<std::size_t>(2 * (height - y)); };
  auto col_of = [&](int x) { return static_cast<std::size_t>(x) * (cell + 1); };

  int x = 0;
  int y = 0;
  grid[row_of(0)][col_of(0)] = '+';
  for (const auto& e : path.edges()) {
    const std::string label = std::to_string(e.label);
    if (e.dir == Direction::horizontal) {
      std::string text(cell, '-');
      const std::size_t left = (cell - label.size()) / 2;
      text.replace(left, label.size(), label);
      grid[row_of(y)].replace(col_of(x) + 1, cell, text);
      ++x;
    } else {
      std::string& row = grid[row_of(y) - 1];
      row[col_of(x)] = '|';
      row.replace(col_of(x) + 1, label.size(), label);
      ++y;
    }
    grid[row_of(y)][col_of(x)] = '+';
  }
  for (auto& row : grid) row.erase(row.find_last_not_of(' ') + 1);
  return grid;
}

}  // namespace runpoly::cli
