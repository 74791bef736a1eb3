#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hsym {

// Number of code points in a UTF-8 string.
std::size_t display_width(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Left-aligned plain-text table with a dashed rule under the header.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> headers);
  void add_row(std::vector<std::string> cells);
  void render(std::ostream& os) const;

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace hsym
