#include "cosmoface/caps.hpp"

#include <cctype>
#include <cstdlib>

#include "cosmoface/errors.hpp"

namespace cosmoface {

void Caps::apply_assignments(const std::string& text) {
  size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    size_t end = i;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string item = text.substr(i, end - i);
    i = end;
    if (item.empty() || item[0] == '#') continue;
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("cap setting '" + item + "' is not of the form key=value");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    char* tail = nullptr;
    long long n = std::strtoll(value.c_str(), &tail, 10);
    if (value.empty() || (tail && *tail) || n < 0)
      throw InputError("cap value for '" + key + "' must be a nonnegative integer");
    if (key == "max_subgraphs")
      max_subgraphs = n;
    else if (key == "max_cycles")
      max_cycles = n;
    else if (key == "max_faces")
      max_faces = n;
    else if (key == "max_bf_vertices")
      max_bf_vertices = static_cast<int>(n);
    else
      throw InputError("unknown cap key '" + key + "'");
  }
}

}  // namespace cosmoface
