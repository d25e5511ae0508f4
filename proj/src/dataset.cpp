#include "nbs/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <string>

#include "nbs/error.hpp"

namespace nbs {

namespace {

std::string_view strip(std::string_view s) {
  const auto comment = s.find('#');
  if (comment != std::string_view::npos) s = s.substr(0, comment);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_header(std::string_view s) {
  return std::ranges::any_of(s, [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) && c != 'e' && c != 'E';
  });
}

}  // namespace

std::vector<Interval> read_observations(std::istream& in) {
  std::vector<Interval> out;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = strip(line);
    if (body.empty()) continue;
    if (!seen_data && out.empty() && looks_like_header(body)) {
      seen_data = true;
      continue;
    }
    seen_data = true;
    try {
      out.push_back(parse_interval(body));
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Interval> read_observations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot open dataset '" + path.string() + "'");
  return read_observations(in);
}

NeutroSample read_dataset(const std::filesystem::path& path) {
  return NeutroSample(read_observations(path));
}

}  // namespace nbs
