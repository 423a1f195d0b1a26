#include "rqe/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace rqe {

Perm Perm::from_images(std::vector<Point> images) {
  if (images.size() > kMaxDegree)
    throw ConfigError("permutation degree exceeds " + std::to_string(kMaxDegree));
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p])
      throw ConfigError("image array is not a permutation");
    seen[p] = true;
  }
  Perm result;
  result.images_ = std::move(images);
  return result;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw ConfigError("degree mismatch in permutation product");
  Perm result;
  result.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    result.images_[i] = rhs.images_[images_[i]];
  return result;
}

Perm Perm::inverse() const {
  Perm result;
  result.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = Point(i);
  return result;
}

Perm Perm::conjugated_by(const Perm& f) const {
  if (degree() != f.degree())
    throw ConfigError("degree mismatch in conjugation");
  // x·(f⁻¹gf) = ((x·f⁻¹)·g)·f, i.e. the image of f(i) is f(g(i)).
  Perm result;
  result.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    result.images_[f.images_[i]] = f.images_[images_[i]];
  return result;
}

unsigned Perm::order() const {
  unsigned result = 1;
  for (unsigned len : cycle_type())
    result = std::lcm(result, len);
  return result;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (Point j = Point(i); !seen[j]; j = images_[j], ++len)
      seen[j] = true;
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Perm::to_image_string() const {
  std::string s;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (i)
      s += ' ';
    s += std::to_string(images_[i] + 1);
  }
  return s;
}

std::string Perm::to_cycle_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    s += '(';
    bool first = true;
    for (Point j = Point(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first)
        s += ',';
      s += std::to_string(j + 1);
      first = false;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
}

unsigned parse_point(std::string_view text, std::size_t& pos, unsigned degree) {
  skip_ws(text, pos);
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == start)
    throw FormatError("expected a point in permutation text");
  unsigned value = 0;
  for (std::size_t i = start; i < pos; ++i) {
    value = value * 10 + unsigned(text[i] - '0');
    if (value > kMaxDegree + 1u)
      throw FormatError("point out of range in permutation text");
  }
  if (value == 0 || value > degree)
    throw FormatError("point " + std::to_string(value) + " outside 1.." +
                      std::to_string(degree));
  return value - 1; // to 0-based
}

} // namespace

Perm parse_cycles(std::string_view text, unsigned degree) {
  std::vector<Point> images(degree);
  for (unsigned i = 0; i < degree; ++i)
    images[i] = Point(i);
  std::vector<bool> moved(degree, false);

  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size())
    throw FormatError("empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw FormatError("expected '(' in cycle notation");
    ++pos;
    skip_ws(text, pos);
    std::vector<unsigned> cycle;
    while (pos < text.size() && text[pos] != ')') {
      cycle.push_back(parse_point(text, pos, degree));
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws(text, pos);
      }
    }
    if (pos == text.size())
      throw FormatError("unterminated cycle");
    ++pos; // ')'
    for (unsigned p : cycle) {
      if (moved[p])
        throw FormatError("point repeated across cycles");
      moved[p] = true;
    }
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      images[cycle[i]] = Point(cycle[i + 1]);
    if (cycle.size() > 1)
      images[cycle.back()] = Point(cycle.front());
    skip_ws(text, pos);
  }
  return Perm::from_images(std::move(images));
}

Perm parse_images(std::string_view text, unsigned degree) {
  std::vector<Point> images;
  std::size_t pos = 0;
  skip_ws(text, pos);
  while (pos < text.size()) {
    unsigned limit = degree ? degree : kMaxDegree;
    images.push_back(Point(parse_point(text, pos, limit)));
    skip_ws(text, pos);
  }
  if (images.empty())
    throw FormatError("empty permutation text");
  if (degree && images.size() != degree)
    throw FormatError("image array has " + std::to_string(images.size()) +
                      " entries, expected " + std::to_string(degree));
  try {
    return Perm::from_images(std::move(images));
  } catch (const Error&) {
    throw FormatError("image array is not a permutation");
  }
}

Perm parse_perm(std::string_view text, unsigned degree) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '(')
    return parse_cycles(text.substr(pos), degree);
  return parse_images(text, degree);
}

} // namespace rqe
