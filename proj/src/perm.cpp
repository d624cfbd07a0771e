#include "perm.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace autkit {

Perm Perm::identity(uint32_t n) {
  if (n == 0) fail(Errc::invalid_argument, "permutation degree must be >= 1");
  std::vector<uint32_t> images(n);
  for (uint32_t i = 0; i < n; ++i) images[i] = i;
  return Perm(std::move(images));
}

Perm Perm::transposition(uint32_t n, uint32_t i, uint32_t j) {
  if (i == j) fail(Errc::invalid_argument, "transposition points must differ");
  if (i < 1 || j < 1 || i > n || j > n)
    fail(Errc::invalid_argument, "transposition point out of range 1..n");
  Perm p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Perm Perm::from_images(std::vector<uint32_t> images) {
  if (images.empty())
    fail(Errc::invalid_argument, "permutation degree must be >= 1");
  std::vector<bool> seen(images.size(), false);
  for (uint32_t v : images) {
    if (v >= images.size() || seen[v])
      fail(Errc::invalid_argument, "image table is not a bijection");
    seen[v] = true;
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Perm::is_transposition() const {
  uint32_t moved = 0;
  for (uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i && ++moved > 2) return false;
  return moved == 2;  // two swapped points; bijectivity forces a 2-cycle
}

uint32_t Perm::smallest_moved_point() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return degree();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    fail(Errc::degree_mismatch, "compose: degrees differ");
  std::vector<uint32_t> images(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) images[i] = q(p(i));
  return Perm(std::move(images));
}

Perm inverse(const Perm& p) {
  std::vector<uint32_t> images(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) images[p(i)] = i;
  return Perm(std::move(images));
}

Perm conjugate(const Perm& p, const Perm& x) {
  return compose(compose(inverse(x), p), x);
}

std::vector<std::vector<uint32_t>> cycle_decomposition(const Perm& p) {
  std::vector<std::vector<uint32_t>> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (uint32_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<uint32_t> cycle;
    uint32_t v = start;
    do {
      seen[v] = true;
      cycle.push_back(v + 1);
      v = p(v);
    } while (v != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

uint32_t cycle_count(const Perm& p) {
  uint32_t count = 0;
  std::vector<bool> seen(p.degree(), false);
  for (uint32_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    uint32_t v = start;
    do {
      seen[v] = true;
      v = p(v);
    } while (v != start);
  }
  return count;
}

Perm product_of(std::span<const std::pair<uint32_t, uint32_t>> transpositions,
                uint32_t n) {
  Perm result = Perm::identity(n);
  for (const auto& [i, j] : transpositions)
    result = compose(result, Perm::transposition(n, i, j));
  return result;
}

namespace {

void skip_ws(std::string_view text, size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
}

uint32_t parse_point(std::string_view text, size_t& pos) {
  skip_ws(text, pos);
  size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == start) fail(Errc::parse_error, "expected a point number");
  uint64_t value = 0;
  for (size_t i = start; i < pos; ++i) {
    value = value * 10 + static_cast<uint64_t>(text[i] - '0');
    if (value > 0xFFFFFFFFull) fail(Errc::parse_error, "point out of range");
  }
  return static_cast<uint32_t>(value);
}

Perm cycle_to_perm(const std::vector<uint32_t>& points, uint32_t degree) {
  Perm p = Perm::identity(degree);
  if (points.size() < 2) return p;
  std::vector<uint32_t> images(p.images().begin(), p.images().end());
  for (size_t i = 0; i < points.size(); ++i) {
    uint32_t from = points[i] - 1;
    uint32_t to = points[(i + 1) % points.size()] - 1;
    images[from] = to;
  }
  return Perm::from_images(std::move(images));
}

}  // namespace

Perm parse_perm(std::string_view text, uint32_t degree) {
  if (degree == 0) fail(Errc::invalid_argument, "degree must be >= 1");
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size())
    fail(Errc::parse_error, "empty permutation text");

  if (text[pos] == '[') {
    ++pos;
    std::vector<uint32_t> images;
    skip_ws(text, pos);
    while (pos < text.size() && text[pos] != ']') {
      uint32_t v = parse_point(text, pos);
      if (v < 1 || v > degree)
        fail(Errc::parse_error, "image value out of range 1..n");
      images.push_back(v - 1);
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws(text, pos);
      }
    }
    if (pos >= text.size() || text[pos] != ']')
      fail(Errc::parse_error, "unterminated image list");
    ++pos;
    skip_ws(text, pos);
    if (pos != text.size())
      fail(Errc::parse_error, "trailing characters after image list");
    if (images.size() != degree)
      fail(Errc::parse_error, "image list length does not match degree");
    return Perm::from_images(std::move(images));
  }

  // Cycle notation: a sequence of parenthesised cycles composed left to right.
  Perm result = Perm::identity(degree);
  bool any = false;
  while (pos < text.size()) {
    skip_ws(text, pos);
    if (pos >= text.size()) break;
    if (text[pos] != '(')
      fail(Errc::parse_error, "expected '(' in cycle notation");
    ++pos;
    std::vector<uint32_t> points;
    skip_ws(text, pos);
    while (pos < text.size() && text[pos] != ')') {
      uint32_t v = parse_point(text, pos);
      if (v < 1 || v > degree)
        fail(Errc::parse_error, "cycle point out of range 1..n");
      if (std::find(points.begin(), points.end(), v) != points.end())
        fail(Errc::parse_error, "point repeated within one cycle");
      points.push_back(v);
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws(text, pos);
      }
    }
    if (pos >= text.size() || text[pos] != ')')
      fail(Errc::parse_error, "unterminated cycle");
    ++pos;
    any = true;
    result = compose(result, cycle_to_perm(points, degree));
  }
  if (!any) fail(Errc::parse_error, "no cycles found");
  return result;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  for (const auto& cycle : cycle_decomposition(p)) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::string format_images(const Perm& p) {
  std::string out = "[";
  for (uint32_t i = 0; i < p.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(p(i) + 1);
  }
  out += ']';
  return out;
}

size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image words.
  uint64_t h = 1469598103934665603ull;
  for (uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace autkit
