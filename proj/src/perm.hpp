#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace autkit {

// A permutation of the points 1..n, stored as an image table.
//
// Composition is carried out left to right everywhere in this library:
// compose(p, q) applies p first and q second, so compose(p, q)(i) = q(p(i)).
// Points are 1-based in all textual forms and in the (i, j) pair arguments;
// the in-memory image table is 0-based.
class Perm {
 public:
  static Perm identity(uint32_t n);
  // The transposition (i, j) on points 1..n; i and j are 1-based, i != j.
  static Perm transposition(uint32_t n, uint32_t i, uint32_t j);
  // Builds from a 0-based image table; validates that it is a bijection.
  static Perm from_images(std::vector<uint32_t> images);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  // Image of a 0-based point.
  uint32_t operator()(uint32_t point) const { return images_[point]; }
  // Image of a 1-based point, 1-based; the convention of all textual forms.
  uint32_t image_of(uint32_t point) const { return images_[point - 1] + 1; }
  std::span<const uint32_t> images() const { return images_; }

  bool is_identity() const;
  bool is_transposition() const;
  // Smallest 0-based moved point, or degree() if the identity.
  uint32_t smallest_moved_point() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<uint32_t> images) : images_(std::move(images)) {}
  std::vector<uint32_t> images_;

  // Hot paths; these build image tables that are bijections by construction
  // and skip the from_images() validation pass.
  friend Perm compose(const Perm&, const Perm&);
  friend Perm inverse(const Perm&);
};

// Left-to-right product: result(i) = q(p(i)). Degrees must match.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
// inverse(x) * p * x, left to right.
Perm conjugate(const Perm& p, const Perm& x);

// Canonical cycle decomposition: every cycle starts at its smallest point,
// cycles are ordered by smallest point, fixed points appear as 1-cycles.
// Points in the result are 1-based.
std::vector<std::vector<uint32_t>> cycle_decomposition(const Perm& p);
// Number of cycles in the canonical decomposition, 1-cycles included.
uint32_t cycle_count(const Perm& p);

// Left-to-right product of transpositions (i, j), 1-based, on points 1..n.
Perm product_of(std::span<const std::pair<uint32_t, uint32_t>> transpositions,
                uint32_t n);

// Parses either cycle notation "(1,5,4)(3,6)" or image notation
// "[5,2,6,1,4,3]". Juxtaposed cycles are composed left to right, so
// "(1,2)(2,3)" parses to the 3-cycle (1,3,2). "()" is the identity.
Perm parse_perm(std::string_view text, uint32_t degree);

// Cycle notation with fixed points omitted; the identity prints as "()".
// parse_perm(format_cycles(p), p.degree()) == p exactly.
std::string format_cycles(const Perm& p);
// One-line image notation "[5,2,6,1,4,3]" (1-based values).
std::string format_images(const Perm& p);

struct PermHash {
  size_t operator()(const Perm& p) const noexcept;
};

}  // namespace autkit
