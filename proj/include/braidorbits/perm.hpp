#ifndef BRAIDORBITS_PERM_HPP
#define BRAIDORBITS_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidorbits {

// A permutation of {0, ..., n-1}, stored as the image vector. Points are
// 0-based internally; every I/O surface (cycle notation, catalog files,
// certificates) is 1-based. The composition convention is fixed
// project-wide: compose(a, b) applies a first, then b.
class Permutation {
 public:
  using point_type = std::uint8_t;  // degrees stay well below 256

  Permutation() = default;

  static Permutation identity(int degree) {
    check_degree(degree);
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), point_type{0});
    return p;
  }

  static Permutation from_images(std::vector<int> const& images) {
    check_degree(static_cast<int>(images.size()));
    Permutation p;
    p.images_.reserve(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int im : images) {
      if (im < 0 || im >= static_cast<int>(images.size()) || seen[im])
        throw std::invalid_argument("image vector is not a bijection");
      seen[im] = true;
      p.images_.push_back(static_cast<point_type>(im));
    }
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator[](int point) const { return images_[point]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool operator==(Permutation const& other) const = default;

  // Lexicographic order on image vectors; the total order behind every
  // "minimal element" and "canonical form" in the library.
  bool operator<(Permutation const& other) const {
    if (degree() != other.degree()) return degree() < other.degree();
    return images_ < other.images_;
  }

  std::vector<point_type> const& images() const { return images_; }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (point_type b : images_) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static void check_degree(int degree) {
    if (degree <= 0 || degree > 255)
      throw std::invalid_argument("permutation degree must be in [1, 255]");
  }

  friend Permutation compose(Permutation const& a, Permutation const& b);
  friend Permutation inverse(Permutation const& a);
  friend Permutation conjugate(Permutation const& a, Permutation const& g);

  std::vector<point_type> images_;
};

inline void check_same_degree(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch: " +
                                std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
}

// a first, then b: (a*b)(i) = b(a(i)).
inline Permutation compose(Permutation const& a, Permutation const& b) {
  check_same_degree(a, b);
  Permutation c;
  c.images_.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) c.images_[i] = b.images_[a.images_[i]];
  return c;
}

inline Permutation inverse(Permutation const& a) {
  Permutation b;
  b.images_.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) b.images_[a.images_[i]] = static_cast<Permutation::point_type>(i);
  return b;
}

// g^-1 a g; maps i to g(a(g^-1(i))).
inline Permutation conjugate(Permutation const& a, Permutation const& g) {
  check_same_degree(a, g);
  Permutation c;
  c.images_.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) c.images_[g.images_[i]] = g.images_[a.images_[i]];
  return c;
}

inline Permutation commutator(Permutation const& a, Permutation const& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

inline bool commute(Permutation const& a, Permutation const& b) {
  check_same_degree(a, b);
  for (int i = 0; i < a.degree(); ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

inline std::uint64_t element_order(Permutation const& a) {
  // lcm of cycle lengths
  std::uint64_t ord = 1;
  std::vector<bool> seen(a.degree(), false);
  for (int i = 0; i < a.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    int j = i;
    do {
      seen[j] = true;
      j = a[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

inline int cycle_count(Permutation const& a) {
  int cycles = 0;
  std::vector<bool> seen(a.degree(), false);
  for (int i = 0; i < a.degree(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    do {
      seen[j] = true;
      j = a[j];
    } while (j != i);
  }
  return cycles;
}

// degree minus number of cycles (fixed points count as cycles); the
// quantity summed in the genus formula.
inline int perm_index(Permutation const& a) { return a.degree() - cycle_count(a); }

inline int fixed_points(Permutation const& a) {
  int fixed = 0;
  for (int i = 0; i < a.degree(); ++i)
    if (a[i] == i) ++fixed;
  return fixed;
}

// Sorted multiset of cycle lengths, fixed points included.
inline std::vector<int> cycle_type(Permutation const& a) {
  std::vector<int> type;
  std::vector<bool> seen(a.degree(), false);
  for (int i = 0; i < a.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    int j = i;
    do {
      seen[j] = true;
      j = a[j];
      ++len;
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

struct PermHash {
  std::size_t operator()(Permutation const& p) const { return p.hash(); }
};

// Cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"; the identity
// prints as "()".
inline std::string to_cycles(Permutation const& a) {
  std::string out;
  std::vector<bool> seen(a.degree(), false);
  for (int i = 0; i < a.degree(); ++i) {
    if (seen[i] || a[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ',';
      first = false;
      out += std::to_string(j + 1);
      seen[j] = true;
      j = a[j];
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

inline Permutation parse_cycles(std::string const& text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](std::string const& what) {
    throw std::invalid_argument("cycle notation error at position " +
                                std::to_string(pos) + ": " + what);
  };
  std::vector<bool> used(degree, false);
  skip_ws();
  if (pos == text.size()) fail("empty permutation text");
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[pos]))) fail("expected point number");
      int value = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + (text[pos++] - '0');
      if (value < 1 || value > degree) fail("point " + std::to_string(value) + " out of range");
      if (used[value - 1]) fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos == text.size()) fail("unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation::from_images(images);
}

}  // namespace braidorbits

#endif  // BRAIDORBITS_PERM_HPP
