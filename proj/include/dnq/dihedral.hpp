// Exact model of the dihedral group D_n acting on the periodic chain Z_n.
//
// Elements are (kind, index) pairs R_k = (r_k, +1) and M_k = (r_k, -1).
// All arithmetic is modular integer arithmetic; nothing here touches floating
// point. The canonical order (R_0..R_{n-1}, M_0..M_{n-1}) is used by every
// matrix and table built on top of this header.
#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dnq {

/// Reduces i into [0, n).
constexpr int wrap(long long i, int n) {
  const long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

inline void require_order(int n) {
  if (n < 2) {
    throw std::domain_error("n must be >= 2, got " + std::to_string(n));
  }
}

enum class ElementKind { rotation, mirror };

class DihedralElement {
 public:
  static DihedralElement rotation(int index, int order) {
    return {ElementKind::rotation, index, order};
  }
  static DihedralElement mirror(int index, int order) {
    return {ElementKind::mirror, index, order};
  }
  static DihedralElement identity(int order) { return rotation(0, order); }

  /// Parses "R3" / "M0" (case-insensitive kind letter).
  static DihedralElement parse(std::string_view text, int order) {
    require_order(order);
    if (text.size() < 2) {
      throw std::invalid_argument("malformed element '" + std::string(text) + "'");
    }
    ElementKind kind;
    switch (text.front()) {
      case 'R': case 'r': kind = ElementKind::rotation; break;
      case 'M': case 'm': kind = ElementKind::mirror; break;
      default:
        throw std::invalid_argument("malformed element '" + std::string(text) +
                                    "': expected R<k> or M<k>");
    }
    int index = 0;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc{} || ptr != last) {
      throw std::invalid_argument("malformed element '" + std::string(text) + "'");
    }
    if (index < 0 || index >= order) {
      throw std::invalid_argument("element index out of range in '" + std::string(text) +
                                  "' for n=" + std::to_string(order));
    }
    return {kind, index, order};
  }

  ElementKind kind() const { return kind_; }
  int index() const { return index_; }
  int order() const { return order_; }
  bool is_rotation() const { return kind_ == ElementKind::rotation; }
  bool is_mirror() const { return kind_ == ElementKind::mirror; }
  bool is_identity() const { return is_rotation() && index_ == 0; }

  /// Position in the canonical enumeration: rotations 0..n-1, mirrors n..2n-1.
  std::size_t position() const {
    return static_cast<std::size_t>(is_rotation() ? index_ : order_ + index_);
  }

  std::string to_string() const {
    return (is_rotation() ? "R" : "M") + std::to_string(index_);
  }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

 private:
  DihedralElement(ElementKind kind, int index, int order)
      : kind_(kind), index_(index), order_(order) {
    require_order(order);
    if (index < 0 || index >= order) {
      throw std::out_of_range("element index " + std::to_string(index) +
                              " outside [0, " + std::to_string(order) + ")");
    }
  }

  ElementKind kind_;
  int index_;
  int order_;
};

/// A vertex r_i of the periodic chain Z_n.
class ConfigPoint {
 public:
  ConfigPoint(int site, int order) : site_(site), order_(order) {
    require_order(order);
    if (site < 0 || site >= order) {
      throw std::out_of_range("site " + std::to_string(site) + " outside [0, " +
                              std::to_string(order) + ")");
    }
  }
  int site() const { return site_; }
  int order() const { return order_; }
  friend bool operator==(const ConfigPoint&, const ConfigPoint&) = default;

 private:
  int site_;
  int order_;
};

namespace detail {
inline void require_same_order(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("incompatible group parameters: n=" + std::to_string(a) +
                                " vs n=" + std::to_string(b));
  }
}
}  // namespace detail

/// Group law of D_n:
///   R_i R_j = R_{i+j},  R_i M_j = M_{i+j},  M_i R_j = M_{i-j},  M_i M_j = R_{i-j}.
inline DihedralElement multiply(const DihedralElement& a, const DihedralElement& b) {
  detail::require_same_order(a.order(), b.order());
  const int n = a.order();
  // A mirror on the left inverts the rotation part of the right factor.
  const long long twisted = a.is_rotation() ? b.index() : -static_cast<long long>(b.index());
  const int index = wrap(a.index() + twisted, n);
  const bool rotation = a.is_rotation() == b.is_rotation();
  return rotation ? DihedralElement::rotation(index, n) : DihedralElement::mirror(index, n);
}

inline DihedralElement operator*(const DihedralElement& a, const DihedralElement& b) {
  return multiply(a, b);
}

inline DihedralElement inverse(const DihedralElement& a) {
  if (a.is_mirror()) return a;
  return DihedralElement::rotation(wrap(-a.index(), a.order()), a.order());
}

/// g . r_i: R_k . r_i = r_{i+k}, M_k . r_i = r_{k-i}.
inline ConfigPoint act(const DihedralElement& g, const ConfigPoint& p) {
  detail::require_same_order(g.order(), p.order());
  const int n = g.order();
  const int site = g.is_rotation() ? wrap(p.site() + g.index(), n) : wrap(g.index() - p.site(), n);
  return {site, n};
}

/// All 2n elements in canonical order.
inline std::vector<DihedralElement> enumerate_group(int n) {
  require_order(n);
  std::vector<DihedralElement> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(DihedralElement::rotation(k, n));
  for (int k = 0; k < n; ++k) out.push_back(DihedralElement::mirror(k, n));
  return out;
}

/// Left cosets t_m H of the stabilizer H = {R_0, M_0} of r_0, with t_m = R_m.
class CosetDecomposition {
 public:
  explicit CosetDecomposition(int n) : order_(n) {
    require_order(n);
    representatives_.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) representatives_.push_back(DihedralElement::rotation(m, n));
  }

  int order() const { return order_; }
  const std::vector<DihedralElement>& representatives() const { return representatives_; }

  std::array<DihedralElement, 2> stabilizer() const {
    return {DihedralElement::identity(order_), DihedralElement::mirror(0, order_)};
  }

  bool in_stabilizer(const DihedralElement& h) const {
    return h.order() == order_ && h.index() == 0;
  }

  /// The coset t_m H = {R_m, M_m}.
  std::array<DihedralElement, 2> coset(int m) const {
    const auto& t = representatives_.at(static_cast<std::size_t>(m));
    const auto h = stabilizer();
    return {t * h[0], t * h[1]};
  }

  /// Index m of the coset containing g, found by searching for t_m^{-1} g in H.
  int coset_of(const DihedralElement& g) const {
    detail::require_same_order(g.order(), order_);
    for (int m = 0; m < order_; ++m) {
      if (in_stabilizer(inverse(representatives_[static_cast<std::size_t>(m)]) * g)) return m;
    }
    throw std::logic_error("element " + g.to_string() + " lies in no coset");
  }

 private:
  int order_;
  std::vector<DihedralElement> representatives_;
};

/// Builds the decomposition and checks that the cosets partition D_n.
inline CosetDecomposition coset_decomposition(int n) {
  CosetDecomposition cosets(n);
  std::vector<int> hits(2 * static_cast<std::size_t>(n), 0);
  for (int m = 0; m < n; ++m) {
    for (const auto& g : cosets.coset(m)) ++hits[g.position()];
  }
  for (int count : hits) {
    if (count != 1) throw std::logic_error("coset representatives do not partition D_n");
  }
  return cosets;
}

}  // namespace dnq
