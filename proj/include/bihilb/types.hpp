#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bihilb {

using BigInt = boost::multiprecision::cpp_int;

/// A bidegree (a, b) in Z^2. Negative coordinates are legal.
struct Bidegree {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;

  friend Bidegree operator+(Bidegree u, Bidegree v) { return {u.a + v.a, u.b + v.b}; }
  friend Bidegree operator-(Bidegree u, Bidegree v) { return {u.a - v.a, u.b - v.b}; }
  friend Bidegree operator*(std::int64_t k, Bidegree u) { return {k * u.a, k * u.b}; }

  bool nonnegative() const { return a >= 0 && b >= 0; }
  std::string str() const;
};

/// Componentwise partial order.
inline bool leq(Bidegree u, Bidegree v) { return u.a <= v.a && u.b <= v.b; }

/// Strict weak order for ordered containers (lexicographic, unrelated to `leq`).
struct BidegreeLess {
  bool operator()(Bidegree u, Bidegree v) const {
    return u.a != v.a ? u.a < v.a : u.b < v.b;
  }
};

/// P^n x P^m: x_0..x_n and y_0..y_m. Both n and m must be at least 1.
struct Shape {
  int n = 1;
  int m = 1;

  Shape() = default;
  Shape(int n_, int m_);

  int r() const { return n + m; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

using DegreeList = std::vector<Bidegree>;

/// Throws std::invalid_argument unless every entry is >= (1, 1).
void validate_degree_list(const DegreeList& degrees);

/// Inclusive rectangle [lo, hi]. Iteration order is row-major with b as the
/// row index: (lo.a, lo.b), (lo.a + 1, lo.b), ..., (hi.a, hi.b).
struct Window {
  Bidegree lo;
  Bidegree hi;

  std::size_t width() const { return static_cast<std::size_t>(hi.a - lo.a + 1); }
  std::size_t height() const { return static_cast<std::size_t>(hi.b - lo.b + 1); }
  std::size_t size() const { return width() * height(); }
  bool contains(Bidegree mu) const { return leq(lo, mu) && leq(mu, hi); }
  std::size_t index(Bidegree mu) const {
    return static_cast<std::size_t>(mu.b - lo.b) * width() + static_cast<std::size_t>(mu.a - lo.a);
  }
  Bidegree at(std::size_t idx) const {
    return {lo.a + static_cast<std::int64_t>(idx % width()),
            lo.b + static_cast<std::int64_t>(idx / width())};
  }
  std::vector<Bidegree> points() const;
  friend bool operator==(const Window&, const Window&) = default;
};

/// Throws WindowInvalid unless lo <= hi componentwise (and lo >= (0,0) when
/// `nonnegative` is set).
void validate_window(const Window& w, bool nonnegative);

/// Dense values over a window, in the window's iteration order.
template <typename T>
struct Grid {
  Window window;
  std::vector<T> values;

  Grid() = default;
  explicit Grid(Window w, T fill = T{}) : window(w), values(w.size(), fill) {}

  T& operator[](Bidegree mu) { return values[window.index(mu)]; }
  const T& operator[](Bidegree mu) const { return values[window.index(mu)]; }
  friend bool operator==(const Grid&, const Grid&) = default;
};

using IntGrid = Grid<std::int64_t>;

}  // namespace bihilb
