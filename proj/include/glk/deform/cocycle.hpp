#pragma once

#include <string>
#include <vector>

#include "glk/core/mat2.hpp"

namespace glk {

/// Letters are +(i+1) for generator i and -(i+1) for its inverse.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relations;
};

/// <sigma, tau | sigma tau sigma^-1 tau^-q>
inline Presentation tame_presentation(u64 q) {
  Word rel{1, 2, -1};
  rel.insert(rel.end(), q, -2);
  return {{"sigma", "tau"}, {rel}};
}

/// <a | a^n>
inline Presentation cyclic_presentation(u64 n) { return {{"a"}, {Word(n, 1)}}; }

/// Images of the generators of a presentation in GL_2(Z/p^m).
class HomModel {
 public:
  HomModel(Presentation pres, std::vector<Mat2> images) : pres_(std::move(pres)), images_(std::move(images)) {
    require(!images_.empty() && images_.size() == pres_.generators.size(), ErrorCode::InvalidArgument,
            "one image per generator required");
    for (const auto& g : images_) {
      require(g.p() == images_[0].p() && g.m() == images_[0].m(), ErrorCode::PrecisionMismatch,
              "generator images in different rings");
      require(g.is_invertible(), ErrorCode::NotInvertible, "generator image " + g.str() + " is singular");
    }
  }

  const Presentation& presentation() const { return pres_; }
  const std::vector<Mat2>& images() const { return images_; }
  u64 p() const { return images_[0].p(); }
  int m() const { return images_[0].m(); }

  Mat2 letter(int x) const {
    const Mat2& g = images_.at(static_cast<std::size_t>(std::abs(x) - 1));
    return x > 0 ? g : g.inverse();
  }

  Mat2 eval(const Word& w) const {
    Mat2 acc = Mat2::identity(p(), m());
    for (int x : w) acc = acc * letter(x);
    return acc;
  }

  bool is_homomorphism() const {
    for (const auto& r : pres_.relations)
      if (!eval(r).is_identity()) return false;
    return true;
  }

  HomModel reduce(int m_lower) const {
    std::vector<Mat2> out;
    for (const auto& g : images_) out.push_back(g.reduce(m_lower));
    return HomModel(pres_, std::move(out));
  }

  /// g -> h g h^-1
  HomModel conjugate(const Mat2& h) const {
    const Mat2 hi = h.inverse();
    std::vector<Mat2> out;
    for (const auto& g : images_) out.push_back(h * g * hi);
    return HomModel(pres_, std::move(out));
  }

  bool operator==(const HomModel& o) const { return images_ == o.images_; }

 private:
  Presentation pres_;
  std::vector<Mat2> images_;
};

/// Values of an Ad^0-valued 1-cocycle on the generators (trace-zero, mod p).
struct CocycleModel {
  std::vector<Mat2> values;

  static CocycleModel zero(std::size_t generators, u64 p) {
    return {std::vector<Mat2>(generators, Mat2::from_ints(0, 0, 0, 0, p, 1))};
  }

  CocycleModel operator+(const CocycleModel& o) const {
    require(values.size() == o.values.size(), ErrorCode::InvalidArgument, "cocycles on different presentations");
    CocycleModel out = *this;
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = out.values[i] + o.values[i];
    return out;
  }

  CocycleModel scaled(const ResidueInt& s) const {
    CocycleModel out = *this;
    for (auto& v : out.values) v = v.scaled(s);
    return out;
  }
};

namespace detail {

inline Mat2 adjoint(const Mat2& g, const Mat2& x) { return g * x * g.inverse(); }

inline void check_values(const HomModel& rhobar, const CocycleModel& f) {
  require(rhobar.m() == 1, ErrorCode::PrecisionMismatch, "cocycle action is through the residual representation");
  require(f.values.size() == rhobar.images().size(), ErrorCode::InvalidArgument, "one cocycle value per generator");
  for (const auto& v : f.values) {
    require(v.p() == rhobar.p() && v.m() == 1, ErrorCode::PrecisionMismatch, "cocycle values must be mod p");
    require(v.trace().is_zero(), ErrorCode::InvalidArgument, "cocycle value " + v.str() + " is not trace-zero");
  }
}

// Coordinates on Ad^0: [[a, b], [c, -a]] <-> (a, b, c).
inline Mat2 ad0_basis(int j, u64 p) {
  switch (j) {
    case 0: return Mat2::from_ints(1, 0, 0, -1, p, 1);
    case 1: return Mat2::from_ints(0, 1, 0, 0, p, 1);
    default: return Mat2::from_ints(0, 0, 1, 0, p, 1);
  }
}

}  // namespace detail

/// f(w) by the cocycle rule f(gh) = f(g) + g.f(h), f(g^-1) = -g^-1.f(g).
inline Mat2 eval_cocycle(const HomModel& rhobar, const CocycleModel& f, const Word& w) {
  const u64 p = rhobar.p();
  Mat2 g = Mat2::identity(p, 1);
  Mat2 acc = Mat2::from_ints(0, 0, 0, 0, p, 1);
  for (int x : w) {
    const std::size_t i = static_cast<std::size_t>(std::abs(x) - 1);
    const Mat2& gi = rhobar.images().at(i);
    const Mat2 fx = x > 0 ? f.values.at(i) : Mat2::from_ints(0, 0, 0, 0, p, 1) - detail::adjoint(gi.inverse(), f.values.at(i));
    acc = acc + detail::adjoint(g, fx);
    g = g * rhobar.letter(x);
  }
  return acc;
}

inline bool is_cocycle(const HomModel& rhobar, const CocycleModel& f) {
  detail::check_values(rhobar, f);
  const Mat2 zero = Mat2::from_ints(0, 0, 0, 0, rhobar.p(), 1);
  for (const auto& r : rhobar.presentation().relations)
    if (eval_cocycle(rhobar, f, r) != zero) return false;
  return true;
}

/// g -> (I + p^m f(g)) rho_next(g), where rho_next lives mod p^{m+1}.
inline HomModel twist(const HomModel& rho_next, const CocycleModel& f) {
  const int m = rho_next.m() - 1;
  require(m >= 1, ErrorCode::PrecisionMismatch, "twisting needs rho mod p^{m+1} with m >= 1");
  const HomModel rhobar = rho_next.reduce(1);
  require(is_cocycle(rhobar, f), ErrorCode::NotACocycle, "cocycle identity fails on a defining relation");
  const u64 p = rho_next.p();
  const BigInt pm = ipow(BigInt(p), static_cast<unsigned>(m));
  std::vector<Mat2> out;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const Mat2& v = f.values[i];
    const ResidueInt z(0, p, m + 1);
    const Mat2 bump(z.with_value(1 + pm * v.a().value()), z.with_value(pm * v.b().value()),
                    z.with_value(pm * v.c().value()), z.with_value(1 + pm * v.d().value()));
    out.push_back(bump * rho_next.images()[i]);
  }
  return HomModel(rho_next.presentation(), std::move(out));
}

/// g -> g c g^-1 - c. Twisting by it is conjugation by I - p^m c.
inline CocycleModel coboundary(const HomModel& rhobar, const Mat2& c) {
  require(rhobar.m() == 1 && c.m() == 1 && c.p() == rhobar.p(), ErrorCode::PrecisionMismatch,
          "coboundaries are built mod p");
  require(c.trace().is_zero(), ErrorCode::InvalidArgument, "c must be trace-zero");
  CocycleModel f;
  for (const auto& g : rhobar.images()) f.values.push_back(detail::adjoint(g, c) - c);
  return f;
}

/// Basis of Z^1 for the presentation: the kernel of the (linear) map sending
/// generator values to the values on the relations, over F_p.
inline std::vector<CocycleModel> cocycle_basis(const HomModel& rhobar) {
  require(rhobar.m() == 1, ErrorCode::PrecisionMismatch, "cocycle space is computed mod p");
  const u64 p = rhobar.p();
  const std::size_t gens = rhobar.images().size();
  const std::size_t rels = rhobar.presentation().relations.size();
  const std::size_t cols = 3 * gens;
  const std::size_t rows = 4 * rels;

  auto unit_cocycle = [&](std::size_t col) {
    CocycleModel f = CocycleModel::zero(gens, p);
    f.values[col / 3] = detail::ad0_basis(static_cast<int>(col % 3), p);
    return f;
  };

  std::vector<std::vector<u64>> a(rows, std::vector<u64>(cols, 0));
  for (std::size_t col = 0; col < cols; ++col) {
    const CocycleModel f = unit_cocycle(col);
    for (std::size_t r = 0; r < rels; ++r) {
      const Mat2 v = eval_cocycle(rhobar, f, rhobar.presentation().relations[r]);
      const ResidueInt* entries[4] = {&v.a(), &v.b(), &v.c(), &v.d()};
      for (int e = 0; e < 4; ++e) a[4 * r + e][col] = static_cast<u64>(entries[e]->value());
    }
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    const u64 inv = inverse_mod(a[row][col], p);
    for (auto& x : a[row]) x = mul_mod(x, inv, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const u64 factor = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = (a[r][c] + p - mul_mod(factor, a[row][c], p)) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<CocycleModel> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = (p - a[r][free]) % p;
    CocycleModel f = CocycleModel::zero(gens, p);
    for (std::size_t c = 0; c < cols; ++c) {
      if (x[c] == 0) continue;
      f.values[c / 3] = f.values[c / 3] + detail::ad0_basis(static_cast<int>(c % 3), p).scaled(ResidueInt(BigInt(x[c]), p, 1));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace glk
