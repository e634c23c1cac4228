#pragma once

#include <cstddef>
#include <vector>

namespace rci {

// Tolerances applied on construction: inputs whose total mass is within
// kMassAcceptTol of 1 are renormalized, anything worse is rejected.
// Entries in [-kNegClampTol, 0) are clamped to zero.
inline constexpr double kMassAcceptTol = 1e-9;
inline constexpr double kNegClampTol = 1e-12;

/// Probability vector over a finite alphabet (entries nonnegative, sum 1).
class Dist {
 public:
  Dist() = default;
  explicit Dist(std::vector<double> probs);

  static Dist uniform(std::size_t n);
  static Dist point_mass(std::size_t n, std::size_t at);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& probs() const { return p_; }

  bool operator==(const Dist&) const = default;

 private:
  std::vector<double> p_;
};

/// Probability matrix over a product alphabet X x Y, stored row-major.
class JointDist {
 public:
  JointDist() = default;
  JointDist(std::size_t rows, std::size_t cols, std::vector<double> probs);

  static JointDist uniform(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t x, std::size_t y) const {
    return p_[x * cols_ + y];
  }
  const std::vector<double>& probs() const { return p_; }

  Dist row_marginal() const;
  Dist col_marginal() const;
  /// The same mass viewed as a Dist over the flattened alphabet.
  Dist flatten() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> p_;
};

/// Stochastic matrix: one conditional distribution per conditioning symbol.
/// All rows share the same output alphabet.
class Channel {
 public:
  Channel() = default;
  explicit Channel(std::vector<Dist> rows);

  std::size_t input_size() const { return rows_.size(); }
  std::size_t output_size() const {
    return rows_.empty() ? 0 : rows_[0].size();
  }
  const Dist& row(std::size_t w) const { return rows_[w]; }
  const std::vector<Dist>& rows() const { return rows_; }

 private:
  std::vector<Dist> rows_;
};

}  // namespace rci
