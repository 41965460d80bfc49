#ifndef MADM_RANKING_HPP
#define MADM_RANKING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "madm/core_model.hpp"
#include "madm/matrix.hpp"
#include "madm/normalization.hpp"

namespace madm {

struct TopsisOutcome {
  NormalizedMatrix normalized;
  Matrix weighted;                 // v_ij = w_j * r_ij
  std::vector<double> pis;         // positive ideal per column
  std::vector<double> nis;         // negative ideal per column
  std::vector<double> d_plus;      // Euclidean distance to pis
  std::vector<double> d_minus;     // Euclidean distance to nis
  std::vector<double> closeness;   // d_minus / (d_plus + d_minus)
  RankVector ranking;              // descending closeness
};

/// Normalize, weight, pick ideals (max for oriented-benefit columns, min
/// otherwise), L2 separations, closeness. Throws IdenticalIdeals when every
/// column has pis == nis.
TopsisOutcome topsis(const DecisionProblem& problem, NormalizationScheme scheme);

inline constexpr double kDefaultStrategyWeight = 0.5;

struct VikorOutcome {
  NormalizedMatrix normalized;
  std::vector<double> f_star;      // best normalized value per column
  std::vector<double> f_minus;     // worst normalized value per column
  std::vector<double> s;           // group utility
  std::vector<double> r;           // individual regret
  double strategy_weight = kDefaultStrategyWeight;
  std::vector<double> q;
  RankVector ranking;              // ascending q
};

/// VIKOR on the normalized matrix:
///   term_ij = w_j (f*_j - f_ij) / (f*_j - f-_j)   (0 when f*_j == f-_j)
///   S_i = sum_j term_ij,  R_i = max_j term_ij
///   Q_i = v (S_i - S*) / (S- - S*) + (1 - v) (R_i - R*) / (R- - R*)
/// A Q component with a zero denominator is dropped.
VikorOutcome vikor(const DecisionProblem& problem, NormalizationScheme scheme,
                   double strategy_weight = kDefaultStrategyWeight);

enum class Method { Topsis, Vikor };

std::string_view to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view text) noexcept;

/// A ranking method bound to a normalization scheme, e.g. "topsis:log".
struct MethodVariant {
  Method method = Method::Topsis;
  NormalizationScheme scheme = NormalizationScheme::Vector;
  double strategy_weight = kDefaultStrategyWeight;

  [[nodiscard]] std::string label() const;
  bool operator==(const MethodVariant&) const = default;
};

/// Parses "topsis:vector", "vikor:log", ... (scheme defaults to vector).
std::optional<MethodVariant> parse_variant(std::string_view text) noexcept;

/// TOPSIS/VIKOR x Vector/Logarithmic, in that order.
std::vector<MethodVariant> default_variants();

RankVector rank_with(const DecisionProblem& problem, const MethodVariant& variant);

}  // namespace madm

#endif  // MADM_RANKING_HPP
