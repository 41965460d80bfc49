#include "madm/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "madm/error.hpp"

namespace madm {

namespace {

struct ColumnIdeals {
  std::vector<double> best;
  std::vector<double> worst;
};

ColumnIdeals column_ideals(const Matrix& m, const std::vector<bool>& higher_is_better) {
  ColumnIdeals out{std::vector<double>(m.cols()), std::vector<double>(m.cols())};
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto col = m.column(j);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    out.best[j] = higher_is_better[j] ? *hi : *lo;
    out.worst[j] = higher_is_better[j] ? *lo : *hi;
  }
  return out;
}

/// (x - lo) / (hi - lo), or 0 when the range collapses.
double scaled(double x, double lo, double hi) {
  return hi > lo ? (x - lo) / (hi - lo) : 0.0;
}

}  // namespace

TopsisOutcome topsis(const DecisionProblem& problem, NormalizationScheme scheme) {
  require_rankable(problem);
  TopsisOutcome out;
  out.normalized = normalize(problem, scheme);

  const std::size_t m = problem.alternative_count();
  const std::size_t n = problem.criterion_count();
  const auto w = problem.weights();

  out.weighted = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.weighted(i, j) = w[j] * out.normalized.values(i, j);

  auto ideals = column_ideals(out.weighted, out.normalized.higher_is_better);
  out.pis = std::move(ideals.best);
  out.nis = std::move(ideals.worst);
  if (out.pis == out.nis)
    throw Error(ErrorKind::IdenticalIdeals,
                "positive and negative ideals coincide; closeness is undefined");

  out.d_plus.resize(m);
  out.d_minus.resize(m);
  out.closeness.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    double sp = 0.0;
    double sm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = out.weighted(i, j);
      sp += (v - out.pis[j]) * (v - out.pis[j]);
      sm += (v - out.nis[j]) * (v - out.nis[j]);
    }
    out.d_plus[i] = std::sqrt(sp);
    out.d_minus[i] = std::sqrt(sm);
    const double total = out.d_plus[i] + out.d_minus[i];
    // total == 0 only if pis == nis, excluded above.
    out.closeness[i] = out.d_minus[i] / total;
  }
  out.ranking = ranks_from_scores(out.closeness, Better::Higher);
  return out;
}

VikorOutcome vikor(const DecisionProblem& problem, NormalizationScheme scheme,
                   double strategy_weight) {
  if (!(strategy_weight >= 0.0 && strategy_weight <= 1.0))
    throw Error(ErrorKind::InvalidParameter,
                "strategy weight must lie in [0, 1], got " + std::to_string(strategy_weight));
  require_rankable(problem);

  VikorOutcome out;
  out.normalized = normalize(problem, scheme);
  out.strategy_weight = strategy_weight;

  const std::size_t m = problem.alternative_count();
  const std::size_t n = problem.criterion_count();
  const auto w = problem.weights();
  const Matrix& f = out.normalized.values;

  auto ideals = column_ideals(f, out.normalized.higher_is_better);
  out.f_star = std::move(ideals.best);
  out.f_minus = std::move(ideals.worst);

  out.s.assign(m, 0.0);
  out.r.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double spread = out.f_star[j] - out.f_minus[j];
      const double term = spread != 0.0 ? w[j] * (out.f_star[j] - f(i, j)) / spread : 0.0;
      out.s[i] += term;
      out.r[i] = std::max(out.r[i], term);
    }
  }

  const auto [s_lo, s_hi] = std::minmax_element(out.s.begin(), out.s.end());
  const auto [r_lo, r_hi] = std::minmax_element(out.r.begin(), out.r.end());
  out.q.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    out.q[i] = strategy_weight * scaled(out.s[i], *s_lo, *s_hi) +
               (1.0 - strategy_weight) * scaled(out.r[i], *r_lo, *r_hi);

  out.ranking = ranks_from_scores(out.q, Better::Lower);
  return out;
}

std::string_view to_string(Method method) noexcept {
  return method == Method::Topsis ? "topsis" : "vikor";
}

std::optional<Method> parse_method(std::string_view text) noexcept {
  if (text == "topsis") return Method::Topsis;
  if (text == "vikor") return Method::Vikor;
  return std::nullopt;
}

std::string MethodVariant::label() const {
  return std::string(to_string(method)) + ":" + std::string(to_string(scheme));
}

std::optional<MethodVariant> parse_variant(std::string_view text) noexcept {
  const auto colon = text.find(':');
  const auto method = parse_method(text.substr(0, colon));
  if (!method) return std::nullopt;
  MethodVariant variant;
  variant.method = *method;
  if (colon != std::string_view::npos) {
    const auto scheme = parse_scheme(text.substr(colon + 1));
    if (!scheme) return std::nullopt;
    variant.scheme = *scheme;
  }
  return variant;
}

std::vector<MethodVariant> default_variants() {
  return {
      {Method::Topsis, NormalizationScheme::Vector},
      {Method::Topsis, NormalizationScheme::Logarithmic},
      {Method::Vikor, NormalizationScheme::Vector},
      {Method::Vikor, NormalizationScheme::Logarithmic},
  };
}

RankVector rank_with(const DecisionProblem& problem, const MethodVariant& variant) {
  if (variant.method == Method::Topsis) return topsis(problem, variant.scheme).ranking;
  return vikor(problem, variant.scheme, variant.strategy_weight).ranking;
}

}  // namespace madm
