#pragma once

#include <span>
#include <string>

namespace gedforge::eval {

double metric_mse(std::span<const double> pred, std::span<const double> label);

/// Spearman rank correlation with average ranks for ties. Returns NaN when
/// either side has no rank variance.
double metric_spearman(std::span<const double> x, std::span<const double> y);

/// |top-k(pred) ∩ top-k(label)| / k, higher scores first; ties broken by
/// ascending id. Throws if k exceeds the corpus size.
double metric_p_at_k(std::span<const double> pred, std::span<const double> label,
                     std::span<const std::string> ids, int k);

}  // namespace gedforge::eval
