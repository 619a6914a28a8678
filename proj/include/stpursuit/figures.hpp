#ifndef STPURSUIT_FIGURES_HPP
#define STPURSUIT_FIGURES_HPP

#include <string>
#include <string_view>
#include <vector>

namespace stpursuit {

struct FigureTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Curve data behind the law plots.
///   fig2: nu, phi_over_d          nu in [0, 0.99]
///   fig3: nu, n_max               epsilon = d0 / 1000
///   fig6: nu, beta, phi_over_d    nu in {0.2, 0.4, 0.6, 0.8}, beta in [0, beta_max)
///   fig8: nu, beta, n_max         same grid, epsilon = d0 / 1000
/// `points` is the number of samples per curve. Throws DomainError on unknown ids.
FigureTable figure_data(std::string_view id, double d0 = 15.0, int points = 100);

const std::vector<std::string>& figure_ids();

}  // namespace stpursuit

#endif  // STPURSUIT_FIGURES_HPP
