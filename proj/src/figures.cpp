#include "stpursuit/figures.hpp"

#include <array>

#include "stpursuit/geometry.hpp"
#include "stpursuit/trigger_laws.hpp"

namespace stpursuit {

namespace {

constexpr double kNuTop = 0.99;
constexpr std::array<double, 4> kBetaCurves{0.2, 0.4, 0.6, 0.8};

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig2", "fig3", "fig6", "fig8"};
  return ids;
}

FigureTable figure_data(std::string_view id, double d0, int points) {
  if (points < 2) throw DomainError("figure needs at least 2 points per curve");
  if (!(d0 > 0.0)) throw DomainError("d0 must be > 0");
  const double epsilon = d0 / 1000.0;
  FigureTable out;

  if (id == "fig2" || id == "fig3") {
    out.header = {"nu", id == "fig2" ? "phi_over_d" : "n_max"};
    for (int i = 0; i < points; ++i) {
      const double nu = kNuTop * i / (points - 1);
      const double y = id == "fig2" ? phi_exact(1.0, nu)
                                    : static_cast<double>(max_samples(d0, epsilon, nu));
      out.rows.push_back({nu, y});
    }
    return out;
  }

  if (id == "fig6" || id == "fig8") {
    out.header = {"nu", "beta", id == "fig6" ? "phi_over_d" : "n_max"};
    for (const double nu : kBetaCurves) {
      const double top = beta_max(nu);
      for (int i = 0; i < points; ++i) {
        const double beta = top * i / points;  // open at beta_max
        const double y = id == "fig6"
                             ? phi_beta(1.0, beta, nu)
                             : static_cast<double>(max_samples_beta(d0, epsilon, beta, nu));
        out.rows.push_back({nu, beta, y});
      }
    }
    return out;
  }

  throw DomainError("unknown figure id '" + std::string(id) + "' (expected fig2, fig3, fig6, fig8)");
}

}  // namespace stpursuit
