#include "mpl/pwa.hpp"

#include <algorithm>
#include <string>

#include "mpl/error.hpp"
#include "mpl/parallel.hpp"

namespace mpl {

namespace {

bool is_augmented(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0 || a(0, 0) != Scalar::unit()) return false;
  for (std::size_t k = 1; k < a.rows(); ++k)
    if (a(0, k).is_finite() || a(k, 0).is_finite()) return false;
  return true;
}

enum class Mode { overlapping, partition };

PwaSystem generate(const Matrix& a, Mode mode, unsigned threads) {
  if (!a.is_square()) {
    throw DimensionError("system matrix must be square, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  }
  if (!is_row_finite(a)) throw NotRowFiniteError("system matrix is not row-finite");
  Matrix aug = augment_zero(a);
  const CoefficientRange coefficients = enumerate_finite_coefficients(aug);

  std::vector<std::vector<Region>> chunks(std::max(1U, threads));
  parallel_chunks(coefficients.size(), threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    auto& out = chunks[chunk];
    for (std::uint64_t k = begin; k < end; ++k) {
      FiniteCoefficient g = coefficients[k];
      Dbm zone = region_zone(aug, g);
      if (mode == Mode::partition) zone = sign_rule(zone);
      zone = canonical_form(zone);
      if (is_empty(zone)) continue;
      out.push_back(Region{g, std::move(zone), region_matrix(aug, g)});
    }
  });

  std::vector<Region> regions;
  for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(regions));
  return PwaSystem(std::move(aug), std::move(regions), mode == Mode::partition);
}

}  // namespace

std::vector<std::size_t> Region::variable_coefficient() const {
  return {coefficient.columns.begin() + 1, coefficient.columns.end()};
}

PwaSystem::PwaSystem(Matrix augmented_source, std::vector<Region> regions, bool partitioned)
    : source_(std::move(augmented_source)), regions_(std::move(regions)), partitioned_(partitioned) {
  if (!is_augmented(source_)) throw DimensionError("PwaSystem source must be an augmented matrix");
}

std::optional<std::size_t> PwaSystem::find(const FiniteCoefficient& g) const {
  auto it = std::lower_bound(regions_.begin(), regions_.end(), g,
                             [](const Region& r, const FiniteCoefficient& key) { return r.coefficient < key; });
  if (it == regions_.end() || it->coefficient != g) return std::nullopt;
  return static_cast<std::size_t>(it - regions_.begin());
}

Dbm region_zone(const Matrix& augmented, const FiniteCoefficient& g) {
  if (!is_augmented(augmented)) throw InvalidCoefficientError("region_zone expects an augmented matrix");
  if (g.size() == 0 || g[0] != 0) throw InvalidCoefficientError("augmented coefficient must have g_0 = 0");
  Matrix bounds = mat_oplus(row_definite(augmented, g), Matrix::identity(augmented.rows()));
  std::vector<std::uint8_t> signs(bounds.rows() * bounds.cols(), 1);
  return Dbm::from_parts(std::move(bounds), std::move(signs));
}

Dbm sign_rule(const Dbm& region) {
  const std::size_t m = region.size();
  std::vector<std::uint8_t> signs(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar b = region.bound(i, j);
      if (b.is_eps()) continue;
      signs[i * m + j] = (b > Scalar::unit() || (b == Scalar::unit() && i <= j)) ? 1 : 0;
    }
  }
  return Dbm::from_parts(region.bounds(), std::move(signs));
}

PwaSystem generate_pwa(const Matrix& a, unsigned threads) { return generate(a, Mode::overlapping, threads); }

PwaSystem generate_partition(const Matrix& a, unsigned threads) { return generate(a, Mode::partition, threads); }

bool are_adjacent(const FiniteCoefficient& g, const FiniteCoefficient& g2, const PwaSystem& pwa) {
  if (!pwa.find(g)) throw InvalidCoefficientError("coefficient is not a non-empty region of the system");
  if (!pwa.find(g2)) throw InvalidCoefficientError("coefficient is not a non-empty region of the system");
  std::size_t differing = 0;
  bool greater = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == g2[i]) continue;
    ++differing;
    greater = g[i] > g2[i];
  }
  return differing == 1 && greater;
}

std::size_t locate(std::span<const double> x, const PwaSystem& pwa) {
  if (!pwa.partitioned()) throw ContractError("locate requires a partitioned PWA system");
  std::optional<std::size_t> found;
  for (std::size_t r = 0; r < pwa.size(); ++r) {
    if (!contains_point(pwa[r].zone, x)) continue;
    if (found) throw InvariantError("point lies in more than one abstract state");
    found = r;
  }
  if (!found) throw InvariantError("point lies in no abstract state");
  return *found;
}

}  // namespace mpl
