#include "cobord/ideal.hpp"

#include "cobord/error.hpp"
#include "cobord/partitions.hpp"

namespace cobord {

IdealSpec::IdealSpec(std::string name_, std::vector<GradedPoly> generators_, int cap_)
    : name(std::move(name_)), generators(std::move(generators_)), cap(cap_) {
  for (const auto& g : generators) {
    if (g.is_zero()) throw DomainError("ideal " + name + " has a zero generator");
    auto w = g.homogeneous_weight();
    if (!w) throw DomainError("ideal " + name + " has a non-homogeneous generator");
    if (*w > cap) throw DomainError("ideal " + name + " has a generator above the cap");
  }
}

DegreePiece ideal_degree_basis(const IdealSpec& ideal, int n) {
  if (n < 0 || n > ideal.cap) throw RangeError("degree outside the cap");
  const auto basis = monomial_basis(n);
  std::vector<Vector> rows;
  for (const auto& g : ideal.generators) {
    const int w = *g.homogeneous_weight();
    if (w > n) continue;
    for (const auto& m : monomial_basis(n - w)) rows.push_back(coordinates(GradedPoly::monomial(ideal.cap, m) * g, basis));
  }
  DegreePiece piece;
  piece.degree = n;
  piece.ambient_dim = basis.size();
  piece.spanning = Matrix::from_rows(rows, basis.size());
  piece.ideal_dim = rank(piece.spanning);
  return piece;
}

std::optional<Vector> ideal_coordinates(const IdealSpec& ideal, const GradedPoly& z, int n) {
  const DegreePiece piece = ideal_degree_basis(ideal, n);
  const auto basis = monomial_basis(n);
  return solve(piece.spanning.transposed(), coordinates(z.homogeneous_part(n), basis));
}

bool ideal_member(const IdealSpec& ideal, const GradedPoly& z) {
  if (z.max_weight() > ideal.cap) throw RangeError("class above the cap");
  for (int n = 0; n <= std::max(0, z.max_weight()); ++n) {
    const GradedPoly part = z.homogeneous_part(n);
    if (part.is_zero()) continue;
    const DegreePiece piece = ideal_degree_basis(ideal, n);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < piece.spanning.rows(); ++r) rows.push_back(piece.spanning.row(r));
    rows.push_back(coordinates(part, monomial_basis(n)));
    if (rank(Matrix::from_rows(rows, piece.ambient_dim)) != piece.ideal_dim) return false;
  }
  return true;
}

bool GradedReport::pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::optional<int> GradedReport::first_failure() const {
  for (const auto& r : rows)
    if (!r.pass) return r.degree;
  return std::nullopt;
}

GradedReport graded_report(const IdealSpec& ideal, const std::optional<std::vector<std::int64_t>>& expected) {
  GradedReport report{ideal.name, {}};
  for (int n = 0; n <= ideal.cap; ++n) {
    const DegreePiece piece = ideal_degree_basis(ideal, n);
    GradedRow row;
    row.degree = n;
    row.ideal_dim = piece.ideal_dim;
    row.ambient_dim = piece.ambient_dim;
    row.quotient_dim = piece.quotient_dim();
    if (expected && static_cast<std::size_t>(n) < expected->size()) {
      row.expected = (*expected)[n];
      row.pass = static_cast<std::int64_t>(row.quotient_dim) == *row.expected;
    }
    report.rows.push_back(row);
  }
  return report;
}

IdealComparison ideals_equal(const IdealSpec& a, const IdealSpec& b, int cap) {
  if (cap > a.cap || cap > b.cap) throw ConfigError("comparison cap exceeds an ideal's cap");
  IdealComparison out;
  auto fail = [&](int degree, std::string why) {
    out.equal = false;
    if (!out.first_failing_degree || degree < *out.first_failing_degree) out.first_failing_degree = degree;
    out.failures.push_back(std::move(why));
  };
  for (int n = 0; n <= cap; ++n) {
    const auto da = ideal_degree_basis(a, n).ideal_dim;
    const auto db = ideal_degree_basis(b, n).ideal_dim;
    out.dims.emplace_back(da, db);
    if (da != db) {
      fail(n, "degree " + std::to_string(n) + ": dim " + a.name + " = " + std::to_string(da) + ", dim " + b.name +
                  " = " + std::to_string(db));
    }
  }
  auto cross = [&](const IdealSpec& from, const IdealSpec& into) {
    for (std::size_t i = 0; i < from.generators.size(); ++i) {
      const auto& g = from.generators[i];
      const int w = *g.homogeneous_weight();
      if (w > cap) continue;
      if (!ideal_member(into, g))
        fail(w, "generator " + std::to_string(i) + " of " + from.name + " is not in " + into.name);
    }
  };
  cross(a, b);
  cross(b, a);
  return out;
}

namespace {

std::vector<std::int64_t> multiply_truncated(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                             int cap) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(cap) + 1, 0);
  for (int i = 0; i <= cap; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= cap; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> free_ring_dimensions(const std::vector<int>& weights, int cap) {
  std::vector<std::int64_t> out;
  for (int n = 0; n <= cap; ++n) out.push_back(restricted_partition_count(n, weights));
  return out;
}

std::vector<std::int64_t> hilbert_prediction(const std::vector<int>& degrees, int cap) {
  std::vector<int> all;
  for (int i = 1; i <= cap; ++i) all.push_back(i);
  std::vector<std::int64_t> series = free_ring_dimensions(all, cap);
  for (int d : degrees) {
    if (d < 1) throw DomainError("sequence degrees must be positive");
    std::vector<std::int64_t> factor(static_cast<std::size_t>(cap) + 1, 0);
    factor[0] = 1;
    if (d <= cap) factor[d] = -1;
    series = multiply_truncated(series, factor, cap);
  }
  return series;
}

RegularityReport regularity_check(const std::vector<GradedPoly>& sequence, int cap, std::string name) {
  std::vector<int> degrees;
  for (const auto& g : sequence) {
    auto w = g.homogeneous_weight();
    if (!w || *w < 1) throw DomainError("regular sequences need homogeneous elements of positive weight");
    degrees.push_back(*w);
  }
  RegularityReport report;
  report.predicted = hilbert_prediction(degrees, cap);
  report.graded = graded_report(IdealSpec(std::move(name), sequence, cap), report.predicted);
  return report;
}

}  // namespace cobord
