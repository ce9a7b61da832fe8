#ifndef LAPASYM_LATTICE_SUM_HPP
#define LAPASYM_LATTICE_SUM_HPP

#include <Eigen/Core>
#include <cmath>
#include <algorithm>
#include <cstdint>
#include <exception>
#include <iosfwd>
#include <string>
#include <thread>
#include <vector>

#include "lapasym/errors.hpp"
#include "lapasym/specfun.hpp"

namespace lapasym::lattice {

/// Periodic lattice described by its stencil vectors s_1..s_L.
///
/// The first two vectors are always (1,0) and (0,1). trace_divisor converts
/// the frequency sum F_n into tr(L^+) for the built-in lattices.
struct LatticeSpec {
  std::string name;
  std::vector<Eigen::Vector2i> stencil;
  int trace_divisor = 1;

  int count() const { return static_cast<int>(stencil.size()); }
  double s_bar() const;
  /// Throws ConfigError unless the stencil normalization holds.
  void validate() const;

  static LatticeSpec square();
  static LatticeSpec triangular();
  static LatticeSpec modified_union_jack();
};

/// Built-in lattice by name: square, triangular, modified_union_jack (alias muj).
LatticeSpec lattice_by_name(const std::string& name);

/// Parses the key-value lattice file: one `s = j k` line per stencil vector
/// (in order), `divisor = d`, optional `name = ...`; `#` starts a comment.
LatticeSpec parse_lattice_config(std::istream& in);
LatticeSpec load_lattice_config(const std::string& path);

/// Grid bookkeeping for n = 4N + n0.
struct GridGeometry {
  static constexpr double beta = 1.0 - specfun::pi * specfun::pi / 20.0;

  long n = 0;
  int n0 = 0;
  long N = 0;
  double delta_n = 0.0;  // 2 pi / n
  double beta_n = 0.0;   // (pi/2)(1 + (2 - n0)/n)

  explicit GridGeometry(long n_value);

  /// (j, k) indexes a cell of D_n^beta for the square lattice.
  bool in_restricted(long j, long k) const {
    return std::labs(j) <= N && std::labs(k) <= N && (j != 0 || k != 0);
  }
  std::int64_t full_count() const { return static_cast<std::int64_t>(n) * n - 1; }
  std::int64_t restricted_count() const { return (2 * N + 1) * (2 * N + 1) - 1; }
};

/// psi(x) = 1 - (1/L) sum cos(s_l . x), evaluated as (1/L) sum 2 sin^2(s_l . x / 2)
/// so that small values keep full relative accuracy.
template <typename Scalar>
Scalar kernel_psi(const LatticeSpec& spec, const Eigen::Matrix<Scalar, 2, 1>& x) {
  using std::sin;
  Scalar acc(0);
  for (const auto& s : spec.stencil) {
    Scalar h = sin((Scalar(s.x()) * x.x() + Scalar(s.y()) * x.y()) / Scalar(2));
    acc += Scalar(2) * h * h;
  }
  return acc / Scalar(spec.count());
}

/// p_m(x): order-2m Taylor polynomial of psi about the origin.
template <typename Scalar>
Scalar taylor_denominator(const LatticeSpec& spec, int m, const Eigen::Matrix<Scalar, 2, 1>& x) {
  if (m < 1) throw DomainError("taylor_denominator: m must be positive");
  Scalar acc(0);
  for (const auto& s : spec.stencil) {
    Scalar dot = Scalar(s.x()) * x.x() + Scalar(s.y()) * x.y();
    Scalar dot2 = dot * dot;
    Scalar power = dot2;
    Scalar factorial(2);
    for (int j = 1; j <= m; ++j) {
      acc += ((j % 2 == 1) ? Scalar(1) : Scalar(-1)) * power / factorial;
      power *= dot2;
      factorial *= Scalar(2 * j + 1) * Scalar(2 * j + 2);
    }
  }
  return acc / Scalar(spec.count());
}

template <typename Scalar>
Scalar kernel_f(const LatticeSpec& spec, const Eigen::Matrix<Scalar, 2, 1>& x) {
  Scalar p = kernel_psi(spec, x);
  if (std::abs(static_cast<double>(p)) < 1e-300)
    throw SingularityError("kernel_f: psi vanishes", static_cast<double>(x.x()), static_cast<double>(x.y()));
  return Scalar(1) / p;
}

/// f_m(x) = 1 / p_m(x); throws SingularityError carrying x when p_m vanishes.
template <typename Scalar>
Scalar kernel_fm(const LatticeSpec& spec, int m, const Eigen::Matrix<Scalar, 2, 1>& x) {
  Scalar p = taylor_denominator(spec, m, x);
  if (std::abs(static_cast<double>(p)) < 1e-300)
    throw SingularityError("kernel_fm: p_m vanishes", static_cast<double>(x.x()), static_cast<double>(x.y()));
  return Scalar(1) / p;
}

enum class Kernel { f, f1, f2, custom };
enum class Region { full, restricted };

std::string to_string(Kernel kernel);
std::string to_string(Region region);

struct SumOptions {
  /// 0 picks LAPASYM_WORKERS, then the hardware concurrency.
  int workers = 0;
  /// Visit rows and columns in descending order.
  bool reverse_order = false;
  /// exact_sum only: use the window j, k in [-floor(n/2), n - floor(n/2))
  /// and evaluate psi from the angles directly instead of the sine table.
  bool centered_window = false;
};

struct SumResult {
  double value = 0.0;
  double compensation = 0.0;
  std::int64_t term_count = 0;
  long n = 0;
  LatticeSpec lattice;
  Kernel kernel = Kernel::f;
  int m = 0;  // Taylor order for f_m kernels
  Region region = Region::full;
};

/// Worker count actually used for a request (see SumOptions::workers).
int resolve_workers(int requested);

/// F_n = sum over 0 <= j,k < n, (j,k) != (0,0) of 1/psi(2 pi j/n, 2 pi k/n).
///
/// Rows are accumulated with Neumaier compensation and the per-row results
/// reduced in a fixed order, so the value is bit-identical for every worker
/// count.
SumResult exact_sum(const LatticeSpec& spec, long n, const SumOptions& options = {});

/// tr(L^+) = F_n / trace_divisor.
double trace_pseudoinverse(const LatticeSpec& spec, long n, const SumOptions& options = {});

/// F_n^beta(f_2) for the square lattice via the 4-fold symmetry of the
/// index set: 4 (axis terms + open quadrant). Requires n >= 4.
SumResult restricted_sum_f2(long n, const SumOptions& options = {});

/// F_n^beta(f_m) for an arbitrary stencil by direct summation over
/// |t_j|, |t_k| <= pi / (2 s_bar), (j,k) != (0,0).
SumResult restricted_sum(const LatticeSpec& spec, int m, long n, const SumOptions& options = {});

/// Neumaier-compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      compensation += (sum - t) + x;
    else
      compensation += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + compensation; }
};

// Per-row compensated sums computed in parallel over contiguous row blocks,
// then reduced in a fixed order. The partition never changes a row's value.
template <typename RowFn>
CompensatedSum reduce_rows(long rows, int workers, bool descending, RowFn&& row_fn) {
  std::vector<CompensatedSum> partial(static_cast<std::size_t>(std::max(rows, 0L)));
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max(rows, 1L))));
  auto run_block = [&](long begin, long end) {
    for (long r = begin; r < end; ++r) partial[r] = row_fn(r);
  };
  if (workers == 1) {
    run_block(0, rows);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    long chunk = (rows + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      long begin = w * chunk;
      long end = std::min(rows, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, w, begin, end] {
        try {
          run_block(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  CompensatedSum total;
  for (long i = 0; i < rows; ++i) {
    const auto& p = partial[descending ? rows - 1 - i : i];
    total.add(p.sum);
    total.add(p.compensation);
  }
  return total;
}

}  // namespace lapasym::lattice

#endif  // LAPASYM_LATTICE_SUM_HPP
