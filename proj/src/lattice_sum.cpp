#include "lapasym/lattice_sum.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lapasym::lattice {

namespace {

constexpr double pi = specfun::pi;
constexpr double singular_threshold = 1e-300;

// 2 sin^2(pi m / n) for m in [0, n)
std::vector<double> half_angle_table(long n) {
  std::vector<double> h(static_cast<std::size_t>(n));
  for (long m = 0; m < n; ++m) {
    long r = std::min(m, n - m);
    double s = std::sin(pi * static_cast<double>(r) / static_cast<double>(n));
    h[m] = 2.0 * s * s;
  }
  return h;
}

long mod_positive(long long a, long n) {
  long long r = a % n;
  return static_cast<long>(r < 0 ? r + n : r);
}

[[noreturn]] void throw_singular(long j, long k) {
  throw SingularityError("singular summand at index (" + std::to_string(j) + ", " + std::to_string(k) + ")",
                         static_cast<double>(j), static_cast<double>(k));
}

}  // namespace

double LatticeSpec::s_bar() const {
  double m = 0.0;
  for (const auto& s : stencil) m = std::max(m, std::hypot(double(s.x()), double(s.y())));
  return m;
}

void LatticeSpec::validate() const {
  if (stencil.size() < 2) throw ConfigError("lattice '" + name + "': need at least two stencil vectors");
  if (stencil[0] != Eigen::Vector2i(1, 0) || stencil[1] != Eigen::Vector2i(0, 1))
    throw ConfigError("lattice '" + name + "': first stencil vectors must be (1,0) and (0,1)");
  for (const auto& s : stencil)
    if (s.isZero()) throw ConfigError("lattice '" + name + "': zero stencil vector");
  if (trace_divisor <= 0) throw ConfigError("lattice '" + name + "': divisor must be positive");
}

LatticeSpec LatticeSpec::square() { return {"square", {{1, 0}, {0, 1}}, 4}; }

LatticeSpec LatticeSpec::triangular() { return {"triangular", {{1, 0}, {0, 1}, {1, 1}}, 6}; }

LatticeSpec LatticeSpec::modified_union_jack() {
  return {"modified_union_jack", {{1, 0}, {0, 1}, {1, -1}, {1, 1}}, 8};
}

LatticeSpec lattice_by_name(const std::string& name) {
  if (name == "square" || name == "sq") return LatticeSpec::square();
  if (name == "triangular" || name == "tr") return LatticeSpec::triangular();
  if (name == "modified_union_jack" || name == "muj") return LatticeSpec::modified_union_jack();
  throw ConfigError("unknown lattice '" + name + "'");
}

LatticeSpec parse_lattice_config(std::istream& in) {
  LatticeSpec spec;
  spec.name = "custom";
  spec.trace_divisor = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    auto blank = line.find_first_not_of(" \t\r");
    if (blank == std::string::npos) continue;
    if (eq == std::string::npos) throw ConfigError("lattice file line " + std::to_string(line_no) + ": expected key = value");
    std::istringstream key_stream(line.substr(0, eq));
    std::string key;
    key_stream >> key;
    std::istringstream value(line.substr(eq + 1));
    auto fail = [&] { throw ConfigError("lattice file line " + std::to_string(line_no) + ": bad value for '" + key + "'"); };
    if (key == "s") {
      int j, k;
      if (!(value >> j >> k)) fail();
      std::string rest;
      if (value >> rest) fail();
      spec.stencil.emplace_back(j, k);
    } else if (key == "divisor") {
      int d;
      if (!(value >> d)) fail();
      spec.trace_divisor = d;
    } else if (key == "name") {
      if (!(value >> spec.name)) fail();
    } else {
      throw ConfigError("lattice file line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

LatticeSpec load_lattice_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lattice file '" + path + "'");
  return parse_lattice_config(in);
}

GridGeometry::GridGeometry(long n_value) : n(n_value) {
  if (n < 1) throw DomainError("GridGeometry: n must be positive");
  n0 = static_cast<int>(n % 4);
  N = (n - n0) / 4;
  delta_n = 2.0 * pi / static_cast<double>(n);
  beta_n = 0.5 * pi * (1.0 + static_cast<double>(2 - n0) / static_cast<double>(n));
}

std::string to_string(Kernel kernel) {
  switch (kernel) {
    case Kernel::f: return "f";
    case Kernel::f1: return "f1";
    case Kernel::f2: return "f2";
    case Kernel::custom: return "custom";
  }
  return "?";
}

std::string to_string(Region region) { return region == Region::full ? "full" : "restricted"; }

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LAPASYM_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SumResult exact_sum(const LatticeSpec& spec, long n, const SumOptions& options) {
  if (n < 1) throw DomainError("exact_sum: n must be >= 1");
  spec.validate();
  SumResult result;
  result.n = n;
  result.lattice = spec;
  result.kernel = Kernel::f;
  result.region = Region::full;
  result.term_count = static_cast<std::int64_t>(n) * n - 1;
  if (n == 1) return result;

  const int workers = resolve_workers(options.workers);
  const bool desc = options.reverse_order;
  const int L = spec.count();
  CompensatedSum total;

  if (options.centered_window) {
    const long start = -(n / 2);
    total = reduce_rows(n, workers, desc, [&](long row) {
      long j = start + (desc ? n - 1 - row : row);
      CompensatedSum acc;
      for (long c = 0; c < n; ++c) {
        long k = start + (desc ? n - 1 - c : c);
        if (j == 0 && k == 0) continue;
        Eigen::Vector2d t(2.0 * pi * j / n, 2.0 * pi * k / n);
        double p = kernel_psi(spec, t);
        if (p < singular_threshold) throw_singular(j, k);
        acc.add(1.0 / p);
      }
      return acc;
    });
  } else {
    const std::vector<double> h = half_angle_table(n);
    std::vector<long> step(L);
    for (int l = 0; l < L; ++l) step[l] = mod_positive(spec.stencil[l].y(), n);
    total = reduce_rows(n, workers, desc, [&](long row) {
      long j = desc ? n - 1 - row : row;
      // idx_l tracks (a_l j + b_l k) mod n along the row
      std::vector<long> idx(L);
      long k0 = desc ? n - 1 : 0;
      for (int l = 0; l < L; ++l)
        idx[l] = mod_positive(static_cast<long long>(spec.stencil[l].x()) * j +
                                  static_cast<long long>(spec.stencil[l].y()) * k0, n);
      CompensatedSum acc;
      for (long c = 0; c < n; ++c) {
        long k = desc ? n - 1 - c : c;
        if (j != 0 || k != 0) {
          double s = 0.0;
          for (int l = 0; l < L; ++l) s += h[idx[l]];
          if (s < singular_threshold) throw_singular(j, k);
          acc.add(static_cast<double>(L) / s);
        }
        for (int l = 0; l < L; ++l) {
          if (desc) {
            idx[l] -= step[l];
            if (idx[l] < 0) idx[l] += n;
          } else {
            idx[l] += step[l];
            if (idx[l] >= n) idx[l] -= n;
          }
        }
      }
      return acc;
    });
  }
  result.value = total.value();
  result.compensation = total.compensation;
  return result;
}

double trace_pseudoinverse(const LatticeSpec& spec, long n, const SumOptions& options) {
  return exact_sum(spec, n, options).value / spec.trace_divisor;
}

SumResult restricted_sum_f2(long n, const SumOptions& options) {
  GridGeometry grid(n);
  if (grid.N < 1) throw DomainError("restricted_sum_f2: need n >= 4 so that N >= 1");
  const LatticeSpec spec = LatticeSpec::square();
  const long N = grid.N;
  const bool desc = options.reverse_order;
  auto t = [&](long j) { return 2.0 * pi * static_cast<double>(j) / static_cast<double>(n); };
  auto term = [&](long j, long k) {
    double x = t(j), y = t(k);
    double p = 0.25 * (x * x + y * y) - (x * x * x * x + y * y * y * y) / 48.0;
    if (std::fabs(p) < singular_threshold) throw_singular(j, k);
    return 1.0 / p;
  };
  // row 0 carries the axis terms (j, 0), rows 1..N the open quadrant
  CompensatedSum quarter = reduce_rows(N + 1, resolve_workers(options.workers), desc, [&](long row) {
    CompensatedSum acc;
    if (row == 0) {
      for (long c = 1; c <= N; ++c) acc.add(term(desc ? N + 1 - c : c, 0));
    } else {
      for (long c = 1; c <= N; ++c) acc.add(term(row, desc ? N + 1 - c : c));
    }
    return acc;
  });
  SumResult result;
  result.value = 4.0 * quarter.value();
  result.compensation = 4.0 * quarter.compensation;
  result.term_count = grid.restricted_count();
  result.n = n;
  result.lattice = spec;
  result.kernel = Kernel::f2;
  result.m = 2;
  result.region = Region::restricted;
  return result;
}

SumResult restricted_sum(const LatticeSpec& spec, int m, long n, const SumOptions& options) {
  if (n < 1) throw DomainError("restricted_sum: n must be >= 1");
  if (m < 1) throw DomainError("restricted_sum: m must be >= 1");
  spec.validate();
  // |2 pi j / n| <= pi / (2 s_bar)  <=>  |j| <= n / (4 s_bar)
  const long M = static_cast<long>(std::floor(static_cast<double>(n) / (4.0 * spec.s_bar()) + 1e-12));
  const long side = 2 * M + 1;
  const bool desc = options.reverse_order;
  CompensatedSum total = reduce_rows(side, resolve_workers(options.workers), desc, [&](long row) {
    long j = -M + (desc ? side - 1 - row : row);
    CompensatedSum acc;
    for (long c = 0; c < side; ++c) {
      long k = -M + (desc ? side - 1 - c : c);
      if (j == 0 && k == 0) continue;
      Eigen::Vector2d x(2.0 * pi * j / n, 2.0 * pi * k / n);
      double p = taylor_denominator(spec, m, x);
      if (std::fabs(p) < singular_threshold) throw_singular(j, k);
      acc.add(1.0 / p);
    }
    return acc;
  });
  SumResult result;
  result.value = total.value();
  result.compensation = total.compensation;
  result.term_count = side * side - 1;
  result.n = n;
  result.lattice = spec;
  result.kernel = m == 1 ? Kernel::f1 : (m == 2 ? Kernel::f2 : Kernel::custom);
  result.m = m;
  result.region = Region::restricted;
  return result;
}

}  // namespace lapasym::lattice
