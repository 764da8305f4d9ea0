#include "cobk/batch.hpp"

#include <array>
#include <exception>

#include "cobk/snf_kernel.hpp"

namespace cobk {

namespace {

using detail::Checked64;

std::int64_t det_small(const Checked64* a, std::size_t n) {
  if (n == 1) return a[0].v;
  if (n == 2) return (a[0] * a[3] - a[1] * a[2]).v;
  return (a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
          a[2] * (a[3] * a[7] - a[4] * a[6]))
      .v;
}

struct SweepLocal {
  std::uint64_t failures = 0, transform_failures = 0;
  std::uint64_t first = UINT64_MAX;
};

void sweep_one(std::uint64_t index, std::size_t rows, std::size_t cols, int bound, DiagonalCheck check,
               bool verify, SweepLocal& out) {
  const std::size_t n = rows * cols;
  std::array<std::int64_t, 9> raw{};
  std::array<Checked64, 9> m{}, s{};
  std::uint64_t r = index;
  const std::uint64_t base = 2 * bound + 1;
  for (std::size_t k = 0; k < n; ++k) {
    raw[k] = std::int64_t(r % base) - bound;
    r /= base;
    m[k] = s[k] = raw[k];
  }
  std::array<Checked64, 9> u{}, v{};
  for (std::size_t i = 0; i < rows; ++i) u[i * rows + i] = 1;
  for (std::size_t i = 0; i < cols; ++i) v[i * cols + i] = 1;
  detail::snf_in_place(s.data(), rows, cols, verify ? u.data() : nullptr, verify ? v.data() : nullptr);
  std::array<std::int64_t, 3> diag{};
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) diag[i] = s[i * cols + i].v;
  bool ok = check(raw.data(), rows, cols, diag.data());
  if (!ok) ++out.failures;
  if (verify) {
    bool t_ok = std::abs(det_small(u.data(), rows)) == 1 && std::abs(det_small(v.data(), cols)) == 1;
    for (std::size_t i = 0; i < rows && t_ok; ++i)
      for (std::size_t j = 0; j < cols && t_ok; ++j) {
        Checked64 acc = 0;
        for (std::size_t a = 0; a < rows; ++a)
          for (std::size_t b = 0; b < cols; ++b) acc = acc + u[i * rows + a] * m[a * cols + b] * v[b * cols + j];
        t_ok = acc == s[i * cols + j];
      }
    if (!t_ok) {
      ++out.transform_failures;
      ok = false;
    }
  }
  if (!ok && index < out.first) out.first = index;
}

}  // namespace

SnfSweep snf_sweep(std::size_t rows, std::size_t cols, int bound, DiagonalCheck check,
                   bool verify_transforms, bool parallel) {
  if (rows < 1 || cols < 1 || rows > 3 || cols > 3 || bound < 0)
    fail(ErrorCode::InvalidArgument, "sweep supports shapes up to 3x3");
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < rows * cols; ++k) total *= std::uint64_t(2 * bound + 1);

  SweepLocal sum;
  if (parallel) {
#pragma omp parallel
    {
      SweepLocal local;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < std::int64_t(total); ++i) {
        try {
          sweep_one(std::uint64_t(i), rows, cols, bound, check, verify_transforms, local);
        } catch (const Error&) {
          ++local.failures;
          local.first = std::min(local.first, std::uint64_t(i));
        }
      }
#pragma omp critical
      {
        sum.failures += local.failures;
        sum.transform_failures += local.transform_failures;
        sum.first = std::min(sum.first, local.first);
      }
    }
  } else {
    for (std::uint64_t i = 0; i < total; ++i) {
      try {
        sweep_one(i, rows, cols, bound, check, verify_transforms, sum);
      } catch (const Error&) {
        ++sum.failures;
        sum.first = std::min(sum.first, i);
      }
    }
  }

  SnfSweep out;
  out.matrices = total;
  out.failures = sum.failures;
  out.transform_failures = sum.transform_failures;
  if (sum.first != UINT64_MAX) {
    std::uint64_t r = sum.first;
    for (std::size_t k = 0; k < rows * cols; ++k) {
      out.first_failure.push_back(std::int64_t(r % std::uint64_t(2 * bound + 1)) - bound);
      r /= std::uint64_t(2 * bound + 1);
    }
  }
  return out;
}

std::vector<InvariantTuple> normal_forms(const std::vector<FormalSum>& sums, const Coefficients& g,
                                         bool parallel) {
  std::vector<InvariantTuple> out(sums.size());
  if (parallel) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < std::int64_t(sums.size()); ++i) {
      try {
        out[i] = normal_form(sums[i], g);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (std::size_t i = 0; i < sums.size(); ++i) out[i] = normal_form(sums[i], g);
  }
  return out;
}

RoitmanTrial roitman_trial(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(index),
                    std::uint32_t(index >> 32)};
  std::mt19937_64 rng(seq);
  RoitmanTrial t;
  t.symplectic_planes = index % 4 == 0;
  t.q = t.symplectic_planes ? 2 : 2 + rng() % 2;
  t.blocks = 1 + rng() % 3;
  GradedSpace space;
  std::vector<AlternatingForm> forms;
  for (std::size_t j = 0; j < t.blocks; ++j) {
    if (t.symplectic_planes) {
      space.dims.push_back(2);
      forms.push_back(AlternatingForm::symplectic(1));
    } else {
      std::size_t d = t.q + rng() % (5 - t.q);
      space.dims.push_back(d);
      forms.push_back(AlternatingForm::random(d, t.q, rng));
    }
  }
  t.dim_v = space.total();
  AlternatingForm omega = summed_pullback(space, forms);
  Subspace w = random_isotropic(omega, rng);
  t.dim_w = w.dim();
  t.isotropic = is_isotropic(w, omega);
  if (t.isotropic) {
    BoundCheck b = check_bound(space, forms, w);
    t.holds = b.holds;
    t.slack = b.slack;
  }
  return t;
}

std::vector<RoitmanTrial> roitman_trials(std::uint64_t seed, std::size_t count, bool parallel) {
  std::vector<RoitmanTrial> out(count);
  if (parallel) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < std::int64_t(count); ++i) {
      try {
        out[i] = roitman_trial(seed, std::uint64_t(i));
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (std::size_t i = 0; i < count; ++i) out[i] = roitman_trial(seed, i);
  }
  return out;
}

}  // namespace cobk
