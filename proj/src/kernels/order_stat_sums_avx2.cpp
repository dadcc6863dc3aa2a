// Compiled with -mavx2 -mfma; only called after a runtime CPU check.
#include <immintrin.h>

#include <cmath>
#include <cstdint>

#include "wcentropy/kernels/order_stat_sums.hpp"

namespace wcentropy::kernels::avx2 {

namespace {

// log(x) for positive normal x. x = m 2^e with m in [sqrt(1/2), sqrt(2)),
// log m = 2 atanh(s), s = (m-1)/(m+1), expanded to s^21.
inline __m256d log_pd(__m256d x) noexcept {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);

  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

  // Unbiased exponent via the magic-number int64 -> double conversion.
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  const __m256d magic = _mm256_set1_pd(4503599627370496.0);  // 2^52
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(magic))), magic);
  e = _mm256_sub_pd(e, _mm256_set1_pd(1023.0));

  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d z = _mm256_mul_pd(s, s);

  // 1/3 + z/5 + z^2/7 + ... + z^9/21
  __m256d p = _mm256_set1_pd(1.0 / 21.0);
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 19.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 17.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 15.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 13.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 11.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 9.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 7.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 5.0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.0 / 3.0));

  const __m256d two_s = _mm256_add_pd(s, s);
  const __m256d tail = _mm256_mul_pd(_mm256_mul_pd(two_s, z), p);

  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d lo = _mm256_fmadd_pd(e, ln2_lo, tail);
  return _mm256_fmadd_pd(e, ln2_hi, _mm256_add_pd(two_s, lo));
}

// Lane-wise two-sum accumulator; branch-free.
struct Acc4 {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  void add(__m256d v) noexcept {
    const __m256d t = _mm256_add_pd(sum, v);
    const __m256d vv = _mm256_sub_pd(t, sum);
    const __m256d err = _mm256_add_pd(_mm256_sub_pd(sum, _mm256_sub_pd(t, vv)), _mm256_sub_pd(v, vv));
    comp = _mm256_add_pd(comp, err);
    sum = t;
  }
};

// Scalar two-sum accumulator for lane reduction and remainders.
struct Acc1 {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) noexcept {
    const double t = sum + v;
    const double vv = t - sum;
    comp += (sum - (t - vv)) + (v - vv);
    sum = t;
  }

  void add(const Acc4& a) noexcept {
    alignas(32) double s[4];
    alignas(32) double c[4];
    _mm256_store_pd(s, a.sum);
    _mm256_store_pd(c, a.comp);
    for (int k = 0; k < 4; ++k) add(s[k]);
    comp += (c[0] + c[1]) + (c[2] + c[3]);
  }

  double value() const noexcept { return sum + comp; }
};

}  // namespace

void log4(const double* x, double* out) noexcept {
  _mm256_storeu_pd(out, log_pd(_mm256_loadu_pd(x)));
}

OrderStatSums order_stat_sums(std::span<const double> psi) noexcept {
  const std::size_t n = psi.size();
  if (n < 2) return {};
  const double* data = psi.data();
  const double first_s = data[0];
  const double last_s = data[n - 1];

  Acc4 below4, above4;
  const __m256d first = _mm256_set1_pd(first_s);
  const __m256d last = _mm256_set1_pd(last_s);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v = _mm256_loadu_pd(data + k);
    below4.add(_mm256_sub_pd(last, v));
    above4.add(_mm256_sub_pd(v, first));
  }
  Acc1 below, above;
  below.add(below4);
  above.add(above4);
  for (; k < n; ++k) {
    below.add(last_s - data[k]);
    above.add(data[k] - first_s);
  }

  Acc4 wce4, wcre4;
  const __m256d nv = _mm256_set1_pd(static_cast<double>(n));
  __m256d up = _mm256_setr_pd(1.0, 2.0, 3.0, 4.0);
  const __m256d step = _mm256_set1_pd(4.0);
  std::size_t i = 1;
  for (; i + 4 <= n; i += 4) {
    const __m256d gap = _mm256_sub_pd(_mm256_loadu_pd(data + i), _mm256_loadu_pd(data + i - 1));
    const __m256d down = _mm256_sub_pd(nv, up);
    wce4.add(_mm256_mul_pd(_mm256_mul_pd(up, gap), log_pd(up)));
    wcre4.add(_mm256_mul_pd(_mm256_mul_pd(down, gap), log_pd(down)));
    up = _mm256_add_pd(up, step);
  }
  Acc1 wce, wcre;
  wce.add(wce4);
  wcre.add(wcre4);
  for (; i < n; ++i) {
    const double gap = data[i] - data[i - 1];
    const double u = static_cast<double>(i);
    const double d = static_cast<double>(n - i);
    wce.add(u * gap * std::log(u));
    wcre.add(d * gap * std::log(d));
  }
  return {below.value(), above.value(), wce.value(), wcre.value()};
}

}  // namespace wcentropy::kernels::avx2
