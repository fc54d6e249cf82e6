// Copyright 2026 The wreathgrowth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wreath/wreath_series.hpp"

#include <map>
#include <tuple>

#include "wreath/tree_group.hpp"
#include "wreath/tree_orbits.hpp"

namespace wreath {

namespace {

TruncatedSeries z_power(Truncation t, std::size_t k) {
  return TruncatedSeries::monomial(t, k);
}

// F_T(z^2 s, z^2 (s - 1)) for a series s with s(0) = 1.
TruncatedSeries tree_series_at(unsigned d, const TruncatedSeries& s) {
  const Truncation t = s.truncation();
  const TruncatedSeries one = TruncatedSeries::one(t);
  return parry_fixed_point(d, s.shifted(2), (s - one).shifted(2));
}

// Cached powers p^0..p^k.
class PowerTable {
 public:
  explicit PowerTable(TruncatedSeries base)
      : powers_{TruncatedSeries::one(base.truncation())}, base_(std::move(base)) {}
  const TruncatedSeries& operator()(std::size_t k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * base_);
    return powers_[k];
  }

 private:
  std::vector<TruncatedSeries> powers_;
  TruncatedSeries base_;
};

// sum_{r >= 1} phi(r)/r sum_{s >= 1} weight(s)/s g(z^r)^s for g with g(0) = 0.
template <typename Weight>
TruncatedSeries necklace_sum(const TruncatedSeries& g, Weight weight) {
  const Truncation t = g.truncation();
  const std::size_t n = t.degree;
  const std::size_t v = std::max<std::size_t>(g.valuation(), 1);
  TruncatedSeries out(t);
  for (std::size_t r = 1; r * v <= n; ++r) {
    const TruncatedSeries gr = substitute_power(g, static_cast<unsigned>(r));
    TruncatedSeries inner(t);
    TruncatedSeries p = TruncatedSeries::one(t);
    for (std::size_t s = 1; r * s * v <= n; ++s) {
      p = p * gr;
      const Rational w = weight(static_cast<unsigned>(s));
      if (w != 0) inner += p * (w / Rational(static_cast<long>(s)));
    }
    Rational coeff(euler_phi(static_cast<unsigned>(r)),
                   static_cast<unsigned long>(r));
    coeff.canonicalize();
    out += inner * coeff;
  }
  return out;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

WreathSpec::WreathSpec(GroupSeriesInput lamp_in, TreeGroupSpec base_in,
                       Truncation t)
    : lamp(lamp_in.at(t)), base(base_in), degree(t) {
  validate();
}

void WreathSpec::validate() const {
  base.validate();
  if (lamp.truncation() != degree) {
    throw SeriesError(SeriesErrc::kDegreeMismatch,
                      "wreath spec: lamp series degree differs from spec degree");
  }
}

TruncatedSeries f_E(const WreathSpec& spec) {
  const int d = spec.base.tree_degree();
  if (d < 2) throw UnsupportedSpec("f_E: needs 2M+N >= 2");
  const TruncatedSeries& s = spec.lamp.sgs;
  return pow(tree_series_at(static_cast<unsigned>(d), s),
             static_cast<unsigned>(d - 2)) *
         s.shifted(1);
}

TruncatedSeries conjrep_k_series(const WreathSpec& spec, unsigned k) {
  if (k == 0) throw std::invalid_argument("conjrep_k_series: k must be >= 1");
  const Rational count(cyc_reduced_count(spec.base, k));
  if (k > spec.degree.degree) return TruncatedSeries::zero(spec.degree);
  return pow(f_E(spec), k) * count;
}

TruncatedSeries cgs_A(const WreathSpec& spec) {
  const TruncatedSeries fe = f_E(spec);
  return necklace_sum(fe, [&spec](unsigned s) {
    return Rational(cyc_reduced_count(spec.base, s));
  });
}

TruncatedSeries cgs_torsion_cursor(const WreathSpec& spec) {
  const int n = spec.base.torsion_count;
  if (n == 0) return TruncatedSeries::zero(spec.degree);
  const int d = spec.base.tree_degree();
  const TruncatedSeries& c = spec.lamp.cgs;
  return pow(tree_series_at(static_cast<unsigned>(d), c),
             static_cast<unsigned>(d - 1)) *
         c.shifted(1) * Rational(n);
}

TruncatedSeries cgs_trivial_cursor(const WreathSpec& spec) {
  const Truncation t = spec.degree;
  const std::size_t max_edges = t.degree / 2;
  // (edges, leaves, non-leaves) -> weight of z^{2E} (c-1)^l c^n, and
  // (edges, leaf pairs, non-leaf pairs) -> weight of z^{2E} (c2-1)^l c2^n.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> free_w;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> fixed_w;
  for (const TreeOrbitRep& rep : tree_orbit_representatives(spec.base, max_edges)) {
    const auto key =
        std::make_tuple(rep.edge_count(), rep.leaf_count, rep.nonleaf_count);
    if (!rep.is_symmetric()) {
      free_w[key] += 1;
      continue;
    }
    free_w[key] += Rational(1, 2);
    // The reflection pairs up vertices, leaves with leaves.
    fixed_w[std::make_tuple(rep.edge_count(), rep.leaf_count / 2,
                            rep.nonleaf_count / 2)] += Rational(1, 2);
  }
  const TruncatedSeries& c = spec.lamp.cgs;
  const TruncatedSeries one = TruncatedSeries::one(t);
  const TruncatedSeries c2 = substitute_power(c, 2);
  PowerTable leaf(c - one), inner(c), leaf2(c2 - one), inner2(c2);
  TruncatedSeries out = one;
  for (const auto& [key, w] : free_w) {
    const auto [e, l, n] = key;
    out += (leaf(l) * inner(n)).shifted(2 * e) * w;
  }
  for (const auto& [key, w] : fixed_w) {
    const auto [e, l, n] = key;
    out += (leaf2(l) * inner2(n)).shifted(2 * e) * w;
  }
  return out;
}

TruncatedSeries cgs_total(const WreathSpec& spec) {
  if (spec.base.tree_degree() == 1) {
    return cgs_closed_form_C2(spec.lamp, spec.degree);
  }
  return cgs_A(spec) + cgs_torsion_cursor(spec) + cgs_trivial_cursor(spec);
}

TruncatedSeries cgs_closed_form_C2(const GroupSeriesInput& lamp_in,
                                   Truncation t) {
  const GroupSeriesInput lamp = lamp_in.at(t);
  const TruncatedSeries& c = lamp.cgs;
  const TruncatedSeries one = TruncatedSeries::one(t);
  const TruncatedSeries cm1 = c - one;
  const TruncatedSeries burnside = cm1 * cm1 + substitute_power(c, 2) - one;
  return c + c.shifted(1) + burnside.shifted(2) * Rational(1, 2);
}

TruncatedSeries cgs_closed_form_Z(const GroupSeriesInput& lamp_in, Truncation t) {
  const GroupSeriesInput lamp = lamp_in.at(t);
  const TruncatedSeries& s = lamp.sgs;
  const TruncatedSeries& c = lamp.cgs;
  const TruncatedSeries one = TruncatedSeries::one(t);
  const TruncatedSeries type_a =
      necklace_sum(s.shifted(1), [](unsigned) { return Rational(1); }) *
      Rational(2);
  const TruncatedSeries cm1 = c - one;
  const TruncatedSeries tail =
      (cm1 * cm1).shifted(2) * reciprocal(one - c.shifted(2));
  return type_a + c + tail;
}

TruncatedSeries cgs_closed_form_C2C2(const GroupSeriesInput& lamp_in,
                                     Truncation t) {
  const GroupSeriesInput lamp = lamp_in.at(t);
  const TruncatedSeries& s = lamp.sgs;
  const TruncatedSeries& c = lamp.cgs;
  const TruncatedSeries one = TruncatedSeries::one(t);
  // Type A: sum_r phi(r)/r sum_s z^{2rs} s(z^r)^{2s} / s.
  const TruncatedSeries type_a =
      necklace_sum((s * s).shifted(2), [](unsigned) { return Rational(1); });
  const TruncatedSeries torsion = c.shifted(1) * (one - z_power(t, 2)) *
                                  reciprocal(one - c.shifted(2)) * Rational(2);
  const TruncatedSeries c2 = substitute_power(c, 2);
  const TruncatedSeries cm1 = c - one;
  const TruncatedSeries trivial =
      c +
      ((one + c.shifted(2)) * cm1 * cm1).shifted(2) *
          reciprocal(one - (c * c).shifted(4)) +
      (c2 - one).shifted(2) * reciprocal(one - c2.shifted(4));
  return type_a + torsion + trivial;
}

TruncatedSeries cgs_closed_form_lamplighter(Truncation t) {
  const TruncatedSeries one = TruncatedSeries::one(t);
  const TruncatedSeries z = z_power(t, 1);
  const TruncatedSeries z2 = z_power(t, 2);
  const TruncatedSeries type_a =
      necklace_sum(z * (one + z), [](unsigned) { return Rational(1); }) *
      Rational(2);
  return type_a + one + z +
         z_power(t, 4) * reciprocal(one - z2 * (one + z));
}

std::optional<TruncatedSeries> cgs_closed_form(const WreathSpec& spec) {
  const auto [m, n] = std::pair(spec.base.free_rank, spec.base.torsion_count);
  if (m == 0 && n == 1) return cgs_closed_form_C2(spec.lamp, spec.degree);
  if (m == 1 && n == 0) return cgs_closed_form_Z(spec.lamp, spec.degree);
  if (m == 0 && n == 2) return cgs_closed_form_C2C2(spec.lamp, spec.degree);
  return std::nullopt;
}

RcReport rc_report(const WreathSpec& spec, double tol, std::size_t cgs_window,
                   const std::optional<TruncatedSeries>& sgs_prefix,
                   std::size_t sgs_window) {
  RcReport rep;
  const int d = spec.base.tree_degree();
  const TruncatedSeries fe = f_E(spec);
  rep.t_formula = find_unit_root(fe * Rational(d - 1), tol);
  const TruncatedSeries cgs = cgs_total(spec);
  rep.cgs_window = cgs_window;
  rep.t_cgs_estimate = root_test_estimate(cgs, cgs_window);
  rep.t_cgs_extrapolated = root_test_extrapolated(cgs, cgs_window);
  if (sgs_prefix) {
    rep.sgs_window = sgs_window;
    rep.t_sgs_estimate = root_test_estimate(*sgs_prefix, sgs_window);
    rep.t_sgs_extrapolated = root_test_extrapolated(*sgs_prefix, sgs_window);
  }
  return rep;
}

std::vector<AsymptoticRow> lamplighter_asymptotic_check(std::size_t degree,
                                                        unsigned m_lo,
                                                        unsigned m_hi) {
  if (m_hi > degree || m_lo == 0 || m_lo > m_hi) {
    throw std::invalid_argument(
        "asymptotics: need 1 <= m_lo <= m_hi <= degree");
  }
  const TruncatedSeries cgs = cgs_closed_form_lamplighter({degree});
  constexpr mp_bitcnt_t kBits = 512;
  mpf_class phi(5, kBits);
  phi = (1 + sqrt(phi)) / 2;
  std::vector<AsymptoticRow> rows;
  for (unsigned m = m_lo; m <= m_hi; ++m) {
    AsymptoticRow row;
    row.m = m;
    row.coeff = cgs[m].get_num();
    mpf_class est(0, kBits);
    mpf_pow_ui(est.get_mpf_t(), phi.get_mpf_t(), m);
    est = est * 2 / m;
    const mpf_class ratio = mpf_class(row.coeff, kBits) / est;
    row.estimate = est.get_d();
    row.ratio = ratio.get_d();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace wreath
