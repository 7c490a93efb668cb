//! Spectral upper bounds and combinatorial lower bounds on mixing, evaluated
//! numerically at finite `n`, plus the supporting inequalities as testable
//! predicates.

use crate::error::{Error, Result};
use crate::exact::{DenseDistribution, GroupTable, SupportAction};
use crate::shuffles::ShuffleSpec;
use crate::spectra::{ost_eig, EigValue, EigenCatalog};
use crate::tableaux::{partitions_of, special_tableau, DimensionCounter, Partition, SpecialKind};
use crate::Q;
use num::{BigUint, One, Signed, ToPrimitive, Zero};

/// Default cap on `n` for the partition-enumeration bound.
pub const DEFAULT_PARTITION_CAP: usize = 40;

/// An eigenvalue-power bound: the raw sum `S = sum mult * eig^{2t}` over
/// non-trivial eigenvalues and the total-variation form `sqrt(S) / 2`.
#[derive(Clone, Copy, Debug)]
pub struct SpectralBound {
    pub sum: f64,
    pub tv: f64,
}

impl SpectralBound {
    fn from_sum(sum: f64) -> Self {
        SpectralBound {
            sum,
            tv: 0.5 * sum.sqrt(),
        }
    }
}

/// Sums `exp(log_term)` in descending magnitude with Kahan compensation.
/// Terms are handed over in log space so `t` of order `n log n` cannot
/// overflow intermediates.
fn compensated_exp_sum(mut log_terms: Vec<f64>) -> f64 {
    log_terms.sort_by(|a, b| b.partial_cmp(a).expect("finite log terms"));
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for lt in log_terms {
        let term = lt.exp();
        let y = term - carry;
        let fresh = sum + y;
        carry = (fresh - sum) - y;
        sum = fresh;
    }
    sum
}

fn log_power_term(log_mult: f64, eig_abs: f64, t: u64) -> Option<f64> {
    if eig_abs == 0.0 {
        return if t == 0 { Some(log_mult) } else { None };
    }
    Some(log_mult + 2.0 * t as f64 * eig_abs.ln())
}

/// Classical reversible-walk bound `4 ||P^t - pi||^2 <= sum_{i != 1} b_i^{2t}`
/// evaluated from a complete catalog, with the single trivial eigenvalue
/// excluded.
pub fn l2_upper_bound(catalog: &EigenCatalog, t: u64) -> Result<SpectralBound> {
    let mut trivial_left = 1u64;
    let mut log_terms = Vec::new();
    for entry in &catalog.entries {
        let is_trivial = match &entry.value {
            EigValue::Exact(q) => q.is_one(),
            EigValue::Approx(x) => (*x - 1.0).abs() < 1e-12,
        };
        let mut mult = entry.multiplicity;
        if is_trivial && trivial_left > 0 && mult > 0 {
            mult -= 1;
            trivial_left = 0;
        }
        if mult == 0 {
            continue;
        }
        if let Some(lt) = log_power_term((mult as f64).ln(), entry.value.to_f64().abs(), t) {
            log_terms.push(lt);
        }
    }
    if trivial_left > 0 {
        return Err(Error::InvalidSpec(
            "catalog has no trivial eigenvalue to exclude".into(),
        ));
    }
    Ok(SpectralBound::from_sum(compensated_exp_sum(log_terms)))
}

/// The relaxed per-partition one-sided transposition bound:
/// `eig(T of (1^n))^{2t} + 2 sum over lambda != (n) with non-negative
/// row-wise eigenvalue of d_lambda^2 eig(T_row)^{2t}`. Dimensions come from
/// the hook-free recursive lattice count, so `n` well past the enumeration
/// cap is fine.
pub fn relaxed_ost_bound(n: usize, t: u64, partition_cap: usize) -> Result<SpectralBound> {
    if n > partition_cap {
        return Err(Error::CapExceeded {
            what: "relaxed bound partition enumeration",
            requested: n,
            cap: partition_cap,
        });
    }
    let mut counter = DimensionCounter::new();
    let mut log_terms = Vec::new();
    let single_column = ost_eig(&special_tableau(
        &Partition::single_column(n as u32),
        SpecialKind::RowWise,
    ));
    if let Some(lt) = log_power_term(0.0, single_column.to_f64().expect("finite").abs(), t) {
        log_terms.push(lt);
    }
    for shape in partitions_of(n) {
        if shape.part(1) as usize == n {
            continue;
        }
        let row_eig = ost_eig(&special_tableau(&shape, SpecialKind::RowWise));
        if row_eig.is_negative() {
            continue;
        }
        let d = counter.count(&shape);
        let log_mult = 2.0f64.ln() + 2.0 * big_ln(&d);
        if let Some(lt) = log_power_term(log_mult, row_eig.to_f64().expect("finite"), t) {
            log_terms.push(lt);
        }
    }
    Ok(SpectralBound::from_sum(compensated_exp_sum(log_terms)))
}

/// Natural log of a big integer via (mantissa, exponent) splitting.
fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 52 {
        return x.to_f64().expect("small").ln();
    }
    let shift = bits - 52;
    let head = (x >> shift).to_f64().expect("52-bit mantissa");
    head.ln() + shift as f64 * std::f64::consts::LN_2
}

/// The exact tableau-level power sum `sum_{lambda != (n)} d_lambda
/// sum_{T in SYT(lambda)} eig(T)^{2t}` (small `n`; the quantity the relaxed
/// bound dominates).
pub fn exact_ost_power_sum(n: usize, t: u64, cap: usize) -> Result<f64> {
    let mut total = 0.0f64;
    for shape in partitions_of(n) {
        if shape.part(1) as usize == n {
            continue;
        }
        let tableaux = crate::tableaux::enumerate_syt(&shape, cap)?;
        let d = tableaux.len() as f64;
        for tab in &tableaux {
            let e = ost_eig(tab).to_f64().expect("finite");
            total += d * e.abs().powi(2 * t as i32);
        }
    }
    Ok(total)
}

/// `sum_{lambda_1 = n-k} d_lambda^2 <= C(n,k)^2 k!`, verified by enumeration.
pub fn dimension_bound_check(n: usize, k: usize, partition_cap: usize) -> Result<bool> {
    if n > partition_cap {
        return Err(Error::CapExceeded {
            what: "dimension bound enumeration",
            requested: n,
            cap: partition_cap,
        });
    }
    let mut counter = DimensionCounter::new();
    let mut total = BigUint::zero();
    for shape in partitions_of(n) {
        if shape.part(1) as usize == n - k {
            let d = counter.count(&shape);
            total += &d * &d;
        }
    }
    let factorial: BigUint = (1..=k as u32).map(BigUint::from).product();
    let binom = crate::tableaux::binomial(n, k);
    Ok(total <= &binom * &binom * factorial)
}

/// Both diagonal-sum inequalities:
/// `2 Diag <= (n-1) n - 2 (n - l1)(l1 + 1)` when `l1 >= n/2`, and
/// `2 Diag <= (l1 - 1) n` always.
pub fn diag_bound_check(shape: &Partition) -> bool {
    let n = shape.size() as i64;
    if n == 0 {
        return true;
    }
    let l1 = shape.part(1) as i64;
    let twice = 2 * shape.diag_sum();
    let always = twice <= (l1 - 1) * n;
    let top_heavy = if 2 * l1 >= n {
        twice <= (n - 1) * n - 2 * (n - l1) * (l1 + 1)
    } else {
        true
    };
    always && top_heavy
}

/// First-row eigenvalue bound: `(n + 2 Diag)/n^2 <= 1 - 2(l1+1)(n-l1)/n^2`
/// when `l1 >= 3n/4`, and `<= l1/n` always.
pub fn first_row_bound_check(shape: &Partition) -> bool {
    let n = shape.size() as i64;
    if n == 0 {
        return true;
    }
    let l1 = shape.part(1) as i64;
    let num = n + 2 * shape.diag_sum(); // n^2 times the eigenvalue
    let always = num <= l1 * n;
    let top_heavy = if 4 * l1 >= 3 * n {
        num <= n * n - 2 * (l1 + 1) * (n - l1)
    } else {
        true
    };
    always && top_heavy
}

/// Output of the exact fixed-point lower bound.
#[derive(Clone, Debug)]
pub struct FixedPointBound {
    /// `|P^t(F) - pi(F)|`, a certified lower bound on `d_TV(t)`.
    pub lower: Q,
    pub walk_probability: Q,
    pub stationary_probability: Q,
    /// Number of watched positions, `ceil(n / m)`.
    pub window: usize,
}

/// Exact lower bound on total variation at time `t` from the event "at
/// least one fixed point among the top `ceil(n/m)` positions" (for `B_n`, a
/// fixed point must also be face-up).
pub fn fixed_point_lower_bound(
    spec: &ShuffleSpec,
    t: u64,
    m: f64,
    max_order: usize,
) -> Result<FixedPointBound> {
    let n = spec.n();
    if spec.kind().group_kind().is_none() {
        return Err(Error::UnsupportedKind(spec.kind().name().into()));
    }
    if !(m > 1.0) {
        return Err(Error::InvalidProbability(format!(
            "window divisor m = {m} must exceed 1"
        )));
    }
    let window = ((n as f64 / m).ceil() as usize).clamp(1, n);
    let low = n - window + 1;
    let table = GroupTable::for_spec(spec, max_order)?;
    let in_event: Vec<bool> = table
        .elements()
        .iter()
        .map(|el| match el {
            crate::group::Element::Sym(p) => p.has_fixed_point_in(low..=n),
            crate::group::Element::Hyp(p) => (low..=n).any(|pos| p.image(pos) == pos as i32),
            crate::group::Element::Cyc { .. } => unreachable!(),
        })
        .collect();

    let action = SupportAction::new(&table, spec)?;
    let mut dist = DenseDistribution::<Q>::delta_identity(&table);
    for _ in 0..t {
        dist = dist.step(&action);
    }
    let mut walk = Q::zero();
    let mut hits = 0usize;
    for (idx, value) in dist.values().iter().enumerate() {
        if in_event[idx] {
            walk += value.clone();
            hits += 1;
        }
    }
    let stationary = Q::new(hits.into(), table.order().into());
    let lower = (walk.clone() - stationary.clone()).abs();
    Ok(FixedPointBound {
        lower,
        walk_probability: walk,
        stationary_probability: stationary,
        window,
    })
}

/// The biased time scale `t_{n,alpha}`: `N_alpha(n) / n^alpha` for
/// `alpha <= 1` and `N_alpha(n) / N_{alpha-1}(n)` for `alpha >= 1` (the two
/// branches agree at `alpha = 1`).
pub fn biased_time_scale(n: usize, alpha: f64) -> f64 {
    let power_sum = |a: f64| (1..=n).map(|j| (j as f64).powf(a)).sum::<f64>();
    if alpha <= 1.0 {
        power_sum(alpha) / (n as f64).powf(alpha)
    } else {
        power_sum(alpha) / power_sum(alpha - 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::distance_curve;
    use crate::shuffles::ShuffleKind;
    use crate::spectra::build_catalog;

    fn spec(kind: ShuffleKind, n: usize) -> ShuffleSpec {
        ShuffleSpec::unbiased(kind, n).unwrap()
    }

    #[test]
    fn l2_bound_at_time_zero_counts_dimensions() {
        let catalog = build_catalog(&spec(ShuffleKind::Ost, 4), 14).unwrap();
        let bound = l2_upper_bound(&catalog, 0).unwrap();
        assert!((bound.sum - 23.0).abs() < 1e-9); // |G| - 1
        assert!((bound.tv - 0.5 * 23.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn l2_bound_dominates_exact_tv() {
        let s = spec(ShuffleKind::Ost, 4);
        let catalog = build_catalog(&s, 14).unwrap();
        let curve = distance_curve(&s, 60, 100).unwrap();
        for point in &curve {
            let bound = l2_upper_bound(&catalog, point.t).unwrap();
            let tv = point.tv.to_f64().unwrap();
            assert!(
                tv <= bound.tv + 1e-12,
                "t = {}: tv {tv} > bound {}",
                point.t,
                bound.tv
            );
        }
    }

    #[test]
    fn l2_bound_is_monotone_for_rt() {
        let catalog = build_catalog(&spec(ShuffleKind::Rt, 5), 14).unwrap();
        let mut last = f64::INFINITY;
        for t in 0..40 {
            let bound = l2_upper_bound(&catalog, t).unwrap();
            assert!(bound.sum <= last + 1e-12);
            last = bound.sum;
        }
    }

    #[test]
    fn relaxed_bound_dominates_exact_sum() {
        for n in 2..=9 {
            for t in [0u64, 1, 2, 5, 10, 25] {
                let relaxed = relaxed_ost_bound(n, t, DEFAULT_PARTITION_CAP).unwrap();
                let exact = exact_ost_power_sum(n, t, 14).unwrap();
                assert!(
                    relaxed.sum + 1e-12 >= exact,
                    "n = {n}, t = {t}: {} < {exact}",
                    relaxed.sum
                );
            }
        }
    }

    #[test]
    fn relaxed_bound_time_zero_is_at_least_one() {
        for n in [2usize, 5, 17, 40] {
            let bound = relaxed_ost_bound(n, 0, DEFAULT_PARTITION_CAP).unwrap();
            assert!(bound.sum >= 1.0);
        }
        assert!(relaxed_ost_bound(41, 0, DEFAULT_PARTITION_CAP).is_err());
    }

    #[test]
    fn relaxed_bound_is_small_past_the_cutoff() {
        // t = n log n + 2n at n = 30: the large-partition decay dominates.
        let n = 30usize;
        let t = (n as f64 * (n as f64).ln() + 2.0 * n as f64).ceil() as u64;
        let bound = relaxed_ost_bound(n, t, DEFAULT_PARTITION_CAP).unwrap();
        assert!(bound.sum.is_finite());
        assert!(bound.sum < 8.0 * (-4.0f64).exp() + 0.05, "{}", bound.sum);
    }

    #[test]
    fn dimension_bound_enumerations() {
        for k in 0..=6 {
            assert!(dimension_bound_check(6, k, DEFAULT_PARTITION_CAP).unwrap());
        }
        assert!(dimension_bound_check(9, 4, DEFAULT_PARTITION_CAP).unwrap());
        assert!(dimension_bound_check(5, 0, DEFAULT_PARTITION_CAP).unwrap());
    }

    #[test]
    fn diag_bounds_enumerated() {
        // Single row attains equality in the top-heavy branch.
        let row = Partition::single_row(8);
        let n = 8i64;
        assert_eq!(2 * row.diag_sum(), (n - 1) * n);
        assert!(diag_bound_check(&row));

        for n in 1..=10 {
            for shape in partitions_of(n) {
                assert!(diag_bound_check(&shape), "{shape}");
            }
        }
        assert!(diag_bound_check(&Partition::single_column(9)));

        for n in 1..=12 {
            for shape in partitions_of(n) {
                assert!(first_row_bound_check(&shape), "{shape}");
            }
        }
    }

    #[test]
    fn fixed_point_bound_examples() {
        let s = spec(ShuffleKind::Ost, 5);
        // At t = 0 the identity has every fixed point.
        let b = fixed_point_lower_bound(&s, 0, 2.0, 5040).unwrap();
        assert_eq!(b.walk_probability, Q::one());
        assert_eq!(b.lower, Q::one() - b.stationary_probability.clone());

        // The union bound on the stationary mass: window positions at 1/n.
        let union = Q::new((b.window as i64).into(), 5i64.into());
        assert!(b.stationary_probability <= union);

        // Lower curve sits below the exact distance at every t.
        let curve = distance_curve(&s, 12, 5040).unwrap();
        for point in &curve {
            let b = fixed_point_lower_bound(&s, point.t, 2.0, 5040).unwrap();
            assert!(b.lower <= point.tv, "t = {}", point.t);
        }
    }

    #[test]
    fn biased_time_scale_examples() {
        assert!((biased_time_scale(10, 0.0) - 10.0).abs() < 1e-12);
        assert!((biased_time_scale(10, 1.0) - 5.5).abs() < 1e-12);
        // alpha = -1 at large n behaves like H_n * n.
        let n = 10_000usize;
        let got = biased_time_scale(n, -1.0);
        let hn: f64 = (1..=n).map(|j| 1.0 / j as f64).sum();
        assert!((got - hn * n as f64).abs() / got < 1e-12);
    }
}
