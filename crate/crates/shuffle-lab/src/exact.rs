//! Exact distribution evolution on small groups: convolution steps, total
//! variation and separation distances, mixing times, transition matrices and
//! brute-force spectra. This module is the master oracle against which every
//! closed-form eigenvalue catalog is checked.

use crate::error::{Error, Result};
use crate::group::{
    enumerate_hyperoctahedral, enumerate_symmetric, Element, GroupKind,
};
use crate::shuffles::ShuffleSpec;
use crate::Q;
use num::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use std::ops::AddAssign;

/// Default cap on the group order for dense-matrix work (covers `S_7`).
pub const DEFAULT_SPECTRUM_CAP: usize = 5040;

/// Eigenvalue comparison / deduplication tolerance for the float oracle.
pub const SPECTRUM_TOL: f64 = 1e-9;

/// A finite group enumerated in its canonical order.
pub struct GroupTable {
    elements: Vec<Element>,
}

impl GroupTable {
    /// Enumerates the group a spec walks on; errors when its order exceeds
    /// `max_order`.
    pub fn for_spec(spec: &ShuffleSpec, max_order: usize) -> Result<GroupTable> {
        let n = spec.n();
        let order = group_order(spec);
        if order > max_order as u128 {
            return Err(Error::CapExceeded {
                what: "group enumeration",
                requested: order.min(usize::MAX as u128) as usize,
                cap: max_order,
            });
        }
        let elements = match spec.kind().group_kind() {
            Some(GroupKind::Symmetric) => enumerate_symmetric(n, n)?
                .into_iter()
                .map(Element::Sym)
                .collect(),
            Some(GroupKind::Hyperoctahedral) => enumerate_hyperoctahedral(n, n)?
                .into_iter()
                .map(Element::Hyp)
                .collect(),
            None => (0..n as u32)
                .map(|value| Element::Cyc {
                    n: n as u32,
                    value,
                })
                .collect(),
        };
        Ok(GroupTable { elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Element {
        &self.elements[idx]
    }

    /// Index in canonical order; the enumeration is sorted, so this is a
    /// binary search.
    pub fn index_of(&self, el: &Element) -> Option<usize> {
        self.elements.binary_search(el).ok()
    }

    pub fn identity_index(&self) -> usize {
        0
    }
}

/// Exact group order of the walk's state space.
pub fn group_order(spec: &ShuffleSpec) -> u128 {
    let n = spec.n() as u128;
    match spec.kind().group_kind() {
        Some(GroupKind::Symmetric) => (1..=n).product(),
        Some(GroupKind::Hyperoctahedral) => (1..=n).product::<u128>() << n,
        None => n,
    }
}

/// Scalars a dense distribution can hold: exact rationals or floats.
/// `Signed` brings the full `Num` operator set along.
pub trait Scalar: Clone + PartialOrd + Signed + FromPrimitive + AddAssign<Self> {
    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for Q {
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

/// The action of a shuffle's support on the group: for each support element
/// `s` with mass `p`, the index map `h -> index(s o h)`.
pub struct SupportAction<T> {
    maps: Vec<(Vec<usize>, T)>,
}

impl SupportAction<Q> {
    pub fn new(table: &GroupTable, spec: &ShuffleSpec) -> Result<Self> {
        let support = spec.support()?;
        Self::build(table, support)
    }
}

impl SupportAction<f64> {
    pub fn new_f64(table: &GroupTable, spec: &ShuffleSpec) -> Result<Self> {
        let support = spec.support_f64()?;
        Self::build(table, support)
    }
}

impl<T> SupportAction<T> {
    fn build(table: &GroupTable, support: Vec<(Element, T)>) -> Result<Self> {
        let mut maps = Vec::with_capacity(support.len());
        for (s, p) in support {
            let map = table
                .elements()
                .iter()
                .map(|h| {
                    let g = s.compose(h)?;
                    table
                        .index_of(&g)
                        .ok_or_else(|| Error::SizeMismatch(format!("{g} missing from table")))
                })
                .collect::<Result<Vec<usize>>>()?;
            maps.push((map, p));
        }
        Ok(SupportAction { maps })
    }
}

/// An exact probability vector over all group elements, indexed by the
/// canonical group order.
#[derive(Clone, PartialEq, Debug)]
pub struct DenseDistribution<T> {
    values: Vec<T>,
}

impl<T: Scalar> DenseDistribution<T> {
    /// Point mass at the identity.
    pub fn delta_identity(table: &GroupTable) -> Self {
        let mut values = vec![T::zero(); table.order()];
        values[table.identity_index()] = T::one();
        DenseDistribution { values }
    }

    pub fn uniform(table: &GroupTable) -> Self {
        let p = T::one() / T::from_usize(table.order()).expect("order fits");
        DenseDistribution {
            values: vec![p; table.order()],
        }
    }

    pub fn from_values(values: Vec<T>) -> Self {
        DenseDistribution { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn mass(&self) -> T {
        let mut total = T::zero();
        for v in &self.values {
            total += v.clone();
        }
        total
    }

    /// One exact convolution step `P * self`.
    pub fn step(&self, action: &SupportAction<T>) -> Self {
        let mut out = vec![T::zero(); self.values.len()];
        for (map, p) in &action.maps {
            for (h, v) in self.values.iter().enumerate() {
                if !v.is_zero() {
                    out[map[h]] += p.clone() * v.clone();
                }
            }
        }
        DenseDistribution { values: out }
    }

    /// Half the l1 distance.
    pub fn tv_distance(&self, other: &Self) -> T {
        let mut total = T::zero();
        for (a, b) in self.values.iter().zip(&other.values) {
            total += (a.clone() - b.clone()).abs();
        }
        total / T::from_u32(2).expect("2")
    }

    /// `max_h (1 - |G| * self(h))`, the separation from uniform.
    pub fn sep_distance(&self) -> T {
        let order = T::from_usize(self.values.len()).expect("order fits");
        let mut worst = T::zero();
        for v in &self.values {
            let gap = T::one() - order.clone() * v.clone();
            if gap > worst {
                worst = gap;
            }
        }
        worst
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DistanceKind {
    Tv,
    Sep,
}

/// One row of an exact distance curve.
#[derive(Clone, Debug)]
pub struct CurvePoint {
    pub t: u64,
    pub tv: Q,
    pub sep: Q,
}

/// Exact `d_TV` / `d_sep` trajectory from the identity for `t = 0..=t_max`.
pub fn distance_curve(spec: &ShuffleSpec, t_max: u64, max_order: usize) -> Result<Vec<CurvePoint>> {
    let table = GroupTable::for_spec(spec, max_order)?;
    let action = SupportAction::new(&table, spec)?;
    let uniform = DenseDistribution::<Q>::uniform(&table);
    let mut dist = DenseDistribution::<Q>::delta_identity(&table);
    let mut out = Vec::with_capacity(t_max as usize + 1);
    for t in 0..=t_max {
        out.push(CurvePoint {
            t,
            tv: dist.tv_distance(&uniform),
            sep: dist.sep_distance(),
        });
        if t < t_max {
            dist = dist.step(&action);
            debug_assert!(dist.mass().is_one(), "convolution must preserve mass");
        }
    }
    Ok(out)
}

/// Smallest `t <= t_max` with the chosen distance at most `eps`, if any.
pub fn mixing_time(
    spec: &ShuffleSpec,
    eps: &Q,
    distance: DistanceKind,
    t_max: u64,
    max_order: usize,
) -> Result<Option<u64>> {
    let table = GroupTable::for_spec(spec, max_order)?;
    let action = SupportAction::new(&table, spec)?;
    let uniform = DenseDistribution::<Q>::uniform(&table);
    let mut dist = DenseDistribution::<Q>::delta_identity(&table);
    for t in 0..=t_max {
        let d = match distance {
            DistanceKind::Tv => dist.tv_distance(&uniform),
            DistanceKind::Sep => dist.sep_distance(),
        };
        if d <= *eps {
            return Ok(Some(t));
        }
        if t < t_max {
            dist = dist.step(&action);
        }
    }
    Ok(None)
}

/// Row-stochastic transition matrix with exact entries: `P(g, h) = pmf(h g^{-1})`.
pub fn transition_matrix(table: &GroupTable, spec: &ShuffleSpec) -> Result<Vec<Vec<Q>>> {
    let order = table.order();
    let mut m = vec![vec![Q::zero(); order]; order];
    for (s, p) in spec.support()? {
        for (g, row) in m.iter_mut().enumerate() {
            // h g^{-1} = s  <=>  h = s o g.
            let h = s.compose(table.element(g))?;
            let idx = table.index_of(&h).expect("closure");
            row[idx] += p.clone();
        }
    }
    Ok(m)
}

/// Transition matrix in floats (usable with real-valued weights).
pub fn transition_matrix_f64(
    table: &GroupTable,
    spec: &ShuffleSpec,
) -> Result<nalgebra::DMatrix<f64>> {
    let order = table.order();
    let mut m = nalgebra::DMatrix::<f64>::zeros(order, order);
    for (s, p) in spec.support_f64()? {
        for g in 0..order {
            let h = s.compose(table.element(g))?;
            let idx = table.index_of(&h).expect("closure");
            m[(g, idx)] += p;
        }
    }
    Ok(m)
}

/// All `|G|` real eigenvalues of a reversible spec's transition matrix,
/// sorted descending. Reversible plus uniform stationarity makes the matrix
/// symmetric, hence the spectrum real.
pub fn brute_force_spectrum(spec: &ShuffleSpec, max_order: usize) -> Result<Vec<f64>> {
    if spec.is_rational() {
        if !spec.is_reversible()? {
            let bad = spec
                .support()?
                .into_iter()
                .find(|(el, p)| spec.pmf(&el.inverse()).map(|q| q != *p).unwrap_or(true))
                .map(|(el, _)| el.to_string())
                .unwrap_or_default();
            return Err(Error::NonReversible(bad));
        }
    } else {
        // Real-weight specs: check reversibility on the float support.
        let support = spec.support_f64()?;
        let lookup: std::collections::BTreeMap<&Element, f64> =
            support.iter().map(|(el, p)| (el, *p)).collect();
        for (el, p) in &support {
            let q = lookup.get(&el.inverse()).copied().unwrap_or(0.0);
            if (q - p).abs() > 1e-15 {
                return Err(Error::NonReversible(el.to_string()));
            }
        }
    }
    let table = GroupTable::for_spec(spec, max_order)?;
    let m = transition_matrix_f64(&table, spec)?;
    let asym = (&m - m.transpose()).abs().max();
    debug_assert!(asym < 1e-14, "reversible matrix must be symmetric");
    let eig = nalgebra::SymmetricEigen::new(m);
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.partial_cmp(a).expect("real eigenvalues"));
    Ok(values)
}

/// Collapses a sorted spectrum into `(value, multiplicity)` groups at the
/// given absolute tolerance.
pub fn dedup_spectrum(sorted: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &v in sorted {
        match out.last_mut() {
            Some((rep, count)) if (*rep - v).abs() <= tol => *count += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Permutation;
    use crate::shuffles::ShuffleKind;
    use crate::{q_int, q_ratio};
    use num::One;

    fn spec(kind: ShuffleKind, n: usize) -> ShuffleSpec {
        ShuffleSpec::unbiased(kind, n).unwrap()
    }

    fn table(s: &ShuffleSpec) -> GroupTable {
        GroupTable::for_spec(s, DEFAULT_SPECTRUM_CAP).unwrap()
    }

    #[test]
    fn delta_identity_examples() {
        for s in [
            spec(ShuffleKind::Ost, 3),
            spec(ShuffleKind::BRt, 2),
            spec(ShuffleKind::CyclicSimple, 5),
        ] {
            let t = table(&s);
            let d = DenseDistribution::<Q>::delta_identity(&t);
            assert!(d.values()[0].is_one());
            assert!(t.element(0).is_identity());
            assert_eq!(d.mass(), Q::one());
        }
    }

    #[test]
    fn step_examples() {
        // P * delta_e = P.
        let s = spec(ShuffleKind::Ost, 3);
        let t = table(&s);
        let action = SupportAction::new(&t, &s).unwrap();
        let one_step = DenseDistribution::delta_identity(&t).step(&action);
        for (el, p) in s.support().unwrap() {
            let idx = t.index_of(&el).unwrap();
            assert_eq!(one_step.values()[idx], p);
        }

        // The uniform distribution is stationary.
        let uniform = DenseDistribution::<Q>::uniform(&t);
        assert_eq!(uniform.step(&action), uniform);
    }

    #[test]
    fn convolution_agrees_with_matrix_square() {
        let s = spec(ShuffleKind::Ost, 3);
        let t = table(&s);
        let action = SupportAction::new(&t, &s).unwrap();
        let two_steps = DenseDistribution::delta_identity(&t)
            .step(&action)
            .step(&action);

        let m = transition_matrix(&t, &s).unwrap();
        let order = t.order();
        let e = t.identity_index();
        for h in 0..order {
            let mut total = Q::zero();
            for a in 0..order {
                total += &m[e][a] * &m[a][h];
            }
            assert_eq!(two_steps.values()[h], total);
        }
    }

    #[test]
    fn tv_and_sep_examples() {
        let s = spec(ShuffleKind::Ost, 3);
        let t = table(&s);
        let uniform = DenseDistribution::<Q>::uniform(&t);
        let delta = DenseDistribution::<Q>::delta_identity(&t);
        assert_eq!(uniform.tv_distance(&uniform), Q::zero());
        assert_eq!(delta.tv_distance(&uniform), q_ratio(5, 6));
        assert_eq!(uniform.sep_distance(), Q::zero());
        assert_eq!(delta.sep_distance(), Q::one());
    }

    #[test]
    fn cyclic_five_table_rows() {
        let s = spec(ShuffleKind::CyclicSimple, 5);
        let curve = distance_curve(&s, 4, 100).unwrap();
        assert_eq!(curve[3].tv, q_ratio(7, 20)); // 0.35
        assert_eq!(curve[4].sep, q_ratio(11, 16)); // 0.6875
    }

    #[test]
    fn distances_are_monotone_and_sep_dominates_tv() {
        for s in [
            spec(ShuffleKind::Ost, 4),
            spec(ShuffleKind::Rt, 4),
            spec(ShuffleKind::BOst, 3),
            spec(ShuffleKind::CyclicLazy, 5),
        ] {
            let curve = distance_curve(&s, 15, DEFAULT_SPECTRUM_CAP).unwrap();
            for w in curve.windows(2) {
                assert!(w[1].tv <= w[0].tv, "{s}");
                assert!(w[1].sep <= w[0].sep, "{s}");
            }
            for p in &curve {
                assert!(p.tv <= p.sep, "{s} at t = {}", p.t);
            }
        }
    }

    #[test]
    fn mixing_time_examples() {
        let s = spec(ShuffleKind::Ost, 2);
        // d(0) <= 1 always.
        assert_eq!(
            mixing_time(&s, &q_int(1), DistanceKind::Tv, 10, 100).unwrap(),
            Some(0)
        );
        // Exact TV of OST_2 is (1/2) * (1/2)^t; first t with <= 1/4 is 1.
        assert_eq!(
            mixing_time(&s, &q_ratio(1, 4), DistanceKind::Tv, 10, 100).unwrap(),
            Some(1)
        );
        // Lazy walk on Z_2 is exactly uniform after one step.
        let lazy = spec(ShuffleKind::CyclicLazy, 2);
        assert_eq!(
            mixing_time(&lazy, &q_int(0), DistanceKind::Tv, 10, 100).unwrap(),
            Some(1)
        );
        // Unreachable tolerance reports None.
        let ttr = spec(ShuffleKind::Ttr, 3);
        assert_eq!(
            mixing_time(&ttr, &q_int(0), DistanceKind::Tv, 3, 100).unwrap(),
            None
        );
    }

    #[test]
    fn transition_matrix_examples() {
        let s = spec(ShuffleKind::Ost, 1);
        let t = table(&s);
        let m = transition_matrix(&t, &s).unwrap();
        assert_eq!(m, vec![vec![Q::one()]]);

        let s = spec(ShuffleKind::Ost, 2);
        let t = table(&s);
        let m = transition_matrix(&t, &s).unwrap();
        assert_eq!(
            m,
            vec![
                vec![q_ratio(3, 4), q_ratio(1, 4)],
                vec![q_ratio(1, 4), q_ratio(3, 4)],
            ]
        );

        // Rows and columns all sum to one (group invariance).
        let s = spec(ShuffleKind::Ttr, 4);
        let t = table(&s);
        let m = transition_matrix(&t, &s).unwrap();
        for row in &m {
            assert_eq!(row.iter().sum::<Q>(), Q::one());
        }
        for col in 0..t.order() {
            let total: Q = m.iter().map(|row| row[col].clone()).sum();
            assert_eq!(total, Q::one());
        }

        // Reversible specs give symmetric matrices.
        let s = spec(ShuffleKind::Rt, 4);
        let t = table(&s);
        let m = transition_matrix(&t, &s).unwrap();
        for g in 0..t.order() {
            for h in 0..t.order() {
                assert_eq!(m[g][h], m[h][g]);
            }
        }
    }

    #[test]
    fn brute_force_spectrum_examples() {
        let values = brute_force_spectrum(&spec(ShuffleKind::Ost, 2), 100).unwrap();
        assert!((values[0] - 1.0).abs() < SPECTRUM_TOL);
        assert!((values[1] - 0.5).abs() < SPECTRUM_TOL);

        // Largest eigenvalue is always 1 (stochasticity).
        for s in [spec(ShuffleKind::Rt, 4), spec(ShuffleKind::BOst, 3)] {
            let values = brute_force_spectrum(&s, DEFAULT_SPECTRUM_CAP).unwrap();
            assert!((values[0] - 1.0).abs() < SPECTRUM_TOL, "{s}");
        }

        // RT on S_3 matches the (n + 2 Diag(lambda)) / n^2 catalog with
        // multiplicity d_lambda^2: {1, 1/3 x4, -1/3}.
        let values = brute_force_spectrum(&spec(ShuffleKind::Rt, 3), 100).unwrap();
        let want = [1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0];
        assert_eq!(values.len(), want.len());
        for (got, want) in values.iter().zip(want) {
            assert!((got - want).abs() < SPECTRUM_TOL);
        }

        // The non-reversible family is rejected.
        assert!(matches!(
            brute_force_spectrum(&spec(ShuffleKind::Ttr, 3), 100),
            Err(Error::NonReversible(_))
        ));
    }

    #[test]
    fn dedup_groups_close_values() {
        let groups = dedup_spectrum(&[1.0, 0.5 + 1e-12, 0.5, -0.25], 1e-9);
        assert_eq!(groups.len(), 3);
        assert_eq!(groups[1].1, 2);
    }

    #[test]
    fn real_weight_path_matches_rational_at_integer_alpha() {
        use crate::shuffles::Weight;
        let exact = ShuffleSpec::biased(ShuffleKind::OstBiased, 4, 1).unwrap();
        let real =
            ShuffleSpec::new(ShuffleKind::OstBiased, 4, Some(Weight::RealAlpha(1.0))).unwrap();
        let a = brute_force_spectrum(&exact, 100).unwrap();
        let b = brute_force_spectrum(&real, 100).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn index_of_round_trips() {
        let s = spec(ShuffleKind::BRt, 3);
        let t = table(&s);
        for (i, el) in t.elements().iter().enumerate() {
            assert_eq!(t.index_of(el), Some(i));
        }
        let missing = Element::Sym(Permutation::identity(3));
        assert_eq!(t.index_of(&missing), None);
    }
}
