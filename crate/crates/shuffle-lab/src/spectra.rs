//! Closed-form eigenvalue catalogs for every shuffle family, indexed by
//! tableaux and partitions, with multiplicities, plus the eigenvalue-ordering
//! lemmas as callable predicates.

use crate::error::{Error, Result};
use crate::exact::SPECTRUM_TOL;
use crate::shuffles::{ShuffleKind, ShuffleSpec, Weight};
use crate::tableaux::{
    bipartitions_of, desarrangement_count, dimension, enumerate_bi_syt, enumerate_syt,
    is_horizontal_strip, partitions_of, special_tableau, BiPartition, BiTableau, Partition,
    SpecialKind, StandardTableau, Tableau, DEFAULT_SYT_CAP,
};
use crate::{q_int, Q};
use num::{BigInt, BigUint, One, ToPrimitive, Zero};
use std::fmt;

/// Eigenvalue of the unbiased one-sided transposition shuffle for a tableau
/// filling: `(1/n) sum over boxes (j - i + 1) / T(i, j)`.
pub fn ost_eig(t: &Tableau) -> Q {
    biased_ost_eig(t, &Weight::Uniform).expect("uniform weight is rational")
}

/// Biased variant: each box contributes `(j - i + 1) w(T(i,j)) / T(i,j)`,
/// normalized by `N_w(n)`. Reduces to [`ost_eig`] at `w = 1`.
pub fn biased_ost_eig(t: &Tableau, weight: &Weight) -> Result<Q> {
    let n = t.size();
    if n == 0 {
        return Ok(Q::zero());
    }
    let mut total = Q::zero();
    for (i, j) in t.shape().boxes() {
        let v = t.value(i, j) as usize;
        let index = q_int(j as i64 - i as i64 + 1);
        total += index * weight.rational(v)? / q_int(v as i64);
    }
    Ok(total / weight.cumulative_rational(n)?)
}

/// Float twin of [`biased_ost_eig`], usable with real-valued weights.
pub fn biased_ost_eig_f64(t: &Tableau, weight: &Weight) -> f64 {
    let n = t.size();
    if n == 0 {
        return 0.0;
    }
    let total: f64 = t
        .shape()
        .boxes()
        .map(|(i, j)| {
            let v = t.value(i, j) as usize;
            (j as f64 - i as f64 + 1.0) * weight.value_f64(v) / v as f64
        })
        .sum();
    total / weight.cumulative_f64(n)
}

/// Random-transposition eigenvalue `(n + 2 Diag(lambda)) / n^2`, carried with
/// multiplicity `d_lambda^2`.
pub fn rt_eig(shape: &Partition) -> Q {
    let n = shape.size() as i64;
    q_int(n + 2 * shape.diag_sum()) / q_int(n * n)
}

/// Random-to-random eigenvalue for a pair `(lambda, mu)` with `lambda / mu` a
/// horizontal strip, carried with multiplicity `d_lambda * d^mu`.
pub fn rtr_eig(lambda: &Partition, mu: &Partition) -> Result<Q> {
    if !is_horizontal_strip(lambda, mu)? {
        return Err(Error::NotHorizontalStrip(
            lambda.to_string(),
            mu.to_string(),
        ));
    }
    let n = lambda.size() as i64;
    let m = mu.size() as i64;
    let value = q_int(n * (n + 1) / 2 - m * (m + 1) / 2 + lambda.diag_sum() - mu.diag_sum());
    Ok(value / q_int(n * n))
}

/// `B_n` random-transposition eigenvalue
/// `(2|lambda1| + 4 Diag(lambda1) + 4 Diag(lambda2)) / (2 n^2)`, multiplicity
/// `d_{lambda_bar}^2`.
pub fn brt_eig(shape: &BiPartition) -> Q {
    let n = shape.size() as i64;
    let raw = 2 * shape.first().size() as i64
        + 4 * shape.first().diag_sum()
        + 4 * shape.second().diag_sum();
    q_int(raw) / q_int(2 * n * n)
}

/// `B_n` one-sided transposition eigenvalue for a bi-tableau: first-component
/// boxes contribute `(j - i + 1) w / T1(i,j)`, second-component boxes
/// `(j - i) w / T2(i,j)`, normalized by `N_w(n)`.
pub fn bost_eig(t: &BiTableau, weight: &Weight) -> Result<Q> {
    let n = t.size();
    if n == 0 {
        return Ok(Q::zero());
    }
    let mut total = Q::zero();
    for (i, j) in t.first().shape().boxes() {
        let v = t.first().value(i, j) as usize;
        total += q_int(j as i64 - i as i64 + 1) * weight.rational(v)? / q_int(v as i64);
    }
    for (i, j) in t.second().shape().boxes() {
        let v = t.second().value(i, j) as usize;
        total += q_int(j as i64 - i as i64) * weight.rational(v)? / q_int(v as i64);
    }
    Ok(total / weight.cumulative_rational(n)?)
}

pub fn bost_eig_f64(t: &BiTableau, weight: &Weight) -> f64 {
    let n = t.size();
    if n == 0 {
        return 0.0;
    }
    let mut total = 0.0;
    for (i, j) in t.first().shape().boxes() {
        let v = t.first().value(i, j) as usize;
        total += (j as f64 - i as f64 + 1.0) * weight.value_f64(v) / v as f64;
    }
    for (i, j) in t.second().shape().boxes() {
        let v = t.second().value(i, j) as usize;
        total += (j as f64 - i as f64) * weight.value_f64(v) / v as f64;
    }
    total / weight.cumulative_f64(n)
}

/// An eigenvalue, exact when the spec's weights are rational.
#[derive(Clone, PartialEq, Debug)]
pub enum EigValue {
    Exact(Q),
    Approx(f64),
}

impl EigValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            EigValue::Exact(q) => q.to_f64().expect("finite"),
            EigValue::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Result<&Q> {
        match self {
            EigValue::Exact(q) => Ok(q),
            EigValue::Approx(_) => Err(Error::NonRationalWeight),
        }
    }
}

impl fmt::Display for EigValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigValue::Exact(q) => write!(f, "{q}"),
            EigValue::Approx(x) => write!(f, "{x}"),
        }
    }
}

/// What a catalog entry is indexed by.
#[derive(Clone, PartialEq, Debug)]
pub enum CatalogIndex {
    Shape(Partition),
    Tab(StandardTableau),
    Pair(Partition, Partition),
    BiShape(BiPartition),
    BiTab(BiTableau),
    /// Remainder entries reconciling a theorem's indexed count with `|G|`.
    Kernel,
}

impl fmt::Display for CatalogIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogIndex::Shape(p) => write!(f, "{p}"),
            CatalogIndex::Tab(t) => write!(f, "{t}"),
            CatalogIndex::Pair(l, m) => write!(f, "({l};{m})"),
            CatalogIndex::BiShape(p) => write!(f, "{p}"),
            CatalogIndex::BiTab(t) => write!(f, "{t}"),
            CatalogIndex::Kernel => write!(f, "kernel"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub index: CatalogIndex,
    pub value: EigValue,
    pub multiplicity: u64,
}

/// The complete eigenvalue catalog of a shuffle: `sum multiplicities = |G|`
/// and `sum mult * eig = |G| * pmf(e)` (the transition-matrix trace).
pub struct EigenCatalog {
    pub spec: ShuffleSpec,
    pub entries: Vec<CatalogEntry>,
}

impl EigenCatalog {
    pub fn total_multiplicity(&self) -> BigUint {
        self.entries
            .iter()
            .map(|e| BigUint::from(e.multiplicity))
            .sum()
    }

    /// `sum mult * eig`, exact; errors on real-valued weights.
    pub fn trace(&self) -> Result<Q> {
        let mut total = Q::zero();
        for e in &self.entries {
            total += Q::from_integer(BigInt::from(e.multiplicity)) * e.value.exact()?;
        }
        Ok(total)
    }

    /// All eigenvalues expanded with multiplicity, sorted descending.
    pub fn sorted_f64(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for e in &self.entries {
            let v = e.value.to_f64();
            out.extend(std::iter::repeat(v).take(e.multiplicity as usize));
        }
        out.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
        out
    }

    /// Compares against a brute-force spectrum as multisets, within `tol`.
    /// Returns the first mismatch as a witness.
    pub fn matches_spectrum(&self, oracle: &[f64], tol: f64) -> std::result::Result<(), String> {
        let own = self.sorted_f64();
        if own.len() != oracle.len() {
            return Err(format!(
                "catalog has {} eigenvalues, oracle has {}",
                own.len(),
                oracle.len()
            ));
        }
        for (k, (a, b)) in own.iter().zip(oracle).enumerate() {
            if (a - b).abs() > tol {
                return Err(format!(
                    "eigenvalue #{k}: catalog {a} vs oracle {b} (|diff| = {})",
                    (a - b).abs()
                ));
            }
        }
        Ok(())
    }
}

/// Sum of `d_lambda * d^mu` over valid random-to-random pairs, against `n!`.
/// The difference, if any, is the kernel multiplicity the catalog assigns
/// eigenvalue zero.
pub fn rtr_reconciliation(n: usize, cap: usize) -> Result<(u64, u64, u64)> {
    let mut indexed = 0u64;
    for lambda in partitions_of(n) {
        let d_lambda = dimension(&lambda, cap)?;
        for m in 0..=n {
            for mu in partitions_of(m) {
                if !lambda.contains(&mu) || !is_horizontal_strip(&lambda, &mu)? {
                    continue;
                }
                indexed += d_lambda * desarrangement_count(&mu, cap)?;
            }
        }
    }
    let factorial: u64 = (1..=n as u64).product();
    Ok((indexed, factorial, factorial - indexed))
}

/// Builds the closed-form catalog for a spec with a known eigenvalue formula.
pub fn build_catalog(spec: &ShuffleSpec, cap: usize) -> Result<EigenCatalog> {
    let n = spec.n();
    let rational = spec.is_rational();
    let weight = spec.weight();
    let mut entries = Vec::new();
    match spec.kind() {
        ShuffleKind::Ost | ShuffleKind::OstBiased => {
            for shape in partitions_of(n) {
                let tableaux = enumerate_syt(&shape, cap)?;
                let mult = tableaux.len() as u64;
                for t in tableaux {
                    let value = if rational {
                        EigValue::Exact(biased_ost_eig(&t, weight)?)
                    } else {
                        EigValue::Approx(biased_ost_eig_f64(&t, weight))
                    };
                    entries.push(CatalogEntry {
                        index: CatalogIndex::Tab(t),
                        value,
                        multiplicity: mult,
                    });
                }
            }
        }
        ShuffleKind::Rt => {
            for shape in partitions_of(n) {
                let d = dimension(&shape, cap)?;
                entries.push(CatalogEntry {
                    value: EigValue::Exact(rt_eig(&shape)),
                    index: CatalogIndex::Shape(shape),
                    multiplicity: d * d,
                });
            }
        }
        ShuffleKind::Rtr => {
            let mut indexed = 0u64;
            for lambda in partitions_of(n) {
                let d_lambda = dimension(&lambda, cap)?;
                for m in 0..=n {
                    for mu in partitions_of(m) {
                        if !lambda.contains(&mu) || !is_horizontal_strip(&lambda, &mu)? {
                            continue;
                        }
                        let mult = d_lambda * desarrangement_count(&mu, cap)?;
                        if mult == 0 {
                            continue;
                        }
                        indexed += mult;
                        entries.push(CatalogEntry {
                            value: EigValue::Exact(rtr_eig(&lambda, &mu)?),
                            index: CatalogIndex::Pair(lambda.clone(), mu),
                            multiplicity: mult,
                        });
                    }
                }
            }
            // Reconcile the indexed count with |G|; any deficit belongs to
            // the kernel and carries eigenvalue zero.
            let factorial: u64 = (1..=n as u64).product();
            if indexed < factorial {
                entries.push(CatalogEntry {
                    index: CatalogIndex::Kernel,
                    value: EigValue::Exact(Q::zero()),
                    multiplicity: factorial - indexed,
                });
            }
        }
        ShuffleKind::BRt => {
            for shape in bipartitions_of(n) {
                let d = crate::tableaux::bi_dimension(&shape, cap)?;
                entries.push(CatalogEntry {
                    value: EigValue::Exact(brt_eig(&shape)),
                    index: CatalogIndex::BiShape(shape),
                    multiplicity: d * d,
                });
            }
        }
        ShuffleKind::BOst | ShuffleKind::BOstBiased => {
            for shape in bipartitions_of(n) {
                let tableaux = enumerate_bi_syt(&shape, cap)?;
                let mult = tableaux.len() as u64;
                for t in tableaux {
                    let value = if rational {
                        EigValue::Exact(bost_eig(&t, weight)?)
                    } else {
                        EigValue::Approx(bost_eig_f64(&t, weight))
                    };
                    entries.push(CatalogEntry {
                        index: CatalogIndex::BiTab(t),
                        value,
                        multiplicity: mult,
                    });
                }
            }
        }
        other => return Err(Error::UnsupportedKind(other.name().into())),
    }
    Ok(EigenCatalog {
        spec: spec.clone(),
        entries,
    })
}

/// The partition `(n-k, *)`: as many rows of `n - k` as fit, the last row
/// holding the remainder. Tops the dominance order among `lambda_1 = n - k`.
pub fn n_k_star(n: usize, k: usize) -> Partition {
    let width = (n - k) as u32;
    let full = n / (n - k);
    let rem = (n - full * (n - k)) as u32;
    let mut parts = vec![width; full];
    if rem > 0 {
        parts.push(rem);
    }
    Partition::new(parts).expect("non-increasing by construction")
}

/// One named eigenvalue-ordering check with an optional failure witness.
#[derive(Clone, Debug)]
pub struct OrderCheck {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl OrderCheck {
    fn pass(name: impl Into<String>) -> Self {
        OrderCheck {
            name: name.into(),
            pass: true,
            witness: None,
        }
    }

    fn fail(name: impl Into<String>, witness: String) -> Self {
        OrderCheck {
            name: name.into(),
            pass: false,
            witness: Some(witness),
        }
    }
}

/// Runs the eigenvalue-ordering lemmas as predicates at a fixed `n`:
///
/// * extreme-tableau bounds `eig(Tv) <= eig(T) <= eig(T>)` for `alpha <= 1`
///   and the reversed ordering for `alpha >= 1`;
/// * the transpose identity `eig(T) + eig(T') = 2 sum w(m)/m / N_w`;
/// * dominance monotonicity of the extreme tableaux (unbiased);
/// * the diagonal-tableau bound `eig(Tv_lambda) <= eig(T diag of (n-k,*))`
///   for `alpha >= 1`;
/// * the per-box inequality `j - i + 1 <= ((n-k)/n) T_diag(i,j)` on `(n-k,*)`.
pub fn eig_order_checks(n: usize, cap: usize) -> Result<Vec<OrderCheck>> {
    let mut checks = Vec::new();
    let shapes = partitions_of(n);

    // Extreme-tableau sandwich, normal for alpha <= 1 and reversed for >= 1.
    for alpha in [-1, 0, 1, 2] {
        let weight = Weight::IntAlpha(alpha);
        let name = format!("extreme-sandwich n={n} alpha={alpha}");
        let mut witness = None;
        'outer: for shape in &shapes {
            let row = biased_ost_eig(&special_tableau(shape, SpecialKind::RowWise), &weight)?;
            let col = biased_ost_eig(&special_tableau(shape, SpecialKind::ColumnWise), &weight)?;
            let (lo, hi) = if alpha <= 1 {
                (&col, &row)
            } else {
                (&row, &col)
            };
            for t in enumerate_syt(shape, cap)? {
                let e = biased_ost_eig(&t, &weight)?;
                if e < *lo || e > *hi {
                    witness = Some(format!("shape {shape}, tableau {t}: {e} outside bounds"));
                    break 'outer;
                }
            }
        }
        checks.push(match witness {
            None => OrderCheck::pass(name),
            Some(w) => OrderCheck::fail(name, w),
        });
    }

    // Transpose identity, exact in rationals.
    for alpha in [-1, 0, 1, 2] {
        let weight = Weight::IntAlpha(alpha);
        let mut expected = Q::zero();
        for m in 1..=n {
            expected += weight.rational(m)? / q_int(m as i64);
        }
        expected = q_int(2) * expected / weight.cumulative_rational(n)?;
        let name = format!("transpose-identity n={n} alpha={alpha}");
        let mut witness = None;
        'outer2: for shape in &shapes {
            for t in enumerate_syt(shape, cap)? {
                let total = biased_ost_eig(&t, &weight)? + biased_ost_eig(&t.transpose(), &weight)?;
                if total != expected {
                    witness = Some(format!("tableau {t}: {total} != {expected}"));
                    break 'outer2;
                }
            }
        }
        checks.push(match witness {
            None => OrderCheck::pass(name),
            Some(w) => OrderCheck::fail(name, w),
        });
    }

    // Dominance monotonicity of the extreme-tableau eigenvalues (unbiased).
    {
        let name = format!("dominance-monotone n={n}");
        let mut witness = None;
        'outer3: for a in &shapes {
            for b in &shapes {
                if a == b || !a.dominates(b)? {
                    continue;
                }
                let row_a = ost_eig(&special_tableau(a, SpecialKind::RowWise));
                let row_b = ost_eig(&special_tableau(b, SpecialKind::RowWise));
                let col_a = ost_eig(&special_tableau(a, SpecialKind::ColumnWise));
                let col_b = ost_eig(&special_tableau(b, SpecialKind::ColumnWise));
                if row_a < row_b || col_a < col_b {
                    witness = Some(format!("{a} dominates {b} but eigenvalues decrease"));
                    break 'outer3;
                }
            }
        }
        checks.push(match witness {
            None => OrderCheck::pass(name),
            Some(w) => OrderCheck::fail(name, w),
        });
    }

    // Diagonal-tableau bound for alpha >= 1.
    for alpha in [1, 2] {
        let weight = Weight::IntAlpha(alpha);
        let name = format!("diagonal-bound n={n} alpha={alpha}");
        let mut witness = None;
        for shape in &shapes {
            if shape.part(1) as usize == n {
                continue;
            }
            let k = n - shape.part(1) as usize;
            let bound = biased_ost_eig(
                &special_tableau(&n_k_star(n, k), SpecialKind::DiagonalWise),
                &weight,
            )?;
            let col = biased_ost_eig(&special_tableau(shape, SpecialKind::ColumnWise), &weight)?;
            if col > bound {
                witness = Some(format!("shape {shape}: eig(Tv) = {col} > bound {bound}"));
                break;
            }
        }
        checks.push(match witness {
            None => OrderCheck::pass(name),
            Some(w) => OrderCheck::fail(name, w),
        });
    }

    // Per-box inequality on (n-k,*) shapes.
    {
        let name = format!("box-index n={n}");
        let mut witness = None;
        'outer4: for k in 1..n.saturating_sub(1) {
            let shape = n_k_star(n, k);
            let diag = special_tableau(&shape, SpecialKind::DiagonalWise);
            for (i, j) in shape.boxes() {
                let lhs = q_int(j as i64 - i as i64 + 1);
                let rhs = q_int((n - k) as i64) * q_int(diag.value(i, j) as i64) / q_int(n as i64);
                if lhs > rhs {
                    witness = Some(format!("shape {shape} box ({i},{j}): {lhs} > {rhs}"));
                    break 'outer4;
                }
            }
        }
        checks.push(match witness {
            None => OrderCheck::pass(name),
            Some(w) => OrderCheck::fail(name, w),
        });
    }

    Ok(checks)
}

/// Checks a catalog against [`crate::exact::brute_force_spectrum`] plus its
/// count and trace identities; returns a one-line witness on failure.
pub fn check_catalog_against_oracle(
    spec: &ShuffleSpec,
    max_order: usize,
) -> Result<std::result::Result<(), String>> {
    let catalog = build_catalog(spec, DEFAULT_SYT_CAP)?;
    let expected_order = crate::exact::group_order(spec);
    if catalog.total_multiplicity() != BigUint::from(expected_order) {
        return Ok(Err(format!(
            "multiplicities sum to {}, group order is {expected_order}",
            catalog.total_multiplicity()
        )));
    }
    if spec.is_rational() {
        let order = Q::from_integer(BigInt::from(expected_order));
        let identity = match spec.kind().group_kind() {
            Some(crate::group::GroupKind::Symmetric) => {
                crate::group::Element::Sym(crate::group::Permutation::identity(spec.n()))
            }
            Some(crate::group::GroupKind::Hyperoctahedral) => {
                crate::group::Element::Hyp(crate::group::SignedPermutation::identity(spec.n()))
            }
            None => unreachable!("catalogs exist only for group walks"),
        };
        let expected_trace = order * spec.pmf(&identity)?;
        let trace = catalog.trace()?;
        if trace != expected_trace {
            return Ok(Err(format!(
                "trace identity fails: {trace} != {expected_trace}"
            )));
        }
    }
    let oracle = crate::exact::brute_force_spectrum(spec, max_order)?;
    Ok(catalog.matches_spectrum(&oracle, SPECTRUM_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{brute_force_spectrum, DEFAULT_SPECTRUM_CAP};
    use crate::q_ratio;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn ost_eig_examples() {
        let row32 = special_tableau(&part(&[3, 2]), SpecialKind::RowWise);
        assert_eq!(ost_eig(&row32), q_ratio(16, 25)); // 0.64

        let worked = tab(&[&[1, 3, 6, 7], &[2, 4], &[5]]);
        assert_eq!(ost_eig(&worked), q_ratio(1171, 2940));

        let single = tab(&[&[1]]);
        assert_eq!(ost_eig(&single), q_ratio(1, 1));
    }

    #[test]
    fn syt_32_eigenvalues_match_thesis_table() {
        let want = [
            q_ratio(16, 25),
            q_ratio(59, 100),
            q_ratio(57, 100),
            q_ratio(157, 300),
            q_ratio(151, 300),
        ];
        let got: Vec<Q> = enumerate_syt(&part(&[3, 2]), 14)
            .unwrap()
            .iter()
            .map(|t| ost_eig(t))
            .collect();
        assert_eq!(got.as_slice(), want.as_slice());
    }

    #[test]
    fn biased_eig_examples() {
        // w = 1 reduces to the unbiased formula.
        let t = tab(&[&[1, 3, 6, 7], &[2, 4], &[5]]);
        assert_eq!(
            biased_ost_eig(&t, &Weight::IntAlpha(0)).unwrap(),
            ost_eig(&t)
        );

        // alpha = 1, row-wise single row: the trivial representation.
        let row = special_tableau(&Partition::single_row(5), SpecialKind::RowWise);
        assert_eq!(
            biased_ost_eig(&row, &Weight::IntAlpha(1)).unwrap(),
            Q::one()
        );

        // alpha = 1 column tableau of (1,1,1): matches the least brute-force
        // eigenvalue of the alpha = 1 shuffle on S_3. At alpha = 1 each box
        // contributes its bare index, so the value is (n + Diag) / N_1 = 0.
        let col = special_tableau(&Partition::single_column(3), SpecialKind::ColumnWise);
        let eig = biased_ost_eig(&col, &Weight::IntAlpha(1)).unwrap();
        assert_eq!(eig, Q::zero());
        let spec = ShuffleSpec::biased(ShuffleKind::OstBiased, 3, 1).unwrap();
        let oracle = brute_force_spectrum(&spec, 100).unwrap();
        assert!((oracle.last().unwrap() - eig.to_f64().unwrap()).abs() < SPECTRUM_TOL);
    }

    #[test]
    fn rt_eig_examples() {
        assert_eq!(rt_eig(&Partition::single_row(6)), Q::one());
        let n = 6i64;
        assert_eq!(rt_eig(&Partition::single_column(6)), q_ratio(2 - n, n));
        assert_eq!(rt_eig(&part(&[2, 1])), q_ratio(1, 3));
    }

    #[test]
    fn rtr_eig_examples() {
        assert_eq!(
            rtr_eig(&Partition::single_row(4), &Partition::empty()).unwrap(),
            Q::one()
        );
        assert_eq!(rtr_eig(&part(&[1, 1]), &part(&[1, 1])).unwrap(), Q::zero());
        assert_eq!(
            rtr_eig(&part(&[2, 1]), &part(&[1, 1])).unwrap(),
            q_ratio(4, 9)
        );
        // Not a horizontal strip.
        assert!(rtr_eig(&part(&[1, 1]), &Partition::empty()).is_err());
    }

    #[test]
    fn brt_eig_examples() {
        let n = 5;
        assert_eq!(
            brt_eig(&BiPartition::new(
                Partition::single_row(n),
                Partition::empty()
            )),
            Q::one()
        );
        assert_eq!(
            brt_eig(&BiPartition::new(
                Partition::empty(),
                Partition::single_row(n)
            )),
            Q::one() - q_ratio(1, n as i64)
        );
        assert_eq!(
            brt_eig(&BiPartition::new(part(&[1]), part(&[1]))),
            q_ratio(1, 4)
        );
    }

    #[test]
    fn bost_eig_examples() {
        // (row-wise (n), empty) at w = 1 is the trivial eigenvalue 1.
        let shape = BiPartition::new(part(&[3]), Partition::empty());
        let t = enumerate_bi_syt(&shape, 14).unwrap().remove(0);
        assert_eq!(bost_eig(&t, &Weight::Uniform).unwrap(), Q::one());

        // (empty, single box) at n = 1: eigenvalue 0; catalog on B_1 is {1, 0}.
        let shape = BiPartition::new(Partition::empty(), part(&[1]));
        let t = enumerate_bi_syt(&shape, 14).unwrap().remove(0);
        assert_eq!(bost_eig(&t, &Weight::Uniform).unwrap(), Q::zero());
        let spec = ShuffleSpec::unbiased(ShuffleKind::BOst, 1).unwrap();
        let oracle = brute_force_spectrum(&spec, 100).unwrap();
        assert!((oracle[0] - 1.0).abs() < SPECTRUM_TOL);
        assert!(oracle[1].abs() < SPECTRUM_TOL);
    }

    #[test]
    fn catalog_invariants_and_oracle_small() {
        // OST n=3: trace = |G| pmf(e) = 6 * 11/18 = 11/3.
        let spec = ShuffleSpec::unbiased(ShuffleKind::Ost, 3).unwrap();
        let catalog = build_catalog(&spec, 14).unwrap();
        assert_eq!(catalog.total_multiplicity(), BigUint::from(6u32));
        assert_eq!(catalog.trace().unwrap(), q_ratio(11, 3));

        // RT n=4: 24 eigenvalues with multiplicity.
        let spec = ShuffleSpec::unbiased(ShuffleKind::Rt, 4).unwrap();
        let catalog = build_catalog(&spec, 14).unwrap();
        assert_eq!(catalog.total_multiplicity(), BigUint::from(24u32));

        // B_OST n=2 alpha=0: 8 eigenvalues; full match against brute force.
        let spec = ShuffleSpec::unbiased(ShuffleKind::BOst, 2).unwrap();
        let catalog = build_catalog(&spec, 14).unwrap();
        assert_eq!(catalog.total_multiplicity(), BigUint::from(8u32));
        let oracle = brute_force_spectrum(&spec, 100).unwrap();
        catalog.matches_spectrum(&oracle, SPECTRUM_TOL).unwrap();

        // RTR n=2 and n=3 catalogs match brute force.
        for n in 2..=3 {
            let spec = ShuffleSpec::unbiased(ShuffleKind::Rtr, n).unwrap();
            check_catalog_against_oracle(&spec, DEFAULT_SPECTRUM_CAP)
                .unwrap()
                .unwrap();
        }
    }

    #[test]
    fn rtr_reconciliation_small() {
        for n in 1..=7 {
            let (indexed, factorial, deficit) = rtr_reconciliation(n, 14).unwrap();
            assert_eq!(indexed, factorial, "n = {n}");
            assert_eq!(deficit, 0);
        }
    }

    #[test]
    fn ordering_checks_small() {
        for n in 2..=6 {
            for check in eig_order_checks(n, 14).unwrap() {
                assert!(check.pass, "{}: {:?}", check.name, check.witness);
            }
        }
    }

    #[test]
    fn n4_extreme_tables() {
        // 24 * eig over the dominance chain of partitions of 4.
        let want_row = [
            q_int(24),
            q_int(18),
            q_ratio(27, 2),
            q_ratio(21, 2),
            q_int(1),
        ];
        let want_col = [
            q_int(24),
            q_ratio(29, 2),
            q_ratio(23, 2),
            q_int(7),
            q_int(1),
        ];
        for (shape, (wr, wc)) in partitions_of(4)
            .iter()
            .zip(want_row.iter().zip(want_col.iter()))
        {
            let row = ost_eig(&special_tableau(shape, SpecialKind::RowWise));
            let col = ost_eig(&special_tableau(shape, SpecialKind::ColumnWise));
            assert_eq!(q_int(24) * row, *wr, "{shape}");
            assert_eq!(q_int(24) * col, *wc, "{shape}");
        }
    }

    #[test]
    fn transpose_identity_n5_exact() {
        let h5 = q_ratio(137, 60); // H_5
        let expected = q_int(2) * h5 / q_int(5);
        for shape in partitions_of(5) {
            for t in enumerate_syt(&shape, 14).unwrap() {
                assert_eq!(ost_eig(&t) + ost_eig(&t.transpose()), expected);
            }
        }
    }

    #[test]
    fn n_k_star_shapes() {
        assert_eq!(n_k_star(8, 3), part(&[5, 3]));
        assert_eq!(n_k_star(8, 5), part(&[3, 3, 2]));
        assert_eq!(n_k_star(29, 19), part(&[10, 10, 9]));
        assert_eq!(n_k_star(6, 0), part(&[6]));
    }
}
