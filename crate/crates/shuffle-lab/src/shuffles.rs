//! Probability distributions defining each shuffle family on `S_n`, `B_n` or
//! `Z_n`: pmf, support and sampler.

use crate::error::{Error, Result};
use crate::group::{Element, GroupKind, Permutation, SignedPermutation};
use crate::Q;
use num::{BigInt, One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Weight descriptor for the biased one-sided families. `w(j) = j^alpha`
/// with integer `alpha` keeps every probability an exact rational; a real
/// exponent or an explicit table switches downstream consumers to `f64`.
#[derive(Clone, PartialEq, Debug)]
pub enum Weight {
    Uniform,
    IntAlpha(i32),
    RealAlpha(f64),
    Table(Vec<f64>),
}

impl Weight {
    pub fn is_rational(&self) -> bool {
        matches!(self, Weight::Uniform | Weight::IntAlpha(_))
    }

    /// `w(j)` as an exact rational, when available. 1-based `j`.
    pub fn rational(&self, j: usize) -> Result<Q> {
        match self {
            Weight::Uniform => Ok(Q::one()),
            Weight::IntAlpha(a) => {
                let base = BigInt::from(j);
                if *a >= 0 {
                    Ok(Q::from_integer(base.pow(*a as u32)))
                } else {
                    Ok(Q::new(BigInt::one(), base.pow(a.unsigned_abs())))
                }
            }
            _ => Err(Error::NonRationalWeight),
        }
    }

    /// `w(j)` as a float. 1-based `j`.
    pub fn value_f64(&self, j: usize) -> f64 {
        match self {
            Weight::Uniform => 1.0,
            Weight::IntAlpha(a) => (j as f64).powi(*a),
            Weight::RealAlpha(a) => (j as f64).powf(*a),
            Weight::Table(t) => t[j - 1],
        }
    }

    /// `N_w(n) = sum_{j<=n} w(j)`.
    pub fn cumulative_rational(&self, n: usize) -> Result<Q> {
        let mut total = Q::zero();
        for j in 1..=n {
            total += self.rational(j)?;
        }
        Ok(total)
    }

    pub fn cumulative_f64(&self, n: usize) -> f64 {
        (1..=n).map(|j| self.value_f64(j)).sum()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShuffleKind {
    /// Random transposition.
    Rt,
    /// Top-to-random (the designated non-reversible family).
    Ttr,
    /// Random-to-random (symmetrization of top-to-random).
    Rtr,
    /// One-sided transposition, unbiased.
    Ost,
    /// One-sided transposition with a weighted right hand.
    OstBiased,
    /// Random transposition on `B_n` with a fair flip of the moved cards.
    BRt,
    /// One-sided transposition on `B_n`, unbiased.
    BOst,
    /// One-sided transposition on `B_n` with a weighted right hand.
    BOstBiased,
    /// Simple random walk on `Z_n`.
    CyclicSimple,
    /// Lazy simple random walk on `Z_n`.
    CyclicLazy,
}

impl ShuffleKind {
    pub fn name(&self) -> &'static str {
        match self {
            ShuffleKind::Rt => "RT",
            ShuffleKind::Ttr => "TTR",
            ShuffleKind::Rtr => "RTR",
            ShuffleKind::Ost => "OST",
            ShuffleKind::OstBiased => "OST_biased",
            ShuffleKind::BRt => "B_RT",
            ShuffleKind::BOst => "B_OST",
            ShuffleKind::BOstBiased => "B_OST_biased",
            ShuffleKind::CyclicSimple => "cyclic_simple",
            ShuffleKind::CyclicLazy => "cyclic_lazy",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "RT" => ShuffleKind::Rt,
            "TTR" => ShuffleKind::Ttr,
            "RTR" => ShuffleKind::Rtr,
            "OST" => ShuffleKind::Ost,
            "OST_biased" => ShuffleKind::OstBiased,
            "B_RT" => ShuffleKind::BRt,
            "B_OST" => ShuffleKind::BOst,
            "B_OST_biased" => ShuffleKind::BOstBiased,
            "cyclic_simple" => ShuffleKind::CyclicSimple,
            "cyclic_lazy" => ShuffleKind::CyclicLazy,
            other => return Err(Error::InvalidSpec(format!("unknown kind {other:?}"))),
        })
    }

    pub fn is_biased(&self) -> bool {
        matches!(self, ShuffleKind::OstBiased | ShuffleKind::BOstBiased)
    }

    pub fn group_kind(&self) -> Option<GroupKind> {
        match self {
            ShuffleKind::Rt | ShuffleKind::Ttr | ShuffleKind::Rtr | ShuffleKind::Ost
            | ShuffleKind::OstBiased => Some(GroupKind::Symmetric),
            ShuffleKind::BRt | ShuffleKind::BOst | ShuffleKind::BOstBiased => {
                Some(GroupKind::Hyperoctahedral)
            }
            ShuffleKind::CyclicSimple | ShuffleKind::CyclicLazy => None,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.group_kind().is_none()
    }
}

/// A named shuffle family instance: kind, deck size and optional weight.
#[derive(Clone, PartialEq, Debug)]
pub struct ShuffleSpec {
    kind: ShuffleKind,
    n: usize,
    weight: Weight,
}

impl ShuffleSpec {
    pub fn new(kind: ShuffleKind, n: usize, weight: Option<Weight>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("deck size must be positive".into()));
        }
        let weight = match (kind.is_biased(), weight) {
            (true, Some(w)) => {
                if let Weight::Table(t) = &w {
                    if t.len() != n {
                        return Err(Error::InvalidWeight(format!(
                            "weight table has {} entries for n = {n}",
                            t.len()
                        )));
                    }
                    if t.iter().any(|&x| !(x > 0.0)) {
                        return Err(Error::InvalidWeight(
                            "weights must be strictly positive".into(),
                        ));
                    }
                }
                w
            }
            (true, None) => {
                return Err(Error::InvalidSpec(format!(
                    "kind {} requires a weight",
                    kind.name()
                )))
            }
            (false, Some(_)) => {
                return Err(Error::InvalidSpec(format!(
                    "kind {} does not take a weight",
                    kind.name()
                )))
            }
            (false, None) => Weight::Uniform,
        };
        Ok(ShuffleSpec { kind, n, weight })
    }

    pub fn unbiased(kind: ShuffleKind, n: usize) -> Result<Self> {
        Self::new(kind, n, None)
    }

    pub fn biased(kind: ShuffleKind, n: usize, alpha: i32) -> Result<Self> {
        Self::new(kind, n, Some(Weight::IntAlpha(alpha)))
    }

    pub fn kind(&self) -> ShuffleKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn is_rational(&self) -> bool {
        self.weight.is_rational()
    }

    /// The scale tying the driving probability to its group-algebra element:
    /// the algebra element equals `scale * sum_g pmf(g) g`.
    pub fn algebra_scale(&self) -> Result<Q> {
        let n = crate::q_int(self.n as i64);
        match self.kind {
            ShuffleKind::Ost | ShuffleKind::OstBiased | ShuffleKind::BOst
            | ShuffleKind::BOstBiased => self.weight.cumulative_rational(self.n),
            ShuffleKind::Rt | ShuffleKind::Rtr => Ok(&n * &n),
            ShuffleKind::BRt => Ok(crate::q_int(2) * &n * &n),
            ShuffleKind::Ttr => Ok(n),
            _ => Err(Error::UnsupportedKind(self.kind.name().into())),
        }
    }

    /// Exact support: all positive-mass elements with their probabilities.
    /// Deterministic canonical order. Errors on real-valued weights and on
    /// cyclic kinds (see [`ShuffleSpec::cyclic_walk_pmf`]).
    pub fn support(&self) -> Result<Vec<(Element, Q)>> {
        let n = self.n;
        let mut mass: BTreeMap<Element, Q> = BTreeMap::new();
        let mut add = |el: Element, p: Q| {
            *mass.entry(el).or_insert_with(Q::zero) += p;
        };
        let nq = crate::q_int(n as i64);
        match self.kind {
            ShuffleKind::Rt => {
                add(Element::Sym(Permutation::identity(n)), Q::one() / &nq);
                let p = crate::q_int(2) / (&nq * &nq);
                for j in 2..=n {
                    for i in 1..j {
                        add(
                            Element::Sym(Permutation::transposition(n, i, j)),
                            p.clone(),
                        );
                    }
                }
            }
            ShuffleKind::Ost | ShuffleKind::OstBiased => {
                let nw = self.weight.cumulative_rational(n)?;
                for j in 1..=n {
                    let pj = self.weight.rational(j)? / (crate::q_int(j as i64) * &nw);
                    for i in 1..=j {
                        add(
                            Element::Sym(Permutation::transposition(n, i, j)),
                            pj.clone(),
                        );
                    }
                }
            }
            ShuffleKind::Ttr => {
                let p = Q::one() / &nq;
                for k in 1..=n {
                    let cycle: Vec<usize> = (1..=k).rev().collect();
                    let el = Permutation::from_cycles(n, &[cycle]).expect("valid cycle");
                    add(Element::Sym(el), p.clone());
                }
            }
            ShuffleKind::Rtr => {
                add(Element::Sym(Permutation::identity(n)), Q::one() / &nq);
                let p = Q::one() / (&nq * &nq);
                for i in 1..=n {
                    for j in 1..=n {
                        if i == j {
                            continue;
                        }
                        // Moving the card at position j to position i: the
                        // run of positions between them shifts by one.
                        let cycle: Vec<usize> = if i < j {
                            (i..=j).collect()
                        } else {
                            (j..=i).rev().collect()
                        };
                        let el = Permutation::from_cycles(n, &[cycle]).expect("valid cycle");
                        add(Element::Sym(el), p.clone());
                    }
                }
            }
            ShuffleKind::BRt => {
                let two_nsq = crate::q_int(2) * &nq * &nq;
                add(
                    Element::Hyp(SignedPermutation::identity(n)),
                    Q::one() / (crate::q_int(2) * &nq),
                );
                for i in 1..=n {
                    add(
                        Element::Hyp(SignedPermutation::xi(n, i)),
                        Q::one() / &two_nsq,
                    );
                }
                let p = Q::one() / (&nq * &nq);
                for j in 2..=n {
                    for i in 1..j {
                        add(
                            Element::Hyp(SignedPermutation::transposition(n, i, j)),
                            p.clone(),
                        );
                        add(
                            Element::Hyp(SignedPermutation::flipped_transposition(n, i, j)),
                            p.clone(),
                        );
                    }
                }
            }
            ShuffleKind::BOst | ShuffleKind::BOstBiased => {
                let nw = self.weight.cumulative_rational(n)?;
                for j in 1..=n {
                    let pj =
                        self.weight.rational(j)? / (crate::q_int(2 * j as i64) * &nw);
                    add(Element::Hyp(SignedPermutation::xi(n, j)), pj.clone());
                    for i in 1..=j {
                        add(
                            Element::Hyp(SignedPermutation::transposition(n, i, j)),
                            pj.clone(),
                        );
                        if i < j {
                            add(
                                Element::Hyp(SignedPermutation::flipped_transposition(n, i, j)),
                                pj.clone(),
                            );
                        }
                    }
                }
            }
            ShuffleKind::CyclicSimple | ShuffleKind::CyclicLazy => {
                for (v, p) in self.cyclic_walk_pmf()?.into_iter().enumerate() {
                    if !p.is_zero() {
                        add(
                            Element::Cyc {
                                n: n as u32,
                                value: v as u32,
                            },
                            p,
                        );
                    }
                }
            }
        }
        Ok(mass.into_iter().collect())
    }

    /// Exact probability of a single element. Errors when the element does
    /// not belong to the spec's group or on real-valued weights.
    pub fn pmf(&self, g: &Element) -> Result<Q> {
        let matches = match (self.kind.group_kind(), g) {
            (Some(GroupKind::Symmetric), Element::Sym(p)) => p.n() == self.n,
            (Some(GroupKind::Hyperoctahedral), Element::Hyp(p)) => p.n() == self.n,
            (None, Element::Cyc { n, .. }) => *n as usize == self.n,
            _ => false,
        };
        if !matches {
            return Err(Error::SizeMismatch(format!(
                "element {g} is not a member of the group of {} at n = {}",
                self.kind.name(),
                self.n
            )));
        }
        Ok(self
            .support()?
            .into_iter()
            .find(|(el, _)| el == g)
            .map(|(_, p)| p)
            .unwrap_or_else(Q::zero))
    }

    /// Probabilities as floats, usable with real-valued weights too.
    pub fn support_f64(&self) -> Result<Vec<(Element, f64)>> {
        if self.is_rational() {
            return Ok(self
                .support()?
                .into_iter()
                .map(|(el, p)| (el, p.to_f64().expect("finite")))
                .collect());
        }
        // Real-weight path: same construction with f64 masses.
        let n = self.n;
        let nw = self.weight.cumulative_f64(n);
        let mut mass: BTreeMap<Element, f64> = BTreeMap::new();
        match self.kind {
            ShuffleKind::OstBiased => {
                for j in 1..=n {
                    let pj = self.weight.value_f64(j) / (j as f64 * nw);
                    for i in 1..=j {
                        *mass
                            .entry(Element::Sym(Permutation::transposition(n, i, j)))
                            .or_insert(0.0) += pj;
                    }
                }
            }
            ShuffleKind::BOstBiased => {
                for j in 1..=n {
                    let pj = self.weight.value_f64(j) / (2.0 * j as f64 * nw);
                    *mass
                        .entry(Element::Hyp(SignedPermutation::xi(n, j)))
                        .or_insert(0.0) += pj;
                    for i in 1..=j {
                        *mass
                            .entry(Element::Hyp(SignedPermutation::transposition(n, i, j)))
                            .or_insert(0.0) += pj;
                        if i < j {
                            *mass
                                .entry(Element::Hyp(SignedPermutation::flipped_transposition(
                                    n, i, j,
                                )))
                                .or_insert(0.0) += pj;
                        }
                    }
                }
            }
            _ => unreachable!("only biased kinds can carry real weights"),
        }
        Ok(mass.into_iter().collect())
    }

    /// Distribution of one step of a cyclic walk, indexed by residue.
    pub fn cyclic_walk_pmf(&self) -> Result<Vec<Q>> {
        let n = self.n;
        let mut pmf = vec![Q::zero(); n];
        match self.kind {
            ShuffleKind::CyclicSimple => {
                pmf[1 % n] += crate::q_ratio(1, 2);
                pmf[(n - 1) % n] += crate::q_ratio(1, 2);
            }
            ShuffleKind::CyclicLazy => {
                pmf[0] += crate::q_ratio(1, 2);
                pmf[1 % n] += crate::q_ratio(1, 4);
                pmf[(n - 1) % n] += crate::q_ratio(1, 4);
            }
            _ => return Err(Error::UnsupportedKind(self.kind.name().into())),
        }
        Ok(pmf)
    }

    /// Whether `pmf(g) = pmf(g^{-1})` over the whole support.
    pub fn is_reversible(&self) -> Result<bool> {
        let support = self.support()?;
        let lookup: BTreeMap<&Element, &Q> = support.iter().map(|(el, p)| (el, p)).collect();
        for (el, p) in &support {
            let inv = el.inverse();
            match lookup.get(&inv) {
                Some(&q) if q == p => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    pub fn sampler(&self) -> Result<ShuffleSampler> {
        ShuffleSampler::new(self)
    }
}

impl fmt::Display for ShuffleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.weight {
            Weight::Uniform if !self.kind.is_biased() => {
                write!(f, "{} n={}", self.kind.name(), self.n)
            }
            Weight::Uniform => write!(f, "{} n={} alpha=0", self.kind.name(), self.n),
            Weight::IntAlpha(a) => write!(f, "{} n={} alpha={a}", self.kind.name(), self.n),
            Weight::RealAlpha(a) => write!(f, "{} n={} alpha={a}", self.kind.name(), self.n),
            Weight::Table(_) => write!(f, "{} n={} weights=table", self.kind.name(), self.n),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    kind: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<f64>>,
}

impl Serialize for ShuffleSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (alpha, weights) = match &self.weight {
            Weight::Uniform if self.kind.is_biased() => (Some(0.0), None),
            Weight::Uniform => (None, None),
            Weight::IntAlpha(a) => (Some(*a as f64), None),
            Weight::RealAlpha(a) => (Some(*a), None),
            Weight::Table(t) => (None, Some(t.clone())),
        };
        SpecJson {
            kind: self.kind.name().to_string(),
            n: self.n,
            alpha,
            weights,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ShuffleSpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SpecJson::deserialize(deserializer)?;
        let kind = ShuffleKind::from_name(&raw.kind).map_err(serde::de::Error::custom)?;
        let weight = match (raw.alpha, raw.weights) {
            (Some(_), Some(_)) => {
                return Err(serde::de::Error::custom(
                    "give either alpha or weights, not both",
                ))
            }
            (Some(a), None) => {
                if a.fract() == 0.0 && a.abs() <= i32::MAX as f64 {
                    Some(Weight::IntAlpha(a as i32))
                } else {
                    Some(Weight::RealAlpha(a))
                }
            }
            (None, Some(t)) => Some(Weight::Table(t)),
            (None, None) => None,
        };
        ShuffleSpec::new(kind, raw.n, weight).map_err(serde::de::Error::custom)
    }
}

/// One sampled step, before being applied to a deck.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StepDraw {
    /// Swap positions `i <= j` (1-based); `flip` is the `B_n` coin.
    Transposition { i: usize, j: usize, flip: bool },
    /// Top-to-random cycle `(k k-1 ... 1)`.
    TopCycle { k: usize },
    /// Move the card at position `from` to position `to`.
    MoveCard { from: usize, to: usize },
    /// Step by `delta` on `Z_n`.
    CyclicStep { delta: u32 },
}

/// Draws shuffle steps; owns the cumulative weight table of the right hand.
pub struct ShuffleSampler {
    kind: ShuffleKind,
    n: usize,
    /// Cumulative right-hand weights, `cum[j-1] = sum_{k<=j} w(k)`.
    cum: Vec<f64>,
}

impl ShuffleSampler {
    fn new(spec: &ShuffleSpec) -> Result<Self> {
        let mut cum = Vec::new();
        if matches!(
            spec.kind,
            ShuffleKind::Ost | ShuffleKind::OstBiased | ShuffleKind::BOst | ShuffleKind::BOstBiased
        ) {
            let mut acc = 0.0;
            for j in 1..=spec.n {
                acc += spec.weight.value_f64(j);
                cum.push(acc);
            }
        }
        Ok(ShuffleSampler {
            kind: spec.kind,
            n: spec.n,
            cum,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Samples the right hand's position (1-based) for the one-sided families.
    pub fn sample_right_hand<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let total = *self.cum.last().expect("one-sided kinds have weights");
        let u = rng.gen::<f64>() * total;
        self.cum.partition_point(|&c| c <= u) + 1
    }

    pub fn sample_step<R: Rng + ?Sized>(&self, rng: &mut R) -> StepDraw {
        let n = self.n;
        match self.kind {
            ShuffleKind::Rt | ShuffleKind::BRt => {
                let a = rng.gen_range(1..=n);
                let b = rng.gen_range(1..=n);
                let flip = self.kind == ShuffleKind::BRt && rng.gen::<bool>();
                StepDraw::Transposition {
                    i: a.min(b),
                    j: a.max(b),
                    flip,
                }
            }
            ShuffleKind::Ost | ShuffleKind::OstBiased | ShuffleKind::BOst
            | ShuffleKind::BOstBiased => {
                let j = self.sample_right_hand(rng);
                let i = rng.gen_range(1..=j);
                let flip = matches!(self.kind, ShuffleKind::BOst | ShuffleKind::BOstBiased)
                    && rng.gen::<bool>();
                StepDraw::Transposition { i, j, flip }
            }
            ShuffleKind::Ttr => StepDraw::TopCycle {
                k: rng.gen_range(1..=n),
            },
            ShuffleKind::Rtr => StepDraw::MoveCard {
                from: rng.gen_range(1..=n),
                to: rng.gen_range(1..=n),
            },
            ShuffleKind::CyclicSimple => StepDraw::CyclicStep {
                delta: if rng.gen::<bool>() { 1 } else { n as u32 - 1 },
            },
            ShuffleKind::CyclicLazy => {
                let u = rng.gen_range(0..4u8);
                StepDraw::CyclicStep {
                    delta: match u {
                        0 | 1 => 0,
                        2 => 1,
                        _ => n as u32 - 1,
                    },
                }
            }
        }
    }

    /// Samples a full group element; intended for small `n` verification.
    pub fn sample_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        let n = self.n;
        match self.sample_step(rng) {
            StepDraw::Transposition { i, j, flip } => {
                if matches!(
                    self.kind,
                    ShuffleKind::BRt | ShuffleKind::BOst | ShuffleKind::BOstBiased
                ) {
                    let el = if flip {
                        if i == j {
                            SignedPermutation::xi(n, j)
                        } else {
                            SignedPermutation::flipped_transposition(n, i, j)
                        }
                    } else {
                        SignedPermutation::transposition(n, i, j)
                    };
                    Element::Hyp(el)
                } else {
                    Element::Sym(Permutation::transposition(n, i, j))
                }
            }
            StepDraw::TopCycle { k } => {
                let cycle: Vec<usize> = (1..=k).rev().collect();
                Element::Sym(Permutation::from_cycles(n, &[cycle]).expect("valid"))
            }
            StepDraw::MoveCard { from, to } => {
                let cycle: Vec<usize> = if to < from {
                    (to..=from).collect()
                } else {
                    (from..=to).rev().collect()
                };
                Element::Sym(Permutation::from_cycles(n, &[cycle]).expect("valid"))
            }
            StepDraw::CyclicStep { delta } => Element::Cyc {
                n: n as u32,
                value: delta % n as u32,
            },
        }
    }
}
