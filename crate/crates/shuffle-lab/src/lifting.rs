//! Word modules and the lifting-operator machinery: explicit eigenvectors of
//! the one-sided and random transposition shuffles on `S_n` and of their
//! `B_n` extensions, verified exactly against the group-algebra action.
//!
//! Vectors live in the span of words of length `n`; a letter is unsigned
//! (`a`) or signed (`a+` / `a-`, the `B_n` mode). The group acts by place
//! permutations, with sign flips acting on signed letters only.

use crate::error::{Error, Result};
use crate::group::Element;
use crate::shuffles::{ShuffleKind, ShuffleSpec, Weight};
use crate::tableaux::{
    enumerate_bi_syt, enumerate_syt, BiPartition, BiTableau, Partition, StandardTableau,
};
use crate::{q_int, Q};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A word symbol. Ordered by letter value first, with `a < a+ < a-`,
/// giving the canonical encoding used for the sparse-map key.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    Unsigned(u32),
    Plus(u32),
    Minus(u32),
}

impl Letter {
    pub fn value(&self) -> u32 {
        match self {
            Letter::Unsigned(a) | Letter::Plus(a) | Letter::Minus(a) => *a,
        }
    }

    pub fn is_signed(&self) -> bool {
        !matches!(self, Letter::Unsigned(_))
    }

    /// Sign flip: fixes unsigned letters.
    pub fn flip(&self) -> Letter {
        match self {
            Letter::Unsigned(a) => Letter::Unsigned(*a),
            Letter::Plus(a) => Letter::Minus(*a),
            Letter::Minus(a) => Letter::Plus(*a),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Letter::Unsigned(_) => 0,
            Letter::Plus(_) => 1,
            Letter::Minus(_) => 2,
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.value(), self.rank()).cmp(&(other.value(), other.rank()))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Unsigned(a) => write!(f, "{a}"),
            Letter::Plus(a) => write!(f, "{a}+"),
            Letter::Minus(a) => write!(f, "{a}-"),
        }
    }
}

pub type Word = Vec<Letter>;

/// Space-separated rendering; the empty word prints as `w0`.
pub fn word_string(w: &Word) -> String {
    if w.is_empty() {
        return "w0".into();
    }
    w.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// A sparse rational linear combination of words of one common length.
/// Stored coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordVector {
    len: usize,
    terms: BTreeMap<Word, Q>,
}

impl WordVector {
    pub fn zero(len: usize) -> Self {
        WordVector {
            len,
            terms: BTreeMap::new(),
        }
    }

    /// The empty word, a valid length-0 vector (eigenvalue 0 by convention).
    pub fn omega() -> Self {
        Self::from_word(Vec::new())
    }

    pub fn from_word(word: Word) -> Self {
        let len = word.len();
        let mut terms = BTreeMap::new();
        terms.insert(word, Q::one());
        WordVector { len, terms }
    }

    pub fn from_terms(len: usize, raw: impl IntoIterator<Item = (Word, Q)>) -> Self {
        let mut v = Self::zero(len);
        for (word, coeff) in raw {
            v.add_term(word, coeff);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, word: Word, coeff: Q) {
        debug_assert_eq!(word.len(), self.len);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scaled(&self, factor: &Q) -> Self {
        if factor.is_zero() {
            return Self::zero(self.len);
        }
        WordVector {
            len: self.len,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&-Q::one()))
    }

    /// Applies a word-level linear map taking each word to a combination of
    /// words of length `self.len + delta_len`.
    fn map_words<F>(&self, delta_len: isize, f: F) -> Self
    where
        F: Fn(&Word, &mut dyn FnMut(Word, Q)),
    {
        let new_len = (self.len as isize + delta_len) as usize;
        let mut out = Self::zero(new_len);
        for (word, coeff) in &self.terms {
            f(word, &mut |new_word, factor| {
                out.add_term(new_word, coeff * &factor);
            });
        }
        out
    }
}

impl fmt::Display for WordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*[{}]", word_string(w))?;
        }
        Ok(())
    }
}

/// Evaluation of a word: occurrence counts per unsigned letter and per
/// signed letter absolute value.
pub fn evaluation(word: &Word) -> (BTreeMap<u32, u32>, BTreeMap<u32, u32>) {
    let mut unsigned = BTreeMap::new();
    let mut signed = BTreeMap::new();
    for l in word {
        match l {
            Letter::Unsigned(a) => *unsigned.entry(*a).or_insert(0) += 1,
            Letter::Plus(a) | Letter::Minus(a) => *signed.entry(*a).or_insert(0) += 1,
        }
    }
    (unsigned, signed)
}

/// Place-permutation action: position `p` of the output takes the letter
/// from the position the group element maps onto `p`, sign-flipped when the
/// element turns that card over.
pub fn act(el: &Element, v: &WordVector) -> Result<WordVector> {
    let n = v.len();
    let ok = match el {
        Element::Sym(p) => p.n() == n,
        Element::Hyp(p) => p.n() == n,
        Element::Cyc { .. } => false,
    };
    if !ok {
        return Err(Error::SizeMismatch(format!(
            "acting on words of length {n} with {el}"
        )));
    }
    Ok(v.map_words(0, |word, emit| {
        let mut out = vec![Letter::Unsigned(0); n];
        match el {
            Element::Sym(p) => {
                for (idx, letter) in word.iter().enumerate() {
                    out[p.image(idx + 1) - 1] = *letter;
                }
            }
            Element::Hyp(p) => {
                for (idx, letter) in word.iter().enumerate() {
                    let im = p.image(idx + 1);
                    let pos = im.unsigned_abs() as usize - 1;
                    out[pos] = if im < 0 { letter.flip() } else { *letter };
                }
            }
            Element::Cyc { .. } => unreachable!(),
        }
        emit(out, Q::one());
    }))
}

/// `Phi_a`: append the unsigned letter `a`.
pub fn phi(v: &WordVector, a: u32) -> WordVector {
    v.map_words(1, |word, emit| {
        let mut w = word.clone();
        w.push(Letter::Unsigned(a));
        emit(w, Q::one());
    })
}

/// `Phi_a^+` / `Phi_a^-`: append a signed letter.
pub fn phi_signed_single(v: &WordVector, a: u32, positive: bool) -> WordVector {
    v.map_words(1, |word, emit| {
        let mut w = word.clone();
        w.push(if positive {
            Letter::Plus(a)
        } else {
            Letter::Minus(a)
        });
        emit(w, Q::one());
    })
}

/// `Phi_a^2 = Phi_a^+ - Phi_a^-`, the signed adding operator.
pub fn phi_signed(v: &WordVector, a: u32) -> WordVector {
    v.map_words(1, |word, emit| {
        let mut plus = word.clone();
        plus.push(Letter::Plus(a));
        emit(plus, Q::one());
        let mut minus = word.clone();
        minus.push(Letter::Minus(a));
        emit(minus, -Q::one());
    })
}

/// `Theta_{b,a}` on unsigned letters: sum over replacements of one unsigned
/// `b` by unsigned `a`. `Theta_{a,a}` multiplies by the occurrence count.
pub fn theta(v: &WordVector, b: u32, a: u32) -> WordVector {
    v.map_words(0, |word, emit| {
        for (idx, letter) in word.iter().enumerate() {
            if *letter == Letter::Unsigned(b) {
                let mut w = word.clone();
                w[idx] = Letter::Unsigned(a);
                emit(w, Q::one());
            }
        }
    })
}

/// `Theta_{b,a}^2 = Theta^+ - Theta^-` on signed letters: replace one signed
/// `b` by a signed `a`, sign-preserving minus sign-swapping.
pub fn theta_signed(v: &WordVector, b: u32, a: u32) -> WordVector {
    v.map_words(0, |word, emit| {
        for (idx, letter) in word.iter().enumerate() {
            match letter {
                Letter::Plus(x) if *x == b => {
                    let mut w = word.clone();
                    w[idx] = Letter::Plus(a);
                    emit(w, Q::one());
                    let mut w = word.clone();
                    w[idx] = Letter::Minus(a);
                    emit(w, -Q::one());
                }
                Letter::Minus(x) if *x == b => {
                    let mut w = word.clone();
                    w[idx] = Letter::Minus(a);
                    emit(w, Q::one());
                    let mut w = word.clone();
                    w[idx] = Letter::Plus(a);
                    emit(w, -Q::one());
                }
                _ => {}
            }
        }
    })
}

/// `Theta_{b^(+-),a}`: replace one signed `b` (either sign) by unsigned `a`.
pub fn theta_signed_to_unsigned(v: &WordVector, b: u32, a: u32) -> WordVector {
    v.map_words(0, |word, emit| {
        for (idx, letter) in word.iter().enumerate() {
            if letter.is_signed() && letter.value() == b {
                let mut w = word.clone();
                w[idx] = Letter::Unsigned(a);
                emit(w, Q::one());
            }
        }
    })
}

/// The insertion (shuffling) operator `sh_a`: the sum of all words formed by
/// inserting the unsigned letter `a` in each of the `len + 1` positions.
pub fn shuffle_insert(v: &WordVector, a: u32) -> WordVector {
    v.map_words(1, |word, emit| {
        for pos in 0..=word.len() {
            let mut w = word.clone();
            w.insert(pos, Letter::Unsigned(a));
            emit(w, Q::one());
        }
    })
}

/// Which adding/switching flavor a lifting step uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Flavor {
    Plain,
    Signed,
}

fn phi_flavored(v: &WordVector, a: u32, flavor: Flavor) -> WordVector {
    match flavor {
        Flavor::Plain => phi(v, a),
        Flavor::Signed => phi_signed(v, a),
    }
}

fn theta_flavored(v: &WordVector, b: u32, a: u32, flavor: Flavor) -> WordVector {
    match flavor {
        Flavor::Plain => theta(v, b, a),
        Flavor::Signed => theta_signed(v, b, a),
    }
}

/// Shared chain expansion of the lifting operators: over every chain
/// `b_1 < ... < b_m < i`, apply `Phi_{b_1}` then `Theta_{b_1,b_2}`, ...,
/// `Theta_{b_m,i}`, weighted by the product of the inverse index gaps
/// (scaled by `k_scale`, which is 1 in `S_n` and the component in `B_n`).
fn kappa_impl(
    row_lengths: &Partition,
    i: usize,
    v: &WordVector,
    flavor: Flavor,
    k_scale: i64,
) -> Result<WordVector> {
    let valid = i >= 1
        && i <= row_lengths.len() + 1
        && (i == 1 || row_lengths.part(i - 1) > row_lengths.part(i));
    if !valid {
        return Err(Error::InvalidBox(format!(
            "adding a box on row {i} of {row_lengths} does not give a partition"
        )));
    }
    let lam = |r: usize| row_lengths.part(r) as i64;
    let target_index = lam(i) - i as i64;
    let mut out = WordVector::zero(v.len() + 1);
    // Chains are subsets of {1, ..., i-1} in increasing order.
    let below = i - 1;
    for mask in 0..(1u32 << below) {
        let chain: Vec<usize> = (1..=below).filter(|b| mask >> (b - 1) & 1 == 1).collect();
        let mut coeff = Q::one();
        for &b in &chain {
            coeff /= q_int(k_scale * (target_index - (lam(b) - b as i64)));
        }
        let first = *chain.first().unwrap_or(&i);
        let mut u = phi_flavored(v, first as u32, flavor);
        for (step, &b) in chain.iter().enumerate() {
            let next = *chain.get(step + 1).unwrap_or(&i);
            u = theta_flavored(&u, b as u32, next as u32, flavor);
        }
        out = out.add(&u.scaled(&coeff));
    }
    Ok(out)
}

/// Lifting operator `kappa_i` from the Specht module of `shape` into that of
/// `shape + e_i`. Injective on eigenvectors: never zero on nonzero input.
pub fn kappa(shape: &Partition, i: usize, v: &WordVector) -> Result<WordVector> {
    if v.len() != shape.size() {
        return Err(Error::SizeMismatch(format!(
            "vector of length {} against shape {shape}",
            v.len()
        )));
    }
    kappa_impl(shape, i, v, Flavor::Plain, 1)
}

/// `B_n` lifting operator `kappa_i^k` adding a box on row `i` of component
/// `k` (1 or 2); the denominators carry the extra factor `k`.
pub fn kappa_signed(shape: &BiPartition, k: usize, i: usize, v: &WordVector) -> Result<WordVector> {
    if v.len() != shape.size() {
        return Err(Error::SizeMismatch(format!(
            "vector of length {} against shape {shape}",
            v.len()
        )));
    }
    match k {
        1 => kappa_impl(shape.first(), i, v, Flavor::Plain, 1),
        2 => kappa_impl(shape.second(), i, v, Flavor::Signed, 2),
        _ => Err(Error::InvalidBox(format!("component {k} is not 1 or 2"))),
    }
}

/// The scaled group-algebra element of a spec, as `(element, coefficient)`
/// pairs with `coefficient = scale * pmf`.
pub fn algebra_terms(spec: &ShuffleSpec) -> Result<Vec<(Element, Q)>> {
    let scale = spec.algebra_scale()?;
    Ok(spec
        .support()?
        .into_iter()
        .map(|(el, p)| (el, p * &scale))
        .collect())
}

/// Exact action of the scaled group-algebra element on a word vector.
pub fn apply_shuffle_algebra(v: &WordVector, spec: &ShuffleSpec) -> Result<WordVector> {
    if spec.n() != v.len() {
        return Err(Error::SizeMismatch(format!(
            "algebra element at n = {} on words of length {}",
            spec.n(),
            v.len()
        )));
    }
    let mut out = WordVector::zero(v.len());
    for (el, coeff) in algebra_terms(spec)? {
        out = out.add(&act(&el, v)?.scaled(&coeff));
    }
    Ok(out)
}

/// Whether `v` is an exact eigenvector of the spec's walk with the given
/// normalized eigenvalue: the scaled algebra element must act as
/// `scale * eigenvalue`.
pub fn verify_eigenvector(v: &WordVector, spec: &ShuffleSpec, eigenvalue: &Q) -> Result<bool> {
    let lhs = apply_shuffle_algebra(v, spec)?;
    let rhs = v.scaled(&(spec.algebra_scale()? * eigenvalue));
    Ok(lhs == rhs)
}

/// Eigenvalue increment of one lifting step: the box `(i, lambda_i + 1)` of
/// component `k` is added when the walk grows from `m - 1` to `m` cards.
fn lift_increment(
    kind: ShuffleKind,
    weight: &Weight,
    row_len: i64,
    i: i64,
    k: usize,
    m: usize,
) -> Result<Q> {
    let diag = row_len + 1 - i; // diagonal index of the new box
    Ok(match kind {
        ShuffleKind::Ost | ShuffleKind::OstBiased => {
            weight.rational(m)? * q_int(2 + row_len - i) / q_int(m as i64)
        }
        ShuffleKind::Rt => q_int(1 + 2 * diag),
        ShuffleKind::BRt => {
            if k == 1 {
                q_int(2 + 4 * diag)
            } else {
                q_int(4 * diag)
            }
        }
        ShuffleKind::BOst | ShuffleKind::BOstBiased => {
            let numer = if k == 1 { diag + 1 } else { diag };
            weight.rational(m)? * q_int(numer) / q_int(m as i64)
        }
        other => return Err(Error::UnsupportedKind(other.name().into())),
    })
}

/// One lifted eigenvector: the tableau encoding its lifting path, the vector
/// itself, and its exact normalized eigenvalue under the spec's walk.
pub struct LiftedVector<TabKind> {
    pub tableau: TabKind,
    pub vector: WordVector,
    pub eigenvalue: Q,
}

fn grow(shape: &Partition, i: usize) -> Partition {
    let mut parts = shape.parts().to_vec();
    if i > parts.len() {
        parts.push(1);
    } else {
        parts[i - 1] += 1;
    }
    Partition::new(parts).expect("valid growth row")
}

/// Builds the full eigenbasis of the Specht module of `shape` for an `S_n`
/// spec (`OST`, biased `OST`, or `RT`), one vector per standard tableau.
/// The vectors depend only on the shape; the eigenvalues depend on the spec.
pub fn build_eigenbasis(
    shape: &Partition,
    spec: &ShuffleSpec,
    cap: usize,
) -> Result<Vec<LiftedVector<StandardTableau>>> {
    if spec.kind().group_kind() != Some(crate::group::GroupKind::Symmetric) {
        return Err(Error::UnsupportedKind(spec.kind().name().into()));
    }
    if spec.n() != shape.size() {
        return Err(Error::SizeMismatch(format!(
            "spec at n = {} against shape {shape}",
            spec.n()
        )));
    }
    let scale = spec.algebra_scale()?;
    let mut out = Vec::new();
    for tableau in enumerate_syt(shape, cap)? {
        let mut vector = WordVector::omega();
        let mut raw = Q::zero();
        let mut grown = Partition::empty();
        for m in 1..=shape.size() {
            let (i, _) = tableau.position_of(m as u32);
            raw += lift_increment(
                spec.kind(),
                spec.weight(),
                grown.part(i) as i64,
                i as i64,
                1,
                m,
            )?;
            vector = kappa(&grown, i, &vector)?;
            grown = grow(&grown, i);
        }
        out.push(LiftedVector {
            tableau,
            vector,
            eigenvalue: raw / &scale,
        });
    }
    Ok(out)
}

/// `B_n` analogue of [`build_eigenbasis`] for `B_RT` and (biased) `B_OST`,
/// one vector per standard bi-tableau.
pub fn build_eigenbasis_signed(
    shape: &BiPartition,
    spec: &ShuffleSpec,
    cap: usize,
) -> Result<Vec<LiftedVector<BiTableau>>> {
    if spec.kind().group_kind() != Some(crate::group::GroupKind::Hyperoctahedral) {
        return Err(Error::UnsupportedKind(spec.kind().name().into()));
    }
    if spec.n() != shape.size() {
        return Err(Error::SizeMismatch(format!(
            "spec at n = {} against shape {shape}",
            spec.n()
        )));
    }
    let scale = spec.algebra_scale()?;
    let mut out = Vec::new();
    for tableau in enumerate_bi_syt(shape, cap)? {
        let mut vector = WordVector::omega();
        let mut raw = Q::zero();
        let mut grown = BiPartition::new(Partition::empty(), Partition::empty());
        for m in 1..=shape.size() {
            let v = m as u32;
            let (k, i) = if tableau.first().rows().iter().any(|row| row.contains(&v)) {
                (1, tableau.first().position_of(v).0)
            } else {
                (2, tableau.second().position_of(v).0)
            };
            let component = if k == 1 { grown.first() } else { grown.second() };
            raw += lift_increment(
                spec.kind(),
                spec.weight(),
                component.part(i) as i64,
                i as i64,
                k,
                m,
            )?;
            vector = kappa_signed(&grown, k, i, &vector)?;
            grown = if k == 1 {
                BiPartition::new(grow(grown.first(), i), grown.second().clone())
            } else {
                BiPartition::new(grown.first().clone(), grow(grown.second(), i))
            };
        }
        out.push(LiftedVector {
            tableau,
            vector,
            eigenvalue: raw / &scale,
        });
    }
    Ok(out)
}

/// Exact rank of a set of word vectors by rational Gaussian elimination.
pub fn rank(vectors: &[WordVector]) -> usize {
    let mut columns: BTreeMap<Word, usize> = BTreeMap::new();
    for v in vectors {
        for (w, _) in v.terms() {
            let next = columns.len();
            columns.entry(w.clone()).or_insert(next);
        }
    }
    let width = columns.len();
    let mut rows: Vec<Vec<Q>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![Q::zero(); width];
            for (w, c) in v.terms() {
                row[columns[w]] = c.clone();
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let head = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &head;
            for c in col..width {
                let delta = &rows[rank][c] * &factor;
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
