//! Elements and arithmetic of the symmetric group `S_n` and the
//! hyperoctahedral group `B_n`, plus full-group enumeration in a canonical
//! order for oracle use.
//!
//! Elements are stored in one-line image form: `images[k]` is the (1-based)
//! position of card `k + 1`. Cycle notation is a display format only. For
//! `B_n` the sign of an image records face-up (`+`) / face-down (`-`); the
//! relation `sigma(-i) = -sigma(i)` is implied, never stored.

use crate::error::{Error, Result};
use crate::tableaux::{BiPartition, Partition};
use std::cmp::Ordering;
use std::fmt;

/// Default enumeration cap for `S_n` (7! = 5040 elements).
pub const DEFAULT_SN_CAP: usize = 7;
/// Default enumeration cap for `B_n` (2^5 * 5! = 3840 elements).
pub const DEFAULT_BN_CAP: usize = 5;

/// A permutation of `{1..n}` in one-line image form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images; `images[k]` is the position
    /// of card `k + 1`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "images {images:?} are not a bijection on 1..={n}"
                )));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles written with 1-based labels,
    /// e.g. `(1 2 5)(4 6)` as `&[vec![1, 2, 5], vec![4, 6]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from == 0 || from > n || to == 0 || to > n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry out of range in {cycle:?}"
                    )));
                }
                images[from - 1] = to as u32;
            }
        }
        Self::from_images(images)
    }

    /// The transposition `(i j)` with 1-based `i != j`; `(i i)` is the identity.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 1-based position of 1-based card `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// `(self o other)(i) = self(other(i))`, composition right to left.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!(
                "compose of S_{} with S_{}",
                self.n(),
                other.n()
            )));
        }
        let images = other
            .images
            .iter()
            .map(|&v| self.images[v as usize - 1])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = k as u32 + 1;
        }
        Permutation { images }
    }

    /// Non-increasing cycle lengths, a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let mut lengths = Vec::new();
        let mut seen = vec![false; self.n()];
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur] as usize - 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths form a partition")
    }

    pub fn sign(&self) -> i8 {
        let cycles = self.cycle_type().len();
        if (self.n() - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Number of 1-based positions `p` with the matching card in place.
    pub fn has_fixed_point_in(&self, positions: std::ops::RangeInclusive<usize>) -> bool {
        positions.into_iter().any(|p| self.images[p - 1] as usize == p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let mut seen = vec![false; self.n()];
        for start in 0..self.n() {
            if seen[start] || self.images[start] as usize == start + 1 {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut cur = start;
            let mut first = true;
            while !seen[cur] {
                seen[cur] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", cur + 1)?;
                first = false;
                cur = self.images[cur] as usize - 1;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A signed permutation: `images[k] = s * p` places card `k + 1` at 1-based
/// position `p`, face-down when `s` is negative.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "signed images {images:?}: absolute values are not a bijection on 1..={n}"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    /// Builds `(prod_{f in flips} xi_f) * eta` where `eta` is given by cycles.
    /// `xi_f` flips whatever lands in position `f`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>], flips: &[usize]) -> Result<Self> {
        let eta = Permutation::from_cycles(n, cycles)?;
        let mut images: Vec<i32> = eta.images().iter().map(|&v| v as i32).collect();
        for &f in flips {
            if f == 0 || f > n {
                return Err(Error::InvalidPermutation(format!("flip {f} out of range")));
            }
            for v in images.iter_mut() {
                if v.unsigned_abs() as usize == f {
                    *v = -*v;
                }
            }
        }
        Self::from_images(images)
    }

    /// Embeds a plain permutation as an all-face-up element.
    pub fn from_permutation(p: &Permutation) -> Self {
        SignedPermutation {
            images: p.images().iter().map(|&v| v as i32).collect(),
        }
    }

    /// The negative transposition `xi_i` (flip card `i` in place), 1-based.
    pub fn xi(n: usize, i: usize) -> Self {
        let mut images: Vec<i32> = (1..=n as i32).collect();
        images[i - 1] = -(i as i32);
        SignedPermutation { images }
    }

    /// The positive transposition `(i j)`, 1-based, all faces kept up.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        Self::from_permutation(&Permutation::transposition(n, i, j))
    }

    /// `xi_i xi_j (i j)`: swap cards at `i`, `j` and flip both, 1-based.
    pub fn flipped_transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<i32> = (1..=n as i32).collect();
        images[i - 1] = -(j as i32);
        images[j - 1] = -(i as i32);
        SignedPermutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Signed 1-based image of 1-based card `i`.
    pub fn image(&self, i: usize) -> i32 {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k as i32 + 1)
    }

    /// `(self o other)(i) = self(other(i))`, sign-respecting.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!(
                "compose of B_{} with B_{}",
                self.n(),
                other.n()
            )));
        }
        let images = other
            .images
            .iter()
            .map(|&v| {
                let w = self.images[v.unsigned_abs() as usize - 1];
                if v < 0 {
                    -w
                } else {
                    w
                }
            })
            .collect();
        Ok(SignedPermutation { images })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0i32; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            images[a - 1] = if v < 0 { -(k as i32 + 1) } else { k as i32 + 1 };
        }
        SignedPermutation { images }
    }

    /// Cycle type as a bi-partition (positive-cycle lengths, negative-cycle
    /// lengths). A cycle is negative when it carries an odd number of flips.
    pub fn signed_cycle_type(&self) -> BiPartition {
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        let mut seen = vec![false; self.n()];
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut flips = 0usize;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                if self.images[cur] < 0 {
                    flips += 1;
                }
                cur = self.images[cur].unsigned_abs() as usize - 1;
            }
            if flips % 2 == 0 {
                positive.push(len);
            } else {
                negative.push(len);
            }
        }
        positive.sort_unstable_by(|a, b| b.cmp(a));
        negative.sort_unstable_by(|a, b| b.cmp(a));
        BiPartition::new(
            Partition::new(positive).expect("cycle lengths"),
            Partition::new(negative).expect("cycle lengths"),
        )
    }

    pub fn sign(&self) -> i8 {
        let flips = self.images.iter().filter(|&&v| v < 0).count();
        let eta = Permutation::from_images(
            self.images.iter().map(|&v| v.unsigned_abs()).collect(),
        )
        .expect("underlying permutation");
        if flips % 2 == 0 {
            eta.sign()
        } else {
            -eta.sign()
        }
    }
}

/// Canonical order on signed values: `+1 < -1 < +2 < -2 < ...`
fn signed_key(v: i32) -> (u32, bool) {
    (v.unsigned_abs(), v < 0)
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.images.iter().map(|&v| signed_key(v));
        let b = other.images.iter().map(|&v| signed_key(v));
        a.cmp(b)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A group element usable as a state of an exact walk. `Cyc` is the state of
/// the cyclic-group walks used by the distance tables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Element {
    Sym(Permutation),
    Hyp(SignedPermutation),
    Cyc { n: u32, value: u32 },
}

impl Element {
    pub fn compose(&self, other: &Self) -> Result<Element> {
        match (self, other) {
            (Element::Sym(p), Element::Sym(q)) => Ok(Element::Sym(p.compose(q)?)),
            (Element::Hyp(p), Element::Hyp(q)) => Ok(Element::Hyp(p.compose(q)?)),
            (Element::Cyc { n: n1, value: v1 }, Element::Cyc { n: n2, value: v2 }) => {
                if n1 != n2 {
                    return Err(Error::SizeMismatch(format!("Z_{n1} with Z_{n2}")));
                }
                Ok(Element::Cyc {
                    n: *n1,
                    value: (v1 + v2) % n1,
                })
            }
            _ => Err(Error::SizeMismatch("mixed group kinds".into())),
        }
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Sym(p) => Element::Sym(p.inverse()),
            Element::Hyp(p) => Element::Hyp(p.inverse()),
            Element::Cyc { n, value } => Element::Cyc {
                n: *n,
                value: (n - value) % n,
            },
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Sym(p) => p.is_identity(),
            Element::Hyp(p) => p.is_identity(),
            Element::Cyc { value, .. } => *value == 0,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Sym(p) => write!(f, "{p}"),
            Element::Hyp(p) => write!(f, "{p}"),
            Element::Cyc { value, .. } => write!(f, "{value}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupKind {
    Symmetric,
    Hyperoctahedral,
}

/// Enumerates `S_n` in lexicographic order on image sequences.
pub fn enumerate_symmetric(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "S_n enumeration",
            requested: n,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, images: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if images.len() == n {
            out.push(Permutation {
                images: images.clone(),
            });
            return;
        }
        for v in 1..=n as u32 {
            if !used[v as usize - 1] {
                used[v as usize - 1] = true;
                images.push(v);
                rec(n, images, used, out);
                images.pop();
                used[v as usize - 1] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    Ok(out)
}

/// Enumerates `B_n` in lexicographic order on signed image sequences, with
/// `+k < -k`.
pub fn enumerate_hyperoctahedral(n: usize, cap: usize) -> Result<Vec<SignedPermutation>> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "B_n enumeration",
            requested: n,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, images: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<SignedPermutation>) {
        if images.len() == n {
            out.push(SignedPermutation {
                images: images.clone(),
            });
            return;
        }
        for a in 1..=n as i32 {
            if used[a as usize - 1] {
                continue;
            }
            for v in [a, -a] {
                used[a as usize - 1] = true;
                images.push(v);
                rec(n, images, used, out);
                images.pop();
                used[a as usize - 1] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    Ok(out)
}

/// Enumerates a group in its canonical order, as [`Element`]s.
pub fn enumerate_group(kind: GroupKind, n: usize, cap: usize) -> Result<Vec<Element>> {
    match kind {
        GroupKind::Symmetric => Ok(enumerate_symmetric(n, cap)?
            .into_iter()
            .map(Element::Sym)
            .collect()),
        GroupKind::Hyperoctahedral => Ok(enumerate_hyperoctahedral(n, cap)?
            .into_iter()
            .map(Element::Hyp)
            .collect()),
    }
}
