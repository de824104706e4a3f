//! Signed permutations: the hyperoctahedral group W(B_n) acting on the
//! 2n points `{1, .., n, 1', .., n'}`.
//!
//! Elements are stored in window notation. Entry `i` of the window is
//! `+j` when `i ↦ j` and `-j` when `i ↦ j'`; the action on primed points
//! follows by toggling primes, so the mirror symmetry holds by construction.
//!
//! Composition reads right to left: `a.compose(&b)` applies `b` first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A point of the 2n-point set. `primed` selects `i'` over `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub index: usize,
    pub primed: bool,
}

impl Point {
    pub fn new(index: usize, primed: bool) -> Self {
        Point { index, primed }
    }

    pub fn mirror(self) -> Self {
        Point {
            index: self.index,
            primed: !self.primed,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// An element of W(B_n) in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// Builds an element from its window, checking that the absolute values
    /// form a permutation of `1..=n`.
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::InvalidWindow(format!(
                    "entry {v} outside ±1..=±{n}"
                )));
            }
            if std::mem::replace(&mut seen[a - 1], true) {
                return Err(Error::InvalidWindow(format!("|{v}| appears twice")));
            }
        }
        Ok(SignedPermutation { window })
    }

    /// Builds an element from an underlying permutation and a sign mask; bit
    /// `i - 1` of `mask` set means entry `i` is negative.
    pub fn from_parts(base: &Permutation, mask: u64) -> Self {
        let window = base
            .images()
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                if mask >> i & 1 == 1 {
                    -(x as i32)
                } else {
                    x as i32
                }
            })
            .collect();
        SignedPermutation { window }
    }

    pub(crate) fn from_window_unchecked(window: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(window.clone()).is_ok());
        SignedPermutation { window }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        Ok(SignedPermutation {
            window: (1..=n as i32).collect(),
        })
    }

    /// The product of the transpositions `(i, i')` for `i` in `pairs`.
    /// Repeated indices cancel.
    pub fn sign_flips<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut w = Self::identity(n)?;
        for i in pairs {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            w.window[i - 1] = -w.window[i - 1];
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of a point of the 2n-point set.
    pub fn apply(&self, p: Point) -> Point {
        let v = self.window[p.index - 1];
        Point {
            index: v.unsigned_abs() as usize,
            primed: (v < 0) != p.primed,
        }
    }

    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let window = other
            .window
            .iter()
            .map(|&v| {
                let image = self.window[v.unsigned_abs() as usize - 1];
                if v < 0 {
                    -image
                } else {
                    image
                }
            })
            .collect();
        Ok(SignedPermutation { window })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.rank()];
        for (i, &v) in self.window.iter().enumerate() {
            let j = v.unsigned_abs() as usize;
            window[j - 1] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPermutation { window }
    }

    /// The permutation induced on the pairs `{i, i'}`.
    pub fn projection(&self) -> Permutation {
        Permutation {
            images: self
                .window
                .iter()
                .map(|v| v.unsigned_abs() as usize)
                .collect(),
        }
    }

    /// Number of negative window entries.
    pub fn negative_entries(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// Traces the orbits on all 2n points and reports one [`SignedCycle`] per
    /// cycle of the projection, in canonical order (by smallest index).
    ///
    /// This is the definitional route; [`sign_vector`](Self::sign_vector)
    /// uses the cheaper sign-product rule.
    pub fn orbit_cycles(&self) -> Vec<SignedCycle> {
        let n = self.rank();
        // slot i - 1 for i, slot n + i - 1 for i'
        let slot = |p: Point| p.index - 1 + if p.primed { n } else { 0 };
        let mut visited = vec![false; 2 * n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            let start = Point::new(start, false);
            if visited[slot(start)] {
                continue;
            }
            let mut orbit_len = 0;
            let mut negative = false;
            let mut p = start;
            loop {
                visited[slot(p)] = true;
                orbit_len += 1;
                if p == start.mirror() {
                    negative = true;
                }
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            if negative {
                cycles.push(SignedCycle {
                    min_index: start.index,
                    length: orbit_len / 2,
                    negative: true,
                });
            } else {
                // the mirror orbit is disjoint and has the same length
                let mut q = start.mirror();
                for _ in 0..orbit_len {
                    visited[slot(q)] = true;
                    q = self.apply(q);
                }
                debug_assert_eq!(q, start.mirror());
                cycles.push(SignedCycle {
                    min_index: start.index,
                    length: orbit_len,
                    negative: false,
                });
            }
        }
        cycles
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let mut negative_lengths = Vec::new();
        let mut positive_lengths = Vec::new();
        for c in self.orbit_cycles() {
            if c.negative {
                negative_lengths.push(c.length);
            } else {
                positive_lengths.push(c.length);
            }
        }
        negative_lengths.sort_unstable();
        positive_lengths.sort_unstable();
        CycleDecomposition {
            negative_lengths,
            positive_lengths,
        }
    }

    /// One sign per cycle of the projection, in canonical order: negative
    /// exactly when the product of the window signs over the cycle is -1.
    pub fn sign_vector(&self) -> SignVector {
        let n = self.rank();
        let mut visited = vec![false; n];
        let mut entries = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut negative = false;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                let v = self.window[i];
                negative ^= v < 0;
                i = v.unsigned_abs() as usize - 1;
            }
            entries.push(if negative { Sign::Minus } else { Sign::Plus });
        }
        SignVector { entries }
    }

    /// Left-multiplies by the transpositions `(i, i')` for `i` in `pairs`.
    pub fn flip_map<I>(&self, pairs: I) -> Result<SignedPermutation>
    where
        I: IntoIterator<Item = usize>,
    {
        SignedPermutation::sign_flips(self.rank(), pairs)?.compose(self)
    }

    pub fn has_only_negative_cycles(&self) -> bool {
        self.sign_vector().is_all(Sign::Minus)
    }

    pub fn has_only_positive_cycles(&self) -> bool {
        self.sign_vector().is_all(Sign::Plus)
    }

    /// Membership in W(D_n). Evenly many negative cycles is equivalent to an
    /// even number of negative window entries.
    pub fn in_d(&self) -> bool {
        self.negative_entries() % 2 == 0
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v:+}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "signed permutation",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(err)?;
        let window = inner
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

/// One cycle of the projection together with the kind of cycle of `w` lying
/// over it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedCycle {
    pub min_index: usize,
    pub length: usize,
    pub negative: bool,
}

/// Negative cycle lengths and positive cycle lengths, each sorted. A positive
/// entry `k` stands for a mirrored pair of orbits of size `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct CycleDecomposition {
    pub negative_lengths: Vec<usize>,
    pub positive_lengths: Vec<usize>,
}

impl CycleDecomposition {
    pub fn rank(&self) -> usize {
        self.negative_lengths.iter().sum::<usize>() + self.positive_lengths.iter().sum::<usize>()
    }

    pub fn negative_count(&self) -> usize {
        self.negative_lengths.len()
    }

    /// Orbit sizes on the 2n points, sorted.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self
            .negative_lengths
            .iter()
            .map(|k| 2 * k)
            .chain(self.positive_lengths.iter().flat_map(|&k| [k, k]))
            .collect();
        sizes.sort_unstable();
        sizes
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        Ok(Permutation {
            images: (1..=n).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j - 1]).collect(),
        })
    }

    /// Disjoint cycles including fixed points, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !visited[i - 1] {
                visited[i - 1] = true;
                cycle.push(i);
                i = self.images[i - 1];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Advances to the lexicographically next permutation; returns false
    /// (leaving `self` untouched) at the last one.
    pub fn advance(&mut self) -> bool {
        let v = &mut self.images;
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The per-cycle sign sequence of an element, indexed by the cycles of its
/// projection in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    entries: Vec<Sign>,
}

impl SignVector {
    pub fn new(entries: Vec<Sign>) -> Self {
        SignVector { entries }
    }

    pub fn from_ints(values: &[i8]) -> Result<Self> {
        values
            .iter()
            .map(|&v| match v {
                1 => Ok(Sign::Plus),
                -1 => Ok(Sign::Minus),
                _ => Err(Error::Parse {
                    what: "sign",
                    input: v.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector::new)
    }

    /// Bit `j` of `mask` set means entry `j` is negative.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        SignVector {
            entries: (0..len)
                .map(|j| if mask >> j & 1 == 1 { Sign::Minus } else { Sign::Plus })
                .collect(),
        }
    }

    /// Sign vector read off the orbit structure rather than sign products.
    pub fn from_cycles(cycles: &[SignedCycle]) -> Self {
        SignVector {
            entries: cycles
                .iter()
                .map(|c| if c.negative { Sign::Minus } else { Sign::Plus })
                .collect(),
        }
    }

    pub fn entries(&self) -> &[Sign] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_all(&self, sign: Sign) -> bool {
        self.entries.iter().all(|&s| s == sign)
    }

    pub fn negative_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Sign::Minus)
            .map(|(j, _)| j)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, s) in self.entries.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            f.write_str(match s {
                Sign::Plus => "+1",
                Sign::Minus => "-1",
            })?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    /// All elements of W(B_n), built without going through the oracle module.
    fn all_elements(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        let mut base = Permutation::identity(n).unwrap();
        loop {
            for mask in 0..1u64 << n {
                out.push(SignedPermutation::from_parts(&base, mask));
            }
            if !base.advance() {
                break;
            }
        }
        out
    }

    /// Image of a point computed from an explicit 2n-point table.
    fn point_table(w: &SignedPermutation) -> Vec<Point> {
        let n = w.rank();
        (1..=n)
            .flat_map(|i| [Point::new(i, false), Point::new(i, true)])
            .map(|p| w.apply(p))
            .collect()
    }

    #[test]
    fn identity_window() {
        assert_eq!(SignedPermutation::identity(3).unwrap().window(), &[1, 2, 3]);
        assert_eq!(SignedPermutation::identity(0), Err(Error::InvalidRank(0)));
        let d = SignedPermutation::identity(2).unwrap().cycle_decomposition();
        assert_eq!(d.positive_lengths, vec![1, 1]);
        assert!(d.negative_lengths.is_empty());
    }

    #[test]
    fn identity_is_neutral() {
        let e = SignedPermutation::identity(4).unwrap();
        for w in all_elements(4) {
            assert_eq!(e.compose(&w).unwrap(), w);
            assert_eq!(w.compose(&e).unwrap(), w);
        }
    }

    #[test]
    fn compose_examples() {
        assert_eq!(sp("[-1]").compose(&sp("[-1]")).unwrap(), sp("[+1]"));
        assert_eq!(sp("[-1,+2]").compose(&sp("[+2,+1]")).unwrap(), sp("[+2,-1]"));
        assert_eq!(
            sp("[1,2]").compose(&sp("[1,2,3]")),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn compose_matches_pointwise_action() {
        // brute force over all pairs in W(B_2) on the four points
        let elems = all_elements(2);
        for a in &elems {
            for b in &elems {
                let c = a.compose(b).unwrap();
                for i in 1..=2 {
                    for primed in [false, true] {
                        let p = Point::new(i, primed);
                        assert_eq!(c.apply(p), a.apply(b.apply(p)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let e5 = SignedPermutation::identity(5).unwrap();
        assert_eq!(e5.inverse(), e5);
        assert_eq!(sp("[-1]").inverse(), sp("[-1]"));
        assert_eq!(sp("[+2,-1]").inverse(), sp("[-2,+1]"));
        for w in all_elements(3) {
            assert_eq!(w.compose(&w.inverse()).unwrap(), SignedPermutation::identity(3).unwrap());
        }
    }

    #[test]
    fn cycle_decomposition_examples() {
        let d = sp("[-1]").cycle_decomposition();
        assert_eq!((d.negative_lengths, d.positive_lengths), (vec![1], vec![]));
        let d = sp("[+2,+1]").cycle_decomposition();
        assert_eq!((d.negative_lengths, d.positive_lengths), (vec![], vec![2]));
        let d = sp("[+2,-1]").cycle_decomposition();
        assert_eq!((d.negative_lengths, d.positive_lengths), (vec![2], vec![]));
    }

    #[test]
    fn orbit_sizes_match_point_table() {
        for n in 1..=4 {
            for w in all_elements(n) {
                let table = point_table(&w);
                let idx = |p: Point| 2 * (p.index - 1) + p.primed as usize;
                let mut seen = vec![false; 2 * n];
                let mut sizes = Vec::new();
                for s in 0..2 * n {
                    if seen[s] {
                        continue;
                    }
                    let mut len = 0;
                    let mut c = s;
                    while !seen[c] {
                        seen[c] = true;
                        len += 1;
                        c = idx(table[c]);
                    }
                    sizes.push(len);
                }
                sizes.sort_unstable();
                assert_eq!(w.cycle_decomposition().orbit_sizes(), sizes, "{w}");
            }
        }
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            SignedPermutation::identity(3).unwrap().projection(),
            Permutation::identity(3).unwrap()
        );
        assert_eq!(sp("[-1]").projection(), Permutation::identity(1).unwrap());
        assert_eq!(sp("[+2,-1]").projection(), Permutation::new(vec![2, 1]).unwrap());
    }

    #[test]
    fn sign_vector_examples() {
        let s = SignedPermutation::identity(3).unwrap().sign_vector();
        assert_eq!(s, SignVector::from_ints(&[1, 1, 1]).unwrap());
        assert_eq!(sp("[-1,+2]").sign_vector(), SignVector::from_ints(&[-1, 1]).unwrap());
        assert_eq!(sp("[-1,+2]").sign_vector().to_string(), "(-1,+1)");
    }

    #[test]
    fn flip_map_examples() {
        let e = SignedPermutation::identity(2).unwrap();
        let f = e.flip_map([1]).unwrap();
        assert_eq!(f, sp("[-1,+2]"));
        assert_eq!(f.sign_vector(), SignVector::from_ints(&[-1, 1]).unwrap());
        let w = sp("[+3,-1,+2]");
        assert_eq!(w.flip_map([]).unwrap(), w);
        assert_eq!(w.flip_map([2, 3]).unwrap().flip_map([2, 3]).unwrap(), w);
        assert_eq!(
            w.flip_map([4]),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
    }

    #[test]
    fn only_negative_and_positive_counts_at_rank_two() {
        let elems = all_elements(2);
        assert_eq!(elems.len(), 8);
        assert_eq!(elems.iter().filter(|w| w.has_only_negative_cycles()).count(), 3);
        assert_eq!(elems.iter().filter(|w| w.has_only_positive_cycles()).count(), 3);
        assert!(sp("[-1]").has_only_negative_cycles());
        assert!(!sp("[-1]").has_only_positive_cycles());
        for n in 1..=4 {
            let e = SignedPermutation::identity(n).unwrap();
            assert!(!e.has_only_negative_cycles());
            assert!(e.has_only_positive_cycles());
            assert!(e.in_d());
        }
    }

    #[test]
    fn in_d_examples() {
        assert!(!sp("[-1]").in_d());
        assert!(sp("[-1,-2]").in_d());
        assert_eq!(sp("[-1,-2]").cycle_decomposition().negative_lengths, vec![1, 1]);
    }

    #[test]
    fn mirror_equivariance_exhaustive() {
        for n in 1..=5 {
            for w in all_elements(n) {
                for i in 1..=n {
                    for primed in [false, true] {
                        let p = Point::new(i, primed);
                        assert_eq!(w.apply(p.mirror()), w.apply(p).mirror());
                    }
                }
            }
        }
    }

    #[test]
    fn exhaustive_structural_properties() {
        for n in 1..=6 {
            for w in all_elements(n) {
                let d = w.cycle_decomposition();
                assert_eq!(d.rank(), n);
                // parity bridge
                assert_eq!(d.negative_count() % 2, w.negative_entries() % 2, "{w}");
                // sign-product rule agrees with the orbit rule
                let by_orbits = SignVector::from_cycles(&w.orbit_cycles());
                assert_eq!(w.sign_vector(), by_orbits, "{w}");
                assert_eq!(w.has_only_negative_cycles(), d.positive_lengths.is_empty());
                assert_eq!(w.has_only_positive_cycles(), d.negative_lengths.is_empty());
                assert_eq!(w.in_d(), d.negative_count() % 2 == 0);
            }
        }
    }

    #[test]
    fn flip_map_exhaustive() {
        for n in 1..=5 {
            for w in all_elements(n) {
                let x = w.projection();
                let cycles = x.cycles();
                let before = w.sign_vector();
                for mask in 0..1u64 << n {
                    let pairs: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    let f = w.flip_map(pairs.iter().copied()).unwrap();
                    assert_eq!(f.projection(), x);
                    let after = f.sign_vector();
                    for (j, c) in cycles.iter().enumerate() {
                        let hits = c.iter().filter(|i| pairs.contains(i)).count();
                        let expected = if hits % 2 == 1 {
                            before.entries()[j].flipped()
                        } else {
                            before.entries()[j]
                        };
                        assert_eq!(after.entries()[j], expected);
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(sp("[-1,2]").to_string(), "[-1,+2]");
        assert_eq!(sp(" [ +3, -1 , 2 ] ").window(), &[3, -1, 2]);
        assert!("[1,1]".parse::<SignedPermutation>().is_err());
        assert!("[0]".parse::<SignedPermutation>().is_err());
        assert!("1,2".parse::<SignedPermutation>().is_err());
        assert!("[]".parse::<SignedPermutation>().is_err());
        assert!("[1,x]".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn permutation_cycles_canonical() {
        let x = Permutation::new(vec![3, 4, 1, 2, 5]).unwrap();
        assert_eq!(x.cycles(), vec![vec![1, 3], vec![2, 4], vec![5]]);
        assert_eq!(x.to_string(), "(1,3)(2,4)(5)");
        assert!(Permutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn advance_enumerates_lexicographically() {
        let mut x = Permutation::identity(4).unwrap();
        let mut seen = vec![x.clone()];
        while x.advance() {
            assert!(seen.last().unwrap() < &x);
            seen.push(x.clone());
        }
        assert_eq!(seen.len(), 24);
    }
}
