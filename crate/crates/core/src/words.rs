//! Binary words, the inversion number and major index, and the six word
//! families whose statistic generating functions give the Gaussian and
//! q-Kaplansky polynomials.
//!
//! Positions are 1-indexed in every public method, matching the usual
//! combinatorial convention `w = w_1 w_2 ... w_n`.

use std::fmt;
use std::str::FromStr;

use bitvec::prelude::*;

use crate::error::{Error, Result};
use crate::polynomial::IntPoly;

/// A finite word over `{0, 1}`, stored packed.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: BitVec<u64, Msb0>,
}

impl BinaryWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        Self {
            bits: bits.into_iter().collect(),
        }
    }

    /// `bit` repeated `count` times.
    pub fn repeat(bit: bool, count: usize) -> Self {
        Self {
            bits: BitVec::repeat(bit, count),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The bit at 1-indexed position `i`.
    pub fn bit(&self, i: usize) -> bool {
        assert!(
            (1..=self.len()).contains(&i),
            "position {i} outside word of length {}",
            self.len()
        );
        self.bits[i - 1]
    }

    pub fn first(&self) -> Option<bool> {
        self.bits.first().map(|b| *b)
    }

    pub fn last(&self) -> Option<bool> {
        self.bits.last().map(|b| *b)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = bool> + ExactSizeIterator + '_ {
        self.bits.iter().by_vals()
    }

    pub fn ones(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn zeros(&self) -> usize {
        self.bits.count_zeros()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn push_run(&mut self, bit: bool, count: usize) {
        self.bits.resize(self.bits.len() + count, bit);
    }

    pub fn append(&mut self, other: &BinaryWord) {
        self.bits.extend_from_bitslice(&other.bits);
    }

    /// The subword between 1-indexed positions `from..=to`.
    pub fn slice(&self, from: usize, to: usize) -> BinaryWord {
        if from > to {
            return BinaryWord::empty();
        }
        Self {
            bits: self.bits[from - 1..to].to_bitvec(),
        }
    }

    /// Number of pairs `i < j` with `w_i = 1` and `w_j = 0`.
    pub fn inv(&self) -> usize {
        let mut ones_seen = 0;
        let mut inv = 0;
        for b in self.iter() {
            if b {
                ones_seen += 1;
            } else {
                inv += ones_seen;
            }
        }
        inv
    }

    /// Sum of descent positions `i` with `w_i = 1`, `w_{i+1} = 0`.
    pub fn maj(&self) -> usize {
        self.bits
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] && !w[1])
            .map(|(i, _)| i + 1)
            .sum()
    }

    /// Number of descents.
    pub fn des(&self) -> usize {
        self.bits.windows(2).filter(|w| w[0] && !w[1]).count()
    }

    /// Largest position holding a 0.
    pub fn last_zero_position(&self) -> Option<usize> {
        self.iter().rposition(|b| !b).map(|i| i + 1)
    }

    pub fn stat(&self, stat: Statistic) -> usize {
        match stat {
            Statistic::Inv => self.inv(),
            Statistic::Maj => self.maj(),
        }
    }

    /// Rearranges into the lexicographically next word with the same content.
    fn advance(&mut self) -> bool {
        let n = self.bits.len();
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| !self.bits[i] && self.bits[i + 1..].any())
        else {
            return false;
        };
        self.bits.set(i, true);
        let tail = &mut self.bits[i + 1..];
        let ones = tail.count_ones() - 1;
        let zeros = tail.len() - ones;
        tail[..zeros].fill(false);
        tail[zeros..].fill(true);
        true
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidWord(s.to_owned())),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord::from_bits)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Inv,
    Maj,
}

/// Which word set a [`WordFamily`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// All words with the given content.
    M,
    /// Words ending in 0.
    M0,
    /// Words starting with 0 and ending in 1.
    M1,
    /// Words ending in 1 whose last 0 is at position 1 or preceded by a 0.
    M1Bar,
    /// Words that start with 0 whenever they end in 1.
    K,
    /// Words whose last 0 is at position 1 or preceded by a 0 whenever they end in 1.
    KBar,
}

/// A word family with a fixed number of 1s and 0s.
///
/// Apart from `M`, the families describe words of length `n + 1` with
/// `m = ones` and `n - m + 1 = zeros`, so they need at least one 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WordFamily {
    kind: FamilyKind,
    ones: usize,
    zeros: usize,
}

impl WordFamily {
    pub fn new(kind: FamilyKind, ones: usize, zeros: usize) -> Result<Self> {
        if kind != FamilyKind::M && zeros == 0 {
            return Err(Error::InvalidFamily(format!(
                "{kind:?}({ones},{zeros}) needs at least one 0"
            )));
        }
        if matches!(kind, FamilyKind::M1 | FamilyKind::M1Bar) && ones == 0 {
            return Err(Error::InvalidFamily(format!(
                "{kind:?}({ones},{zeros}) needs at least one 1"
            )));
        }
        Ok(Self { kind, ones, zeros })
    }

    /// The family indexed the usual way by `n >= m`: `M(m, n-m)` for
    /// [`FamilyKind::M`], otherwise the length-`n+1` family `(m, n-m+1)`.
    pub fn indexed(kind: FamilyKind, n: usize, m: usize) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidFamily(format!(
                "{kind:?} needs m <= n, got n={n}, m={m}"
            )));
        }
        let zeros = if kind == FamilyKind::M {
            n - m
        } else {
            n - m + 1
        };
        Self::new(kind, m, zeros)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn ones(&self) -> usize {
        self.ones
    }

    pub fn zeros(&self) -> usize {
        self.zeros
    }

    pub fn word_len(&self) -> usize {
        self.ones + self.zeros
    }

    /// Membership predicate, including the content check.
    pub fn contains(&self, w: &BinaryWord) -> bool {
        if w.ones() != self.ones || w.zeros() != self.zeros {
            return false;
        }
        let ends_in_one = w.last() == Some(true);
        let last_zero_ok = || match w.last_zero_position() {
            Some(1) => true,
            Some(t) => !w.bit(t - 1),
            None => false,
        };
        match self.kind {
            FamilyKind::M => true,
            FamilyKind::M0 => w.last() == Some(false),
            FamilyKind::M1 => w.first() == Some(false) && ends_in_one,
            FamilyKind::M1Bar => ends_in_one && last_zero_ok(),
            FamilyKind::K => !ends_in_one || w.first() == Some(false),
            FamilyKind::KBar => !ends_in_one || last_zero_ok(),
        }
    }

    /// Lazily yields the members in lexicographic order.
    pub fn enumerate(&self) -> FamilyWords {
        let mut start = BinaryWord::repeat(false, self.zeros);
        start.push_run(true, self.ones);
        FamilyWords {
            family: *self,
            next: Some(start),
        }
    }

    pub fn cardinality(&self) -> usize {
        self.enumerate().count()
    }

    /// `sum q^{stat(w)}` over the family.
    pub fn stat_gen_poly(&self, stat: Statistic) -> IntPoly {
        let mut counts: Vec<u64> = Vec::new();
        for w in self.enumerate() {
            let s = w.stat(stat);
            if counts.len() <= s {
                counts.resize(s + 1, 0);
            }
            counts[s] += 1;
        }
        IntPoly::from_coeffs(counts.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for WordFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({},{})", self.kind, self.ones, self.zeros)
    }
}

/// Iterator returned by [`WordFamily::enumerate`].
#[derive(Debug, Clone)]
pub struct FamilyWords {
    family: WordFamily,
    next: Option<BinaryWord>,
}

impl Iterator for FamilyWords {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        loop {
            let cur = self.next.take()?;
            let mut succ = cur.clone();
            if succ.advance() {
                self.next = Some(succ);
            }
            if self.family.contains(&cur) {
                return Some(cur);
            }
        }
    }
}

pub fn enumerate(f: &WordFamily) -> FamilyWords {
    f.enumerate()
}

pub fn stat_gen_poly(f: &WordFamily, stat: Statistic) -> IntPoly {
    f.stat_gen_poly(stat)
}
