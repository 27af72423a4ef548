//! Integer partitions in a box, conjugation, and the weight-preserving
//! injection behind the nonnegativity of the `D_q` differences.

use std::fmt;

use crate::error::{Error, Result};
use crate::logconcavity::DiffSpec;

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Accepts a weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part, 1-indexed, with zero padding past the length.
    pub fn part(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.part(1)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Self { parts }
    }

    /// Conjugate parts padded with zeros to exactly `len` entries.
    fn conjugate_padded(&self, len: usize) -> Vec<usize> {
        let mut c = self.conjugate().parts;
        debug_assert!(c.len() <= len);
        c.resize(len, 0);
        c
    }

    pub fn fits_in(&self, b: BoxShape) -> bool {
        self.len() <= b.rows && self.largest() <= b.cols
    }

    fn check_box(&self, b: BoxShape) -> Result<()> {
        if self.fits_in(b) {
            Ok(())
        } else {
            Err(Error::OutOfBox {
                partition: self.to_string(),
                rows: b.rows,
                cols: b.cols,
            })
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// At most `rows` parts, each at most `cols`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxShape {
    pub rows: usize,
    pub cols: usize,
}

impl BoxShape {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols }
    }

    /// Lazily yields every partition in the box exactly once, starting with
    /// the empty partition.
    pub fn partitions(self) -> BoxPartitions {
        BoxPartitions {
            shape: self,
            current: Some(vec![0; self.rows]),
        }
    }
}

/// Iterator returned by [`BoxShape::partitions`].
///
/// The state is the zero-padded part vector; successive states increase in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct BoxPartitions {
    shape: BoxShape,
    current: Option<Vec<usize>>,
}

impl Iterator for BoxPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.as_mut()?;
        let out = Partition::from_sorted(cur.clone());
        let cols = self.shape.cols;
        let bump = (0..cur.len())
            .rev()
            .find(|&i| cur[i] < cols && (i == 0 || cur[i] < cur[i - 1]));
        match bump {
            Some(i) => {
                cur[i] += 1;
                cur[i + 1..].iter_mut().for_each(|x| *x = 0);
            }
            None => self.current = None,
        }
        Some(out)
    }
}

pub fn enumerate_box(b: BoxShape) -> BoxPartitions {
    b.partitions()
}

/// Intermediate data of one run of [`butler_inject`].
///
/// Cut indices are 1-based positions; zero means no index qualified and the
/// corresponding stage left its inputs untouched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectionTrace {
    pub first_cut: usize,
    pub second_cut: usize,
    /// Partitions after the first prefix swap.
    pub gamma: Partition,
    pub tau: Partition,
    /// Their conjugates, zero-padded to `M - m` and `N - l` entries.
    pub gamma_conj: Vec<usize>,
    pub tau_conj: Vec<usize>,
    /// Sequences after the second prefix swap; conjugating them gives the output.
    pub gamma_tilde: Vec<usize>,
    pub tau_tilde: Vec<usize>,
}

/// Domain box pair `(P(m-1, M-m+1), P(l+1, N-l-1))`.
pub fn injection_domain(spec: &DiffSpec) -> (BoxShape, BoxShape) {
    let (big_m, big_n, m, l) = spec.params();
    (
        BoxShape::new(m - 1, big_m - m + 1),
        BoxShape::new(l + 1, big_n - l - 1),
    )
}

/// Codomain box pair `(P(m, M-m), P(l, N-l))`.
pub fn injection_codomain(spec: &DiffSpec) -> (BoxShape, BoxShape) {
    let (big_m, big_n, m, l) = spec.params();
    (BoxShape::new(m, big_m - m), BoxShape::new(l, big_n - l))
}

/// Weight-preserving injection
/// `P(m-1, M-m+1) × P(l+1, N-l-1) → P(m, M-m) × P(l, N-l)`.
///
/// Stage one exchanges the first `I` parts of `lam` and `mu` with offset
/// `c1 = (M-m) - (N-l) + 1`, where `I` is the largest index with
/// `lam_I >= mu_{I+1} + c1`. Stage two conjugates both results and performs
/// the same exchange on the conjugates with offset `c2 = l - m + 1`, where
/// `J` is the largest index with `tau'_J >= gamma'_{J+1} + c2`.
pub fn butler_inject(
    lam: &Partition,
    mu: &Partition,
    spec: &DiffSpec,
) -> Result<(Partition, Partition, InjectionTrace)> {
    let (big_m, big_n, m, l) = spec.params();
    let (lam_box, mu_box) = injection_domain(spec);
    lam.check_box(lam_box)?;
    mu.check_box(mu_box)?;

    let c1 = (big_m - m) + 1 - (big_n - l);
    let first_cut = (1..m)
        .rev()
        .find(|&i| lam.part(i) >= mu.part(i + 1) + c1)
        .unwrap_or(0);
    let (gamma, tau) = if first_cut == 0 {
        debug_assert!(lam.largest() < big_m - m);
        (lam.clone(), mu.clone())
    } else {
        let gamma = (1..m)
            .map(|i| {
                if i <= first_cut {
                    mu.part(i) + c1
                } else {
                    lam.part(i)
                }
            })
            .collect();
        let tau = (1..=l + 1)
            .map(|i| {
                if i <= first_cut {
                    lam.part(i) - c1
                } else {
                    mu.part(i)
                }
            })
            .collect();
        (Partition::from_sorted(gamma), Partition::from_sorted(tau))
    };
    assert!(gamma.largest() <= big_m - m, "stage one overflow: {gamma}");
    assert!(tau.largest() <= big_n - l, "stage one overflow: {tau}");

    let gamma_conj = gamma.conjugate_padded(big_m - m);
    let tau_conj = tau.conjugate_padded(big_n - l);
    let at = |s: &[usize], j: usize| s.get(j - 1).copied().unwrap_or(0);

    let c2 = l - m + 1;
    let second_cut = (1..=big_n - l)
        .rev()
        .find(|&j| at(&tau_conj, j) >= at(&gamma_conj, j + 1) + c2)
        .unwrap_or(0);
    let gamma_tilde: Vec<usize> = (1..=big_m - m)
        .map(|j| {
            if j <= second_cut {
                at(&tau_conj, j) - c2
            } else {
                at(&gamma_conj, j)
            }
        })
        .collect();
    let tau_tilde: Vec<usize> = (1..=big_n - l)
        .map(|j| {
            if j <= second_cut {
                at(&gamma_conj, j) + c2
            } else {
                at(&tau_conj, j)
            }
        })
        .collect();
    assert!(
        at(&gamma_tilde, 1) <= m,
        "stage two overflow: {gamma_tilde:?}"
    );
    assert!(at(&tau_tilde, 1) <= l, "stage two overflow: {tau_tilde:?}");

    let eta = Partition::from_sorted(gamma_tilde.clone()).conjugate();
    let rho = Partition::from_sorted(tau_tilde.clone()).conjugate();
    let trace = InjectionTrace {
        first_cut,
        second_cut,
        gamma,
        tau,
        gamma_conj,
        tau_conj,
        gamma_tilde,
        tau_tilde,
    };
    Ok((eta, rho, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(part(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::InvalidPartition(_))
        ));
        assert_eq!(part(&[3, 1]).part(3), 0);
        assert_eq!(part(&[3, 1]).weight(), 4);
    }

    #[test]
    fn conjugation() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[2, 2]).conjugate(), part(&[2, 2]));
        assert_eq!(
            part(&[5, 3, 3, 1]).conjugate().conjugate(),
            part(&[5, 3, 3, 1])
        );
    }

    #[test]
    fn box_enumeration() {
        let all: Vec<_> = enumerate_box(BoxShape::new(0, 4)).collect();
        assert_eq!(all, vec![Partition::empty()]);

        let all: Vec<_> = enumerate_box(BoxShape::new(1, 3)).collect();
        assert_eq!(
            all,
            vec![Partition::empty(), part(&[1]), part(&[2]), part(&[3])]
        );

        let mut all: Vec<_> = enumerate_box(BoxShape::new(2, 2)).collect();
        assert_eq!(all.len(), 6);
        all.sort();
        let mut want = vec![
            Partition::empty(),
            part(&[1]),
            part(&[2]),
            part(&[1, 1]),
            part(&[2, 1]),
            part(&[2, 2]),
        ];
        want.sort();
        assert_eq!(all, want);

        assert_eq!(enumerate_box(BoxShape::new(3, 0)).count(), 1);
    }

    fn spec(big_m: usize, big_n: usize, m: usize, l: usize) -> DiffSpec {
        DiffSpec::new(big_m, big_n, m, l).unwrap()
    }

    #[test]
    fn injection_empty_pair() {
        let s = spec(4, 4, 2, 2);
        let (eta, rho, tr) = butler_inject(&Partition::empty(), &Partition::empty(), &s).unwrap();
        assert!(eta.is_empty() && rho.is_empty());
        assert_eq!((tr.first_cut, tr.second_cut), (0, 0));
    }

    #[test]
    fn injection_worked_example_both_stages() {
        let s = spec(4, 4, 2, 2);
        let (eta, rho, tr) = butler_inject(&part(&[3]), &part(&[1, 1, 1]), &s).unwrap();
        assert_eq!(eta, part(&[1, 1]));
        assert_eq!(rho, part(&[2, 2]));
        assert_eq!((tr.first_cut, tr.second_cut), (1, 2));
        assert_eq!(tr.gamma, part(&[2]));
        assert_eq!(tr.tau, part(&[2, 1, 1]));
        assert_eq!(tr.gamma_conj, vec![1, 1]);
        assert_eq!(tr.tau_conj, vec![3, 1]);
        assert_eq!(eta.weight() + rho.weight(), 6);
    }

    #[test]
    fn injection_first_stage_idle() {
        let s = spec(4, 4, 2, 2);
        let (eta, rho, tr) = butler_inject(&part(&[1]), &part(&[1, 1, 1]), &s).unwrap();
        assert_eq!(eta, part(&[1, 1]));
        assert_eq!(rho, part(&[1, 1]));
        assert_eq!((tr.first_cut, tr.second_cut), (0, 1));
    }

    #[test]
    fn injection_rejects_out_of_box_inputs() {
        let s = spec(4, 4, 2, 2);
        // lam lives in a 1x3 box
        assert!(matches!(
            butler_inject(&part(&[4]), &Partition::empty(), &s),
            Err(Error::OutOfBox {
                rows: 1,
                cols: 3,
                ..
            })
        ));
        assert!(matches!(
            butler_inject(&part(&[1, 1]), &Partition::empty(), &s),
            Err(Error::OutOfBox { .. })
        ));
        // mu lives in a 3x1 box
        assert!(matches!(
            butler_inject(&Partition::empty(), &part(&[2]), &s),
            Err(Error::OutOfBox {
                rows: 3,
                cols: 1,
                ..
            })
        ));
    }
}
