//! Foata's fundamental bijection on binary words and the three maps used to
//! split the q-Kaplansky word families into Gaussian pieces.
//!
//! | map     | from           | to                  | preserves       |
//! |---------|----------------|---------------------|-----------------|
//! | `foata` | `M(m, z)`      | `M(m, z)`           | `maj -> inv`    |
//! | `psi`   | `M(m, n-m)`    | `M0(m, n-m+1)`      | `inv + m`       |
//! | `wrap`  | `M(m-1, n-m)`  | `M1(m, n-m+1)`      | `inv`           |
//! | `tau`   | `M(m-1, n-m)`  | `M1bar(m, n-m+1)`   | `maj`           |

use crate::error::{Error, Result};
use crate::words::BinaryWord;

/// A word written as `0^{a_0} 1^{b_0} 0^{a_1} 1^{b_1} ... 0^{a_d} 1^{b_d}`
/// with one block pair per descent.
///
/// `zero_runs[0]` and `one_runs[d]` may be zero; every other run is
/// positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    pub zero_runs: Vec<usize>,
    pub one_runs: Vec<usize>,
}

impl RunDecomposition {
    pub fn descents(&self) -> usize {
        self.zero_runs.len() - 1
    }

    pub fn reassemble(&self) -> BinaryWord {
        let mut w = BinaryWord::empty();
        for (&z, &o) in self.zero_runs.iter().zip(&self.one_runs) {
            w.push_run(false, z);
            w.push_run(true, o);
        }
        w
    }
}

pub fn run_decompose(w: &BinaryWord) -> RunDecomposition {
    let mut zero_runs = vec![0];
    let mut one_runs = vec![0];
    let mut prev = false;
    for b in w.iter() {
        if prev && !b {
            zero_runs.push(0);
            one_runs.push(0);
        }
        if b {
            *one_runs.last_mut().unwrap() += 1;
        } else {
            *zero_runs.last_mut().unwrap() += 1;
        }
        prev = b;
    }
    RunDecomposition {
        zero_runs,
        one_runs,
    }
}

/// Foata's bijection, sending `maj` to `inv`.
///
/// With runs as in [`RunDecomposition`], the image is
/// `0^{a_d-1} 1 0^{a_{d-1}-1} 1 ... 0^{a_1-1} 1 0^{a_0} 1^{b_0-1} 0 1^{b_1-1} 0 ... 1^{b_{d-1}-1} 0 1^{b_d}`.
pub fn foata(w: &BinaryWord) -> BinaryWord {
    let runs = run_decompose(w);
    let d = runs.descents();
    let mut out = BinaryWord::empty();
    for i in (1..=d).rev() {
        out.push_run(false, runs.zero_runs[i] - 1);
        out.push(true);
    }
    out.push_run(false, runs.zero_runs[0]);
    for i in 0..d {
        out.push_run(true, runs.one_runs[i] - 1);
        out.push(false);
    }
    out.push_run(true, runs.one_runs[d]);
    out
}

/// Inverse of [`foata`]: writing `w = 0^a 1 u 0 1^b`, the preimage is
/// `foata_inv(u) 1 0^{a+1} 1^b`. Words of the form `0^a 1^b` are fixed.
pub fn foata_inv(w: &BinaryWord) -> BinaryWord {
    let n = w.len();
    let lead_zeros = w.iter().take_while(|b| !b).count();
    let trail_ones = w.iter().rev().take_while(|&b| b).count();
    if lead_zeros + trail_ones >= n {
        return w.clone();
    }
    // positions of the first 1 and the last 0, both 1-indexed
    let first_one = lead_zeros + 1;
    let last_zero = n - trail_ones;
    let mut out = foata_inv(&w.slice(first_one + 1, last_zero - 1));
    out.push(true);
    out.push_run(false, lead_zeros + 1);
    out.push_run(true, trail_ones);
    out
}

/// Appends a 0, raising `inv` by the number of 1s.
pub fn psi(w: &BinaryWord) -> BinaryWord {
    let mut out = w.clone();
    out.push(false);
    out
}

pub fn psi_inv(w: &BinaryWord) -> Result<BinaryWord> {
    match w.last() {
        Some(false) => Ok(w.slice(1, w.len() - 1)),
        _ => Err(Error::NotInImage {
            map: "psi",
            word: w.to_string(),
        }),
    }
}

/// Prefixes a 0 and appends a 1; `inv` is unchanged.
pub fn wrap(w: &BinaryWord) -> BinaryWord {
    let mut out = BinaryWord::repeat(false, 1);
    out.append(w);
    out.push(true);
    out
}

pub fn wrap_inv(w: &BinaryWord) -> Result<BinaryWord> {
    if w.len() >= 2 && w.first() == Some(false) && w.last() == Some(true) {
        Ok(w.slice(2, w.len() - 1))
    } else {
        Err(Error::NotInImage {
            map: "wrap",
            word: w.to_string(),
        })
    }
}

/// Maj-preserving map `M(m-1, n-m) -> M1bar(m, n-m+1)`.
///
/// An all-ones word `1^{m-1}` goes to `0 1^m`. Otherwise, with `t` the last
/// 0, the image is `w_1 ... w_t 0 1^{n-1-t} 1`: the last 0 is doubled and a
/// 1 is appended.
pub fn tau(w: &BinaryWord) -> BinaryWord {
    let Some(t) = w.last_zero_position() else {
        let mut out = BinaryWord::repeat(false, 1);
        out.push_run(true, w.len() + 1);
        return out;
    };
    let mut out = w.slice(1, t);
    out.push(false);
    out.push_run(true, w.len() - t + 1);
    out
}

/// Inverse of [`tau`]. With `s` the last 0 of the image, the preimage is the
/// prefix of length `s - 1` padded with 1s to length `len - 2`.
pub fn tau_inv(w: &BinaryWord) -> Result<BinaryWord> {
    let not_in_image = || Error::NotInImage {
        map: "tau",
        word: w.to_string(),
    };
    if w.last() != Some(true) {
        return Err(not_in_image());
    }
    let s = w.last_zero_position().ok_or_else(not_in_image)?;
    if s >= 2 && w.bit(s - 1) {
        return Err(not_in_image());
    }
    let mut out = w.slice(1, s - 1);
    out.push_run(true, w.len() - 2 - out.len());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{FamilyKind, WordFamily};

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn run_decomposition_examples() {
        let r = run_decompose(&w("0101"));
        assert_eq!(
            (r.zero_runs.as_slice(), r.one_runs.as_slice()),
            (&[1, 1][..], &[1, 1][..])
        );
        assert_eq!(r.descents(), 1);

        let r = run_decompose(&w("0011"));
        assert_eq!((r.zero_runs, r.one_runs), (vec![2], vec![2]));

        let r = run_decompose(&w("10"));
        assert_eq!(
            (r.zero_runs.clone(), r.one_runs.clone()),
            (vec![0, 1], vec![1, 0])
        );
        assert_eq!(r.reassemble(), w("10"));

        let r = run_decompose(&BinaryWord::empty());
        assert_eq!(r.descents(), 0);
        assert!(r.reassemble().is_empty());
    }

    #[test]
    fn foata_examples() {
        assert_eq!(foata(&w("000111")), w("000111"));
        assert_eq!(foata(&w("0101")), w("1001"));
        assert_eq!(foata(&w("10")), w("10"));
        assert_eq!(foata(&BinaryWord::empty()), BinaryWord::empty());
        assert_eq!(foata(&w("1111")), w("1111"));
        assert_eq!(foata(&w("000")), w("000"));
    }

    #[test]
    fn foata_inv_examples() {
        assert_eq!(foata_inv(&w("0011")), w("0011"));
        assert_eq!(foata_inv(&w("1001")), w("0101"));
        assert_eq!(foata_inv(&BinaryWord::empty()), BinaryWord::empty());
        assert_eq!(foata_inv(&w("10")), w("10"));
    }

    #[test]
    fn foata_sends_maj_to_inv_on_worked_word() {
        let x = w("10010110");
        let y = foata(&x);
        assert_eq!(y.inv(), x.maj());
        assert_eq!(foata_inv(&y), x);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&BinaryWord::empty()), w("0"));
        let x = w("101");
        assert_eq!(psi(&x), w("1010"));
        assert_eq!((x.inv(), psi(&x).inv()), (1, 3));
        assert!(matches!(
            psi_inv(&w("011")),
            Err(Error::NotInImage { map: "psi", .. })
        ));
        assert!(psi_inv(&BinaryWord::empty()).is_err());
        assert_eq!(psi_inv(&w("1010")), Ok(x));
    }

    #[test]
    fn wrap_examples() {
        assert_eq!(wrap(&BinaryWord::empty()), w("01"));
        assert_eq!(wrap(&w("1")), w("011"));
        assert_eq!(wrap(&w("1")).inv(), 0);
        assert_eq!(wrap(&w("10")), w("0101"));
        assert_eq!(wrap(&w("10")).inv(), 1);
        assert_eq!(wrap_inv(&w("01")), Ok(BinaryWord::empty()));
        assert!(wrap_inv(&w("11")).is_err());
        assert!(wrap_inv(&w("00")).is_err());
        assert!(wrap_inv(&w("1")).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&w("111")), w("01111"));
        assert_eq!(tau(&BinaryWord::empty()), w("01"));
        assert_eq!(tau(&w("010")), w("01001"));
        assert_eq!((w("010").maj(), w("01001").maj()), (2, 2));
        assert_eq!(tau_inv(&w("01001")), Ok(w("010")));
        assert_eq!(tau_inv(&w("01111")), Ok(w("111")));
        assert_eq!(tau_inv(&w("01")), Ok(BinaryWord::empty()));
    }

    #[test]
    fn tau_inv_rejects_non_members() {
        for bad in ["0110", "01101", "10", "111", ""] {
            assert!(
                matches!(tau_inv(&w(bad)), Err(Error::NotInImage { map: "tau", .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn tau_image_lands_in_m1bar() {
        // n = 5, m = 2: M(1, 3) -> M1bar(2, 4)
        let dom = WordFamily::new(FamilyKind::M, 1, 3).unwrap();
        let cod = WordFamily::new(FamilyKind::M1Bar, 2, 4).unwrap();
        let mut image: Vec<_> = dom.enumerate().map(|x| tau(&x)).collect();
        image.sort();
        let members: Vec<_> = cod.enumerate().collect();
        assert_eq!(image, members);
    }
}
