//! End-to-end acceptance gate: twelve criteria, all at zero tolerance.
//! Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::process::ExitCode;
use std::time::Instant;

use qkaplansky::partitions::enumerate_box;
use qkaplansky::{
    gaussian, gaussian_oracle, kaplansky, run_check, BinaryWord, Bounds, BoxShape, CheckId,
    IntPoly, Outcome,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Verdict>);

fn verified(id: CheckId, bounds: Bounds) -> Verdict {
    let r = run_check(id, bounds).map_err(|e| format!("{id}: {e}"))?;
    if r.outcome == Outcome::Verified {
        Ok(format!("{id}: {} instances", r.instances_checked))
    } else {
        Err(format!("{id}: {:?}", r.counterexamples.first()))
    }
}

fn all_verified(checks: &[(CheckId, Bounds)]) -> Verdict {
    let parts: Result<Vec<_>, _> = checks.iter().map(|&(id, b)| verified(id, b)).collect();
    parts.map(|p| p.join("; "))
}

fn clean_scan(id: CheckId, bounds: Bounds) -> Verdict {
    let r = run_check(id, bounds).map_err(|e| e.to_string())?;
    match (r.outcome, r.found_violation()) {
        (Outcome::ScanReport, false) => Ok(format!(
            "{id}: scan-report, {} n clean",
            r.instances_checked
        )),
        (outcome, _) => Err(format!("{id}: {outcome}, {:?}", r.counterexamples)),
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Verdict {
    let k = kaplansky(6, 2).map_err(|e| e.to_string())?;
    ensure(
        k == IntPoly::from_i64s(&[1, 1, 2, 2, 3, 2, 3, 2, 2, 1, 1]),
        format!("K_q(6,2) = {k:?}"),
    )?;
    ensure(k.is_unimodal() == Ok(false), "K_q(6,2) reported unimodal")?;
    Ok(format!(
        "K_q(6,2) = {k}, valley at {:?}",
        k.unimodality_violation()
    ))
}

fn criterion_2() -> Verdict {
    let w: BinaryWord = "10010110".parse().map_err(|e| format!("{e}"))?;
    ensure(
        (w.inv(), w.maj()) == (8, 12),
        format!("inv {}, maj {}", w.inv(), w.maj()),
    )?;
    Ok("inv = 8, maj = 12".into())
}

fn criterion_12() -> Verdict {
    for n in 0..=14 {
        for m in 0..=n {
            let o = gaussian_oracle(n, m).map_err(|e| e.to_string())?;
            ensure(o == gaussian(n, m), format!("oracle mismatch at ({n},{m})"))?;
        }
    }
    let mut partitions = 0;
    for rows in 0..=7 {
        for cols in 0..=7 {
            let b = BoxShape::new(rows, cols);
            let transposed = BoxShape::new(cols, rows);
            for p in enumerate_box(b) {
                partitions += 1;
                let c = p.conjugate();
                ensure(
                    c.fits_in(transposed) && c.weight() == p.weight(),
                    format!("{p}'"),
                )?;
                ensure(
                    c.conjugate() == p,
                    format!("conjugation not involutive on {p}"),
                )?;
            }
        }
    }
    let mut divisions = 0;
    for n in 1..=12 {
        for m in 0..=n {
            let a = kaplansky(n, m).map_err(|e| e.to_string())?;
            for d in [
                gaussian(n, m / 2),
                IntPoly::one_minus_q_pow(n as usize),
                IntPoly::one_plus_q_pow(m as usize + 1),
            ] {
                divisions += 1;
                let back = (&a * &d).exact_div(&d).map_err(|e| e.to_string())?;
                ensure(back == a, format!("round trip fails for K_q({n},{m})"))?;
            }
        }
    }
    Ok(format!(
        "oracle n <= 14; {partitions} conjugations; {divisions} division round trips"
    ))
}

fn main() -> ExitCode {
    let upto = Bounds::up_to;
    let criteria: Vec<Criterion> = vec![
        (
            "K_q(6,2) expansion and non-unimodality",
            Box::new(criterion_1),
        ),
        ("inv and maj of 10010110", Box::new(criterion_2)),
        (
            "K and Kbar generating functions, n <= 12",
            Box::new(move || verified(CheckId::ThmCombInt, upto(12))),
        ),
        (
            "MacMahon, M0 and M1 generating functions, n <= 12",
            Box::new(move || {
                all_verified(&[
                    (CheckId::MacmahonInv, upto(12)),
                    (CheckId::MacmahonMaj, upto(12)),
                    (CheckId::LemmaM0, upto(12)),
                    (CheckId::LemmaM1, upto(12)),
                ])
            }),
        ),
        (
            "four bijections round-trip onto their codomains, n <= 12",
            Box::new(move || {
                all_verified(&[
                    (CheckId::FoataRoundtrip, upto(12)),
                    (CheckId::PsiBijection, upto(12)),
                    (CheckId::VarphiBijection, upto(12)),
                    (CheckId::TauBijection, upto(12)),
                ])
            }),
        ),
        (
            "K-difference nonnegative n <= 10, sharp n <= 8",
            Box::new(move || {
                all_verified(&[
                    (CheckId::ThmLogconcave, upto(10)),
                    (CheckId::LogconcaveSharpness, upto(8)),
                ])
            }),
        ),
        (
            "decomposition identities n <= 10",
            Box::new(move || verified(CheckId::DecompositionIdentity, upto(10))),
        ),
        (
            "partition-pair injection for M, N <= 7",
            Box::new(move || {
                all_verified(&[
                    (CheckId::ButlerInjectivity, upto(7)),
                    (CheckId::ButlerWeight, upto(7)),
                ])
            }),
        ),
        (
            "F_(n,m) unimodal (even n <= 12, m <= 8); K_q odd case n <= 14",
            Box::new(move || {
                all_verified(&[
                    (CheckId::ReinerStantonUnimodal, upto(12).with_max_m(8)),
                    (CheckId::KaplanskyUnimodalOdd, upto(14)),
                ])
            }),
        ),
        (
            "Catalan relation n <= 10, even-n quotient n <= 12, Stanley quotient n <= 30",
            Box::new(move || {
                all_verified(&[
                    (CheckId::CatalanKaplanskyRelation, upto(10)),
                    (CheckId::Thm16Unimodal, upto(12)),
                    (CheckId::StanleyUnimodal, Bounds::range(1, 30)),
                ])
            }),
        ),
        (
            "conjecture scans clean: (1+q)C_n n <= 30, C_n 16 <= n <= 40",
            Box::new(|| {
                let a = clean_scan(CheckId::Conj19Scan, Bounds::range(1, 30))?;
                let b = clean_scan(CheckId::Conj18Scan, Bounds::range(16, 40))?;
                Ok(format!("{a}; {b}"))
            }),
        ),
        ("structural invariants", Box::new(criterion_12)),
    ];

    let mut failures = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {title} [{secs:.2}s] ({detail})",
                i + 1
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "criterion {:>2}: FAIL  {title} [{secs:.2}s] ({detail})",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
