//! End-to-end acceptance gate: one numbered criterion per test, each
//! printing a single pass/fail line. Run with `cargo test --test acceptance`.

use almost_fourier::clifford::clifford_report;
use almost_fourier::families::{f15_variants_coincide, family_report, FamilyId};
use almost_fourier::groups::FiniteGroup;
use almost_fourier::hecke::hecke_report;
use almost_fourier::heis::{heis_report, symmetry_report};
use almost_fourier::mat::Mat;
use almost_fourier::pairing::classical_fourier;
use almost_fourier::report::Reporter;
use std::process::Command;
use std::time::{Duration, Instant};

const SEED: u64 = 0xC4A7;

/// Print the criterion line, then fail the test if the criterion failed.
fn conclude(num: u32, title: &str, ok: bool, detail: String) {
    println!(
        "criterion {num} ({title}): {}",
        if ok { "pass" } else { "fail" }
    );
    assert!(ok, "criterion {num} ({title}) failed: {detail}");
}

fn reporter_ok(r: &Reporter) -> (bool, String) {
    let failures: Vec<String> = r
        .checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.actual))
        .collect();
    (failures.is_empty(), failures.join("; "))
}

fn within(start: Instant, limit: Duration, detail: &mut String) -> bool {
    let elapsed = start.elapsed();
    if elapsed <= limit {
        true
    } else {
        detail.push_str(&format!("; runtime {elapsed:?} exceeds {limit:?}"));
        false
    }
}

#[test]
fn criterion_1_classical_fourier() {
    let start = Instant::now();
    let groups = [
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::symmetric(3),
        FiniteGroup::dihedral(4),
        FiniteGroup::quaternion8(),
    ];
    let mut ok = true;
    let mut detail = String::new();
    for g in &groups {
        let gs = classical_fourier(g).expect("matrix builds");
        let hermitian = gs.gram.is_hermitian();
        let involutive = &gs.gram * &gs.gram == Mat::identity(gs.gram.rows());
        if !(hermitian && involutive) {
            ok = false;
            detail.push_str(&format!(
                "group of order {}: hermitian={hermitian} involutive={involutive}; ",
                g.order()
            ));
        }
    }
    ok &= within(start, Duration::from_secs(5), &mut detail);
    conclude(1, "classical Fourier involution", ok, detail);
}

#[test]
fn criterion_2_circle_family_golden() {
    let mut ok = true;
    let mut detail = String::new();
    for id in [FamilyId::F15RsqOne, FamilyId::F15RsqMinusOne] {
        let rep = family_report(id).expect("report builds");
        let (sub_ok, sub_detail) = reporter_ok(&rep.reporter);
        ok &= sub_ok;
        detail.push_str(&sub_detail);
    }
    match f15_variants_coincide() {
        Ok(true) => {}
        Ok(false) => {
            ok = false;
            detail.push_str("; the two variants disagree");
        }
        Err(e) => {
            ok = false;
            detail.push_str(&format!("; variant comparison failed: {e}"));
        }
    }
    conclude(2, "circle-family golden values", ok, detail);
}

#[test]
fn criterion_3_projective_family_golden() {
    let rep = family_report(FamilyId::F112).expect("report builds");
    let (ok, detail) = reporter_ok(&rep.reporter);
    conclude(3, "projective-family golden values", ok, detail);
}

#[test]
fn criterion_4_connected_central_family() {
    let rep = family_report(FamilyId::F14).expect("report builds");
    let (mut ok, mut detail) = reporter_ok(&rep.reporter);
    // Constant pairing 1 and one-dimensional quotient.
    if rep.gram.gram.at(0, 0) != &almost_fourier::Scalar::one() {
        ok = false;
        detail.push_str("; pairing is not constantly 1");
    }
    if rep.gram.quotient_dim() != 1 {
        ok = false;
        detail.push_str("; quotient dimension is not 1");
    }
    conclude(4, "connected-times-central family", ok, detail);
}

#[test]
fn criterion_5_heisenberg_suite() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for n in [1usize, 2] {
        let rep = heis_report(n).expect("report builds");
        let (sub_ok, sub_detail) = reporter_ok(&rep);
        ok &= sub_ok;
        detail.push_str(&sub_detail);
    }
    ok &= within(start, Duration::from_secs(60), &mut detail);
    conclude(5, "Heisenberg closed forms and spectrum", ok, detail);
}

#[test]
fn criterion_6_symmetry_equivariance() {
    let mut ok = true;
    let mut detail = String::new();
    for (n, samples) in [(1usize, None), (2, Some(500usize))] {
        let rep = symmetry_report(n, samples, SEED).expect("report builds");
        let (sub_ok, sub_detail) = reporter_ok(&rep);
        ok &= sub_ok;
        detail.push_str(&sub_detail);
    }
    conclude(6, "pairing symmetry and equivariance", ok, detail);
}

#[test]
fn criterion_7_hecke_suite() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for n in [2usize, 3, 4] {
        let rep = hecke_report(n, SEED);
        let (sub_ok, sub_detail) = reporter_ok(&rep);
        ok &= sub_ok;
        detail.push_str(&sub_detail);
    }
    ok &= within(start, Duration::from_secs(120), &mut detail);
    conclude(7, "Hecke-module suite", ok, detail);
}

#[test]
fn criterion_8_clifford_suite() {
    let start = Instant::now();
    let rep = clifford_report(SEED);
    let (mut ok, mut detail) = reporter_ok(&rep);
    ok &= within(start, Duration::from_secs(30), &mut detail);
    conclude(8, "Clifford and spin-datum suite", ok, detail);
}

#[test]
fn criterion_9_verify_all() {
    let bin = env!("CARGO_BIN_EXE_almost-fourier");
    let run = || {
        Command::new(bin)
            .arg("verify-all")
            .env_remove("ALMOST_FOURIER_SEED")
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let mut ok = true;
    let mut detail = String::new();
    if !first.status.success() {
        ok = false;
        detail.push_str("; exit status nonzero");
    }
    let stdout = String::from_utf8_lossy(&first.stdout);
    let passes = stdout
        .lines()
        .filter(|l| l.contains("\"status\":\"pass\""))
        .count();
    if passes < 60 {
        ok = false;
        detail.push_str(&format!("; only {passes} pass lines"));
    }
    // The report must be deterministic apart from the timing field.
    let strip = |raw: &[u8]| -> Vec<String> {
        String::from_utf8_lossy(raw)
            .lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).expect("json line");
                v.as_object_mut().expect("object").remove("ms");
                v.to_string()
            })
            .collect()
    };
    if strip(&first.stdout) != strip(&second.stdout) {
        ok = false;
        detail.push_str("; two runs disagree");
    }
    conclude(9, "verify-all aggregate", ok, detail);
}
