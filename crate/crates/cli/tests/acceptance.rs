//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `--nocapture`) and enforcing its runtime budget.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use equires::bott::{f_terms_via_bott, t_terms_via_bott};
use equires::complexes::{
    diff_support, dual_check_t, eagon_northcott_terms, f_terms_closed, self_duality_check,
    structural_checks, t_terms_closed, ArrowKind, TermKey,
};
use equires::hilbert::{euler_char, hilbert_ai, Region};
use equires::partitions::{enumerate_in_box, Partition, Weight};

/// The golden 12-term table at e = g = 2, in canonical order.
const GOLDEN_E2_G2: &str = "\
# F over A: e=2 g=2 f=4
F_0: (0,0;0;0,0) A(0,0)
F_1: (0,0;2;1,1) A(0,-2)
F_1: (1,0;0;1,0) A(-1,-1)
F_2: (0,0;3;2,1) A(0,-3)
F_2: (1,0;1;1,1) A(-1,-2)
F_2: (1,1;0;2,0) A(-2,-2)
F_3: (0,0;4;3,1) A(0,-4)
F_3: (1,0;3;2,2) A(-1,-4)
F_3: (1,1;1;2,1) A(-2,-3)
F_4: (1,0;4;3,2) A(-1,-5)
F_4: (1,1;2;2,2) A(-2,-4)
F_5: (1,1;4;3,3) A(-2,-6)
";

/// The golden 24-term table at e = 2, g = 3, in canonical order.
const GOLDEN_E2_G3: &str = "\
# F over A: e=2 g=3 f=5
F_0: (0,0;0;0,0,0) A(0,0)
F_1: (0,0;3;1,1,1) A(0,-3)
F_1: (1,0;0;1,0,0) A(-1,-1)
F_2: (0,0;4;2,1,1) A(0,-4)
F_2: (1,0;2;1,1,1) A(-1,-3)
F_2: (2,0;0;1,1,0) A(-2,-2)
F_2: (1,1;0;2,0,0) A(-2,-2)
F_3: (0,0;5;3,1,1) A(0,-5)
F_3: (1,0;4;2,2,1) A(-1,-5)
F_3: (2,0;1;1,1,1) A(-2,-3)
F_3: (1,1;2;2,1,1) A(-2,-4)
F_3: (2,1;0;2,1,0) A(-3,-3)
F_4: (1,0;5;3,2,1) A(-1,-6)
F_4: (2,0;4;2,2,2) A(-2,-6)
F_4: (1,1;3;2,2,1) A(-2,-5)
F_4: (2,1;1;2,1,1) A(-3,-4)
F_4: (2,2;0;2,2,0) A(-4,-4)
F_5: (2,0;5;3,2,2) A(-2,-7)
F_5: (1,1;5;3,3,1) A(-2,-7)
F_5: (2,1;3;2,2,2) A(-3,-6)
F_5: (2,2;1;2,2,1) A(-4,-5)
F_6: (2,1;5;3,3,2) A(-3,-8)
F_6: (2,2;2;2,2,2) A(-4,-6)
F_7: (2,2;5;3,3,3) A(-4,-9)
";

fn run_cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_equires"))
        .args(args)
        .output()
        .expect("failed to run the equires binary");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap_or(-1))
}

fn finish(n: u32, desc: &str, started: Instant, budget: Duration, failures: Vec<String>) {
    let elapsed = started.elapsed();
    let verdict = if failures.is_empty() && elapsed <= budget { "PASS" } else { "FAIL" };
    println!("criterion {n}: {verdict} - {desc} ({elapsed:.2?}, budget {budget:?})");
    assert!(
        failures.is_empty(),
        "criterion {n} failed:\n{}",
        failures.join("\n")
    );
    assert!(
        elapsed <= budget,
        "criterion {n} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

/// All (e, g) with e >= 1, g >= 2, e + g <= max.
fn eg_pairs(max: usize) -> Vec<(usize, usize)> {
    (2..=max)
        .flat_map(|g| (1..=(max - g)).map(move |e| (e, g)))
        .filter(|&(e, _)| e >= 1)
        .collect()
}

#[test]
fn criterion_1_golden_table_e2_g2() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let (stdout, code) = run_cli(&["terms", "--e", "2", "--g", "2", "--format", "text"]);
    if code != 0 {
        failures.push(format!("exit code {code}"));
    }
    if stdout != GOLDEN_E2_G2 {
        failures.push(format!("output differs from golden table:\n{stdout}"));
    }
    let counts: Vec<usize> = (0..=5)
        .map(|d| {
            stdout.lines().filter(|l| l.starts_with(&format!("F_{d}:"))).count()
        })
        .collect();
    if counts != vec![1, 2, 3, 3, 2, 1] {
        failures.push(format!("per-degree counts {counts:?} != [1,2,3,3,2,1]"));
    }

    finish(1, "golden table e=2 g=2, byte-exact", started, Duration::from_secs(1), failures);
}

#[test]
fn criterion_2_golden_table_e2_g3() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let (stdout, code) = run_cli(&["terms", "--e", "2", "--g", "3", "--format", "text"]);
    if code != 0 {
        failures.push(format!("exit code {code}"));
    }
    if stdout != GOLDEN_E2_G3 {
        failures.push(format!("output differs from golden table:\n{stdout}"));
    }
    let counts: Vec<usize> = (0..=7)
        .map(|d| {
            stdout.lines().filter(|l| l.starts_with(&format!("F_{d}:"))).count()
        })
        .collect();
    if counts != vec![1, 2, 4, 5, 5, 4, 2, 1] {
        failures.push(format!("per-degree counts {counts:?} != [1,2,4,5,5,4,2,1]"));
    }
    if !stdout.contains("F_7: (2,2;5;3,3,3) A(-4,-9)") {
        failures.push("top term (2,2;5;3,3,3) A(-4,-9) missing".into());
    }

    finish(2, "golden table e=2 g=3, byte-exact", started, Duration::from_secs(1), failures);
}

#[test]
fn criterion_3_oracle_equivalence() {
    let started = Instant::now();
    let mut failures = Vec::new();

    for (e, g) in eg_pairs(8) {
        let closed = f_terms_closed(e, g).unwrap();
        let via = f_terms_via_bott(e, g).unwrap();
        if !via.same_terms(&closed) {
            failures.push(format!("term multisets differ at ({e},{g})"));
        }
    }

    finish(
        3,
        "f_terms_via_bott = f_terms_closed for e+g <= 8",
        started,
        Duration::from_secs(60),
        failures,
    );
}

#[test]
fn criterion_4_t_nu_equivalence_and_duality() {
    let started = Instant::now();
    let mut failures = Vec::new();

    for e in 1..=4usize {
        for g in 2..=4usize {
            for nu in enumerate_in_box(g - 1, e) {
                let closed = t_terms_closed(nu.weight(), e, g).unwrap();
                let via = t_terms_via_bott(&nu, e, g).unwrap();
                if !via.same_terms(&closed) {
                    failures.push(format!("t_nu routes differ at ({e},{g}), nu={nu}"));
                }
            }
            for p in enumerate_in_box(g - 1, e + 2) {
                let nu = p.padded(g - 1).unwrap().weight().shifted(-1);
                if !dual_check_t(&nu, e, g).unwrap() {
                    failures.push(format!("dual_check_t failed at ({e},{g}), nu={nu}"));
                }
            }
        }
    }

    let en = eagon_northcott_terms(0, 2, 2).unwrap();
    let ranks: Vec<BigInt> = en.iter_terms().map(|t| t.rank.clone()).collect();
    let want: Vec<BigInt> = [1, 6, 8, 3].iter().map(|&x| BigInt::from(x)).collect();
    if ranks != want {
        failures.push(format!("EN C^0 ranks {ranks:?} != 1,6,8,3"));
    }

    finish(
        4,
        "t_nu oracle equivalence, duality, Eagon-Northcott ranks (e,g <= 4)",
        started,
        Duration::from_secs(30),
        failures,
    );
}

#[test]
fn criterion_5_euler_characteristic_identity() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let degree = 8;

    for (e, g) in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2), (3, 3)] {
        let chi = euler_char(&f_terms_closed(e, g).unwrap(), degree).unwrap();
        let ai = hilbert_ai(e, g, degree).unwrap();
        for (d1, d2) in Region::total(degree).points() {
            let (lhs, rhs) = (chi.coeff(d1, d2), ai.coeff(d1, d2));
            if lhs != rhs {
                failures.push(format!(
                    "({e},{g}): chi(F)({d1},{d2}) = {lhs} != H_AI = {rhs}"
                ));
            }
        }
    }

    let ai = hilbert_ai(2, 2, 8).unwrap();
    if ai.coeff(1, 1) != BigInt::from(60) {
        failures.push(format!("dim(A/I)_(1,1) = {} != 60", ai.coeff(1, 1)));
    }
    if ai.coeff(0, 2) != BigInt::from(30) {
        failures.push(format!("dim(A/I)_(0,2) = {} != 30", ai.coeff(0, 2)));
    }

    finish(
        5,
        "chi(F) = H_{A/I} in all bidegrees d1+d2 <= 8, six (e,g) pairs",
        started,
        Duration::from_secs(120),
        failures,
    );
}

#[test]
fn criterion_6_structural_suite() {
    let started = Instant::now();
    let mut failures = Vec::new();

    for (e, g) in eg_pairs(8) {
        let c = f_terms_closed(e, g).unwrap();
        let f = e + g;

        if c.top_degree() != Some((e * g + 1) as i64) {
            failures.push(format!("({e},{g}): length {:?} != eg+1", c.top_degree()));
        }
        let top = c.terms_at((e * g + 1) as i64);
        let rect_e = Partition::new(vec![(g - 1) as i64; e]).unwrap();
        let rect_g = Weight::new(vec![(e + 1) as i64; g]).unwrap();
        if top.len() != 1
            || top[0].rank != BigInt::from(1)
            || top[0].e_weight != rect_e
            || top[0].n_ext != f
            || top[0].g_weight != rect_g
        {
            failures.push(format!("({e},{g}): top term is not the rank-1 rectangle term"));
        }

        let report = structural_checks(&c);
        if !report.passed() {
            failures.push(format!("({e},{g}): {:?}", report.failures));
        }
        if !self_duality_check(e, g).unwrap() {
            failures.push(format!("({e},{g}): self-duality failed"));
        }
    }

    finish(
        6,
        "length eg+1, rank-1 rectangle top, distinct labels, self-duality (e+g <= 8)",
        started,
        Duration::from_secs(30),
        failures,
    );
}

#[test]
fn criterion_7_differential_support() {
    let started = Instant::now();
    let mut failures = Vec::new();

    // every arrow drops degree by one and shifts bidegree by its kind
    for (e, g) in eg_pairs(8) {
        let c = f_terms_closed(e, g).unwrap();
        let arrows = match diff_support(&c) {
            Ok(a) => a,
            Err(err) => {
                failures.push(format!("({e},{g}): {err}"));
                continue;
            }
        };
        for a in &arrows {
            let s = c.get(&a.source).unwrap();
            let t = c.get(&a.target).unwrap();
            if s.hom_degree - t.hom_degree != 1 {
                failures.push(format!("({e},{g}): {} drops by != 1", a.source));
            }
            if (t.twist.0 - s.twist.0, t.twist.1 - s.twist.1) != a.map_degree {
                failures.push(format!("({e},{g}): {} bidegree mismatch", a.source));
            }
            let expected = match a.kind {
                ArrowKind::Psi => (0, s.n_ext as i64 - t.n_ext as i64),
                ArrowKind::PsiPhi => (1, 1),
                ArrowKind::Phi => {
                    let j = equires::partitions::nu_prime(&s.nu, s.k);
                    (s.nu.entries()[j - 1] - s.k + 1, 0)
                }
            };
            if a.map_degree != expected {
                failures.push(format!(
                    "({e},{g}): {} -> {} has map degree {:?}, kind says {:?}",
                    a.source, a.target, a.map_degree, expected
                ));
            }
        }
    }

    // the e = g = 2 picture
    let c = f_terms_closed(2, 2).unwrap();
    let arrows = diff_support(&c).unwrap();
    let key = |nu: &[i64], k: i64| TermKey { nu: nu.to_vec(), k };
    let has = |src: TermKey, dst: TermKey, kind: ArrowKind| {
        arrows.iter().any(|a| a.source == src && a.target == dst && a.kind == kind)
    };
    if !has(key(&[2], 1), key(&[0], 2), ArrowKind::Phi) {
        failures.push("knight move T_{(2);1} -> T_{(0);2} missing".into());
    }
    for k in [0, 1, 3] {
        if !has(key(&[2], k), key(&[1], k), ArrowKind::PsiPhi) {
            failures.push(format!("vertical psi-phi arrow T_{{(2);{k}}} missing"));
        }
    }
    for k in [0, 2, 3] {
        if !has(key(&[1], k), key(&[0], k), ArrowKind::PsiPhi) {
            failures.push(format!("vertical psi-phi arrow T_{{(1);{k}}} missing"));
        }
    }

    finish(
        7,
        "arrow bidegrees by kind; knight move and vertical arrows at e=g=2",
        started,
        Duration::from_secs(5),
        failures,
    );
}

#[test]
fn criterion_8_out_of_scope_shadows() {
    let started = Instant::now();
    // Ring-theoretic facts (normality, rational singularities, Gorenstein,
    // characteristic dependence for e,g >= 5) are not desk-verifiable; the
    // term-level checks of criteria 1-7 stand in for them.
    finish(
        8,
        "ring-theoretic facts exercised only through their term-level shadows (1-7)",
        started,
        Duration::from_secs(1),
        Vec::new(),
    );
}
