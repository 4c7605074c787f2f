//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::cmp::Ordering;
use std::collections::HashSet;
use std::f64::consts::PI;
use std::panic;
use std::process::Command;
use std::time::{Duration, Instant};

use degree_roots::asymptotics::{
    circle_convergence_metric, limit_set_sample, locate_cl_negative_root, BkwForm, CircleFamily,
    Grid, LimitClass,
};
use degree_roots::bounds::{annulus_check, conjecture_margin, extremal_scan, is_extremal_form};
use degree_roots::exact;
use degree_roots::families::{anti_regular_even_roots, two_degree_roots, FamilySpec};
use degree_roots::graphical::{enumerate_sequences, SequenceKind};
use degree_roots::rootfind::{bisect_real_root, DEFAULT_TOL};
use degree_roots::{find_roots, DegreeSequence, IntPolynomial, RootSet};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;

use common::matched_max_distance;

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn solve(p: &IntPolynomial) -> Result<RootSet, String> {
    find_roots(p, DEFAULT_TOL).map_err(|e| format!("{p}: {e}"))
}

fn graphical_up_to(n_max: usize) -> Vec<(usize, DegreeSequence)> {
    (1..=n_max)
        .flat_map(|n| enumerate_sequences(n, SequenceKind::SimpleGraph).map(move |s| (n, s)))
        .collect()
}

fn run_verify(kind: &str, n_max: &str, limit: Duration) -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_degree-roots"))
        .args([
            "verify",
            "--kind",
            kind,
            "--n-max",
            n_max,
            "--bound",
            "conjecture",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let total = stdout.lines().last().unwrap_or_default().to_string();
    ensure!(
        out.status.code() == Some(0),
        "exit {:?}: {total}",
        out.status.code()
    );
    ensure!(total.contains(" violations=0 "), "{total}");
    ensure!(total.ends_with("nonconvergent=0"), "{total}");
    ensure!(elapsed < limit, "took {elapsed:?}");
    Ok(format!("{total} in {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_1() -> Outcome {
    run_verify("graph", "9", Duration::from_secs(120))
}

fn criterion_2() -> Outcome {
    run_verify("tree", "18", Duration::from_secs(30))
}

fn criterion_3() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut extremal = [0usize; 10];
    for (n, seq) in graphical_up_to(9) {
        let p = IntPolynomial::from_degrees(&seq);
        let rs = solve(&p)?;
        if n >= 2 {
            let (inner, outer) = (1.0 / (n - 1) as f64, (n - 1) as f64);
            for r in &rs.roots {
                let m = r.modulus();
                ensure!(
                    m >= inner - 1e-9 && m <= outer + 1e-9,
                    "{seq}: root {} has modulus {m}",
                    r.value()
                );
            }
        }
        let report = annulus_check(&rs, n);
        ensure!(
            report.holds,
            "{seq}: annulus margin {}",
            report.worst_margin
        );
        worst = worst.min(report.worst_margin);
        if n % 2 == 1 && is_extremal_form(&p, n) {
            ensure!(
                report.worst_margin.abs() <= 1e-9,
                "{seq}: extremal margin {}",
                report.worst_margin
            );
            extremal[n] += 1;
        }
    }
    for n in [3, 5, 7, 9] {
        ensure!(
            extremal[n] == (n - 1) / 2,
            "n={n}: {} extremal sequences",
            extremal[n]
        );
    }
    Ok(format!(
        "worst margin {worst:.3e}; boundary attained by {} extremal sequences",
        extremal.iter().sum::<usize>()
    ))
}

fn criterion_4() -> Outcome {
    let mut worst = 0.0f64;
    for k in 2..=25 {
        let n = 2 * k;
        let p = FamilySpec::AntiRegular { n }
            .degree_poly()
            .map_err(|e| e.to_string())?;
        let numeric = solve(&p)?;
        let closed = anti_regular_even_roots(k).map_err(|e| e.to_string())?;
        ensure!(
            numeric.zero_mult == closed.zero_mult,
            "H_{n}: zero multiplicity"
        );
        let d = matched_max_distance(&numeric.nonzero_expanded(), &closed.nonzero_expanded());
        ensure!(d <= 1e-8, "H_{n}: matched distance {d:e}");
        worst = worst.max(d);
    }
    let mut cases = 0;
    for hi in 1..=30u64 {
        for lo in 0..hi {
            for (a_hi, a_lo) in [(1, 1), (1, 4), (3, 2), (5, 7), (2, 9)] {
                let closed = two_degree_roots(a_hi, hi, a_lo, lo).map_err(|e| e.to_string())?;
                let numeric = solve(&closed.polynomial)?;
                ensure!(
                    numeric.zero_mult == closed.zero_mult,
                    "{}: zero multiplicity",
                    closed.polynomial
                );
                let d =
                    matched_max_distance(&numeric.nonzero_expanded(), &closed.nonzero_expanded());
                ensure!(d <= 1e-8, "{}: matched distance {d:e}", closed.polynomial);
                worst = worst.max(d);
                cases += 1;
            }
        }
    }
    Ok(format!(
        "24 anti-regular and {cases} two-degree polynomials, worst matched distance {worst:.3e}"
    ))
}

fn criterion_5() -> Outcome {
    for n in 5..=40 {
        let loc = locate_cl_negative_root(n, DEFAULT_TOL).map_err(|e| format!("n={n}: {e}"))?;
        ensure!(
            loc.bracket_inside(),
            "n={n}: rational bracket outside interval"
        );
        let rs = solve(
            &FamilySpec::CompleteWithLeaf { n }
                .degree_poly()
                .map_err(|e| e.to_string())?,
        )?;
        let (i, big) = rs
            .roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.im == 0.0)
            .min_by(|a, b| a.1.re.total_cmp(&b.1.re))
            .ok_or(format!("n={n}: no real root"))?;
        let (lo, hi) = loc.bounds_f64();
        let slack = rs.error_radius(i);
        ensure!(
            big.re >= lo - slack && big.re <= hi + slack,
            "n={n}: root {} outside ({lo}, {hi}) by more than {slack:e}",
            big.re
        );
        let expected = if n % 2 == 1 { 1 } else { 2 };
        ensure!(
            rs.negative_real_count() == expected,
            "n={n}: {} negative roots, expected {expected}",
            rs.negative_real_count()
        );
        ensure!(
            p_sign_changes(&rs) == expected,
            "n={n}: Descartes count differs"
        );
    }
    Ok("n = 5..40 certified by exact endpoint signs; negative-root counts match".into())
}

fn p_sign_changes(rs: &RootSet) -> usize {
    rs.polynomial.sign_changes_neg()
}

fn criterion_6() -> Outcome {
    for n in 5..=40 {
        let rs = solve(
            &FamilySpec::CompleteWithLeaf { n }
                .degree_poly()
                .map_err(|e| e.to_string())?,
        )?;
        let inside = rs
            .count_in_disk(1.0, true)
            .map_err(|e| format!("n={n}: {e}"))?;
        ensure!(
            inside == n - 2,
            "n={n}: {inside} roots inside the unit disc"
        );
    }
    Ok("n - 2 roots strictly inside |z| < 1 for n = 5..40".into())
}

fn criterion_7() -> Outcome {
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for n in 3..=40 {
        let p = FamilySpec::AntiRegular { n }
            .degree_poly()
            .map_err(|e| e.to_string())?;
        let rs = solve(&p)?;
        for r in &rs.roots {
            let m = r.modulus();
            ensure!((0.5 - 1e-9..=2.0 + 1e-9).contains(&m), "n={n}: modulus {m}");
            lo = lo.min(m);
            hi = hi.max(m);
        }
        if n % 2 == 1 {
            let neg: Vec<f64> = rs
                .real_roots()
                .iter()
                .filter(|(x, _)| *x < 0.0)
                .map(|(x, _)| *x)
                .collect();
            ensure!(
                neg.len() == 1 && rs.negative_real_count() == 1,
                "n={n}: negative roots {neg:?}"
            );
            ensure!(
                neg[0] >= -2.0 && neg[0] < -0.5,
                "n={n}: negative root {}",
                neg[0]
            );
            let q = p.deflate_zero().1;
            let exact = if exact::sign_at_f64(&q, -2.0) == Ordering::Equal {
                -2.0
            } else {
                bisect_real_root(&q, -2.0, -0.5, 1e-14).map_err(|e| format!("n={n}: {e}"))?
            };
            ensure!(
                (exact - neg[0]).abs() <= 1e-9,
                "n={n}: bisection {exact} vs {}",
                neg[0]
            );
        }
    }
    Ok(format!(
        "moduli within [{lo:.6}, {hi:.6}]; odd-n negative root in [-2, -1/2)"
    ))
}

fn criterion_8() -> Outcome {
    let mut worst_mod = 0.0f64;
    let mut worst_margin = 0.0f64;
    for n in 3..=30usize {
        let rs = solve(
            &FamilySpec::Star { n }
                .degree_poly()
                .map_err(|e| e.to_string())?,
        )?;
        let target = ((n - 1) as f64).powf(1.0 / (n - 2) as f64);
        for r in &rs.roots {
            let d = (r.modulus() - target).abs();
            ensure!(d <= 1e-10, "n={n}: modulus off by {d:e}");
            worst_mod = worst_mod.max(d);
        }
        let m = conjecture_margin(&rs, n).worst_margin;
        ensure!(m.abs() <= 1e-9, "n={n}: conjecture margin {m:e}");
        worst_margin = worst_margin.max(m.abs());
    }
    Ok(format!(
        "modulus error {worst_mod:.2e}, |margin| {worst_margin:.2e}"
    ))
}

fn criterion_9() -> Outcome {
    let mut hits = 0;
    for (n, seq) in graphical_up_to(9) {
        let rs = solve(&IntPolynomial::from_degrees(&seq))?;
        let scan = extremal_scan(&rs, n);
        ensure!(scan.consistent(), "{seq}: {scan:?}");
        ensure!(
            !scan.extremal_form
                || scan.hit
                || n % 2 == 0
                || rs.polynomial.degree().unwrap_or(0) % 2 == 1,
            "{seq}: extremal form without hit"
        );
        hits += scan.hit as usize;
    }
    let mut built = 0;
    for n in (3..=13).step_by(2) {
        for delta in (2..n).step_by(2) {
            let g = FamilySpec::FGraph { n, delta }
                .realize()
                .map_err(|e| e.to_string())?;
            ensure!(g.is_simple(), "fgraph:{n},{delta} not simple");
            built += 1;
        }
    }
    Ok(format!("{hits} extremal hits, all of the form x^D + (n-1)x^(D-1) with n odd, D even; {built} F-graphs verified"))
}

fn criterion_10() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=7usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let mut oracle: HashSet<Vec<u64>> = HashSet::new();
        for mask in 0u32..(1u32 << pairs.len()) {
            let mut deg = vec![0u64; n];
            let mut bits = mask;
            while bits != 0 {
                let (a, b) = pairs[bits.trailing_zeros() as usize];
                deg[a] += 1;
                deg[b] += 1;
                bits &= bits - 1;
            }
            deg.sort_unstable_by(|x, y| y.cmp(x));
            oracle.insert(deg);
        }
        let stream: Vec<Vec<u64>> = enumerate_sequences(n, SequenceKind::SimpleGraph)
            .map(|s| s.into_vec())
            .collect();
        let set: HashSet<Vec<u64>> = stream.iter().cloned().collect();
        ensure!(set.len() == stream.len(), "n={n}: duplicates in stream");
        ensure!(
            set == oracle,
            "n={n}: {} enumerated vs {} from edge subsets",
            set.len(),
            oracle.len()
        );
        counts.push(set.len());
    }
    Ok(format!("counts {counts:?} equal edge-subset oracle"))
}

fn criterion_11() -> Outcome {
    let grid = Grid::square(2.0, 400);
    let cell = grid.cell();
    let mut summary = Vec::new();
    for name in ["cl", "h-even", "h-odd"] {
        let form = BkwForm::builtin(name).ok_or("missing form")?;
        let points = limit_set_sample(&form, &grid).map_err(|e| e.to_string())?;
        let mut bins = vec![false; 360];
        let mut origin = 0;
        for p in &points {
            match p.class {
                LimitClass::Cond2 => {
                    let d = (p.z.norm() - 1.0).abs();
                    ensure!(
                        d <= cell,
                        "{name}: Cond2 point {} at distance {d} from the circle",
                        p.z
                    );
                    let theta = p.z.im.atan2(p.z.re) + PI;
                    bins[((theta / (2.0 * PI) * 360.0) as usize).min(359)] = true;
                }
                LimitClass::Cond1 => {
                    ensure!(
                        p.z.norm() <= cell,
                        "{name}: Cond1 point {} away from the origin",
                        p.z
                    );
                    origin += 1;
                }
                LimitClass::NotLimit => return Err("NotLimit point returned".into()),
            }
        }
        ensure!(
            bins.iter().all(|&b| b),
            "{name}: circle not traced in every degree of arc"
        );
        summary.push(format!(
            "{name}: {} circle points, {origin} at origin",
            points.len() - origin
        ));
    }
    let metric: Vec<f64> = [20, 30, 40, 50]
        .iter()
        .map(|&n| circle_convergence_metric(CircleFamily::CompleteWithLeaf, n))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure!(
        metric.windows(2).all(|w| w[1] < w[0]),
        "CL metric not decreasing: {metric:?}"
    );
    for n in (6..=50).step_by(2) {
        let m =
            circle_convergence_metric(CircleFamily::AntiRegular, n).map_err(|e| e.to_string())?;
        ensure!(m == 0.0, "H_{n}: metric {m}");
    }
    Ok(format!(
        "{}; CL metric n=20,30,40,50: {:.4} {:.4} {:.4} {:.4}; even H metric 0",
        summary.join(", "),
        metric[0],
        metric[1],
        metric[2],
        metric[3]
    ))
}

fn criterion_12() -> Outcome {
    let all = graphical_up_to(9);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst = 0.0f64;
    for (n, seq) in all.choose_multiple(&mut rng, 200) {
        let p = IntPolynomial::from_degrees(seq);
        let q = p.complement_transform(*n, 1).map_err(|e| e.to_string())?;
        let rp = solve(&p)?;
        let rq = solve(&q)?;
        for z in rp.nonzero_expanded() {
            let w = z.inv().conj();
            let d = rq
                .roots
                .iter()
                .map(|r| (r.value() - w).norm())
                .fold(f64::INFINITY, f64::min);
            ensure!(
                d <= 1e-8,
                "{seq}: root {z} has no reciprocal partner (nearest {d:e})"
            );
            worst = worst.max(d);
        }
    }
    Ok(format!(
        "200 sampled sequences, worst partner distance {worst:.3e}"
    ))
}

fn main() {
    let criteria: [(&str, Check); 12] = [
        ("conjecture sweep, graphs n <= 9", criterion_1),
        ("conjecture sweep, trees n <= 18", criterion_2),
        ("annulus bound and its extremal case", criterion_3),
        ("closed-form roots", criterion_4),
        ("CL_n negative-root interval", criterion_5),
        ("CL_n roots inside the unit disc", criterion_6),
        ("anti-regular moduli in [1/2, 2]", criterion_7),
        ("star roots on the conjecture boundary", criterion_8),
        ("modulus n - 1 scan and F-graphs", criterion_9),
        ("enumeration against edge subsets", criterion_10),
        ("limit sets and circle convergence", criterion_11),
        ("inverse closure under complement", criterion_12),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!(
                "PASS criterion {:>2} ({name}): {detail} [{secs:.2}s]",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "FAIL criterion {:>2} ({name}): {detail} [{secs:.2}s]",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
