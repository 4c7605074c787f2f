//! Replays the checked-in fuzz corpus through the same round-trip checks the
//! fuzz targets make, so the seeds run on a stable toolchain too.

use std::fs;
use std::path::PathBuf;

use degree_roots::families::FamilySpec;
use degree_roots::sweep::{parse_jsonl, SweepRecord};
use degree_roots::{DegreeSequence, IntPolynomial, RootSet};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            (
                path.display().to_string(),
                fs::read_to_string(&path).unwrap(),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn polynomial_seeds() {
    let mut ok = 0;
    for (name, s) in seeds("parse_polynomial") {
        if let Ok(p) = s.parse::<IntPolynomial>() {
            assert_eq!(p.to_string().parse::<IntPolynomial>().unwrap(), p, "{name}");
            ok += 1;
        }
    }
    assert!(ok >= 4);
}

#[test]
fn coeff_json_seeds() {
    for (name, s) in seeds("parse_coeff_json") {
        if let Ok(p) = IntPolynomial::from_json_coeffs(&s) {
            assert_eq!(
                IntPolynomial::from_json_coeffs(&p.to_json_coeffs()).unwrap(),
                p,
                "{name}"
            );
        }
    }
}

#[test]
fn degree_sequence_seeds() {
    for (name, s) in seeds("parse_degree_sequence") {
        if let Ok(seq) = s.parse::<DegreeSequence>() {
            assert_eq!(
                seq.to_string().parse::<DegreeSequence>().unwrap(),
                seq,
                "{name}"
            );
            assert_eq!(
                IntPolynomial::from_degrees(&seq)
                    .to_degree_sequence()
                    .unwrap(),
                seq
            );
        }
    }
}

#[test]
fn family_spec_seeds() {
    for (name, s) in seeds("parse_family_spec") {
        if let Ok(spec) = s.parse::<FamilySpec>() {
            assert_eq!(
                spec.to_string().parse::<FamilySpec>().unwrap(),
                spec,
                "{name}"
            );
            if let Ok(g) = spec.realize() {
                assert_eq!(g.degree_polynomial(), spec.degree_poly().unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn rootset_seeds() {
    for (name, s) in seeds("parse_rootset_json") {
        let rs: RootSet = serde_json::from_str(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        let again: RootSet = serde_json::from_str(&rs.to_json()).unwrap();
        assert_eq!(again.to_json(), rs.to_json(), "{name}");
    }
}

#[test]
fn sweep_record_seeds() {
    for (name, s) in seeds("parse_sweep_record") {
        for rec in parse_jsonl(&s).unwrap_or_else(|e| panic!("{name}: {e}")) {
            let line = rec.to_json_line();
            assert_eq!(
                SweepRecord::from_json_line(&line).unwrap().to_json_line(),
                line,
                "{name}"
            );
        }
    }
}
