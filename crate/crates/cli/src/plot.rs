//! CSV export of root clouds and reference curves.

use std::f64::consts::PI;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context};
use degree_roots::bounds::conjecture_radius;
use degree_roots::families::FamilyRange;
use degree_roots::float17;
use degree_roots::graphical::{enumerate_sequences, SequenceKind};
use degree_roots::{find_roots, Error, IntPolynomial, RootSet};

use crate::{Failure, PlotArgs, EXIT_NONCONVERGENCE};

pub const CURVE_SAMPLES: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq)]
enum Curve {
    Conjecture(usize),
    Circle(f64),
}

impl Curve {
    fn parse(s: &str) -> anyhow::Result<Curve> {
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| anyhow!("curve `{s}`: expected conjecture:<n> or circle:<radius>"))?;
        match name {
            "conjecture" => {
                let n: usize = arg
                    .parse()
                    .with_context(|| format!("curve `{s}`: bad order `{arg}`"))?;
                if n < 2 {
                    return Err(anyhow!("curve `{s}`: order must be at least 2"));
                }
                Ok(Curve::Conjecture(n))
            }
            "circle" => {
                let r: f64 = arg
                    .parse()
                    .with_context(|| format!("curve `{s}`: bad radius `{arg}`"))?;
                if !(r.is_finite() && r > 0.0) {
                    return Err(anyhow!("curve `{s}`: radius must be positive"));
                }
                Ok(Curve::Circle(r))
            }
            other => Err(anyhow!("curve `{s}`: unknown curve `{other}`")),
        }
    }

    fn radius(&self, theta: f64) -> f64 {
        match *self {
            Curve::Conjecture(n) => conjecture_radius(n, theta),
            Curve::Circle(r) => r,
        }
    }
}

struct Source {
    /// (polynomial, order, label)
    items: Vec<(IntPolynomial, usize, String)>,
}

fn family_source(spec: &str) -> Result<Source, Failure> {
    let range: FamilyRange = spec.parse()?;
    let mut items = Vec::new();
    for member in range.members() {
        let n = member.order();
        let parity = if n % 2 == 0 { "even" } else { "odd" };
        items.push((member.degree_poly()?, n, parity.to_string()));
    }
    Ok(Source { items })
}

fn sweep_source(spec: &str) -> Result<Source, Failure> {
    let (kind, n) = spec
        .rsplit_once(':')
        .ok_or_else(|| anyhow!("sweep `{spec}`: expected <kind>:<n>"))?;
    let kind: SequenceKind = kind.parse()?;
    let n: usize = n
        .parse()
        .with_context(|| format!("sweep `{spec}`: bad order `{n}`"))?;
    if n == 0 || n > 64 {
        return Err(anyhow!("sweep `{spec}`: order must be in 1..=64").into());
    }
    let items = enumerate_sequences(n, kind)
        .map(|seq| (IntPolynomial::from_degrees(&seq), n, seq.to_string()))
        .collect();
    Ok(Source { items })
}

fn write_csv(
    path: &Path,
    header: &[&str],
    rows: impl Iterator<Item = Vec<String>>,
) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| anyhow!("{e}"))?;
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn root_rows(rs: &RootSet, n: usize, label: &str) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    let mut push = |re: f64, im: f64| {
        rows.push(vec![
            float17::format(re),
            float17::format(im),
            n.to_string(),
            label.to_string(),
        ]);
    };
    if rs.zero_mult > 0 {
        push(0.0, 0.0);
    }
    for r in &rs.roots {
        push(r.re, r.im);
    }
    rows
}

pub(crate) fn cmd_plotdata(a: &PlotArgs, tol: f64) -> Result<u8, Failure> {
    let source = match (&a.family, &a.sweep) {
        (Some(f), _) => Some(family_source(f)?),
        (None, Some(s)) => Some(sweep_source(s)?),
        (None, None) => None,
    };
    let curves: Vec<(String, Curve)> = a
        .curves
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Curve::parse(s).map(|c| (s.to_string(), c)))
        .collect::<anyhow::Result<_>>()?;
    if source.is_none() && curves.is_empty() {
        return Err(anyhow!("nothing to plot: give --family, --sweep or --curves").into());
    }
    fs::create_dir_all(&a.out_dir).with_context(|| format!("creating {}", a.out_dir.display()))?;

    let mut code = 0;
    if let Some(source) = source {
        let mut rows = Vec::new();
        for (p, n, label) in &source.items {
            let rs = match find_roots(p, tol) {
                Ok(rs) => rs,
                Err(Error::NonConvergence { partial, .. }) => {
                    eprintln!("warning: roots of {p} not certified; partial roots written");
                    code = EXIT_NONCONVERGENCE;
                    *partial
                }
                Err(e) => return Err(e.into()),
            };
            rows.extend(root_rows(&rs, *n, label));
        }
        write_csv(
            &a.out_dir.join("roots.csv"),
            &["re", "im", "n", "label"],
            rows.into_iter(),
        )?;
    }
    if !curves.is_empty() {
        let rows = curves.iter().flat_map(|(id, c)| {
            (0..CURVE_SAMPLES).map(move |i| {
                let theta = -PI + 2.0 * PI * i as f64 / (CURVE_SAMPLES - 1) as f64;
                let r = c.radius(theta);
                vec![
                    id.clone(),
                    float17::format(theta),
                    float17::format(r * theta.cos()),
                    float17::format(r * theta.sin()),
                ]
            })
        });
        write_csv(
            &a.out_dir.join("curves.csv"),
            &["curve", "theta", "re", "im"],
            rows,
        )?;
    }
    Ok(code)
}
