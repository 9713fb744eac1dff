//! JSON documents and CSV tables written by the CLI.
//!
//! Every float passes through [`sig12`] before it is printed, so equal
//! inputs give byte-identical output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use strip_starlike::factory::NormalizedFunction;
use strip_starlike::kernel::{
    aperture_angle, center_angle, image_disk, modulus_bound, quotient_bounds, Alpha,
};
use strip_starlike::membership::{MembershipReport, RegionPredicate};
use strip_starlike::radius::RadiusSolution;
use strip_starlike::series::TruncatedSeries;
use strip_starlike::Complex64;

use crate::CliError;

/// Rounds to 12 significant digits. Non-finite values pass through.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn pair(z: Complex64) -> [f64; 2] {
    [sig12(z.re), sig12(z.im)]
}

fn num(x: f64) -> String {
    sig12(x).to_string()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub order: usize,
    pub coeffs: Vec<[f64; 2]>,
}

impl SeriesDoc {
    pub fn from_series(series: &TruncatedSeries) -> Self {
        Self {
            kind: None,
            order: series.order(),
            coeffs: series.coeffs().iter().map(|&c| pair(c)).collect(),
        }
    }

    pub fn from_normalized(f: &NormalizedFunction) -> Self {
        Self {
            kind: Some("normalized".into()),
            ..Self::from_series(f.series())
        }
    }

    pub fn to_series(&self) -> Result<TruncatedSeries, CliError> {
        if self.coeffs.len() != self.order + 1 {
            return Err(CliError::validation(format!(
                "series declares order {} but lists {} coefficients",
                self.order,
                self.coeffs.len()
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        Ok(TruncatedSeries::new(coeffs)?)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::validation(format!("invalid series JSON: {e}")))
    }
}

/// Canonical text of a predicate; round-trips through the parser.
pub fn predicate_label(p: &RegionPredicate) -> String {
    match *p {
        RegionPredicate::Strip(alpha) => format!("strip:{}", num(alpha.value())),
        RegionPredicate::Starlike { beta } => format!("starlike:{}", num(beta)),
        RegionPredicate::StronglyStarlike { gamma } => format!("strongly-starlike:{}", num(gamma)),
        RegionPredicate::Parabolic => "parabolic".into(),
        RegionPredicate::Lemniscate => "lemniscate".into(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MembershipDoc {
    pub predicate: String,
    pub r: f64,
    pub samples: usize,
    pub worst_margin: f64,
    pub witness: [f64; 2],
    pub passed: bool,
}

impl From<&MembershipReport> for MembershipDoc {
    fn from(rep: &MembershipReport) -> Self {
        Self {
            predicate: predicate_label(&rep.predicate),
            r: sig12(rep.radius),
            samples: rep.samples,
            worst_margin: sig12(rep.worst_margin),
            witness: pair(rep.witness),
            passed: rep.passed(),
        }
    }
}

impl MembershipDoc {
    pub fn csv(&self) -> String {
        format!(
            "predicate,r,samples,worst_margin,witness_re,witness_im,passed\n{},{},{},{},{},{},{}\n",
            self.predicate,
            self.r,
            self.samples,
            self.worst_margin,
            self.witness[0],
            self.witness[1],
            self.passed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusDoc {
    pub kind: &'static str,
    pub alpha: f64,
    pub gamma: Option<f64>,
    pub radius: f64,
    pub roots: serde_json::Map<String, serde_json::Value>,
    pub iterations: usize,
}

impl From<&RadiusSolution> for RadiusDoc {
    fn from(sol: &RadiusSolution) -> Self {
        Self {
            kind: sol.problem.target.name(),
            alpha: sig12(sol.problem.alpha.value()),
            gamma: sol.problem.target.gamma().map(sig12),
            radius: sig12(sol.radius),
            roots: sol
                .roots
                .iter()
                .map(|r| (r.name.to_string(), sig12(r.value).into()))
                .collect(),
            iterations: sol.iterations,
        }
    }
}

const RADIUS_HEADER: &str = "kind,alpha,gamma,radius,iterations,roots";

impl RadiusDoc {
    fn csv_row(&self) -> String {
        let roots: Vec<String> = self.roots.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "{},{},{},{},{},{}",
            self.kind,
            self.alpha,
            self.gamma.map(|g| g.to_string()).unwrap_or_default(),
            self.radius,
            self.iterations,
            roots.join(";")
        )
    }

    pub fn csv(&self) -> String {
        format!("{RADIUS_HEADER}\n{}\n", self.csv_row())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    #[serde(flatten)]
    pub solution: RadiusDoc,
    pub reference: f64,
    pub matches_paper: bool,
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = format!("{RADIUS_HEADER},reference,matches_paper\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            row.solution.csv_row(),
            row.reference,
            row.matches_paper
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoefficientsDoc {
    #[serde(flatten)]
    pub series: SeriesDoc,
    pub alpha: f64,
    /// `|a_n| <= 1` for `n = 1..=order`.
    pub bounded: Vec<bool>,
    pub all_bounded: bool,
}

impl CoefficientsDoc {
    pub fn new(f: &NormalizedFunction, alpha: Alpha, slack: f64) -> Self {
        let bounded: Vec<bool> = (1..=f.order())
            .map(|n| f.coeff(n).norm() <= 1.0 + slack)
            .collect();
        Self {
            series: SeriesDoc::from_normalized(f),
            alpha: sig12(alpha.value()),
            all_bounded: bounded.iter().all(|&b| b),
            bounded,
        }
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("n,re,im,bounded\n");
        for (n, c) in self.series.coeffs.iter().enumerate().skip(1) {
            let _ = writeln!(out, "{n},{},{},{}", c[0], c[1], self.bounded[n - 1]);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiskDoc {
    pub center: [f64; 2],
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsDoc {
    pub alpha: f64,
    pub r: f64,
    pub re_lower: f64,
    pub re_upper: f64,
    pub im_bound: f64,
    pub center_angle: f64,
    pub aperture_angle: f64,
    pub modulus_bound: f64,
    pub disk: DiskDoc,
}

impl BoundsDoc {
    /// `r` must lie in `[0, 1)`.
    pub fn new(alpha: Alpha, r: f64) -> Self {
        let b = quotient_bounds(r, alpha);
        let disk = image_disk(r, alpha);
        Self {
            alpha: sig12(alpha.value()),
            r: sig12(r),
            re_lower: sig12(b.re_lower),
            re_upper: sig12(b.re_upper),
            im_bound: sig12(b.im_bound),
            center_angle: sig12(center_angle(r, alpha)),
            aperture_angle: sig12(aperture_angle(r, alpha)),
            modulus_bound: sig12(modulus_bound(r, alpha)),
            disk: DiskDoc {
                center: pair(disk.center),
                radius: sig12(disk.radius),
            },
        }
    }

    pub fn csv(&self) -> String {
        format!(
            "alpha,r,re_lower,re_upper,im_bound,center_angle,aperture_angle,modulus_bound,disk_center_re,disk_center_im,disk_radius\n\
             {},{},{},{},{},{},{},{},{},{},{}\n",
            self.alpha,
            self.r,
            self.re_lower,
            self.re_upper,
            self.im_bound,
            self.center_angle,
            self.aperture_angle,
            self.modulus_bound,
            self.disk.center[0],
            self.disk.center[1],
            self.disk.radius
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub theta: f64,
    pub re_q: f64,
    pub im_q: f64,
}

impl BoundaryPoint {
    pub fn new(theta: f64, q: Complex64) -> Self {
        Self {
            theta: sig12(theta),
            re_q: sig12(q.re),
            im_q: sig12(q.im),
        }
    }
}

pub fn boundary_csv(points: &[BoundaryPoint]) -> String {
    let mut out = String::from("theta,re_q,im_q\n");
    for p in points {
        let _ = writeln!(out, "{},{},{}", p.theta, p.re_q, p.im_q);
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("documents serialize");
    s.push('\n');
    s
}
