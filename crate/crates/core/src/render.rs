//! SVG pictures of nodal sets and the CSV / JSON report formats.
//!
//! All output is deterministic: fixed element order, numbers in SVG at six
//! decimals, angles in JSON as multiples of `π` rounded to 12 significant
//! digits.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::chebyshev::{ChebyshevCatalog, SpecialThetaCatalog};
use crate::critical::{CriticalZero, Locus};
use crate::error::{invalid, Error, Result};
use crate::spectrum::SpectrumEntry;
use crate::topology::checkerboard::CheckerboardMask;
use crate::topology::contour::march;
use crate::topology::sweep::SweepReport;
use crate::topology::zstructure::ZStructureReport;
use crate::topology::{NodalGrid, NodalSummary};

pub const SCHEMA_VERSION: u32 = 1;

/// Rounds to 12 significant digits.
pub fn round12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().expect("formatted float parses")
}

/// Angle in units of `π`, rounded to 12 significant digits.
pub fn pi_units(v: f64) -> f64 {
    round12(v / std::f64::consts::PI)
}

/// `0.250000π`-style label.
pub fn theta_label(theta: f64) -> String {
    format!("{:.6}π", theta / std::f64::consts::PI)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    pub show_checkerboard: bool,
    pub show_lattice: bool,
    pub show_critical_zeroes: bool,
    /// Put `y = 0` at the bottom instead of the top.
    pub math_axes: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 600,
            height: 600,
            show_checkerboard: true,
            show_lattice: true,
            show_critical_zeroes: true,
            math_axes: false,
        }
    }
}

const MARGIN: f64 = 40.0;

struct Frame {
    w: f64,
    h: f64,
    flip: bool,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN + x / std::f64::consts::PI * self.w
    }

    fn py(&self, y: f64) -> f64 {
        let t = y / std::f64::consts::PI * self.h;
        if self.flip {
            MARGIN + self.h - t
        } else {
            MARGIN + t
        }
    }
}

/// Nodal set of `summary`'s eigenfunction drawn from `grid`.
pub fn render_nodal_svg(
    summary: &NodalSummary<f64>,
    grid: &NodalGrid<f64>,
    spec: &RenderSpec,
) -> Result<String> {
    if (summary.m, summary.n) != (grid.m, grid.n) || summary.theta != grid.theta {
        return Err(invalid("summary and grid describe different eigenfunctions"));
    }
    if spec.width == 0 || spec.height == 0 {
        return Err(invalid("image size must be positive"));
    }
    let fr = Frame {
        w: spec.width as f64,
        h: spec.height as f64,
        flip: spec.math_axes,
    };
    let total_w = fr.w + 2.0 * MARGIN;
    let total_h = fr.h + 2.0 * MARGIN;
    let mut s = String::new();
    let fmt = |v: f64| format!("{v:.6}");
    let w = |s: &mut String, text: String| {
        s.push_str(&text);
        s.push('\n');
    };
    w(
        &mut s,
        format!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
            fmt(total_w),
            fmt(total_h),
            fmt(total_w),
            fmt(total_h)
        ),
    );
    w(
        &mut s,
        format!(
            r#"<title>Phi_({},{}) theta = {}, {} nodal domains</title>"#,
            summary.m,
            summary.n,
            theta_label(summary.theta),
            summary.domain_count
        ),
    );
    w(&mut s, r#"<rect x="0" y="0" width="100%" height="100%" fill="white"/>"#.into());

    let one_r = summary.m == 1 && summary.n >= 2;
    if spec.show_checkerboard && one_r {
        if let Ok(mask) = CheckerboardMask::new(summary.n, summary.theta) {
            let side = std::f64::consts::PI / summary.n as f64;
            w(&mut s, r##"<g id="checkerboard" fill="#d9d9d9" stroke="none">"##.into());
            for i in 0..summary.n {
                for j in 0..summary.n {
                    if mask.is_white(i, j) {
                        continue;
                    }
                    let (x0, x1) = (fr.px(i as f64 * side), fr.px((i + 1) as f64 * side));
                    let (ya, yb) = (fr.py(j as f64 * side), fr.py((j + 1) as f64 * side));
                    w(
                        &mut s,
                        format!(
                            r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
                            fmt(x0),
                            fmt(ya.min(yb)),
                            fmt(x1 - x0),
                            fmt((yb - ya).abs())
                        ),
                    );
                }
            }
            w(&mut s, "</g>".into());
        }
    }

    let fam = crate::eigenfunction::ThetaFamily::new(grid.m, grid.n, grid.theta)?;
    let h = grid.spacing();
    let segs = march(
        grid.resolution,
        &grid.values,
        |k| grid.coord(k),
        |i, j| fam.eval((i + 1) as f64 * h, (j + 1) as f64 * h),
    );
    let mut d = String::new();
    for seg in &segs {
        let _ = write!(
            d,
            "M{} {}L{} {}",
            fmt(fr.px(seg.a.0)),
            fmt(fr.py(seg.a.1)),
            fmt(fr.px(seg.b.0)),
            fmt(fr.py(seg.b.1))
        );
    }
    w(
        &mut s,
        format!(r#"<path id="nodal-set" d="{d}" fill="none" stroke="black" stroke-width="1.5"/>"#),
    );
    w(
        &mut s,
        format!(
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            fmt(MARGIN),
            fmt(MARGIN),
            fmt(fr.w),
            fmt(fr.h)
        ),
    );

    if spec.show_lattice && one_r {
        let r = summary.n;
        let side = std::f64::consts::PI / r as f64;
        w(&mut s, r##"<g id="lattice" fill="#1f5fbf">"##.into());
        for i in 1..r {
            for j in 1..r {
                w(
                    &mut s,
                    format!(
                        r#"<circle cx="{}" cy="{}" r="2"/>"#,
                        fmt(fr.px(i as f64 * side)),
                        fmt(fr.py(j as f64 * side))
                    ),
                );
            }
        }
        w(&mut s, "</g>".into());
    }

    if spec.show_critical_zeroes {
        w(&mut s, r##"<g id="critical-zeroes" stroke="#c0392b" stroke-width="1.5">"##.into());
        for z in &summary.critical_zeroes {
            let fill = if z.degenerate { "#c0392b" } else { "none" };
            w(
                &mut s,
                format!(
                    r#"<circle cx="{}" cy="{}" r="4" fill="{fill}"/>"#,
                    fmt(fr.px(z.x)),
                    fmt(fr.py(z.y))
                ),
            );
        }
        w(&mut s, "</g>".into());
    }

    let (y_label, y_pos) = if spec.math_axes {
        ("y ↑", MARGIN + fr.h)
    } else {
        ("y ↓", MARGIN)
    };
    w(
        &mut s,
        format!(
            r#"<text x="{}" y="{}" font-size="12" font-family="sans-serif">x →</text>"#,
            fmt(MARGIN + fr.w / 2.0),
            fmt(if spec.math_axes { MARGIN + fr.h + 24.0 } else { MARGIN - 10.0 })
        ),
    );
    w(
        &mut s,
        format!(
            r#"<text x="{}" y="{}" font-size="12" font-family="sans-serif">{y_label}</text>"#,
            fmt(8.0),
            fmt(y_pos)
        ),
    );
    w(&mut s, "</svg>".into());
    Ok(s)
}

fn csv_error(e: csv::Error) -> Error {
    Error::Internal(format!("csv: {e}"))
}

fn finish_csv(wtr: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = wtr
        .into_inner()
        .map_err(|e| Error::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn modes_text(e: &SpectrumEntry) -> String {
    e.modes
        .iter()
        .map(|m| format!("({},{})", m.m, m.n))
        .collect::<Vec<_>>()
        .join(";")
}

/// Columns `k, lambda, mult, modes`.
pub fn spectrum_csv(entries: &[SpectrumEntry]) -> Result<String> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["k", "lambda", "mult", "modes"]).map_err(csv_error)?;
    for e in entries {
        wtr.write_record([
            e.k.to_string(),
            e.eigenvalue.to_string(),
            e.multiplicity().to_string(),
            modes_text(e),
        ])
        .map_err(csv_error)?;
    }
    finish_csv(wtr)
}

/// Columns `theta_over_pi, domain_count, n_interior_cz, n_edge_cz, anomaly_flag`.
pub fn sweep_csv(report: &SweepReport<f64>) -> Result<String> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record([
        "theta_over_pi",
        "domain_count",
        "n_interior_cz",
        "n_edge_cz",
        "anomaly_flag",
    ])
    .map_err(csv_error)?;
    for s in &report.samples {
        wtr.write_record([
            pi_units(s.theta).to_string(),
            s.domain_count.to_string(),
            s.n_interior_cz.to_string(),
            s.n_edge_cz.to_string(),
            u8::from(s.anomaly).to_string(),
        ])
        .map_err(csv_error)?;
    }
    finish_csv(wtr)
}

pub fn spectrum_json(entries: &[SpectrumEntry]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "entries": entries.iter().map(|e| json!({
            "k": e.k,
            "eigenvalue": e.eigenvalue,
            "multiplicity": e.multiplicity(),
            "modes": e.modes,
        })).collect::<Vec<_>>(),
    })
}

fn pi_list(v: &[f64]) -> Value {
    Value::from(v.iter().map(|&t| pi_units(t)).collect::<Vec<_>>())
}

pub fn catalog_json(cat: &ChebyshevCatalog<f64>, special: &SpecialThetaCatalog<f64>) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "R": cat.r,
        "q_over_pi": pi_list(&cat.q),
        "M": cat.extrema.iter().map(|&m| round12(m)).collect::<Vec<_>>(),
        "T_o_over_pi": pi_list(&special.t_o),
        "T_x_over_pi": pi_list(&special.t_x),
        "T_y_over_pi": pi_list(&special.t_y),
        "theta_minus_over_pi": pi_units(cat.theta_minus),
        "minimum_at": cat.minimum_at,
    })
}

fn zero_json(z: &CriticalZero<f64>) -> Value {
    let locus = match z.locus {
        Locus::Vertex => json!("vertex"),
        Locus::Interior => json!("interior"),
        Locus::Edge(e) => json!({ "edge": e }),
    };
    json!({
        "x_over_pi": pi_units(z.x),
        "y_over_pi": pi_units(z.y),
        "locus": locus,
        "order": z.order,
        "degenerate": z.degenerate,
    })
}

pub fn critical_json(m: usize, n: usize, theta: f64, zeros: &[CriticalZero<f64>]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "m": m,
        "n": n,
        "theta_over_pi": pi_units(theta),
        "boundary_hits": crate::critical::boundary_hits(zeros),
        "critical_zeroes": zeros.iter().map(zero_json).collect::<Vec<_>>(),
    })
}

fn summary_body(s: &NodalSummary<f64>) -> Value {
    json!({
        "m": s.m,
        "n": s.n,
        "theta_over_pi": pi_units(s.theta),
        "domain_count": s.domain_count,
        "resolution": s.resolution,
        "courant_index": s.courant_index,
        "courant_ok": s.courant_ok(),
        "boundary_hits": s.boundary_hits,
        "critical_zeroes": s.critical_zeroes.iter().map(zero_json).collect::<Vec<_>>(),
        "q_patterns": s.q_patterns,
        "closed_curve_count": s.closed_curve_count,
        "checkerboard_violations": s.checkerboard_violations,
    })
}

pub fn summary_json(s: &NodalSummary<f64>) -> Value {
    let mut v = summary_body(s);
    v["schema_version"] = json!(SCHEMA_VERSION);
    v
}

pub fn sweep_json(report: &SweepReport<f64>) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "m": report.m,
        "n": report.n,
        "anomalies": report.anomalies(),
        "samples": report.samples.iter().map(|s| json!({
            "theta_over_pi": pi_units(s.theta),
            "kind": s.kind,
            "interval": s.interval,
            "domain_count": s.domain_count,
            "n_interior_cz": s.n_interior_cz,
            "n_edge_cz": s.n_edge_cz,
            "boundary_hits": s.boundary_hits,
            "q_patterns": s.q_patterns,
            "anomaly": s.anomaly,
        })).collect::<Vec<_>>(),
    })
}

pub fn z_structure_json(rep: &ZStructureReport<f64>) -> Value {
    let side = |z: &crate::topology::ZSide<f64>| {
        json!({
            "sign": z.sign,
            "diagonals": z.diagonals,
            "closed_curves": z.closed_curves,
            "open_components": z.open_components,
            "expected_closed_curves": z.expected_closed_curves,
            "expected_domains": z.expected_domains,
            "median_sign_definite": z.median_sign_definite,
            "passed": z.passed(),
            "summary": summary_body(&z.summary),
        })
    };
    json!({
        "schema_version": SCHEMA_VERSION,
        "R": rep.r,
        "plus": side(&rep.plus),
        "minus": side(&rep.minus),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round12(0.1 + 0.2), 0.3);
        assert_eq!(round12(1.0 / 3.0), 0.333333333333);
        assert_eq!(pi_units(std::f64::consts::PI / 4.0), 0.25);
        assert_eq!(round12(0.0), 0.0);
    }

    #[test]
    fn label_format() {
        assert_eq!(theta_label(std::f64::consts::FRAC_PI_4), "0.250000π");
    }
}
