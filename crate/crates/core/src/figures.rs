//! Emission of the two bound-function plots as exact CSV tables and as
//! deterministic SVG drawings: the strong BG bound on P^3 (Theta) and on
//! hypersurfaces (the reflected/extended Xi pieces), each against the
//! parabola t^2/2 over [-1, 1].

use crate::arith::{rat, PiecewiseQuad, QuadPoly, Rational};
use crate::bounds::theta_linear_piece;
use crate::error::{Error, Result};

/// The plotted bound curve of figure 1 (Theta) or figure 2 (extended Xi)
/// on [-1, 1].
pub fn figure_bound(which: u8) -> Result<PiecewiseQuad> {
    let halves: Vec<Rational> = (-2..=2).map(|j| rat(j, 2)).collect();
    match which {
        1 => PiecewiseQuad::new(halves, (-2..2).map(theta_linear_piece).collect()),
        2 => PiecewiseQuad::new(
            halves,
            vec![
                QuadPoly::new(rat(1, 3), rat(-5, 12), rat(-1, 4)),
                QuadPoly::new(rat(1, 3), rat(1, 12), Rational::zero()),
                QuadPoly::new(rat(1, 3), rat(-1, 12), Rational::zero()),
                QuadPoly::new(rat(1, 3), rat(5, 12), rat(-1, 4)),
            ],
        ),
        _ => Err(Error::DomainError(format!("no figure {which}, expected 1 or 2"))),
    }
}

fn sample_points(samples: usize) -> Result<Vec<Rational>> {
    if samples < 2 {
        return Err(Error::DomainError(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    let n = samples as i64;
    Ok((0..n)
        .map(|k| Rational::from(-1) + Rational::new(2 * k, n - 1))
        .collect())
}

fn parabola(t: &Rational) -> Rational {
    t.clone() * t.clone() * rat(1, 2)
}

/// Exact CSV table with columns t, bound, parabola at `samples` evenly
/// spaced points of [-1, 1].
pub fn figure_csv(which: u8, samples: usize) -> Result<String> {
    let bound = figure_bound(which)?;
    let mut out = String::from("t,bound,parabola\n");
    for t in sample_points(samples)? {
        out.push_str(&format!("{},{},{}\n", t, bound.eval(&t)?, parabola(&t)));
    }
    Ok(out)
}

const SVG_WIDTH: f64 = 800.0;
const SVG_HEIGHT: f64 = 600.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 60.0;

/// Decimal with 12 significant digits; the single lossy conversion in
/// the crate, used only for SVG coordinates.
fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).clamp(0, 17) as usize;
    let s = format!("{x:.decimals$}");
    // trim trailing zeros without touching integer values
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let px = MARGIN_LEFT
            + (x - self.x_min) / (self.x_max - self.x_min)
                * (SVG_WIDTH - MARGIN_LEFT - MARGIN_RIGHT);
        let py = SVG_HEIGHT
            - MARGIN_BOTTOM
            - (y - self.y_min) / (self.y_max - self.y_min)
                * (SVG_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM);
        (px, py)
    }
}

fn polyline(frame: &Frame, points: &[(f64, f64)], style: &str) -> String {
    let coords: Vec<String> = points
        .iter()
        .map(|&(x, y)| {
            let (px, py) = frame.map(x, y);
            format!("{},{}", sig12(px), sig12(py))
        })
        .collect();
    format!("  <polyline points=\"{}\" {} fill=\"none\"/>\n", coords.join(" "), style)
}

/// SVG 1.1 plot (800x600) of the bound curve and the parabola with
/// labelled axes. Output is a pure function of the arguments, hence
/// byte-identical across runs.
pub fn figure_svg(which: u8, samples: usize) -> Result<String> {
    let bound = figure_bound(which)?;
    let ts = sample_points(samples.max(129))?;
    let bound_pts: Vec<(f64, f64)> = ts
        .iter()
        .map(|t| Ok((t.to_f64(), bound.eval(t)?.to_f64())))
        .collect::<Result<_>>()?;
    let para_pts: Vec<(f64, f64)> = ts
        .iter()
        .map(|t| (t.to_f64(), parabola(t).to_f64()))
        .collect();
    let y_lo = bound_pts
        .iter()
        .map(|p| p.1)
        .fold(f64::INFINITY, f64::min)
        .min(0.0);
    let y_hi = para_pts
        .iter()
        .chain(&bound_pts)
        .map(|p| p.1)
        .fold(f64::NEG_INFINITY, f64::max);
    let pad = 0.1 * (y_hi - y_lo);
    let frame = Frame {
        x_min: -1.1,
        x_max: 1.1,
        y_min: y_lo - pad,
        y_max: y_hi + pad,
    };
    let (x_label, y_label) = match which {
        1 => ("H^2 ch_1 / H^3 ch_0", "H ch_2 / H^3 ch_0"),
        _ => ("H^(n-1) ch_1 / H^n ch_0", "H^(n-2) ch_2 / H^n ch_0"),
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        SVG_WIDTH, SVG_HEIGHT, SVG_WIDTH, SVG_HEIGHT
    ));
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // axes through the origin
    let (ox0, oy0) = frame.map(frame.x_min, 0.0);
    let (ox1, _) = frame.map(frame.x_max, 0.0);
    svg.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        sig12(ox0), sig12(oy0), sig12(ox1), sig12(oy0)
    ));
    let (vx, vy0) = frame.map(0.0, frame.y_min);
    let (_, vy1) = frame.map(0.0, frame.y_max);
    svg.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        sig12(vx), sig12(vy0), sig12(vx), sig12(vy1)
    ));
    // unit ticks on the beta axis
    for x in [-1.0, 1.0] {
        let (tx, ty) = frame.map(x, 0.0);
        svg.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
            sig12(tx), sig12(ty - 4.0), sig12(tx), sig12(ty + 4.0)
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
            sig12(tx), sig12(ty + 20.0), x as i64
        ));
    }
    svg.push_str(&polyline(&frame, &para_pts, "stroke=\"black\" stroke-width=\"1\""));
    svg.push_str(&polyline(&frame, &bound_pts, "stroke=\"red\" stroke-width=\"2\""));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"16\" text-anchor=\"end\">{}</text>\n",
        sig12(SVG_WIDTH - MARGIN_RIGHT),
        sig12(SVG_HEIGHT - MARGIN_BOTTOM + 40.0),
        x_label
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"16\">{}</text>\n",
        sig12(MARGIN_LEFT - 70.0),
        sig12(MARGIN_TOP - 10.0),
        y_label
    ));
    svg.push_str("</svg>\n");
    Ok(svg)
}
