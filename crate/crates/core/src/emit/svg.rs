use std::fmt::Write as _;

use num_traits::ToPrimitive;

use super::{fmt_num, FigureStyle, Viewport};
use crate::billiard::Trajectory;
use crate::enumeration::{endpoints_of_length, family_line_points, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};
use crate::word::{apply_tau, fib_power, PHI};

/// Lattice grids are skipped past this extent; they would swamp the figure.
const MAX_GRID_LINES: f64 = 64.0;

const ARROW_DEFS: &str = "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" \
markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/></marker></defs>\n";

struct Svg {
    out: String,
    vp: Viewport,
}

impl Svg {
    fn new(style: &FigureStyle, vp: Viewport, title: &str) -> Self {
        let size = style.canvas_size;
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
        )
        .unwrap();
        writeln!(out, "<title>{title}</title>").unwrap();
        writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{size}\" height=\"{size}\" fill=\"white\"/>").unwrap();
        Svg { out, vp }
    }

    fn raw(&mut self, s: &str) {
        self.out.push_str(s);
    }

    fn line(&mut self, from: (f64, f64), to: (f64, f64), attrs: &str) {
        let (x1, y1) = self.vp.to_pixel(from.0, from.1);
        let (x2, y2) = self.vp.to_pixel(to.0, to.1);
        writeln!(
            self.out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {attrs}/>",
            fmt_num(x1),
            fmt_num(y1),
            fmt_num(x2),
            fmt_num(y2)
        )
        .unwrap();
    }

    fn circle(&mut self, at: (f64, f64), r: f64, attrs: &str) {
        let (cx, cy) = self.vp.to_pixel(at.0, at.1);
        writeln!(
            self.out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" {attrs}/>",
            fmt_num(cx),
            fmt_num(cy),
            fmt_num(r)
        )
        .unwrap();
    }

    fn polyline(&mut self, points: impl IntoIterator<Item = (f64, f64)>, attrs: &str) {
        let coords: Vec<String> = points
            .into_iter()
            .map(|(x, y)| {
                let (px, py) = self.vp.to_pixel(x, y);
                format!("{},{}", fmt_num(px), fmt_num(py))
            })
            .collect();
        writeln!(self.out, "<polyline points=\"{}\" {attrs}/>", coords.join(" ")).unwrap();
    }

    /// Text offset by `(dx, dy)` pixels from a lattice point.
    fn text(&mut self, at: (f64, f64), offset: (f64, f64), content: &str, attrs: &str) {
        let (x, y) = self.vp.to_pixel(at.0, at.1);
        writeln!(
            self.out,
            "<text x=\"{}\" y=\"{}\" {attrs}>{content}</text>",
            fmt_num(x + offset.0),
            fmt_num(y + offset.1)
        )
        .unwrap();
    }

    fn grid(&mut self, x_max: u64, y_max: u64, width: f64) {
        let attrs = format!("class=\"grid\" stroke=\"gray\" stroke-width=\"{}\"", fmt_num(width));
        for x in 0..=x_max {
            self.line((x as f64, 0.0), (x as f64, y_max as f64), &attrs);
        }
        for y in 0..=y_max {
            self.line((0.0, y as f64), (x_max as f64, y as f64), &attrs);
        }
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn ratio_f64(r: num_rational::Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// The square table, the folded path as one polyline, corner labels and a
/// start marker at `A`.
pub fn render_trajectory_svg(t: &Trajectory, style: &FigureStyle) -> Result<String> {
    style.validate()?;
    let vp = Viewport::new(style, 0.0, 1.0, 0.0, 1.0);
    let mut svg = Svg::new(style, vp, &format!("Billiard path of slope {}", t.slope()));
    let thick = format!("stroke=\"black\" stroke-width=\"{}\" fill=\"none\"", fmt_num(2.0 * style.stroke_width));
    svg.polyline(
        [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0)],
        &format!("class=\"table\" {thick}"),
    );
    svg.polyline(
        t.points().iter().map(|p| (ratio_f64(p.x), ratio_f64(p.y))),
        &format!(
            "class=\"trajectory\" stroke=\"{}\" stroke-width=\"{}\" fill=\"none\"",
            style.palette[0],
            fmt_num(style.stroke_width)
        ),
    );
    let pad = 6.0 + style.point_radius;
    let font = "font-family=\"sans-serif\" font-size=\"16\"";
    svg.text((0.0, 0.0), (-pad - 10.0, pad), "A", font);
    svg.text((1.0, 0.0), (pad, pad), "B", font);
    svg.text((1.0, 1.0), (pad, -4.0), "C", font);
    svg.text((0.0, 1.0), (-pad - 10.0, -4.0), "D", font);
    svg.circle((0.0, 0.0), style.point_radius, "class=\"start\" fill=\"black\"");
    let (ex, ey) = t.end_corner().coords();
    svg.circle(
        (f64::from(ex), f64::from(ey)),
        style.point_radius,
        "class=\"end\" fill=\"white\" stroke=\"black\"",
    );
    Ok(svg.finish())
}

/// `(p, q)` of `1/1` and of `fib^k(1/1)` for `k = 1..=k_max`, as
/// `(F_k, F_{k+1})`.
pub fn golden_construction_points(k_max: usize) -> Vec<(u64, u64)> {
    (0..=k_max)
        .map(|k| {
            let (_, s) = fib_power(k);
            (s.denom().to_u64().expect("k <= 30"), s.numer().to_u64().expect("k <= 30"))
        })
        .collect()
}

/// Lattice with the points `fib^k(1/1)`, arrows for each `τ` then `σ` step,
/// and the reference lines `y = φx`, `y = x/φ` and `y = x`.
pub fn render_golden_construction_svg(k_max: usize, style: &FigureStyle) -> Result<String> {
    style.validate()?;
    if !(1..=30).contains(&k_max) {
        return Err(Error::CapExceeded {
            what: "k_max (allowed 1..=30)",
            value: k_max as u64,
            cap: 30,
        });
    }
    let points = golden_construction_points(k_max);
    let reach = points.last().map(|&(_, q)| q).unwrap_or(1) as f64 + 1.0;
    let vp = Viewport::new(style, 0.0, reach, 0.0, reach);
    let mut svg = Svg::new(style, vp, "Golden ratio from fib^k(1/1)");
    svg.raw(ARROW_DEFS);
    if reach <= MAX_GRID_LINES {
        svg.grid(reach as u64, reach as u64, style.grid_stroke_width);
    }
    let w = fmt_num(style.stroke_width);
    svg.line((0.0, 0.0), (reach, reach), &format!("class=\"diagonal\" stroke=\"black\" stroke-dasharray=\"6 4\" stroke-width=\"{w}\""));
    svg.line(
        (0.0, 0.0),
        (reach / PHI, reach),
        &format!("class=\"phi\" stroke=\"blue\" stroke-width=\"{}\"", fmt_num(2.0 * style.stroke_width)),
    );
    svg.line(
        (0.0, 0.0),
        (reach, reach / PHI),
        &format!("class=\"inverse-phi\" stroke=\"blue\" stroke-dasharray=\"8 4\" stroke-width=\"{}\"", fmt_num(2.0 * style.stroke_width)),
    );
    let arrow = format!("stroke=\"black\" stroke-width=\"{w}\" marker-end=\"url(#arrow)\"");
    let r = style.point_radius;
    for (k, pair) in points.windows(2).enumerate() {
        let (from, to) = (pair[0], pair[1]);
        // τ(q/p) = q/(p+q) lands at (p+q, q); σ then mirrors it onto `to`
        let (fq, fp) = (from.1, from.0);
        let tau = apply_tau(&crate::rational::Slope::new(fq, fp).expect("fib slopes are reduced"));
        let mid = (tau.denom().to_f64().unwrap(), tau.numer().to_f64().unwrap());
        let from = (from.0 as f64, from.1 as f64);
        let to = (to.0 as f64, to.1 as f64);
        svg.line(from, mid, &format!("class=\"tau\" {arrow}"));
        svg.line(mid, to, &format!("class=\"sigma\" {arrow}"));
        svg.circle(mid, r, "class=\"tau-image\" fill=\"white\" stroke=\"black\"");
        svg.text(to, (-r - 24.0, -r - 2.0), &format!("fib{}", k + 1), "font-family=\"sans-serif\" font-size=\"12\"");
    }
    for &(p, q) in &points {
        svg.circle((p as f64, q as f64), r, "class=\"fib\" fill=\"black\"");
    }
    Ok(svg.finish())
}

/// The single-σ families: dashed lines through `(1, 0)` with slopes `1/n₁`,
/// the `q = 1` row of pure τ-words in blue and the family points in red.
pub fn render_family_svg(n1_max: u64, p_max: u64, style: &FigureStyle) -> Result<String> {
    style.validate()?;
    if n1_max == 0 {
        return Err(Error::NotPositive("n1_max"));
    }
    if p_max < 3 {
        return Err(Error::BelowMinimum {
            what: "p_max",
            value: p_max,
            min: 3,
        });
    }
    if p_max as f64 > MAX_GRID_LINES * 4.0 {
        return Err(Error::CapExceeded {
            what: "p_max",
            value: p_max,
            cap: (MAX_GRID_LINES * 4.0) as u64,
        });
    }
    let reach = p_max as f64 + 0.5;
    let vp = Viewport::new(style, 0.0, reach, 0.0, reach);
    let mut svg = Svg::new(style, vp, "Single-sigma families through (1|0)");
    svg.grid(p_max, p_max, style.grid_stroke_width);
    let w = fmt_num(style.stroke_width);
    svg.line(
        (1.0, 0.0),
        (1.0, reach),
        &format!("class=\"family-line\" data-n1=\"0\" stroke=\"black\" stroke-dasharray=\"6 4\" stroke-width=\"{}\"", fmt_num(2.0 * style.stroke_width)),
    );
    let mut red = Vec::new();
    let mut blue = Vec::new();
    for n1 in 1..=n1_max {
        let end_y = (reach - 1.0) / n1 as f64;
        svg.line(
            (1.0, 0.0),
            (reach, end_y),
            &format!("class=\"family-line\" data-n1=\"{n1}\" stroke=\"black\" stroke-dasharray=\"6 4\" stroke-width=\"{w}\""),
        );
        for e in family_line_points(n1, p_max)? {
            let pt = (e.p.to_u64().unwrap(), e.q.to_u64().unwrap());
            if pt.1 == 1 {
                blue.push(pt);
            } else {
                red.push(pt);
            }
        }
    }
    // n₁ = 0: σ τ^n₂ lands on the vertical line p = 1
    red.extend((2..=p_max).map(|q| (1, q)));
    red.sort_unstable();
    red.dedup();
    blue.sort_unstable();
    let r = style.point_radius;
    for (p, q) in blue {
        svg.circle((p as f64, q as f64), r, "class=\"pure-tau\" fill=\"blue\" stroke=\"black\"");
    }
    for (p, q) in red {
        svg.circle((p as f64, q as f64), r, "class=\"family\" fill=\"red\" stroke=\"black\"");
    }
    svg.circle((1.0, 0.0), r, "class=\"origin\" fill=\"black\"");
    svg.text((1.0, 0.0), (-10.0, 18.0), "(1|0)", "font-family=\"sans-serif\" font-size=\"12\"");
    Ok(svg.finish())
}

/// Endpoints of all words of length `1..=n_max`, colored by length with the
/// palette cycling, plus the diagonal.
pub fn render_endpoints_svg(n_max: u64, style: &FigureStyle) -> Result<String> {
    style.validate()?;
    if n_max == 0 {
        return Err(Error::NotPositive("n_max"));
    }
    if n_max > DEFAULT_LENGTH_CAP {
        return Err(Error::CapExceeded {
            what: "n_max",
            value: n_max,
            cap: DEFAULT_LENGTH_CAP,
        });
    }
    let sets = (1..=n_max)
        .map(endpoints_of_length)
        .collect::<Result<Vec<_>>>()?;
    // the longest words reach F_{n+1} along either axis
    let reach = sets
        .iter()
        .flat_map(|s| s.points.iter())
        .map(|e| e.p.clone().max(e.q.clone()).to_f64().unwrap_or(f64::MAX))
        .fold(1.0, f64::max)
        + 0.5;
    let vp = Viewport::new(style, 0.0, reach, 0.0, reach);
    let mut svg = Svg::new(style, vp, "Endpoints of words of fixed length");
    if reach <= MAX_GRID_LINES {
        svg.grid(reach as u64, reach as u64, style.grid_stroke_width);
    }
    svg.line(
        (0.0, 0.0),
        (reach, reach),
        &format!("class=\"diagonal\" stroke=\"black\" stroke-width=\"{}\"", fmt_num(style.stroke_width)),
    );
    svg.circle((1.0, 1.0), style.point_radius, "class=\"origin\" fill=\"black\"");
    for set in &sets {
        let color = &style.palette[(set.n as usize - 1) % style.palette.len()];
        for e in &set.points {
            let at = (e.p.to_f64().unwrap_or(f64::MAX), e.q.to_f64().unwrap_or(f64::MAX));
            svg.circle(
                at,
                style.point_radius,
                &format!("class=\"endpoint\" data-n=\"{}\" data-word=\"{}\" fill=\"{color}\" stroke=\"black\"", set.n, e.word),
            );
        }
    }
    Ok(svg.finish())
}
