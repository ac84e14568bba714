//! Deterministic figure and data output.
//!
//! SVG and PGM are written by hand. Numbers are printed with six significant
//! digits and nothing time- or platform-dependent ends up in the bytes, so
//! equal inputs always give equal documents.

mod svg;
mod table;

pub use svg::{
    golden_construction_points, render_endpoints_svg, render_family_svg,
    render_golden_construction_svg, render_trajectory_svg,
};
pub use table::{endpoints_csv, write_step_grid, GridFormat};

use crate::error::{Error, Result};

/// Presentation knobs shared by every SVG emitter.
#[derive(Clone, Debug, PartialEq)]
pub struct FigureStyle {
    /// Width and height of the square canvas in pixels.
    pub canvas_size: u32,
    pub margin: u32,
    /// Fill colors; the endpoint scatter cycles through them by word length.
    pub palette: Vec<String>,
    pub stroke_width: f64,
    pub grid_stroke_width: f64,
    pub point_radius: f64,
}

impl Default for FigureStyle {
    fn default() -> Self {
        FigureStyle {
            canvas_size: 600,
            margin: 40,
            palette: ["red", "orange", "yellow", "green", "blue", "violet"]
                .map(String::from)
                .to_vec(),
            stroke_width: 2.0,
            grid_stroke_width: 0.5,
            point_radius: 4.0,
        }
    }
}

impl FigureStyle {
    pub fn validate(&self) -> Result<()> {
        if self.canvas_size <= 2 * self.margin {
            return Err(Error::InvalidStyle("canvas_size must exceed twice the margin"));
        }
        if self.palette.is_empty() {
            return Err(Error::InvalidStyle("palette is empty"));
        }
        Ok(())
    }
}

/// Affine map from lattice coordinates to canvas pixels with the `y` axis
/// pointing up. Both axes share one scale so squares stay square.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    x_min: f64,
    y_min: f64,
    scale: f64,
    margin: f64,
    canvas: f64,
}

impl Viewport {
    /// Fits `[x_min, x_max] × [y_min, y_max]` inside the style's canvas.
    pub fn new(style: &FigureStyle, x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        let canvas = f64::from(style.canvas_size);
        let margin = f64::from(style.margin);
        let extent = (x_max - x_min).max(y_max - y_min).max(f64::MIN_POSITIVE);
        Viewport {
            x_min,
            y_min,
            scale: (canvas - 2.0 * margin) / extent,
            margin,
            canvas,
        }
    }

    pub fn to_pixel(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.margin + (x - self.x_min) * self.scale,
            self.canvas - self.margin - (y - self.y_min) * self.scale,
        )
    }

    pub fn from_pixel(&self, px: f64, py: f64) -> (f64, f64) {
        (
            (px - self.margin) / self.scale + self.x_min,
            (self.canvas - self.margin - py) / self.scale + self.y_min,
        )
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

/// Six significant digits, trailing zeros trimmed.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_owned();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".to_owned();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(2f64.sqrt()), "1.41421");
        assert_eq!(fmt_num(123456.7), "123457");
        assert_eq!(fmt_num(0.000123456789), "0.000123457");
        assert_eq!(fmt_num(-12.5), "-12.5");
        assert_eq!(fmt_num(9.999999), "10");
        assert_eq!(fmt_num(40.0), "40");
    }

    #[test]
    fn style_validation() {
        assert!(FigureStyle::default().validate().is_ok());
        let tight = FigureStyle {
            canvas_size: 80,
            margin: 40,
            ..FigureStyle::default()
        };
        assert!(tight.validate().is_err());
        let bare = FigureStyle {
            palette: vec![],
            ..FigureStyle::default()
        };
        assert!(bare.validate().is_err());
    }

    #[test]
    fn viewport_roundtrip() {
        let style = FigureStyle::default();
        let vp = Viewport::new(&style, 0.0, 13.5, -0.5, 21.5);
        for p in 0..=13 {
            for q in 0..=21 {
                let (px, py) = vp.to_pixel(p as f64, q as f64);
                let (x, y) = vp.from_pixel(px, py);
                assert!((x - p as f64).abs() * vp.scale() < 1.0);
                assert!((y - q as f64).abs() * vp.scale() < 1.0);
                // rounding the pixel keeps us within one pixel too
                let (x, y) = vp.from_pixel(px.round(), py.round());
                assert!((x - p as f64).abs() * vp.scale() <= 1.0);
                assert!((y - q as f64).abs() * vp.scale() <= 1.0);
            }
        }
        let (_, top) = vp.to_pixel(0.0, 21.5);
        let (_, bottom) = vp.to_pixel(0.0, -0.5);
        assert!(top < bottom);
    }
}
