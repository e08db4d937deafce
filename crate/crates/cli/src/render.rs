//! Heatmap rendering of phase-space grids to binary PPM (P6) or SVG.
//!
//! Color rule: zero is white, positive values are red, negative values cyan,
//! with saturation proportional to |value| / maxabs over the rendered layer.
//! Orientation: m1 increases rightward, m2 increases upward, origin at the
//! bottom-left cell.

use std::fs;
use std::io;
use std::path::Path;

use clap::ValueEnum;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RenderMode {
    /// the grid values as stored
    Raw,
    /// the projected grid (doubled-space inputs only)
    Projected,
    /// bright raw values over a faded projection (stencil inputs only)
    Overlay,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ImageFormat {
    Ppm,
    Svg,
}

/// How a render is performed: mode, output format, and pixels per cell.
#[derive(Copy, Clone, Debug)]
pub struct RenderSpec {
    pub mode: RenderMode,
    pub format: ImageFormat,
    pub scale: u32,
}

/// Maps a real value to a pixel color relative to the layer's largest
/// magnitude. An all-zero layer renders all white.
#[derive(Copy, Clone, Debug)]
pub struct ColorRule {
    maxabs: f64,
}

impl ColorRule {
    pub fn over(values: impl IntoIterator<Item = f64>) -> Self {
        let maxabs = values
            .into_iter()
            .map(f64::abs)
            .fold(0.0f64, f64::max);
        Self { maxabs }
    }

    /// Color for `value`, with the saturation additionally scaled by
    /// `saturation_scale` (1.0 for bright layers, below 1.0 for faded ones).
    pub fn rgb(&self, value: f64, saturation_scale: f64) -> [u8; 3] {
        if self.maxabs <= 0.0 || value == 0.0 {
            return [255, 255, 255];
        }
        let saturation = (value.abs() / self.maxabs).clamp(0.0, 1.0) * saturation_scale;
        let attenuated = (255.0 * (1.0 - saturation)).round() as u8;
        if value > 0.0 {
            [255, attenuated, attenuated]
        } else {
            [attenuated, 255, 255]
        }
    }
}

/// Per-cell colors for a single layer of real values (row-major, side×side).
pub fn color_layer(values: &[f64], saturation_scale: f64) -> Vec<[u8; 3]> {
    let rule = ColorRule::over(values.iter().copied());
    values.iter().map(|&v| rule.rgb(v, saturation_scale)).collect()
}

/// Bright raw cells, with cells that are zero in the raw grid filled from the
/// projection at half saturation.
pub fn overlay_layer(raw: &[f64], projected: &[f64]) -> Vec<[u8; 3]> {
    let raw_rule = ColorRule::over(raw.iter().copied());
    let projected_rule = ColorRule::over(projected.iter().copied());
    raw.iter()
        .zip(projected.iter())
        .map(|(&r, &p)| {
            if r.abs() > 1e-12 {
                raw_rule.rgb(r, 1.0)
            } else {
                projected_rule.rgb(p, 0.5)
            }
        })
        .collect()
}

/// Binary P6 image of the cell colors; image side = grid side × scale.
pub fn ppm_bytes(cells: &[[u8; 3]], side: usize, scale: u32) -> Vec<u8> {
    let scale = scale as usize;
    let pixels = side * scale;
    let mut data = Vec::with_capacity(pixels * pixels * 3 + 32);
    data.extend_from_slice(format!("P6\n{pixels} {pixels}\n255\n").as_bytes());
    for row in 0..pixels {
        let m2 = side - 1 - row / scale; // m2 increases upward
        for col in 0..pixels {
            let m1 = col / scale;
            data.extend_from_slice(&cells[m1 * side + m2]);
        }
    }
    data
}

/// SVG with one rect per cell; same orientation as the PPM output.
pub fn svg_string(cells: &[[u8; 3]], side: usize, scale: u32) -> String {
    let pixels = side * scale as usize;
    let mut out = String::with_capacity(cells.len() * 64 + 128);
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{pixels}\" height=\"{pixels}\" \
         viewBox=\"0 0 {pixels} {pixels}\">\n"
    ));
    for m1 in 0..side {
        for m2 in 0..side {
            let x = m1 * scale as usize;
            let y = (side - 1 - m2) * scale as usize;
            let [r, g, b] = cells[m1 * side + m2];
            out.push_str(&format!(
                "<rect x=\"{x}\" y=\"{y}\" width=\"{scale}\" height=\"{scale}\" \
                 fill=\"#{r:02x}{g:02x}{b:02x}\"/>\n"
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn write_image(
    path: impl AsRef<Path>,
    cells: &[[u8; 3]],
    side: usize,
    spec: RenderSpec,
) -> io::Result<()> {
    match spec.format {
        ImageFormat::Ppm => fs::write(path, ppm_bytes(cells, side, spec.scale)),
        ImageFormat::Svg => fs::write(path, svg_string(cells, side, spec.scale)),
    }
}
