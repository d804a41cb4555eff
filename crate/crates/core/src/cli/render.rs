//! Grid renderings of one or two discs: ASCII, binary PPM and SVG.
//!
//! Rows run from `y_max` down to `y_min` so that y increases upward.

use std::fmt::Write as _;

use super::scene::Window;
use crate::lattice::PixelPoint;
use crate::{l1_distance, Disc};

/// Draw whole discs or only their boundary circles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Fill,
    Boundaries,
}

/// Per-cell coverage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Empty,
    First,
    Second,
    Both,
}

/// The discs to draw (at most two are distinguished) and the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canvas {
    pub first: Option<Disc>,
    pub second: Option<Disc>,
    /// `None` draws nothing.
    pub window: Option<Window>,
    pub mode: Mode,
}

const RED: [u8; 3] = [255, 0, 0];
const BLUE: [u8; 3] = [0, 0, 255];
const GREEN: [u8; 3] = [0, 160, 0];
const WHITE: [u8; 3] = [255, 255, 255];
const ORIGIN_GRAY: [u8; 3] = [200, 200, 200];

const PPM_CELL: usize = 8;
const SVG_CELL: i64 = 20;

impl Canvas {
    fn covers(&self, disc: Option<Disc>, x: i64, y: i64) -> bool {
        let Some(d) = disc else { return false };
        let Ok(p) = PixelPoint::new(x, y) else {
            return false;
        };
        match self.mode {
            Mode::Fill => d.contains(p),
            Mode::Boundaries => l1_distance(d.center(), p) == d.radius(),
        }
    }

    pub fn cell(&self, x: i64, y: i64) -> Cell {
        match (self.covers(self.first, x, y), self.covers(self.second, x, y)) {
            (false, false) => Cell::Empty,
            (true, false) => Cell::First,
            (false, true) => Cell::Second,
            (true, true) => Cell::Both,
        }
    }

    /// Cells row by row, top row first.
    fn rows(&self) -> Vec<Vec<(i64, i64, Cell)>> {
        let Some(w) = self.window else {
            return Vec::new();
        };
        (w.y_min..=w.y_max)
            .rev()
            .map(|y| (w.x_min..=w.x_max).map(|x| (x, y, self.cell(x, y))).collect())
            .collect()
    }

    pub fn count(&self, wanted: Cell) -> usize {
        self.rows().iter().flatten().filter(|c| c.2 == wanted).count()
    }

    /// `.` empty, `1`/`2` one disc, `X` both. Boundary mode marks single
    /// boundaries with `o`. An empty origin cell shows `+`. A legend line
    /// follows the grid.
    pub fn to_ascii(&self) -> String {
        let Some(w) = self.window else {
            return String::new();
        };
        let mut out = String::new();
        for row in self.rows() {
            for (x, y, cell) in row {
                out.push(match (cell, self.mode) {
                    (Cell::Empty, _) if x == 0 && y == 0 => '+',
                    (Cell::Empty, _) => '.',
                    (Cell::Both, _) => 'X',
                    (_, Mode::Boundaries) => 'o',
                    (Cell::First, Mode::Fill) => '1',
                    (Cell::Second, Mode::Fill) => '2',
                });
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "# x {}..{}, y {}..{} (top row y = {}), origin marked +",
            w.x_min, w.x_max, w.y_min, w.y_max, w.y_max
        );
        out
    }

    fn color(cell: Cell, x: i64, y: i64) -> [u8; 3] {
        match cell {
            Cell::Empty if x == 0 && y == 0 => ORIGIN_GRAY,
            Cell::Empty => WHITE,
            Cell::First => RED,
            Cell::Second => BLUE,
            Cell::Both => GREEN,
        }
    }

    /// Binary PPM (P6), one `8×8` block per pixel.
    pub fn to_ppm(&self) -> Vec<u8> {
        let (cols, rows) = self.window.map_or((0, 0), |w| (w.width(), w.height()));
        let mut out = format!("P6\n{} {}\n255\n", cols * PPM_CELL, rows * PPM_CELL).into_bytes();
        for row in self.rows() {
            for _ in 0..PPM_CELL {
                for &(x, y, cell) in &row {
                    let rgb = Self::color(cell, x, y);
                    for _ in 0..PPM_CELL {
                        out.extend_from_slice(&rgb);
                    }
                }
            }
        }
        out
    }

    /// SVG grid: one square per covered pixel, black grid lines, a ring on
    /// the origin.
    pub fn to_svg(&self) -> String {
        let (cols, rows) = self
            .window
            .map_or((0, 0), |w| (w.width() as i64, w.height() as i64));
        let (width, height) = (cols * SVG_CELL, rows * SVG_CELL);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
        let Some(w) = self.window else {
            out.push_str("</svg>\n");
            return out;
        };
        for (row_idx, row) in self.rows().into_iter().enumerate() {
            for (x, y, cell) in row {
                if cell == Cell::Empty {
                    continue;
                }
                let [r, g, b] = Self::color(cell, x, y);
                let _ = writeln!(
                    out,
                    r##"<rect x="{}" y="{}" width="{SVG_CELL}" height="{SVG_CELL}" fill="#{r:02x}{g:02x}{b:02x}"/>"##,
                    (x - w.x_min) * SVG_CELL,
                    row_idx as i64 * SVG_CELL,
                );
            }
        }
        let _ = writeln!(out, r#"<g stroke="black" stroke-width="1">"#);
        for i in 0..=cols {
            let _ = writeln!(out, r#"<line x1="{0}" y1="0" x2="{0}" y2="{height}"/>"#, i * SVG_CELL);
        }
        for j in 0..=rows {
            let _ = writeln!(out, r#"<line x1="0" y1="{0}" x2="{width}" y2="{0}"/>"#, j * SVG_CELL);
        }
        out.push_str("</g>\n");
        if (w.x_min..=w.x_max).contains(&0) && (w.y_min..=w.y_max).contains(&0) {
            let cx = -w.x_min * SVG_CELL + SVG_CELL / 2;
            let cy = w.y_max * SVG_CELL + SVG_CELL / 2;
            let _ = writeln!(
                out,
                r#"<circle cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="black" stroke-width="2"/>"#,
                SVG_CELL / 4
            );
        }
        out.push_str("</svg>\n");
        out
    }
}
