//! Scene files: one disc per line.
//!
//! ```text
//! # comment
//! window -4 6 -4 4          # optional: x_min x_max y_min y_max
//! A 0 0 2                   # label center_x center_y radius
//! B 2 0 2
//! ```

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use crate::lattice::{DigitalDisc, PixelPoint};
use crate::{Disc, GeometryError};

const MAX_LABEL_LEN: usize = 32;

/// Inclusive render window in pixel coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl Window {
    pub fn width(&self) -> usize {
        (self.x_max - self.x_min + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.y_max - self.y_min + 1) as usize
    }

    /// Bounding box of the discs grown by `pad` cells; `None` without discs.
    pub fn around<'a>(discs: impl IntoIterator<Item = &'a Disc>, pad: i64) -> Option<Self> {
        discs
            .into_iter()
            .map(|d| {
                let (c, r) = (d.center(), d.radius());
                Window {
                    x_min: c.x() - r - pad,
                    x_max: c.x() + r + pad,
                    y_min: c.y() - r - pad,
                    y_max: c.y() + r + pad,
                }
            })
            .reduce(|a, b| Window {
                x_min: a.x_min.min(b.x_min),
                x_max: a.x_max.max(b.x_max),
                y_min: a.y_min.min(b.y_min),
                y_max: a.y_max.max(b.y_max),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    pub discs: Vec<(String, Disc)>,
    pub window: Option<Window>,
}

impl Scene {
    pub fn get(&self, label: &str) -> Option<&Disc> {
        self.discs.iter().find(|(l, _)| l == label).map(|(_, d)| d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SceneErrorKind {
    /// Malformed token or record shape.
    Parse,
    /// Well-formed but inadmissible (duplicate label, negative radius, ...).
    Validation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SceneError {
    pub kind: SceneErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SceneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            SceneErrorKind::Parse => "parse error",
            SceneErrorKind::Validation => "invalid scene",
        };
        write!(f, "{}:{}: {kind}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SceneError {}

/// Whitespace-separated tokens with their 1-based columns, comment stripped.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &body[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (body[..byte].chars().count() + 1, tok))
        .collect()
}

pub fn parse_scene(text: &str) -> Result<Scene, SceneError> {
    let mut scene = Scene {
        discs: Vec::new(),
        window: None,
    };
    let mut labels = HashSet::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = tokens(line);
        let Some(&(head_col, head)) = toks.first() else {
            continue;
        };
        let err = |kind, column, message: String| SceneError {
            kind,
            line: line_no,
            column,
            message,
        };
        let int = |&(col, tok): &(usize, &str)| {
            tok.parse::<i64>().map_err(|_| {
                err(SceneErrorKind::Parse, col, format!("expected an integer, found {tok:?}"))
            })
        };
        let arity = |n: usize| {
            if toks.len() == n {
                Ok(())
            } else {
                let col = toks.get(n).map_or(line.chars().count() + 1, |t| t.0);
                Err(err(
                    SceneErrorKind::Parse,
                    col,
                    format!("expected {} fields after {head:?}, found {}", n - 1, toks.len() - 1),
                ))
            }
        };

        if head == "window" {
            arity(5)?;
            if scene.window.is_some() {
                return Err(err(SceneErrorKind::Validation, head_col, "window given twice".into()));
            }
            if !scene.discs.is_empty() {
                return Err(err(
                    SceneErrorKind::Validation,
                    head_col,
                    "window must precede the disc records".into(),
                ));
            }
            let v: Vec<i64> = toks[1..].iter().map(int).collect::<Result<_, _>>()?;
            if v[0] > v[1] || v[2] > v[3] {
                return Err(err(
                    SceneErrorKind::Validation,
                    toks[1].0,
                    "window must satisfy x_min <= x_max and y_min <= y_max".into(),
                ));
            }
            scene.window = Some(Window {
                x_min: v[0],
                x_max: v[1],
                y_min: v[2],
                y_max: v[3],
            });
            continue;
        }

        arity(4)?;
        if head.chars().count() > MAX_LABEL_LEN {
            return Err(err(
                SceneErrorKind::Validation,
                head_col,
                format!("label longer than {MAX_LABEL_LEN} characters"),
            ));
        }
        let (cx, cy, r) = (int(&toks[1])?, int(&toks[2])?, int(&toks[3])?);
        let geometry = |col: usize, e: GeometryError| err(SceneErrorKind::Validation, col, e.to_string());
        let center = PixelPoint::new(cx, cy).map_err(|e| geometry(toks[1].0, e))?;
        let disc = DigitalDisc::new(center, r).map_err(|e| geometry(toks[3].0, e))?;
        if !labels.insert(head.to_string()) {
            return Err(err(
                SceneErrorKind::Validation,
                head_col,
                format!("duplicate label {head:?}"),
            ));
        }
        scene.discs.push((head.to_string(), disc));
    }
    Ok(scene)
}

#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error),
    Scene(SceneError),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => e.fmt(f),
            LoadError::Scene(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for LoadError {}

pub fn load_scene(path: &Path) -> Result<Scene, LoadError> {
    let text = std::fs::read_to_string(path).map_err(LoadError::Io)?;
    parse_scene(&text).map_err(LoadError::Scene)
}
