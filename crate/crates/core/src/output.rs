//! CSV tables and minimal SVG plots.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::Result;

/// Float formatting shared by every emitted dataset.
pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else {
        format!("{x:.12e}")
    }
}

pub fn fmt_bool(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CsvTable {
    /// `#`-prefixed lines written before the header.
    pub comments: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            comments: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn comment(mut self, line: impl Into<String>) -> Self {
        self.comments.push(line.into());
        self
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Column values parsed back as floats (`1`/`0` for flags).
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(
            self.rows
                .iter()
                .map(|r| r[idx].parse::<f64>().unwrap_or(f64::NAN))
                .collect(),
        )
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.comments {
            let _ = writeln!(s, "# {c}");
        }
        let _ = writeln!(s, "{}", self.columns.join(","));
        for r in &self.rows {
            let _ = writeln!(s, "{}", r.join(","));
        }
        s
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<PathBuf> {
        write_text(path, &self.render())
    }
}

pub fn write_text(path: impl AsRef<Path>, text: &str) -> Result<PathBuf> {
    let path = path.as_ref();
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(path, text)?;
    Ok(path.to_path_buf())
}

pub struct Series<'a> {
    pub label: String,
    pub x: &'a [f64],
    pub y: &'a [f64],
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

fn bounds<'a>(values: impl Iterator<Item = &'a f64>) -> (f64, f64) {
    let (lo, hi) = values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| {
            (a.min(v), b.max(v))
        });
    if !lo.is_finite() {
        (0.0, 1.0)
    } else if lo == hi {
        (lo - 0.5, hi + 0.5)
    } else {
        let pad = 0.05 * (hi - lo);
        (lo - pad, hi + pad)
    }
}

fn axes(
    s: &mut String,
    title: &str,
    x_label: &str,
    y_label: &str,
    (x0, x1): (f64, f64),
    (y0, y1): (f64, f64),
) {
    let (pw, ph) = (WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM);
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="16">{title}</text>"#,
        WIDTH / 2.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">{x_label}</text>"#,
        LEFT + pw / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{}" text-anchor="middle" font-size="14" transform="rotate(-90 20 {})">{y_label}</text>"#,
        TOP + ph / 2.0,
        TOP + ph / 2.0
    );
    for i in 0..=4 {
        let f = i as f64 / 4.0;
        let (xv, yv) = (x0 + f * (x1 - x0), y0 + f * (y1 - y0));
        let (px, py) = (LEFT + f * pw, TOP + ph - f * ph);
        let _ = writeln!(
            s,
            r#"<line x1="{px:.2}" y1="{}" x2="{px:.2}" y2="{}" stroke="black"/>"#,
            TOP + ph,
            TOP + ph + 5.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{px:.2}" y="{}" text-anchor="middle" font-size="11">{xv:.3}</text>"#,
            TOP + ph + 18.0
        );
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="black"/>"#,
            LEFT - 5.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{:.2}" text-anchor="end" font-size="11">{yv:.4}</text>"#,
            LEFT - 8.0,
            py + 4.0
        );
    }
}

/// Line plot of one or more series.
pub fn line_plot(
    title: &str,
    x_label: &str,
    y_label: &str,
    series: &[Series<'_>],
    reference_y: Option<f64>,
) -> String {
    let xr = bounds(series.iter().flat_map(|s| s.x.iter()));
    let yr = bounds(
        series
            .iter()
            .flat_map(|s| s.y.iter())
            .chain(reference_y.iter()),
    );
    let (pw, ph) = (WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM);
    let map = |x: f64, y: f64| {
        (
            LEFT + (x - xr.0) / (xr.1 - xr.0) * pw,
            TOP + ph - (y - yr.0) / (yr.1 - yr.0) * ph,
        )
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    axes(&mut s, title, x_label, y_label, xr, yr);
    if let Some(r) = reference_y {
        let (xa, ya) = map(xr.0, r);
        let (xb, _) = map(xr.1, r);
        let _ = writeln!(
            s,
            r#"<line x1="{xa:.2}" y1="{ya:.2}" x2="{xb:.2}" y2="{ya:.2}" stroke="gray" stroke-dasharray="4 4"/>"#
        );
    }
    for (k, ser) in series.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let pts: Vec<String> = ser
            .x
            .iter()
            .zip(ser.y)
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|(&x, &y)| {
                let (px, py) = map(x, y);
                format!("{px:.2},{py:.2}")
            })
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            pts.join(" ")
        );
        let ly = TOP + 18.0 + 18.0 * k as f64;
        let lx = WIDTH - RIGHT - 160.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/>"#,
            lx + 24.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="12">{}</text>"#,
            lx + 30.0,
            ly + 4.0,
            ser.label
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Heatmap of `values[iy][ix]` on the grid `xs × ys`, at most `max_cells`
/// columns and rows (the grid is subsampled uniformly beyond that).
pub fn heatmap(
    title: &str,
    x_label: &str,
    y_label: &str,
    xs: &[f64],
    ys: &[f64],
    values: &[Vec<f64>],
    max_cells: usize,
) -> String {
    let xr = (xs[0], xs[xs.len() - 1]);
    let yr = (ys[0], ys[ys.len() - 1]);
    let (vmin, vmax) = {
        let (lo, hi) = bounds(values.iter().flatten());
        (lo, hi)
    };
    let pick = |n: usize| -> Vec<usize> {
        if n <= max_cells {
            (0..n).collect()
        } else {
            (0..max_cells)
                .map(|i| i * (n - 1) / (max_cells - 1))
                .collect()
        }
    };
    let (ix, iy) = (pick(xs.len()), pick(ys.len()));
    let (pw, ph) = (WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM);
    let (cw, chh) = (pw / ix.len() as f64, ph / iy.len() as f64);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (row, &j) in iy.iter().enumerate() {
        for (col, &i) in ix.iter().enumerate() {
            let v = values[j][i];
            let f = if v.is_finite() {
                ((v - vmin) / (vmax - vmin)).clamp(0.0, 1.0)
            } else {
                0.0
            };
            // blue (low) → white → red (high)
            let (r, g, b) = if f < 0.5 {
                let t = f / 0.5;
                (255.0 * t, 255.0 * t, 255.0)
            } else {
                let t = (f - 0.5) / 0.5;
                (255.0, 255.0 * (1.0 - t), 255.0 * (1.0 - t))
            };
            let _ = writeln!(
                s,
                r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="rgb({:.0},{:.0},{:.0})"/>"#,
                LEFT + col as f64 * cw,
                TOP + ph - (row + 1) as f64 * chh,
                cw + 0.05,
                chh + 0.05,
                r,
                g,
                b
            );
        }
    }
    axes(
        &mut s,
        &format!("{title} (range {vmin:.3} to {vmax:.3})"),
        x_label,
        y_label,
        xr,
        yr,
    );
    s.push_str("</svg>\n");
    s
}

/// Named text files produced by a run, before they are written to disk.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Artifacts {
    /// `(file name, contents)` in a fixed order.
    pub files: Vec<(String, String)>,
    pub tables: Vec<(String, CsvTable)>,
}

impl Artifacts {
    pub fn table(&mut self, name: &str, t: CsvTable) {
        self.files.push((name.into(), t.render()));
        self.tables.push((name.into(), t));
    }

    pub fn get_table(&self, name: &str) -> Option<&CsvTable> {
        self.tables.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn write_all(&self, dir: impl AsRef<Path>, svg: bool, csv: bool) -> Result<Vec<PathBuf>> {
        let dir = dir.as_ref();
        let mut out = Vec::new();
        for (name, text) in &self.files {
            let is_svg = name.ends_with(".svg");
            let is_csv = name.ends_with(".csv");
            if (is_svg && !svg) || (is_csv && !csv) {
                continue;
            }
            out.push(write_text(dir.join(name), text)?);
        }
        Ok(out)
    }

    pub fn text(&mut self, name: &str, text: impl Into<String>) {
        self.files.push((name.into(), text.into()));
    }

    pub fn get_text(&self, name: &str) -> Option<&str> {
        self.files
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_render_and_column() {
        let mut t = CsvTable::new(&["omega", "flag"]).comment("note");
        t.push(vec![fmt_float(0.5), fmt_bool(true).into()]);
        t.push(vec![fmt_float(f64::NAN), fmt_bool(false).into()]);
        let text = t.render();
        assert_eq!(text, "# note\nomega,flag\n5.000000000000e-1,1\nnan,0\n");
        assert_eq!(t.column("flag"), Some(vec![1.0, 0.0]));
        assert!(t.column("missing").is_none());
    }

    #[test]
    fn svg_is_well_formed_enough() {
        let x = [0.0, 1.0, 2.0];
        let y = [1.0, 0.5, f64::NAN];
        let svg = line_plot(
            "t",
            "x",
            "y",
            &[Series {
                label: "a".into(),
                x: &x,
                y: &y,
            }],
            Some(1.0),
        );
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<polyline").count(), 1);
        let h = heatmap(
            "h",
            "x",
            "y",
            &x,
            &x,
            &[y.to_vec(), y.to_vec(), y.to_vec()],
            2,
        );
        assert_eq!(h.matches("<rect x=").count(), 4 + 1);
    }
}
