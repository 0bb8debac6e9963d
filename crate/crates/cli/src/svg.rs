//! Minimal deterministic SVG 1.1 plots. Coordinates are converted to `f64`
//! only here, at emission, and printed with two decimals.

use std::fmt::Write;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 40.0;

#[derive(Clone, Debug)]
enum Item {
    Line { pts: Vec<(f64, f64)>, color: &'static str, width: f64, dashed: bool },
    Marker { at: (f64, f64), color: &'static str, label: Option<String> },
}

#[derive(Clone, Debug, Default)]
pub struct Plot {
    title: String,
    notes: Vec<String>,
    items: Vec<Item>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl Plot {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), ..Self::default() }
    }

    /// Free-text line rendered under the title.
    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn curve(&mut self, pts: Vec<(f64, f64)>, color: &'static str) -> &mut Self {
        self.items.push(Item::Line { pts, color, width: 2.0, dashed: false });
        self
    }

    /// Control polygon with a labelled marker at each vertex.
    pub fn polygon(&mut self, pts: &[(f64, f64)], color: &'static str, dashed: bool, prefix: &str) -> &mut Self {
        self.items.push(Item::Line { pts: pts.to_vec(), color, width: 1.0, dashed });
        for (i, &at) in pts.iter().enumerate() {
            let label = (!prefix.is_empty()).then(|| format!("{prefix}{i}"));
            self.items.push(Item::Marker { at, color, label });
        }
        self
    }

    pub fn marker(&mut self, at: (f64, f64), color: &'static str, label: Option<String>) -> &mut Self {
        self.items.push(Item::Marker { at, color, label });
        self
    }

    fn bounds(&self) -> (f64, f64, f64, f64) {
        let all = self.items.iter().flat_map(|it| match it {
            Item::Line { pts, .. } => pts.clone(),
            Item::Marker { at, .. } => vec![*at],
        });
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (x, y) in all.filter(|(x, y)| x.is_finite() && y.is_finite()) {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        if !x0.is_finite() {
            return (0.0, 0.0, 1.0, 1.0);
        }
        (x0, y0, (x1 - x0).max(1e-9), (y1 - y0).max(1e-9))
    }

    pub fn render(&self) -> String {
        let top = MARGIN + 18.0 * (1 + self.notes.len()) as f64;
        let (x0, y0, w, h) = self.bounds();
        let scale = ((WIDTH - 2.0 * MARGIN) / w).min((HEIGHT - top - MARGIN) / h);
        let map = |(x, y): (f64, f64)| (MARGIN + (x - x0) * scale, HEIGHT - MARGIN - (y - y0) * scale);
        let mut s = String::new();
        writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
        )
        .unwrap();
        writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
        writeln!(s, r#"<text x="{MARGIN}" y="{:.2}" font-family="sans-serif" font-size="14">{}</text>"#, MARGIN - 10.0, escape(&self.title)).unwrap();
        for (i, note) in self.notes.iter().enumerate() {
            writeln!(
                s,
                r##"<text x="{MARGIN}" y="{:.2}" font-family="sans-serif" font-size="11" fill="#555">{}</text>"##,
                MARGIN + 8.0 + 16.0 * i as f64,
                escape(note)
            )
            .unwrap();
        }
        for it in &self.items {
            match it {
                Item::Line { pts, color, width, dashed } => {
                    let coords: Vec<String> = pts
                        .iter()
                        .map(|&p| {
                            let (x, y) = map(p);
                            format!("{x:.2},{y:.2}")
                        })
                        .collect();
                    let dash = if *dashed { r#" stroke-dasharray="6,4""# } else { "" };
                    writeln!(
                        s,
                        r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="{width}"{dash}/>"#,
                        coords.join(" ")
                    )
                    .unwrap();
                }
                Item::Marker { at, color, label } => {
                    let (x, y) = map(*at);
                    writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{color}"/>"#).unwrap();
                    if let Some(l) = label {
                        writeln!(
                            s,
                            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" fill="{color}">{}</text>"#,
                            x + 5.0,
                            y - 5.0,
                            escape(l)
                        )
                        .unwrap();
                    }
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }
}
