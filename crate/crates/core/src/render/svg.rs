use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::pennant::{PennantDiagram, Sector};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub width_px: u32,
    pub height_px: u32,
    pub margin_px: u32,
    pub show_sector_bands: bool,
    /// Longer labels are cut and end in an ellipsis.
    pub label_max_chars: usize,
    pub font_size_px: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            width_px: 1200,
            height_px: 700,
            margin_px: 70,
            show_sector_bands: true,
            label_max_chars: 40,
            font_size_px: 12,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        if self.width_px <= 2 * self.margin_px || self.height_px <= 2 * self.margin_px {
            return Err(Error::InvalidParams(
                "plot size must exceed twice the margin".into(),
            ));
        }
        if self.label_max_chars == 0 || self.font_size_px == 0 {
            return Err(Error::InvalidParams(
                "label length and font size must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Linear map from weight space to pixels. x grows rightward, y upward
/// (so pixel y shrinks as the weight grows).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotMapping {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    left: f64,
    right: f64,
    top: f64,
    bottom: f64,
}

impl PlotMapping {
    /// Fits the seed and every point, padded by 5% of each span. An axis
    /// with no extent is padded by one weight unit on each side.
    pub fn fit(d: &PennantDiagram, style: &RenderStyle) -> Self {
        let xs = core::iter::once(d.seed_x).chain(d.points.iter().map(|p| p.x));
        let ys = core::iter::once(d.seed_y).chain(d.points.iter().map(|p| p.y));
        let (x_min, x_max) = padded(xs);
        let (y_min, y_max) = padded(ys);
        let m = style.margin_px as f64;
        Self {
            x_min,
            x_max,
            y_min,
            y_max,
            left: m,
            right: style.width_px as f64 - m,
            top: m,
            bottom: style.height_px as f64 - m,
        }
    }

    pub fn px(&self, x: f64) -> f64 {
        self.left + (x - self.x_min) / (self.x_max - self.x_min) * (self.right - self.left)
    }

    pub fn py(&self, y: f64) -> f64 {
        self.bottom - (y - self.y_min) / (self.y_max - self.y_min) * (self.bottom - self.top)
    }
}

fn padded(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    let span = hi - lo;
    if span <= 1e-12 {
        (lo - 1.0, hi + 1.0)
    } else {
        (lo - 0.05 * span, hi + 0.05 * span)
    }
}

const BAND_FILL: [(Sector, &str); 3] = [
    (Sector::A, "#e6f2e6"),
    (Sector::B, "#f4f1e1"),
    (Sector::C, "#f6e6e6"),
];

/// Renders the diagram as a standalone SVG 1.1 document.
///
/// Sector bands are horizontal because sectors depend only on df, which
/// alone determines y. Labels sit at a fixed offset from their markers.
pub fn to_svg(d: &PennantDiagram, style: &RenderStyle) -> Result<String> {
    style.validate()?;
    let map = PlotMapping::fit(d, style);
    let (w, h, fs) = (style.width_px, style.height_px, style.font_size_px);
    let mut out = String::with_capacity(2048 + 256 * d.points.len());

    let _ = writeln!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\" font-size=\"{fs}\">"
    );
    out.push_str("<title>Pennant for ");
    escape_into(&mut out, &d.seed);
    out.push_str("</title>\n");
    let _ = writeln!(out, "<rect class=\"background\" x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>");

    if style.show_sector_bands {
        write_bands(&mut out, d, &map, fs);
    }
    write_axes(&mut out, &map, fs);

    out.push_str("<g class=\"points\">\n");
    for p in &d.points {
        let (cx, cy) = (map.px(p.x), map.py(p.y));
        out.push_str("<g class=\"point\" data-sector=\"");
        out.push_str(p.sector.as_str());
        out.push_str("\"><title>");
        escape_into(&mut out, &p.term);
        let _ = write!(
            out,
            ": co-count {}, total {}, sector {}{}</title>",
            p.co_count,
            p.df,
            p.sector,
            if p.dominant { ", dominant" } else { "" }
        );
        let _ = write!(
            out,
            "<circle class=\"marker\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"3\" fill=\"#1f4e9c\"/>"
        );
        if p.dominant {
            let _ = write!(
                out,
                "<circle class=\"dominant\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"10\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>"
            );
        }
        let _ = write!(out, "<text x=\"{:.2}\" y=\"{:.2}\">", cx + 5.0, cy - 5.0);
        escape_into(&mut out, &elide(&p.term, style.label_max_chars));
        out.push_str("</text></g>\n");
    }
    out.push_str("</g>\n");

    let (sx, sy) = (map.px(d.seed_x), map.py(d.seed_y));
    out.push_str("<g class=\"seed\"><title>");
    escape_into(&mut out, &d.seed);
    let _ = write!(out, " (seed): total {}</title>", d.seed_df);
    let _ = write!(
        out,
        "<circle class=\"seed-marker\" cx=\"{sx:.2}\" cy=\"{sy:.2}\" r=\"6\" fill=\"#c0392b\" stroke=\"#000000\"/>"
    );
    let _ = write!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-weight=\"bold\">",
        sx + 8.0,
        sy - 8.0
    );
    escape_into(&mut out, &elide(&d.seed, style.label_max_chars));
    out.push_str("</text></g>\n</svg>\n");
    Ok(out)
}

fn write_bands(out: &mut String, d: &PennantDiagram, map: &PlotMapping, fs: u32) {
    let n = d.n_docs as f64;
    let seed_df = d.seed_df as f64;
    let base = d.params.weight.log_base;
    let s = d.params.sectors;
    // A holds df <= alpha*seed_df, i.e. y >= log(N / (alpha*seed_df)); C mirrors it with gamma.
    let a_floor = base.log(n / (s.alpha * seed_df));
    let c_ceiling = base.log(n / (s.gamma * seed_df));
    let clamp = |y: f64| y.clamp(map.y_min, map.y_max);
    let spans = [
        (clamp(a_floor), map.y_max),
        (clamp(c_ceiling), clamp(a_floor)),
        (map.y_min, clamp(c_ceiling)),
    ];
    let mut bands: Vec<(Sector, &str, f64, f64)> = Vec::new();
    for ((sector, fill), (lo, hi)) in BAND_FILL.iter().zip(spans) {
        if hi > lo {
            bands.push((*sector, fill, lo, hi));
        }
    }
    out.push_str("<g class=\"sector-bands\">\n");
    for (sector, fill, lo, hi) in bands {
        let (top, bottom) = (map.py(hi), map.py(lo));
        let _ = writeln!(
            out,
            "<rect class=\"band\" data-sector=\"{sector}\" x=\"{:.2}\" y=\"{top:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"{fill}\"/>\
             <text class=\"band-label\" x=\"{:.2}\" y=\"{:.2}\" fill=\"#888888\" font-size=\"{}\">{sector}</text>",
            map.left,
            map.right - map.left,
            bottom - top,
            map.left + 6.0,
            top + fs as f64 * 1.5,
            fs * 2,
        );
    }
    out.push_str("</g>\n");
}

fn write_axes(out: &mut String, map: &PlotMapping, fs: u32) {
    let (l, r, t, b) = (map.left, map.right, map.top, map.bottom);
    out.push_str("<g class=\"axes\" stroke=\"#333333\">\n");
    let _ = writeln!(
        out,
        "<line x1=\"{l:.2}\" y1=\"{b:.2}\" x2=\"{r:.2}\" y2=\"{b:.2}\"/>"
    );
    let _ = writeln!(
        out,
        "<line x1=\"{l:.2}\" y1=\"{t:.2}\" x2=\"{l:.2}\" y2=\"{b:.2}\"/>"
    );
    out.push_str("</g>\n<g class=\"ticks\" fill=\"#333333\">\n");
    const TICKS: usize = 5;
    for i in 0..=TICKS {
        let f = i as f64 / TICKS as f64;
        let xv = map.x_min + f * (map.x_max - map.x_min);
        let px = map.px(xv);
        let _ = writeln!(
            out,
            "<line x1=\"{px:.2}\" y1=\"{b:.2}\" x2=\"{px:.2}\" y2=\"{:.2}\" stroke=\"#333333\"/>\
             <text x=\"{px:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{xv:.2}</text>",
            b + 5.0,
            b + 5.0 + fs as f64 * 1.2
        );
        let yv = map.y_min + f * (map.y_max - map.y_min);
        let py = map.py(yv);
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{py:.2}\" x2=\"{l:.2}\" y2=\"{py:.2}\" stroke=\"#333333\"/>\
             <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{yv:.2}</text>",
            l - 5.0,
            l - 8.0,
            py + fs as f64 * 0.35
        );
    }
    out.push_str("</g>\n");
    let _ = writeln!(
        out,
        "<text class=\"axis-title\" x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">tf weight: log(co-count) + 1 (cognitive effects, low to high)</text>",
        (l + r) / 2.0,
        b + fs as f64 * 3.0
    );
    let (yx, yy) = (l - fs as f64 * 4.0, (t + b) / 2.0);
    let _ = writeln!(
        out,
        "<text class=\"axis-title\" x=\"{yx:.2}\" y=\"{yy:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 {yx:.2} {yy:.2})\">idf weight: log(N / total) (ease of processing, low to high)</text>"
    );
}

fn elide(label: &str, max_chars: usize) -> String {
    if label.chars().count() <= max_chars {
        return String::from(label);
    }
    let mut s: String = label.chars().take(max_chars - 1).collect();
    s.push('\u{2026}');
    s
}

fn escape_into(out: &mut String, s: &str) {
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            // Not representable in XML 1.0.
            c if (c as u32) < 0x20 && !matches!(c, '\t' | '\n' | '\r') => out.push('\u{fffd}'),
            c => out.push(c),
        }
    }
}
