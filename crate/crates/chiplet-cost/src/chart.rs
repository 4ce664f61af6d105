//! Minimal SVG chart emission: line charts for curve families and stacked
//! bars for cost decompositions. Output is deterministic text.

use std::fmt::Write as _;

const WIDTH: f64 = 860.0;
const HEIGHT: f64 = 480.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 160.0;
const MARGIN_T: f64 = 40.0;
const MARGIN_B: f64 = 50.0;

const PALETTE: [&str; 9] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f",
];

fn c(v: f64) -> String {
    format!("{v:.2}")
}

fn header(title: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/><text x="{}" y="24" font-family="sans-serif" font-size="16" text-anchor="middle">{title}</text>"#,
        WIDTH / 2.0
    );
    s
}

/// Multi-series line chart; one polyline per named series.
pub fn line_chart(title: &str, x_label: &str, series: &[(String, Vec<(f64, f64)>)]) -> String {
    let mut svg = header(title);
    let points: Vec<(f64, f64)> = series.iter().flat_map(|(_, p)| p.iter().copied()).collect();
    if points.is_empty() {
        svg.push_str("</svg>\n");
        return svg;
    }
    let (x0, x1) = points
        .iter()
        .fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.0), b.max(p.0)));
    let (_, y1) = points
        .iter()
        .fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.1), b.max(p.1)));
    let y0 = 0.0f64;
    let plot_w = WIDTH - MARGIN_L - MARGIN_R;
    let plot_h = HEIGHT - MARGIN_T - MARGIN_B;
    let sx = |x: f64| MARGIN_L + (x - x0) / (x1 - x0).max(1e-12) * plot_w;
    let sy = |y: f64| MARGIN_T + plot_h - (y - y0) / (y1 - y0).max(1e-12) * plot_h;
    let _ = writeln!(
        svg,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/><line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        c(MARGIN_L),
        c(MARGIN_T + plot_h),
        c(MARGIN_L + plot_w),
        c(MARGIN_T + plot_h),
        c(MARGIN_L),
        c(MARGIN_T),
        c(MARGIN_L),
        c(MARGIN_T + plot_h),
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{x_label}</text>"#,
        c(MARGIN_L + plot_w / 2.0),
        c(HEIGHT - 12.0)
    );
    for (i, (name, pts)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", c(sx(x)), c(sy(y)))).collect();
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            path.join(" ")
        );
        let ly = MARGIN_T + 16.0 * i as f64;
        let _ = writeln!(
            svg,
            r#"<rect x="{}" y="{}" width="12" height="12" fill="{color}"/><text x="{}" y="{}" font-family="sans-serif" font-size="11">{name}</text>"#,
            c(WIDTH - MARGIN_R + 10.0),
            c(ly),
            c(WIDTH - MARGIN_R + 26.0),
            c(ly + 10.0)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Stacked bar chart: `bars` are (label, component values ordered like
/// `components`).
pub fn stacked_bar_chart(
    title: &str,
    components: &[&str],
    bars: &[(String, Vec<f64>)],
) -> String {
    let mut svg = header(title);
    if bars.is_empty() {
        svg.push_str("</svg>\n");
        return svg;
    }
    let max_total = bars
        .iter()
        .map(|(_, v)| v.iter().sum::<f64>())
        .fold(f64::MIN, f64::max)
        .max(1e-12);
    let plot_w = WIDTH - MARGIN_L - MARGIN_R;
    let plot_h = HEIGHT - MARGIN_T - MARGIN_B;
    let slot = plot_w / bars.len() as f64;
    let bar_w = (slot * 0.6).min(80.0);
    let _ = writeln!(
        svg,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        c(MARGIN_L),
        c(MARGIN_T + plot_h),
        c(MARGIN_L + plot_w),
        c(MARGIN_T + plot_h),
    );
    for (bi, (label, values)) in bars.iter().enumerate() {
        let x = MARGIN_L + slot * bi as f64 + (slot - bar_w) / 2.0;
        let mut acc = 0.0;
        for (ci, &v) in values.iter().enumerate() {
            if v <= 0.0 {
                continue;
            }
            let h = v / max_total * plot_h;
            let y = MARGIN_T + plot_h - (acc + v) / max_total * plot_h;
            let _ = writeln!(
                svg,
                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
                c(x),
                c(y),
                c(bar_w),
                c(h),
                PALETTE[ci % PALETTE.len()]
            );
            acc += v;
        }
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="10" text-anchor="middle">{label}</text>"#,
            c(x + bar_w / 2.0),
            c(MARGIN_T + plot_h + 14.0)
        );
    }
    for (ci, name) in components.iter().enumerate() {
        let ly = MARGIN_T + 16.0 * ci as f64;
        let _ = writeln!(
            svg,
            r#"<rect x="{}" y="{}" width="12" height="12" fill="{}"/><text x="{}" y="{}" font-family="sans-serif" font-size="11">{name}</text>"#,
            c(WIDTH - MARGIN_R + 10.0),
            c(ly),
            PALETTE[ci % PALETTE.len()],
            c(WIDTH - MARGIN_R + 26.0),
            c(ly + 10.0)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// The component labels used for breakdown bar charts, in stack order.
pub const BREAKDOWN_COMPONENTS: [&str; 9] = [
    "raw_chips",
    "chip_defects",
    "raw_package",
    "package_defects",
    "wasted_kgd",
    "nre_modules",
    "nre_chips",
    "nre_packages",
    "nre_d2d",
];

pub fn breakdown_values(b: &crate::system::CostBreakdown) -> Vec<f64> {
    vec![
        b.raw_chips,
        b.chip_defects,
        b.raw_package,
        b.package_defects,
        b.wasted_kgd,
        b.nre_modules,
        b.nre_chips,
        b.nre_packages,
        b.nre_d2d,
    ]
}
