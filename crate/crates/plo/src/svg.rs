//! Deterministic SVG rendering of map graphs.
//!
//! Each map becomes one polyline through its exact nodes inside a unit
//! square with a dashed diagonal — the usual picture for seeing bumps,
//! crossings, and nesting at a glance. Output is plain SVG 1.1 text with
//! no external references, built with integer pixel arithmetic so the
//! same input always yields byte-identical bytes.

use num_traits::ToPrimitive;

use crate::plmap::PLMap;
use crate::rat::Rat;

/// Pixel geometry: the unit square is `scale` pixels wide with `margin`
/// pixels of padding on every side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgOptions {
    pub scale: u32,
    pub margin: u32,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            scale: 400,
            margin: 40,
        }
    }
}

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// Renders named maps as a standalone SVG document: framed unit square,
/// dashed diagonal, one colored polyline per map, legend underneath.
pub fn render_svg(maps: &[(String, PLMap)], options: &SvgOptions) -> String {
    assert!(!maps.is_empty(), "nothing to draw");
    let scale = options.scale;
    let margin = options.margin;
    let square = margin + scale;
    let width = scale + 2 * margin;
    let legend_h = 20 * maps.len() as u32;
    let height = width + legend_h;

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    s.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
    ));
    s.push_str(&format!(
        "  <rect x=\"{margin}\" y=\"{margin}\" width=\"{scale}\" height=\"{scale}\" \
         fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n"
    ));
    s.push_str(&format!(
        "  <line x1=\"{margin}\" y1=\"{square}\" x2=\"{square}\" y2=\"{margin}\" \
         stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n"
    ));
    for (i, (_, map)) in maps.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = map
            .nodes()
            .iter()
            .map(|(x, y)| format!("{},{}", px(x, scale, margin), px_flipped(y, scale, margin)))
            .collect();
        s.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{}\"/>\n",
            points.join(" ")
        ));
    }
    for (i, (name, _)) in maps.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let y = square + margin + 20 * i as u32;
        s.push_str(&format!(
            "  <rect x=\"{margin}\" y=\"{y}\" width=\"12\" height=\"12\" fill=\"{color}\"/>\n"
        ));
        s.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"13\" \
             fill=\"#333333\">{}</text>\n",
            margin + 18,
            y + 11,
            escape(name)
        ));
    }
    s.push_str("</svg>\n");
    s
}

/// Horizontal pixel coordinate of a unit-interval value, rounded to at
/// most three decimal places with trailing zeros trimmed.
fn px(v: &Rat, scale: u32, margin: u32) -> String {
    fmt_thousandths(&(Rat::from_int(margin as i64) + Rat::from_int(scale as i64) * v))
}

/// Vertical pixel coordinate: the y axis points down, so values flip.
fn px_flipped(v: &Rat, scale: u32, margin: u32) -> String {
    let flipped = Rat::one() - v;
    fmt_thousandths(&(Rat::from_int(margin as i64) + Rat::from_int(scale as i64) * flipped))
}

fn fmt_thousandths(v: &Rat) -> String {
    let thousandths = (v * Rat::from_int(1000))
        .round()
        .to_i64()
        .expect("pixel coordinates are small");
    let (int, frac) = (thousandths / 1000, thousandths % 1000);
    if frac == 0 {
        int.to_string()
    } else {
        let mut s = format!("{int}.{frac:03}");
        while s.ends_with('0') {
            s.pop();
        }
        s
    }
}

fn escape(name: &str) -> String {
    name.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{crossing_pair, nested_tower};

    fn named(maps: Vec<PLMap>) -> Vec<(String, PLMap)> {
        maps.into_iter()
            .enumerate()
            .map(|(i, m)| (format!("m{}", i + 1), m))
            .collect()
    }

    #[test]
    fn identity_lies_on_the_diagonal() {
        let svg = render_svg(&named(vec![PLMap::identity()]), &SvgOptions::default());
        assert!(svg.contains("points=\"40,440 440,40\""));
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.starts_with("<svg xmlns"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn crossing_pair_draws_two_polylines() {
        let (f, g) = crossing_pair();
        let svg = render_svg(&named(vec![f, g]), &SvgOptions::default());
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("<text").count(), 2);
    }

    #[test]
    fn nested_tower_nodes_land_on_exact_pixels() {
        let (gens, _) = nested_tower(2).unwrap();
        let maps: Vec<(String, PLMap)> = gens
            .generators()
            .iter()
            .enumerate()
            .map(|(i, m)| (gens.label(i), m.clone()))
            .collect();
        let svg = render_svg(&maps, &SvgOptions::default());
        // node (1/4, 1/4) of the inner bump: x = 40+100, y = 40+300
        assert!(svg.contains("140,340"));
        // node (3/8, 5/16): x = 40+150, y = 40+400·(11/16) = 315
        assert!(svg.contains("190,315"));
    }

    #[test]
    fn output_is_deterministic_and_scalable() {
        let (f, g) = crossing_pair();
        let maps = named(vec![f, g]);
        let a = render_svg(&maps, &SvgOptions::default());
        let b = render_svg(&maps, &SvgOptions::default());
        assert_eq!(a, b);
        let small = render_svg(&maps, &SvgOptions { scale: 120, margin: 10 });
        assert!(small.contains("width=\"140\""));
        // a third of 120 pixels needs the fractional form
        let third = render_svg(
            &named(vec![crate::io::parse_map("0,0 1/3,1/4 2/3,3/4 1,1").unwrap()]),
            &SvgOptions { scale: 100, margin: 0 },
        );
        assert!(third.contains("33.333,75"));
    }

    #[test]
    fn names_are_escaped() {
        let svg = render_svg(
            &[("a<b&c".to_string(), PLMap::identity())],
            &SvgOptions::default(),
        );
        assert!(svg.contains("a&lt;b&amp;c"));
    }
}
