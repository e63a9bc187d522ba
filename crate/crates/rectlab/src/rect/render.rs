use std::fmt::Write;
use std::str::FromStr;

use super::{RectError, Rectangulation};

const PX: usize = 40;
const MARGIN: usize = 4;
const CELL_W: usize = 4;
const CELL_H: usize = 2;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Svg,
    Ascii,
}

impl FromStr for Format {
    type Err = RectError;

    fn from_str(s: &str) -> Result<Self, RectError> {
        match s {
            "svg" => Ok(Format::Svg),
            "ascii" => Ok(Format::Ascii),
            other => Err(RectError::UnsupportedFormat(other.to_string())),
        }
    }
}

impl Rectangulation {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Svg => self.render_svg(),
            Format::Ascii => self.render_ascii(),
        }
    }

    fn render_svg(&self) -> String {
        let w = self.width() * PX + 2 * MARGIN;
        let h = self.height() * PX + 2 * MARGIN;
        let mut out = String::new();
        writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#)
            .unwrap();
        for r in self.rects() {
            let (x, y) = (MARGIN + r.x_left * PX, MARGIN + r.y_top * PX);
            let (rw, rh) = ((r.x_right - r.x_left) * PX, (r.y_bottom - r.y_top) * PX);
            writeln!(
                out,
                r#"  <rect x="{x}" y="{y}" width="{rw}" height="{rh}" fill="none" stroke="black" stroke-width="2"/>"#
            )
            .unwrap();
            writeln!(
                out,
                r#"  <text x="{}" y="{}" text-anchor="middle" dominant-baseline="central" font-family="sans-serif" font-size="14">{}</text>"#,
                x + rw / 2,
                y + rh / 2,
                r.label
            )
            .unwrap();
        }
        out.push_str("</svg>\n");
        out
    }

    #[allow(clippy::needless_range_loop)]
    fn render_ascii(&self) -> String {
        let cols = self.width() * CELL_W + 1;
        let rows = self.height() * CELL_H + 1;
        let mut canvas = vec![vec![' '; cols]; rows];
        for r in self.rects() {
            let (x0, x1) = (r.x_left * CELL_W, r.x_right * CELL_W);
            let (y0, y1) = (r.y_top * CELL_H, r.y_bottom * CELL_H);
            for x in x0..=x1 {
                for y in [y0, y1] {
                    canvas[y][x] = if x == x0 || x == x1 { '+' } else { '-' };
                }
            }
            for y in y0 + 1..y1 {
                for x in [x0, x1] {
                    if canvas[y][x] != '+' {
                        canvas[y][x] = '|';
                    }
                }
            }
            let text = r.label.to_string();
            let row = (y0 + y1) / 2;
            let start = (x0 + x1).div_ceil(2).saturating_sub(text.len() / 2).max(x0 + 1);
            for (k, c) in text.chars().enumerate() {
                if start + k < x1 {
                    canvas[row][start + k] = c;
                }
            }
        }
        let mut out = String::new();
        for line in canvas {
            out.extend(line.iter());
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_box() {
        let r = Rectangulation::vertical_strips(1);
        assert_eq!(r.render(Format::Ascii), "+---+\n| 1 |\n+---+\n");
        let svg = r.render(Format::Svg);
        assert_eq!(svg.matches("<rect").count(), 1);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn three_strips() {
        let r = Rectangulation::vertical_strips(3);
        assert_eq!(r.render(Format::Ascii), "+---+---+---+\n| 1 | 2 | 3 |\n+---+---+---+\n");
        assert_eq!(r.render(Format::Svg).matches("<rect").count(), 3);
    }

    #[test]
    fn unknown_format() {
        assert_eq!("png".parse::<Format>(), Err(RectError::UnsupportedFormat("png".into())));
    }
}
