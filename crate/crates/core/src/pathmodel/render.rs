use std::fmt::Write;

use super::{in_extended_shape, PipeDiagram, Tile};
use crate::diagrams::Cell;
use crate::error::{Error, Result};

/// `+` crossing, `J` elbow, `r` reversed elbow, `%` the reversed elbows at
/// the added boxes `(2k, k)`, space outside the shape.
fn glyph(tile: Option<Tile>, (row, col): Cell) -> char {
    match tile {
        None => ' ',
        Some(Tile::Cross) => '+',
        Some(Tile::Elbow) => 'J',
        Some(Tile::ReversedElbow) if row == 2 * col => '%',
        Some(Tile::ReversedElbow) => 'r',
    }
}

/// `2n` lines of `n + 1` characters, top row first.
pub fn render_ascii(p: &PipeDiagram) -> String {
    let mut out = String::new();
    for (r, row) in p.tiles().iter().enumerate() {
        for (c, &tile) in row.iter().enumerate() {
            out.push(glyph(tile, (r + 1, c + 1)));
        }
        out.push('\n');
    }
    out
}

/// Reads back the output of [`render_ascii`].
pub fn parse_ascii(n: usize, text: &str) -> Result<Vec<Vec<Option<Tile>>>> {
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() != 2 * n {
        return Err(Error::Parse(format!("expected {} lines, got {}", 2 * n, lines.len())));
    }
    let mut rows = Vec::with_capacity(2 * n);
    for (r, line) in lines.iter().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        if chars.len() != n + 1 {
            return Err(Error::Parse(format!("line {} has {} columns", r + 1, chars.len())));
        }
        let mut row = Vec::with_capacity(n + 1);
        for (c, ch) in chars.into_iter().enumerate() {
            let cell = (r + 1, c + 1);
            let tile = match ch {
                ' ' => None,
                '+' => Some(Tile::Cross),
                'J' => Some(Tile::Elbow),
                'r' | '%' => Some(Tile::ReversedElbow),
                other => return Err(Error::Parse(format!("unknown tile {other:?}"))),
            };
            if tile.is_some() != in_extended_shape(n, cell) {
                return Err(Error::Parse(format!("tile presence mismatch at {cell:?}")));
            }
            row.push(tile);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// A standalone `tikzpicture`: one unit square per box, pipe segments inside,
/// entry labels `ℓ_k` on the left and exit labels `L_j` on top.
pub fn render_tikz(p: &PipeDiagram) -> String {
    let n = p.rank();
    let top = 2 * n;
    let mut s = String::new();
    s.push_str("\\begin{tikzpicture}[scale=0.6]\n");
    for (r, row) in p.tiles().iter().enumerate() {
        for (c, tile) in row.iter().enumerate() {
            let Some(tile) = tile else { continue };
            let (row, col) = (r + 1, c + 1);
            // box spans [col-1, col] x [top-row, top-row+1]
            let x = col as f64 - 1.0;
            let y = (top - row) as f64;
            let north = (x + 0.5, y + 1.0);
            let south = (x + 0.5, y);
            let west = (x, y + 0.5);
            let east = (x + 1.0, y + 0.5);
            let _ = writeln!(s, "  \\draw[gray!50] ({x},{y}) rectangle ({},{});", x + 1.0, y + 1.0);
            match tile {
                Tile::Cross => {
                    let _ = writeln!(s, "  % cross ({row},{col})");
                    let _ = writeln!(s, "  \\draw[thick] {} -- {};", pt(north), pt(south));
                    let _ = writeln!(s, "  \\draw[thick] {} -- {};", pt(west), pt(east));
                }
                Tile::Elbow => {
                    let _ = writeln!(s, "  \\draw[thick] {} to[out=-90,in=0] {};", pt(north), pt(west));
                    let _ = writeln!(s, "  \\draw[thick] {} to[out=90,in=180] {};", pt(south), pt(east));
                }
                Tile::ReversedElbow => {
                    let _ = writeln!(s, "  \\draw[thick] {} to[out=-90,in=180] {};", pt(north), pt(east));
                    let _ = writeln!(s, "  \\draw[thick] {} to[out=90,in=0] {};", pt(south), pt(west));
                }
            }
        }
    }
    for k in 1..=n {
        let (row, col) = (2 * (n - k) + 1, n - k + 1);
        let y = (top - row) as f64 + 0.5;
        let _ = writeln!(s, "  \\node[left] at ({},{y}) {{$\\ell_{{{k}}}$}};", col - 1);
    }
    for j in 1..=n {
        let col = n + 1 - j;
        let _ = writeln!(s, "  \\node[above] at ({},{top}) {{$L_{{{j}}}$}};", col as f64 - 0.5);
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

fn pt((x, y): (f64, f64)) -> String {
    format!("({x},{y})")
}
