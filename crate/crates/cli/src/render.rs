//! Plain-text and SVG drawings of regions and tilings.
//!
//! Text format: one line per lattice row plus a roof line, one character
//! per half-unit column. Slanted lozenge sides are `/` and `\`, horizontal
//! sides are `_` (drawn on the line above when the side is an upper edge),
//! and slashes win when both want the same character cell — which yields
//! the classic "stack of boxes" look. Vertical lozenges crossing a
//! hexagon's long diagonal are overdrawn with `|`; in a bare region
//! drawing, dent positions are marked `x`.
//!
//! SVG format: one polygon per lozenge (or per unit triangle for a bare
//! region) with a fixed palette keyed by orientation; diagonal-crossing
//! vertical lozenges get their own fill so the cut stays visible.

use lozenge::regions::{Cell, CellGrid, Lozenge, Orientation, Pointing, Tiling};

struct Canvas {
    rows: Vec<Vec<char>>,
}

impl Canvas {
    fn new(grid: &CellGrid) -> Self {
        let width = grid
            .cells()
            .iter()
            .chain(grid.removed_cells())
            .map(|c| c.x2 + 2)
            .max()
            .unwrap_or(0) as usize;
        let height = grid.height() as usize + 1;
        Canvas {
            rows: vec![vec![' '; width]; height],
        }
    }

    /// Places an edge glyph; slashes overwrite underscores, underscores
    /// only fill blank space.
    fn edge(&mut self, row: u32, col: u32, glyph: char) {
        let cell = &mut self.rows[row as usize][col as usize];
        if glyph != '_' || *cell == ' ' {
            *cell = glyph;
        }
    }

    /// Unconditional overwrite, for diagonal-crossing highlights.
    fn overdraw(&mut self, row: u32, col: u32, glyph: char) {
        self.rows[row as usize][col as usize] = glyph;
    }

    /// Marks a dent: prefers a column not holding a slash, but a dent is
    /// load-bearing information, so it displaces an edge when boxed in.
    fn marker(&mut self, row: u32, cols: [u32; 2]) {
        for col in cols {
            let cell = &mut self.rows[row as usize][col as usize];
            if *cell != '/' && *cell != '\\' {
                *cell = 'x';
                return;
            }
        }
        self.rows[row as usize][cols[0] as usize] = 'x';
    }

    fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: String = row.iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Draws the four boundary sides of a lozenge (the shared inner edge of its
/// two triangles stays hidden).
fn draw_lozenge(canvas: &mut Canvas, l: &Lozenge) {
    let (r, c) = (l.row, l.x2);
    match l.orientation {
        Orientation::Right => {
            canvas.edge(r, c, '/');
            canvas.edge(r, c + 2, '/');
            canvas.edge(r - 1, c + 1, '_');
            canvas.edge(r - 1, c + 2, '_');
            canvas.edge(r, c, '_');
            canvas.edge(r, c + 1, '_');
        }
        Orientation::Left => {
            canvas.edge(r, c, '\\');
            canvas.edge(r, c + 2, '\\');
            canvas.edge(r - 1, c, '_');
            canvas.edge(r - 1, c + 1, '_');
            canvas.edge(r, c + 1, '_');
            canvas.edge(r, c + 2, '_');
        }
        Orientation::Vertical => {
            canvas.edge(r, c, '/');
            canvas.edge(r, c + 1, '\\');
            canvas.edge(r + 1, c, '\\');
            canvas.edge(r + 1, c + 1, '/');
        }
    }
}

/// Draws all three sides of a unit triangle (bare-region lattice mesh).
fn draw_cell(canvas: &mut Canvas, cell: &Cell) {
    let (r, c) = (cell.row, cell.x2);
    match cell.pointing {
        Pointing::Up => {
            canvas.edge(r, c, '/');
            canvas.edge(r, c + 1, '\\');
            canvas.edge(r, c, '_');
            canvas.edge(r, c + 1, '_');
        }
        Pointing::Down => {
            canvas.edge(r, c, '\\');
            canvas.edge(r, c + 1, '/');
            canvas.edge(r - 1, c, '_');
            canvas.edge(r - 1, c + 1, '_');
        }
    }
}

fn crossing_cells(grid: &CellGrid, l: &Lozenge) -> Option<[(u32, u32); 4]> {
    let b = grid.diagonal_row()?;
    if l.orientation != Orientation::Vertical || l.row != b {
        return None;
    }
    Some([(b, l.x2), (b, l.x2 + 1), (b + 1, l.x2), (b + 1, l.x2 + 1)])
}

/// Text drawing of a tiling.
pub fn ascii_tiling(grid: &CellGrid, tiling: &Tiling) -> String {
    let mut canvas = Canvas::new(grid);
    for l in tiling.lozenges() {
        draw_lozenge(&mut canvas, l);
    }
    for l in tiling.lozenges() {
        if let Some(cells) = crossing_cells(grid, l) {
            for (row, col) in cells {
                canvas.overdraw(row, col, '|');
            }
        }
    }
    canvas.render()
}

/// Text drawing of a bare region: the full triangle mesh with dents marked.
pub fn ascii_region(grid: &CellGrid) -> String {
    let mut canvas = Canvas::new(grid);
    for cell in grid.cells() {
        draw_cell(&mut canvas, cell);
    }
    for dent in grid.removed_cells() {
        canvas.marker(dent.row, [dent.x2, dent.x2 + 1]);
    }
    canvas.render()
}

const HALF_UNIT: f64 = 10.0;
const ROW_HEIGHT: f64 = 17.320_508; // 10·√3
const MARGIN: f64 = 5.0;

fn svg_open(grid: &CellGrid) -> String {
    let width = grid
        .cells()
        .iter()
        .chain(grid.removed_cells())
        .map(|c| c.x2 + 2)
        .max()
        .unwrap_or(0) as f64
        * HALF_UNIT
        + 2.0 * MARGIN;
    let height = grid.height() as f64 * ROW_HEIGHT + 2.0 * MARGIN;
    format!(
        concat!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.2}\" height=\"{h:.2}\" ",
            "viewBox=\"0 0 {w:.2} {h:.2}\">\n",
            "<style>\n",
            "polygon {{ stroke: #333333; stroke-width: 1; stroke-linejoin: round; }}\n",
            ".right {{ fill: #9ecae1; }}\n",
            ".left {{ fill: #a1d99b; }}\n",
            ".vertical {{ fill: #fee391; }}\n",
            ".crossing {{ fill: #f4a6c0; }}\n",
            ".cell {{ fill: #f7f7f7; }}\n",
            ".dent {{ fill: #969696; }}\n",
            "</style>\n",
            "<g transform=\"translate({m:.2} {m:.2})\">\n",
        ),
        w = width,
        h = height,
        m = MARGIN,
    )
}

fn polygon(class: &str, points: &[(u32, u32)]) -> String {
    let coords: Vec<String> = points
        .iter()
        .map(|&(x2, row)| {
            format!(
                "{:.2},{:.2}",
                x2 as f64 * HALF_UNIT,
                row as f64 * ROW_HEIGHT
            )
        })
        .collect();
    format!(
        "<polygon class=\"{}\" points=\"{}\"/>\n",
        class,
        coords.join(" ")
    )
}

fn lozenge_points(l: &Lozenge) -> [(u32, u32); 4] {
    let (r, c) = (l.row, l.x2);
    match l.orientation {
        Orientation::Right => [(c, r), (c + 1, r - 1), (c + 3, r - 1), (c + 2, r)],
        Orientation::Left => [(c, r - 1), (c + 2, r - 1), (c + 3, r), (c + 1, r)],
        Orientation::Vertical => [(c + 1, r - 1), (c + 2, r), (c + 1, r + 1), (c, r)],
    }
}

fn cell_points(cell: &Cell) -> [(u32, u32); 3] {
    let (r, c) = (cell.row, cell.x2);
    match cell.pointing {
        Pointing::Up => [(c, r), (c + 1, r - 1), (c + 2, r)],
        Pointing::Down => [(c, r - 1), (c + 2, r - 1), (c + 1, r)],
    }
}

/// SVG drawing of a tiling.
pub fn svg_tiling(grid: &CellGrid, tiling: &Tiling) -> String {
    let mut out = svg_open(grid);
    for l in tiling.lozenges() {
        let class = match l.orientation {
            _ if crossing_cells(grid, l).is_some() => "vertical crossing",
            Orientation::Right => "right",
            Orientation::Left => "left",
            Orientation::Vertical => "vertical",
        };
        out.push_str(&polygon(class, &lozenge_points(l)));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// SVG drawing of a bare region: unit triangles, dents filled dark.
pub fn svg_region(grid: &CellGrid) -> String {
    let mut out = svg_open(grid);
    for cell in grid.cells() {
        out.push_str(&polygon("cell", &cell_points(cell)));
    }
    for dent in grid.removed_cells() {
        out.push_str(&polygon("dent", &cell_points(dent)));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge::descriptors::parse_region;
    use lozenge::oracle;

    fn grid_of(json: &str) -> CellGrid {
        parse_region(json).unwrap().build().unwrap().build_cells()
    }

    #[test]
    fn unit_hexagon_tilings_draw_as_boxes_with_the_crossing_marked() {
        // Every unit-hexagon tiling has one vertical lozenge and it sits on
        // the diagonal, so it is always overdrawn with bars.
        let grid = grid_of(r#"{"type":"hexagon","a":1,"b":1,"c":1,"X":[],"Y":[]}"#);
        let tilings = oracle::enumerate_tilings(&grid);
        assert_eq!(tilings.len(), 2);
        let drawn: Vec<String> = tilings.iter().map(|t| ascii_tiling(&grid, t)).collect();
        assert!(
            drawn.contains(&" __\n||_\\\n||_/\n".to_string()),
            "{drawn:?}"
        );
        assert!(
            drawn.contains(&" __\n/_||\n\\_||\n".to_string()),
            "{drawn:?}"
        );
    }

    #[test]
    fn only_diagonal_crossing_verticals_are_highlighted() {
        // A trapezoid has no long diagonal, so its vertical lozenges keep
        // their slashes.
        let grid = grid_of(r#"{"type":"trapezoid","m":1,"n":2,"S":[2,3]}"#);
        let tilings = oracle::enumerate_tilings(&grid);
        assert_eq!(tilings.len(), 1);
        let art = ascii_tiling(&grid, &tilings[0]);
        assert!(art.contains("/\\"), "{art:?}");
        assert!(!art.contains('|'), "{art:?}");
    }

    #[test]
    fn bare_dented_trapezoid_marks_its_dent() {
        let grid = grid_of(r#"{"type":"trapezoid","m":1,"n":1,"S":[1]}"#);
        let art = ascii_region(&grid);
        assert_eq!(art.lines().count(), 2, "{art:?}");
        assert!(art.contains('x'), "{art:?}");
    }

    #[test]
    fn svg_output_is_balanced_and_typed() {
        let grid = grid_of(r#"{"type":"hexagon","a":1,"b":1,"c":1,"X":[],"Y":[]}"#);
        let tiling = oracle::nth_tiling(&grid, 0).unwrap();
        let svg = svg_tiling(&grid, &tiling);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<polygon").count(), 3);
        let bare = svg_region(&grid);
        assert_eq!(bare.matches("<polygon").count(), 6);
        assert_eq!(bare.matches("</svg>").count(), 1);
    }
}
