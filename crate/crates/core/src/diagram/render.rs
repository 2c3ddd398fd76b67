//! Text and SVG pictures of a diagram cut open along the line between
//! node `n` and node `n+1`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{AffineDiagram, Arc, EdgeKind, NodeRef, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

pub fn render(d: &AffineDiagram, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => ascii(d),
        RenderFormat::Svg => svg(d),
    }
}

/// Nesting depth of each arc, counting translates: 0 for arcs enclosing
/// nothing.
fn levels(arcs: &BTreeSet<Arc>, n: i64) -> Vec<(Arc, usize)> {
    let mut by_span: Vec<Arc> = arcs.iter().copied().collect();
    by_span.sort_by_key(|a| a.right - a.left);
    let mut out: Vec<(Arc, usize)> = Vec::new();
    for a in by_span {
        let mut level = 0;
        for &(b, lb) in &out {
            let k = (a.left - b.left).div_euclid(n) + 1;
            for shift in [k - 1, k] {
                let (l, r) = (b.left + shift * n, b.right + shift * n);
                if a.left < l && r < a.right {
                    level = level.max(lb + 1);
                }
            }
        }
        out.push((a, level));
    }
    out
}

const STEP: usize = 4;

fn col(p: i64) -> usize {
    STEP * (p as usize - 1) + 2
}

struct Canvas {
    n: i64,
    width: usize,
    rows: Vec<Vec<char>>,
}

impl Canvas {
    fn new(n: i64) -> Self {
        Canvas {
            n,
            width: col(n) + 3,
            rows: Vec::new(),
        }
    }

    fn row(&mut self) -> usize {
        self.rows.push(vec![' '; self.width]);
        self.rows.len() - 1
    }

    fn put(&mut self, r: usize, c: usize, ch: char) {
        self.rows[r][c] = ch;
    }

    /// Horizontal run from `a` to `b` (positions on the universal cover),
    /// clipped to the window with `<` / `>` where it leaves.
    fn run(&mut self, r: usize, a: i64, b: i64) {
        if b < 1 || a > self.n {
            return;
        }
        let start = if a < 1 { 0 } else { col(a) };
        let end = if b > self.n { self.width - 1 } else { col(b) };
        for c in start..=end {
            if self.rows[r][c] == ' ' {
                self.rows[r][c] = '-';
            }
        }
        if a < 1 {
            self.put(r, 0, '<');
        } else {
            self.put(r, col(a), '+');
        }
        if b > self.n {
            self.put(r, self.width - 1, '>');
        } else {
            self.put(r, col(b), '+');
        }
    }

    fn vertical(&mut self, r: usize, p: i64) {
        if (1..=self.n).contains(&p) {
            self.put(r, col(p), '|');
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let line: String = r.iter().collect();
            s.push_str(line.trim_end());
            s.push('\n');
        }
        s
    }
}

fn arc_rows(c: &mut Canvas, d: &AffineDiagram, side: Side, verticals: &[i64]) {
    let n = c.n;
    let arcs = match side {
        Side::Top => d.top_arcs(),
        Side::Bottom => d.bottom_arcs(),
    };
    let lv = levels(&arcs, n);
    let depth = lv.iter().map(|x| x.1 + 1).max().unwrap_or(0);
    let order: Vec<usize> = match side {
        Side::Top => (0..depth).collect(),
        Side::Bottom => (0..depth).rev().collect(),
    };
    for h in order {
        let r = c.row();
        for &p in verticals {
            c.vertical(r, p);
        }
        for &(a, l) in &lv {
            for shift in [-n, 0, n] {
                let (x, y) = (a.left + shift, a.right + shift);
                if l == h {
                    if y >= 1 && x <= n {
                        c.run(r, x, y);
                    }
                } else if l > h {
                    c.vertical(r, x);
                    c.vertical(r, y);
                }
            }
        }
    }
}

fn labels_row(c: &mut Canvas) {
    let r = c.row();
    for p in 1..=c.n {
        for (i, ch) in p.to_string().chars().enumerate() {
            c.put(r, col(p) + i, ch);
        }
    }
}

fn node_name(x: NodeRef) -> String {
    let s = match x.side {
        Side::Top => 'T',
        Side::Bottom => 'B',
    };
    format!("{s}{}", x.pos)
}

/// Rows of labels, top arcs, strands, loops, bottom arcs, labels, followed
/// by the edge list (one orbit representative per edge) and loop count.
pub fn ascii(d: &AffineDiagram) -> String {
    let n = d.n() as i64;
    let mut c = Canvas::new(n);
    let strands: Vec<(i64, i64)> = (1..=n)
        .filter_map(|p| {
            let y = d.partner(NodeRef::top(p));
            (y.side == Side::Bottom).then_some((p, y.pos))
        })
        .collect();
    let tops: Vec<i64> = strands.iter().map(|s| s.0).collect();
    let bottoms: Vec<i64> = strands
        .iter()
        .map(|s| (s.1 - 1).rem_euclid(n) + 1)
        .collect();

    labels_row(&mut c);
    arc_rows(&mut c, d, Side::Top, &tops);
    let r = c.row();
    for &(p, q) in &strands {
        let ch = match q.cmp(&p) {
            std::cmp::Ordering::Equal => '|',
            std::cmp::Ordering::Greater => '\\',
            std::cmp::Ordering::Less => '/',
        };
        c.put(r, col(p), ch);
        if !(1..=n).contains(&q) {
            c.put(r, col(p) + 1, '~');
        }
    }
    for _ in 0..d.loops() {
        let r = c.row();
        for x in 0..c.width {
            c.put(r, x, '=');
        }
    }
    arc_rows(&mut c, d, Side::Bottom, &bottoms);
    labels_row(&mut c);

    let mut out = c.text();
    let edges: Vec<String> = d
        .edges()
        .iter()
        .map(|e| format!("{}-{}", node_name(e.a), node_name(e.b)))
        .collect();
    let _ = writeln!(out, "edges: {}", edges.join(" "));
    let _ = writeln!(out, "loops: {}", d.loops());
    out
}

const PITCH: f64 = 40.0;
const MARGIN: f64 = 30.0;
const TOP_Y: f64 = 30.0;
const BOTTOM_Y: f64 = 170.0;

fn x_of(p: i64) -> f64 {
    MARGIN + PITCH * (p as f64 - 1.0)
}

/// Standalone SVG. Edges that cross the cut are drawn together with their
/// translates by `±n` and clipped to the strip.
pub fn svg(d: &AffineDiagram) -> String {
    let n = d.n() as i64;
    let width = 2.0 * MARGIN + PITCH * (n as f64 - 1.0);
    let height = BOTTOM_Y + TOP_Y;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let left = MARGIN - PITCH / 2.0;
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="strip"><rect x="{left}" y="0" width="{}" height="{height}"/></clipPath></defs>"#,
        PITCH * n as f64
    );
    let _ = writeln!(
        s,
        r##"<rect x="{left}" y="{TOP_Y}" width="{}" height="{}" fill="none" stroke="#bbb" stroke-dasharray="4 3"/>"##,
        PITCH * n as f64,
        BOTTOM_Y - TOP_Y
    );
    let _ = writeln!(
        s,
        r#"<g clip-path="url(#strip)" fill="none" stroke="black" stroke-width="2">"#
    );
    for e in d.edges() {
        let path = match e.kind() {
            EdgeKind::ShortTop | EdgeKind::ShortBottom => {
                let y = if e.kind() == EdgeKind::ShortTop {
                    TOP_Y
                } else {
                    BOTTOM_Y
                };
                let (a, b) = (e.a.pos.min(e.b.pos), e.a.pos.max(e.b.pos));
                let bend = 18.0 * (b - a) as f64;
                let cy = if e.kind() == EdgeKind::ShortTop {
                    y + bend
                } else {
                    y - bend
                };
                format!(
                    "M {} {y} C {} {cy} {} {cy} {} {y}",
                    x_of(a),
                    x_of(a),
                    x_of(b),
                    x_of(b)
                )
            }
            EdgeKind::Vertical => {
                let (t, b) = if e.a.side == Side::Top {
                    (e.a, e.b)
                } else {
                    (e.b, e.a)
                };
                let mid = (TOP_Y + BOTTOM_Y) / 2.0;
                format!(
                    "M {} {TOP_Y} C {} {mid} {} {mid} {} {BOTTOM_Y}",
                    x_of(t.pos),
                    x_of(t.pos),
                    x_of(b.pos),
                    x_of(b.pos)
                )
            }
        };
        let wraps = [e.a.pos, e.b.pos].iter().any(|&p| !(1..=n).contains(&p));
        let _ = writeln!(s, r#"  <path d="{path}"/>"#);
        if wraps {
            for shift in [-n, n] {
                let _ = writeln!(
                    s,
                    r#"  <path d="{path}" transform="translate({} 0)"/>"#,
                    PITCH * shift as f64
                );
            }
        }
    }
    for i in 0..d.loops() {
        let y = (TOP_Y + BOTTOM_Y) / 2.0 + 8.0 * (i as f64 - (d.loops() as f64 - 1.0) / 2.0);
        let _ = writeln!(
            s,
            r#"  <line class="loop" x1="0" y1="{y}" x2="{width}" y2="{y}"/>"#
        );
    }
    let _ = writeln!(s, "</g>");
    for p in 1..=n {
        for y in [TOP_Y, BOTTOM_Y] {
            let _ = writeln!(s, r#"<circle cx="{}" cy="{y}" r="3.5"/>"#, x_of(p));
        }
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="11" text-anchor="middle">{p}</text>"#,
            x_of(p),
            TOP_Y - 10.0
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_vertical_strokes() {
        let pic = ascii(&AffineDiagram::identity(4).unwrap());
        assert!(pic.contains("|   |   |   |"), "{pic}");
        assert!(pic.contains("edges: T1-B1 T2-B2 T3-B3 T4-B4"), "{pic}");
        assert!(pic.contains("loops: 0"));
    }

    #[test]
    fn generator_has_cup_and_cap() {
        let pic = ascii(&AffineDiagram::generator(4, 1).unwrap());
        assert_eq!(pic.matches("+---+").count(), 2, "{pic}");
        assert!(pic.contains("T1-T2") && pic.contains("B1-B2"), "{pic}");
    }

    #[test]
    fn wrapping_arc_is_marked() {
        let pic = ascii(&AffineDiagram::generator(4, 4).unwrap());
        assert!(pic.contains('<') && pic.contains('>'), "{pic}");
    }

    #[test]
    fn loops_are_full_width_lines() {
        let a = AffineDiagram::generator(4, 1)
            .unwrap()
            .multiply(&AffineDiagram::generator(4, 3).unwrap())
            .unwrap()
            .diagram;
        let b = AffineDiagram::generator(4, 2)
            .unwrap()
            .multiply(&AffineDiagram::generator(4, 4).unwrap())
            .unwrap()
            .diagram;
        let c = a.multiply(&b).unwrap().diagram;
        let pic = ascii(&c);
        assert_eq!(
            pic.lines()
                .filter(|l| l.chars().all(|ch| ch == '=') && !l.is_empty())
                .count(),
            1,
            "{pic}"
        );
        let svg = svg(&c);
        assert_eq!(svg.matches("class=\"loop\"").count(), 1);
        assert!(svg.contains("clipPath"));
        assert!(svg.contains("translate("));
    }
}
