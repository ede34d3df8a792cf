//! The `.trioid` and `.threerack` text formats.
//!
//! `.trioid`:
//!
//! ```text
//! trioid v1
//! order <n>
//! unit <i>          # optional, 0-based
//! op left
//! <n rows of n whitespace-separated integers in [0,n)>
//! op middle
//! ...
//! op right
//! ...
//! ```
//!
//! Entry `j` on row `i` of a block is `i op j`. `#` starts a comment and
//! blank lines are ignored. Serialization is canonical: blocks in the
//! order left, middle, right, single-space separators, no comments, so
//! `parse(serialize(t)) == t` entry-for-entry and byte output is stable
//! across runs.
//!
//! `.threerack` carries a fully tabulated ternary operation as `order`
//! slabs of `order` rows: `[x][y][z]` with one `slab x=<i>` header per
//! slab, plus the distinguished point.

use crate::error::{Error, Result};
use crate::rack::PointedThreeRack;
use crate::table::{ElementId, Op, OpTable, TrioidTable};

/// Lines with comments stripped, paired with their 1-based line numbers.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                None
            } else {
                Some((i + 1, line))
            }
        })
        .collect()
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.lines.get(self.pos).copied();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn last_line(&self) -> usize {
        self.lines.last().map(|(n, _)| *n).unwrap_or(0)
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let at_end = self.last_line();
        self.next()
            .ok_or_else(|| parse_err(at_end + 1, format!("expected {what}, found end of input")))
    }
}

fn parse_keyword_value(line: &str, lineno: usize, keyword: &str) -> Result<usize> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == keyword => v
            .parse::<usize>()
            .map_err(|_| parse_err(lineno, format!("invalid {keyword} value '{v}'"))),
        _ => Err(parse_err(lineno, format!("expected '{keyword} <n>'"))),
    }
}

fn parse_row(line: &str, lineno: usize, order: usize) -> Result<Vec<usize>> {
    let mut row = Vec::with_capacity(order);
    for tok in line.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| parse_err(lineno, format!("invalid table entry '{tok}'")))?;
        if v >= order {
            return Err(parse_err(
                lineno,
                format!("entry {v} out of range for order {order}"),
            ));
        }
        row.push(v);
    }
    if row.len() != order {
        return Err(parse_err(
            lineno,
            format!("row has {} entries, expected {order}", row.len()),
        ));
    }
    Ok(row)
}

fn parse_block(cursor: &mut Cursor<'_>, order: usize) -> Result<(Op, OpTable)> {
    let (lineno, header) = cursor.expect("'op <left|middle|right>'")?;
    let mut parts = header.split_whitespace();
    let op = match (parts.next(), parts.next(), parts.next()) {
        (Some("op"), Some("left"), None) => Op::Left,
        (Some("op"), Some("middle"), None) => Op::Middle,
        (Some("op"), Some("right"), None) => Op::Right,
        _ => {
            return Err(parse_err(
                lineno,
                format!("expected 'op <left|middle|right>', found '{header}'"),
            ))
        }
    };
    let mut rows = Vec::with_capacity(order);
    for _ in 0..order {
        let (lineno, line) = cursor.expect("table row")?;
        rows.push(parse_row(line, lineno, order)?);
    }
    Ok((op, OpTable::from_rows(&rows)?))
}

/// Parses the `.trioid` format; the declared unit (if any) is validated
/// against the bar-unit equations by [`TrioidTable::new`].
pub fn parse_trioid(text: &str) -> Result<TrioidTable> {
    let mut cursor = Cursor {
        lines: significant_lines(text),
        pos: 0,
    };
    let (lineno, header) = cursor.expect("'trioid v1' header")?;
    if header != "trioid v1" {
        return Err(parse_err(
            lineno,
            format!("expected 'trioid v1' header, found '{header}'"),
        ));
    }
    let (lineno, line) = cursor.expect("'order <n>'")?;
    let order = parse_keyword_value(line, lineno, "order")?;
    if order == 0 {
        return Err(parse_err(lineno, "order must be >= 1"));
    }

    let mut unit = None;
    if let Some((lineno, line)) = cursor.peek() {
        if line.starts_with("unit") {
            cursor.next();
            let u = parse_keyword_value(line, lineno, "unit")?;
            if u >= order {
                return Err(parse_err(
                    lineno,
                    format!("unit {u} out of range for order {order}"),
                ));
            }
            unit = Some(ElementId(u));
        }
    }

    let mut left = None;
    let mut middle = None;
    let mut right = None;
    for _ in 0..3 {
        let before = cursor.peek().map(|(n, _)| n).unwrap_or(0);
        let (op, table) = parse_block(&mut cursor, order)?;
        let slot = match op {
            Op::Left => &mut left,
            Op::Middle => &mut middle,
            Op::Right => &mut right,
        };
        if slot.is_some() {
            return Err(parse_err(before, format!("duplicate 'op {op}' block")));
        }
        *slot = Some(table);
    }
    if let Some((lineno, line)) = cursor.peek() {
        return Err(parse_err(
            lineno,
            format!("unexpected trailing line '{line}'"),
        ));
    }

    // All three blocks are present here; order mismatches are impossible
    // because every block was parsed against the declared order.
    TrioidTable::new(left.unwrap(), middle.unwrap(), right.unwrap(), unit)
}

fn push_table(out: &mut String, table: &OpTable) {
    let n = table.order();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&table.at(i, j).to_string());
        }
        out.push('\n');
    }
}

/// Canonical `.trioid` serialization.
pub fn serialize_trioid(t: &TrioidTable) -> String {
    let mut out = String::new();
    out.push_str("trioid v1\n");
    out.push_str(&format!("order {}\n", t.order()));
    if let Some(e) = t.unit() {
        out.push_str(&format!("unit {e}\n"));
    }
    for op in Op::ALL {
        out.push_str(&format!("op {op}\n"));
        push_table(&mut out, t.table(op));
    }
    out
}

/// Canonical `.threerack` serialization.
pub fn serialize_three_rack(r: &PointedThreeRack) -> String {
    let n = r.order();
    let mut out = String::new();
    out.push_str("threerack v1\n");
    out.push_str(&format!("order {n}\n"));
    out.push_str(&format!("point {}\n", r.point()));
    for x in 0..n {
        out.push_str(&format!("slab x={x}\n"));
        for y in 0..n {
            for z in 0..n {
                if z > 0 {
                    out.push(' ');
                }
                out.push_str(&r.at(x, y, z).to_string());
            }
            out.push('\n');
        }
    }
    out
}

/// Parses the `.threerack` format.
pub fn parse_three_rack(text: &str) -> Result<PointedThreeRack> {
    let mut cursor = Cursor {
        lines: significant_lines(text),
        pos: 0,
    };
    let (lineno, header) = cursor.expect("'threerack v1' header")?;
    if header != "threerack v1" {
        return Err(parse_err(
            lineno,
            format!("expected 'threerack v1' header, found '{header}'"),
        ));
    }
    let (lineno, line) = cursor.expect("'order <n>'")?;
    let order = parse_keyword_value(line, lineno, "order")?;
    if order == 0 {
        return Err(parse_err(lineno, "order must be >= 1"));
    }
    let (lineno, line) = cursor.expect("'point <i>'")?;
    let point = parse_keyword_value(line, lineno, "point")?;
    if point >= order {
        return Err(parse_err(
            lineno,
            format!("point {point} out of range for order {order}"),
        ));
    }

    let mut grid = Vec::with_capacity(order * order * order);
    for x in 0..order {
        let (lineno, line) = cursor.expect("'slab x=<i>'")?;
        if line != format!("slab x={x}") {
            return Err(parse_err(
                lineno,
                format!("expected 'slab x={x}', found '{line}'"),
            ));
        }
        for _ in 0..order {
            let (lineno, line) = cursor.expect("slab row")?;
            let row = parse_row(line, lineno, order)?;
            grid.extend(row.into_iter().map(ElementId));
        }
    }
    if let Some((lineno, line)) = cursor.peek() {
        return Err(parse_err(
            lineno,
            format!("unexpected trailing line '{line}'"),
        ));
    }
    PointedThreeRack::from_grid(order, grid, ElementId(point))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::TrioidTable;

    fn g2() -> TrioidTable {
        let z2 = OpTable::cyclic(2);
        TrioidTable::new(z2.clone(), z2.clone(), z2, Some(ElementId(0))).unwrap()
    }

    #[test]
    fn round_trips_g2() {
        let t = g2();
        let text = serialize_trioid(&t);
        assert_eq!(parse_trioid(&text).unwrap(), t);
        // Serialization is deterministic.
        assert_eq!(text, serialize_trioid(&t));
    }

    #[test]
    fn omits_unit_line_when_absent() {
        let t = g2().without_unit();
        let text = serialize_trioid(&t);
        assert!(!text.contains("unit"));
        assert_eq!(parse_trioid(&text).unwrap(), t);
    }

    #[test]
    fn reports_line_number_for_bad_row() {
        let text =
            "trioid v1\norder 2\nop left\n0 1\n1 0 0\nop middle\n0 1\n1 0\nop right\n0 1\n1 0\n";
        match parse_trioid(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a comment\ntrioid v1\n\norder 2  # inline\nunit 0\nop left\n0 1\n1 0\nop middle\n0 1\n1 0\nop right\n0 1\n1 0\n";
        assert_eq!(parse_trioid(text).unwrap(), g2());
    }

    #[test]
    fn rejects_declared_non_bar_unit() {
        let text = "trioid v1\norder 2\nunit 1\nop left\n0 1\n1 0\nop middle\n0 1\n1 0\nop right\n0 1\n1 0\n";
        assert!(matches!(parse_trioid(text), Err(Error::Validation(_))));
    }

    #[test]
    fn accepts_blocks_in_any_order() {
        let text =
            "trioid v1\norder 2\nop right\n0 1\n1 0\nop left\n0 1\n1 0\nop middle\n0 1\n1 0\n";
        assert_eq!(parse_trioid(text).unwrap(), g2().without_unit());
    }

    #[test]
    fn rejects_duplicate_block() {
        let text = "trioid v1\norder 2\nop left\n0 1\n1 0\nop left\n0 1\n1 0\nop right\n0 1\n1 0\n";
        assert!(matches!(parse_trioid(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn three_rack_round_trips() {
        use crate::axioms::certify;
        use crate::rack::derive_three_rack;
        let (t6, _) = crate::fixtures::t6();
        let cert = certify(&t6).unwrap();
        let rack = derive_three_rack(&t6, &cert).unwrap();
        let text = serialize_three_rack(&rack);
        assert_eq!(parse_three_rack(&text).unwrap(), rack);
        assert!(text.starts_with("threerack v1\norder 6\npoint 0\nslab x=0\n"));
    }

    #[test]
    fn three_rack_parser_rejects_bad_slab_headers() {
        let text = "threerack v1\norder 1\npoint 0\nslab x=1\n0\n";
        match parse_three_rack(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
