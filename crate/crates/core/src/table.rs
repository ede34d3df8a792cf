//! Carriers and operation tables.
//!
//! Elements of a finite carrier are dense integer indices (`ElementId`);
//! display names are a presentation concern and never enter the algebra.
//! An `OpTable` is one binary operation tabulated as an n-by-n grid with
//! the convention `entries[i][j] = i op j` (row = left operand), and a
//! `TrioidTable` bundles the three operations of a trioid over a shared
//! carrier, with an optional distinguished unit that is validated on
//! construction.

use std::fmt;

use crate::error::{Error, Result};

/// Index of an element of a finite carrier, in `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Selector for the three trioid operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Left,
    Middle,
    Right,
}

impl Op {
    pub const ALL: [Op; 3] = [Op::Left, Op::Middle, Op::Right];

    pub fn as_str(self) -> &'static str {
        match self {
            Op::Left => "left",
            Op::Middle => "middle",
            Op::Right => "right",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One binary operation on `0..order`, stored as a flat row-major grid.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpTable {
    order: usize,
    entries: Vec<ElementId>,
}

impl OpTable {
    /// Builds a table from rows; every row must have length `order` and
    /// every entry must be in range.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<OpTable> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::Usage("operation table must have order >= 1".into()));
        }
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Usage(format!(
                    "row {i} has length {}, expected {order}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::Usage(format!(
                        "entry ({i},{j}) = {v} out of range for order {order}"
                    )));
                }
                entries.push(ElementId(v));
            }
        }
        Ok(OpTable { order, entries })
    }

    /// Builds a table by evaluating `f` on every ordered pair.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> OpTable {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                let v = f(i, j);
                assert!(v < order, "table entry out of range");
                entries.push(ElementId(v));
            }
        }
        OpTable { order, entries }
    }

    /// The addition table of Z/n.
    pub fn cyclic(order: usize) -> OpTable {
        OpTable::from_fn(order, |i, j| (i + j) % order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: ElementId, b: ElementId) -> ElementId {
        self.entries[a.0 * self.order + b.0]
    }

    /// Raw entry by plain indices; hot loops use this to skip the newtype.
    #[inline]
    pub fn at(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.order + b].0
    }

    pub fn entries(&self) -> &[ElementId] {
        &self.entries
    }

    /// Transports the table along a relabeling `perm` (old index -> new
    /// index): `new[p(i)][p(j)] = p(old[i][j])`.
    pub fn relabel(&self, perm: &[usize]) -> OpTable {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut entries = vec![ElementId(0); n * n];
        for i in 0..n {
            for j in 0..n {
                let v = self.entries[i * n + j].0;
                entries[perm[i] * n + perm[j]] = ElementId(perm[v]);
            }
        }
        OpTable { order: n, entries }
    }

    /// Replaces a single entry, returning the mutated copy.
    pub fn with_entry(&self, i: usize, j: usize, v: usize) -> OpTable {
        assert!(i < self.order && j < self.order && v < self.order);
        let mut copy = self.clone();
        copy.entries[i * self.order + j] = ElementId(v);
        copy
    }
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OpTable(order={})", self.order)?;
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| self.entries[i * self.order + j].0.to_string())
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Three operation tables over a common carrier, plus an optional
/// distinguished unit.
///
/// The unit, when present, must satisfy `unit |- x = x = x -| unit` for
/// every `x`; `new` rejects anything else so downstream code can rely on
/// the field.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrioidTable {
    order: usize,
    left: OpTable,
    middle: OpTable,
    right: OpTable,
    unit: Option<ElementId>,
}

impl TrioidTable {
    pub fn new(
        left: OpTable,
        middle: OpTable,
        right: OpTable,
        unit: Option<ElementId>,
    ) -> Result<TrioidTable> {
        let order = left.order();
        if middle.order() != order || right.order() != order {
            return Err(Error::Usage(format!(
                "operation tables disagree on order: left={}, middle={}, right={}",
                left.order(),
                middle.order(),
                right.order()
            )));
        }
        if let Some(e) = unit {
            if e.0 >= order {
                return Err(Error::Usage(format!(
                    "unit {e} out of range for order {order}"
                )));
            }
            for x in 0..order {
                let x = ElementId(x);
                if left.get(e, x) != x || right.get(x, e) != x {
                    return Err(Error::Validation(format!(
                        "declared unit {e} is not a bar-unit: fails at x={x}"
                    )));
                }
            }
        }
        Ok(TrioidTable {
            order,
            left,
            middle,
            right,
            unit,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn left(&self) -> &OpTable {
        &self.left
    }

    pub fn middle(&self) -> &OpTable {
        &self.middle
    }

    pub fn right(&self) -> &OpTable {
        &self.right
    }

    pub fn table(&self, op: Op) -> &OpTable {
        match op {
            Op::Left => &self.left,
            Op::Middle => &self.middle,
            Op::Right => &self.right,
        }
    }

    pub fn unit(&self) -> Option<ElementId> {
        self.unit
    }

    /// Returns a copy with the unit discarded.
    pub fn without_unit(&self) -> TrioidTable {
        TrioidTable {
            unit: None,
            ..self.clone()
        }
    }

    /// Iterates over the carrier.
    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(ElementId)
    }

    /// Looks up `a op b`, validating the indices.
    pub fn apply(&self, op: Op, a: ElementId, b: ElementId) -> Result<ElementId> {
        if a.0 >= self.order || b.0 >= self.order {
            return Err(Error::Usage(format!(
                "element out of range: ({a}, {b}) for order {}",
                self.order
            )));
        }
        Ok(self.table(op).get(a, b))
    }

    /// Transports all three tables (and the unit) along a relabeling.
    pub fn relabel(&self, perm: &[usize]) -> TrioidTable {
        TrioidTable {
            order: self.order,
            left: self.left.relabel(perm),
            middle: self.middle.relabel(perm),
            right: self.right.relabel(perm),
            unit: self.unit.map(|e| ElementId(perm[e.0])),
        }
    }

    /// Single-entry mutant of one of the three tables. Drops the unit,
    /// since the mutation may invalidate it.
    pub fn with_entry(&self, op: Op, i: usize, j: usize, v: usize) -> TrioidTable {
        let mut left = self.left.clone();
        let mut middle = self.middle.clone();
        let mut right = self.right.clone();
        match op {
            Op::Left => left = left.with_entry(i, j, v),
            Op::Middle => middle = middle.with_entry(i, j, v),
            Op::Right => right = right.with_entry(i, j, v),
        }
        TrioidTable {
            order: self.order,
            left,
            middle,
            right,
            unit: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_rows() {
        let err = OpTable::from_rows(&[vec![0, 1], vec![0]]).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let err = OpTable::from_rows(&[vec![0, 2], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn unit_must_be_a_bar_unit() {
        let z2 = OpTable::cyclic(2);
        // 1 is not an identity for Z/2 addition.
        let err =
            TrioidTable::new(z2.clone(), z2.clone(), z2.clone(), Some(ElementId(1))).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
        let ok = TrioidTable::new(z2.clone(), z2.clone(), z2, Some(ElementId(0)));
        assert!(ok.is_ok());
    }

    #[test]
    fn relabel_round_trips() {
        let t = OpTable::from_rows(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        let perm = vec![2usize, 0, 1];
        let mut inverse = vec![0usize; 3];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        assert_eq!(t.relabel(&perm).relabel(&inverse), t);
    }

    #[test]
    fn apply_validates_range() {
        let z2 = OpTable::cyclic(2);
        let t = TrioidTable::new(z2.clone(), z2.clone(), z2, Some(ElementId(0))).unwrap();
        assert!(t.apply(Op::Left, ElementId(0), ElementId(2)).is_err());
        assert_eq!(
            t.apply(Op::Left, ElementId(1), ElementId(1)).unwrap(),
            ElementId(0)
        );
    }
}
