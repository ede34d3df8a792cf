//! Enumeration of small trioid structures up to isomorphism.
//!
//! Two independent engines produce the same censuses at order 2, which
//! is the correctness anchor for both:
//!
//! * [`enumerate_trioids`] fills table cells by backtracking (middle
//!   table first, then left, then right, values in ascending order)
//!   and prunes through any of the eleven axiom equations as soon as
//!   every table entry an instance reads has been assigned;
//! * [`enumerate_bruteforce`] filters *all* table triples through the
//!   axiom-engine checkers, with no pruning and no cleverness.
//!
//! Every representative that either engine emits is revalidated against
//! its class checker at the output stage. Census counts at orders 2 and
//! 3 are regression values produced by these engines, recorded in the
//! test suite the first time they were computed.

use std::collections::BTreeSet;
use std::fmt;

use crate::axioms::{check_trigroup, check_trisemigroup, find_bar_units};
use crate::error::{Error, Result};
use crate::table::{OpTable, TrioidTable};

/// Structure classes the census distinguishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructureClass {
    Trisemigroup,
    Trimonoid,
    Trigroup,
}

impl StructureClass {
    pub const ALL: [StructureClass; 3] = [
        StructureClass::Trisemigroup,
        StructureClass::Trimonoid,
        StructureClass::Trigroup,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StructureClass::Trisemigroup => "trisemigroup",
            StructureClass::Trimonoid => "trimonoid",
            StructureClass::Trigroup => "trigroup",
        }
    }

    /// The class membership test, built from the axiom-engine checkers.
    pub fn admits(self, t: &TrioidTable) -> bool {
        match self {
            StructureClass::Trisemigroup => check_trisemigroup(t).passed(),
            StructureClass::Trimonoid => {
                check_trisemigroup(t).passed() && !find_bar_units(t).is_empty()
            }
            StructureClass::Trigroup => check_trigroup(t, None).cert.is_some(),
        }
    }
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for StructureClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trisemigroup" => Ok(StructureClass::Trisemigroup),
            "trimonoid" => Ok(StructureClass::Trimonoid),
            "trigroup" => Ok(StructureClass::Trigroup),
            other => Err(Error::Usage(format!(
                "unknown structure class '{other}' (expected trisemigroup|trimonoid|trigroup)"
            ))),
        }
    }
}

/// One census result.
#[derive(Clone, Debug)]
pub struct CensusRow {
    pub order: usize,
    pub class: StructureClass,
    /// Whether `representatives` was reduced to canonical forms.
    pub up_to_iso: bool,
    /// Number of labeled instances found (before any iso-reduction).
    pub labeled_count: usize,
    /// Sorted; canonical forms when `up_to_iso`, otherwise every labeled
    /// instance.
    pub representatives: Vec<TrioidTable>,
}

impl CensusRow {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    /// The `census.txt` summary line.
    pub fn summary(&self) -> String {
        format!(
            "order={} class={} count={}",
            self.order,
            self.class,
            self.count()
        )
    }
}

pub const ENUMERATE_ORDER_LIMIT: usize = 4;
pub const BRUTEFORCE_ORDER_LIMIT: usize = 2;
pub const CANONICAL_ORDER_LIMIT: usize = 8;

/// Calls `f` with every permutation of `0..n` in lexicographic order.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        f(&perm);
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

fn table_key(t: &TrioidTable) -> Vec<usize> {
    let mut key = Vec::with_capacity(3 * t.order() * t.order());
    for table in [t.left(), t.middle(), t.right()] {
        key.extend(table.entries().iter().map(|e| e.0));
    }
    key
}

/// Lexicographically minimal relabeling of the concatenated
/// (left, middle, right) entry sequence over all `n!` permutations.
/// Two tables are isomorphic exactly when their canonical forms are
/// equal. The result carries no unit.
pub fn canonical_form(t: &TrioidTable) -> Result<TrioidTable> {
    let n = t.order();
    if n > CANONICAL_ORDER_LIMIT {
        return Err(Error::Guard(format!(
            "canonical form limited to order {CANONICAL_ORDER_LIMIT}, got {n}"
        )));
    }
    let base = t.without_unit();
    let mut best: Option<(Vec<usize>, TrioidTable)> = None;
    for_each_permutation(n, |perm| {
        let candidate = base.relabel(perm);
        let key = table_key(&candidate);
        match &best {
            Some((best_key, _)) if *best_key <= key => {}
            _ => best = Some((key, candidate)),
        }
    });
    Ok(best
        .expect("n >= 1 has at least the identity permutation")
        .1)
}

/// Exhaustive filter over all table triples; the oracle the backtracking
/// engine is validated against. Representatives are canonicalized.
pub fn enumerate_bruteforce(order: usize, class: StructureClass) -> Result<CensusRow> {
    if order == 0 || order > BRUTEFORCE_ORDER_LIMIT {
        return Err(Error::Guard(format!(
            "brute-force census limited to orders 1..={BRUTEFORCE_ORDER_LIMIT}, got {order}"
        )));
    }
    let cells = order * order;
    let tables: usize = order.pow(cells as u32);
    let decode = |mut code: usize| -> OpTable {
        OpTable::from_fn(order, |_, _| {
            let v = code % order;
            code /= order;
            v
        })
    };
    let mut found = Vec::new();
    for l in 0..tables {
        for m in 0..tables {
            for r in 0..tables {
                let t = TrioidTable::new(decode(l), decode(m), decode(r), None)
                    .expect("orders agree by construction");
                if class.admits(&t) {
                    found.push(t);
                }
            }
        }
    }
    finish_census(order, class, true, found)
}

fn finish_census(
    order: usize,
    class: StructureClass,
    up_to_iso: bool,
    found: Vec<TrioidTable>,
) -> Result<CensusRow> {
    let labeled_count = found.len();
    let representatives = if up_to_iso {
        let mut set = BTreeSet::new();
        for t in &found {
            set.insert(canonical_form(t)?);
        }
        set.into_iter().collect()
    } else {
        let mut all = found;
        all.sort_unstable();
        all
    };
    // Output-stage revalidation: every emitted representative re-passes
    // its class checker.
    for rep in &representatives {
        if !class.admits(rep) {
            return Err(Error::Validation(format!(
                "census representative fails the {class} checker"
            )));
        }
    }
    Ok(CensusRow {
        order,
        class,
        up_to_iso,
        labeled_count,
        representatives,
    })
}

// Table ids in cell-fill order: middle participates in the most cross
// axioms, so it is filled first.
const MID: usize = 0;
const LEFT: usize = 1;
const RIGHT: usize = 2;

const UNSET: usize = usize::MAX;

struct Search {
    n: usize,
    tables: [Vec<usize>; 3],
    /// Law instances already decided true; indexed `law * n^3 + xyz`.
    settled: Vec<bool>,
    /// Undo log of settled instance indices, one frame per depth.
    trail: Vec<Vec<usize>>,
    found: Vec<TrioidTable>,
}

/// The eleven axiom equations as (table, operand) trees, encoded
/// directly: each side is either `t[a][b]` or `t1[a][t2[b][c]]`-shaped.
/// `eval_side` returns `None` while any read cell is unassigned.
#[derive(Clone, Copy)]
enum Side {
    // t_outer[ t_inner[a][b] ][ c ]
    LeftNested(usize, usize),
    // t_outer[ a ][ t_inner[b][c] ]
    RightNested(usize, usize),
}

#[derive(Clone, Copy)]
struct Law {
    lhs: Side,
    rhs: Side,
}

// Equations over (x, y, z) with the convention that LeftNested(o, i)
// reads o[i[x][y]][z] and RightNested(o, i) reads o[x][i[y][z]].
const LAWS: [Law; 11] = [
    // ass-|-
    Law {
        lhs: Side::LeftNested(LEFT, LEFT),
        rhs: Side::RightNested(LEFT, LEFT),
    },
    // ass-_|_
    Law {
        lhs: Side::LeftNested(MID, MID),
        rhs: Side::RightNested(MID, MID),
    },
    // ass--|
    Law {
        lhs: Side::LeftNested(RIGHT, RIGHT),
        rhs: Side::RightNested(RIGHT, RIGHT),
    },
    // L1 on (|-,-|): x |- (y |- z) = (x -| y) |- z
    Law {
        lhs: Side::RightNested(LEFT, LEFT),
        rhs: Side::LeftNested(LEFT, RIGHT),
    },
    // L2 = R2 on (|-,-|): x |- (y -| z) = (x |- y) -| z
    Law {
        lhs: Side::RightNested(LEFT, RIGHT),
        rhs: Side::LeftNested(RIGHT, LEFT),
    },
    // R1 on (|-,-|): x -| (y -| z) = x -| (y |- z)
    Law {
        lhs: Side::RightNested(RIGHT, RIGHT),
        rhs: Side::RightNested(RIGHT, LEFT),
    },
    // L1 on (|-,_|_): x |- (y |- z) = (x _|_ y) |- z
    Law {
        lhs: Side::RightNested(LEFT, LEFT),
        rhs: Side::LeftNested(LEFT, MID),
    },
    // L2 on (|-,_|_): x |- (y _|_ z) = (x |- y) _|_ z
    Law {
        lhs: Side::RightNested(LEFT, MID),
        rhs: Side::LeftNested(MID, LEFT),
    },
    // R1 on (_|_,-|): x -| (y -| z) = x -| (y _|_ z)
    Law {
        lhs: Side::RightNested(RIGHT, RIGHT),
        rhs: Side::RightNested(RIGHT, MID),
    },
    // R2 on (_|_,-|): (x _|_ y) -| z = x _|_ (y -| z)
    Law {
        lhs: Side::LeftNested(RIGHT, MID),
        rhs: Side::RightNested(MID, RIGHT),
    },
    // T4: (x -| y) _|_ z = x _|_ (y |- z)
    Law {
        lhs: Side::LeftNested(MID, RIGHT),
        rhs: Side::RightNested(MID, LEFT),
    },
];

impl Search {
    fn new(n: usize) -> Self {
        Search {
            n,
            tables: [vec![UNSET; n * n], vec![UNSET; n * n], vec![UNSET; n * n]],
            settled: vec![false; LAWS.len() * n * n * n],
            trail: Vec::new(),
            found: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, t: usize, a: usize, b: usize) -> usize {
        self.tables[t][a * self.n + b]
    }

    #[inline]
    fn eval_side(&self, side: Side, x: usize, y: usize, z: usize) -> Option<usize> {
        let v = match side {
            Side::LeftNested(outer, inner) => {
                let iv = self.get(inner, x, y);
                if iv == UNSET {
                    return None;
                }
                self.get(outer, iv, z)
            }
            Side::RightNested(outer, inner) => {
                let iv = self.get(inner, y, z);
                if iv == UNSET {
                    return None;
                }
                self.get(outer, x, iv)
            }
        };
        if v == UNSET {
            None
        } else {
            Some(v)
        }
    }

    /// Scans all unsettled law instances. Returns false on a violation;
    /// newly decided instances are marked settled and logged for undo.
    fn propagate(&mut self) -> bool {
        let n = self.n;
        let mut newly = Vec::new();
        let mut ok = true;
        'scan: for (law_idx, law) in LAWS.iter().enumerate() {
            let base = law_idx * n * n * n;
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let idx = base + (x * n + y) * n + z;
                        if self.settled[idx] {
                            continue;
                        }
                        let lhs = self.eval_side(law.lhs, x, y, z);
                        let rhs = self.eval_side(law.rhs, x, y, z);
                        if let (Some(l), Some(r)) = (lhs, rhs) {
                            if l != r {
                                ok = false;
                                break 'scan;
                            }
                            self.settled[idx] = true;
                            newly.push(idx);
                        }
                    }
                }
            }
        }
        if ok {
            self.trail.push(newly);
            true
        } else {
            for idx in newly {
                self.settled[idx] = false;
            }
            false
        }
    }

    fn undo(&mut self) {
        let frame = self.trail.pop().expect("undo without propagate");
        for idx in frame {
            self.settled[idx] = false;
        }
    }

    fn fill(&mut self, cell: usize, class: StructureClass) {
        let n = self.n;
        if cell == 3 * n * n {
            let decode = |t: usize| {
                OpTable::from_fn(n, |i, j| {
                    let v = self.get(t, i, j);
                    debug_assert_ne!(v, UNSET);
                    v
                })
            };
            let table = TrioidTable::new(decode(LEFT), decode(MID), decode(RIGHT), None)
                .expect("orders agree by construction");
            if class.admits(&table) {
                self.found.push(table);
            }
            return;
        }
        // Fill order: all middle cells, then left, then right.
        let table_id = [MID, LEFT, RIGHT][cell / (n * n)];
        let offset = cell % (n * n);
        for v in 0..n {
            self.tables[table_id][offset] = v;
            if self.propagate() {
                self.fill(cell + 1, class);
                self.undo();
            }
        }
        self.tables[table_id][offset] = UNSET;
    }
}

/// Backtracking census with axiom propagation. `up_to_iso` reduces the
/// output to canonical forms; otherwise every labeled instance is
/// listed.
pub fn enumerate_trioids(
    order: usize,
    class: StructureClass,
    up_to_iso: bool,
) -> Result<CensusRow> {
    if order == 0 || order > ENUMERATE_ORDER_LIMIT {
        return Err(Error::Guard(format!(
            "census limited to orders 1..={ENUMERATE_ORDER_LIMIT}, got {order}"
        )));
    }
    let mut search = Search::new(order);
    search.fill(0, class);
    finish_census(order, class, up_to_iso, search.found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::morphism::count_automorphisms;

    #[test]
    fn order_one_census_is_single_for_every_class() {
        for class in StructureClass::ALL {
            let row = enumerate_trioids(1, class, true).unwrap();
            assert_eq!(row.count(), 1, "{class}");
            let oracle = enumerate_bruteforce(1, class).unwrap();
            assert_eq!(oracle.count(), 1, "{class}");
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_iso_invariant() {
        let (t6, _) = fixtures::t6();
        let canon = canonical_form(&t6).unwrap();
        assert_eq!(canonical_form(&canon).unwrap(), canon);
        // Relabel by swapping a2 <-> a4.
        let relabeled = t6.relabel(&[0, 1, 4, 3, 2, 5]);
        assert_eq!(canonical_form(&relabeled).unwrap(), canon);
    }

    #[test]
    fn canonical_form_separates_non_isomorphic_tables() {
        let (g2, _) = fixtures::g2();
        let proj = OpTable::from_fn(2, |i, _| i);
        let left_zero = TrioidTable::new(proj.clone(), proj.clone(), proj, None).unwrap();
        assert_ne!(
            canonical_form(&g2).unwrap(),
            canonical_form(&left_zero).unwrap()
        );
    }

    #[test]
    fn backtracking_matches_bruteforce_at_order_two() {
        for class in StructureClass::ALL {
            let fast = enumerate_trioids(2, class, true).unwrap();
            let oracle = enumerate_bruteforce(2, class).unwrap();
            assert_eq!(
                fast.representatives, oracle.representatives,
                "canonical census mismatch for {class}"
            );
            assert_eq!(fast.labeled_count, oracle.labeled_count, "{class}");
        }
    }

    #[test]
    fn labeled_count_satisfies_the_orbit_formula() {
        // Sum over representatives of n!/|Aut| equals the labeled count.
        for class in StructureClass::ALL {
            let row = enumerate_trioids(2, class, true).unwrap();
            let total: usize = row
                .representatives
                .iter()
                .map(|rep| 2 / count_automorphisms(rep))
                .sum();
            assert_eq!(total, row.labeled_count, "{class}");
        }
    }

    #[test]
    fn labeled_census_lists_every_instance() {
        let labeled = enumerate_trioids(2, StructureClass::Trigroup, false).unwrap();
        assert!(!labeled.up_to_iso);
        assert_eq!(labeled.count(), 6);
        assert_eq!(labeled.count(), labeled.labeled_count);
        // Sorted, distinct, and all genuine trigroups.
        for pair in labeled.representatives.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        // Reducing the labeled list reproduces the canonical census.
        let reduced: std::collections::BTreeSet<_> = labeled
            .representatives
            .iter()
            .map(|t| canonical_form(t).unwrap())
            .collect();
        let canonical = enumerate_trioids(2, StructureClass::Trigroup, true).unwrap();
        let expect: std::collections::BTreeSet<_> = canonical.representatives.into_iter().collect();
        assert_eq!(reduced, expect);
    }

    #[test]
    fn trigroup_census_contains_z2() {
        let (g2, _) = fixtures::g2();
        let row = enumerate_trioids(2, StructureClass::Trigroup, true).unwrap();
        let canon = canonical_form(&g2).unwrap();
        assert!(row.representatives.contains(&canon));
    }

    #[test]
    fn census_classes_nest() {
        let tri = enumerate_trioids(2, StructureClass::Trisemigroup, true).unwrap();
        let mono = enumerate_trioids(2, StructureClass::Trimonoid, true).unwrap();
        let grp = enumerate_trioids(2, StructureClass::Trigroup, true).unwrap();
        for rep in &mono.representatives {
            assert!(tri.representatives.contains(rep));
        }
        for rep in &grp.representatives {
            assert!(mono.representatives.contains(rep));
        }
    }

    #[test]
    fn guards_reject_large_orders() {
        assert!(matches!(
            enumerate_trioids(5, StructureClass::Trisemigroup, true),
            Err(Error::Guard(_))
        ));
        assert!(matches!(
            enumerate_bruteforce(3, StructureClass::Trisemigroup),
            Err(Error::Guard(_))
        ));
    }
}
