//! Conjugation of a trigroup and the derived pointed 3-rack.
//!
//! The ternary conjugation of a certified trigroup is
//!
//! ```text
//! [x,y,z] = (x _|_ y) |- z -| (y^-1 _|_ x^-1)
//! ```
//!
//! evaluated as `((x _|_ y) |- z) -| (y^-1 _|_ x^-1)`; the alternative
//! association is provably equal in a digroup, and debug builds
//! cross-check the two. Tabulating all of `[x,y,z]` yields a pointed
//! 3-rack:
//!
//! * (3r1) self-distributivity,
//!   `[x1,x2,[y1,y2,z]] = [[x1,x2,y1],[x1,x2,y2],[x1,x2,z]]`;
//! * (3r2) unique solvability of `[x,y,z] = b` in `z`;
//! * (3r3) `[1,1,z] = z` and `[x1,x2,1] = 1` at the point.
//!
//! The unique solution of (3r2) has the closed form
//! `z0 = theta^-1 |- b -| theta` with `theta = x _|_ y`, which
//! [`rack_solve`] evaluates directly.

use crate::axioms::TrigroupCert;
use crate::error::{Error, Result};
use crate::report::{CheckReport, LawScan};
use crate::rng::SplitMix64;
use crate::table::{ElementId, TrioidTable};

/// Guard for rack tabulation (`n^3` entries).
pub const RACK_ORDER_LIMIT: usize = 64;

/// Tuple-count threshold above which the quintic (3r1) scan samples
/// instead of exhausting.
const EXHAUSTIVE_TUPLE_LIMIT: u64 = 5_000_000;
const SAMPLE_COUNT: u64 = 100_000;
/// Seed recorded in sampled results.
pub const SAMPLE_SEED: u64 = 0x3517_2A4D;

/// A fully tabulated ternary operation with a distinguished point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedThreeRack {
    order: usize,
    grid: Vec<ElementId>,
    point: ElementId,
}

impl PointedThreeRack {
    pub fn from_grid(order: usize, grid: Vec<ElementId>, point: ElementId) -> Result<Self> {
        if grid.len() != order * order * order {
            return Err(Error::Usage(format!(
                "grid has {} entries, expected {}",
                grid.len(),
                order * order * order
            )));
        }
        if let Some(bad) = grid.iter().find(|e| e.0 >= order) {
            return Err(Error::Usage(format!(
                "grid entry {bad} out of range for order {order}"
            )));
        }
        if point.0 >= order {
            return Err(Error::Usage(format!(
                "point {point} out of range for order {order}"
            )));
        }
        Ok(PointedThreeRack { order, grid, point })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn point(&self) -> ElementId {
        self.point
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize, z: usize) -> usize {
        self.grid[(x * self.order + y) * self.order + z].0
    }

    pub fn get(&self, x: ElementId, y: ElementId, z: ElementId) -> ElementId {
        self.grid[(x.0 * self.order + y.0) * self.order + z.0]
    }

    /// Single-entry mutant, for report-soundness tests.
    pub fn with_entry(&self, x: usize, y: usize, z: usize, v: usize) -> PointedThreeRack {
        assert!(x < self.order && y < self.order && z < self.order && v < self.order);
        let mut copy = self.clone();
        copy.grid[(x * self.order + y) * self.order + z] = ElementId(v);
        copy
    }
}

/// Evaluates the conjugation `[x,y,z]` through the table operations.
pub fn conjugation(
    t: &TrioidTable,
    cert: &TrigroupCert,
    x: ElementId,
    y: ElementId,
    z: ElementId,
) -> ElementId {
    let theta = t.middle().get(x, y);
    let tail = t.middle().get(cert.inverse_of(y), cert.inverse_of(x));
    let result = t.right().get(t.left().get(theta, z), tail);
    // Both associations agree in a digroup; catch table corruption early.
    debug_assert_eq!(
        result,
        t.left().get(theta, t.right().get(z, tail)),
        "conjugation associations disagree at [{x},{y},{z}]"
    );
    result
}

/// Tabulates the conjugation 3-rack pointed at the certified unit.
pub fn derive_three_rack(t: &TrioidTable, cert: &TrigroupCert) -> Result<PointedThreeRack> {
    let n = t.order();
    if n > RACK_ORDER_LIMIT {
        return Err(Error::Guard(format!(
            "rack tabulation limited to order {RACK_ORDER_LIMIT}, got {n}"
        )));
    }
    let mut grid = Vec::with_capacity(n * n * n);
    for x in t.elements() {
        for y in t.elements() {
            // theta and the tail depend only on (x, y).
            let theta = t.middle().get(x, y);
            let tail = t.middle().get(cert.inverse_of(y), cert.inverse_of(x));
            for z in t.elements() {
                let v = t.right().get(t.left().get(theta, z), tail);
                debug_assert_eq!(v, conjugation(t, cert, x, y, z));
                grid.push(v);
            }
        }
    }
    PointedThreeRack::from_grid(n, grid, cert.unit)
}

/// Solves `[x,y,z] = b` for `z` via `z0 = theta^-1 |- b -| theta`.
pub fn rack_solve(
    t: &TrioidTable,
    cert: &TrigroupCert,
    x: ElementId,
    y: ElementId,
    b: ElementId,
) -> ElementId {
    let theta = t.middle().get(x, y);
    let z0 = t
        .right()
        .get(t.left().get(cert.inverse_of(theta), b), theta);
    debug_assert_eq!(conjugation(t, cert, x, y, z0), b);
    z0
}

/// Checks the pointed 3-rack axioms.
///
/// (3r1) scans all `n^5` tuples when that count is at most five million
/// and otherwise samples with a recorded seed; (3r2) counts solutions
/// for every `(x,y,b)` by brute force; (3r3) is checked at the point.
pub fn check_three_rack(r: &PointedThreeRack) -> CheckReport {
    let n = r.order();
    let tuples = (n as u64).pow(5);

    let mut r1 = LawScan::new("3r1");
    if tuples <= EXHAUSTIVE_TUPLE_LIMIT {
        'outer: for x1 in 0..n {
            for x2 in 0..n {
                for y1 in 0..n {
                    let a1 = r.at(x1, x2, y1);
                    for y2 in 0..n {
                        let a2 = r.at(x1, x2, y2);
                        for z in 0..n {
                            let lhs = r.at(x1, x2, r.at(y1, y2, z));
                            let rhs = r.at(a1, a2, r.at(x1, x2, z));
                            let witness = [
                                ElementId(x1),
                                ElementId(x2),
                                ElementId(y1),
                                ElementId(y2),
                                ElementId(z),
                            ];
                            if !r1.record(&witness, ElementId(lhs), ElementId(rhs)) {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    } else {
        r1.mark_sampled(SAMPLE_SEED);
        let mut rng = SplitMix64::new(SAMPLE_SEED);
        for _ in 0..SAMPLE_COUNT {
            let (x1, x2, y1, y2, z) = (
                rng.next_below(n),
                rng.next_below(n),
                rng.next_below(n),
                rng.next_below(n),
                rng.next_below(n),
            );
            let lhs = r.at(x1, x2, r.at(y1, y2, z));
            let rhs = r.at(r.at(x1, x2, y1), r.at(x1, x2, y2), r.at(x1, x2, z));
            let witness = [
                ElementId(x1),
                ElementId(x2),
                ElementId(y1),
                ElementId(y2),
                ElementId(z),
            ];
            if !r1.record(&witness, ElementId(lhs), ElementId(rhs)) {
                break;
            }
        }
    }

    let mut r2 = LawScan::new("3r2");
    let mut live = true;
    'r2: for x in 0..n {
        for y in 0..n {
            let mut hits: Vec<Vec<usize>> = vec![Vec::new(); n];
            for z in 0..n {
                hits[r.at(x, y, z)].push(z);
            }
            for (b, zs) in hits.iter().enumerate() {
                match zs.as_slice() {
                    [_] => r2.record_ok(),
                    [] => {
                        let witness = [ElementId(x), ElementId(y), ElementId(b)];
                        live = r2.record_failure(&witness, ElementId(b), ElementId(b));
                    }
                    [z1, z2, ..] => {
                        let witness = [
                            ElementId(x),
                            ElementId(y),
                            ElementId(b),
                            ElementId(*z1),
                            ElementId(*z2),
                        ];
                        live = r2.record_failure(&witness, ElementId(*z1), ElementId(*z2));
                    }
                }
                if !live {
                    break 'r2;
                }
            }
        }
    }

    let mut r3 = LawScan::new("3r3");
    let p = r.point().0;
    let mut live = true;
    for z in 0..n {
        let witness = [r.point(), r.point(), ElementId(z)];
        live = r3.record(&witness, ElementId(r.at(p, p, z)), ElementId(z));
        if !live {
            break;
        }
    }
    if live {
        'r3: for x1 in 0..n {
            for x2 in 0..n {
                let witness = [ElementId(x1), ElementId(x2), r.point()];
                if !r3.record(&witness, ElementId(r.at(x1, x2, p)), r.point()) {
                    break 'r3;
                }
            }
        }
    }

    CheckReport::new(vec![r1.finish(), r2.finish(), r3.finish()])
}
