//! Exhaustive axiom checking.
//!
//! Each checker scans every instance of its defining equations in
//! lexicographic witness order and reports per-law results. The eleven
//! trioid axioms are organized exactly as the structure definitions
//! bundle them: a disemigroup on (left, right), a left disemigroup on
//! (left, middle), a right disemigroup on (middle, right), and the mixed
//! axiom T4. The compatibility law `x |- (y -| z) = (x |- y) -| z` is a
//! member of both disemigroup splits, so it appears under two ids
//! (`L2⊢⊣` and `R2⊢⊣`) and is scanned for each.
//!
//! Scans are cubic in the order; callers gate large tables through
//! [`spot_check_trisemigroup`] instead.

use crate::error::{Error, Result};
use crate::report::{CheckReport, LawResult, LawScan, MAX_COUNTEREXAMPLES};
use crate::rng::SplitMix64;
use crate::table::{ElementId, OpTable, TrioidTable};

/// Validated witness that a table triple is a trigroup: the distinguished
/// bar-unit, the total inverse map, and the full bar-unit set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigroupCert {
    pub unit: ElementId,
    /// `inverse[x]` is the unique y with
    /// `x |- y = 1 = y -| x` and `x _|_ y = 1 = y _|_ x`.
    pub inverse: Vec<ElementId>,
    /// Sorted ascending.
    pub bar_units: Vec<ElementId>,
}

impl TrigroupCert {
    pub fn inverse_of(&self, x: ElementId) -> ElementId {
        self.inverse[x.0]
    }

    pub fn is_bar_unit(&self, e: ElementId) -> bool {
        self.bar_units.binary_search(&e).is_ok()
    }
}

/// Result of a trigroup check: the full report plus, on success, the cert.
/// `cert.is_some()` if and only if `report.passed()`.
#[derive(Clone, Debug)]
pub struct TrigroupCheck {
    pub report: CheckReport,
    pub cert: Option<TrigroupCert>,
}

/// Scans a ternary law over all `n^3` triples.
fn scan_triples(
    id: &'static str,
    n: usize,
    eval: impl Fn(usize, usize, usize) -> (usize, usize),
) -> LawResult {
    let mut scan = LawScan::new(id);
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (lhs, rhs) = eval(x, y, z);
                let witness = [ElementId(x), ElementId(y), ElementId(z)];
                if !scan.record(&witness, ElementId(lhs), ElementId(rhs)) {
                    break 'outer;
                }
            }
        }
    }
    scan.finish()
}

fn assoc_result(id: &'static str, t: &OpTable) -> LawResult {
    scan_triples(id, t.order(), |x, y, z| {
        (t.at(t.at(x, y), z), t.at(x, t.at(y, z)))
    })
}

/// Law ids used when a disemigroup split is checked in isolation.
struct LeftIds {
    ass_left: &'static str,
    ass_star: &'static str,
    l1: &'static str,
    l2: &'static str,
}

struct RightIds {
    ass_star: &'static str,
    ass_right: &'static str,
    r1: &'static str,
    r2: &'static str,
}

fn left_disemigroup_results(left: &OpTable, star: &OpTable, ids: LeftIds) -> Vec<LawResult> {
    assert_eq!(left.order(), star.order(), "tables must share an order");
    let n = left.order();
    vec![
        assoc_result(ids.ass_left, left),
        assoc_result(ids.ass_star, star),
        // (L1)  x |- (y |- z) = (x * y) |- z
        scan_triples(ids.l1, n, |x, y, z| {
            (left.at(x, left.at(y, z)), left.at(star.at(x, y), z))
        }),
        // (L2)  x |- (y * z) = (x |- y) * z
        scan_triples(ids.l2, n, |x, y, z| {
            (left.at(x, star.at(y, z)), star.at(left.at(x, y), z))
        }),
    ]
}

fn right_disemigroup_results(star: &OpTable, right: &OpTable, ids: RightIds) -> Vec<LawResult> {
    assert_eq!(star.order(), right.order(), "tables must share an order");
    let n = star.order();
    vec![
        assoc_result(ids.ass_star, star),
        assoc_result(ids.ass_right, right),
        // (R1)  x -| (y -| z) = x -| (y * z)
        scan_triples(ids.r1, n, |x, y, z| {
            (right.at(x, right.at(y, z)), right.at(x, star.at(y, z)))
        }),
        // (R2)  (x * y) -| z = x * (y -| z)
        scan_triples(ids.r2, n, |x, y, z| {
            (right.at(star.at(x, y), z), star.at(x, right.at(y, z)))
        }),
    ]
}

/// Associativity of a single operation.
pub fn check_semigroup(t: &OpTable) -> CheckReport {
    CheckReport::new(vec![assoc_result("ass", t)])
}

/// Left disemigroup axioms for the pair `(left, star)`.
pub fn check_left_disemigroup(left: &OpTable, star: &OpTable) -> CheckReport {
    CheckReport::new(left_disemigroup_results(
        left,
        star,
        LeftIds {
            ass_left: "ass-⊢",
            ass_star: "ass-⋆",
            l1: "L1",
            l2: "L2",
        },
    ))
}

/// Right disemigroup axioms for the pair `(star, right)`.
pub fn check_right_disemigroup(star: &OpTable, right: &OpTable) -> CheckReport {
    CheckReport::new(right_disemigroup_results(
        star,
        right,
        RightIds {
            ass_star: "ass-⋆",
            ass_right: "ass-⊣",
            r1: "R1",
            r2: "R2",
        },
    ))
}

fn disemigroup_results(left: &OpTable, right: &OpTable) -> Vec<LawResult> {
    let mut results = left_disemigroup_results(
        left,
        right,
        LeftIds {
            ass_left: "ass-⊢",
            ass_star: "ass-⊣",
            l1: "L1⊢⊣",
            l2: "L2⊢⊣",
        },
    );
    let more = right_disemigroup_results(
        left,
        right,
        RightIds {
            ass_star: "ass-⊢",
            ass_right: "ass-⊣",
            r1: "R1⊢⊣",
            r2: "R2⊢⊣",
        },
    );
    // Associativity of each table was already scanned by the left split.
    results.extend(more.into_iter().skip(2));
    results
}

/// Disemigroup axioms for `(left, right)`: both splits at once.
pub fn check_disemigroup(left: &OpTable, right: &OpTable) -> CheckReport {
    CheckReport::new(disemigroup_results(left, right))
}

/// The eleven trioid axioms, reported under twelve ids (the shared
/// compatibility law is listed once per disemigroup split).
pub fn check_trisemigroup(t: &TrioidTable) -> CheckReport {
    let (left, middle, right) = (t.left(), t.middle(), t.right());
    let n = t.order();
    let mut results = vec![
        assoc_result("ass-⊢", left),
        assoc_result("ass-⊥", middle),
        assoc_result("ass-⊣", right),
    ];
    // (T1) disemigroup on (|-, -|)
    results.push(scan_triples("L1⊢⊣", n, |x, y, z| {
        (left.at(x, left.at(y, z)), left.at(right.at(x, y), z))
    }));
    results.push(scan_triples("L2⊢⊣", n, |x, y, z| {
        (left.at(x, right.at(y, z)), right.at(left.at(x, y), z))
    }));
    results.push(scan_triples("R1⊢⊣", n, |x, y, z| {
        (right.at(x, right.at(y, z)), right.at(x, left.at(y, z)))
    }));
    results.push(scan_triples("R2⊢⊣", n, |x, y, z| {
        (right.at(left.at(x, y), z), left.at(x, right.at(y, z)))
    }));
    // (T2) left disemigroup on (|-, _|_)
    results.push(scan_triples("L1⊢⊥", n, |x, y, z| {
        (left.at(x, left.at(y, z)), left.at(middle.at(x, y), z))
    }));
    results.push(scan_triples("L2⊢⊥", n, |x, y, z| {
        (left.at(x, middle.at(y, z)), middle.at(left.at(x, y), z))
    }));
    // (T3) right disemigroup on (_|_, -|)
    results.push(scan_triples("R1⊥⊣", n, |x, y, z| {
        (right.at(x, right.at(y, z)), right.at(x, middle.at(y, z)))
    }));
    results.push(scan_triples("R2⊥⊣", n, |x, y, z| {
        (right.at(middle.at(x, y), z), middle.at(x, right.at(y, z)))
    }));
    // (T4)  (x -| y) _|_ z = x _|_ (y |- z)
    results.push(scan_triples("T4", n, |x, y, z| {
        (middle.at(right.at(x, y), z), middle.at(x, left.at(y, z)))
    }));
    CheckReport::new(results)
}

/// Sampled variant of [`check_trisemigroup`] for tables too large to scan
/// exhaustively; the seed is recorded in every result.
pub fn spot_check_trisemigroup(t: &TrioidTable, samples: u64, seed: u64) -> CheckReport {
    let (left, middle, right) = (t.left(), t.middle(), t.right());
    let n = t.order();
    type Eval<'a> = Box<dyn Fn(usize, usize, usize) -> (usize, usize) + 'a>;
    let laws: Vec<(&'static str, Eval)> = vec![
        (
            "ass-⊢",
            Box::new(|x, y, z| (left.at(left.at(x, y), z), left.at(x, left.at(y, z)))),
        ),
        (
            "ass-⊥",
            Box::new(|x, y, z| (middle.at(middle.at(x, y), z), middle.at(x, middle.at(y, z)))),
        ),
        (
            "ass-⊣",
            Box::new(|x, y, z| (right.at(right.at(x, y), z), right.at(x, right.at(y, z)))),
        ),
        (
            "L1⊢⊣",
            Box::new(|x, y, z| (left.at(x, left.at(y, z)), left.at(right.at(x, y), z))),
        ),
        (
            "L2⊢⊣",
            Box::new(|x, y, z| (left.at(x, right.at(y, z)), right.at(left.at(x, y), z))),
        ),
        (
            "R1⊢⊣",
            Box::new(|x, y, z| (right.at(x, right.at(y, z)), right.at(x, left.at(y, z)))),
        ),
        (
            "R2⊢⊣",
            Box::new(|x, y, z| (right.at(left.at(x, y), z), left.at(x, right.at(y, z)))),
        ),
        (
            "L1⊢⊥",
            Box::new(|x, y, z| (left.at(x, left.at(y, z)), left.at(middle.at(x, y), z))),
        ),
        (
            "L2⊢⊥",
            Box::new(|x, y, z| (left.at(x, middle.at(y, z)), middle.at(left.at(x, y), z))),
        ),
        (
            "R1⊥⊣",
            Box::new(|x, y, z| (right.at(x, right.at(y, z)), right.at(x, middle.at(y, z)))),
        ),
        (
            "R2⊥⊣",
            Box::new(|x, y, z| (right.at(middle.at(x, y), z), middle.at(x, right.at(y, z)))),
        ),
        (
            "T4",
            Box::new(|x, y, z| (middle.at(right.at(x, y), z), middle.at(x, left.at(y, z)))),
        ),
    ];
    let mut rng = SplitMix64::new(seed);
    let mut results = Vec::with_capacity(laws.len());
    for (id, eval) in laws {
        let mut scan = LawScan::new(id);
        scan.mark_sampled(seed);
        for _ in 0..samples {
            let (x, y, z) = (rng.next_below(n), rng.next_below(n), rng.next_below(n));
            let (lhs, rhs) = eval(x, y, z);
            let witness = [ElementId(x), ElementId(y), ElementId(z)];
            if !scan.record(&witness, ElementId(lhs), ElementId(rhs)) {
                break;
            }
        }
        results.push(scan.finish());
    }
    CheckReport::new(results)
}

/// Bar-units of the pair `(left, right)`: every `e` with
/// `e |- x = x = x -| e` for all `x`. The middle operation plays no role
/// in the definition.
pub fn digroup_bar_units(left: &OpTable, right: &OpTable) -> Vec<ElementId> {
    assert_eq!(left.order(), right.order());
    let n = left.order();
    (0..n)
        .filter(|&e| (0..n).all(|x| left.at(e, x) == x && right.at(x, e) == x))
        .map(ElementId)
        .collect()
}

/// The bar-unit set of a trioid table.
pub fn find_bar_units(t: &TrioidTable) -> Vec<ElementId> {
    digroup_bar_units(t.left(), t.right())
}

fn unit_results(left: &OpTable, right: &OpTable, unit: ElementId) -> [LawResult; 2] {
    let n = left.order();
    let mut left_scan = LawScan::new("unit-left");
    for x in 0..n {
        let witness = [unit, ElementId(x)];
        if !left_scan.record(&witness, ElementId(left.at(unit.0, x)), ElementId(x)) {
            break;
        }
    }
    let mut right_scan = LawScan::new("unit-right");
    for x in 0..n {
        let witness = [ElementId(x), unit];
        if !right_scan.record(&witness, ElementId(right.at(x, unit.0)), ElementId(x)) {
            break;
        }
    }
    [left_scan.finish(), right_scan.finish()]
}

/// Scans for inverses of every element with respect to `unit`, using the
/// four trigroup equations. Returns the inverse map on success, or the
/// `no-inverse` / `inverse-ambiguous` results on failure.
fn trigroup_inverse_scan(
    t: &TrioidTable,
    unit: ElementId,
) -> (Option<Vec<ElementId>>, [LawResult; 2]) {
    let n = t.order();
    let (left, middle, right) = (t.left(), t.middle(), t.right());
    let u = unit.0;
    let mut inverse = Vec::with_capacity(n);
    let mut missing = LawScan::new("no-inverse");
    let mut ambiguous = LawScan::new("inverse-ambiguous");
    let mut missing_live = true;
    let mut ambiguous_live = true;
    let mut total = true;
    for x in 0..n {
        let mut found: Option<usize> = None;
        let mut ambiguity: Option<(usize, usize)> = None;
        for y in 0..n {
            let is_inverse = left.at(x, y) == u
                && right.at(y, x) == u
                && middle.at(x, y) == u
                && middle.at(y, x) == u;
            if is_inverse {
                match found {
                    None => found = Some(y),
                    Some(prev) => {
                        ambiguity = Some((prev, y));
                        break;
                    }
                }
            }
        }
        match (found, ambiguity) {
            (Some(y), None) => {
                inverse.push(ElementId(y));
                missing.record_ok();
                ambiguous.record_ok();
            }
            (Some(y1), Some((_, y2))) => {
                total = false;
                missing.record_ok();
                if ambiguous_live {
                    let witness = [ElementId(x), ElementId(y1), ElementId(y2), unit];
                    ambiguous_live =
                        ambiguous.record_failure(&witness, ElementId(y1), ElementId(y2));
                }
            }
            (None, _) => {
                total = false;
                ambiguous.record_ok();
                if missing_live {
                    let witness = [ElementId(x), unit];
                    missing_live = missing.record_failure(&witness, ElementId(x), unit);
                }
            }
        }
        if !missing_live && !ambiguous_live {
            break;
        }
    }
    let results = [missing.finish(), ambiguous.finish()];
    (if total { Some(inverse) } else { None }, results)
}

fn no_bar_unit_result(n: usize, bar_units: &[ElementId]) -> LawResult {
    let mut scan = LawScan::new("no-bar-unit");
    if bar_units.is_empty() {
        scan.record_failure(&[], ElementId(0), ElementId(0));
        // The remaining candidates were still inspected.
        for _ in 1..n {
            scan.record_ok();
        }
    } else {
        for _ in 0..n {
            scan.record_ok();
        }
    }
    scan.finish()
}

/// Full trigroup check.
///
/// Requires the trioid axioms, at least one bar-unit, and a unique
/// inverse for every element. When `unit` is `None`, bar-units are tried
/// in index order and the first admitting a total inverse map is
/// certified; when no candidate works, the report describes the lowest
/// candidate. A caller-supplied `unit` always wins and is itself checked
/// against the bar-unit equations.
pub fn check_trigroup(t: &TrioidTable, unit: Option<ElementId>) -> TrigroupCheck {
    if let Some(u) = unit {
        assert!(
            u.0 < t.order(),
            "unit {u} out of range for order {}",
            t.order()
        );
    }
    let base = check_trisemigroup(t);
    if !base.passed() {
        return TrigroupCheck {
            report: base,
            cert: None,
        };
    }
    let bar_units = find_bar_units(t);
    let mut results = base.results;
    results.push(no_bar_unit_result(t.order(), &bar_units));

    let candidates: Vec<ElementId> = match unit {
        Some(u) => vec![u],
        None => bar_units.clone(),
    };
    if candidates.is_empty() {
        return TrigroupCheck {
            report: CheckReport::new(results),
            cert: None,
        };
    }

    let mut first_attempt: Option<Vec<LawResult>> = None;
    for &candidate in &candidates {
        let units = unit_results(t.left(), t.right(), candidate);
        let units_ok = units.iter().all(LawResult::passed);
        let (inverse, inv_results) = trigroup_inverse_scan(t, candidate);
        let mut attempt: Vec<LawResult> = units.into_iter().chain(inv_results).collect();
        match inverse {
            Some(inverse) if units_ok => {
                results.append(&mut attempt);
                let cert = TrigroupCert {
                    unit: candidate,
                    inverse,
                    bar_units,
                };
                return TrigroupCheck {
                    report: CheckReport::new(results),
                    cert: Some(cert),
                };
            }
            _ => {
                if first_attempt.is_none() {
                    first_attempt = Some(attempt);
                }
            }
        }
    }
    results.extend(first_attempt.expect("at least one candidate attempted"));
    TrigroupCheck {
        report: CheckReport::new(results),
        cert: None,
    }
}

/// Trimonoid check: the trioid axioms plus existence of a bar-unit.
pub fn check_trimonoid(t: &TrioidTable) -> CheckReport {
    let base = check_trisemigroup(t);
    if !base.passed() {
        return base;
    }
    let bar_units = find_bar_units(t);
    let mut results = base.results;
    results.push(no_bar_unit_result(t.order(), &bar_units));
    CheckReport::new(results)
}

/// Digroup check with the same unit-selection policy as
/// [`check_trigroup`]: a supplied unit wins, otherwise bar-units are
/// tried in index order.
pub fn check_digroup_auto(left: &OpTable, right: &OpTable, unit: Option<ElementId>) -> CheckReport {
    let bar_units = digroup_bar_units(left, right);
    let mut results = vec![no_bar_unit_result(left.order(), &bar_units)];
    let candidates = match unit {
        Some(u) => vec![u],
        None => bar_units,
    };
    match candidates.first() {
        None => {
            results.splice(0..0, disemigroup_results(left, right));
            CheckReport::new(results)
        }
        Some(&first) => {
            let mut chosen = None;
            for &candidate in &candidates {
                let report = check_digroup(left, right, candidate);
                if report.passed() {
                    chosen = Some(report);
                    break;
                }
            }
            let report = chosen.unwrap_or_else(|| check_digroup(left, right, first));
            let mut all = report.results;
            all.splice(6..6, results);
            CheckReport::new(all)
        }
    }
}

/// Convenience wrapper: certify using the table's declared unit if any.
pub fn certify(t: &TrioidTable) -> std::result::Result<TrigroupCert, CheckReport> {
    let check = check_trigroup(t, t.unit());
    match check.cert {
        Some(cert) => Ok(cert),
        None => Err(check.report),
    }
}

/// Digroup axioms for `(left, right, unit)`: disemigroup laws, the
/// bar-unit equations for `unit`, and existence (not uniqueness) of a
/// bar-inverse for every element.
pub fn check_digroup(left: &OpTable, right: &OpTable, unit: ElementId) -> CheckReport {
    assert_eq!(left.order(), right.order());
    let n = left.order();
    let mut results = disemigroup_results(left, right);
    results.extend(unit_results(left, right, unit));
    let u = unit.0;
    let mut scan = LawScan::new("no-inverse");
    for x in 0..n {
        let has_inverse = (0..n).any(|y| left.at(x, y) == u && right.at(y, x) == u);
        if has_inverse {
            scan.record_ok();
        } else {
            let witness = [ElementId(x), unit];
            if !scan.record_failure(&witness, ElementId(x), unit) {
                break;
            }
        }
    }
    results.push(scan.finish());
    CheckReport::new(results)
}

/// Guard for exhaustive cubic scans; larger tables go through the sampled
/// checker instead.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 64;

/// Errors unless `t` is small enough for exhaustive cubic checking.
pub fn ensure_exhaustive_order(order: usize) -> Result<()> {
    if order > EXHAUSTIVE_ORDER_LIMIT {
        return Err(Error::Guard(format!(
            "order {order} exceeds the exhaustive-check limit {EXHAUSTIVE_ORDER_LIMIT}; use sampled checking"
        )));
    }
    Ok(())
}

/// Keeps the bound on recorded counterexamples visible to callers that
/// post-process reports.
pub const COUNTEREXAMPLE_CAP: usize = MAX_COUNTEREXAMPLES;
