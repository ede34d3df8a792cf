//! Constructors for concrete trioid instances.
//!
//! Four families are built here:
//!
//! * the pair construction on `G x G` from any two binary operations on
//!   `G` (no axioms required of the inputs);
//! * the action trigroup on `M x H` from a group `H` acting on a set `M`
//!   with a global fixed point `e`;
//! * the scalar-matrix trigroup over `GF(p)^n` with nonzero scalars
//!   acting by multiplication, realized as an action trigroup;
//! * any group viewed as a trigroup with all three operations equal.
//!
//! Pair elements are indexed `(u,h) -> u*n + h` and action elements
//! `(v,k) -> v*|H| + k`; that convention is fixed so identities proved
//! about the constructions can be spot-checked by element index anywhere
//! in the workspace.

use crate::axioms::{
    self, check_trisemigroup, find_bar_units, spot_check_trisemigroup, TrigroupCert,
};
use crate::error::{Error, Result};
use crate::table::{ElementId, OpTable, TrioidTable};

/// Largest carrier we are willing to tabulate.
pub const CARRIER_LIMIT: usize = 4096;

/// Sample count used to validate constructions too large for exhaustive
/// axiom scans.
const VALIDATION_SAMPLES: u64 = 100_000;
const VALIDATION_SEED: u64 = 0x7472_6967;

fn ensure_carrier(order: usize) -> Result<()> {
    if order > CARRIER_LIMIT {
        return Err(Error::Guard(format!(
            "carrier of order {order} exceeds the tabulation limit {CARRIER_LIMIT}"
        )));
    }
    Ok(())
}

/// A left action of a finite group `H` on a finite set `M` with a global
/// fixed point `e`.
#[derive(Clone, Debug)]
pub struct ActionSpec {
    /// Size of `M`.
    pub m_order: usize,
    /// Index in `M` of the element fixed by every `h`.
    pub e: usize,
    /// Multiplication table of `H`; must be a group.
    pub h_table: OpTable,
    /// `action[h][v]` is `h . v`, an index into `M`.
    pub action: Vec<Vec<usize>>,
}

impl ActionSpec {
    pub fn h_order(&self) -> usize {
        self.h_table.order()
    }

    /// Identity of `H`, assuming `validate` passed.
    pub fn h_identity(&self) -> usize {
        let n = self.h_order();
        (0..n)
            .find(|&e| (0..n).all(|x| self.h_table.at(e, x) == x && self.h_table.at(x, e) == x))
            .expect("validated group has an identity")
    }

    /// Checks every invariant: `h_table` is a group, `action` is a left
    /// action, and `e` is fixed by all of `H`. Errors name the violated
    /// equation.
    pub fn validate(&self) -> Result<()> {
        let h = self.h_order();
        if self.m_order == 0 {
            return Err(Error::Construction("M must be nonempty".into()));
        }
        if self.e >= self.m_order {
            return Err(Error::Construction(format!(
                "fixed point index {} out of range for |M| = {}",
                self.e, self.m_order
            )));
        }
        ensure_carrier(self.m_order * h)?;
        validate_group(&self.h_table).map_err(|e| match e {
            Error::Construction(msg) => Error::Construction(format!("H is not a group: {msg}")),
            other => other,
        })?;
        if self.action.len() != h {
            return Err(Error::Construction(format!(
                "action has {} rows, expected |H| = {h}",
                self.action.len()
            )));
        }
        for (hi, row) in self.action.iter().enumerate() {
            if row.len() != self.m_order {
                return Err(Error::Construction(format!(
                    "action row {hi} has {} entries, expected |M| = {}",
                    row.len(),
                    self.m_order
                )));
            }
            for (v, &w) in row.iter().enumerate() {
                if w >= self.m_order {
                    return Err(Error::Construction(format!(
                        "action entry ({hi},{v}) = {w} out of range"
                    )));
                }
            }
        }
        let id = self.h_identity();
        for v in 0..self.m_order {
            if self.action[id][v] != v {
                return Err(Error::Construction(format!(
                    "identity action fails: 1.{v} = {}",
                    self.action[id][v]
                )));
            }
        }
        for a in 0..h {
            for b in 0..h {
                let ab = self.h_table.at(a, b);
                for v in 0..self.m_order {
                    if self.action[ab][v] != self.action[a][self.action[b][v]] {
                        return Err(Error::Construction(format!(
                            "action is not compatible: (h{a} h{b}).{v} != h{a}.(h{b}.{v})"
                        )));
                    }
                }
            }
        }
        for hi in 0..h {
            if self.action[hi][self.e] != self.e {
                return Err(Error::Construction(format!(
                    "h{hi}.e = {} but the fixed point equation requires h.e = e",
                    self.action[hi][self.e]
                )));
            }
        }
        Ok(())
    }

    /// Whether `H` acts transitively on `M - {e}`. Not required for the
    /// construction; callers surface a warning when it fails.
    pub fn is_transitive_off_fixed(&self) -> bool {
        let rest: Vec<usize> = (0..self.m_order).filter(|&v| v != self.e).collect();
        rest.iter().all(|&v| {
            rest.iter()
                .all(|&w| (0..self.h_order()).any(|h| self.action[h][v] == w))
        })
    }
}

/// Parameters of the scalar-matrix trigroup over `GF(p)^n`.
#[derive(Clone, Copy, Debug)]
pub struct FieldSpec {
    pub p: usize,
    pub n: usize,
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p) {
            return Err(Error::Construction(format!("p = {} is not prime", self.p)));
        }
        if self.n == 0 {
            return Err(Error::Construction("dimension n must be >= 1".into()));
        }
        let mut order: usize = self.p - 1;
        for _ in 0..self.n {
            order = order
                .checked_mul(self.p)
                .filter(|&o| o <= CARRIER_LIMIT)
                .ok_or_else(|| {
                    Error::Guard(format!(
                        "carrier p^n (p-1) for p={}, n={} exceeds the tabulation limit {CARRIER_LIMIT}",
                        self.p, self.n
                    ))
                })?;
        }
        Ok(())
    }

    /// `p^n`, the size of the vector space.
    pub fn vector_count(&self) -> usize {
        self.p.pow(self.n as u32)
    }
}

fn validate_group(g: &OpTable) -> Result<()> {
    let n = g.order();
    axioms::ensure_exhaustive_order(n)?;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if g.at(g.at(x, y), z) != g.at(x, g.at(y, z)) {
                    return Err(Error::Construction(format!(
                        "associativity fails at ({x},{y},{z})"
                    )));
                }
            }
        }
    }
    let identity = (0..n).find(|&e| (0..n).all(|x| g.at(e, x) == x && g.at(x, e) == x));
    let identity = match identity {
        Some(e) => e,
        None => return Err(Error::Construction("no two-sided identity".into())),
    };
    for x in 0..n {
        if !(0..n).any(|y| g.at(x, y) == identity && g.at(y, x) == identity) {
            return Err(Error::Construction(format!("element {x} has no inverse")));
        }
    }
    Ok(())
}

/// The pair construction: three operations on `G x G` built from two
/// binary operations on `G`. No axioms are required of the inputs.
pub fn pair_trisemigroup(left: &OpTable, right: &OpTable) -> Result<TrioidTable> {
    if left.order() != right.order() {
        return Err(Error::Usage(format!(
            "pair construction needs tables of equal order, got {} and {}",
            left.order(),
            right.order()
        )));
    }
    let n = left.order();
    ensure_carrier(n * n)?;
    let idx = |u: usize, h: usize| u * n + h;
    // (u,h) |_ (v,k) = (h |- v, h |- k)
    let pair_left = OpTable::from_fn(n * n, |a, b| {
        let (h, (v, k)) = (a % n, (b / n, b % n));
        idx(left.at(h, v), left.at(h, k))
    });
    // (u,h) _|_ (v,k) = (h -| v, h -| k)
    let pair_middle = OpTable::from_fn(n * n, |a, b| {
        let (h, (v, k)) = (a % n, (b / n, b % n));
        idx(right.at(h, v), right.at(h, k))
    });
    // (u,h) -| (v,k) = (u, h -| k)
    let pair_right = OpTable::from_fn(n * n, |a, b| {
        let (u, h, k) = (a / n, a % n, b % n);
        idx(u, right.at(h, k))
    });
    TrioidTable::new(pair_left, pair_middle, pair_right, None)
}

/// Names for pair elements, aligned with the `(u,h) -> u*n + h` indexing.
pub fn pair_element_names(n: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(n * n);
    for u in 0..n {
        for h in 0..n {
            names.push(format!("({u},{h})"));
        }
    }
    names
}

/// Validates the closed-form cert of an action-style trigroup and runs
/// the axiom scan (exhaustive for small carriers, sampled beyond).
fn validate_constructed(table: &TrioidTable, cert: &TrigroupCert) -> Result<()> {
    let n = table.order();
    let u = cert.unit;
    for x in table.elements() {
        let y = cert.inverse_of(x);
        let ok = table.left().get(x, y) == u
            && table.right().get(y, x) == u
            && table.middle().get(x, y) == u
            && table.middle().get(y, x) == u;
        if !ok {
            return Err(Error::Construction(format!(
                "inverse equations fail for x={x}"
            )));
        }
    }
    // Uniqueness of inverses.
    for x in 0..n {
        let expected = cert.inverse[x].0;
        for y in 0..n {
            if y == expected {
                continue;
            }
            let collides = table.left().at(x, y) == u.0
                && table.right().at(y, x) == u.0
                && table.middle().at(x, y) == u.0
                && table.middle().at(y, x) == u.0;
            if collides {
                return Err(Error::Construction(format!(
                    "inverse of {x} is ambiguous: both {expected} and {y} satisfy the equations"
                )));
            }
        }
    }
    let report = if n <= axioms::EXHAUSTIVE_ORDER_LIMIT {
        check_trisemigroup(table)
    } else {
        spot_check_trisemigroup(table, VALIDATION_SAMPLES, VALIDATION_SEED)
    };
    if !report.passed() {
        let (id, c) = report.counterexamples().next().expect("failed report");
        return Err(Error::Construction(format!(
            "constructed table violates {id} at witness {}",
            c.witness_string()
        )));
    }
    Ok(())
}

/// The action trigroup on `M x H`:
///
/// ```text
/// (u,h) |-  (v,k) = (h.v, hk)
/// (u,h) -|  (v,k) = (u,   hk)
/// (u,h) _|_ (v,k) = (e,   hk)
/// ```
///
/// with unit `(e,1)` and inverse `(u,h) -> (e, h^-1)`. The action spec
/// is fully validated first; the returned cert is re-checked against
/// the table.
pub fn action_trigroup(spec: &ActionSpec) -> Result<(TrioidTable, TrigroupCert)> {
    spec.validate()?;
    let m = spec.m_order;
    let h_n = spec.h_order();
    let n = m * h_n;
    let idx = |v: usize, k: usize| v * h_n + k;
    let left = OpTable::from_fn(n, |a, b| {
        let (p, (v, k)) = (a % h_n, (b / h_n, b % h_n));
        idx(spec.action[p][v], spec.h_table.at(p, k))
    });
    let middle = OpTable::from_fn(n, |a, b| {
        let (p, k) = (a % h_n, b % h_n);
        idx(spec.e, spec.h_table.at(p, k))
    });
    let right = OpTable::from_fn(n, |a, b| {
        let (u, p, k) = (a / h_n, a % h_n, b % h_n);
        idx(u, spec.h_table.at(p, k))
    });
    let h_id = spec.h_identity();
    let unit = ElementId(idx(spec.e, h_id));
    let table = TrioidTable::new(left, middle, right, Some(unit))?;

    let h_inverse: Vec<usize> = (0..h_n)
        .map(|x| {
            (0..h_n)
                .find(|&y| spec.h_table.at(x, y) == h_id && spec.h_table.at(y, x) == h_id)
                .expect("validated group has inverses")
        })
        .collect();
    let inverse: Vec<ElementId> = (0..n)
        .map(|a| ElementId(idx(spec.e, h_inverse[a % h_n])))
        .collect();
    let bar_units = find_bar_units(&table);
    let cert = TrigroupCert {
        unit,
        inverse,
        bar_units,
    };
    if !cert.is_bar_unit(unit) {
        return Err(Error::Construction(
            "distinguished unit (e,1) is not a bar-unit".into(),
        ));
    }
    validate_constructed(&table, &cert)?;
    Ok((table, cert))
}

/// Element names `(v,k)` for an action trigroup.
pub fn action_element_names(spec: &ActionSpec) -> Vec<String> {
    let h_n = spec.h_order();
    let mut names = Vec::with_capacity(spec.m_order * h_n);
    for v in 0..spec.m_order {
        for k in 0..h_n {
            names.push(format!("({v},{k})"));
        }
    }
    names
}

/// The scalar-matrix trigroup over `GF(p)^n`: vectors under the scalar
/// action of `GF(p)^x`, realized as [`action_trigroup`] with `e = 0`.
/// Vectors are indexed little-endian: `v -> sum v[i] p^i`.
pub fn matrix_trigroup(spec: &FieldSpec) -> Result<(TrioidTable, TrigroupCert)> {
    spec.validate()?;
    let p = spec.p;
    let vectors = spec.vector_count();
    // h index k represents the scalar k+1.
    let h_table = OpTable::from_fn(p - 1, |a, b| ((a + 1) * (b + 1)) % p - 1);
    let mut action = Vec::with_capacity(p - 1);
    for k in 0..p - 1 {
        let scalar = k + 1;
        let mut row = Vec::with_capacity(vectors);
        for v in 0..vectors {
            let mut out = 0;
            let mut basis = 1;
            let mut rest = v;
            for _ in 0..spec.n {
                let coord = rest % p;
                rest /= p;
                out += (scalar * coord) % p * basis;
                basis *= p;
            }
            row.push(out);
        }
        action.push(row);
    }
    let spec = ActionSpec {
        m_order: vectors,
        e: 0,
        h_table,
        action,
    };
    action_trigroup(&spec)
}

/// Element names `([c0,...,cn-1],λ)` for the matrix trigroup.
pub fn matrix_element_names(spec: &FieldSpec) -> Vec<String> {
    let p = spec.p;
    let vectors = spec.vector_count();
    let mut names = Vec::with_capacity(vectors * (p - 1));
    for v in 0..vectors {
        let mut coords = Vec::with_capacity(spec.n);
        let mut rest = v;
        for _ in 0..spec.n {
            coords.push((rest % p).to_string());
            rest /= p;
        }
        for k in 0..p - 1 {
            names.push(format!("([{}],{})", coords.join(","), k + 1));
        }
    }
    names
}

/// A group viewed as a trigroup with all three operations equal.
pub fn group_as_trigroup(g: &OpTable) -> Result<(TrioidTable, TrigroupCert)> {
    validate_group(g)?;
    let n = g.order();
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| g.at(e, x) == x && g.at(x, e) == x))
        .expect("validated group has an identity");
    let unit = ElementId(identity);
    let inverse: Vec<ElementId> = (0..n)
        .map(|x| {
            ElementId(
                (0..n)
                    .find(|&y| g.at(x, y) == identity && g.at(y, x) == identity)
                    .expect("validated group has inverses"),
            )
        })
        .collect();
    let table = TrioidTable::new(g.clone(), g.clone(), g.clone(), Some(unit))?;
    let bar_units = find_bar_units(&table);
    Ok((
        table,
        TrigroupCert {
            unit,
            inverse,
            bar_units,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{certify, check_right_disemigroup};
    use crate::rng::SplitMix64;

    fn z2_action(action: [[usize; 3]; 2]) -> ActionSpec {
        ActionSpec {
            m_order: 3,
            e: 0,
            h_table: OpTable::cyclic(2),
            action: action.iter().map(|r| r.to_vec()).collect(),
        }
    }

    #[test]
    fn pair_on_z2_matches_hand_evaluation() {
        let z2 = OpTable::cyclic(2);
        let p4 = pair_trisemigroup(&z2, &z2).unwrap();
        // (0,1) |_ (0,0) = (1+0, 1+0) = (1,1), i.e. index 3.
        assert_eq!(p4.left().at(1, 0), 3);
        assert!(check_trisemigroup(&p4).passed());
    }

    #[test]
    fn pair_middle_right_r1_is_unconditional() {
        // For arbitrary magmas, R1 on (middle, right) is a definitional
        // identity of the construction; the remaining right-disemigroup
        // axioms need an associative right operation.
        let mut rng = SplitMix64::new(99);
        for _ in 0..50 {
            let n = 2 + rng.next_below(3);
            let l = OpTable::from_fn(n, |_, _| rng.next_below(n));
            let r = OpTable::from_fn(n, |_, _| rng.next_below(n));
            let pair = pair_trisemigroup(&l, &r).unwrap();
            let report = check_right_disemigroup(pair.middle(), pair.right());
            assert!(report.result("R1").unwrap().passed());
        }
    }

    /// When the right operation is associative, the full
    /// right-disemigroup conclusion on (middle, right) holds for any
    /// left operation.
    #[test]
    fn pair_right_disemigroup_under_associative_right_op() {
        let mut rng = SplitMix64::new(17);
        for _ in 0..20 {
            let n = 2 + rng.next_below(2);
            let l = OpTable::from_fn(n, |_, _| rng.next_below(n));
            let r = OpTable::cyclic(n);
            let pair = pair_trisemigroup(&l, &r).unwrap();
            assert!(check_right_disemigroup(pair.middle(), pair.right()).passed());
        }
    }

    /// Disemigroup inputs give a disemigroup on (left, right) of the
    /// pair, and a full trisemigroup; left-disemigroup inputs give a
    /// left disemigroup on (left, middle).
    #[test]
    fn pair_preserves_disemigroup_structure() {
        use crate::axioms::{check_disemigroup, check_left_disemigroup};
        let (t6, _) = crate::fixtures::t6();
        let inputs: Vec<(OpTable, OpTable)> = vec![
            (OpTable::cyclic(2), OpTable::cyclic(2)),
            (OpTable::cyclic(3), OpTable::cyclic(3)),
            (t6.left().clone(), t6.right().clone()),
        ];
        for (l, r) in inputs {
            assert!(check_disemigroup(&l, &r).passed());
            let pair = pair_trisemigroup(&l, &r).unwrap();
            assert!(check_disemigroup(pair.left(), pair.right()).passed());
            assert!(check_left_disemigroup(pair.left(), pair.middle()).passed());
            assert!(check_trisemigroup(&pair).passed());
        }

        // A left disemigroup that is not a disemigroup still yields a
        // left disemigroup on (left, middle); the trisemigroup
        // conclusion needs the input R1 law (see the law suite).
        let proj2 = OpTable::from_fn(2, |_, j| j);
        let z2 = OpTable::cyclic(2);
        assert!(check_left_disemigroup(&proj2, &z2).passed());
        let pair = pair_trisemigroup(&proj2, &z2).unwrap();
        assert!(check_left_disemigroup(pair.left(), pair.middle()).passed());
        assert!(!check_trisemigroup(&pair).passed());
    }

    #[test]
    fn pair_requires_equal_orders() {
        let a = OpTable::cyclic(2);
        let b = OpTable::cyclic(3);
        assert!(matches!(pair_trisemigroup(&a, &b), Err(Error::Usage(_))));
    }

    #[test]
    fn action_trigroup_swap_action_is_a_trigroup() {
        let (table, cert) = action_trigroup(&z2_action([[0, 1, 2], [0, 2, 1]])).unwrap();
        assert_eq!(table.order(), 6);
        assert_eq!(cert.unit, ElementId(0));
        let recheck = certify(&table).unwrap();
        assert_eq!(recheck, cert);
    }

    #[test]
    fn action_with_moved_fixed_point_is_rejected() {
        let bad = ActionSpec {
            m_order: 2,
            e: 0,
            h_table: OpTable::cyclic(2),
            // h swaps e and m, so h.e != e.
            action: vec![vec![0, 1], vec![1, 0]],
        };
        match action_trigroup(&bad) {
            Err(Error::Construction(msg)) => assert!(msg.contains("h.e = e")),
            other => panic!("expected construction error, got {other:?}"),
        }
    }

    #[test]
    fn transitivity_is_reported_not_required() {
        let transitive = z2_action([[0, 1, 2], [0, 2, 1]]);
        assert!(transitive.is_transitive_off_fixed());
        let trivial = ActionSpec {
            m_order: 3,
            e: 0,
            h_table: OpTable::cyclic(2),
            action: vec![vec![0, 1, 2], vec![0, 1, 2]],
        };
        assert!(!trivial.is_transitive_off_fixed());
        assert!(action_trigroup(&trivial).is_ok());
    }

    #[test]
    fn matrix_trigroup_small_cases() {
        // p=2, n=1: |H| = 1, so every element is (v, 1) and all are
        // bar-units.
        let (t, cert) = matrix_trigroup(&FieldSpec { p: 2, n: 1 }).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(cert.bar_units.len(), 2);

        // p=5, n=1: order 20, inverse of (x,λ) is (0, λ^-1).
        let (t, cert) = matrix_trigroup(&FieldSpec { p: 5, n: 1 }).unwrap();
        assert_eq!(t.order(), 20);
        for v in 0..5usize {
            for k in 0..4usize {
                let scalar = k + 1;
                let inv_scalar = (1..=4).find(|s| (s * scalar) % 5 == 1).unwrap();
                let x = ElementId(v * 4 + k);
                assert_eq!(cert.inverse_of(x), ElementId(inv_scalar - 1));
            }
        }
    }

    #[test]
    fn matrix_guard_rejects_big_carriers() {
        assert!(matches!(
            matrix_trigroup(&FieldSpec { p: 5, n: 6 }),
            Err(Error::Guard(_))
        ));
        assert!(matches!(
            matrix_trigroup(&FieldSpec { p: 4, n: 1 }),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn group_as_trigroup_accepts_groups_only() {
        let (t, cert) = group_as_trigroup(&OpTable::cyclic(3)).unwrap();
        assert_eq!(cert.bar_units, vec![ElementId(0)]);
        assert!(certify(&t).is_ok());

        let not_assoc = OpTable::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        match group_as_trigroup(&not_assoc) {
            Err(Error::Construction(msg)) => assert!(msg.contains("associativity")),
            other => panic!("expected construction error, got {other:?}"),
        }
    }
}
