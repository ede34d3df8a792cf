//! Morphisms between trioid tables and isomorphism search.
//!
//! A trigroup morphism preserves the three operations, sends the
//! distinguished unit to the distinguished unit, commutes with
//! inversion, and maps bar-units to bar-units. The unit and bar-unit
//! requirements are reported under separate ids (`hom-unit`,
//! `hom-bar-units`) since the first does not imply the second.
//!
//! Isomorphism search walks the `n!` bijections with early pruning and
//! returns the lexicographically least witness, which keeps every
//! downstream artifact deterministic.

use crate::axioms::TrigroupCert;
use crate::error::{Error, Result};
use crate::report::{CheckReport, LawScan};
use crate::table::{ElementId, Op, TrioidTable};

/// A total map between two finite carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismMap {
    pub source: usize,
    pub target: usize,
    pub map: Vec<ElementId>,
}

impl MorphismMap {
    pub fn new(source: usize, target: usize, map: Vec<ElementId>) -> Result<Self> {
        if map.len() != source {
            return Err(Error::Usage(format!(
                "map has {} entries, expected {source}",
                map.len()
            )));
        }
        if let Some(bad) = map.iter().find(|e| e.0 >= target) {
            return Err(Error::Usage(format!(
                "image {bad} out of range for target order {target}"
            )));
        }
        Ok(MorphismMap {
            source,
            target,
            map,
        })
    }

    pub fn identity(order: usize) -> Self {
        MorphismMap {
            source: order,
            target: order,
            map: (0..order).map(ElementId).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.map[x.0]
    }

    pub fn is_bijection(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let mut seen = vec![false; self.target];
        for e in &self.map {
            if seen[e.0] {
                return false;
            }
            seen[e.0] = true;
        }
        true
    }

    /// Inverse of a bijection.
    pub fn inverted(&self) -> Result<MorphismMap> {
        if !self.is_bijection() {
            return Err(Error::Usage("map is not a bijection".into()));
        }
        let mut map = vec![ElementId(0); self.source];
        for (i, e) in self.map.iter().enumerate() {
            map[e.0] = ElementId(i);
        }
        Ok(MorphismMap {
            source: self.target,
            target: self.source,
            map,
        })
    }

    /// The permutation vector, for maps within a single carrier.
    pub fn as_perm(&self) -> Vec<usize> {
        self.map.iter().map(|e| e.0).collect()
    }
}

/// Checks that `f` is a trigroup morphism from `(a, a_cert)` to
/// `(b, b_cert)`.
pub fn is_morphism(
    f: &MorphismMap,
    a: &TrioidTable,
    a_cert: &TrigroupCert,
    b: &TrioidTable,
    b_cert: &TrigroupCert,
) -> Result<CheckReport> {
    if f.source != a.order() || f.target != b.order() {
        return Err(Error::Usage(format!(
            "map shape {}->{} does not match tables {}->{}",
            f.source,
            f.target,
            a.order(),
            b.order()
        )));
    }
    let n = a.order();
    let mut results = Vec::with_capacity(6);
    for (id, op) in [
        ("hom-⊢", Op::Left),
        ("hom-⊥", Op::Middle),
        ("hom-⊣", Op::Right),
    ] {
        let ta = a.table(op);
        let tb = b.table(op);
        let mut scan = LawScan::new(id);
        'outer: for x in 0..n {
            for y in 0..n {
                let lhs = f.apply(ta.get(ElementId(x), ElementId(y)));
                let rhs = tb.get(f.apply(ElementId(x)), f.apply(ElementId(y)));
                if !scan.record(&[ElementId(x), ElementId(y)], lhs, rhs) {
                    break 'outer;
                }
            }
        }
        results.push(scan.finish());
    }

    let mut unit = LawScan::new("hom-unit");
    unit.record(&[a_cert.unit], f.apply(a_cert.unit), b_cert.unit);
    results.push(unit.finish());

    let mut inv = LawScan::new("hom-inverse");
    for x in 0..n {
        let x = ElementId(x);
        let lhs = f.apply(a_cert.inverse_of(x));
        let rhs = b_cert.inverse_of(f.apply(x));
        if !inv.record(&[x], lhs, rhs) {
            break;
        }
    }
    results.push(inv.finish());

    let mut bar = LawScan::new("hom-bar-units");
    for &e in &a_cert.bar_units {
        let image = f.apply(e);
        if b_cert.is_bar_unit(image) {
            bar.record_ok();
        } else if !bar.record_failure(&[e], image, b_cert.unit) {
            break;
        }
    }
    results.push(bar.finish());

    Ok(CheckReport::new(results))
}

/// Searches for a bijection transporting all three tables of `a` onto
/// `b`. Units are ignored; the first witness in lexicographic order is
/// returned.
pub fn find_isomorphism(a: &TrioidTable, b: &TrioidTable) -> Result<Option<MorphismMap>> {
    if a.order() != b.order() {
        return Err(Error::Usage(format!(
            "isomorphism search needs equal orders, got {} and {}",
            a.order(),
            b.order()
        )));
    }
    let n = a.order();
    let mut image = vec![usize::MAX; n];
    let mut preimage = vec![usize::MAX; n];
    if search(a, b, 0, &mut image, &mut preimage) {
        let map = image.iter().map(|&w| ElementId(w)).collect();
        Ok(Some(MorphismMap {
            source: n,
            target: n,
            map,
        }))
    } else {
        Ok(None)
    }
}

/// Number of automorphisms of `a` (bijections transporting `a` to
/// itself).
pub fn count_automorphisms(a: &TrioidTable) -> usize {
    let n = a.order();
    let mut image = vec![usize::MAX; n];
    let mut preimage = vec![usize::MAX; n];
    let mut count = 0;
    count_search(a, 0, &mut image, &mut preimage, &mut count);
    count
}

/// Partial-assignment consistency: with `f(next) = w` just placed, check
/// every product among assigned elements. A product whose result is
/// still unassigned only prunes when its target image is already taken
/// by a different preimage.
fn consistent(
    a: &TrioidTable,
    b: &TrioidTable,
    depth: usize,
    image: &[usize],
    preimage: &[usize],
) -> bool {
    let v = depth;
    for op in Op::ALL {
        let ta = a.table(op);
        let tb = b.table(op);
        for x in 0..=v {
            for (p, q) in [(x, v), (v, x)] {
                let c = ta.at(p, q);
                let w = tb.at(image[p], image[q]);
                if c <= v {
                    if image[c] != w {
                        return false;
                    }
                } else if preimage[w] != usize::MAX && preimage[w] != c {
                    return false;
                }
            }
        }
    }
    true
}

fn search(
    a: &TrioidTable,
    b: &TrioidTable,
    depth: usize,
    image: &mut [usize],
    preimage: &mut [usize],
) -> bool {
    let n = a.order();
    if depth == n {
        return true;
    }
    for w in 0..n {
        if preimage[w] != usize::MAX {
            continue;
        }
        image[depth] = w;
        preimage[w] = depth;
        if consistent(a, b, depth, image, preimage) && search(a, b, depth + 1, image, preimage) {
            return true;
        }
        image[depth] = usize::MAX;
        preimage[w] = usize::MAX;
    }
    false
}

fn count_search(
    a: &TrioidTable,
    depth: usize,
    image: &mut [usize],
    preimage: &mut [usize],
    count: &mut usize,
) {
    let n = a.order();
    if depth == n {
        *count += 1;
        return;
    }
    for w in 0..n {
        if preimage[w] != usize::MAX {
            continue;
        }
        image[depth] = w;
        preimage[w] = depth;
        if consistent(a, a, depth, image, preimage) {
            count_search(a, depth + 1, image, preimage, count);
        }
        image[depth] = usize::MAX;
        preimage[w] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::table::OpTable;

    #[test]
    fn identity_is_a_morphism() {
        let (t6, cert) = fixtures::t6();
        let id = MorphismMap::identity(6);
        let report = is_morphism(&id, &t6, &cert, &t6, &cert).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn constant_map_to_non_bar_unit_fails() {
        let (t6, cert) = fixtures::t6();
        let f = MorphismMap::new(6, 6, vec![ElementId(1); 6]).unwrap();
        let report = is_morphism(&f, &t6, &cert, &t6, &cert).unwrap();
        assert!(!report.passed());
        assert!(!report.result("hom-unit").unwrap().passed());
        assert!(!report.result("hom-bar-units").unwrap().passed());
    }

    /// phi, packaged as a plain map from T6 into the group trigroup on
    /// J, passes the full morphism check.
    #[test]
    fn phi_into_j_is_a_trigroup_morphism() {
        use crate::construct::group_as_trigroup;
        use crate::derived::phi;
        let (t6, cert) = fixtures::t6();
        let phi = phi(&t6, &cert).unwrap();
        let (j_trigroup, j_cert) = group_as_trigroup(&phi.j.table).unwrap();
        let report = is_morphism(&phi.map, &t6, &cert, &j_trigroup, &j_cert).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn every_table_is_isomorphic_to_itself() {
        let (t6, _) = fixtures::t6();
        let iso = find_isomorphism(&t6, &t6).unwrap().unwrap();
        assert_eq!(t6.relabel(&iso.as_perm()), t6);
    }

    #[test]
    fn finds_the_inverse_of_a_relabeling() {
        let (t6, _) = fixtures::t6();
        // Swap a2 <-> a4.
        let perm = vec![0usize, 1, 4, 3, 2, 5];
        let relabeled = t6.relabel(&perm);
        let iso = find_isomorphism(&t6, &relabeled).unwrap().unwrap();
        // Any valid witness transports the tables.
        assert_eq!(
            t6.relabel(&iso.as_perm()).without_unit(),
            relabeled.without_unit()
        );
        // Symmetry: the inverse is a witness for the reversed pair.
        let back = iso.inverted().unwrap();
        assert_eq!(
            relabeled.relabel(&back.as_perm()).without_unit(),
            t6.without_unit()
        );
    }

    #[test]
    fn distinguishes_non_isomorphic_tables() {
        let (g2, _) = fixtures::g2();
        let proj = OpTable::from_fn(2, |i, _| i);
        let left_zero =
            crate::table::TrioidTable::new(proj.clone(), proj.clone(), proj, None).unwrap();
        assert!(find_isomorphism(&g2, &left_zero).unwrap().is_none());
    }

    #[test]
    fn rejects_order_mismatch() {
        let (g2, _) = fixtures::g2();
        let p4 = fixtures::p4();
        assert!(matches!(find_isomorphism(&g2, &p4), Err(Error::Usage(_))));
    }

    #[test]
    fn automorphisms_of_z2_trigroup() {
        let (g2, _) = fixtures::g2();
        // Only the identity fixes the unit structure of Z/2.
        assert_eq!(count_automorphisms(&g2), 1);
    }
}
