//! The group of inverses `J` and the retraction `phi` onto it.
//!
//! For a certified trigroup, `J = { x^-1 : x in A }` carries a group
//! structure on which the three operations coincide, and
//! `phi(x) = (x^-1)^-1` is a surjective trigroup morphism onto `J` that
//! fixes `J` pointwise and whose kernel is exactly the bar-unit set.
//! Both facts are theorems about trigroups, so this module *verifies*
//! them per instance instead of assuming them; a failure report here
//! means the certified table falsifies the statement (in practice: an
//! implementation bug upstream).

use crate::axioms::TrigroupCert;
use crate::construct::group_as_trigroup;
use crate::morphism::{is_morphism, MorphismMap};
use crate::report::{CheckReport, LawScan};
use crate::table::{ElementId, OpTable, TrioidTable};

/// The set `J` with its group table over local indices `0..|J|`;
/// `elements[i]` is the carrier element behind local index `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseGroup {
    pub elements: Vec<ElementId>,
    pub table: OpTable,
}

impl InverseGroup {
    pub fn local_index(&self, x: ElementId) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// `phi` as a morphism map into `J` (target indices are local), together
/// with its kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap {
    pub map: MorphismMap,
    pub kernel: Vec<ElementId>,
    pub j: InverseGroup,
}

/// Computes `J` and verifies that the three operations coincide on it,
/// that it is closed under each, and that the restriction is a group.
pub fn inverse_group(t: &TrioidTable, cert: &TrigroupCert) -> Result<InverseGroup, CheckReport> {
    let mut elements: Vec<ElementId> = cert.inverse.clone();
    elements.sort_unstable();
    elements.dedup();

    let mut coincide = LawScan::new("J-coincide");
    let mut closed = LawScan::new("J-closed");
    let mut coincide_live = true;
    let mut closed_live = true;
    for &x in &elements {
        for &y in &elements {
            let l = t.left().get(x, y);
            let m = t.middle().get(x, y);
            let r = t.right().get(x, y);
            if coincide_live {
                coincide_live = coincide.record(&[x, y], l, m);
            }
            if coincide_live {
                coincide_live = coincide.record(&[x, y], l, r);
            }
            if closed_live {
                if elements.binary_search(&l).is_ok() {
                    closed.record_ok();
                } else {
                    closed_live = closed.record_failure(&[x, y], l, l);
                }
            }
        }
    }
    let results = vec![coincide.finish(), closed.finish()];
    let report = CheckReport::new(results);
    if !report.passed() {
        return Err(report);
    }

    let order = elements.len();
    let table = OpTable::from_fn(order, |i, j| {
        let v = t.left().get(elements[i], elements[j]);
        elements
            .binary_search(&v)
            .expect("closure was just verified")
    });

    // Group axioms on the restriction.
    let mut group = LawScan::new("J-group");
    let assoc = crate::axioms::check_semigroup(&table);
    if !assoc.passed() {
        let mut results = assoc.results;
        for r in &mut results {
            r.id = "J-group";
        }
        return Err(CheckReport::new(results));
    }
    let identity =
        (0..order).find(|&e| (0..order).all(|x| table.at(e, x) == x && table.at(x, e) == x));
    let identity = match identity {
        Some(e) => e,
        None => {
            group.record_failure(&[], ElementId(0), ElementId(0));
            return Err(CheckReport::new(vec![group.finish()]));
        }
    };
    for x in 0..order {
        let has_inverse =
            (0..order).any(|y| table.at(x, y) == identity && table.at(y, x) == identity);
        if has_inverse {
            group.record_ok();
        } else if !group.record_failure(&[elements[x]], elements[x], elements[identity]) {
            break;
        }
    }
    let report = CheckReport::new(vec![group.finish()]);
    if !report.passed() {
        return Err(report);
    }
    Ok(InverseGroup { elements, table })
}

/// Builds `phi(x) = (x^-1)^-1` and verifies: it is a trigroup morphism
/// into `J` (as a group trigroup), surjective, the identity on `J`, and
/// its kernel equals the bar-unit set.
pub fn phi(t: &TrioidTable, cert: &TrigroupCert) -> Result<PhiMap, CheckReport> {
    let j = inverse_group(t, cert)?;
    let (j_trigroup, j_cert) = group_as_trigroup(&j.table).map_err(|_| {
        // A non-group restriction is already rejected by inverse_group.
        CheckReport::new(vec![{
            let mut scan = LawScan::new("J-group");
            scan.record_failure(&[], ElementId(0), ElementId(0));
            scan.finish()
        }])
    })?;

    let map: Vec<ElementId> = t
        .elements()
        .map(|x| {
            let image = cert.inverse_of(cert.inverse_of(x));
            ElementId(
                j.local_index(image)
                    .expect("double inverse lands in J by definition"),
            )
        })
        .collect();
    let map = MorphismMap {
        source: t.order(),
        target: j.order(),
        map,
    };

    let mut results = Vec::new();

    let hom =
        is_morphism(&map, t, cert, &j_trigroup, &j_cert).expect("shapes match by construction");
    results.extend(hom.results);

    let mut onto = LawScan::new("phi-onto");
    let mut seen = vec![false; j.order()];
    for x in t.elements() {
        seen[map.apply(x).0] = true;
    }
    for (i, hit) in seen.iter().enumerate() {
        if *hit {
            onto.record_ok();
        } else if !onto.record_failure(&[j.elements[i]], j.elements[i], j.elements[i]) {
            break;
        }
    }
    results.push(onto.finish());

    let mut fixes = LawScan::new("phi-fixes-J");
    for (i, &x) in j.elements.iter().enumerate() {
        if !fixes.record(&[x], ElementId(map.apply(x).0), ElementId(i)) {
            break;
        }
    }
    results.push(fixes.finish());

    // Kernel = preimage of the identity of J; must equal the bar-units.
    let j_unit_local = j_cert.unit;
    let kernel: Vec<ElementId> = t
        .elements()
        .filter(|&x| map.apply(x) == j_unit_local)
        .collect();
    let mut kernel_scan = LawScan::new("phi-kernel");
    let mut live = true;
    for x in t.elements() {
        let in_kernel = kernel.binary_search(&x).is_ok();
        let is_bar = cert.is_bar_unit(x);
        if in_kernel == is_bar {
            kernel_scan.record_ok();
        } else {
            live = kernel_scan.record_failure(&[x], x, ElementId(j.elements[j_unit_local.0].0));
        }
        if !live {
            break;
        }
    }
    results.push(kernel_scan.finish());

    let report = CheckReport::new(results);
    if !report.passed() {
        return Err(report);
    }
    Ok(PhiMap { map, kernel, j })
}
