//! Property tests for the structure-independent invariants: format
//! round-trips, report soundness on arbitrary tables, isomorphism
//! symmetry, canonical-form invariance, and the unconditional pair
//! identities.

use proptest::prelude::*;

use trioid_core::census::canonical_form;
use trioid_core::laws::verify_pair_proposition;
use trioid_core::morphism::find_isomorphism;
use trioid_core::table::{OpTable, TrioidTable};
use trioid_core::{check_trisemigroup, parse_trioid, serialize_trioid};

mod common;
use common::reevaluate;

fn arb_op_table(n: usize) -> impl Strategy<Value = OpTable> {
    prop::collection::vec(0..n, n * n)
        .prop_map(move |flat| OpTable::from_fn(n, |i, j| flat[i * n + j]))
}

fn arb_trioid(max_order: usize) -> impl Strategy<Value = TrioidTable> {
    (1..=max_order).prop_flat_map(|n| {
        (arb_op_table(n), arb_op_table(n), arb_op_table(n)).prop_map(|(l, m, r)| {
            TrioidTable::new(l, m, r, None).expect("orders agree by construction")
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    /// parse(serialize(t)) reproduces every table entry-for-entry, and
    /// serialization is stable.
    #[test]
    fn round_trip_is_identity(t in arb_trioid(5)) {
        let text = serialize_trioid(&t);
        let back = parse_trioid(&text).expect("canonical text parses");
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(serialize_trioid(&back), text);
    }

    /// Every counterexample in a trisemigroup report re-evaluates to a
    /// genuine violation of its axiom id on the same tables.
    #[test]
    fn reports_never_lie(t in arb_trioid(4)) {
        let report = check_trisemigroup(&t);
        for (id, c) in report.counterexamples() {
            let witness: Vec<usize> = c.witness.iter().map(|e| e.index()).collect();
            prop_assert!(
                reevaluate(&t, id, &witness, c.lhs.index(), c.rhs.index()),
                "{} at {:?} does not re-evaluate", id, witness
            );
        }
    }

    /// A relabeled table is isomorphic to the original, the returned
    /// witness transports the tables, and inverting it gives a witness
    /// for the swapped pair.
    #[test]
    fn isomorphism_search_is_symmetric(
        t in arb_trioid(4),
        seed_perm in arb_perm(4),
    ) {
        let n = t.order();
        let perm: Vec<usize> = {
            // Restrict the shuffled 0..4 to the actual order.
            let mut small: Vec<usize> = seed_perm.iter().copied().filter(|&v| v < n).collect();
            small.truncate(n);
            small
        };
        let relabeled = t.relabel(&perm);
        let iso = find_isomorphism(&t, &relabeled)
            .expect("equal orders")
            .expect("relabeling is an isomorphism");
        prop_assert_eq!(
            t.relabel(&iso.as_perm()).without_unit(),
            relabeled.without_unit()
        );
        let back = iso.inverted().expect("bijection");
        prop_assert_eq!(
            relabeled.relabel(&back.as_perm()).without_unit(),
            t.without_unit()
        );
    }

    /// Canonical forms are invariant under relabeling and idempotent.
    #[test]
    fn canonical_form_is_a_class_invariant(
        t in arb_trioid(4),
        seed_perm in arb_perm(4),
    ) {
        let n = t.order();
        let perm: Vec<usize> = {
            let mut small: Vec<usize> = seed_perm.iter().copied().filter(|&v| v < n).collect();
            small.truncate(n);
            small
        };
        let canon = canonical_form(&t).expect("within guard");
        prop_assert_eq!(canonical_form(&t.relabel(&perm)).expect("within guard"), canon.clone());
        prop_assert_eq!(canonical_form(&canon).expect("within guard"), canon);
    }

    /// The fourteen pair expansion identities and the unconditional part
    /// of the right-disemigroup conclusion hold over arbitrary magmas.
    #[test]
    fn pair_identities_hold_for_any_magma(
        left in arb_op_table(3),
        right in arb_op_table(3),
    ) {
        let report = verify_pair_proposition(&left, &right).expect("within guard");
        prop_assert!(report.passed(), "{}", report);
    }
}
