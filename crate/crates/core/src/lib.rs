//! Workbench for finite trioid-style algebras and their smooth cousins.
//!
//! The crate covers the full pipeline from raw operation tables to
//! derived structure:
//!
//! * [`table`] / [`mod@format`]: carriers, the three-operation tables,
//!   and the `.trioid` / `.threerack` text formats;
//! * [`axioms`]: exhaustive checkers for semigroups, disemigroups,
//!   trisemigroups, digroups, and trigroups, producing machine-parseable
//!   [`report`]s with counterexamples;
//! * [`construct`]: the pair construction, action trigroups, the
//!   scalar-matrix trigroup over a prime field, and groups as trigroups;
//! * [`rack`] / [`derived`]: conjugation, the derived pointed 3-rack
//!   with its solve formula, the group of inverses `J`, and the
//!   retraction `phi` onto it;
//! * [`laws`]: per-instance verification of every structure lemma;
//! * [`census`]: enumeration of small instances up to isomorphism,
//!   validated against a brute-force oracle;
//! * [`smooth`]: the smooth model over the reals and the numeric
//!   extraction of its Leibniz 3-algebra bracket.
//!
//! Everything is pure and deterministic: values are immutable after
//! construction, sampled scans record their seeds, and reports list
//! counterexamples in lexicographic witness order.
//!
//! ```
//! use trioid_core::{
//!     action_trigroup, certify, check_three_rack, derive_three_rack, rack_solve,
//!     ActionSpec, ElementId, OpTable,
//! };
//!
//! // Z/2 acting on {e, m1, m2} by swapping m1 and m2, with e fixed.
//! let spec = ActionSpec {
//!     m_order: 3,
//!     e: 0,
//!     h_table: OpTable::cyclic(2),
//!     action: vec![vec![0, 1, 2], vec![0, 2, 1]],
//! };
//! let (table, cert) = action_trigroup(&spec)?;
//! assert_eq!(table.order(), 6);
//! assert_eq!(cert.bar_units.len(), 3);
//!
//! // The certificate survives an independent exhaustive check, and the
//! // conjugation 3-rack it induces satisfies the rack axioms.
//! assert_eq!(certify(&table).unwrap(), cert);
//! let rack = derive_three_rack(&table, &cert)?;
//! assert!(check_three_rack(&rack).passed());
//!
//! // [x, y, z] = b solves uniquely in z.
//! let z = rack_solve(&table, &cert, ElementId(1), ElementId(0), ElementId(2));
//! assert_eq!(rack.get(ElementId(1), ElementId(0), z), ElementId(2));
//! # Ok::<(), trioid_core::Error>(())
//! ```

pub mod axioms;
pub mod census;
pub mod construct;
pub mod derived;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod laws;
pub mod morphism;
pub mod rack;
pub mod report;
pub mod rng;
pub mod smooth;
pub mod table;

pub use axioms::{
    certify, check_digroup, check_digroup_auto, check_disemigroup, check_left_disemigroup,
    check_right_disemigroup, check_semigroup, check_trigroup, check_trimonoid, check_trisemigroup,
    find_bar_units, spot_check_trisemigroup, TrigroupCert, TrigroupCheck,
};
pub use census::{
    canonical_form, enumerate_bruteforce, enumerate_trioids, CensusRow, StructureClass,
};
pub use construct::{
    action_trigroup, group_as_trigroup, matrix_trigroup, pair_trisemigroup, ActionSpec, FieldSpec,
};
pub use derived::{inverse_group, phi, InverseGroup, PhiMap};
pub use error::{Error, Result};
pub use format::{parse_three_rack, parse_trioid, serialize_three_rack, serialize_trioid};
pub use laws::{
    run_trigroup_laws, verify_conjugation_lemma, verify_inverse_lemma, verify_pair_proposition,
    verify_remarks, verify_theta_lemma,
};
pub use morphism::{count_automorphisms, find_isomorphism, is_morphism, MorphismMap};
pub use rack::{check_three_rack, conjugation, derive_three_rack, rack_solve, PointedThreeRack};
pub use report::{CheckReport, Counterexample, LawResult};
pub use smooth::{
    check_bracket_oracle, check_leibniz_identity, check_trilinearity, jacobian_halving,
    leibniz_bracket, rack_linearization, smooth_apply, smooth_conjugation, smooth_inverse,
    NumericConfig, ResidualReport, SmoothPoint, TangentVector,
};
pub use table::{ElementId, Op, OpTable, TrioidTable};
