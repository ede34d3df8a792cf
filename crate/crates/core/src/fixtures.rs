//! Shared fixture instances used across the workspace and its tests.
//!
//! * `g2`: Z/2 as a trigroup (all three operations equal).
//! * `t4triv`: action trigroup on `M = {e,m}` with Z/2 acting trivially
//!   (order 4, trivial conjugation).
//! * `t6`: action trigroup on `M = {e,m1,m2}` with Z/2 swapping
//!   `m1 <-> m2` (order 6). Elements are indexed `a0=(e,1), a1=(e,h),
//!   a2=(m1,1), a3=(m1,h), a4=(m2,1), a5=(m2,h)`.
//! * `p4`: pair construction on Z/2 (order 4): a trisemigroup that is
//!   not a trigroup.
//! * `m18`: scalar-matrix trigroup over `GF(3)^2` (order 18).

use crate::axioms::TrigroupCert;
use crate::construct::{
    action_trigroup, group_as_trigroup, matrix_trigroup, pair_trisemigroup, ActionSpec, FieldSpec,
};
use crate::table::{OpTable, TrioidTable};

pub fn g2() -> (TrioidTable, TrigroupCert) {
    group_as_trigroup(&OpTable::cyclic(2)).expect("Z/2 is a group")
}

pub fn t4triv() -> (TrioidTable, TrigroupCert) {
    let spec = ActionSpec {
        m_order: 2,
        e: 0,
        h_table: OpTable::cyclic(2),
        action: vec![vec![0, 1], vec![0, 1]],
    };
    action_trigroup(&spec).expect("trivial Z/2 action is valid")
}

pub fn t6() -> (TrioidTable, TrigroupCert) {
    action_trigroup(&t6_spec()).expect("swap action is valid")
}

/// The action spec behind `t6`, exposed for tests that probe the spec
/// itself (transitivity, validation).
pub fn t6_spec() -> ActionSpec {
    ActionSpec {
        m_order: 3,
        e: 0,
        h_table: OpTable::cyclic(2),
        action: vec![vec![0, 1, 2], vec![0, 2, 1]],
    }
}

pub fn p4() -> TrioidTable {
    let z2 = OpTable::cyclic(2);
    pair_trisemigroup(&z2, &z2).expect("order-2 pair construction")
}

pub fn m18() -> (TrioidTable, TrigroupCert) {
    matrix_trigroup(&FieldSpec { p: 3, n: 2 }).expect("GF(3)^2 fits the guard")
}
