//! Independent oracles shared by the integration suites. Everything in
//! here recomputes from raw tables with plain loops, deliberately
//! avoiding the library's scanning machinery, so reports can be checked
//! against code that cannot share their bugs.
//!
//! Not every suite uses every helper.
#![allow(dead_code)]

use trioid_core::table::TrioidTable;

/// Recomputes both sides of the named trioid axiom at the witness and
/// confirms a genuine violation matching the reported values.
pub fn reevaluate(t: &TrioidTable, id: &str, w: &[usize], lhs: usize, rhs: usize) -> bool {
    let l = |a: usize, b: usize| t.left().at(a, b);
    let m = |a: usize, b: usize| t.middle().at(a, b);
    let r = |a: usize, b: usize| t.right().at(a, b);
    let (x, y, z) = (w[0], w[1], w[2]);
    let (expect_lhs, expect_rhs) = match id {
        "ass-⊢" => (l(l(x, y), z), l(x, l(y, z))),
        "ass-⊥" => (m(m(x, y), z), m(x, m(y, z))),
        "ass-⊣" => (r(r(x, y), z), r(x, r(y, z))),
        "L1⊢⊣" => (l(x, l(y, z)), l(r(x, y), z)),
        "L2⊢⊣" => (l(x, r(y, z)), r(l(x, y), z)),
        "R1⊢⊣" => (r(x, r(y, z)), r(x, l(y, z))),
        "R2⊢⊣" => (r(l(x, y), z), l(x, r(y, z))),
        "L1⊢⊥" => (l(x, l(y, z)), l(m(x, y), z)),
        "L2⊢⊥" => (l(x, m(y, z)), m(l(x, y), z)),
        "R1⊥⊣" => (r(x, r(y, z)), r(x, m(y, z))),
        "R2⊥⊣" => (r(m(x, y), z), m(x, r(y, z))),
        "T4" => (m(r(x, y), z), m(x, l(y, z))),
        other => panic!("unexpected axiom id {other}"),
    };
    expect_lhs == lhs && expect_rhs == rhs && lhs != rhs
}

/// Plain-loop trisemigroup check, independent of the report machinery.
pub fn independent_trisemigroup_check(t: &TrioidTable) -> bool {
    let n = t.order();
    let l = |a: usize, b: usize| t.left().at(a, b);
    let m = |a: usize, b: usize| t.middle().at(a, b);
    let r = |a: usize, b: usize| t.right().at(a, b);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ok = l(l(x, y), z) == l(x, l(y, z))
                    && m(m(x, y), z) == m(x, m(y, z))
                    && r(r(x, y), z) == r(x, r(y, z))
                    && l(x, l(y, z)) == l(r(x, y), z)
                    && l(x, r(y, z)) == r(l(x, y), z)
                    && r(x, r(y, z)) == r(x, l(y, z))
                    && l(x, l(y, z)) == l(m(x, y), z)
                    && l(x, m(y, z)) == m(l(x, y), z)
                    && r(x, r(y, z)) == r(x, m(y, z))
                    && r(m(x, y), z) == m(x, r(y, z))
                    && m(r(x, y), z) == m(x, l(y, z));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Parses a rendered `FAIL <id> witness=(..) lhs=.. rhs=..` line.
pub fn parse_fail_line(line: &str) -> (String, Vec<usize>, usize, usize) {
    let mut parts = line.split_whitespace();
    assert_eq!(parts.next(), Some("FAIL"));
    let id = parts.next().expect("axiom id").to_string();
    let witness_part = parts.next().expect("witness field");
    let witness_str = witness_part
        .strip_prefix("witness=(")
        .and_then(|s| s.strip_suffix(")"))
        .expect("witness=(..)");
    let witness: Vec<usize> = if witness_str.is_empty() {
        vec![]
    } else {
        witness_str
            .split(',')
            .map(|tok| tok.parse().expect("witness index"))
            .collect()
    };
    let lhs = parts
        .next()
        .and_then(|s| s.strip_prefix("lhs="))
        .expect("lhs field")
        .parse()
        .expect("lhs index");
    let rhs = parts
        .next()
        .and_then(|s| s.strip_prefix("rhs="))
        .expect("rhs field")
        .parse()
        .expect("rhs index");
    (id, witness, lhs, rhs)
}
