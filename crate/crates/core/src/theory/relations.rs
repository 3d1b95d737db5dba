use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A polychromatic crossing pattern `2 * over = under_a + under_b` with
/// `under_a < under_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub over: i64,
    pub under_a: i64,
    pub under_b: i64,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{},{})", self.over, self.under_a, self.under_b)
    }
}

pub type RelationSet = BTreeSet<Relation>;

/// All crossing patterns within `colors` whose under-colors differ, over
/// the integers (`modulus = None`) or mod `q`.
pub fn palette_relations(colors: &BTreeSet<i64>, modulus: Option<u64>) -> RelationSet {
    let holds = |o: i64, a: i64, b: i64| {
        let lhs = 2 * o as i128;
        let rhs = a as i128 + b as i128;
        match modulus {
            None => lhs == rhs,
            Some(q) => (lhs - rhs).rem_euclid(q as i128) == 0,
        }
    };
    let mut out = RelationSet::new();
    for &o in colors {
        for &a in colors {
            for &b in colors.range(a + 1..) {
                if holds(o, a, b) {
                    out.insert(Relation {
                        over: o,
                        under_a: a,
                        under_b: b,
                    });
                }
            }
        }
    }
    out
}
