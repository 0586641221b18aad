//! Irreducible elements of `𝔍₀(S)` with respect to `+`, `∨`, `∧`, `∪` and `∩`.
//!
//! `∨`/`∧` are the lattice operations of `(𝔍₀(S), ⪯)` and are only defined
//! when that order is a lattice. `∪`/`∩` are the lattice operations of
//! `(𝔍₀(S), ⊆)`. An element is `∨`-irreducible when it covers at most one
//! element and `∧`-irreducible when it is covered by at most one; in
//! particular the bottom is `∨`-irreducible and the top `∧`-irreducible.
//! Sum-irreducibility is only defined away from the identity `S`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::family::IdealFamily;
use crate::order::{OrderKind, OrderStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IrreducibleKind {
    Plus,
    Join,
    Meet,
    Union,
    Intersection,
}

impl IrreducibleKind {
    pub const ALL: [IrreducibleKind; 5] = [
        IrreducibleKind::Plus,
        IrreducibleKind::Join,
        IrreducibleKind::Meet,
        IrreducibleKind::Union,
        IrreducibleKind::Intersection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IrreducibleKind::Plus => "plus",
            IrreducibleKind::Join => "join",
            IrreducibleKind::Meet => "meet",
            IrreducibleKind::Union => "union",
            IrreducibleKind::Intersection => "intersection",
        }
    }

    /// The order whose lattice operations define this kind; `None` for `+`.
    pub fn order_kind(self) -> Option<OrderKind> {
        match self {
            IrreducibleKind::Plus => None,
            IrreducibleKind::Join | IrreducibleKind::Meet => Some(OrderKind::Preceq),
            IrreducibleKind::Union | IrreducibleKind::Intersection => Some(OrderKind::Subset),
        }
    }
}

/// Ideals `I ≠ S` such that `I = J + K` forces `I = J` or `I = K`.
pub fn plus_irreducibles(family: &IdealFamily) -> Vec<usize> {
    let n = family.len();
    let mut reducible = vec![false; n];
    reducible[family.bottom()] = true;
    for a in 0..n {
        for b in a..n {
            let s = family.sum_index(a, b);
            if s != a && s != b {
                reducible[s] = true;
            }
        }
    }
    (0..n).filter(|&i| !reducible[i]).collect()
}

impl OrderStructure {
    /// Elements covering at most one element. Requires a lattice.
    pub fn join_irreducibles(&self) -> Result<Vec<usize>> {
        self.tables()?;
        Ok((0..self.len())
            .filter(|&a| self.lower_covers(a).len() <= 1)
            .collect())
    }

    /// Elements covered by at most one element. Requires a lattice.
    pub fn meet_irreducibles(&self) -> Result<Vec<usize>> {
        self.tables()?;
        Ok((0..self.len())
            .filter(|&a| self.upper_covers(a).len() <= 1)
            .collect())
    }

    /// Join-irreducibles straight from the definition: no `q, r ≠ p` with
    /// `q ∨ r = p`.
    pub fn join_irreducibles_by_pairs(&self) -> Result<Vec<usize>> {
        let t = self.tables()?;
        Ok(self.irreducible_by_pairs(|a, b| t.join(a, b)))
    }

    /// Meet-irreducibles straight from the definition.
    pub fn meet_irreducibles_by_pairs(&self) -> Result<Vec<usize>> {
        let t = self.tables()?;
        Ok(self.irreducible_by_pairs(|a, b| t.meet(a, b)))
    }

    fn irreducible_by_pairs(&self, op: impl Fn(usize, usize) -> usize) -> Vec<usize> {
        let n = self.len();
        let mut reducible = vec![false; n];
        for a in 0..n {
            for b in a + 1..n {
                let c = op(a, b);
                if c != a && c != b {
                    reducible[c] = true;
                }
            }
        }
        (0..n).filter(|&i| !reducible[i]).collect()
    }
}

/// Classifies the family by the given kind of irreducibility, building the
/// needed order. Fails with `NotALattice` for `Join`/`Meet` when `⪯` is not
/// a lattice.
pub fn irreducibles(family: &Arc<IdealFamily>, kind: IrreducibleKind) -> Result<Vec<usize>> {
    let Some(order_kind) = kind.order_kind() else {
        return Ok(plus_irreducibles(family));
    };
    let order = OrderStructure::build(family.clone(), order_kind);
    irreducibles_in(&order, kind)
}

/// As [`irreducibles`], on an already built order of the matching kind.
pub fn irreducibles_in(order: &OrderStructure, kind: IrreducibleKind) -> Result<Vec<usize>> {
    debug_assert!(kind.order_kind().is_none_or(|k| k == order.kind()));
    match kind {
        IrreducibleKind::Plus => Ok(plus_irreducibles(order.family())),
        IrreducibleKind::Join | IrreducibleKind::Union => order.join_irreducibles(),
        IrreducibleKind::Meet | IrreducibleKind::Intersection => order.meet_irreducibles(),
    }
}
