//! The orders `⪯` and `⊆` on an [`IdealFamily`].
//!
//! Both relations are materialized as up-set and down-set bitsets over family
//! indices, which makes bound queries a handful of word operations. Cover
//! lists (the Hasse diagram) are derived from the full relation.

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::IdealFamily;
use crate::ideal::{format_kunz, preceq_kunz};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// `I ⪯ J` iff `I + K = J` for some normalized ideal `K`.
    Preceq,
    /// Inclusion.
    Subset,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Preceq => "preceq",
            OrderKind::Subset => "subset",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

/// A pair without a join (direction `Upper`) or without a meet (`Lower`),
/// together with its minimal upper (maximal lower) bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundFailure {
    pub pair: (usize, usize),
    pub direction: Direction,
    pub bounds: Vec<usize>,
}

/// Join and meet tables of a finite lattice.
#[derive(Clone, Debug)]
pub struct LatticeTables {
    n: usize,
    join: Vec<u32>,
    meet: Vec<u32>,
}

impl LatticeTables {
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b] as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SublatticeShape {
    /// N5: `bottom < a < top` and `bottom < b < c < top`, `a` incomparable
    /// with `b` and `c`.
    Pentagon,
    /// M3: three pairwise incomparable atoms.
    Diamond,
}

/// A five-element sublattice certifying non-distributivity.
///
/// For a pentagon `middle = [a, b, c]` with `b < c`; for a diamond the three
/// atoms in index order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sublattice {
    pub shape: SublatticeShape,
    pub bottom: usize,
    pub top: usize,
    pub middle: [usize; 3],
}

impl Sublattice {
    pub fn elements(&self) -> [usize; 5] {
        let [a, b, c] = self.middle;
        [self.bottom, a, b, c, self.top]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Distributivity {
    Distributive,
    NonDistributive {
        /// `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
        triple: [usize; 3],
        witness: Option<Sublattice>,
    },
}

/// Largest sublattice closure searched for a five-element witness.
const WITNESS_CLOSURE_LIMIT: usize = 48;

#[derive(Debug)]
pub struct OrderStructure {
    family: Arc<IdealFamily>,
    kind: OrderKind,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    tables: OnceLock<Option<LatticeTables>>,
}

impl OrderStructure {
    pub fn build(family: Arc<IdealFamily>, kind: OrderKind) -> Self {
        let n = family.len();
        let m = family.ambient().multiplicity() as usize;
        let up: Vec<FixedBitSet> = (0..n)
            .into_par_iter()
            .map(|a| {
                let x = family.get(a).kunz();
                let mut row = FixedBitSet::with_capacity(n);
                for b in 0..n {
                    let y = family.get(b).kunz();
                    let related = match kind {
                        OrderKind::Subset => x.iter().zip(y).all(|(p, q)| q <= p),
                        OrderKind::Preceq => preceq_kunz(m, x, y),
                    };
                    row.set(b, related);
                }
                row
            })
            .collect();
        Self::from_up_sets(family, kind, up)
    }

    /// Builds the structure from an explicit relation given as up-sets.
    pub(crate) fn from_up_sets(
        family: Arc<IdealFamily>,
        kind: OrderKind,
        up: Vec<FixedBitSet>,
    ) -> Self {
        let n = up.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.ones() {
                down[b].insert(a);
            }
        }
        let upper_covers: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|a| {
                up[a]
                    .ones()
                    .filter(|&b| b != a && up[a].intersection_count(&down[b]) == 2)
                    .collect()
            })
            .collect();
        let mut lower_covers = vec![Vec::new(); n];
        for (a, covers) in upper_covers.iter().enumerate() {
            for &b in covers {
                lower_covers[b].push(a);
            }
        }
        Self {
            family,
            kind,
            up,
            down,
            upper_covers,
            lower_covers,
            tables: OnceLock::new(),
        }
    }

    pub fn family(&self) -> &Arc<IdealFamily> {
        &self.family
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    pub fn down_set(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    /// Elements covering `a`.
    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    /// Elements covered by `a`.
    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    /// Hasse diagram edges `(covered, covering)`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .upper_covers
            .iter()
            .enumerate()
            .flat_map(|(a, cs)| cs.iter().map(move |&b| (a, b)))
            .collect();
        edges.sort_unstable();
        edges
    }

    /// The least element, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&a| self.up[a].count_ones(..) == self.len())
    }

    /// The greatest element, if there is one.
    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&a| self.down[a].count_ones(..) == self.len())
    }

    fn common_bounds(&self, a: usize, b: usize, direction: Direction) -> FixedBitSet {
        let sets = match direction {
            Direction::Upper => &self.up,
            Direction::Lower => &self.down,
        };
        let mut common = sets[a].clone();
        common.intersect_with(&sets[b]);
        common
    }

    /// Minimal common upper bounds (or maximal common lower bounds) of `a`
    /// and `b`, ascending.
    pub fn minimal_bounds(&self, a: usize, b: usize, direction: Direction) -> Vec<usize> {
        let common = self.common_bounds(a, b, direction);
        let below = match direction {
            Direction::Upper => &self.down,
            Direction::Lower => &self.up,
        };
        common
            .ones()
            .filter(|&u| below[u].intersection_count(&common) == 1)
            .collect()
    }

    fn extremal_bound(&self, a: usize, b: usize, direction: Direction) -> Option<usize> {
        let common = self.common_bounds(a, b, direction);
        let size = common.count_ones(..);
        let beyond = match direction {
            Direction::Upper => &self.up,
            Direction::Lower => &self.down,
        };
        // the bound whose own up-set (down-set) is the whole common set
        common.ones().find(|&u| beyond[u].count_ones(..) == size)
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.extremal_bound(a, b, Direction::Upper)
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.extremal_bound(a, b, Direction::Lower)
    }

    /// The first pair, in index order, lacking a join; failing that, the
    /// first pair lacking a meet.
    pub fn lattice_failure(&self) -> Option<BoundFailure> {
        let n = self.len();
        [Direction::Upper, Direction::Lower]
            .into_iter()
            .find_map(|direction| {
                (0..n).into_par_iter().find_map_first(|a| {
                    (a + 1..n)
                        .find(|&b| self.extremal_bound(a, b, direction).is_none())
                        .map(|b| BoundFailure {
                            pair: (a, b),
                            direction,
                            bounds: self.minimal_bounds(a, b, direction),
                        })
                })
            })
    }

    pub fn is_lattice(&self) -> bool {
        self.tables().is_ok()
    }

    /// Join and meet tables, or [`Error::NotALattice`].
    pub fn tables(&self) -> Result<&LatticeTables> {
        self.tables
            .get_or_init(|| {
                let n = self.len();
                let rows: Option<Vec<(Vec<u32>, Vec<u32>)>> = (0..n)
                    .into_par_iter()
                    .map(|a| {
                        let mut joins = Vec::with_capacity(n);
                        let mut meets = Vec::with_capacity(n);
                        for b in 0..n {
                            joins.push(self.join(a, b)? as u32);
                            meets.push(self.meet(a, b)? as u32);
                        }
                        Some((joins, meets))
                    })
                    .collect();
                rows.map(|rows| {
                    let (join, meet): (Vec<Vec<u32>>, Vec<Vec<u32>>) = rows.into_iter().unzip();
                    LatticeTables {
                        n,
                        join: join.concat(),
                        meet: meet.concat(),
                    }
                })
            })
            .as_ref()
            .ok_or(Error::NotALattice)
    }

    /// Checks `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` on all triples. On failure,
    /// searches the sublattice generated by a failing triple for an N5 or M3.
    pub fn distributivity(&self) -> Result<Distributivity> {
        let t = self.tables()?;
        let n = self.len();
        let fails = |x: usize, y: usize, z: usize| {
            t.meet(x, t.join(y, z)) != t.join(t.meet(x, y), t.meet(x, z))
        };
        let Some(first) = (0..n).into_par_iter().find_map_first(|x| {
            (0..n).find_map(|y| (0..n).find(|&z| fails(x, y, z)).map(|z| [x, y, z]))
        }) else {
            return Ok(Distributivity::Distributive);
        };
        let mut witness = self.witness_from_triple(t, first);
        if witness.is_none() {
            witness = (0..n)
                .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| [x, y, z])))
                .filter(|&[x, y, z]| fails(x, y, z))
                .find_map(|triple| self.witness_from_triple(t, triple));
        }
        Ok(Distributivity::NonDistributive {
            triple: first,
            witness,
        })
    }

    pub fn is_distributive(&self) -> Result<bool> {
        Ok(self.distributivity()? == Distributivity::Distributive)
    }

    fn witness_from_triple(&self, t: &LatticeTables, triple: [usize; 3]) -> Option<Sublattice> {
        let mut closure: Vec<usize> = triple.to_vec();
        closure.sort_unstable();
        closure.dedup();
        loop {
            let mut next = closure.clone();
            for (i, &a) in closure.iter().enumerate() {
                for &b in &closure[i + 1..] {
                    next.push(t.join(a, b));
                    next.push(t.meet(a, b));
                }
            }
            next.sort_unstable();
            next.dedup();
            if next.len() > WITNESS_CLOSURE_LIMIT {
                return None;
            }
            if next == closure {
                break;
            }
            closure = next;
        }
        let c = &closure;
        let k = c.len();
        for i0 in 0..k {
            for i1 in i0 + 1..k {
                for i2 in i1 + 1..k {
                    for i3 in i2 + 1..k {
                        for i4 in i3 + 1..k {
                            let five = [c[i0], c[i1], c[i2], c[i3], c[i4]];
                            if let Some(s) = self.sublattice_shape(five) {
                                return Some(s);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Whether `elements` form a sublattice isomorphic to N5 or M3.
    pub fn sublattice_shape(&self, elements: [usize; 5]) -> Option<Sublattice> {
        let t = self.tables().ok()?;
        let mut set = elements;
        set.sort_unstable();
        if set.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let closed = set.iter().all(|&a| {
            set.iter()
                .all(|&b| set.contains(&t.join(a, b)) && set.contains(&t.meet(a, b)))
        });
        if !closed {
            return None;
        }
        let bottom = *set.iter().find(|&&a| set.iter().all(|&b| self.leq(a, b)))?;
        let top = *set.iter().find(|&&a| set.iter().all(|&b| self.leq(b, a)))?;
        let middle: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&a| a != bottom && a != top)
            .collect();
        let comparable: Vec<(usize, usize)> = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| self.leq(middle[i], middle[j]) || self.leq(middle[j], middle[i]))
            .collect();
        match comparable.as_slice() {
            [] => Some(Sublattice {
                shape: SublatticeShape::Diamond,
                bottom,
                top,
                middle: [middle[0], middle[1], middle[2]],
            }),
            [(i, j)] => {
                let (lo, hi) = if self.leq(middle[*i], middle[*j]) {
                    (middle[*i], middle[*j])
                } else {
                    (middle[*j], middle[*i])
                };
                let a = middle[3 - i - j];
                Some(Sublattice {
                    shape: SublatticeShape::Pentagon,
                    bottom,
                    top,
                    middle: [a, lo, hi],
                })
            }
            _ => None,
        }
    }

    /// Graphviz rendering of the Hasse diagram, drawn bottom to top with
    /// nodes labelled by Kunz coordinates.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {{", self.kind.name());
        out.push_str("  rankdir=BT;\n");
        for (i, ideal) in self.family.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", format_kunz(ideal.kunz()));
        }
        for (a, b) in self.cover_edges() {
            let _ = writeln!(out, "  {a} -> {b};");
        }
        out.push_str("}\n");
        out
    }
}
