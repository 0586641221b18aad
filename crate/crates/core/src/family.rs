//! The set of all normalized ideals of a semigroup, and related counts.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::ideal::{sum_kunz, NormalizedIdeal};
use crate::semigroup::NumericalSemigroup;

/// Every normalized ideal of a numerical semigroup, in lexicographic order of
/// Kunz coordinates. Index 0 is always N.
#[derive(Clone, Debug)]
pub struct IdealFamily {
    ambient: Arc<NumericalSemigroup>,
    ideals: Vec<NormalizedIdeal>,
    index: HashMap<Vec<u32>, usize>,
}

impl IdealFamily {
    /// Enumerates all Kunz vectors satisfying the Kunz inequalities by
    /// backtracking over coordinates, checking each inequality as soon as both
    /// of its coordinates are fixed.
    pub fn enumerate(ambient: &Arc<NumericalSemigroup>) -> Self {
        let m = ambient.multiplicity() as usize;
        let k = ambient.kunz();
        let mut vectors = Vec::new();
        let mut x = vec![0u32; m.saturating_sub(1)];
        extend(m, k, 1, &mut x, &mut vectors);

        let ideals: Vec<NormalizedIdeal> = vectors
            .into_iter()
            .map(|v| NormalizedIdeal::from_valid_kunz(ambient.clone(), v))
            .collect();
        let index = ideals
            .iter()
            .enumerate()
            .map(|(i, ideal)| (ideal.kunz().to_vec(), i))
            .collect();
        Self {
            ambient: ambient.clone(),
            ideals,
            index,
        }
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[NormalizedIdeal] {
        &self.ideals
    }

    pub fn get(&self, i: usize) -> &NormalizedIdeal {
        &self.ideals[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, NormalizedIdeal> {
        self.ideals.iter()
    }

    pub fn position(&self, kunz: &[u32]) -> Option<usize> {
        self.index.get(kunz).copied()
    }

    pub fn index_of(&self, ideal: &NormalizedIdeal) -> Option<usize> {
        if !Arc::ptr_eq(ideal.ambient(), &self.ambient) && ideal.ambient() != &self.ambient {
            return None;
        }
        self.position(ideal.kunz())
    }

    /// Index of the ambient semigroup, the identity for `+`.
    pub fn bottom(&self) -> usize {
        self.position(self.ambient.kunz()).unwrap()
    }

    /// Index of N.
    pub fn top(&self) -> usize {
        0
    }

    pub fn sum_index(&self, a: usize, b: usize) -> usize {
        let m = self.ambient.multiplicity() as usize;
        let z = sum_kunz(m, self.ideals[a].kunz(), self.ideals[b].kunz());
        self.index[&z]
    }

    pub fn union_index(&self, a: usize, b: usize) -> usize {
        let z: Vec<u32> = self.ideals[a]
            .kunz()
            .iter()
            .zip(self.ideals[b].kunz())
            .map(|(x, y)| *x.min(y))
            .collect();
        self.index[&z]
    }

    pub fn intersection_index(&self, a: usize, b: usize) -> usize {
        let z: Vec<u32> = self.ideals[a]
            .kunz()
            .iter()
            .zip(self.ideals[b].kunz())
            .map(|(x, y)| *x.max(y))
            .collect();
        self.index[&z]
    }

    /// Indices of the two-generated ideals `{0, g} + S`, `g` a gap.
    pub fn principal_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = principal_family(&self.ambient)
            .iter()
            .map(|i| self.index_of(i).expect("family is complete"))
            .collect();
        out.sort_unstable();
        out
    }
}

impl<'a> IntoIterator for &'a IdealFamily {
    type Item = &'a NormalizedIdeal;
    type IntoIter = std::slice::Iter<'a, NormalizedIdeal>;

    fn into_iter(self) -> Self::IntoIter {
        self.ideals.iter()
    }
}

fn extend(m: usize, k: &[u32], t: usize, x: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if t >= m {
        out.push(x.clone());
        return;
    }
    let coord = |x: &[u32], i: usize| if i == 0 { 0 } else { x[i - 1] };
    for v in 0..=k[t - 1] {
        x[t - 1] = v;
        let feasible = (1..m).all(|j| {
            // x_t + k_j + carry >= x_{t+j} with t+j already fixed
            let target = (t + j) % m;
            let forward = target == 0
                || target > t
                || coord(x, t) + k[j - 1] + ((t + j) / m) as u32 >= coord(x, target);
            // x_i + k_j + carry >= x_t with i = t - j already fixed
            let i = (t + m - j) % m;
            let backward =
                i == 0 || i > t || coord(x, i) + k[j - 1] + ((i + j) / m) as u32 >= coord(x, t);
            forward && backward
        });
        if feasible {
            extend(m, k, t + 1, x, out);
        }
    }
    x[t - 1] = 0;
}

/// `{ {0, g} + S : g a gap of S }`, deduplicated, in canonical order.
pub fn principal_family(s: &Arc<NumericalSemigroup>) -> Vec<NormalizedIdeal> {
    let mut out: Vec<NormalizedIdeal> = s
        .gaps()
        .iter()
        .map(|&g| NormalizedIdeal::from_generators(s, &[0, g as i64]).unwrap())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Comparability masks of the gaps of `S` under `<=_S`.
fn gap_comparabilities(s: &NumericalSemigroup) -> Vec<FixedBitSet> {
    let gaps = s.gaps();
    let n = gaps.len();
    (0..n)
        .map(|a| {
            let mut row = FixedBitSet::with_capacity(n);
            for b in 0..n {
                let (x, y) = (gaps[a] as i64, gaps[b] as i64);
                if s.leq(x, y) || s.leq(y, x) {
                    row.insert(b);
                }
            }
            row
        })
        .collect()
}

/// Number of antichains, the empty one included, of the gaps of `S`
/// ordered by `<=_S`.
pub fn antichain_count(s: &NumericalSemigroup) -> u64 {
    let comparable = gap_comparabilities(s);
    if comparable.len() <= 20 {
        antichains_by_subsets(&comparable)
    } else {
        antichains_by_recursion(&comparable)
    }
}

/// Checks every subset of the gaps for pairwise incomparability.
fn antichains_by_subsets(comparable: &[FixedBitSet]) -> u64 {
    let n = comparable.len();
    let masks: Vec<u32> = comparable
        .iter()
        .enumerate()
        .map(|(a, row)| {
            row.ones()
                .filter(|&b| b != a)
                .fold(0, |acc, b| acc | 1 << b)
        })
        .collect();
    (0u32..1 << n)
        .filter(|&set| (0..n).all(|a| set & 1 << a == 0 || set & masks[a] == 0))
        .count() as u64
}

/// `A(P) = A(P - v) + A(P - N[v])`, memoized on the remaining element set.
fn antichains_by_recursion(comparable: &[FixedBitSet]) -> u64 {
    fn count(
        remaining: FixedBitSet,
        comparable: &[FixedBitSet],
        memo: &mut HashMap<FixedBitSet, u64>,
    ) -> u64 {
        let Some(v) = remaining.ones().next() else {
            return 1;
        };
        if let Some(&c) = memo.get(&remaining) {
            return c;
        }
        let mut without = remaining.clone();
        without.set(v, false);
        let mut excluded = remaining.clone();
        excluded.difference_with(&comparable[v]);
        let c = count(without, comparable, memo) + count(excluded, comparable, memo);
        memo.insert(remaining, c);
        c
    }
    let n = comparable.len();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    count(all, comparable, &mut HashMap::new())
}
