//! Numerical semigroups: co-finite submonoids of (N, +).
//!
//! A semigroup is stored three ways at once: its minimal generating set,
//! its Kunz coordinates with respect to the multiplicity, and a membership
//! bitmask over `[0, C(S))`. Every integer at or above the conductor is a
//! member, so the bitmask plus the conductor describes the whole set.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, KunzViolation, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    multiplicity: u32,
    kunz: Vec<u32>,
    frobenius: i64,
    gaps: Vec<u32>,
    small_elements: FixedBitSet,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`.
    ///
    /// Redundant generators are discarded, so `generators()` always returns
    /// the minimal generating set.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        let g = gens.iter().fold(0u64, |acc, &x| gcd(acc, x as u64));
        if g != 1 {
            return Err(Error::NotCoFinite { gcd: g });
        }
        let m = *gens.iter().min().unwrap();
        let apery = apery_by_shortest_paths(m, gens);
        let kunz = (1..m as usize)
            .map(|i| ((apery[i] - i as u64) / m as u64) as u32)
            .collect();
        let s = Self::from_valid_kunz(m, kunz);
        debug_assert_eq!(s.small_elements, sieve(gens, s.conductor() as usize));
        Ok(s)
    }

    /// The ordinary semigroup `H_m = N \ {1, ..., m-1}`.
    pub fn ordinary(m: u32) -> Self {
        assert!(m >= 1, "multiplicity must be positive");
        Self::from_valid_kunz(m, vec![1; m as usize - 1])
    }

    /// The semigroup N itself.
    pub fn naturals() -> Self {
        Self::ordinary(1)
    }

    /// Builds a semigroup from multiplicity and Kunz coordinates, checking the
    /// Kunz inequalities of the semigroup against itself.
    pub fn from_kunz(m: u32, kunz: Vec<u32>) -> Result<Self> {
        assert!(m >= 1, "multiplicity must be positive");
        let len = m as usize - 1;
        if kunz.len() != len {
            return Err(Error::KunzViolation(KunzViolation::Length {
                expected: len,
                found: kunz.len(),
            }));
        }
        if let Some(i) = kunz.iter().position(|&k| k == 0) {
            // x_i = 0 would put i < m into S
            return Err(Error::KunzViolation(KunzViolation::AboveAmbient {
                index: i + 1,
                value: 0,
                bound: 1,
            }));
        }
        check_kunz_inequalities(m as usize, &kunz, &kunz).map_err(Error::KunzViolation)?;
        Ok(Self::from_valid_kunz(m, kunz))
    }

    fn from_valid_kunz(m: u32, kunz: Vec<u32>) -> Self {
        let mu = m as u64;
        let apery: Vec<u64> = std::iter::once(0)
            .chain(
                kunz.iter()
                    .enumerate()
                    .map(|(i, &k)| k as u64 * mu + i as u64 + 1),
            )
            .collect();
        let max_w = *apery.iter().max().unwrap();
        let frobenius = max_w as i64 - m as i64;
        let conductor = (frobenius + 1) as usize;
        let mut small_elements = FixedBitSet::with_capacity(conductor);
        let mut gaps = Vec::new();
        for n in 0..conductor {
            if n as u64 >= apery[n % m as usize] {
                small_elements.insert(n);
            } else {
                gaps.push(n as u32);
            }
        }
        let in_s = |n: u64| n >= apery[(n % mu) as usize];
        let mut generators = vec![m];
        for i in 1..m as usize {
            let w = apery[i];
            let decomposable =
                (1..m as usize).any(|j| j != i && apery[j] < w && in_s(w - apery[j]));
            if !decomposable {
                generators.push(w as u32);
            }
        }
        generators.sort_unstable();
        Self {
            generators,
            multiplicity: m,
            kunz,
            frobenius,
            gaps,
            small_elements,
        }
    }

    /// Rebuilds a semigroup from an explicit membership test that is known to
    /// hold for every integer at or above `conductor`.
    fn from_membership(conductor: usize, is_member: impl Fn(usize) -> bool) -> Self {
        let m = (1..=conductor.max(1))
            .find(|&n| n >= conductor || is_member(n))
            .unwrap();
        let member = |n: usize| n >= conductor || is_member(n);
        let kunz = (1..m)
            .map(|i| (0..).find(|q| member(q * m + i)).unwrap() as u32)
            .collect();
        Self::from_valid_kunz(m as u32, kunz)
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest integer not in S, `-1` for N.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u32 {
        (self.frobenius + 1) as u32
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Kunz coordinates `(k_1, ..., k_{m-1})`.
    pub fn kunz(&self) -> &[u32] {
        &self.kunz
    }

    /// Apéry set with respect to the multiplicity, indexed by residue.
    pub fn apery(&self) -> Vec<u64> {
        let m = self.multiplicity as u64;
        std::iter::once(0)
            .chain(
                self.kunz
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| k as u64 * m + i as u64 + 1),
            )
            .collect()
    }

    /// Membership bitmask over `[0, C(S))`.
    pub fn small_elements(&self) -> &FixedBitSet {
        &self.small_elements
    }

    /// Bound used when sieving memberships of ideals of this semigroup.
    pub fn sieve_bound(&self) -> usize {
        2 * self.conductor() as usize + self.multiplicity as usize
    }

    pub fn is_ordinary(&self) -> bool {
        self.multiplicity == self.conductor() || self.multiplicity == 1
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n >= self.conductor() as i64 {
            true
        } else {
            self.small_elements.contains(n as usize)
        }
    }

    /// `a <=_S b`, that is, `b - a` belongs to S.
    pub fn leq(&self, a: i64, b: i64) -> bool {
        self.contains(b - a)
    }

    pub fn is_minimal_generator(&self, a: i64) -> bool {
        a > 0 && self.generators.binary_search(&(a as u32)).is_ok()
    }

    /// `S \ {a}` for a minimal generator `a`.
    pub fn remove_generator(&self, a: i64) -> Result<Self> {
        if !self.is_minimal_generator(a) {
            return Err(Error::NotMinimalGenerator { value: a });
        }
        let m = self.multiplicity as i64;
        if a == m {
            let conductor = self.conductor().max(a as u32 + 1) as usize;
            return Ok(Self::from_membership(conductor, |n| {
                n as i64 != a && self.contains(n as i64)
            }));
        }
        let mut kunz = self.kunz.clone();
        kunz[(a % m) as usize - 1] += 1;
        let child = Self::from_valid_kunz(self.multiplicity, kunz);
        debug_assert!((0..self.sieve_bound() as i64)
            .all(|n| child.contains(n) == (n != a && self.contains(n))));
        Ok(child)
    }

    /// Children in the semigroup tree: `S \ {a}` for minimal generators `a > F(S)`,
    /// in increasing order of `a`.
    pub fn children(&self) -> Vec<Self> {
        self.generators
            .iter()
            .filter(|&&a| a as i64 > self.frobenius)
            .map(|&a| {
                self.remove_generator(a as i64)
                    .expect("a is a minimal generator")
            })
            .collect()
    }

    /// The parent in the semigroup tree, `S ∪ {F(S)}`; `None` for N.
    pub fn parent(&self) -> Option<Self> {
        if self.frobenius < 0 {
            return None;
        }
        let f = self.frobenius as usize;
        let conductor = self.gaps.iter().rev().nth(1).map_or(0, |&g| g as usize + 1);
        Some(Self::from_membership(conductor, |n| {
            n == f || self.contains(n as i64)
        }))
    }
}

/// All numerical semigroups of genus at most `max_genus`, each exactly once,
/// in depth-first order of the semigroup tree rooted at N.
pub fn enumerate_by_genus(max_genus: usize) -> Vec<NumericalSemigroup> {
    fn visit(s: NumericalSemigroup, max_genus: usize, out: &mut Vec<NumericalSemigroup>) {
        let expand = s.genus() < max_genus;
        let children = if expand { s.children() } else { Vec::new() };
        out.push(s);
        for child in children {
            visit(child, max_genus, out);
        }
    }
    let mut out = Vec::new();
    visit(NumericalSemigroup::naturals(), max_genus, &mut out);
    out
}

/// Number of numerical semigroups of each genus `0..=max_genus`.
pub fn count_by_genus(max_genus: usize) -> Vec<usize> {
    let mut counts = vec![0; max_genus + 1];
    for s in enumerate_by_genus(max_genus) {
        counts[s.genus()] += 1;
    }
    counts
}

/// Checks the Kunz inequalities of `x` against the ambient coordinates `k`.
pub(crate) fn check_kunz_inequalities(
    m: usize,
    x: &[u32],
    k: &[u32],
) -> std::result::Result<(), KunzViolation> {
    let coord = |v: &[u32], i: usize| if i == 0 { 0 } else { v[i - 1] };
    for i in 1..m {
        for j in 1..m {
            let t = (i + j) % m;
            if coord(x, i) + coord(k, j) + (((i + j) / m) as u32) < coord(x, t) {
                return Err(KunzViolation::NotClosed { i, j });
            }
        }
    }
    Ok(())
}

/// Minimal element of S in each residue class mod `m`, by shortest paths on
/// the residue graph whose edges are the generators.
fn apery_by_shortest_paths(m: u32, gens: &[u32]) -> Vec<u64> {
    let m = m as usize;
    let mut dist = vec![u64::MAX; m];
    let mut done = vec![false; m];
    dist[0] = 0;
    for _ in 0..m {
        let (r, d) = dist
            .iter()
            .enumerate()
            .filter(|(r, _)| !done[*r])
            .min_by_key(|(_, d)| **d)
            .map(|(r, d)| (r, *d))
            .unwrap();
        done[r] = true;
        for &g in gens {
            let t = (r + g as usize) % m;
            dist[t] = dist[t].min(d + g as u64);
        }
    }
    dist
}

/// Membership over `[0, len)` by the additive sieve.
fn sieve(gens: &[u32], len: usize) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(len);
    if len > 0 {
        bits.insert(0);
    }
    for n in 1..len {
        if gens
            .iter()
            .any(|&g| g as usize <= n && bits.contains(n - g as usize))
        {
            bits.insert(n);
        }
    }
    bits
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", join_numbers(&self.generators))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

pub(crate) fn join_numbers<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
