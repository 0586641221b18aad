//! Finite checks of structural statements about ideal families.
//!
//! Each check enumerates the relevant families in full and either confirms the
//! statement on every instance or stops at the first counterexample, which is
//! recorded as a [`Witness`] that can be replayed with the rest of the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::IdealFamily;
use crate::ideal::{format_kunz, NormalizedIdeal};
use crate::irreducible::plus_irreducibles;
use crate::order::{Direction, OrderKind, OrderStructure};
use crate::semigroup::{enumerate_by_genus, join_numbers, NumericalSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// A counterexample. `ideals` are Kunz vectors of ideals of `semigroup`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub semigroup: Vec<u32>,
    pub statement: String,
    pub ideals: Vec<Vec<u32>>,
    pub expected: String,
    pub actual: String,
}

impl Witness {
    fn new(s: &NumericalSemigroup, statement: impl Into<String>) -> Self {
        Self {
            semigroup: s.generators().to_vec(),
            statement: statement.into(),
            ideals: Vec::new(),
            expected: String::new(),
            actual: String::new(),
        }
    }

    fn ideals<'a>(mut self, ideals: impl IntoIterator<Item = &'a NormalizedIdeal>) -> Self {
        self.ideals = ideals.into_iter().map(|i| i.kunz().to_vec()).collect();
        self
    }

    fn outcome(mut self, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        self.expected = expected.to_string();
        self.actual = actual.to_string();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub checked: u64,
    pub skipped: u64,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim_id)?;
        writeln!(f, "parameters:")?;
        for (k, v) in &self.parameters {
            writeln!(f, "  {k}: {v}")?;
        }
        writeln!(f, "status: {}", self.status)?;
        writeln!(f, "checked: {}", self.checked)?;
        writeln!(f, "skipped: {}", self.skipped)?;
        if let Some(w) = &self.witness {
            writeln!(f, "witness:")?;
            writeln!(f, "  semigroup: <{}>", join_numbers(&w.semigroup))?;
            writeln!(f, "  statement: {}", w.statement)?;
            let ideals: Vec<String> = w.ideals.iter().map(|x| format_kunz(x)).collect();
            writeln!(f, "  ideals: {}", ideals.join(" "))?;
            writeln!(f, "  expected: {}", w.expected)?;
            writeln!(f, "  actual: {}", w.actual)?;
        }
        Ok(())
    }
}

/// What one instance, or one batch of instances, of a claim contributed.
#[derive(Default)]
struct Outcome {
    checked: u64,
    skipped: u64,
    witness: Option<Witness>,
}

impl Outcome {
    fn checked(n: u64) -> Self {
        Self {
            checked: n,
            ..Self::default()
        }
    }

    fn skipped(n: u64) -> Self {
        Self {
            skipped: n,
            ..Self::default()
        }
    }

    fn refuted(w: Witness) -> Self {
        Self {
            checked: 1,
            skipped: 0,
            witness: Some(w),
        }
    }

    fn single(witness: Option<Witness>) -> Self {
        Self {
            checked: 1,
            skipped: 0,
            witness,
        }
    }
}

fn report(
    claim_id: &str,
    parameters: &[(&str, String)],
    outcomes: impl IntoIterator<Item = Outcome>,
) -> VerificationReport {
    let mut checked = 0;
    let mut skipped = 0;
    let mut witness = None;
    for outcome in outcomes {
        checked += outcome.checked;
        skipped += outcome.skipped;
        if witness.is_none() {
            witness = outcome.witness;
        }
    }
    VerificationReport {
        claim_id: claim_id.to_string(),
        parameters: parameters
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        status: if witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        checked,
        skipped,
        witness,
    }
}

fn family_of(s: &Arc<NumericalSemigroup>) -> Arc<IdealFamily> {
    Arc::new(IdealFamily::enumerate(s))
}

fn precondition(ok: bool, message: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(message()))
    }
}

fn require_generator(s: &NumericalSemigroup, a: i64) -> Result<()> {
    precondition(s.is_minimal_generator(a), || {
        format!("{a} is not a minimal generator of {s}")
    })
}

fn unitary_in_scope(s: &NumericalSemigroup, a: i64) -> bool {
    s.is_minimal_generator(a) && a > (s.multiplicity() as i64).max(s.frobenius())
}

fn downward_in_scope(s: &NumericalSemigroup, a: i64) -> bool {
    s.is_minimal_generator(a) && a != s.multiplicity() as i64 && a > s.frobenius()
}

// ---------------------------------------------------------------------------
// Removing a large generator

/// Compares `𝔍₀(S)` with `𝔍₀(S \ {a})` for `a > max(m, F)`: the former
/// embeds strictly in the latter, the new ideals are exactly those with
/// `x_i = k_i + 1` (`i = a mod m`), and for each of them `I + S = I ∪ {a}`
/// covers `I` in `(𝔍₀(S \ {a}), ⪯)`.
pub fn verify_unitary_extension(s: &NumericalSemigroup, a: i64) -> Result<VerificationReport> {
    require_generator(s, a)?;
    let bound = (s.multiplicity() as i64).max(s.frobenius());
    precondition(a > bound, || {
        format!("{a} is not larger than max(m, F) = {bound} for {s}")
    })?;
    let (checked, deviations) = compare_unitary_extension(s, a)?;
    Ok(report(
        "unitary-extension",
        &[("semigroup", s.to_string()), ("generator", a.to_string())],
        [Outcome {
            checked,
            skipped: 0,
            witness: deviations.into_iter().next(),
        }],
    ))
}

/// Compares the two families directly and lists every place where they do not
/// relate as described by [`verify_unitary_extension`]. Only requires `a` to
/// be a minimal generator other than the multiplicity, so it also applies to
/// generators below the Frobenius number. Witness ideals live in `S \ {a}`.
pub fn unitary_extension_deviations(s: &NumericalSemigroup, a: i64) -> Result<Vec<Witness>> {
    Ok(compare_unitary_extension(s, a)?.1)
}

/// Number of ideals of `S \ {a}` examined, and the deviations found.
fn compare_unitary_extension(s: &NumericalSemigroup, a: i64) -> Result<(u64, Vec<Witness>)> {
    require_generator(s, a)?;
    let m = s.multiplicity() as i64;
    precondition(a != m, || format!("{a} is the multiplicity of {s}"))?;
    let s = Arc::new(s.clone());
    let t = Arc::new(s.remove_generator(a)?);
    let small = family_of(&s);
    let large = family_of(&t);
    let order = OrderStructure::build(large.clone(), OrderKind::Preceq);
    let residue = (a % m) as usize;
    let raised = s.kunz()[residue - 1] + 1;
    let s_in_t = NormalizedIdeal::ambient_ideal(&s)
        .reinterpret(&t)
        .expect("S is an ideal of S \\ {a}");
    let mut out = Vec::new();

    for ideal in small.iter() {
        if ideal.reinterpret(&t).is_err() {
            out.push(
                Witness::new(&s, "every ideal of S is an ideal of S \\ {a}")
                    .ideals([ideal])
                    .outcome("an ideal of S \\ {a}", "not closed under S \\ {a}"),
            );
        }
    }
    if large.len() <= small.len() {
        out.push(
            Witness::new(&t, "the inclusion of families is strict")
                .outcome(format!("more than {} ideals", small.len()), large.len()),
        );
    }
    for (j, ideal) in large.iter().enumerate() {
        let new = ideal.reinterpret(&s).is_err();
        let by_coordinate = ideal.kunz()[residue - 1] == raised;
        let by_membership = !ideal.contains(a);
        if new != by_coordinate || new != by_membership {
            out.push(
                Witness::new(&t, format!("ideals outside 𝔍₀(S) are exactly those with x_{residue} = {raised}, equivalently without {a}"))
                    .ideals([ideal])
                    .outcome(
                        format!(
                            "x_{residue} = {}, {a} {} I",
                            ideal.kunz()[residue - 1],
                            if by_membership { "∉" } else { "∈" }
                        ),
                        format!("I {} 𝔍₀(S)", if new { "∉" } else { "∈" }),
                    ),
            );
        }
        if !new {
            continue;
        }
        let sum = ideal.add(&s_in_t).expect("same ambient");
        let bound = t.conductor() as i64 + m + a;
        let is_union = (0..bound).all(|n| sum.contains(n) == (ideal.contains(n) || n == a));
        if !is_union {
            out.push(
                Witness::new(&t, format!("I + S = I ∪ {{{a}}}"))
                    .ideals([ideal, &sum])
                    .outcome(format!("I ∪ {{{a}}}"), format!("I + S = {sum}")),
            );
            continue;
        }
        let k = large.index_of(&sum).expect("family is complete");
        if !order.upper_covers(j).contains(&k) {
            out.push(
                Witness::new(&t, "I + S covers I under ⪯")
                    .ideals([ideal, &sum])
                    .outcome("a cover", "not a cover"),
            );
        }
    }
    Ok((large.len() as u64, out))
}

/// [`verify_unitary_extension`] for every semigroup of genus at most
/// `max_genus` and every generator in scope.
pub fn verify_unitary_extension_sweep(max_genus: usize) -> VerificationReport {
    let outcomes = per_generator(max_genus, unitary_in_scope, |s, a| {
        let deviations = unitary_extension_deviations(s, a).expect("in scope");
        deviations.into_iter().next()
    });
    report(
        "unitary-extension",
        &[("max_genus", max_genus.to_string())],
        outcomes,
    )
}

/// Runs `check` on every `(S, a)` with `genus(S) <= max_genus` and `a` a
/// minimal generator accepted by `in_scope`, in enumeration order.
fn per_generator(
    max_genus: usize,
    in_scope: fn(&NumericalSemigroup, i64) -> bool,
    check: impl Fn(&NumericalSemigroup, i64) -> Option<Witness> + Sync,
) -> Vec<Outcome> {
    let semigroups = enumerate_by_genus(max_genus);
    let pairs: Vec<(&NumericalSemigroup, i64)> = semigroups
        .iter()
        .flat_map(|s| s.generators().iter().map(move |&a| (s, a as i64)))
        .collect();
    pairs
        .par_iter()
        .map(|&(s, a)| {
            if !in_scope(s, a) {
                return Outcome::skipped(1);
            }
            Outcome::single(check(s, a))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Ordinary semigroups

/// Compares `𝔍₀(H_m)` with `𝔍₀(H_{m+1})`: the former embeds strictly, an
/// ideal of `H_{m+1}` lies in it exactly when `x_m = 0` (that is, `m ∈ I`),
/// and `I + H_m` always does.
pub fn verify_ordinary_extension(m: u32) -> Result<VerificationReport> {
    precondition(m >= 1, || "the multiplicity must be positive".to_string())?;
    let h = Arc::new(NumericalSemigroup::ordinary(m));
    let h1 = Arc::new(NumericalSemigroup::ordinary(m + 1));
    let small = family_of(&h);
    let large = family_of(&h1);
    let h_in_h1 = NormalizedIdeal::ambient_ideal(&h)
        .reinterpret(&h1)
        .expect("H_m is an ideal of H_(m+1)");
    let mut outcomes = vec![Outcome::checked(large.len() as u64)];

    if let Some(bad) = small.iter().find(|i| i.reinterpret(&h1).is_err()) {
        outcomes.push(Outcome::refuted(
            Witness::new(&h, "every ideal of H_m is an ideal of H_(m+1)")
                .ideals([bad])
                .outcome("an ideal of H_(m+1)", "not closed"),
        ));
    }
    if large.len() <= small.len() {
        outcomes.push(Outcome::refuted(
            Witness::new(&h1, "the inclusion of families is strict")
                .outcome(format!("more than {} ideals", small.len()), large.len()),
        ));
    }
    for ideal in large.iter() {
        let inside = ideal.reinterpret(&h).is_ok();
        let last = ideal.kunz()[m as usize - 1];
        if inside != (last == 0) {
            outcomes.push(Outcome::refuted(
                Witness::new(&h1, format!("I ∈ 𝔍₀(H_m) iff x_{m} = 0"))
                    .ideals([ideal])
                    .outcome(
                        format!("in 𝔍₀(H_m) = {}", last == 0),
                        format!("in 𝔍₀(H_m) = {inside}"),
                    ),
            ));
        }
        let sum = ideal.add(&h_in_h1).expect("same ambient");
        if sum.reinterpret(&h).is_err() {
            outcomes.push(Outcome::refuted(
                Witness::new(&h1, "I + H_m ∈ 𝔍₀(H_m)")
                    .ideals([ideal, &sum])
                    .outcome("an ideal of H_m", "not an ideal of H_m"),
            ));
        }
    }
    Ok(report(
        "ordinary-extension",
        &[("m", m.to_string())],
        outcomes,
    ))
}

/// [`verify_ordinary_extension`] for `m = 1..=max_m`.
pub fn verify_ordinary_extension_sweep(max_m: u32) -> VerificationReport {
    let outcomes: Vec<Outcome> = (1..=max_m)
        .into_par_iter()
        .map(|m| Outcome::single(verify_ordinary_extension(m).expect("m is positive").witness))
        .collect();
    report(
        "ordinary-extension",
        &[("max_m", max_m.to_string())],
        outcomes,
    )
}

// ---------------------------------------------------------------------------
// Deleting a generator from a sum

/// One instance `I + K = J` of ideals of `S`, viewed in `T = S \ {a}`.
#[derive(Clone, Debug)]
pub struct DeletionInstance {
    pub i: NormalizedIdeal,
    pub k: NormalizedIdeal,
    pub j: NormalizedIdeal,
    /// Whether `a` is a minimal generator of `I`, `K`, `J` in `T`.
    pub generates: [bool; 3],
    /// `(I \ {a}) + (K \ {a})` when `a` generates both.
    pub deleted_sum: Option<NormalizedIdeal>,
    /// `J \ {a}` when `a` generates `J`.
    pub deleted_j: Option<NormalizedIdeal>,
}

impl DeletionInstance {
    /// `(I \ {a}) + (K \ {a}) = J \ {a}`.
    pub fn identity_holds(&self) -> bool {
        matches!((&self.deleted_sum, &self.deleted_j), (Some(x), Some(y)) if x == y)
    }

    /// `I \ {a} ⪯ J \ {a}`, when both are defined.
    pub fn deleted_preceq(&self, a: u64) -> Option<bool> {
        let i = self.i.remove_minimal_generator(a).ok()?;
        let j = self.deleted_j.as_ref()?;
        i.preceq(j).ok()
    }
}

/// Builds `J = I + K` for ideals of `S` and examines the three ideals in
/// `S \ {a}`. Any minimal generator `a` is accepted, the multiplicity
/// included.
pub fn deletion_instance(
    s: &Arc<NumericalSemigroup>,
    a: i64,
    i: &NormalizedIdeal,
    k: &NormalizedIdeal,
) -> Result<DeletionInstance> {
    require_generator(s, a)?;
    let t = Arc::new(s.remove_generator(a)?);
    let j = i.add(k)?;
    let [i, k, j] = [i, k, &j].map(|x| x.reinterpret(&t).expect("ideals of S are ideals of T"));
    let a = a as u64;
    let generates = [&i, &k, &j].map(|x| x.minimal_generators().contains(&a));
    let deleted_sum = match (i.remove_minimal_generator(a), k.remove_minimal_generator(a)) {
        (Ok(x), Ok(y)) => Some(x.add(&y)?),
        _ => None,
    };
    let deleted_j = j.remove_minimal_generator(a).ok();
    Ok(DeletionInstance {
        i,
        k,
        j,
        generates,
        deleted_sum,
        deleted_j,
    })
}

/// For all `I, K` in `𝔍₀(S)` with `J = I + K` such that `a` is a minimal
/// generator of `I` and `J` in `S \ {a}`: `a` is a minimal generator of `K`
/// and `(I \ {a}) + (K \ {a}) = J \ {a}`. Pairs not meeting the hypothesis
/// are counted as skipped.
pub fn verify_downward_lemma(s: &NumericalSemigroup, a: i64) -> Result<VerificationReport> {
    require_generator(s, a)?;
    precondition(a != s.multiplicity() as i64, || {
        format!("{a} is the multiplicity of {s}")
    })?;
    precondition(a > s.frobenius(), || {
        format!(
            "{a} is smaller than the Frobenius number {} of {s}",
            s.frobenius()
        )
    })?;
    let (checked, skipped, witness) = downward_scan(s, a);
    Ok(report(
        "downward-lemma",
        &[("semigroup", s.to_string()), ("generator", a.to_string())],
        [Outcome {
            checked,
            skipped,
            witness,
        }],
    ))
}

fn downward_scan(s: &NumericalSemigroup, a: i64) -> (u64, u64, Option<Witness>) {
    let s = Arc::new(s.clone());
    let t = Arc::new(s.remove_generator(a).expect("a is a minimal generator"));
    let family = family_of(&s);
    let au = a as u64;
    // each ideal in T, with I \ {a} when a generates it
    let lifted: Vec<(NormalizedIdeal, Option<NormalizedIdeal>)> = family
        .iter()
        .map(|x| {
            let x = x.reinterpret(&t).expect("ideals of S are ideals of T");
            let deleted = x.remove_minimal_generator(au).ok();
            (x, deleted)
        })
        .collect();
    let n = family.len();
    let results: Vec<(u64, u64, Option<Witness>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let (mut checked, mut skipped, mut witness) = (0, 0, None);
            let Some(i_del) = &lifted[i].1 else {
                return (0, n as u64, None);
            };
            for k in 0..n {
                let j = family.sum_index(i, k);
                let Some(j_del) = &lifted[j].1 else {
                    skipped += 1;
                    continue;
                };
                checked += 1;
                if witness.is_some() {
                    continue;
                }
                let fail = match &lifted[k].1 {
                    None => Some(("a is a minimal generator of K".to_string(), "not a minimal generator".to_string())),
                    Some(k_del) => {
                        let sum = i_del.add(k_del).expect("same ambient");
                        (sum != *j_del).then(|| (j_del.to_string(), sum.to_string()))
                    }
                };
                witness = fail.map(|(expected, actual)| {
                    Witness::new(&t, format!("(I \\ {{{a}}}) + (K \\ {{{a}}}) = J \\ {{{a}}} with I, K, J listed in order"))
                        .ideals([&lifted[i].0, &lifted[k].0, &lifted[j].0])
                        .outcome(expected, actual)
                });
            }
            (checked, skipped, witness)
        })
        .collect();
    let mut total = (0, 0, None);
    for (c, sk, w) in results {
        total.0 += c;
        total.1 += sk;
        if total.2.is_none() {
            total.2 = w;
        }
    }
    total
}

/// [`verify_downward_lemma`] for every semigroup of genus at most
/// `max_genus` and every generator in scope.
pub fn verify_downward_lemma_sweep(max_genus: usize) -> VerificationReport {
    let outcomes = per_generator(max_genus, downward_in_scope, |s, a| downward_scan(s, a).2);
    report(
        "downward-lemma",
        &[("max_genus", max_genus.to_string())],
        outcomes,
    )
}

// ---------------------------------------------------------------------------
// Lattice threshold

/// For every semigroup of genus at most `max_genus`, `(𝔍₀(S), ⪯)` is a
/// lattice exactly when `m(S) <= 4`.
pub fn verify_lattice_threshold(max_genus: usize) -> VerificationReport {
    let semigroups = enumerate_by_genus(max_genus);
    let outcomes: Vec<Outcome> = semigroups
        .into_par_iter()
        .map(|s| {
            let expected = s.multiplicity() <= 4;
            let s = Arc::new(s);
            let order = OrderStructure::build(family_of(&s), OrderKind::Preceq);
            match (expected, order.lattice_failure()) {
                (true, Some(fail)) => {
                    let family = order.family();
                    let (x, y) = fail.pair;
                    let what = match fail.direction {
                        Direction::Upper => "join",
                        Direction::Lower => "meet",
                    };
                    let bounds: Vec<String> = fail
                        .bounds
                        .iter()
                        .map(|&b| family.get(b).to_string())
                        .collect();
                    Outcome::refuted(
                        Witness::new(&s, "the order is a lattice when m <= 4")
                            .ideals([family.get(x), family.get(y)])
                            .outcome(
                                format!("a {what} of the pair"),
                                format!("incomparable bounds {}", bounds.join(" ")),
                            ),
                    )
                }
                (false, None) => Outcome::refuted(
                    Witness::new(&s, "the order is not a lattice when m >= 5")
                        .outcome("a pair without join or meet", "a lattice"),
                ),
                _ => Outcome::checked(1),
            }
        })
        .collect();
    report(
        "lattice-threshold",
        &[("max_genus", max_genus.to_string())],
        outcomes,
    )
}

// ---------------------------------------------------------------------------
// Irreducibility

/// Over every semigroup of genus at most `max_genus` with `m(S) <= 4`:
/// `+`-irreducible implies `∨`-irreducible, `∩`-irreducible implies
/// `∧`-irreducible, and the `∪`-irreducibles are the two-generated ideals
/// together with `S`. When `m(S) = 3`, additionally for every `I ≠ S`: being
/// `+`-, `∨`-, `∪`-irreducible and two-generated are equivalent, and `I` is
/// `+`-irreducible or a join of two `+`-irreducibles.
pub fn verify_irreducibility(max_genus: usize) -> VerificationReport {
    let semigroups = enumerate_by_genus(max_genus);
    let outcomes: Vec<Outcome> = semigroups
        .into_par_iter()
        .map(|s| {
            if s.multiplicity() > 4 {
                return Outcome::skipped(1);
            }
            Outcome::single(check_irreducibility(Arc::new(s)))
        })
        .collect();
    report(
        "irreducibility",
        &[
            ("max_genus", max_genus.to_string()),
            ("multiplicity", "<= 4".to_string()),
        ],
        outcomes,
    )
}

fn check_irreducibility(s: Arc<NumericalSemigroup>) -> Option<Witness> {
    let family = family_of(&s);
    let preceq = OrderStructure::build(family.clone(), OrderKind::Preceq);
    let subset = OrderStructure::build(family.clone(), OrderKind::Subset);
    let n = family.len();
    let mask = |xs: Vec<usize>| {
        let mut v = vec![false; n];
        xs.into_iter().for_each(|x| v[x] = true);
        v
    };
    let (join, meet) = match (preceq.join_irreducibles(), preceq.meet_irreducibles()) {
        (Ok(j), Ok(m)) => (mask(j), mask(m)),
        _ => {
            return Some(
                Witness::new(&s, "the order is a lattice when m <= 4")
                    .outcome("a lattice", "not a lattice"),
            )
        }
    };
    let plus = mask(plus_irreducibles(&family));
    let union = mask(subset.join_irreducibles().expect("inclusion is a lattice"));
    let intersection = mask(subset.meet_irreducibles().expect("inclusion is a lattice"));
    let bottom = family.bottom();
    let mut principal = mask(family.principal_indices());
    let principal_only = principal.clone();
    principal[bottom] = true;
    let flag = |b: bool| if b { "irreducible" } else { "reducible" };

    for x in 0..n {
        let ideal = family.get(x);
        if plus[x] && !join[x] {
            return Some(
                Witness::new(&s, "+-irreducible implies ∨-irreducible")
                    .ideals([ideal])
                    .outcome("∨-irreducible", "∨-reducible"),
            );
        }
        if intersection[x] && !meet[x] {
            return Some(
                Witness::new(&s, "∩-irreducible implies ∧-irreducible")
                    .ideals([ideal])
                    .outcome("∧-irreducible", "∧-reducible"),
            );
        }
        if union[x] != principal[x] {
            return Some(
                Witness::new(&s, "∪-irreducibles are S and the ideals {0, g} + S")
                    .ideals([ideal])
                    .outcome(
                        format!("∪-{}", flag(principal[x])),
                        format!("∪-{}", flag(union[x])),
                    ),
            );
        }
    }
    if s.multiplicity() != 3 {
        return None;
    }
    let t = preceq.tables().expect("checked above");
    let plus_list: Vec<usize> = (0..n).filter(|&x| plus[x]).collect();
    for x in (0..n).filter(|&x| x != bottom) {
        let ideal = family.get(x);
        let flags = [plus[x], join[x], union[x], principal_only[x]];
        if flags.iter().any(|&f| f != flags[0]) {
            return Some(
                Witness::new(
                    &s,
                    "for m = 3 and I ≠ S: +-, ∨-, ∪-irreducible and two-generated agree",
                )
                .ideals([ideal])
                .outcome(
                    "four equal flags",
                    format!(
                        "plus={} join={} union={} two-generated={}",
                        flags[0], flags[1], flags[2], flags[3]
                    ),
                ),
            );
        }
        let decomposes = plus[x]
            || plus_list
                .iter()
                .any(|&p| plus_list.iter().any(|&q| t.join(p, q) == x));
        if !decomposes {
            return Some(
                Witness::new(
                    &s,
                    "for m = 3 and I ≠ S: I is +-irreducible or a join of two +-irreducibles",
                )
                .ideals([ideal])
                .outcome("J ∨ K with J, K +-irreducible", "no such pair"),
            );
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn is_precondition<T>(r: Result<T>) -> bool {
        matches!(r, Err(Error::PreconditionViolated(_)))
    }

    #[test]
    fn unitary_extension_examples() {
        let r = verify_unitary_extension(&NumericalSemigroup::ordinary(4), 5).unwrap();
        assert!(r.passed(), "{r}");
        // 𝔍₀(<4,6,7,9>)
        assert_eq!(r.checked, 12);
        assert!(is_precondition(verify_unitary_extension(
            &sg(&[3, 19, 23]),
            19
        )));
        assert!(is_precondition(verify_unitary_extension(
            &NumericalSemigroup::naturals(),
            1
        )));
        assert!(is_precondition(verify_unitary_extension(&sg(&[4, 9]), 5)));
    }

    #[test]
    fn unitary_extension_below_frobenius() {
        let s = sg(&[3, 19, 23]);
        let found = unitary_extension_deviations(&s, 19).unwrap();
        assert!(!found.is_empty());
        // the ideal containing 19 yet missing from 𝔍₀(S)
        assert!(found.iter().all(|w| w.ideals[0] == vec![0, 7]));
    }

    #[test]
    fn ordinary_extension_examples() {
        for m in 1..=6 {
            let r = verify_ordinary_extension(m).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.checked, 1 << m);
        }
        assert!(is_precondition(verify_ordinary_extension(0)));
    }

    #[test]
    fn downward_lemma_examples() {
        let r = verify_downward_lemma(&sg(&[4, 6, 7, 9]), 9).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!((r.checked, r.skipped), (1, 143));
        assert!(is_precondition(verify_downward_lemma(&sg(&[3, 4, 5]), 3)));
        assert!(is_precondition(verify_downward_lemma(&sg(&[4, 9]), 9)));
    }

    #[test]
    fn downward_lemma_refuted_on_h4() {
        // I = {0,2,3} + H4 is idempotent, and 5 = 2 + 3 reappears in the
        // sum after deleting it from both summands
        let h4 = Arc::new(NumericalSemigroup::ordinary(4));
        let r = verify_downward_lemma(&h4, 5).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.semigroup, vec![4, 6, 7, 9]);
        assert_eq!(w.ideals, vec![vec![1, 0, 0]; 3]);

        let i = NormalizedIdeal::from_generators(&h4, &[0, 2, 3]).unwrap();
        let d = deletion_instance(&h4, 5, &i, &i).unwrap();
        assert_eq!(d.generates, [true, true, true]);
        assert_eq!(d.j, d.i);
        assert!(!d.identity_holds());
        assert_eq!(d.deleted_sum.unwrap().kunz(), &[1, 0, 0]);
        assert_eq!(d.deleted_j.unwrap().kunz(), &[2, 0, 0]);
    }

    #[test]
    fn downward_counterexample_at_the_multiplicity() {
        let s = Arc::new(sg(&[3, 4, 5]));
        let i = NormalizedIdeal::from_generators(&s, &[0, 2]).unwrap();
        let k = NormalizedIdeal::from_generators(&s, &[0, 1]).unwrap();
        let d = deletion_instance(&s, 3, &i, &k).unwrap();
        assert!(d.j.is_naturals());
        assert_eq!(d.generates, [true, true, true]);
        assert!(!d.identity_holds());
        assert_eq!(d.deleted_preceq(3), Some(false));
        assert!(d.deleted_sum.unwrap().is_naturals());
    }

    #[test]
    fn small_sweeps_pass() {
        let r = verify_lattice_threshold(4);
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, 15);
        for r in [
            verify_irreducibility(5),
            verify_unitary_extension_sweep(5),
            verify_ordinary_extension_sweep(5),
        ] {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn report_text() {
        let r = verify_lattice_threshold(1);
        assert_eq!(
            r.to_string(),
            "claim: lattice-threshold\nparameters:\n  max_genus: 1\nstatus: pass\nchecked: 2\nskipped: 0\n"
        );
    }

    #[test]
    fn failure_report_has_witness() {
        let r = report(
            "demo",
            &[],
            [
                Outcome::checked(3),
                Outcome::refuted(Witness::new(&sg(&[2, 3]), "x").outcome(1, 2)),
            ],
        );
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.checked, 4);
        assert!(r.to_string().contains("witness:\n  semigroup: <2,3>\n"));
    }
}
