//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p ideal-lattice-cli --test acceptance`.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use ideal_lattice::ideal::{preceq_kunz, sum_kunz, sum_kunz_ordinary};
use ideal_lattice::verify::{
    deletion_instance, verify_downward_lemma_sweep, verify_irreducibility,
    verify_lattice_threshold, verify_ordinary_extension, verify_unitary_extension_sweep,
};
use ideal_lattice::{
    antichain_count, enumerate_by_genus, irreducibles, Direction, IdealFamily, IrreducibleKind,
    NormalizedIdeal, NumericalSemigroup, OrderKind, OrderStructure, SublatticeShape,
};

/// Pass/fail of one criterion, with a reason on failure.
type Verdict = Result<(), String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Verdict,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sg(gens: &[u32]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
}

fn ideal(s: &Arc<NumericalSemigroup>, xs: &[i64]) -> NormalizedIdeal {
    NormalizedIdeal::from_generators(s, xs).unwrap()
}

/// Membership of `I` on `[0, bound)`.
fn members(i: &NormalizedIdeal, bound: usize) -> Vec<bool> {
    (0..bound as i64).map(|n| i.contains(n)).collect()
}

/// `{x + y : x ∈ I, y ∈ J}` on `[0, bound)`, straight from the definition.
fn convolution(i: &[bool], j: &[bool]) -> Vec<bool> {
    let bound = i.len();
    (0..bound)
        .map(|z| (0..=z).any(|x| i[x] && j[z - x]))
        .collect()
}

fn cardinality_of_ordinary_families() -> Verdict {
    for m in 1..=8u32 {
        let h = Arc::new(NumericalSemigroup::ordinary(m));
        let n = IdealFamily::enumerate(&h).len();
        check(n == 1 << (m - 1), || format!("H_{m}: {n} ideals"))?;
    }
    Ok(())
}

fn listing_of_three_nineteen_twentythree() -> Verdict {
    let out = Command::new(env!("CARGO_BIN_EXE_icm"))
        .args(["ideals", "3", "19", "23"])
        .output()
        .map_err(|e| e.to_string())?;
    let printed: BTreeSet<String> = String::from_utf8(out.stdout)
        .map_err(|e| e.to_string())?
        .lines()
        .map(str::to_string)
        .collect();
    let mut expected: BTreeSet<String> = ["(0,6)", "(1,7)"].map(String::from).into();
    expected.extend((0..=7).map(|x| format!("(6,{x})")));
    check(printed == expected, || {
        let extra = printed.difference(&expected).count();
        let missing: Vec<&String> = expected.difference(&printed).collect();
        format!(
            "printed {} tuples; {extra} not among the expected 10, missing {missing:?}",
            printed.len()
        )
    })
}

fn antichain_cross_check() -> Verdict {
    for s in enumerate_by_genus(10) {
        let family = IdealFamily::enumerate(&Arc::new(s.clone())).len() as u64;
        let antichains = antichain_count(&s);
        check(family == antichains, || {
            format!("{s}: {family} ideals, {antichains} antichains")
        })?;
    }
    Ok(())
}

fn kunz_sum_oracle() -> Verdict {
    for s in enumerate_by_genus(8) {
        let s = Arc::new(s);
        let m = s.multiplicity() as usize;
        let bound = s.conductor() as usize + m;
        let family = IdealFamily::enumerate(&s);
        let sets: Vec<Vec<bool>> = family.iter().map(|i| members(i, bound)).collect();
        for (a, x) in family.iter().enumerate() {
            for (b, y) in family.iter().enumerate().skip(a) {
                let z = sum_kunz(m, x.kunz(), y.kunz());
                let by_kunz = members(&NormalizedIdeal::from_kunz(&s, z.clone()).unwrap(), bound);
                let oracle = convolution(&sets[a], &sets[b]);
                check(by_kunz == oracle, || format!("{s}: {x} + {y}"))?;
                if s.is_ordinary() {
                    let simple = sum_kunz_ordinary(x.kunz(), y.kunz());
                    check(simple == z, || format!("{s}: ordinary sum of {x} and {y}"))?;
                }
            }
        }
    }
    Ok(())
}

fn joins_of_four_nine() -> Verdict {
    let s = sg(&[4, 9]);
    let family = Arc::new(IdealFamily::enumerate(&s));
    let order = OrderStructure::build(family.clone(), OrderKind::Preceq);
    let idx = |xs: &[i64]| family.index_of(&ideal(&s, xs)).unwrap();
    let join = |a: usize, b: usize| order.join(a, b).ok_or("no join".to_string());

    let (a, b) = (idx(&[0, 1, 2]), idx(&[0, 1, 6, 7]));
    let j = join(a, b)?;
    check(
        j == family.union_index(a, b) && j != family.sum_index(a, b),
        || "({0,1,2}, {0,1,6,7}): join should equal the union and differ from the sum".to_string(),
    )?;

    let b = idx(&[0, 2, 5]);
    let j = join(a, b)?;
    check(
        j == family.sum_index(a, b) && j == family.top() && j != family.union_index(a, b),
        || "({0,1,2}, {0,2,5}): join should be the sum N and differ from the union".to_string(),
    )?;

    let b = idx(&[0, 1, 6]);
    let j = join(a, b)?;
    check(
        j == idx(&[0, 1, 2, 7]) && j != family.sum_index(a, b) && j != family.union_index(a, b),
        || format!("({{0,1,2}}, {{0,1,6}}): join is {}", family.get(j)),
    )
}

fn h5_has_no_join() -> Verdict {
    let h5 = Arc::new(NumericalSemigroup::ordinary(5));
    let family = Arc::new(IdealFamily::enumerate(&h5));
    let order = OrderStructure::build(family.clone(), OrderKind::Preceq);
    let idx = |xs: &[i64]| family.index_of(&ideal(&h5, xs)).unwrap();
    let (a, b) = (idx(&[0, 1]), idx(&[0, 1, 3]));
    let mut bounds = order.minimal_bounds(a, b, Direction::Upper);
    bounds.sort_unstable();
    let mut expected = vec![idx(&[0, 1, 2, 3]), idx(&[0, 1, 3, 4])];
    expected.sort_unstable();
    check(bounds == expected, || {
        format!("minimal upper bounds {bounds:?}")
    })?;
    check(order.join(a, b).is_none(), || "a join exists".to_string())
}

fn lattice_threshold() -> Verdict {
    let start = Instant::now();
    let r7 = verify_lattice_threshold(7);
    let t7 = start.elapsed();
    check(r7.passed(), || r7.to_string())?;
    check(t7 < secs(30), || format!("genus 7 took {t7:.1?}"))?;
    let r9 = verify_lattice_threshold(9);
    check(r9.passed(), || r9.to_string())
}

fn pentagons() -> Verdict {
    let cases: [(Arc<NumericalSemigroup>, [&[i64]; 5]); 2] = [
        (
            Arc::new(NumericalSemigroup::ordinary(4)),
            [&[0], &[0, 3], &[0, 2, 3], &[0, 1, 2], &[0, 1, 2, 3]],
        ),
        (
            sg(&[3, 7, 8]),
            [&[0], &[0, 4], &[0, 4, 5], &[0, 1, 5], &[0, 1]],
        ),
    ];
    for (s, gens) in cases {
        let family = Arc::new(IdealFamily::enumerate(&s));
        let order = OrderStructure::build(family.clone(), OrderKind::Preceq);
        let elements = gens.map(|xs| family.index_of(&ideal(&s, xs)).unwrap());
        let shape = order.sublattice_shape(elements).map(|w| w.shape);
        check(shape == Some(SublatticeShape::Pentagon), || {
            format!("{s}: shape {shape:?}")
        })?;
    }
    Ok(())
}

fn irreducibility_suite() -> Verdict {
    let r = verify_irreducibility(8);
    check(r.passed(), || r.to_string())?;

    let s = sg(&[4, 7, 9]);
    let family = Arc::new(IdealFamily::enumerate(&s));
    let i = family.index_of(&ideal(&s, &[0, 1, 2])).unwrap();
    let join = irreducibles(&family, IrreducibleKind::Join).map_err(|e| e.to_string())?;
    let plus = irreducibles(&family, IrreducibleKind::Plus).map_err(|e| e.to_string())?;
    check(join.contains(&i) && !plus.contains(&i), || {
        "<4,7,9>: {0,1,2} should be join- but not plus-irreducible".to_string()
    })?;

    let s = sg(&[3, 7]);
    let family = Arc::new(IdealFamily::enumerate(&s));
    let i = family.index_of(&ideal(&s, &[0, 4, 8])).unwrap();
    let meet = irreducibles(&family, IrreducibleKind::Meet).map_err(|e| e.to_string())?;
    let cap = irreducibles(&family, IrreducibleKind::Intersection).map_err(|e| e.to_string())?;
    check(meet.contains(&i) && !cap.contains(&i), || {
        "<3,7>: {0,4,8} should be meet- but not intersection-irreducible".to_string()
    })
}

fn extension_sweeps() -> Verdict {
    let unitary = verify_unitary_extension_sweep(7);
    check(unitary.passed(), || unitary.to_string())?;
    for m in 1..=7 {
        let r = verify_ordinary_extension(m).map_err(|e| e.to_string())?;
        check(r.passed(), || r.to_string())?;
    }

    let s = sg(&[3, 4, 5]);
    let (i, k) = (ideal(&s, &[0, 2]), ideal(&s, &[0, 1]));
    let d = deletion_instance(&s, 3, &i, &k).map_err(|e| e.to_string())?;
    check(d.j.is_naturals(), || "I + K should be N".to_string())?;
    check(d.generates == [true, true, true], || {
        format!("3 generates I, K, J: {:?}", d.generates)
    })?;
    check(
        !d.identity_holds() && d.deleted_preceq(3) == Some(false),
        || "(I \\ {3}) + (K \\ {3}) should differ from J \\ {3}".to_string(),
    )?;

    let downward = verify_downward_lemma_sweep(7);
    check(downward.passed(), || {
        format!("downward deletion sweep refuted\n{downward}")
    })
}

fn residual_order_matches_definition() -> Verdict {
    for s in enumerate_by_genus(7) {
        let s = Arc::new(s);
        let m = s.multiplicity() as usize;
        let family = IdealFamily::enumerate(&s);
        let n = family.len();
        // I ⪯ J iff J = I + K for some K in the family
        let mut oracle = vec![false; n * n];
        for a in 0..n {
            for k in 0..n {
                oracle[a * n + family.sum_index(a, k)] = true;
            }
        }
        for (a, x) in family.iter().enumerate() {
            for (b, y) in family.iter().enumerate() {
                let fast = preceq_kunz(m, x.kunz(), y.kunz());
                check(fast == oracle[a * n + b], || format!("{s}: {x} vs {y}"))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "ideal families of H_m have 2^(m-1) members, m = 1..8",
            limit: secs(1),
            run: cardinality_of_ordinary_families,
        },
        Criterion {
            id: 2,
            name: "`ideals 3 19 23` prints exactly the 10 listed tuples",
            limit: secs(1),
            run: listing_of_three_nineteen_twentythree,
        },
        Criterion {
            id: 3,
            name: "family size equals gap antichain count, genus <= 10",
            limit: secs(60),
            run: antichain_cross_check,
        },
        Criterion {
            id: 4,
            name: "Kunz sum matches set convolution, genus <= 8",
            limit: secs(120),
            run: kunz_sum_oracle,
        },
        Criterion {
            id: 5,
            name: "join, sum and union on <4,9>",
            limit: secs(1),
            run: joins_of_four_nine,
        },
        Criterion {
            id: 6,
            name: "({0,1}, {0,1,3}) has no join in H_5",
            limit: secs(1),
            run: h5_has_no_join,
        },
        Criterion {
            id: 7,
            name: "lattice iff multiplicity <= 4, genus <= 9",
            limit: secs(600),
            run: lattice_threshold,
        },
        Criterion {
            id: 8,
            name: "pentagon sublattices for H_4 and <3,7,8>",
            limit: secs(1),
            run: pentagons,
        },
        Criterion {
            id: 9,
            name: "irreducibility implications, genus <= 8",
            limit: secs(300),
            run: irreducibility_suite,
        },
        Criterion {
            id: 10,
            name: "generator removal and deletion sweeps, genus <= 7",
            limit: secs(300),
            run: extension_sweeps,
        },
        Criterion {
            id: 11,
            name: "residual order equals the existential definition, genus <= 7",
            limit: secs(120),
            run: residual_order_matches_definition,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let verdict = (c.run)();
        let elapsed = start.elapsed();
        let verdict = verdict.and_then(|()| {
            check(elapsed <= c.limit, || {
                format!("took {elapsed:.2?}, limit {:?}", c.limit)
            })
        });
        let tag = if verdict.is_ok() { "PASS" } else { "FAIL" };
        println!(
            "{tag} {:>2}  {}  ({elapsed:.2?}, limit {:?})",
            c.id, c.name, c.limit
        );
        if let Err(reason) = verdict {
            failed += 1;
            for line in reason.lines() {
                println!("         {line}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
