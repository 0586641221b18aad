//! Every fast path checked against a brute-force computation on explicit
//! sets of small integers.

use std::sync::Arc;

use ideal_lattice::ideal::sum_kunz;
use ideal_lattice::{
    enumerate_by_genus, IdealFamily, NormalizedIdeal, NumericalSemigroup, OrderKind, OrderStructure,
};

/// Membership of `0..bound` in the submonoid generated by `gens`.
fn generated(gens: &[u32], bound: usize) -> Vec<bool> {
    let mut member = vec![false; bound];
    member[0] = true;
    for n in 1..bound {
        member[n] = gens
            .iter()
            .any(|&g| g as usize <= n && member[n - g as usize]);
    }
    member
}

fn members(i: &NormalizedIdeal, bound: usize) -> Vec<bool> {
    (0..bound as i64).map(|n| i.contains(n)).collect()
}

fn convolution(i: &[bool], j: &[bool]) -> Vec<bool> {
    (0..i.len())
        .map(|z| (0..=z).any(|x| i[x] && j[z - x]))
        .collect()
}

/// A window wide enough that everything from the conductor on is determined.
fn window(s: &NumericalSemigroup) -> usize {
    2 * s.conductor() as usize + 2 * s.multiplicity() as usize + 2
}

#[test]
fn semigroup_invariants_match_a_sieve() {
    for s in enumerate_by_genus(9) {
        let bound = window(&s);
        let member = generated(s.generators(), bound);
        let gaps: Vec<u32> = (0..bound as u32).filter(|&n| !member[n as usize]).collect();
        assert_eq!(s.gaps(), gaps.as_slice(), "{s}");
        assert_eq!(s.frobenius(), gaps.last().map_or(-1, |&g| g as i64));
        let m = (1..bound).find(|&n| member[n]).unwrap();
        assert_eq!(s.multiplicity() as usize, m);
        for r in 1..m {
            let w = (0..).map(|q| q * m + r).find(|&n| member[n]).unwrap();
            assert_eq!(s.kunz()[r - 1] as usize, w / m, "{s}");
        }
        // minimal generators: nonzero elements not a sum of two nonzero elements
        let minimal: Vec<u32> = (1..bound)
            .filter(|&n| member[n] && !(1..n).any(|a| member[a] && member[n - a]))
            .map(|n| n as u32)
            .collect();
        assert_eq!(s.generators(), minimal.as_slice(), "{s}");
    }
}

#[test]
fn families_match_subsets_of_gaps() {
    for s in enumerate_by_genus(8) {
        let s = Arc::new(s);
        let bound = window(&s);
        let member = generated(s.generators(), bound);
        let gaps = s.gaps();
        let mut expected: Vec<Vec<bool>> = Vec::new();
        for mask in 0u32..1 << gaps.len() {
            let mut set = member.clone();
            for (b, &g) in gaps.iter().enumerate() {
                if mask & 1 << b != 0 {
                    set[g as usize] = true;
                }
            }
            // closed under adding elements of S
            let closed =
                (0..bound).all(|x| !set[x] || (0..bound - x).all(|t| !member[t] || set[x + t]));
            if closed {
                expected.push(set);
            }
        }
        let family = IdealFamily::enumerate(&s);
        let mut found: Vec<Vec<bool>> = family.iter().map(|i| members(i, bound)).collect();
        expected.sort();
        found.sort();
        assert_eq!(found, expected, "{s}");
    }
}

#[test]
fn ideal_invariants_match_sets() {
    for s in enumerate_by_genus(6) {
        let s = Arc::new(s);
        let bound = window(&s);
        let member = generated(s.generators(), bound);
        for i in IdealFamily::enumerate(&s).iter() {
            let set = members(i, bound);
            let holes: Vec<usize> = (0..bound).filter(|&n| !set[n]).collect();
            assert_eq!(i.genus() as usize, holes.len());
            assert_eq!(i.frobenius(), holes.last().map_or(-1, |&h| h as i64));
            let minimal: Vec<u64> = (0..bound)
                .filter(|&x| set[x] && !(0..x).any(|y| set[y] && member[x - y]))
                .map(|x| x as u64)
                .collect();
            assert_eq!(i.minimal_generators(), minimal, "{s} {i}");
            for &x in minimal.iter().skip(1) {
                let smaller = i.remove_minimal_generator(x).unwrap();
                let mut expected = set.clone();
                expected[x as usize] = false;
                assert_eq!(members(&smaller, bound), expected);
            }
        }
    }
}

#[test]
fn set_operations_match_sets() {
    for s in enumerate_by_genus(6) {
        let s = Arc::new(s);
        let bound = window(&s);
        let family = IdealFamily::enumerate(&s);
        let sets: Vec<Vec<bool>> = family.iter().map(|i| members(i, bound)).collect();
        for (a, x) in family.iter().enumerate() {
            for (b, y) in family.iter().enumerate() {
                let union: Vec<bool> = (0..bound).map(|n| sets[a][n] || sets[b][n]).collect();
                let inter: Vec<bool> = (0..bound).map(|n| sets[a][n] && sets[b][n]).collect();
                assert_eq!(members(&x.union(y).unwrap(), bound), union);
                assert_eq!(members(&x.intersection(y).unwrap(), bound), inter);
                assert_eq!(
                    members(&x.add(y).unwrap(), bound),
                    convolution(&sets[a], &sets[b])
                );
                let subset = (0..bound).all(|n| !sets[a][n] || sets[b][n]);
                assert_eq!(x.is_subset(y).unwrap(), subset);
            }
        }
    }
}

#[test]
fn residual_matches_a_scan() {
    for s in enumerate_by_genus(6) {
        let s = Arc::new(s);
        let bound = window(&s);
        let family = IdealFamily::enumerate(&s);
        let sets: Vec<Vec<bool>> = family.iter().map(|i| members(i, bound)).collect();
        let half = bound / 2;
        for (a, i) in family.iter().enumerate() {
            for (b, j) in family.iter().enumerate() {
                // z ∈ J - I iff z + x ∈ J for every x ∈ I; elements of I past
                // the window all land at or beyond the conductor of J
                let r = j.residual(i).unwrap();
                for z in -(half as i64)..half as i64 {
                    let inside = (0..half).all(|x| {
                        let t = z + x as i64;
                        !sets[a][x] || (t >= 0 && sets[b][t as usize])
                    });
                    assert_eq!(r.contains(z), inside, "{s}: {j} - {i} at {z}");
                }
                assert_eq!(r.is_normalized(), i.is_subset(j).unwrap());
            }
        }
    }
}

#[test]
fn preceq_matches_an_existential_scan_on_sets() {
    for s in enumerate_by_genus(5) {
        let s = Arc::new(s);
        let bound = window(&s);
        let family = Arc::new(IdealFamily::enumerate(&s));
        let sets: Vec<Vec<bool>> = family.iter().map(|i| members(i, bound)).collect();
        let order = OrderStructure::build(family.clone(), OrderKind::Preceq);
        for a in 0..family.len() {
            for b in 0..family.len() {
                let exists = sets.iter().any(|k| convolution(&sets[a], k) == sets[b]);
                assert_eq!(order.leq(a, b), exists, "{s}");
            }
        }
    }
}

#[test]
fn bounds_match_a_scan_of_all_upper_bounds() {
    for gens in [&[4, 9][..], &[5, 6, 7, 8, 9], &[3, 7, 8], &[5, 7, 9]] {
        let s = Arc::new(NumericalSemigroup::from_generators(gens).unwrap());
        let family = Arc::new(IdealFamily::enumerate(&s));
        let order = OrderStructure::build(family.clone(), OrderKind::Preceq);
        let m = s.multiplicity() as usize;
        let n = family.len();
        let leq = |a: usize, b: usize| {
            (0..n).any(|k| {
                sum_kunz(m, family.get(a).kunz(), family.get(k).kunz()) == family.get(b).kunz()
            })
        };
        for a in 0..n {
            for b in 0..n {
                let upper: Vec<usize> = (0..n).filter(|&u| leq(a, u) && leq(b, u)).collect();
                let mut minimal: Vec<usize> = upper
                    .iter()
                    .copied()
                    .filter(|&u| !upper.iter().any(|&v| v != u && leq(v, u)))
                    .collect();
                minimal.sort_unstable();
                let mut found = order.minimal_bounds(a, b, ideal_lattice::Direction::Upper);
                found.sort_unstable();
                assert_eq!(found, minimal, "{s}");
                let join = (minimal.len() == 1).then(|| minimal[0]);
                assert_eq!(order.join(a, b), join);
            }
        }
    }
}

#[test]
fn generator_removal_matches_sets() {
    for s in enumerate_by_genus(7) {
        let bound = window(&s) + 8;
        let member = generated(s.generators(), bound);
        for &a in s.generators() {
            let t = s.remove_generator(a as i64).unwrap();
            for (n, &inside) in member.iter().enumerate() {
                assert_eq!(
                    t.contains(n as i64),
                    inside && n != a as usize,
                    "{s} minus {a}"
                );
            }
        }
        if let Some(p) = s.parent() {
            let f = s.frobenius() as usize;
            for (n, &inside) in member.iter().enumerate() {
                assert_eq!(p.contains(n as i64), inside || n == f);
            }
        }
    }
}

#[test]
fn reinterpretation_preserves_the_set() {
    for s in enumerate_by_genus(6) {
        let s = Arc::new(s);
        for &a in s.generators() {
            let t = Arc::new(s.remove_generator(a as i64).unwrap());
            let bound = window(&t);
            for i in IdealFamily::enumerate(&s).iter() {
                let j = i.reinterpret(&t).unwrap();
                assert_eq!(members(&j, bound), members(i, bound));
                assert_eq!(j.reinterpret(&s).unwrap(), *i);
            }
        }
    }
}
