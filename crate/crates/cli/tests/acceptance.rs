//! The ten acceptance criteria, each with its time bound. One line per
//! criterion is written straight to stderr so it shows without
//! `--nocapture`.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use qdouble::doubling::{double, grouplike_binomial, iso_from_conjugate, verify_isomorphism, DoubledHopf, Tagged};
use qdouble::filtration::{action_faithful_span, sinfty_partition, BlockIndex};
use qdouble::hopf::{center_basis, grouplikes_support_le2, is_grouplike, verify_hopf_axioms};
use qdouble::perm::{conjugate_in_aut, interval, Parity};
use qdouble::tower::{
    connecting_step_check, finsym_check, gamma_embedding_check, nonexistence_scan, padic_map, padic_tower,
    partition_tower_check, reflection_obstruction,
};
use qdouble::{Elem, FiniteGroup, GroupAlgebra, GroupAutomorphism, HopfAlgebra, Report, Scalar, Status, Vector};
use qdouble_cli::{load_manifest, run_manifest};

fn cyclic(l: u64) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(l).unwrap())
}

fn symmetric(n: i64) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::symmetric(interval(1, n)).unwrap())
}

fn doubled(g: &Arc<FiniteGroup>, theta: &GroupAutomorphism) -> DoubledHopf {
    double(&GroupAlgebra::new(g.clone()), theta).unwrap()
}

fn all_pass(r: &Report, what: &str) {
    for e in &r.entries {
        assert_eq!(e.status, Status::Pass, "{what}: {e}");
    }
}

fn has_passing(r: &Report, check: &str) {
    assert!(
        r.entries.iter().any(|e| e.check == check && e.status == Status::Pass),
        "no passing `{check}` in\n{r}"
    );
}

/// Doublings used by criteria 1 and 8.
fn standard_doublings() -> Vec<DoubledHopf> {
    let mut out = Vec::new();
    for l in 2..=12 {
        let g = cyclic(l);
        out.push(doubled(&g, &GroupAutomorphism::inverse(&g).unwrap()));
    }
    for n in 2..=5 {
        let g = symmetric(n);
        out.push(doubled(&g, &GroupAutomorphism::flip(&g).unwrap()));
    }
    out
}

fn criterion_1() {
    for l in 2..=12 {
        all_pass(&verify_hopf_axioms(&GroupAlgebra::new(cyclic(l))), &format!("C[Z/{l}]"));
    }
    for n in 2..=5 {
        all_pass(&verify_hopf_axioms(&GroupAlgebra::new(symmetric(n))), &format!("C[S{n}]"));
    }
    for d in standard_doublings() {
        let r = verify_hopf_axioms(&d);
        assert_eq!(r.entries.len(), 7);
        all_pass(&r, &format!("doubling of C[{}]", d.group().name()));
    }
}

fn criterion_2() {
    for l in [3u64, 5, 6, 7, 8] {
        all_pass(&finsym_check(l).unwrap(), &format!("finsym l={l}"));

        // oracle: the formulas written out on basis labels, B* = η(λ_{l−1})
        let g = cyclic(l);
        let d = doubled(&g, &GroupAutomorphism::inverse(&g).unwrap());
        let (one, last) = (Elem(1), Elem((l - 1) as u32));
        let t = |pairs: &[(Tagged, Tagged)]| Vector::from_terms(pairs.iter().map(|&p| (p, Scalar::ONE)));
        use Tagged::{Eta, Xi};
        assert_eq!(
            d.comul(&Vector::basis(Xi(one))),
            t(&[(Xi(one), Xi(one)), (Eta(one), Eta(last))])
        );
        assert_eq!(
            d.comul(&Vector::basis(Eta(one))),
            t(&[(Xi(one), Eta(one)), (Eta(one), Xi(last))])
        );
        let alpha = d.coaction().apply(&Vector::basis(one));
        let want = Vector::from_terms([((one, Xi(one)), Scalar::ONE), ((last, Eta(last)), Scalar::ONE)]);
        assert_eq!(alpha, want);
        for x in d.basis() {
            for y in d.basis() {
                assert_eq!(d.mul_basis(&x, &y), d.mul_basis(&y, &x));
            }
        }
    }
}

fn criterion_3() {
    for p in [2u64, 3, 5] {
        let tower = padic_tower(p, 3).unwrap();
        let r = tower.verify().unwrap();
        assert!(!r.any_failed(), "p={p}: {r}");
        for check in [
            "rho injective",
            "group map equivariant",
            "extension preserves equivariant hopf morphisms",
            "equal word length preserved",
            "coaction intertwining",
            "triple compatibility",
        ] {
            has_passing(&r, check);
        }
        // oracle: word length on ℤ/q for {±1} is min(x, q − x)
        for n in 1..3u32 {
            let (q, q2) = (p.pow(n), p.pow(n + 1));
            let f = padic_map(p, n, n + 1);
            let len = |x: u64, m: u64| x.min(m - x);
            for a in 0..q {
                for b in 0..q {
                    if len(a, q) == len(b, q) {
                        assert_eq!(len(f[a as usize].0 as u64, q2), len(f[b as usize].0 as u64, q2));
                    }
                }
            }
        }
    }
}

fn criterion_4() {
    let pm = [-Scalar::ONE, Scalar::ONE];
    let samples = [Scalar::ONE, -Scalar::ONE, Scalar::I, -Scalar::I, Scalar::from_integer(2)];
    for n in [4usize, 6] {
        let scan = nonexistence_scan(n).unwrap();
        assert_eq!(scan.scans.len(), n);
        for (k, s) in scan.scans.iter().enumerate() {
            assert!(s.is_empty(), "n={n}, k={}: {:?}", k + 1, s.solutions);
        }
        for (k, s) in scan.control.iter().enumerate() {
            let k = k + 1;
            if k == n / 2 {
                assert_eq!(s.finite(), Some(&pm[..]), "control k={k}");
            } else {
                assert!(s.is_empty(), "control k={k}: {:?}", s.solutions);
            }
        }
        assert!(!scan.report().any_failed());

        // oracle: direct group-like test on sample μ in the larger doubling
        let g = symmetric(n as i64 + 1);
        let d = doubled(&g, &GroupAutomorphism::flip(&g).unwrap());
        for k in 1..=n {
            let s = g.adjacent_transposition(k).unwrap();
            for mu in &samples {
                let x = Vector::from_terms([(Tagged::Xi(s), Scalar::ONE), (Tagged::Eta(s), mu.clone())]);
                assert!(!is_grouplike(&d, &x));
            }
        }
    }
    let g = symmetric(4);
    let d = doubled(&g, &GroupAutomorphism::flip(&g).unwrap());
    let s2 = g.adjacent_transposition(2).unwrap();
    for mu in &pm {
        let x = Vector::from_terms([(Tagged::Xi(s2), Scalar::ONE), (Tagged::Eta(s2), mu.clone())]);
        assert!(is_grouplike(&d, &x));
    }
    assert!(grouplike_binomial(&d, s2, s2).witness.is_none());
}

fn criterion_5() {
    let z3 = cyclic(3);
    let z5 = cyclic(5);
    let s3 = symmetric(3);
    let s4 = symmetric(4);
    let cases = [
        (doubled(&z3, &GroupAutomorphism::inverse(&z3).unwrap()), 6),
        (doubled(&z5, &GroupAutomorphism::inverse(&z5).unwrap()), 10),
        (doubled(&s3, &GroupAutomorphism::flip(&s3).unwrap()), 12),
        (doubled(&s4, &GroupAutomorphism::flip(&s4).unwrap()), 48),
        (doubled(&z3, &GroupAutomorphism::identity(&z3)), 3),
    ];
    for (d, want) in cases {
        let f = action_faithful_span(&d);
        assert_eq!(f.generated, want, "{}", d.group().name());
        assert_eq!(f.faithful(), d.theta_moves_generator());
        assert_eq!(d.theta_nontrivial(), d.theta_moves_generator());
    }
}

fn criterion_6() {
    for n in 2..=4 {
        let r = connecting_step_check(n).unwrap();
        all_pass(&r, &format!("connecting step n={n}"));
        for check in [
            "coaction intertwining",
            "group map equivariant",
            "length one preserved",
            "phi shifts generators",
            "extension preserves equivariant hopf morphisms",
        ] {
            has_passing(&r, check);
        }
    }
    for k in 1..=2 {
        let r = gamma_embedding_check(k).unwrap();
        all_pass(&r, &format!("gamma k={k}"));
        let neg = r.find("gamma does not preserve length one").unwrap();
        assert!(neg.note.as_deref().unwrap().ends_with("of length 3"), "{neg}");
    }
}

fn criterion_7() {
    for mode in [Parity::Odd, Parity::Even] {
        for n in 1..=3 {
            let r = partition_tower_check(mode, n).unwrap();
            assert!(!r.any_failed(), "{mode:?} n={n}: {r}");
            has_passing(&r, "reflection preserves every block");
            has_passing(&r, "blocks disjoint, covering, identity singleton");
        }
    }
    // oracle sizes from direct enumeration
    let odd = sinfty_partition(Parity::Odd, 1).unwrap();
    assert_eq!(odd.block(BlockIndex::Pair(1, 1)).unwrap().len(), 3);
    let even = sinfty_partition(Parity::Even, 1).unwrap();
    assert_eq!(even.block(BlockIndex::Pair(1, 1)).unwrap().len(), 1);
    for n in 1..=3 {
        let (data, r) = reflection_obstruction(n).unwrap();
        assert_eq!((data.odd_fixed, data.even_fixed), (1, 0));
        all_pass(&r, "obstruction");
    }
}

fn criterion_8() {
    for d in standard_doublings() {
        assert!(d.check_central_projections().passed());
        let (p1, p2) = (d.p1(), d.p2());
        assert_eq!(d.comul(&p1), &p1.tensor(&p1) + &p2.tensor(&p2));
    }
    // oracle: number of conjugacy classes by brute-force orbit count
    for (n, want) in [(3, 3), (4, 5)] {
        let g = symmetric(n);
        let mut seen = BTreeSet::new();
        let mut classes = 0;
        for x in g.elements() {
            if seen.insert(x) {
                classes += 1;
                for h in g.elements() {
                    seen.insert(g.mul(h, g.mul(x, g.inv(h))));
                }
            }
        }
        assert_eq!(classes, want);
        assert_eq!(center_basis(&GroupAlgebra::new(g)).len(), want);
    }
    let g = symmetric(3);
    let a = GroupAlgebra::new(g.clone());
    let t1 = GroupAutomorphism::inner(&g, g.adjacent_transposition(1).unwrap());
    let t2 = GroupAutomorphism::inner(&g, g.adjacent_transposition(2).unwrap());
    let (d1, d2) = (double(&a, &t1).unwrap(), double(&a, &t2).unwrap());
    let c = conjugate_in_aut(&g, &t1, &t2).unwrap().expect("conjugate");
    let phi = iso_from_conjugate(&d1, &d2, &c).unwrap();
    let r = verify_isomorphism(&d1, &d2, &phi);
    assert!(!r.entries.is_empty());
    all_pass(&r, "S3 isomorphism");
}

fn criterion_9() {
    let mut groups: Vec<Arc<FiniteGroup>> = (1..=24).map(cyclic).collect();
    groups.extend((1..=4).map(symmetric));
    for g in groups {
        let a = GroupAlgebra::new(g.clone());
        let found = grouplikes_support_le2(&a);
        let elems: BTreeSet<Elem> = found
            .iter()
            .map(|v| {
                assert_eq!(v, &Vector::basis(*v.labels().next().unwrap()), "{}", g.name());
                *v.labels().next().unwrap()
            })
            .collect();
        assert_eq!(found.len(), g.order(), "{}", g.name());
        assert_eq!(elems, g.elements().collect::<BTreeSet<_>>(), "{}", g.name());
    }
}

fn criterion_10() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("manifests/full.json");
    let m = load_manifest(&path).unwrap();
    let first = run_manifest(&m).unwrap();
    let second = run_manifest(&m).unwrap();
    assert!(!first.any_failed());
    assert!(first.entries.len() > 500);
    assert_eq!(first.body(), second.body());
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn(), u64); 10] = [
        ("hopf axioms for group algebras and doublings", criterion_1, 60),
        ("doubled cyclic group formulas", criterion_2, 5),
        ("p-adic tower", criterion_3, 120),
        ("binomial group-like non-existence", criterion_4, 60),
        ("faithfulness dichotomy", criterion_5, 30),
        ("symmetric connecting maps and gamma", criterion_6, 60),
        ("partitions and reflection obstruction", criterion_7, 30),
        ("central projections, centers, isomorphism", criterion_8, 30),
        ("group-like classification", criterion_9, 30),
        ("deterministic manifest reports", criterion_10, 600),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f));
        let took = start.elapsed();
        let within = took <= Duration::from_secs(*limit);
        let ok = outcome.is_ok() && within;
        let _ = writeln!(
            err,
            "criterion {:2} {}: {} ({:.2}s, limit {}s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            name,
            took.as_secs_f64(),
            limit
        );
        if !ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
