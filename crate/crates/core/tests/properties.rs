use std::collections::{BTreeMap, HashSet};

use proptest::prelude::*;

use dualeq::graph::{build_graph_from_family, check_axioms, classify, standard_graph};
use dualeq::involutions::{
    check_strong_dual_equivalence, combined_d, d_on_filling, elementary_d, permutation_family, permutations,
    standard_family, twisted_d,
};
use dualeq::llt::{attacking_family, attacking_vectors, d_family, diagonal_data, foata, inv, maj, twisted_classes};
use dualeq::symfunc::{extract_schur, SchurExpansion};
use dualeq::tableaux::{enumerate_standard, syt};
use dualeq::{Integer, Partition, Signature, TupleShape};

fn word(n: usize) -> impl Strategy<Value = Vec<u8>> {
    Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle()
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..5, 1..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn straight_tuples(max_size: usize, max_k: usize) -> Vec<TupleShape> {
    (1..=max_k).flat_map(|k| (1..=max_size).flat_map(move |n| TupleShape::all_straight(k, n))).collect()
}

proptest! {
    #[test]
    fn foata_transports_maj_to_inv(w in (1usize..11).prop_flat_map(word)) {
        let f = foata(&w);
        prop_assert_eq!(inv(&f), maj(&w));
        prop_assert_eq!(f.last(), w.last());
        prop_assert_eq!(Signature::of_word(&f), Signature::of_word(&w));
    }

    #[test]
    fn involutions_are_involutions(w in (3usize..10).prop_flat_map(word), i in 2usize..9) {
        prop_assume!(i < w.len());
        let d = elementary_d(i, &w).unwrap();
        prop_assert_eq!(elementary_d(i, &d).unwrap(), w.clone());
        let t = twisted_d(i, &w).unwrap();
        prop_assert_eq!(twisted_d(i, &t).unwrap(), w.clone());
        // the pair {i-1, i+1} is never moved relative to the other letters by d
        let others = |v: &[u8]| v.iter().copied().filter(|&x| (x as usize) < i - 1 || x as usize > i + 1).collect::<Vec<_>>();
        prop_assert_eq!(others(&d), others(&w));
    }

    #[test]
    fn conjugation_negates_signatures(p in partition()) {
        let q = p.conjugate();
        let flipped: HashSet<String> = syt(&p).iter().map(|t| t.transpose().unwrap().to_string()).collect();
        let direct: HashSet<String> = syt(&q).iter().map(|t| t.to_string()).collect();
        prop_assert_eq!(&flipped, &direct);
        for t in syt(&p).iter().take(40) {
            let tt = t.transpose().unwrap();
            prop_assert_eq!(tt.signature(), t.signature().negate());
            for i in 2..p.size() {
                prop_assert_eq!(d_on_filling(i, t).unwrap().transpose().unwrap(), d_on_filling(i, &tt).unwrap());
            }
        }
    }
}

#[test]
fn family_graph_equals_standard_graph() {
    for p in Partition::all_up_to(7) {
        let fam = standard_family(&TupleShape::single(dualeq::SkewShape::straight(p.clone())), usize::MAX).unwrap();
        let g = build_graph_from_family(&fam, p.size().max(1)).unwrap();
        let s = standard_graph(&p);
        assert_eq!(g.edge_map(), s.edge_map(), "{p}");
        assert_eq!((0..g.len()).map(|v| g.sigma(v)).collect::<Vec<_>>(), (0..s.len()).map(|v| s.sigma(v)).collect::<Vec<_>>());
    }
}

#[test]
fn restriction_composes_and_removes_corners() {
    for p in Partition::all_up_to(7).into_iter().filter(|p| p.size() >= 3) {
        let n = p.size();
        let g = standard_graph(&p);
        let twice = g.restrict(n - 1, n).unwrap().restrict(n - 2, n - 1).unwrap();
        assert_eq!(twice, g.restrict(n - 2, n - 1).unwrap(), "{p}");

        let r = g.restrict(n - 1, n - 1).unwrap();
        assert!(check_axioms(&r).passed(), "{p}");
        let mut expected = SchurExpansion::<Integer>::zero(n - 1);
        for q in Partition::all(n - 1).into_iter().filter(|q| p.contains(q)) {
            expected.add_term(q, &dualeq::QPoly::one());
        }
        assert_eq!(extract_schur(&r.generating_function::<Integer>()), expected, "{p}");
        assert!(classify(&r, true).unwrap().iter().all(|c| c.is_isomorphism()));
    }
}

#[test]
fn combined_involutions_preserve_dinv() {
    for mu in straight_tuples(7, 3) {
        let k = mu.k();
        for t in enumerate_standard(&mu, usize::MAX).unwrap() {
            let d = diagonal_data(&t).dinv;
            for i in 2..mu.size() {
                let s = combined_d(i, &t, k).unwrap();
                assert_eq!(diagonal_data(&s).dinv, d, "{mu} {t} at {i}");
                assert_eq!(combined_d(i, &s, k).unwrap(), t);
            }
        }
    }
}

#[test]
fn combined_involutions_for_one_shape_are_elementary() {
    for p in Partition::all_up_to(6) {
        for t in syt(&p) {
            for i in 2..p.size() {
                assert_eq!(combined_d(i, &t, 1).unwrap(), d_on_filling(i, &t).unwrap());
            }
        }
    }
}

#[test]
fn two_tuples_are_strong_dual_equivalences() {
    for mu in straight_tuples(6, 2).into_iter().filter(|m| m.k() == 2) {
        let fam = d_family(&mu, usize::MAX).unwrap();
        assert!(check_strong_dual_equivalence(&fam).passed(), "{mu}");
    }
}

#[test]
fn attacking_families_satisfy_local_axioms() {
    for n in 3..=6 {
        for a in attacking_vectors(n) {
            let g = build_graph_from_family(&attacking_family(&a), n).unwrap();
            let r = check_axioms(&g);
            for ax in [1, 2, 3, 5] {
                assert!(r.axiom(ax).passed, "{a}: {}", r.axiom(ax));
            }
        }
    }
}

#[test]
fn twisted_classes_are_inversion_level_sets() {
    for n in 2..=7 {
        let flag = |w: &[u8]| w[0] > w[n - 1];
        let mut levels: BTreeMap<(usize, bool), usize> = BTreeMap::new();
        for w in permutations(n) {
            *levels.entry((inv(&w), flag(&w))).or_default() += 1;
        }
        let classes = twisted_classes(n);
        assert_eq!(classes.len(), levels.len(), "n = {n}");
        for c in &classes {
            let key = (inv(&c[0]), flag(&c[0]));
            assert!(c.iter().all(|w| (inv(w), flag(w)) == key));
            assert_eq!(levels[&key], c.len());
        }
    }
}

#[test]
fn permutation_families_close_up() {
    for n in 3..=6 {
        for twisted in [false, true] {
            let fam = permutation_family(n, twisted);
            let total: usize = fam.full_classes().iter().map(|c| c.members.len()).sum();
            assert_eq!(total, fam.len());
        }
        let plain = build_graph_from_family(&permutation_family(n, false), n).unwrap();
        assert!(check_axioms(&plain).passed());
    }
}
